#include "skein/word.hpp"

#include <stdexcept>
#include <tuple>

namespace skein {

Word::Word(std::vector<int> lambdas, std::vector<int> xs)
    : lambdas_(std::move(lambdas)), xs_(std::move(xs)) {
    if (lambdas_.size() != xs_.size() + 1)
        throw std::invalid_argument("word needs one more lambda run than x-generators");
    for (int n : lambdas_)
        if (n < 0) throw std::domain_error("negative lambda exponent in word");
}

Word Word::lambda(int n) { return Word({n}, {}); }
Word Word::x(int m) { return Word({0, 0}, {m}); }

Word Word::before_x(size_t i) const {
    if (i >= xs_.size()) throw std::out_of_range("x position");
    return Word(std::vector<int>(lambdas_.begin(), lambdas_.begin() + i + 1),
                std::vector<int>(xs_.begin(), xs_.begin() + i));
}

Word Word::after_x(size_t i) const {
    if (i >= xs_.size()) throw std::out_of_range("x position");
    return Word(std::vector<int>(lambdas_.begin() + i + 1, lambdas_.end()),
                std::vector<int>(xs_.begin() + i + 1, xs_.end()));
}

Word operator*(const Word& a, const Word& b) {
    Word r = a;
    r.lambdas_.back() += b.lambdas_.front();
    r.lambdas_.insert(r.lambdas_.end(), b.lambdas_.begin() + 1, b.lambdas_.end());
    r.xs_.insert(r.xs_.end(), b.xs_.begin(), b.xs_.end());
    return r;
}

bool operator<(const Word& a, const Word& b) {
    return std::forward_as_tuple(a.xs_.size(), a.xs_, a.lambdas_) <
           std::forward_as_tuple(b.xs_.size(), b.xs_, b.lambdas_);
}

std::string Word::str() const {
    std::string s;
    auto put = [&s](const std::string& f) {
        if (!s.empty()) s += '*';
        s += f;
    };
    auto put_lambda = [&](int n) {
        if (n == 1)
            put("l");
        else if (n > 1)
            put("l^" + std::to_string(n));
    };
    put_lambda(lambdas_[0]);
    for (size_t i = 0; i < xs_.size(); ++i) {
        put("x(" + std::to_string(xs_[i]) + ")");
        put_lambda(lambdas_[i + 1]);
    }
    return s.empty() ? "1" : s;
}

SkeinVector::SkeinVector(const Word& w, Laurent c) { add(w, c); }
SkeinVector::SkeinVector(Laurent c) { add(Word(), c); }

SkeinVector SkeinVector::from_poly(const LambdaPoly& p) {
    return expand_polynomial_at(Word(), p, Word());
}

void SkeinVector::add(const Word& w, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SkeinVector SkeinVector::operator-() const {
    SkeinVector r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

SkeinVector& SkeinVector::operator+=(const SkeinVector& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

SkeinVector& SkeinVector::operator-=(const SkeinVector& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

SkeinVector operator*(const Laurent& c, const SkeinVector& v) {
    SkeinVector r;
    if (c.is_zero()) return r;
    for (const auto& [w, x] : v.terms_) r.terms_.emplace(w, x * c);
    return r;
}

SkeinVector operator*(const SkeinVector& a, const SkeinVector& b) {
    SkeinVector r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add(wa * wb, ca * cb);
    return r;
}

SkeinVector expand_polynomial_at(const Word& prefix, const LambdaPoly& p, const Word& suffix) {
    SkeinVector r;
    for (int n = 0; n <= p.degree(); ++n)
        if (!p.coeff(n).is_zero()) r.add(prefix * Word::lambda(n) * suffix, p.coeff(n));
    return r;
}

}  // namespace skein
