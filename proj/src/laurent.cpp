#include "skein/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace skein {

Laurent::Laurent(long c) {
    if (c != 0) terms_.emplace_back(0, mpz_class(c));
}

Laurent::Laurent(const mpz_class& c) {
    if (c != 0) terms_.emplace_back(0, c);
}

Laurent Laurent::monomial(int e, const mpz_class& c) {
    Laurent r;
    if (c != 0) r.terms_.emplace_back(e, c);
    return r;
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Laurent r;
    for (auto& t : terms) {
        if (!r.terms_.empty() && r.terms_.back().first == t.first)
            r.terms_.back().second += t.second;
        else
            r.terms_.push_back(std::move(t));
        if (r.terms_.back().second == 0) r.terms_.pop_back();
    }
    return r;
}

int Laurent::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
    return terms_.front().first;
}

int Laurent::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
    return terms_.back().first;
}

mpz_class Laurent::coeff(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

Laurent Laurent::shifted(int k) const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

namespace {

std::vector<Laurent::Term> merge(const std::vector<Laurent::Term>& a,
                                 const std::vector<Laurent::Term>& b, int sign) {
    std::vector<Laurent::Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, sign > 0 ? b[j].second : mpz_class(-b[j].second));
            ++j;
        } else {
            mpz_class c = sign > 0 ? mpz_class(a[i].second + b[j].second)
                                   : mpz_class(a[i].second - b[j].second);
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Laurent& Laurent::operator+=(const Laurent& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, 1);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, -1);
    return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    if (a.is_zero() || b.is_zero()) return r;
    if (b.is_monomial()) {
        const auto& [e, c] = b.terms_.front();
        r.terms_.reserve(a.terms_.size());
        for (const auto& t : a.terms_) r.terms_.emplace_back(t.first + e, t.second * c);
        return r;
    }
    if (a.is_monomial()) return b * a;
    const int lo = a.min_exponent() + b.min_exponent();
    const int hi = a.max_exponent() + b.max_exponent();
    std::vector<mpz_class> acc(static_cast<size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            mpz_addmul(acc[ea + eb - lo].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    for (size_t i = 0; i < acc.size(); ++i)
        if (acc[i] != 0) r.terms_.emplace_back(lo + static_cast<int>(i), std::move(acc[i]));
    return r;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c < 0;
        mpz_class mag = abs(c);
        if (neg)
            s += '-';
        else if (!s.empty())
            s += '+';
        if (e == 0) {
            s += mag.get_str();
            continue;
        }
        if (mag != 1) s += mag.get_str() + "*";
        s += 'A';
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

Laurent q_value(int k) {
    if (k == 0) return {};
    return Apow(-k) - Apow(k);
}

CyclicQuotientElem mod_cyclic(const Laurent& p, int N) {
    if (N <= 0) throw std::domain_error("cyclic modulus must be positive");
    std::vector<Laurent::Term> folded;
    folded.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) folded.emplace_back(((e % N) + N) % N, c);
    return {N, Laurent::from_terms(std::move(folded))};
}

bool divisible_by_cyclic(const Laurent& p, int N) { return mod_cyclic(p, N).residue.is_zero(); }

std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    Laurent rem = a;
    std::vector<Laurent::Term> quot;
    const int bspan = b.max_exponent() - b.min_exponent();
    const mpz_class& lead = b.terms().back().second;
    while (!rem.is_zero()) {
        if (rem.max_exponent() - rem.min_exponent() < bspan) return std::nullopt;
        const mpz_class& top = rem.terms().back().second;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        const int e = rem.max_exponent() - b.max_exponent();
        mpz_class c = top / lead;
        rem -= b * Laurent::monomial(e, c);
        quot.emplace_back(e, std::move(c));
    }
    return Laurent::from_terms(std::move(quot));
}

}  // namespace skein
