#include "skein/lambda_poly.hpp"

#include <stdexcept>

namespace skein {

namespace {
const Laurent kZero;
}

LambdaPoly::LambdaPoly(Laurent c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

LambdaPoly::LambdaPoly(std::vector<Laurent> coeffs) : c_(std::move(coeffs)) { trim(); }

LambdaPoly LambdaPoly::lambda(int n, Laurent c) {
    if (n < 0) throw std::domain_error("negative lambda exponent");
    LambdaPoly p;
    p.add_term(n, c);
    return p;
}

const Laurent& LambdaPoly::coeff(int n) const {
    if (n < 0 || n >= static_cast<int>(c_.size())) return kZero;
    return c_[n];
}

void LambdaPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void LambdaPoly::add_term(int n, const Laurent& c) {
    if (n < 0) throw std::domain_error("negative lambda exponent");
    if (c.is_zero()) return;
    if (n >= static_cast<int>(c_.size())) c_.resize(n + 1);
    c_[n] += c;
    trim();
}

LambdaPoly LambdaPoly::times_lambda(int k) const {
    if (k < 0) throw std::domain_error("negative lambda exponent");
    if (c_.empty() || k == 0) return *this;
    LambdaPoly r;
    r.c_.resize(k);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

LambdaPoly LambdaPoly::operator-() const {
    LambdaPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Laurent> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) out[i + j] += a.c_[i] * b.c_[j];
    }
    return LambdaPoly(std::move(out));
}

LambdaPoly operator*(const Laurent& c, const LambdaPoly& p) {
    if (c.is_zero()) return {};
    LambdaPoly r = p;
    for (auto& x : r.c_) x = x * c;
    r.trim();
    return r;
}

std::string LambdaPoly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int n = degree(); n >= 0; --n) {
        if (c_[n].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[n].str() + ")";
        if (n > 0) s += "*l^" + std::to_string(n);
    }
    return s;
}

}  // namespace skein
