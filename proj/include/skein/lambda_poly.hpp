#pragma once

#include "skein/laurent.hpp"

#include <limits>
#include <string>
#include <vector>

namespace skein {

// Polynomial in lambda with coefficients in Z[A^{+-1}].
class LambdaPoly {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    LambdaPoly() = default;
    LambdaPoly(Laurent c);
    explicit LambdaPoly(std::vector<Laurent> coeffs);

    static LambdaPoly lambda(int n, Laurent c = 1);

    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Laurent& coeff(int n) const;
    const Laurent& leading() const { return coeff(degree()); }
    const std::vector<Laurent>& coeffs() const { return c_; }

    void add_term(int n, const Laurent& c);
    LambdaPoly times_lambda(int k) const;

    LambdaPoly operator-() const;
    LambdaPoly& operator+=(const LambdaPoly& o);
    LambdaPoly& operator-=(const LambdaPoly& o);
    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
    friend LambdaPoly operator*(const Laurent& c, const LambdaPoly& p);
    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LambdaPoly& a, const LambdaPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void trim();
    std::vector<Laurent> c_;
};

}  // namespace skein
