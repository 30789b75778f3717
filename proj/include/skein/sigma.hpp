#pragma once

#include "skein/word.hpp"

#include <map>

namespace skein {

int floor_half(int b);

struct Nu1Context {
    int beta1 = 1;
    int nu1 = 0;
    // Throws domain_error for even beta1.
    static Nu1Context from_beta1(int beta1);
    // The context whose nu1 is the given value (beta1 = 2 nu1 + 1).
    static Nu1Context from_nu1(int nu1);
};

// Coordinates on {lambda^n} (part0) and {x_{nu1} lambda^n} (part1).
struct SigmaVector {
    LambdaPoly part0;
    LambdaPoly part1;

    bool is_zero() const { return part0.is_zero() && part1.is_zero(); }
    SigmaVector& operator+=(const SigmaVector& o);
    SigmaVector& operator-=(const SigmaVector& o);
    friend SigmaVector operator+(SigmaVector a, const SigmaVector& b) { return a += b; }
    friend SigmaVector operator-(SigmaVector a, const SigmaVector& b) { return a -= b; }
    friend SigmaVector operator*(const Laurent& c, const SigmaVector& s);
    friend bool operator==(const SigmaVector&, const SigmaVector&) = default;
    std::string str() const;
};

// Combination of single x-generators, index -> coefficient.
using XCombination = std::map<int, Laurent>;

LambdaPoly t_substitute(int m, int n = 0);

// lambda x_m = A^-1 x_{m-1} + A x_{m+1}
SkeinVector push_lambda_left(int m);
// x_m lambda = A x_{m-1} + A^-1 x_{m+1}
SkeinVector push_lambda_right(int m);

// p(lambda) x_m and x_m p(lambda) as combinations of x-generators.
XCombination poly_times_x(const LambdaPoly& p, int m);
XCombination x_times_poly(int m, const LambdaPoly& p);

// Leading x_m becomes x_{nu1} F_{nu1-m}; returns F_{nu1-m}.
const LambdaPoly& collapse_x(const Nu1Context& ctx, int m);
// Leading x_{nu1} x_m becomes R_{m-nu1}.
const LambdaPoly& collapse_xx(const Nu1Context& ctx, int m);

enum class Strategy {
    // Absorb lambda runs into the x on their left, right to left; then collapse from the left.
    AbsorbLeftward,
    // Absorb lambda runs into the x on their right, left to right; then collapse from the left.
    AbsorbRightward,
    // No pre-absorption: collapse the leading x and carry the lambda-polynomial forward.
    Lazy,
};

SigmaVector reduce_to_sigma(const SkeinVector& v, const Nu1Context& ctx,
                            Strategy strategy = Strategy::AbsorbLeftward);

enum class ShiftSide { Right, Left };

// x_m written through x_k and x_{k+1} with Q-factors on the given side.
SkeinVector shift_x_expression(int k, int m, ShiftSide side);

}  // namespace skein
