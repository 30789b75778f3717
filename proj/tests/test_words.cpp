#include "support.hpp"

#include "skein/sweeps.hpp"

#include <doctest.h>

using namespace skein;
using namespace testing_support;

namespace {
LambdaPoly lam(int n, Laurent c = 1) { return LambdaPoly::lambda(n, c); }
SigmaVector reduce(const SkeinVector& v, int nu1, Strategy s = Strategy::AbsorbLeftward) {
    return reduce_to_sigma(v, Nu1Context::from_nu1(nu1), s);
}
}  // namespace

TEST_CASE("words merge lambda runs") {
    const Word w = Word::lambda(2) * Word::lambda(1) * Word::x(3) * Word::lambda(1) * Word::x(-1);
    CHECK(w.lambdas() == std::vector<int>{3, 1, 0});
    CHECK(w.xs() == std::vector<int>{3, -1});
    CHECK(w.str() == "l^3*x(3)*l*x(-1)");
    CHECK(Word().str() == "1");
    CHECK(w.before_x(1) == Word::lambda(3) * Word::x(3) * Word::lambda(1));
    CHECK(w.after_x(0) == Word::lambda(1) * Word::x(-1));
    CHECK_THROWS_AS(Word({-1}, {}), std::domain_error);
    CHECK_THROWS_AS(Word({0, 0}, {}), std::invalid_argument);
}

TEST_CASE("polynomial insertion") {
    const SkeinVector v = expand_polynomial_at(Word::x(0), lam(1) + LambdaPoly(Laurent(1)), Word());
    CHECK(v == SkeinVector(Word::x(0) * Word::lambda(1)) + SkeinVector(Word::x(0)));
    CHECK(expand_polynomial_at(Word(), LambdaPoly(), Word::x(1)).is_zero());
    CHECK(expand_polynomial_at(Word::x(2), poly_F(-1), Word::x(0)) ==
          SkeinVector(Word::x(2) * Word::x(0), -Apow(3)));
}

TEST_CASE("t substitution") {
    CHECK(t_substitute(0) == LambdaPoly(-Apow(2) - Apow(-2)));
    CHECK(t_substitute(1) == lam(1, -Apow(3)));
    CHECK(t_substitute(0, 1) == lam(1, -Apow(4) - Apow(-4)));
}

TEST_CASE("lambda push rules") {
    CHECK(push_lambda_left(0) == SkeinVector(Word::x(-1), Apow(-1)) + SkeinVector(Word::x(1), Apow(1)));
    CHECK(push_lambda_right(0) == SkeinVector(Word::x(-1), Apow(1)) + SkeinVector(Word::x(1), Apow(-1)));
    // lambda^k x_m expands binomially
    for (int k = 0; k <= 6; ++k) {
        const XCombination c = poly_times_x(lam(k), 2);
        for (int i = 0; i <= k; ++i)
            CHECK(c.at(2 - k + 2 * i) == Laurent::monomial(2 * i - k, binom(k, i)));
    }
}

TEST_CASE("collapse rules") {
    const Nu1Context c0 = Nu1Context::from_nu1(0), c1 = Nu1Context::from_nu1(1);
    CHECK(collapse_x(c0, 0) == LambdaPoly(Laurent(1)));
    CHECK(collapse_x(c0, 2) == LambdaPoly(-Apow(2)) - lam(1, Apow(4)));
    CHECK(collapse_x(c1, 0) == lam(1, Apow(-1)) + LambdaPoly(Apow(1)));
    CHECK(collapse_xx(c0, 0) == poly_R(0));
    CHECK(collapse_xx(c0, 1) == poly_R(1));
    CHECK(collapse_xx(c1, 1) == poly_R(0));
}

TEST_CASE("reduction examples") {
    for (int nu1 = -2; nu1 <= 2; ++nu1) CHECK(reduce(SkeinVector(Word::lambda(3)), nu1) == SigmaVector{lam(3), {}});
    CHECK(reduce(SkeinVector(Word::x(2)), 0) == SigmaVector{{}, LambdaPoly(-Apow(2)) - lam(1, Apow(4))});
    CHECK(reduce(SkeinVector(Word::x(0) * Word::x(0)), 0) ==
          SigmaVector{LambdaPoly(Laurent(1) + Apow(-4)) - lam(1, Apow(-4)), {}});
    // x_{nu1+1} w = -A^3 x_{nu1} w at the leading position
    for (int nu1 = -2; nu1 <= 2; ++nu1) {
        const Word tail = Word::lambda(1) * Word::x(3);
        CHECK(reduce(SkeinVector(Word::x(nu1 + 1) * tail), nu1) ==
              -Apow(3) * reduce(SkeinVector(Word::x(nu1) * tail), nu1));
    }
}

TEST_CASE("Nu1 context") {
    CHECK(Nu1Context::from_beta1(3).nu1 == 1);
    CHECK(Nu1Context::from_beta1(-3).nu1 == -2);
    CHECK(Nu1Context::from_beta1(-1).nu1 == -1);
    CHECK_THROWS_AS(Nu1Context::from_beta1(4), std::domain_error);
}

TEST_CASE("x-shift expressions") {
    CHECK(shift_x_expression(4, 4, ShiftSide::Right) == SkeinVector(Word::x(4)));
    CHECK(shift_x_expression(4, 5, ShiftSide::Right) == SkeinVector(Word::x(5)));
    CHECK(reduce(shift_x_expression(0, 2, ShiftSide::Right), 0) == reduce(SkeinVector(Word::x(2)), 0));
    // the re-expression is an identity in the annulus already
    for (int k = -3; k <= 3; ++k)
        for (int m = -4; m <= 4; ++m)
            for (auto side : {ShiftSide::Right, ShiftSide::Left}) {
                SkeinVector v;
                const SkeinVector e = shift_x_expression(k, m, side);
                for (const auto& [w, c] : e.terms()) {
                    // collapse every lambda into the single x with the push rules
                    const int nl = w.lambdas()[0], nr = w.lambdas()[1];
                    XCombination left = poly_times_x(LambdaPoly::lambda(nl), w.xs()[0]);
                    for (const auto& [i, a] : left)
                        for (const auto& [j, b] : x_times_poly(i, LambdaPoly::lambda(nr)))
                            v.add(Word::x(j), c * a * b);
                }
                CHECK(v == SkeinVector(Word::x(m)));
            }
}

TEST_CASE("confluence, substitution, idempotence and linearity on random vectors") {
    std::mt19937_64 rng(31);
    RandomWordSpec spec;
    for (int nu1 = -2; nu1 <= 2; ++nu1) {
        const Nu1Context ctx = Nu1Context::from_nu1(nu1);
        for (int i = 0; i < 60; ++i) {
            const SkeinVector v = random_skein_vector(rng, spec);
            const SigmaVector base = reduce_to_sigma(v, ctx);
            CHECK(base == reduce_to_sigma(v, ctx, Strategy::AbsorbRightward));
            CHECK(base == reduce_to_sigma(v, ctx, Strategy::Lazy));
            CHECK(reduce_to_sigma(sigma_as_words(base, ctx), ctx) == base);

            for (const auto& [w, c] : v.terms()) {
                for (size_t pos = 0; pos < w.x_count(); ++pos) {
                    const int k = static_cast<int>(rng() % 9) - 4;
                    const auto side = rng() % 2 ? ShiftSide::Right : ShiftSide::Left;
                    const SkeinVector v2 = v - SkeinVector(w, c) +
                                           c * (SkeinVector(w.before_x(pos)) *
                                                shift_x_expression(k, w.xs()[pos], side) *
                                                SkeinVector(w.after_x(pos)));
                    CHECK(reduce_to_sigma(v2, ctx) == base);
                }
            }

            const SkeinVector u = random_skein_vector(rng, spec);
            const Laurent a = gen_laurent(rng, 3, 4, 2), b = gen_laurent(rng, 3, 4, 2);
            CHECK(reduce_to_sigma(a * u + b * v, ctx) == a * reduce_to_sigma(u, ctx) + b * base);
        }
    }
}
