#include "support.hpp"

#include <doctest.h>

using namespace skein;
using namespace testing_support;

TEST_CASE("addition normalizes") {
    CHECK((Apow(2) + Laurent(1)) + (-Apow(2)) == Laurent(1));
    CHECK(Laurent() + Apow(5) == Apow(5));
    CHECK(Apow(-2) + Apow(-2) == Laurent::monomial(-2, 2));
    CHECK((Apow(3) - Apow(3)).is_zero());
}

TEST_CASE("multiplication") {
    CHECK((Apow(1) + Apow(-1)) * (Apow(1) - Apow(-1)) == Apow(2) - Apow(-2));
    CHECK(q_value(2) * Apow(2) == Laurent(1) - Apow(4));
    CHECK((Apow(7) * Laurent()).is_zero());
}

TEST_CASE("canonical strings") {
    CHECK((-Apow(4) + Laurent(1) + Apow(-4)).str() == "-A^4+1+A^-4");
    CHECK(Laurent().str() == "0");
    CHECK((Apow(1) - Laurent::monomial(-2, 2)).str() == "A-2*A^-2");
    CHECK((-Apow(2) - Apow(-2)).str() == "-A^2-A^-2");
    CHECK(Laurent(-7).str() == "-7");
}

TEST_CASE("q values") {
    CHECK(q_value(2) == Apow(-2) - Apow(2));
    CHECK(q_value(0).is_zero());
    CHECK(q_value(-2) == -q_value(2));
    for (int k = -50; k <= 50; ++k) CHECK(q_value(-k) == -q_value(k));
}

TEST_CASE("cyclic reduction") {
    CHECK(mod_cyclic(Apow(9), 8).residue == Apow(1));
    CHECK(mod_cyclic(Laurent(1) - Apow(8), 8).residue.is_zero());
    CHECK(mod_cyclic(q_value(4), 8).residue.is_zero());
    CHECK(divisible_by_cyclic((Laurent(1) - Apow(6)) * (Apow(3) + Laurent(2)), 6));
    CHECK_FALSE(divisible_by_cyclic(Laurent(1), 6));
    CHECK(divisible_by_cyclic(q_value(3), 6));
    CHECK_THROWS_AS(mod_cyclic(Laurent(1), 0), std::domain_error);
    CHECK_THROWS_AS(divisible_by_cyclic(Laurent(1), -3), std::domain_error);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Laurent a = gen_laurent(rng), b = gen_laurent(rng), c = gen_laurent(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(as_map(a * b) == naive_mul(as_map(a), as_map(b)));
    }
}

TEST_CASE("normalization is idempotent") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        const Laurent a = gen_laurent(rng);
        CHECK(Laurent::from_terms(a.terms()) == a);
        for (const auto& [e, c] : a.terms()) CHECK(c != 0);
    }
}

TEST_CASE("cyclic reduction matches repeated subtraction and is idempotent") {
    std::mt19937_64 rng(13);
    for (int N = 1; N <= 40; ++N) {
        for (int i = 0; i < 10; ++i) {
            const Laurent p = gen_laurent(rng);
            const CyclicQuotientElem r = mod_cyclic(p, N);
            CHECK(r.modulus == N);
            for (const auto& [e, c] : r.residue.terms()) CHECK((e >= 0 && e < N));
            CHECK(mod_cyclic(r.residue, N) == r);
            CHECK(r.residue == reduce_by_subtraction(p, N));
        }
    }
}

TEST_CASE("multiples of 1 - A^N are divisible") {
    std::mt19937_64 rng(14);
    for (int N = 1; N <= 20; ++N)
        for (int i = 0; i < 10; ++i)
            CHECK(divisible_by_cyclic(gen_laurent(rng) * (Laurent(1) - Apow(N)), N));
}

TEST_CASE("exact division") {
    const Laurent d = -Apow(2) - Apow(-2);
    CHECK(divide_exact(Laurent(1) + Apow(-4), d) == -Apow(-2));
    CHECK_FALSE(divide_exact(Laurent(1), d).has_value());
    std::mt19937_64 rng(15);
    for (int i = 0; i < 100; ++i) {
        const Laurent a = gen_laurent(rng);
        CHECK(divide_exact(a * d, d) == a);
    }
}

TEST_CASE("large coefficients stay exact") {
    Laurent p = Laurent(1) + Apow(1);
    Laurent acc(1);
    for (int i = 0; i < 80; ++i) acc *= p;
    CHECK(acc.coeff(40) == binom(80, 40));
}
