#pragma once

#include "skein/families.hpp"
#include "skein/sigma.hpp"

#include <map>
#include <random>

namespace testing_support {

using skein::Apow;
using skein::LambdaPoly;
using skein::Laurent;

inline Laurent gen_laurent(std::mt19937_64& rng, int max_exp = 20, int max_coeff = 9, int max_terms = 6) {
    std::uniform_int_distribution<int> n(0, max_terms);
    std::uniform_int_distribution<int> e(-max_exp, max_exp);
    std::uniform_int_distribution<int> c(-max_coeff, max_coeff);
    std::vector<Laurent::Term> t;
    const int k = n(rng);
    for (int i = 0; i < k; ++i) t.emplace_back(e(rng), c(rng));
    return Laurent::from_terms(t);
}

inline LambdaPoly gen_lambda_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> d(0, max_deg);
    std::vector<Laurent> c(d(rng) + 1);
    for (auto& x : c) x = gen_laurent(rng, 6, 5, 3);
    return LambdaPoly(c);
}

// Naive product over a plain map, independent of the sorted-vector implementation.
inline std::map<int, long long> naive_mul(const std::map<int, long long>& a, const std::map<int, long long>& b) {
    std::map<int, long long> r;
    for (auto [ea, ca] : a)
        for (auto [eb, cb] : b) r[ea + eb] += ca * cb;
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

inline std::map<int, long long> as_map(const Laurent& p) {
    std::map<int, long long> r;
    for (const auto& [e, c] : p.terms()) r[e] = c.get_si();
    return r;
}

// Residue mod (1 - A^N) by repeatedly subtracting c A^{e-N}(1 - A^N) or adding c A^e (1 - A^N).
inline Laurent reduce_by_subtraction(Laurent p, int N) {
    const Laurent gen = Laurent(1) - Apow(N);
    while (true) {
        bool moved = false;
        for (const auto& [e, c] : p.terms()) {
            if (e >= N) {
                // c A^e = c A^{e-N} - c A^{e-N}(1 - A^N)
                p += Laurent::monomial(e - N, c) * gen;
                moved = true;
                break;
            }
            if (e < 0) {
                // c A^e = c A^{e+N} + c A^e (1 - A^N)
                p -= Laurent::monomial(e, c) * gen;
                moved = true;
                break;
            }
        }
        if (!moved) return p;
    }
}

inline mpz_class binom(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Q_m for m >= 1 by the explicit Chebyshev sum sum_k (-1)^k C(m-1-k, k) lambda^{m-1-2k}.
inline LambdaPoly chebyshev_Q(int m) {
    if (m == 0) return {};
    if (m < 0) return -chebyshev_Q(-m);
    LambdaPoly r;
    for (int k = 0; 2 * k <= m - 1; ++k)
        r.add_term(m - 1 - 2 * k, Laurent(mpz_class((k % 2 ? -1 : 1) * binom(m - 1 - k, k))));
    return r;
}

}  // namespace testing_support
