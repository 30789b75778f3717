#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace skein {

// Element of Z[A, A^-1]. Terms are kept sorted by ascending exponent with no zero coefficients.
class Laurent {
public:
    using Term = std::pair<int, mpz_class>;

    Laurent() = default;
    Laurent(long c);
    Laurent(const mpz_class& c);

    static Laurent monomial(int e, const mpz_class& c = 1);
    static Laurent from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    int min_exponent() const;
    int max_exponent() const;
    mpz_class coeff(int e) const;

    Laurent shifted(int k) const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

private:
    std::vector<Term> terms_;
};

inline Laurent Apow(int e) { return Laurent::monomial(e); }

// q_k = A^-k - A^k
Laurent q_value(int k);

struct CyclicQuotientElem {
    int modulus = 1;
    Laurent residue;
    friend bool operator==(const CyclicQuotientElem&, const CyclicQuotientElem&) = default;
};

// Canonical representative in Z[A^{+-1}]/(1 - A^N), exponents in [0, N).
CyclicQuotientElem mod_cyclic(const Laurent& p, int N);
bool divisible_by_cyclic(const Laurent& p, int N);

// Quotient a / b when b divides a exactly in Z[A^{+-1}].
std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b);

}  // namespace skein
