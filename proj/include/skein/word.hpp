#pragma once

#include "skein/lambda_poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace skein {

// lambda^{n0} x_{m1} lambda^{n1} ... x_{mk} lambda^{nk}; lambdas.size() == xs.size() + 1.
class Word {
public:
    Word() = default;
    Word(std::vector<int> lambdas, std::vector<int> xs);

    static Word lambda(int n);
    static Word x(int m);

    const std::vector<int>& lambdas() const { return lambdas_; }
    const std::vector<int>& xs() const { return xs_; }
    size_t x_count() const { return xs_.size(); }
    bool is_empty() const { return xs_.empty() && lambdas_[0] == 0; }

    // Everything strictly before / after the i-th x-generator.
    Word before_x(size_t i) const;
    Word after_x(size_t i) const;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) = default;
    friend bool operator<(const Word& a, const Word& b);

    // "l^2*x(0)*l*x(1)"; the empty word is "1".
    std::string str() const;

private:
    std::vector<int> lambdas_{0};
    std::vector<int> xs_;
};

// Finite Z[A^{+-1}]-linear combination of words.
class SkeinVector {
public:
    using Terms = std::map<Word, Laurent>;

    SkeinVector() = default;
    SkeinVector(const Word& w, Laurent c = 1);
    SkeinVector(Laurent c);

    static SkeinVector from_poly(const LambdaPoly& p);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Word& w, const Laurent& c);

    SkeinVector operator-() const;
    SkeinVector& operator+=(const SkeinVector& o);
    SkeinVector& operator-=(const SkeinVector& o);
    friend SkeinVector operator+(SkeinVector a, const SkeinVector& b) { return a += b; }
    friend SkeinVector operator-(SkeinVector a, const SkeinVector& b) { return a -= b; }
    friend SkeinVector operator*(const Laurent& c, const SkeinVector& v);
    // Ordered concatenation of words.
    friend SkeinVector operator*(const SkeinVector& a, const SkeinVector& b);
    friend bool operator==(const SkeinVector& a, const SkeinVector& b) = default;

private:
    Terms terms_;
};

SkeinVector expand_polynomial_at(const Word& prefix, const LambdaPoly& p, const Word& suffix);

}  // namespace skein
