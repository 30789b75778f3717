#include "skein/sigma.hpp"

#include "skein/families.hpp"

#include <stdexcept>

namespace skein {

int floor_half(int b) { return b >= 0 ? b / 2 : -((-b + 1) / 2); }

Nu1Context Nu1Context::from_beta1(int beta1) {
    if (beta1 % 2 == 0) throw std::domain_error("beta must be odd (gcd(2, beta) = 1)");
    return {beta1, floor_half(beta1)};
}

Nu1Context Nu1Context::from_nu1(int nu1) { return {2 * nu1 + 1, nu1}; }

SigmaVector& SigmaVector::operator+=(const SigmaVector& o) {
    part0 += o.part0;
    part1 += o.part1;
    return *this;
}

SigmaVector& SigmaVector::operator-=(const SigmaVector& o) {
    part0 -= o.part0;
    part1 -= o.part1;
    return *this;
}

SigmaVector operator*(const Laurent& c, const SigmaVector& s) { return {c * s.part0, c * s.part1}; }

std::string SigmaVector::str() const { return "[" + part0.str() + "] + x*[" + part1.str() + "]"; }

LambdaPoly t_substitute(int m, int n) { return n == 0 ? poly_P(m) : poly_Pmk(m, n); }

SkeinVector push_lambda_left(int m) {
    return SkeinVector(Word::x(m - 1), Apow(-1)) + SkeinVector(Word::x(m + 1), Apow(1));
}

SkeinVector push_lambda_right(int m) {
    return SkeinVector(Word::x(m - 1), Apow(1)) + SkeinVector(Word::x(m + 1), Apow(-1));
}

namespace {

// Dense accumulator for a Laurent polynomial; grows on demand and adds in place.
class DenseLaurent {
public:
    void cover(int a, int b) {
        if (c_.empty()) {
            lo_ = a;
            c_.resize(b - a + 1);
            return;
        }
        if (a < lo_) {
            c_.insert(c_.begin(), lo_ - a, mpz_class());
            lo_ = a;
        }
        const int hi = lo_ + static_cast<int>(c_.size()) - 1;
        if (b > hi) c_.resize(c_.size() + (b - hi));
    }
    // += x * y
    void addmul(const Laurent& x, const Laurent& y) {
        if (x.is_zero() || y.is_zero()) return;
        cover(x.min_exponent() + y.min_exponent(), x.max_exponent() + y.max_exponent());
        for (const auto& [ex, cx] : x.terms())
            for (const auto& [ey, cy] : y.terms())
                mpz_addmul(c_[ex + ey - lo_].get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
    }
    // += k * A^shift * x
    void addmul(const Laurent& x, const mpz_class& k, int shift) {
        if (x.is_zero()) return;
        cover(x.min_exponent() + shift, x.max_exponent() + shift);
        for (const auto& [e, c] : x.terms())
            mpz_addmul(c_[e + shift - lo_].get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
    }
    Laurent take() {
        std::vector<Laurent::Term> t;
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) t.emplace_back(lo_ + static_cast<int>(i), std::move(c_[i]));
        c_.clear();
        return Laurent::from_terms(std::move(t));
    }

private:
    int lo_ = 0;
    std::vector<mpz_class> c_;
};

// p(lambda) x_m (left) or x_m p(lambda): lambda^k x_m = sum_i C(k,i) A^{2i-k} x_{m-k+2i},
// and the mirror image with A^{k-2i} on the right.
XCombination push_poly(const LambdaPoly& p, int m, bool left) {
    XCombination out;
    const int d = p.degree();
    if (d < 0) return out;
    std::vector<DenseLaurent> acc(2 * d + 1);
    mpz_class b;
    for (int k = 0; k <= d; ++k) {
        const Laurent& pk = p.coeff(k);
        if (pk.is_zero()) continue;
        b = 1;
        for (int i = 0; i <= k; ++i) {
            acc[d - k + 2 * i].addmul(pk, b, left ? 2 * i - k : k - 2 * i);
            b = b * (k - i) / (i + 1);
        }
    }
    for (int j = 0; j <= 2 * d; ++j) {
        Laurent c = acc[j].take();
        if (!c.is_zero()) out.emplace(m - d + j, std::move(c));
    }
    return out;
}

using DenseLambda = std::vector<DenseLaurent>;

// rows += scale * sum over combination entries of coeff * family(index)
template <class Family>
void combine(DenseLambda& rows, const XCombination& comb, const Laurent& scale, Family family) {
    for (const auto& [c, a] : comb) {
        const LambdaPoly& f = family(c);
        if (f.is_zero()) continue;
        if (rows.size() < static_cast<size_t>(f.degree() + 1)) rows.resize(f.degree() + 1);
        const Laurent coef = scale == Laurent(1) ? a : scale * a;
        for (int j = 0; j <= f.degree(); ++j) rows[j].addmul(coef, f.coeff(j));
    }
}

LambdaPoly take(DenseLambda& rows) {
    std::vector<Laurent> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.push_back(r.take());
    return LambdaPoly(std::move(out));
}

}  // namespace

XCombination poly_times_x(const LambdaPoly& p, int m) { return push_poly(p, m, true); }
XCombination x_times_poly(int m, const LambdaPoly& p) { return push_poly(p, m, false); }

const LambdaPoly& collapse_x(const Nu1Context& ctx, int m) { return poly_F(ctx.nu1 - m); }
const LambdaPoly& collapse_xx(const Nu1Context& ctx, int m) { return poly_R(m - ctx.nu1); }

namespace {

// p(lambda) X_1 lambda^{a1} X_2 lambda^{a2} ... collapsed from the left, where each X_i is a
// combination of x-generators. The collapse is linear in every X_i.
SigmaVector collapse_chain(LambdaPoly p, const std::vector<XCombination>& xs, const std::vector<int>& after,
                           const Nu1Context& ctx) {
    const size_t r = xs.size();
    size_t i = 0;
    while (true) {
        if (i == r) return {std::move(p), {}};
        DenseLambda acc;
        for (const auto& [m, s] : xs[i])
            combine(acc, poly_times_x(p, m), s, [&](int c) -> const LambdaPoly& { return collapse_x(ctx, c); });
        LambdaPoly g = take(acc);
        g = g.times_lambda(after[i]);
        if (i + 1 == r) return {{}, std::move(g)};
        for (const auto& [m, s] : xs[i + 1])
            combine(acc, poly_times_x(g, m), s, [&](int d) -> const LambdaPoly& { return collapse_xx(ctx, d); });
        LambdaPoly h = take(acc);
        p = h.times_lambda(after[i + 1]);
        i += 2;
    }
}

SigmaVector reduce_word(const Word& w, const Nu1Context& ctx, Strategy strategy) {
    const auto& lam = w.lambdas();
    const auto& xs = w.xs();
    const size_t r = xs.size();
    if (r == 0) return {LambdaPoly::lambda(lam[0]), {}};

    std::vector<XCombination> combs(r);
    switch (strategy) {
        case Strategy::Lazy: {
            for (size_t i = 0; i < r; ++i) combs[i] = {{xs[i], Laurent(1)}};
            std::vector<int> after(lam.begin() + 1, lam.end());
            return collapse_chain(LambdaPoly::lambda(lam[0]), combs, after, ctx);
        }
        case Strategy::AbsorbLeftward: {
            for (size_t i = r; i-- > 0;) combs[i] = x_times_poly(xs[i], LambdaPoly::lambda(lam[i + 1]));
            return collapse_chain(LambdaPoly::lambda(lam[0]), combs, std::vector<int>(r, 0), ctx);
        }
        case Strategy::AbsorbRightward: {
            for (size_t i = 0; i < r; ++i) combs[i] = poly_times_x(LambdaPoly::lambda(lam[i]), xs[i]);
            std::vector<int> after(r, 0);
            after.back() = lam[r];
            return collapse_chain(Laurent(1), combs, after, ctx);
        }
    }
    throw std::logic_error("unknown reduction strategy");
}

}  // namespace

SigmaVector reduce_to_sigma(const SkeinVector& v, const Nu1Context& ctx, Strategy strategy) {
    SigmaVector out;
    for (const auto& [w, c] : v.terms()) out += c * reduce_word(w, ctx, strategy);
    return out;
}

SkeinVector shift_x_expression(int k, int m, ShiftSide side) {
    const int d = m - k;
    if (side == ShiftSide::Right) {
        return expand_polynomial_at(Word::x(k), -Apow(d) * poly_Q(d - 1), Word()) +
               expand_polynomial_at(Word::x(k + 1), Apow(d - 1) * poly_Q(d), Word());
    }
    return expand_polynomial_at(Word(), -Apow(-d) * poly_Q(d - 1), Word::x(k)) +
           expand_polynomial_at(Word(), Apow(1 - d) * poly_Q(d), Word::x(k + 1));
}

}  // namespace skein
