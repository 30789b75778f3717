#include "skein/lens_4k.hpp"

#include "skein/families.hpp"

#include <stdexcept>

namespace skein {

TwoFiberParams TwoFiberParams::from_betas(int beta1, int beta2) {
    const Nu1Context a = Nu1Context::from_beta1(beta1);
    const Nu1Context b = Nu1Context::from_beta1(beta2);
    TwoFiberParams p;
    p.beta1 = beta1;
    p.beta2 = beta2;
    p.nu1 = a.nu1;
    p.nu2 = b.nu1;
    p.nu0 = p.nu1 + p.nu2;
    p.k = p.nu0 + 1;
    return p;
}

bool SigmaPPVector::is_zero() const {
    for (const auto& c : coords0)
        if (!c.is_zero()) return false;
    for (const auto& c : coords1)
        if (!c.is_zero()) return false;
    return true;
}

std::pair<int, int> sigma_pp_shape(const TwoFiberParams& p) {
    if (p.nu0 == -1)
        throw std::domain_error("beta1 + beta2 = 0 is S^2 x S^1; use the torsion decomposition");
    if (p.nu0 >= 0) return {p.nu0 + 2, p.nu0 + 1};
    return {-p.nu0, -p.nu0 - 1};
}

StarStarReducer::StarStarReducer(TwoFiberParams p) : p_(p) {
    std::tie(len0_, len1_) = sigma_pp_shape(p_);
}

StarStarReducer::Coords StarStarReducer::zero() const {
    return {std::vector<Laurent>(len0_), std::vector<Laurent>(len1_)};
}

void StarStarReducer::axpy(Coords& acc, const Laurent& c, const Coords& v) const {
    if (c.is_zero()) return;
    for (int i = 0; i < len0_; ++i)
        if (!v.c0[i].is_zero()) acc.c0[i] += c * v.c0[i];
    for (int i = 0; i < len1_; ++i)
        if (!v.c1[i].is_zero()) acc.c1[i] += c * v.c1[i];
}

StarStarReducer::Coords StarStarReducer::image(const SigmaVector& s) {
    Coords acc = zero();
    for (int n = 0; n <= s.part0.degree(); ++n) axpy(acc, s.part0.coeff(n), lambda_image(n));
    for (int n = 0; n <= s.part1.degree(); ++n) axpy(acc, s.part1.coeff(n), x_image(n));
    return acc;
}

namespace {

class Guard {
public:
    Guard(std::set<std::pair<int, int>>& a, std::pair<int, int> k) : active_(a), key_(k) {
        if (!active_.insert(key_).second)
            throw std::logic_error("reduction bracket recursion does not terminate");
    }
    ~Guard() { active_.erase(key_); }

private:
    std::set<std::pair<int, int>>& active_;
    std::pair<int, int> key_;
};

void require_lower(const LambdaPoly& p, int n) {
    if (p.degree() >= n) throw std::logic_error("bracket rewrite failed to lower the degree");
}

// Sigma' coordinates of prefix * p(lambda) * suffix.
SigmaVector sigma_of(const Word& prefix, const LambdaPoly& p, const Word& suffix,
                     const Nu1Context& ctx) {
    return reduce_to_sigma(expand_polynomial_at(prefix, p, suffix), ctx);
}

}  // namespace

const StarStarReducer::Coords& StarStarReducer::lambda_image(int n) {
    if (auto it = lambda_memo_.find(n); it != lambda_memo_.end()) return it->second;
    Guard guard(active_, {0, n});
    const int nu0 = p_.nu0, nu1 = p_.nu1, nu2 = p_.nu2;
    const Nu1Context ctx = p_.fiber1();
    Coords out = zero();
    if (n < len0_) {
        out.c0[n] = 1;
    } else if (nu0 >= 0) {
        // lambda^n = (lambda^n + A^{n+3} R_{1-n}) - A^{n+3} <x_{nu1} F_{nu0+1-n} x_{-nu2}>
        LambdaPoly rest = LambdaPoly::lambda(n) + Apow(n + 3) * poly_R(1 - n);
        require_lower(rest, n);
        out = image({rest, {}});
        axpy(out, -Apow(n + 3),
             image(sigma_of(Word::x(nu1), poly_F(nu0 + 1 - n), Word::x(-nu2), ctx)));
    } else {
        // lambda^n = (lambda^n - A^{-n} R_n) - A^{-n-3} <x_{nu1} F_{n+nu0} x_{-nu2-1}>
        LambdaPoly rest = LambdaPoly::lambda(n) - Apow(-n) * poly_R(n);
        require_lower(rest, n);
        out = image({rest, {}});
        axpy(out, -Apow(-n - 3),
             image(sigma_of(Word::x(nu1), poly_F(n + nu0), Word::x(-nu2 - 1), ctx)));
    }
    return lambda_memo_.emplace(n, std::move(out)).first->second;
}

const StarStarReducer::Coords& StarStarReducer::x_image(int n) {
    if (auto it = x_memo_.find(n); it != x_memo_.end()) return it->second;
    Guard guard(active_, {1, n});
    const int nu0 = p_.nu0, nu2 = p_.nu2;
    const Nu1Context ctx = p_.fiber1();
    Coords out = zero();
    if (n < len1_) {
        out.c1[n] = 1;
    } else if (nu0 >= 0) {
        // x_{nu1} lambda^n = x_{nu1}(lambda^n - A^n F_n) + A^n <F_{nu0-n} x_{-nu2}>
        LambdaPoly rest = LambdaPoly::lambda(n) - Apow(n) * poly_F(n);
        require_lower(rest, n);
        out = image({{}, rest});
        axpy(out, Apow(n), image(sigma_of(Word(), poly_F(nu0 - n), Word::x(-nu2), ctx)));
    } else {
        // x_{nu1} lambda^n = x_{nu1}(lambda^n + A^{-n-3} F_{-n-1}) + A^{-n-6} <F_{n+nu0+1} x_{-nu2-1}>
        LambdaPoly rest = LambdaPoly::lambda(n) + Apow(-n - 3) * poly_F(-n - 1);
        require_lower(rest, n);
        out = image({{}, rest});
        axpy(out, Apow(-n - 6),
             image(sigma_of(Word(), poly_F(n + nu0 + 1), Word::x(-nu2 - 1), ctx)));
    }
    return x_memo_.emplace(n, std::move(out)).first->second;
}

SigmaPPVector StarStarReducer::reduce(const SigmaVector& s) {
    Coords c = image(s);
    return {p_, std::move(c.c0), std::move(c.c1)};
}

SigmaPPVector starstar_reduce(const SigmaVector& s, const TwoFiberParams& p) {
    thread_local std::map<std::pair<int, int>, StarStarReducer> reducers;
    auto it = reducers.find({p.nu1, p.nu2});
    if (it == reducers.end()) it = reducers.emplace(std::pair{p.nu1, p.nu2}, StarStarReducer(p)).first;
    SigmaPPVector out = it->second.reduce(s);
    out.params = p;
    return out;
}

SigmaPPVector kbsm_class_4k(const SkeinVector& v, int beta1, int beta2) {
    const TwoFiberParams p = TwoFiberParams::from_betas(beta1, beta2);
    sigma_pp_shape(p);
    return starstar_reduce(reduce_to_sigma(v, p.fiber1()), p);
}

SkeinVector sbeta2_relation(int nu1, int nu2, RelationForm form, int eps, int m, int n1, int n2) {
    Word pre = Word::lambda(n1);
    if (eps) pre = Word::x(nu1) * pre;
    const Word outer = Word::x(-nu2 - 1);
    if (form == RelationForm::T) {
        return expand_polynomial_at(pre, poly_Pmk(m, n2), Word()) -
               Apow(1) * expand_polynomial_at(pre, poly_Pmk(m - 1, n2), Word()) -
               Apow(-1) * SkeinVector(pre * Word::x(-m - nu2) * Word::lambda(n2) * outer);
    }
    return SkeinVector(pre * Word::x(m) * Word::lambda(n2)) -
           Apow(1) * SkeinVector(pre * Word::x(m - 1) * Word::lambda(n2)) -
           Apow(-1) * expand_polynomial_at(pre, poly_Pmk(-m - nu2, n2), outer);
}

bool verify_sbeta2(const TwoFiberParams& p, RelationForm form, int eps, int m, int n1, int n2) {
    return kbsm_class_4k(sbeta2_relation(p.nu1, p.nu2, form, eps, m, n1, n2), p.beta1, p.beta2)
        .is_zero();
}

bool verify_bridge(const TwoFiberParams& p, Bridge which, int m, int eps, int n) {
    auto cls = [&](const SkeinVector& v) { return kbsm_class_4k(v, p.beta1, p.beta2); };
    switch (which) {
        case Bridge::FxEqualsXF:
            return cls(expand_polynomial_at(Word(), poly_F(m), Word::x(-p.nu2))) ==
                   cls(expand_polynomial_at(Word::x(p.nu1), poly_F(p.nu0 - m), Word()));
        case Bridge::XFxEqualsR:
            return cls(expand_polynomial_at(Word::x(p.nu1), poly_F(m), Word::x(-p.nu2))) ==
                   cls(SkeinVector::from_poly(poly_R(m - p.nu0)));
        case Bridge::OuterShift: {
            Word pre = Word::lambda(n);
            if (eps) pre = Word::x(p.nu1) * pre;
            return cls(SkeinVector(pre * Word::x(-p.nu2 - 1))) ==
                   cls(SkeinVector(pre * Word::x(-p.nu2), -Apow(3)));
        }
    }
    return false;
}

bool verify_bridge_identities(const TwoFiberParams& p, int m, int eps, int n) {
    return verify_bridge(p, Bridge::FxEqualsXF, m, eps, n) &&
           verify_bridge(p, Bridge::XFxEqualsR, m, eps, n) &&
           verify_bridge(p, Bridge::OuterShift, m, eps, n);
}

bool verify_omega5_identity(const Nu1Context& ctx, int m, int n, int k, Omega5Direction dir) {
    if (k < 0) throw std::domain_error("shift count must be nonnegative");
    const SigmaVector lhs = reduce_to_sigma(SkeinVector(Word::x(m) * Word::x(n)), ctx);
    const int s = dir == Omega5Direction::Raise ? 1 : -1;
    SkeinVector rhs(Word::x(m + s * k) * Word::x(n - s * k), Apow(-2 * s * k));
    for (int i = 0; i < k; ++i) {
        const int base = n - m - 2 * s - 2 * s * i;
        const LambdaPoly term = poly_P(base) - Apow(-2 * s) * poly_P(n - m - 2 * s * i);
        rhs += Apow(-2 * s * i) * SkeinVector::from_poly(term);
    }
    return lhs == reduce_to_sigma(rhs, ctx);
}

ManifoldParams manifold_params(int beta1, std::optional<int> beta2) {
    if (!beta2) {
        Nu1Context::from_beta1(beta1);
        return {beta1, 2, "L(" + std::to_string(beta1) + ",2)"};
    }
    const TwoFiberParams p = TwoFiberParams::from_betas(beta1, *beta2);
    if (p.k == 0) return {0, 1, "S^2xS^1 = L(0,1)"};
    const long lp = 4L * p.k, lq = 2L * p.k + 1;
    return {lp, lq, "L(" + std::to_string(lp) + "," + std::to_string(lq) + ")"};
}

}  // namespace skein
