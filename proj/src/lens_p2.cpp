#include "skein/lens_p2.hpp"

#include "skein/families.hpp"

#include <stdexcept>

namespace skein {

bool LambdaBasisVector::is_zero() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

int kappa_of(const Nu1Context& ctx) { return std::max(ctx.nu1 + 1, -ctx.nu1); }

StarReducer::StarReducer(Nu1Context ctx) : ctx_(ctx), kappa_(kappa_of(ctx)) {}

void StarReducer::axpy(Coords& acc, const Laurent& c, const Coords& v) const {
    if (c.is_zero()) return;
    for (int i = 0; i < kappa_; ++i)
        if (!v[i].is_zero()) acc[i] += c * v[i];
}

StarReducer::Coords StarReducer::lambda_poly_image(const LambdaPoly& p) {
    Coords acc(kappa_);
    for (int n = 0; n <= p.degree(); ++n) axpy(acc, p.coeff(n), lambda_image(n));
    return acc;
}

StarReducer::Coords StarReducer::x_poly_image(const LambdaPoly& p) {
    Coords acc(kappa_);
    for (int n = 0; n <= p.degree(); ++n) axpy(acc, p.coeff(n), x_image(n));
    return acc;
}

namespace {

struct Guard {
    std::set<std::pair<int, int>>& active;
    std::pair<int, int> key;
    Guard(std::set<std::pair<int, int>>& a, std::pair<int, int> k) : active(a), key(k) {
        if (!active.insert(key).second)
            throw std::logic_error("reduction bracket recursion does not terminate");
    }
    ~Guard() { active.erase(key); }
};

void require_lower(const LambdaPoly& p, int n) {
    if (p.degree() >= n) throw std::logic_error("bracket rewrite failed to lower the degree");
}

}  // namespace

const StarReducer::Coords& StarReducer::lambda_image(int n) {
    if (auto it = lambda_memo_.find(n); it != lambda_memo_.end()) return it->second;
    Guard guard(active_, {0, n});
    const int nu = ctx_.nu1;
    Coords out(kappa_);
    if (n < kappa_) {
        out[n] = 1;
    } else if (nu >= 0) {
        // lambda^n = (lambda^n + A^{n+2} P_{-n}) - A^{n+2} x_{nu1} F_{nu1-n}
        LambdaPoly rest = LambdaPoly::lambda(n) + Apow(n + 2) * poly_P(-n);
        require_lower(rest, n);
        out = lambda_poly_image(rest);
        axpy(out, -Apow(n + 2), x_poly_image(poly_F(nu - n)));
    } else {
        // lambda^n = (lambda^n + A^{-n-2} P_n) - A^{-n-2} x_{nu1} F_{nu1+n}
        LambdaPoly rest = LambdaPoly::lambda(n) + Apow(-n - 2) * poly_P(n);
        require_lower(rest, n);
        out = lambda_poly_image(rest);
        axpy(out, -Apow(-n - 2), x_poly_image(poly_F(nu + n)));
    }
    return lambda_memo_.emplace(n, std::move(out)).first->second;
}

const StarReducer::Coords& StarReducer::x_image(int n) {
    if (auto it = x_memo_.find(n); it != x_memo_.end()) return it->second;
    Guard guard(active_, {1, n});
    const int nu = ctx_.nu1;
    Coords out;
    if (nu >= 0) {
        // x_{nu1} lambda^n = x_{nu1}(lambda^n - A^n F_n) + A^n P_{n-nu1}
        LambdaPoly rest = LambdaPoly::lambda(n) - Apow(n) * poly_F(n);
        require_lower(rest, n);
        out = x_poly_image(rest);
        axpy(out, Apow(n), lambda_poly_image(poly_P(n - nu)));
    } else {
        // x_{nu1} lambda^n = x_{nu1}(lambda^n + A^{-n-3} F_{-n-1}) - A^{-n-3} P_{-n-1-nu1}
        LambdaPoly rest = LambdaPoly::lambda(n) + Apow(-n - 3) * poly_F(-n - 1);
        require_lower(rest, n);
        out = x_poly_image(rest);
        axpy(out, -Apow(-n - 3), lambda_poly_image(poly_P(-n - 1 - nu)));
    }
    return x_memo_.emplace(n, std::move(out)).first->second;
}

LambdaBasisVector StarReducer::reduce(const SigmaVector& s) {
    Coords acc = lambda_poly_image(s.part0);
    const Coords xs = x_poly_image(s.part1);
    for (int i = 0; i < kappa_; ++i) acc[i] += xs[i];
    return {ctx_, kappa_, std::move(acc)};
}

LambdaBasisVector star_reduce(const SigmaVector& s, const Nu1Context& ctx) {
    thread_local std::map<int, StarReducer> reducers;
    auto it = reducers.try_emplace(ctx.nu1, ctx).first;
    return it->second.reduce(s);
}

LambdaBasisVector kbsm_class_p2(const SkeinVector& v, int beta1) {
    const Nu1Context ctx = Nu1Context::from_beta1(beta1);
    return star_reduce(reduce_to_sigma(v, ctx), ctx);
}

bool verify_omega_infinity(int beta1, int eps, int n1, int m, int n2) {
    const Nu1Context ctx = Nu1Context::from_beta1(beta1);
    Word prefix = Word::lambda(n1);
    if (eps) prefix = Word::x(ctx.nu1) * prefix;
    const SkeinVector lhs(prefix * Word::x(m) * Word::lambda(n2));
    const SkeinVector rhs = expand_polynomial_at(prefix, poly_Pmk(-m, n2), Word());
    return kbsm_class_p2(lhs, beta1) == kbsm_class_p2(rhs, beta1);
}

LensBasis basis_p2(int beta1) {
    const Nu1Context ctx = Nu1Context::from_beta1(beta1);
    LensBasis b;
    b.rank = kappa_of(ctx);
    for (int n = 0; n < b.rank; ++n) b.labels.push_back("l^" + std::to_string(n));
    return b;
}

}  // namespace skein
