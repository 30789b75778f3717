#pragma once

#include "skein/sigma.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace skein {

// Coordinates on lambda^0 ... lambda^{kappa-1}.
struct LambdaBasisVector {
    Nu1Context ctx;
    int kappa = 1;
    std::vector<Laurent> coords;
    bool is_zero() const;
    friend bool operator==(const LambdaBasisVector& a, const LambdaBasisVector& b) {
        return a.ctx.nu1 == b.ctx.nu1 && a.coords == b.coords;
    }
};

int kappa_of(const Nu1Context& ctx);

// Single-fiber reduction onto Lambda_{nu1}. Memoizes the images of lambda^n and x_{nu1} lambda^n.
class StarReducer {
public:
    explicit StarReducer(Nu1Context ctx);

    const Nu1Context& context() const { return ctx_; }
    int kappa() const { return kappa_; }
    LambdaBasisVector reduce(const SigmaVector& s);

private:
    using Coords = std::vector<Laurent>;
    const Coords& lambda_image(int n);
    const Coords& x_image(int n);
    Coords lambda_poly_image(const LambdaPoly& p);
    Coords x_poly_image(const LambdaPoly& p);
    void axpy(Coords& acc, const Laurent& c, const Coords& v) const;

    Nu1Context ctx_;
    int kappa_;
    std::map<int, Coords> lambda_memo_, x_memo_;
    std::set<std::pair<int, int>> active_;
};

// Uses a per-thread reducer for the context.
LambdaBasisVector star_reduce(const SigmaVector& s, const Nu1Context& ctx);
LambdaBasisVector kbsm_class_p2(const SkeinVector& v, int beta1);

bool verify_omega_infinity(int beta1, int eps, int n1, int m, int n2);

struct LensBasis {
    int rank = 0;
    std::vector<std::string> labels;
};

LensBasis basis_p2(int beta1);

}  // namespace skein
