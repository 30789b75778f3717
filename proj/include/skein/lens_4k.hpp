#pragma once

#include "skein/lens_p2.hpp"

#include <optional>

namespace skein {

struct TwoFiberParams {
    int beta1 = 1, beta2 = 1;
    int nu1 = 0, nu2 = 0, nu0 = 0;
    int k = 1;
    // Validates oddness only; nu0 = -1 is representable so S^2 x S^1 can be described.
    static TwoFiberParams from_betas(int beta1, int beta2);
    Nu1Context fiber1() const { return {beta1, nu1}; }
};

// Coordinates on Sigma'': lambda^n (coords0) and x_{nu1} lambda^n (coords1).
struct SigmaPPVector {
    TwoFiberParams params;
    std::vector<Laurent> coords0, coords1;
    int rank() const { return static_cast<int>(coords0.size() + coords1.size()); }
    bool is_zero() const;
    friend bool operator==(const SigmaPPVector& a, const SigmaPPVector& b) {
        return a.coords0 == b.coords0 && a.coords1 == b.coords1;
    }
};

// Sizes (N0 + 1, N1 + 1) of the two coordinate blocks.
std::pair<int, int> sigma_pp_shape(const TwoFiberParams& p);

class StarStarReducer {
public:
    explicit StarStarReducer(TwoFiberParams p);

    const TwoFiberParams& params() const { return p_; }
    SigmaPPVector reduce(const SigmaVector& s);

private:
    struct Coords {
        std::vector<Laurent> c0, c1;
    };
    const Coords& lambda_image(int n);
    const Coords& x_image(int n);
    Coords image(const SigmaVector& s);
    Coords zero() const;
    void axpy(Coords& acc, const Laurent& c, const Coords& v) const;

    TwoFiberParams p_;
    int len0_, len1_;
    std::map<int, Coords> lambda_memo_, x_memo_;
    std::set<std::pair<int, int>> active_;
};

SigmaPPVector starstar_reduce(const SigmaVector& s, const TwoFiberParams& p);
SigmaPPVector kbsm_class_4k(const SkeinVector& v, int beta1, int beta2);

enum class RelationForm { T, X };

// The three-term S_{beta2} combination built around x_{-nu2-1}.
SkeinVector sbeta2_relation(int nu1, int nu2, RelationForm form, int eps, int m, int n1, int n2);

bool verify_sbeta2(const TwoFiberParams& p, RelationForm form, int eps, int m, int n1, int n2);

enum class Bridge {
    FxEqualsXF,      // F_m x_{-nu2} ~ x_{nu1} F_{nu0-m}
    XFxEqualsR,      // x_{nu1} F_m x_{-nu2} ~ R_{m-nu0}
    OuterShift,      // w x_{-nu2-1} ~ -A^3 w x_{-nu2}
};

bool verify_bridge(const TwoFiberParams& p, Bridge which, int m, int eps, int n);
bool verify_bridge_identities(const TwoFiberParams& p, int m, int eps, int n);

enum class Omega5Direction { Raise, Lower };

// Holds in the fibered torus; compared as SigmaVectors.
bool verify_omega5_identity(const Nu1Context& ctx, int m, int n, int k, Omega5Direction dir);

struct ManifoldParams {
    long p = 0, q = 0;
    std::string name;
};

ManifoldParams manifold_params(int beta1, std::optional<int> beta2 = std::nullopt);

}  // namespace skein
