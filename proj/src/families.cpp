#include "skein/families.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

namespace skein {

namespace {

// Memo table with stable references; std::map nodes never move.
template <class Key>
class Cache {
public:
    const LambdaPoly& get(const Key& key, const std::function<LambdaPoly()>& make) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        LambdaPoly value = make();
        std::lock_guard<std::mutex> lock(mu_);
        return table_.emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex mu_;
    std::map<Key, LambdaPoly> table_;
};

const LambdaPoly kLambda = LambdaPoly::lambda(1);

}  // namespace

Laurent z_value() { return Apow(-2) + Apow(2); }

const LambdaPoly& poly_Q(int m) {
    static Cache<int> cache;
    return cache.get(m, [m]() -> LambdaPoly {
        if (m == 0) return {};
        if (m == 1) return Laurent(1);
        if (m < 0) return -poly_Q(-m);
        return kLambda * poly_Q(m - 1) - poly_Q(m - 2);
    });
}

const LambdaPoly& poly_P(int m) {
    static Cache<int> cache;
    return cache.get(m, [m]() -> LambdaPoly {
        if (m == 0) return Laurent(-Apow(2) - Apow(-2));
        if (m == 1) return LambdaPoly::lambda(1, -Apow(3));
        if (m > 1) return Apow(1) * (kLambda * poly_P(m - 1)) - Apow(2) * poly_P(m - 2);
        return Apow(-1) * (kLambda * poly_P(m + 1)) - Apow(-2) * poly_P(m + 2);
    });
}

const LambdaPoly& poly_F(int m) {
    static Cache<int> cache;
    return cache.get(m, [m] { return Apow(-m) * poly_Q(m + 1) + Apow(2 - m) * poly_Q(m); });
}

const LambdaPoly& poly_R(int m) {
    static Cache<int> cache;
    return cache.get(m, [m] { return Apow(-1) * poly_P(m - 1) - Apow(-2) * poly_P(m); });
}

const LambdaPoly& poly_Pmk(int m, int k) {
    if (k < 0) throw std::domain_error("P(m,k) needs k >= 0");
    if (k == 0) return poly_P(m);
    static Cache<std::pair<int, int>> cache;
    return cache.get({m, k}, [m, k] {
        return Apow(1) * poly_Pmk(m + 1, k - 1) + Apow(-1) * poly_Pmk(m - 1, k - 1);
    });
}

const LambdaPoly& poly_phi(int m) {
    if (m < 0) throw std::domain_error("phi index must be nonnegative");
    static Cache<int> cache;
    return cache.get(m, [m] {
        if (m == 0) return poly_Q(1);
        LambdaPoly r = poly_Q(m + 1);
        for (int j = 2; j <= m; ++j) r += Laurent((m + 1 - j) % 2 ? -2 : 2) * poly_Q(j);
        r += Laurent(m % 2 ? -1 : 1) * poly_Q(1);
        return r;
    });
}

const LambdaPoly& poly_psi_core(int m) {
    if (m < 0) throw std::domain_error("psi index must be nonnegative");
    static Cache<int> cache;
    return cache.get(m, [m] {
        LambdaPoly r;
        for (int j = 0; j <= m; ++j) r += Laurent(j % 2 ? -1 : 1) * poly_Q(m + 1 - j);
        return r;
    });
}

namespace {

std::map<int, Laurent> expand_monic(LambdaPoly p, const LambdaPoly& (*family)(int)) {
    std::map<int, Laurent> out;
    while (!p.is_zero()) {
        const int d = p.degree();
        Laurent c = p.leading();
        p -= c * family(d);
        out.emplace(d, std::move(c));
    }
    return out;
}

LambdaPoly collect(const std::map<int, Laurent>& c, const LambdaPoly& (*family)(int)) {
    LambdaPoly r;
    for (const auto& [m, coef] : c) r += coef * family(m);
    return r;
}

}  // namespace

std::map<int, Laurent> to_P_basis(const LambdaPoly& p) {
    std::map<int, Laurent> out;
    LambdaPoly rest = p;
    while (rest.degree() > 0) {
        const int d = rest.degree();
        // P_d has leading coefficient -A^{d+2}
        Laurent c = -(rest.leading().shifted(-d - 2));
        rest -= c * poly_P(d);
        out.emplace(d, std::move(c));
    }
    if (!rest.is_zero()) {
        auto c = divide_exact(rest.coeff(0), poly_P(0).coeff(0));
        if (!c) throw std::domain_error("constant term " + rest.coeff(0).str() +
                                        " is not a multiple of -A^2-A^-2");
        out.emplace(0, std::move(*c));
    }
    return out;
}

std::map<int, Laurent> to_phi_basis(const LambdaPoly& p) { return expand_monic(p, poly_phi); }
std::map<int, Laurent> to_psi_basis(const LambdaPoly& p) { return expand_monic(p, poly_psi_core); }

LambdaPoly from_P_basis(const std::map<int, Laurent>& c) { return collect(c, poly_P); }
LambdaPoly from_phi_basis(const std::map<int, Laurent>& c) { return collect(c, poly_phi); }
LambdaPoly from_psi_basis(const std::map<int, Laurent>& c) { return collect(c, poly_psi_core); }

}  // namespace skein
