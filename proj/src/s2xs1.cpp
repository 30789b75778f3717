#include "skein/s2xs1.hpp"

#include "skein/families.hpp"

#include <stdexcept>

namespace skein {

PhiPsiVector to_phipsi(const SigmaVector& s) {
    return {to_phi_basis(s.part0), to_psi_basis(s.part1)};
}

CyclicDecomposition torsion_normal_form(const PhiPsiVector& v) {
    CyclicDecomposition out;
    for (const auto& [i, c] : v.phi) {
        if (i == 0) {
            out.free_part = c;
            continue;
        }
        CyclicQuotientElem r = mod_cyclic(c, phi_modulus(i));
        if (!r.residue.is_zero()) out.phi_torsion.emplace(i, std::move(r));
    }
    for (const auto& [j, c] : v.psi) {
        CyclicQuotientElem r = mod_cyclic(c, psi_modulus(j + 1));
        if (!r.residue.is_zero()) out.psi_torsion.emplace(j + 1, std::move(r));
    }
    return out;
}

TwoFiberParams s2xs1_params(int beta1) { return TwoFiberParams::from_betas(beta1, -beta1); }

CyclicDecomposition kbsm_class_s2xs1(const SkeinVector& v, int beta1) {
    const Nu1Context ctx = Nu1Context::from_beta1(beta1);
    return torsion_normal_form(to_phipsi(reduce_to_sigma(v, ctx)));
}

bool is_zero_class(const SkeinVector& v, int beta1) { return kbsm_class_s2xs1(v, beta1).is_zero(); }

LambdaPoly torsion_Phi(int m) {
    if (m == 0 || m == -1) return {};
    if (m <= -2) return -torsion_Phi(-m - 2);
    return q_value(2 * m + 2) * poly_phi(m);
}

LambdaPoly torsion_Psi_core(int m) {
    if (m == 0 || m == -1) return {};
    if (m <= -2) return torsion_Psi_core(-m - 1);
    return q_value(2 * m + 1) * poly_psi_core(m - 1);
}

bool verify_phi_relation(int m, int beta1) {
    const TwoFiberParams p = s2xs1_params(beta1);
    const Nu1Context ctx = p.fiber1();
    const SkeinVector word = expand_polynomial_at(Word::x(p.nu1), poly_F(m), Word::x(-p.nu2)) -
                             SkeinVector::from_poly(poly_R(m + 1));
    const SigmaVector lhs = reduce_to_sigma(word, ctx);
    const Laurent scale = -Apow(-m - 1);
    const LambdaPoly two_term =
        q_value(2 * m + 2) * (poly_Q(m + 1) - poly_Q(m)) +
        q_value(2 * m - 2) * (poly_Q(m) - poly_Q(m - 1));
    const LambdaPoly phi_form =
        torsion_Phi(m) + z_value() * torsion_Phi(m - 1) + torsion_Phi(m - 2);
    return lhs == SigmaVector{scale * two_term, {}} &&
           to_phipsi(lhs) == to_phipsi({scale * phi_form, {}});
}

bool verify_psi_relation(int m, int beta1) {
    const TwoFiberParams p = s2xs1_params(beta1);
    const Nu1Context ctx = p.fiber1();
    const Word outer = Word::x(-p.nu2), inner = Word::x(p.nu1);
    auto bracket = [&](int j, int l) {
        return expand_polynomial_at(Word(), poly_F(j), outer) -
               expand_polynomial_at(inner, poly_F(l), Word());
    };
    const SkeinVector word = Apow(m - 2) * bracket(m, -1 - m) - Apow(m - 3) * bracket(m - 1, -m);
    const SigmaVector lhs = reduce_to_sigma(word, ctx);
    const LambdaPoly two_term =
        q_value(2 * m + 1) * poly_Q(m) + q_value(2 * m - 3) * poly_Q(m - 1);
    const LambdaPoly psi_form =
        torsion_Psi_core(m) + z_value() * torsion_Psi_core(m - 1) + torsion_Psi_core(m - 2);
    return lhs == SigmaVector{{}, two_term} && to_phipsi(lhs) == to_phipsi({{}, psi_form});
}

Laurent u_value(UKind kind, int m) { return q_value(kind == UKind::QEven ? 2 * m : 2 * m - 1); }

LambdaPoly telescope_S(UKind kind, const std::function<LambdaPoly(int)>& B, int m) {
    LambdaPoly sum;
    if (m > 0) {
        for (int i = 0; i <= m - 1; ++i) sum += Laurent(i % 2 ? -1 : 1) * B(m - i);
    } else {
        for (int i = 0; i <= -m - 1; ++i) sum += Laurent(i % 2 ? -1 : 1) * B(m + i + 1);
    }
    return u_value(kind, m + 1) * sum;
}

bool verify_kernel_membership(RelationForm form, int eps, int m, int n1, int n2, int beta1) {
    const TwoFiberParams p = s2xs1_params(beta1);
    return is_zero_class(sbeta2_relation(p.nu1, p.nu2, form, eps, m, n1, n2), beta1);
}

std::vector<CyclicFactor> cyclic_census(int max_index) {
    std::vector<CyclicFactor> out{{"phi(0)", 0}};
    for (int i = 1; i <= max_index; ++i)
        out.push_back({"phi(" + std::to_string(i) + ")", phi_modulus(i)});
    for (int i = 1; i <= max_index; ++i)
        out.push_back({"psi(" + std::to_string(i - 1) + ")", psi_modulus(i)});
    return out;
}

}  // namespace skein
