#pragma once

#include "skein/lens_4k.hpp"

#include <functional>

namespace skein {

struct PhiPsiVector {
    std::map<int, Laurent> phi, psi;
    friend bool operator==(const PhiPsiVector&, const PhiPsiVector&) = default;
};

// R (phi_0) plus cyclic summands; only nonzero residues are stored.
struct CyclicDecomposition {
    Laurent free_part;
    std::map<int, CyclicQuotientElem> phi_torsion;  // i -> residue of phi_i mod (1 - A^{4i+4})
    std::map<int, CyclicQuotientElem> psi_torsion;  // i -> residue of psi_{i-1} mod (1 - A^{4i+2})
    bool is_zero() const { return free_part.is_zero() && phi_torsion.empty() && psi_torsion.empty(); }
    friend bool operator==(const CyclicDecomposition&, const CyclicDecomposition&) = default;
};

inline int phi_modulus(int i) { return 4 * i + 4; }
inline int psi_modulus(int i) { return 4 * i + 2; }

PhiPsiVector to_phipsi(const SigmaVector& s);
CyclicDecomposition torsion_normal_form(const PhiPsiVector& v);
CyclicDecomposition kbsm_class_s2xs1(const SkeinVector& v, int beta1);
bool is_zero_class(const SkeinVector& v, int beta1);

// S^2 x S^1 presentation: beta2 = -beta1.
TwoFiberParams s2xs1_params(int beta1);

// Phi_m = q_{2m+2} phi_m, extended by Phi_0 = Phi_{-1} = 0 and Phi_m = -Phi_{-m-2}.
LambdaPoly torsion_Phi(int m);
// lambda-part of Psi_m = q_{2m+1} x_{nu1} psi_core_{m-1}, extended by Psi_m = Psi_{-m-1}.
LambdaPoly torsion_Psi_core(int m);

bool verify_phi_relation(int m, int beta1);
bool verify_psi_relation(int m, int beta1);

enum class UKind { QEven, QOdd };  // u_m = q_{2m} or q_{2m-1}

Laurent u_value(UKind kind, int m);
LambdaPoly telescope_S(UKind kind, const std::function<LambdaPoly(int)>& B, int m);

bool verify_kernel_membership(RelationForm form, int eps, int m, int n1, int n2, int beta1);

struct CyclicFactor {
    std::string generator;
    int modulus = 0;  // 0 marks the free summand
};

// phi_0 free, then phi_1..phi_N, then psi_0..psi_{N-1}.
std::vector<CyclicFactor> cyclic_census(int max_index);

}  // namespace skein
