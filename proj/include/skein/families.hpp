#pragma once

#include "skein/lambda_poly.hpp"

#include <map>

namespace skein {

// Families in the annulus skein module R[lambda]. Results are cached process-wide.
const LambdaPoly& poly_Q(int m);
const LambdaPoly& poly_P(int m);
const LambdaPoly& poly_F(int m);
const LambdaPoly& poly_R(int m);
const LambdaPoly& poly_Pmk(int m, int k);
const LambdaPoly& poly_phi(int m);
const LambdaPoly& poly_psi_core(int m);

// z = A^-2 + A^2
Laurent z_value();

// p = sum c_m P_m over 0 <= m <= deg p. P_0 = -A^2-A^-2 is not a unit, so a
// constant remainder outside (A^2+A^-2) makes the expansion impossible: domain_error.
std::map<int, Laurent> to_P_basis(const LambdaPoly& p);
std::map<int, Laurent> to_phi_basis(const LambdaPoly& p);
std::map<int, Laurent> to_psi_basis(const LambdaPoly& p);

LambdaPoly from_P_basis(const std::map<int, Laurent>& c);
LambdaPoly from_phi_basis(const std::map<int, Laurent>& c);
LambdaPoly from_psi_basis(const std::map<int, Laurent>& c);

}  // namespace skein
