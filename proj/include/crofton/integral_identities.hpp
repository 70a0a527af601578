#pragma once

#include <span>

#include "crofton/convex_body.hpp"
#include "crofton/density_product.hpp"
#include "crofton/identity.hpp"

namespace crofton {

// Sphere-integral convention: T_S f(y) = int_{S^{n-1}} f(x) |<x, y>| dx. It
// differs from the cosine transform for the probability Haar measure by
// T_S = sigma_{n-1} T, so T_S^{-1} = T^{-1} / sigma_{n-1}.

/// int_{S^{n-1}} T_S^{-1} h_A(x) V_{n-1}(pi_{x-perp} A) dx against
/// (n/2) V_n(A), for a smooth body in R^2 or R^3. lhs/rhs in the report;
/// the residual is the relative deviation.
IdentityReport alesker_identity(const ConvexBody& body, int bandwidth = 0);
double alesker_identity_residual(const ConvexBody& body, int bandwidth = 0);

/// int_{Gr(1,V)} T^{-1} s_A(H) cos(H, D) V_{k-1}(pi_{H-perp cap D} A) dH
/// against k V_k(pi_D A), D spanned by the orthonormal columns of `d`.
/// dim V = 3 with k = 2, or k = dim V in 2 or 3 (D the whole space).
IdentityReport haar2_check(const ConvexBody& body, const Mat& d, int bandwidth = 0);

/// Crofton density of the product of spheres S^{m_1} x ... x S^{m_n} on the
/// parallelotope spanned by the columns of `theta` in T = T_1 + ... + T_n
/// (block j has m_j coordinates):
///   prod_j (sigma_{m_j - 1} / sigma_{m_j}) E |det(<theta_i|T_j, w_j>)|
/// with w_j uniform on the unit sphere of T_j.
ProductEstimate omega_mc(std::span<const int> tangent_dims, const Mat& theta, const MonteCarloOptions& options = {});

/// omega_mc against (1/pi^n) (vol_{1,1} ... vol_{1,n})(theta), the product
/// of the pulled-back length densities of the factors.
IdentityReport verify_crofton_product(std::span<const int> tangent_dims, const Mat& theta, double tol,
                                      const MonteCarloOptions& options = {});

}  // namespace crofton
