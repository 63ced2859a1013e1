#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fekete/interp.hpp"

namespace fekete {

enum class CertStatus { certified, refuted, inconclusive };

/// Outcome of one positivity certificate. `elevation` is the minimal r for
/// which every coefficient of the elevated polynomial is nonnegative
/// (meaningful for the elevation-based methods).
struct FejerCertificate {
  int degree = 0;
  int dim = 0;
  CertStatus status = CertStatus::inconclusive;
  int elevation = -1;
  int r_max = 0;
  std::string method;
  size_t term_count = 0;
  double wall_ms = 0.0;
  /// inconclusive: a term whose coefficient stayed negative at r_max
  std::optional<MultiIndex> negative_witness;
  /// refuted: exact rational point with kernel value > 1, and the value
  std::vector<Rational> refutation_point;
  std::string refutation_value;
};

std::string to_string(CertStatus s);

/// (sum lambda)^{2n} - sum of homogenized squared Lagrange polynomials.
BaryPoly<AlgebraicScalar> fejer_defect(const LagrangeBasis& basis, int n);

/// Defect built from closed forms (degrees 1..4, any d); `opts.power` allows
/// the fourth-power variant, `opts.exclude_face3_centroids` the degree-4
/// partial sum.
BaryPoly<AlgebraicScalar> fejer_defect_poly(int n, int d,
                                            KernelOptions opts = {});

/// Core pipeline step: move H to the sub-simplex on V1..Vd and the centroid,
/// subtract the face restriction, and elevate until every coefficient is
/// nonnegative. Inconclusive when r_max is exhausted (elevation positivity
/// is sufficient, not necessary).
FejerCertificate certify_on_subsimplex(const BaryPoly<Rational>& H, int r_max);
FejerCertificate certify_on_subsimplex(const BaryPoly<AlgebraicScalar>& H,
                                       int r_max);

inline int default_r_max(int n) { return n <= 3 ? 16 : 14; }

/// The certificate for dimension d alone (assuming lower dimensions):
/// d = 1 uses the exact edge square identity, (n=3, d=2) the sub-triangle
/// decomposition, everything else the sub-simplex elevation pipeline.
/// A refutation scan over face barycentres runs first.
FejerCertificate certify_step(int n, int d, int r_max = -1,
                              KernelOptions opts = {});

/// Full induction chain d' = 1..d.
std::vector<FejerCertificate> certify_fejer(int n, int d, int r_max = -1);

/// Degree-4 partial-sum certificate for dimension d (excluding the 3-face
/// centroid polynomials from the kernel).
FejerCertificate certify_deg4_partial_sum(int d, int r_max = -1);

/// The companion bound 256 l_i l_j l_k l_l <= 1, certified once in four
/// variables (every dimension reduces to it on the spanning 3-face).
FejerCertificate certify_am_gm_3face(int r_max = 14);

/// Fourth-power bound sum l_i^4 <= 1 for F4 (conjecture support).
FejerCertificate certify_fourth_power(int d, int r_max = 14);

/// d = 1 base case: the defect factors exactly as a positive constant times
/// l1*l2 times the square of the homogenized Legendre-derivative factor.
FejerCertificate certify_edge_base(int n);

/// Exact data of the (n=3, d=2) sub-triangle treatment.
struct Deg3Dim2Decomposition {
  BaryPoly<Rational> defect{3};        // (sum)^6 - K3 in original coords
  BaryPoly<Rational> sub{3};           // after the sub-triangle substitution
  BaryPoly<Rational> quad_piece{3};    // (262/81) w^4 (u^2 - uv + v^2)
  BaryPoly<Rational> square_piece{3};  // 12 u v (v^2 - 3uv + u^2)^2
  BaryPoly<Rational> bracket{3};       // E: sub = quad + square + (2w/27) E
  int bracket_elevation = -1;          // minimal r with (sum)^r E nonnegative
};

Deg3Dim2Decomposition deg3_dim2_decomposition(int r_max = 16);
FejerCertificate certify_deg3_dim2(int r_max = 16);

}  // namespace fekete
