#pragma once

#include <array>
#include <string>
#include <vector>

#include "fekete/scalar.hpp"

namespace fekete {

/// Which construction family a point belongs to, on the face spanned by the
/// `ordered` vertex indices. `ordered` carries the role order the closed-form
/// Lagrange polynomials expect (e.g. the apex of a 2-face triangle first);
/// `variant` separates families living on faces of the same dimension.
struct FamilyTag {
  int face_dim = 0;
  int variant = 0;
  std::vector<int> ordered;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

template <typename S>
struct BaryPoint {
  std::vector<S> coords;      // barycentric, length d+1
  std::vector<int> face;      // sorted vertex indices of the minimal face
  FamilyTag tag;
};

template <typename S>
struct PointSet {
  int degree = 0;
  int dim = 0;
  std::vector<BaryPoint<S>> points;

  size_t size() const { return points.size(); }
};

using ExactPointSet = PointSet<AlgebraicScalar>;
using NumericPointSet = PointSet<Interval>;

/// Free parameters of the degree-5 construction. u and v are the 2-face
/// parameters (roots of a degree-10 integer polynomial, so enclosures only);
/// w is the 3-face parameter (9 - sqrt5)/38 by default.
struct Deg5Params {
  Interval u;
  Interval v;
  AlgebraicScalar w;

  /// Enclosures seeded from the 15-digit reference values; adequate for
  /// construction, refined to high precision by the search module.
  static Deg5Params seeded(mpfr_prec_t prec = Interval::kDefaultPrecision);
  static AlgebraicScalar w_global();  // (9 - sqrt5)/38
  static AlgebraicScalar w_local();   // (9 + sqrt5)/38, the local maximum
};

/// dim P_n(R^d) = C(n+d, d).
mpz_class cardinality(int n, int d);

/// The n+1 univariate Fekete nodes on an edge in barycentric pairs,
/// endpoints included; interior nodes are the zeros of P_n'.
std::vector<std::array<AlgebraicScalar, 2>> edge_nodes_exact(int n);
std::vector<std::array<Interval, 2>> edge_nodes_numeric(
    int n, mpfr_prec_t prec = Interval::kDefaultPrecision);

/// The candidate Fekete set F_n on S_d in exact coordinates (degrees 1..4).
ExactPointSet fekete_candidate_exact(int n, int d);

/// The candidate set with interval coordinates; degrees 1..4 are enclosed
/// from the exact construction, degree 5 takes its free parameters from
/// `params`.
NumericPointSet fekete_candidate_numeric(
    int n, int d, const Deg5Params& params,
    mpfr_prec_t prec = Interval::kDefaultPrecision);

/// Points whose minimal face lies inside `face` (sorted vertex indices),
/// re-expressed in the face's own barycentric coordinates.
template <typename S>
PointSet<S> restrict_to_face(const PointSet<S>& ps,
                             const std::vector<int>& face);

/// True when the two sets contain the same points (coordinates compared
/// exactly / by interval endpoints), ignoring order.
bool same_point_set(const ExactPointSet& a, const ExactPointSet& b);
bool same_point_set(const NumericPointSet& a, const NumericPointSet& b);

/// Total order on scalars used only for canonical sorting.
int scalar_order(const Rational& a, const Rational& b);
int scalar_order(const AlgebraicScalar& a, const AlgebraicScalar& b);
int scalar_order(const Interval& a, const Interval& b);

}  // namespace fekete
