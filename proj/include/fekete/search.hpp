#pragma once

#include <array>
#include <functional>
#include <span>

#include "fekete/interp.hpp"

namespace fekete {

/// Lagrange basis in double precision for fast pointwise evaluation:
/// coefficient rows over the degree-n monomial basis.
struct NumericLagrange {
  int degree = 0;
  int dim = 0;
  std::vector<MultiIndex> basis;
  std::vector<std::vector<double>> coeffs;  // one row per node
  std::vector<std::vector<double>> nodes;

  size_t size() const { return coeffs.size(); }
  void eval_monomials(std::span<const double> x,
                      std::vector<double>& mono) const;
  void eval_all(std::span<const double> x, std::vector<double>& values) const;
  double sum_squares(std::span<const double> x) const;
  /// ||l(x)||_r with the convention 0^r = 0.
  double norm_r(std::span<const double> x, double r) const;
  double max_abs(std::span<const double> x) const;
};

/// From the closed forms (degrees 1..4, exact coefficients rounded once).
NumericLagrange numeric_lagrange_exact(int n, int d);
/// From interval node coordinates via LU on the Vandermonde midpoints
/// (the degree-5 route).
NumericLagrange numeric_lagrange(const NumericPointSet& ps, int n);

struct MaxConfig {
  int starts = 200;
  uint64_t seed = 1;
  int max_iterations = 600;
  double value_tol = 1e-12;
  int threads = 1;
  /// extra start points (each of length d+1), e.g. warm starts
  std::vector<std::vector<double>> extra_starts;
};

struct SimplexMaxReport {
  double value = 0.0;
  std::vector<double> argmax;
  int starts = 0;
  long iterations = 0;
};

/// Multistart projected ascent over the closed simplex; deterministic for a
/// fixed config (per-start seeds derive from the start index).
SimplexMaxReport max_over_simplex(
    const std::function<double(std::span<const double>)>& f, int d,
    const MaxConfig& cfg = {});

/// Euclidean projection onto the probability simplex.
void project_to_simplex(std::vector<double>& x);

struct FejerExponentResult {
  double r = 0.0;      // midpoint of the final bracket
  double r_lo = 2.0;   // sup-norm exceeds 1 here (when r > 2)
  double r_hi = 2.0;   // sup-norm within tolerance of 1 here
  bool linf_ok = false;
  bool capped = false;  // bracket hit r_cap; exponent exceeds r_lo
  std::vector<std::pair<double, double>> per_r;  // (r, max ||l||_r)
};

struct UndefinedExponentError : std::runtime_error {
  UndefinedExponentError()
      : std::runtime_error("sup-norm of the Lagrange vector exceeds 1") {}
};

/// Bisection on r of max_x ||l(x)||_r - 1, using the monotone decrease of
/// the r-norm in r. Throws UndefinedExponentError when ||l||_inf > 1.
FejerExponentResult fejer_exponent(const NumericLagrange& lag,
                                   double tol_r = 1e-6, MaxConfig cfg = {},
                                   double r_cap = 64.0);

// ---------------------------------------------------------------------------
// Degree-5 parameter work

/// The degree-10 integer polynomial q(v) whose roots contain the 2-face
/// parameters u and v.
UniPoly deg5_parameter_poly();

/// Stationarity factors of the 2-face objective, in variables (u, v).
BaryPoly<Rational> deg5_stationarity_q1();
BaryPoly<Rational> deg5_stationarity_q2();

/// The 2-face objective p(u, v) (a squarefree-factored determinant factor).
double deg5_objective_p(double u, double v);

/// All roots of q in (0,1) as exact-bisection enclosures.
std::vector<Interval> deg5_parameter_roots(mpfr_prec_t prec = 384);

struct Deg5TwoFaceResult {
  Deg5Params params;            // refined u, v enclosures and w
  double objective = 0.0;       // |p(u, v)| at the chosen pair
  double q1_bound = 0.0;        // interval bound for |q1(u,v)| (0 when exact)
  double q2_bound = 0.0;
  size_t roots_in_unit_interval = 0;
  /// smallest collinearity determinant among the 6 interior points of the
  /// planar set (diagnostic: the points do not lie on a triangle)
  double min_collinearity_det = 0.0;
};

/// Refines the tabulated seed roots by exact bisection, verifies
/// stationarity, and picks the admissible pair maximizing |p|.
Deg5TwoFaceResult optimize_deg5_2face(mpfr_prec_t prec = 384);

/// Resultant of (q1, q2) eliminating u, via an exact Sylvester determinant
/// over Q[v].
UniPoly rederive_q_by_resultant();

struct Deg5ThreeFaceResult {
  AlgebraicScalar w_global;       // (9 - sqrt5)/38
  AlgebraicScalar w_local;        // (9 + sqrt5)/38
  bool derivative_identity_ok = false;
  bool quadratic_roots_ok = false;  // 19 w^2 - 9 w + 1 vanishes at both
  bool global_exceeds_local = false;
};

/// Exact analysis of the 3-face objective (w^3(1-3w))^4 (1-4w)^3.
Deg5ThreeFaceResult optimize_deg5_3face();

struct DecouplingReport {
  bool matches = false;       // determinant == constant * reference form
  Rational constant{0};      // the constant (expected +-1)
};

/// Symbolic check of the interior-block Vandermonde factorization for
/// d = 2 (variables u, v) or d = 3 (variable w).
DecouplingReport vdm_decoupling_check_deg5(int d);

struct BruteForceReport {
  long best_det_scaled = 0;  // |det| in grid-integer units
  std::array<std::array<int, 3>, 3> best_triple{};  // grid coordinates
  bool vertices_win = false;
  Rational midpoint_vertex_ratio{0};
};

/// Exhaustive degree-1 search over all triples of a barycentric grid with
/// `grid` points per edge.
BruteForceReport brute_force_fekete_deg1(int grid = 21);

/// Rigorous enclosure of sum l_i^2 at the centroid for the degree-5 set
/// (interval Vandermonde solve).
Interval deg5_kernel_centroid_enclosure(int d, const Deg5Params& params,
                                        mpfr_prec_t prec = 192);

/// Refined degree-5 parameters: exact-bisection roots at `prec` bits.
Deg5Params compute_deg5_params(mpfr_prec_t prec = 384,
                               bool local_w = false);

}  // namespace fekete
