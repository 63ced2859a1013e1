#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fekete/pointsets.hpp"
#include "fekete/polyring.hpp"

namespace fekete {

struct SingularMatrixError : std::runtime_error {
  SingularMatrixError() : std::runtime_error("singular matrix") {}
};

template <typename S>
struct DenseMatrix {
  size_t rows = 0, cols = 0;
  std::vector<S> a;

  DenseMatrix() = default;
  DenseMatrix(size_t r, size_t c, S fill = S(0))
      : rows(r), cols(c), a(r * c, std::move(fill)) {}

  S& at(size_t r, size_t c) { return a[r * cols + c]; }
  const S& at(size_t r, size_t c) const { return a[r * cols + c]; }

  static DenseMatrix identity(size_t n) {
    DenseMatrix m(n, n, S(0));
    for (size_t i = 0; i < n; ++i) m.at(i, i) = S(1);
    return m;
  }
};

/// Exact division hook for fraction-free elimination.
inline Rational scalar_divide_exact(const Rational& a, const Rational& b) {
  return Rational(a / b);
}
inline AlgebraicScalar scalar_divide_exact(const AlgebraicScalar& a,
                                           const AlgebraicScalar& b) {
  return a / b;
}

/// Fraction-free (Bareiss) determinant over an exact scalar domain.
/// Every intermediate entry is a minor of the input matrix, which keeps
/// value growth polynomial instead of exponential.
template <typename S>
S bareiss_determinant(DenseMatrix<S> m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square");
  const size_t n = m.rows;
  if (n == 0) return S(1);
  S prev = S(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot = k;
    while (pivot < n && is_exact_zero(m.at(pivot, k))) ++pivot;
    if (pivot == n) return S(0);
    if (pivot != k) {
      for (size_t j = k; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        S num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = scalar_divide_exact(num, prev);
      }
      m.at(i, k) = S(0);
    }
    prev = m.at(k, k);
  }
  S det = m.at(n - 1, n - 1);
  return sign < 0 ? S(-det) : det;
}

/// Exact solve A X = B by Gauss-Jordan over a field.
template <typename S>
DenseMatrix<S> solve_exact(DenseMatrix<S> a, DenseMatrix<S> b) {
  if (a.rows != a.cols || a.rows != b.rows)
    throw std::invalid_argument("solve_exact: shape mismatch");
  const size_t n = a.rows, m = b.cols;
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    while (pivot < n && is_exact_zero(a.at(pivot, k))) ++pivot;
    if (pivot == n) throw SingularMatrixError();
    if (pivot != k) {
      for (size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(k, j));
      for (size_t j = 0; j < m; ++j) std::swap(b.at(pivot, j), b.at(k, j));
    }
    const S inv = scalar_divide_exact(S(1), a.at(k, k));
    for (size_t j = 0; j < n; ++j) a.at(k, j) = a.at(k, j) * inv;
    for (size_t j = 0; j < m; ++j) b.at(k, j) = b.at(k, j) * inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == k || is_exact_zero(a.at(i, k))) continue;
      const S f = a.at(i, k);
      for (size_t j = 0; j < n; ++j)
        a.at(i, j) = a.at(i, j) - f * a.at(k, j);
      for (size_t j = 0; j < m; ++j)
        b.at(i, j) = b.at(i, j) - f * b.at(k, j);
    }
  }
  return b;
}

namespace detail {

template <typename T>
T det_minor_rec(const std::vector<std::vector<T>>& m, size_t row,
                uint32_t cols, const T& zero, std::map<uint32_t, T>& memo) {
  auto it = memo.find(cols);
  if (it != memo.end()) return it->second;
  T acc = zero;
  int sign = 1;
  const size_t n = m.size();
  for (size_t c = 0; c < n; ++c) {
    if (!(cols & (1u << c))) continue;
    T contrib = zero;
    if (row + 1 == n) {
      contrib = m[row][c];
    } else {
      const T sub = det_minor_rec(m, row + 1, cols & ~(1u << c), zero, memo);
      contrib = m[row][c] * sub;
    }
    if (sign > 0) {
      acc = acc + contrib;
    } else {
      acc = acc - contrib;
    }
    sign = -sign;
  }
  memo.emplace(cols, acc);
  return acc;
}

}  // namespace detail

/// Determinant by minor expansion with memoization on column subsets;
/// division-free, for matrices over polynomial rings (size <= 20).
template <typename T>
T det_by_minors(const std::vector<std::vector<T>>& m, const T& one) {
  const size_t n = m.size();
  if (n > 20) throw std::invalid_argument("det_by_minors: matrix too large");
  if (n == 0) return one;
  for (const auto& row : m)
    if (row.size() != n)
      throw std::invalid_argument("det_by_minors: non-square matrix");
  const T zero = one - one;
  std::map<uint32_t, T> memo;
  return detail::det_minor_rec(m, 0, (1u << n) - 1u, zero, memo);
}

// Numeric (double) routines with partial pivoting, for the degree-5 sets.
double lu_determinant(DenseMatrix<double> m);
DenseMatrix<double> lu_solve(DenseMatrix<double> a, DenseMatrix<double> b);

/// Vandermonde matrix in the fixed basis of homogeneous barycentric
/// monomials of degree n (graded-lex): entries[i][j] = basis_j(point_i).
struct VandermondeExact {
  int degree = 0;
  int dim = 0;
  std::vector<MultiIndex> basis;
  DenseMatrix<AlgebraicScalar> entries;
};

VandermondeExact vandermonde_exact(const ExactPointSet& ps, int n);

/// Exact Vandermonde determinant; 0 signals a non-unisolvent set.
AlgebraicScalar vdm_det(const ExactPointSet& ps, int n);

struct LagrangeBasis {
  int degree = 0;
  int dim = 0;
  /// One homogeneous degree-n polynomial per point, aligned with the point
  /// list; l_i(x_j) = delta_ij.
  std::vector<BaryPoly<AlgebraicScalar>> polys;
};

/// Lagrange basis by exact linear solve; throws SingularMatrixError for a
/// non-unisolvent set.
LagrangeBasis lagrange_solve(const ExactPointSet& ps, int n);

/// Closed-form Lagrange polynomial for one point tag, valid for every
/// dimension d; fitted once, exactly, from a solved basis (which is the
/// authoritative ground truth).
BaryPoly<AlgebraicScalar> closed_form_for_tag(int n, int d,
                                              const FamilyTag& tag);

/// Closed-form basis aligned with fekete_candidate_exact(n, d).
LagrangeBasis lagrange_closed_form(int n, int d);

/// Where the reference closed-form tables disagree with the solved basis.
struct ReferenceFormulaCheck {
  std::string family;
  bool matches = false;
};
std::vector<ReferenceFormulaCheck> reference_formula_report(int n, int d);

/// Sum of power-th powers of the basis polynomials, as a polynomial of
/// degree power*n.
BaryPoly<AlgebraicScalar> kernel_sum_powers(const LagrangeBasis& basis,
                                            int power = 2);

struct KernelOptions {
  bool exclude_face3_centroids = false;  // degree-4 partial kernel
  int power = 2;
};

/// Orbit-symmetrized kernel built from closed forms: raises one
/// representative per family to the requested power and sums index-permuted
/// copies. For degrees <= 3 the set is stable under the Galois action and
/// the result is rational; the degree-4 triangle family is not, so sqrt5
/// components survive there.
BaryPoly<AlgebraicScalar> kernel_closed(int n, int d, KernelOptions opts = {});

/// Rational view of a polynomial whose coefficients are all rational.
std::optional<BaryPoly<Rational>> try_rational_poly(
    const BaryPoly<AlgebraicScalar>& p);

/// All face barycentres of S_d (including vertices and the centroid).
std::vector<std::vector<Rational>> face_barycentres(int d);

struct DesignCheckReport {
  int degree = 0;
  int dim = 0;
  size_t npoints = 0;
  bool gram_det_identity = false;      // det(G_n) * N^N == det(V)^2
  bool kernel_is_N_at_nodes = false;   // N * sum l_i^2 == N at every node
  bool violation_found = false;        // sampled point with sum l_i^2 > 1
  std::vector<Rational> violation_point;
  AlgebraicScalar max_sampled_kernel;  // max of sum l_i^2 over the samples
  size_t samples = 0;
};

/// Prop.-1 style check of the equally weighted design: Gram determinant
/// identity, kernel value N at the nodes, and a sampled search for
/// violations of the Fejer bound (face barycentres plus random rational
/// points).
DesignCheckReport design_check(const ExactPointSet& ps, int n,
                               size_t random_samples = 200,
                               uint64_t seed = 1);

/// Random rational barycentric point (nonnegative, sums to one exactly).
std::vector<Rational> random_rational_simplex_point(int dplus1,
                                                    std::mt19937_64& rng);

}  // namespace fekete
