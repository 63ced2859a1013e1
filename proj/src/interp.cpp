#include "fekete/interp.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace fekete {

using A = AlgebraicScalar;
using PolyA = BaryPoly<A>;

double lu_determinant(DenseMatrix<double> m) {
  if (m.rows != m.cols) throw std::invalid_argument("non-square matrix");
  const size_t n = m.rows;
  double det = 1.0;
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    for (size_t i = k + 1; i < n; ++i)
      if (std::abs(m.at(i, k)) > std::abs(m.at(pivot, k))) pivot = i;
    if (m.at(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
      det = -det;
    }
    det *= m.at(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      const double f = m.at(i, k) / m.at(k, k);
      for (size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return det;
}

DenseMatrix<double> lu_solve(DenseMatrix<double> a, DenseMatrix<double> b) {
  if (a.rows != a.cols || a.rows != b.rows)
    throw std::invalid_argument("lu_solve: shape mismatch");
  const size_t n = a.rows, m = b.cols;
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    for (size_t i = k + 1; i < n; ++i)
      if (std::abs(a.at(i, k)) > std::abs(a.at(pivot, k))) pivot = i;
    if (a.at(pivot, k) == 0.0) throw SingularMatrixError();
    if (pivot != k) {
      for (size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(k, j));
      for (size_t j = 0; j < m; ++j) std::swap(b.at(pivot, j), b.at(k, j));
    }
    for (size_t i = k + 1; i < n; ++i) {
      const double f = a.at(i, k) / a.at(k, k);
      for (size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      for (size_t j = 0; j < m; ++j) b.at(i, j) -= f * b.at(k, j);
    }
  }
  for (size_t kk = n; kk-- > 0;) {
    for (size_t j = 0; j < m; ++j) {
      double s = b.at(kk, j);
      for (size_t c = kk + 1; c < n; ++c) s -= a.at(kk, c) * b.at(c, j);
      b.at(kk, j) = s / a.at(kk, kk);
    }
  }
  return b;
}

VandermondeExact vandermonde_exact(const ExactPointSet& ps, int n) {
  VandermondeExact v;
  v.degree = n;
  v.dim = ps.dim;
  v.basis = monomials_of_degree(n, ps.dim + 1);
  const size_t N = ps.points.size();
  if (v.basis.size() != N)
    throw std::invalid_argument(
        "point count does not match the polynomial dimension");
  v.entries = DenseMatrix<A>(N, N, A(0));
  for (size_t i = 0; i < N; ++i) {
    const auto& coords = ps.points[i].coords;
    // power table per point
    int maxdeg = n;
    std::vector<std::vector<A>> pw(coords.size());
    for (size_t c = 0; c < coords.size(); ++c) {
      pw[c].reserve(static_cast<size_t>(maxdeg) + 1);
      pw[c].push_back(A(1));
      for (int k = 1; k <= maxdeg; ++k) pw[c].push_back(pw[c].back() * coords[c]);
    }
    for (size_t j = 0; j < N; ++j) {
      A val(1);
      for (size_t c = 0; c < coords.size(); ++c)
        if (v.basis[j][c] > 0) val *= pw[c][static_cast<size_t>(v.basis[j][c])];
      v.entries.at(i, j) = std::move(val);
    }
  }
  return v;
}

AlgebraicScalar vdm_det(const ExactPointSet& ps, int n) {
  return bareiss_determinant(vandermonde_exact(ps, n).entries);
}

LagrangeBasis lagrange_solve(const ExactPointSet& ps, int n) {
  const VandermondeExact v = vandermonde_exact(ps, n);
  const size_t N = ps.points.size();
  // V C = I: column i of C holds the monomial coefficients of l_i.
  const DenseMatrix<A> c = solve_exact(v.entries, DenseMatrix<A>::identity(N));
  LagrangeBasis basis;
  basis.degree = n;
  basis.dim = ps.dim;
  basis.polys.reserve(N);
  for (size_t i = 0; i < N; ++i) {
    PolyA p(ps.dim + 1);
    for (size_t j = 0; j < N; ++j) p.add_term(v.basis[j], c.at(j, i));
    basis.polys.push_back(std::move(p));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

PolyA lambda(int nvars, int i) { return PolyA::variable(nvars, i); }

/// Ansatz atom exponents: per-role lambda powers, then powers of
/// sum(lambda), S2, S3 (weights 1, 2, 3).
struct AnsatzTerm {
  std::vector<int> role_pow;
  int sum_pow = 0;
  int s2_pow = 0;
  int s3_pow = 0;
};

void enumerate_role_pows(int arity, int budget, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == arity) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    cur.push_back(e);
    enumerate_role_pows(arity, budget - e, cur, out);
    cur.pop_back();
  }
}

std::vector<AnsatzTerm> ansatz_terms(int arity, int quotient_degree) {
  std::vector<AnsatzTerm> terms;
  for (int s3 = 0; 3 * s3 <= quotient_degree; ++s3)
    for (int s2 = 0; 3 * s3 + 2 * s2 <= quotient_degree; ++s2)
      for (int sp = 0; 3 * s3 + 2 * s2 + sp <= quotient_degree; ++sp) {
        const int rem = quotient_degree - 3 * s3 - 2 * s2 - sp;
        std::vector<std::vector<int>> role_pows;
        std::vector<int> cur;
        enumerate_role_pows(arity, rem, cur, role_pows);
        for (auto& rp : role_pows) {
          int total = 0;
          for (int e : rp) total += e;
          if (total != rem) continue;
          terms.push_back({std::move(rp), sp, s2, s3});
        }
      }
  return terms;
}

PolyA ansatz_poly(const AnsatzTerm& t, std::span<const int> role, int nvars) {
  PolyA p = PolyA::constant(nvars, A(1));
  for (size_t k = 0; k < t.role_pow.size(); ++k)
    if (t.role_pow[k] > 0)
      p = p * PolyA::variable(nvars, role[k], t.role_pow[k]);
  if (t.sum_pow > 0)
    p = p * PolyA::sum_of_variables(nvars).pow(static_cast<unsigned>(t.sum_pow));
  if (t.s2_pow > 0)
    p = p * power_sum<A>(2, nvars).pow(static_cast<unsigned>(t.s2_pow));
  if (t.s3_pow > 0)
    p = p * power_sum<A>(3, nvars).pow(static_cast<unsigned>(t.s3_pow));
  return p;
}

PolyA role_prefactor(std::span<const int> role, int arity, int nvars) {
  PolyA p = PolyA::constant(nvars, A(1));
  for (int k = 0; k < arity; ++k) p = p * lambda(nvars, role[k]);
  return p;
}

/// Exact coefficients c with sum_k c_k terms_k == target; throws when the
/// system is inconsistent or underdetermined.
std::vector<A> fit_exact(const std::vector<PolyA>& terms,
                         const PolyA& target) {
  std::map<MultiIndex, size_t> support;
  auto note = [&](const PolyA& p) {
    for (const auto& [m, c] : p.terms()) support.emplace(m, support.size());
  };
  for (const auto& t : terms) note(t);
  note(target);

  const size_t rows = support.size();
  const size_t cols = terms.size();
  DenseMatrix<A> sys(rows, cols + 1, A(0));
  for (size_t k = 0; k < cols; ++k)
    for (const auto& [m, c] : terms[k].terms())
      sys.at(support.at(m), k) = c;
  for (const auto& [m, c] : target.terms())
    sys.at(support.at(m), cols) = c;

  // Gaussian elimination on the rectangular augmented system.
  std::vector<size_t> pivot_row_of_col(cols, SIZE_MAX);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pr = rank;
    while (pr < rows && sys.at(pr, col).is_zero()) ++pr;
    if (pr == rows) continue;
    for (size_t j = 0; j <= cols; ++j) std::swap(sys.at(pr, j), sys.at(rank, j));
    const A inv = A(1) / sys.at(rank, col);
    for (size_t j = col; j <= cols; ++j)
      sys.at(rank, j) = sys.at(rank, j) * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || sys.at(i, col).is_zero()) continue;
      const A f = sys.at(i, col);
      for (size_t j = col; j <= cols; ++j)
        sys.at(i, j) = sys.at(i, j) - f * sys.at(rank, j);
    }
    pivot_row_of_col[col] = rank;
    ++rank;
  }
  for (size_t i = rank; i < rows; ++i)
    if (!sys.at(i, cols).is_zero())
      throw std::logic_error("closed-form fit: inconsistent system");
  std::vector<A> c(cols, A(0));
  for (size_t col = 0; col < cols; ++col) {
    if (pivot_row_of_col[col] == SIZE_MAX)
      throw std::logic_error("closed-form fit: underdetermined system");
    c[col] = sys.at(pivot_row_of_col[col], cols);
  }
  return c;
}

struct FamilySpec {
  int face_dim = 0;
  int variant = 0;
  int arity = 0;
  std::vector<AnsatzTerm> terms;
  std::vector<A> coeffs;
};

struct ClosedFormTable {
  // keyed by (face_dim, variant)
  std::map<std::pair<int, int>, FamilySpec> families;
};

ClosedFormTable build_closed_form_table(int n) {
  const int d_fit = 3;
  const ExactPointSet ps = fekete_candidate_exact(n, d_fit);
  const LagrangeBasis solved = lagrange_solve(ps, n);

  ClosedFormTable table;
  for (size_t i = 0; i < ps.points.size(); ++i) {
    const auto& tag = ps.points[i].tag;
    const auto key = std::make_pair(tag.face_dim, tag.variant);
    if (table.families.count(key)) continue;
    FamilySpec spec;
    spec.face_dim = tag.face_dim;
    spec.variant = tag.variant;
    spec.arity = static_cast<int>(tag.ordered.size());
    const PolyA pref = role_prefactor(tag.ordered, spec.arity, d_fit + 1);
    const PolyA quotient = divide_exact(solved.polys[i], pref);
    spec.terms = ansatz_terms(spec.arity, n - spec.arity);
    std::vector<PolyA> term_polys;
    term_polys.reserve(spec.terms.size());
    for (const auto& t : spec.terms)
      term_polys.push_back(ansatz_poly(t, tag.ordered, d_fit + 1));
    spec.coeffs = fit_exact(term_polys, quotient);
    table.families.emplace(key, std::move(spec));
  }
  return table;
}

const ClosedFormTable& closed_form_table(int n) {
  static const std::array<ClosedFormTable, 4> tables = {
      build_closed_form_table(1), build_closed_form_table(2),
      build_closed_form_table(3), build_closed_form_table(4)};
  if (n < 1 || n > 4)
    throw std::invalid_argument("closed forms cover degrees 1..4");
  return tables[static_cast<size_t>(n - 1)];
}

}  // namespace

BaryPoly<AlgebraicScalar> closed_form_for_tag(int n, int d,
                                              const FamilyTag& tag) {
  const ClosedFormTable& table = closed_form_table(n);
  const auto it = table.families.find({tag.face_dim, tag.variant});
  if (it == table.families.end())
    throw std::invalid_argument("unknown point family");
  const FamilySpec& spec = it->second;
  const int nvars = d + 1;
  PolyA out(nvars);
  for (size_t k = 0; k < spec.terms.size(); ++k) {
    if (spec.coeffs[k].is_zero()) continue;
    out += ansatz_poly(spec.terms[k], tag.ordered, nvars)
               .scaled(spec.coeffs[k]);
  }
  return role_prefactor(tag.ordered, spec.arity, nvars) * out;
}

LagrangeBasis lagrange_closed_form(int n, int d) {
  const ExactPointSet ps = fekete_candidate_exact(n, d);
  LagrangeBasis basis;
  basis.degree = n;
  basis.dim = d;
  basis.polys.reserve(ps.points.size());
  for (const auto& pt : ps.points)
    basis.polys.push_back(closed_form_for_tag(n, d, pt.tag));
  return basis;
}

// ---------------------------------------------------------------------------
// Reference closed-form tables (compared against the solved basis)

namespace {

A sqrt5_c(long a_num, long a_den, long b_num, long b_den) {
  return A::of(rat(a_num, a_den), rat(b_num, b_den), Rational(0), Rational(0));
}

/// The reference form of the degree-3 edge polynomial names the vertex
/// carrying weight t first; our tags put the smaller weight first, so the
/// roles swap.
PolyA reference_deg3_edge(int nvars, int i, int j) {
  // 5 li lj ((1+t sqrt5) lj + (2-t sqrt5) li - 1), t sqrt5 = (1+sqrt5)/2.
  const PolyA li = lambda(nvars, i), lj = lambda(nvars, j);
  const PolyA sum = PolyA::sum_of_variables(nvars);
  const PolyA inner = lj.scaled(sqrt5_c(3, 2, 1, 2)) +
                      li.scaled(sqrt5_c(3, 2, -1, 2)) - sum;
  return (li * lj * inner).scaled(A(5));
}

PolyA reference_deg3_vertex(int nvars, int i) {
  const PolyA li = lambda(nvars, i);
  const PolyA sum = PolyA::sum_of_variables(nvars);
  const PolyA s2 = power_sum<A>(2, nvars);
  const PolyA inner = li * li * PolyA::constant(nvars, A(12)) -
                      (li * sum).scaled(A(12)) + (sum * sum).scaled(A(3)) - s2;
  return (li * inner).scaled(A(rat(1, 2)));
}

PolyA reference_deg3_face(int nvars, int i, int j, int k) {
  return (lambda(nvars, i) * lambda(nvars, j) * lambda(nvars, k)).scaled(A(27));
}

PolyA reference_deg4_centroid(int nvars, const std::vector<int>& r) {
  PolyA p = PolyA::constant(nvars, A(256));
  for (int v : r) p = p * lambda(nvars, v);
  return p;
}

PolyA reference_deg4_triangle(int nvars, int i, int j, int k) {
  const PolyA li = lambda(nvars, i), lj = lambda(nvars, j),
              lk = lambda(nvars, k);
  const PolyA sum = PolyA::sum_of_variables(nvars);
  const PolyA inner = li.scaled(sqrt5_c(1, 1, 1, 1)) +
                      (lj + lk).scaled(sqrt5_c(3, 2, -1, 2)) - sum;
  return (li * lj * lk * inner).scaled(sqrt5_c(73, 2, 1, 2));
}

/// First deg-4 edge family (the Gauss nodes), exactly as tabulated in the
/// reference, including the repeated lambda_i in the two linear terms.
PolyA reference_deg4_edge_gauss(int nvars, int i, int j) {
  const PolyA li = lambda(nvars, i), lj = lambda(nvars, j);
  const PolyA sum = PolyA::sum_of_variables(nvars);
  const PolyA s2 = power_sum<A>(2, nvars);
  const A s37 = A::of(Rational(0), Rational(0), rat(1, 7), Rational(0));
  const A a = sqrt5_c(61, 22, 7, 22);          // (61+7*sqrt5)/22
  const A b = s37 * sqrt5_c(7, 2, 1, 2);       // sqrt(3/7)(7+sqrt5)/2
  const A c = s37 * sqrt5_c(5, 2, 1, 2);       // sqrt(3/7)(5+sqrt5)/2
  const A dd = sqrt5_c(41, 22, 13, 22);        // (41+13*sqrt5)/22
  PolyA inner = (li * li).scaled(a - b);
  inner += (li * lj).scaled(sqrt5_c(3, 11, 9, 11));
  inner += (lj * lj).scaled(a + b);
  inner += (li * sum).scaled(c - dd);
  inner -= (li * sum).scaled(c + dd);  // as tabulated; lambda_j is plausible
  inner += (sum * sum).scaled(sqrt5_c(8, 11, 2, 11));
  inner -= s2.scaled(sqrt5_c(7, 11, -1, 11));
  return (li * lj * inner).scaled(A(rat(49, 6)));
}

PolyA reference_deg4_edge_mid(int nvars, int i, int j) {
  const PolyA li = lambda(nvars, i), lj = lambda(nvars, j);
  const PolyA sum = PolyA::sum_of_variables(nvars);
  const PolyA s2 = power_sum<A>(2, nvars);
  PolyA inner = (li * li + lj * lj).scaled(sqrt5_c(100, 1, -8, 1));
  inner += (li * lj).scaled(sqrt5_c(672, 1, -96, 1));
  inner += ((li + lj) * sum).scaled(sqrt5_c(-302, 1, 62, 1));
  inner += s2.scaled(sqrt5_c(82, 1, -40, 1));
  return (li * lj * inner).scaled(A(rat(4, 33)));
}

PolyA reference_deg4_vertex(int nvars, int i) {
  const PolyA li = lambda(nvars, i);
  const PolyA sum = PolyA::sum_of_variables(nvars);
  const PolyA s2 = power_sum<A>(2, nvars);
  const PolyA s3 = power_sum<A>(3, nvars);
  PolyA inner = (li * li * li).scaled(sqrt5_c(101, 11, 17, 11));
  inner -= (li * li * sum).scaled(sqrt5_c(13, 1, 2, 1));
  inner += (li * sum * sum).scaled(sqrt5_c(130, 22, 27, 22));
  inner -= (sum * sum * sum).scaled(sqrt5_c(259, 264, 51, 264));
  inner += s2 * (sum.scaled(sqrt5_c(9, 8, 1, 8)) -
                 li.scaled(sqrt5_c(24, 22, 17, 22)));
  inner += s3.scaled(sqrt5_c(45, 44, 3, 44) - A(rat(5, 3)));
  return (li * inner).scaled(A(2));
}

}  // namespace

std::vector<ReferenceFormulaCheck> reference_formula_report(int n, int d) {
  std::vector<ReferenceFormulaCheck> out;
  const int nv = d + 1;
  auto check = [&](const std::string& name, const PolyA& reference,
                   const FamilyTag& tag) {
    out.push_back({name, reference == closed_form_for_tag(n, d, tag)});
  };
  if (n == 3) {
    check("deg3 vertex", reference_deg3_vertex(nv, 0), {0, 0, {0}});
    check("deg3 edge", reference_deg3_edge(nv, 0, 1), {1, 0, {0, 1}});
    check("deg3 face barycentre", reference_deg3_face(nv, 0, 1, 2),
          {2, 0, {0, 1, 2}});
  } else if (n == 4) {
    check("deg4 vertex", reference_deg4_vertex(nv, 0), {0, 0, {0}});
    check("deg4 edge gauss", reference_deg4_edge_gauss(nv, 0, 1),
          {1, 0, {0, 1}});
    check("deg4 edge midpoint", reference_deg4_edge_mid(nv, 0, 1),
          {1, 1, {0, 1}});
    check("deg4 face triangle", reference_deg4_triangle(nv, 0, 1, 2),
          {2, 0, {0, 1, 2}});
    if (d >= 3)
      check("deg4 3-face centroid", reference_deg4_centroid(nv, {0, 1, 2, 3}),
            {3, 0, {0, 1, 2, 3}});
  } else {
    throw std::invalid_argument("reference formulas are given for degrees 3, 4");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kernels

BaryPoly<AlgebraicScalar> kernel_sum_powers(const LagrangeBasis& basis,
                                            int power) {
  if (basis.polys.empty()) throw std::invalid_argument("empty basis");
  PolyA out(basis.dim + 1);
  for (const auto& l : basis.polys)
    out.add_in_place(l.pow(static_cast<unsigned>(power)));
  return out;
}

BaryPoly<AlgebraicScalar> kernel_closed(int n, int d, KernelOptions opts) {
  const ExactPointSet ps = fekete_candidate_exact(n, d);
  const int nvars = d + 1;

  std::map<std::pair<int, int>, PolyA> family_power;  // rep l^power
  std::map<std::pair<int, int>, std::vector<int>> family_rep_role;
  PolyA total(nvars);

  for (const auto& pt : ps.points) {
    if (opts.exclude_face3_centroids && n == 4 && pt.tag.face_dim == 3)
      continue;
    const auto key = std::make_pair(pt.tag.face_dim, pt.tag.variant);
    auto it = family_power.find(key);
    if (it == family_power.end()) {
      const PolyA rep = closed_form_for_tag(n, d, pt.tag);
      it = family_power
               .emplace(key, rep.pow(static_cast<unsigned>(opts.power)))
               .first;
      family_rep_role.emplace(key, pt.tag.ordered);
    }
    const std::vector<int>& rep_role = family_rep_role.at(key);
    // Full permutation sending the representative's role tuple to this
    // point's, order-preserving elsewhere.
    std::vector<int> perm(static_cast<size_t>(nvars), -1);
    std::vector<bool> target_used(static_cast<size_t>(nvars), false);
    for (size_t t = 0; t < rep_role.size(); ++t) {
      perm[static_cast<size_t>(rep_role[t])] = pt.tag.ordered[t];
      target_used[static_cast<size_t>(pt.tag.ordered[t])] = true;
    }
    int next_target = 0;
    for (int s = 0; s < nvars; ++s) {
      if (perm[static_cast<size_t>(s)] >= 0) continue;
      while (target_used[static_cast<size_t>(next_target)]) ++next_target;
      perm[static_cast<size_t>(s)] = next_target;
      target_used[static_cast<size_t>(next_target)] = true;
    }
    total.add_in_place(it->second.permute_vars(perm));
  }

  return total;
}

std::optional<BaryPoly<Rational>> try_rational_poly(
    const BaryPoly<AlgebraicScalar>& p) {
  for (const auto& [m, c] : p.terms())
    if (!c.is_rational()) return std::nullopt;
  return p.map_scalars<Rational>([](const A& c) { return c.c0; });
}

std::vector<std::vector<Rational>> face_barycentres(int d) {
  std::vector<std::vector<Rational>> out;
  const int nvars = d + 1;
  for (uint32_t mask = 1; mask < (1u << nvars); ++mask) {
    const int k = __builtin_popcount(mask);
    std::vector<Rational> x(static_cast<size_t>(nvars), Rational(0));
    for (int i = 0; i < nvars; ++i)
      if (mask & (1u << i)) x[static_cast<size_t>(i)] = rat(1, k);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Rational> random_rational_simplex_point(int dplus1,
                                                    std::mt19937_64& rng) {
  std::uniform_int_distribution<long> w(0, 1000);
  std::vector<Rational> x(static_cast<size_t>(dplus1));
  Rational total(0);
  while (sgn(total) == 0) {
    total = 0;
    for (auto& xi : x) {
      xi = Rational(w(rng));
      total += xi;
    }
  }
  for (auto& xi : x) xi /= total;
  return x;
}

DesignCheckReport design_check(const ExactPointSet& ps, int n,
                               size_t random_samples, uint64_t seed) {
  DesignCheckReport report;
  report.degree = n;
  report.dim = ps.dim;
  report.npoints = ps.points.size();

  const VandermondeExact v = vandermonde_exact(ps, n);
  const size_t N = ps.points.size();
  const A detv = bareiss_determinant(v.entries);
  if (detv.is_zero()) throw SingularMatrixError();

  // Gram of the equally weighted design: G = (1/N) V^t V.
  DenseMatrix<A> gram(N, N, A(0));
  const Rational invn = rat(1, static_cast<long>(N));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i; j < N; ++j) {
      A s(0);
      for (size_t k = 0; k < N; ++k)
        s += v.entries.at(k, i) * v.entries.at(k, j);
      s = s * A(invn);
      gram.at(i, j) = s;
      if (i != j) gram.at(j, i) = std::move(s);
    }
  const A detg = bareiss_determinant(gram);
  const A nn = A(pow_rational(Rational(static_cast<long>(N)),
                              static_cast<unsigned>(N)));
  report.gram_det_identity = (detg * nn == detv * detv);

  const LagrangeBasis basis = lagrange_solve(ps, n);
  const PolyA kernel = kernel_sum_powers(basis, 2);

  report.kernel_is_N_at_nodes = true;
  for (const auto& pt : ps.points) {
    if (kernel.eval(pt.coords) != A(1)) {
      report.kernel_is_N_at_nodes = false;
      break;
    }
  }

  // Sample: all face barycentres, then random rational points.
  std::vector<std::vector<Rational>> samples = face_barycentres(ps.dim);
  std::mt19937_64 rng(seed);
  for (size_t s = 0; s < random_samples; ++s)
    samples.push_back(random_rational_simplex_point(ps.dim + 1, rng));
  report.samples = samples.size();
  report.max_sampled_kernel = A(0);
  for (const auto& x : samples) {
    std::vector<A> xa(x.size());
    for (size_t i = 0; i < x.size(); ++i) xa[i] = A(x[i]);
    const A val = kernel.eval(xa);
    if ((val - report.max_sampled_kernel).sign() > 0)
      report.max_sampled_kernel = val;
    if (!report.violation_found && (val - A(1)).sign() > 0) {
      report.violation_found = true;
      report.violation_point = x;
    }
  }
  return report;
}

}  // namespace fekete
