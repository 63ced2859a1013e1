#include "fekete/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace fekete {

void NumericLagrange::eval_monomials(std::span<const double> x,
                                     std::vector<double>& mono) const {
  mono.assign(basis.size(), 1.0);
  for (size_t j = 0; j < basis.size(); ++j) {
    double v = 1.0;
    const MultiIndex& m = basis[j];
    for (size_t c = 0; c < m.nvars(); ++c) {
      const int e = m[c];
      for (int k = 0; k < e; ++k) v *= x[c];
    }
    mono[j] = v;
  }
}

void NumericLagrange::eval_all(std::span<const double> x,
                               std::vector<double>& values) const {
  std::vector<double> mono;
  eval_monomials(x, mono);
  values.assign(coeffs.size(), 0.0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    double s = 0.0;
    const auto& row = coeffs[i];
    for (size_t j = 0; j < row.size(); ++j) s += row[j] * mono[j];
    values[i] = s;
  }
}

double NumericLagrange::sum_squares(std::span<const double> x) const {
  std::vector<double> values;
  eval_all(x, values);
  double s = 0.0;
  for (double v : values) s += v * v;
  return s;
}

double NumericLagrange::norm_r(std::span<const double> x, double r) const {
  std::vector<double> values;
  eval_all(x, values);
  double s = 0.0;
  for (double v : values) {
    const double a = std::abs(v);
    if (a > 0.0) s += std::pow(a, r);
  }
  return std::pow(s, 1.0 / r);
}

double NumericLagrange::max_abs(std::span<const double> x) const {
  std::vector<double> values;
  eval_all(x, values);
  double s = 0.0;
  for (double v : values) s = std::max(s, std::abs(v));
  return s;
}

NumericLagrange numeric_lagrange_exact(int n, int d) {
  const LagrangeBasis basis = lagrange_closed_form(n, d);
  const ExactPointSet ps = fekete_candidate_exact(n, d);
  NumericLagrange out;
  out.degree = n;
  out.dim = d;
  out.basis = monomials_of_degree(n, d + 1);
  std::map<MultiIndex, size_t> index;
  for (size_t j = 0; j < out.basis.size(); ++j) index.emplace(out.basis[j], j);
  out.coeffs.reserve(basis.polys.size());
  for (const auto& poly : basis.polys) {
    std::vector<double> row(out.basis.size(), 0.0);
    for (const auto& [m, c] : poly.terms()) row[index.at(m)] = c.to_double();
    out.coeffs.push_back(std::move(row));
  }
  out.nodes.reserve(ps.points.size());
  for (const auto& pt : ps.points) {
    std::vector<double> x(pt.coords.size());
    for (size_t i = 0; i < x.size(); ++i) x[i] = pt.coords[i].to_double();
    out.nodes.push_back(std::move(x));
  }
  return out;
}

NumericLagrange numeric_lagrange(const NumericPointSet& ps, int n) {
  NumericLagrange out;
  out.degree = n;
  out.dim = ps.dim;
  out.basis = monomials_of_degree(n, ps.dim + 1);
  const size_t N = ps.points.size();
  if (out.basis.size() != N)
    throw std::invalid_argument("point count does not match the basis size");
  out.nodes.reserve(N);
  for (const auto& pt : ps.points) {
    std::vector<double> x(pt.coords.size());
    for (size_t i = 0; i < x.size(); ++i) x[i] = pt.coords[i].mid_double();
    out.nodes.push_back(std::move(x));
  }
  DenseMatrix<double> v(N, N, 0.0);
  std::vector<double> mono;
  for (size_t i = 0; i < N; ++i) {
    out.eval_monomials(out.nodes[i], mono);
    for (size_t j = 0; j < N; ++j) v.at(i, j) = mono[j];
  }
  const DenseMatrix<double> c = lu_solve(v, DenseMatrix<double>::identity(N));
  out.coeffs.assign(N, std::vector<double>(N, 0.0));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) out.coeffs[i][j] = c.at(j, i);
  return out;
}

void project_to_simplex(std::vector<double>& x) {
  // Euclidean projection: shift by the largest tau with sum(max(x-tau,0))=1.
  std::vector<double> u = x;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumulative = 0.0, tau = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    cumulative += u[i];
    const double t = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) tau = t;
  }
  double sum = 0.0;
  for (auto& xi : x) {
    xi = std::max(xi - tau, 0.0);
    sum += xi;
  }
  if (sum <= 0.0) {
    std::fill(x.begin(), x.end(), 1.0 / static_cast<double>(x.size()));
    return;
  }
  for (auto& xi : x) xi /= sum;
}

namespace {

struct AscentResult {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> argmax;
  long iterations = 0;
};

AscentResult ascend(const std::function<double(std::span<const double>)>& f,
                    std::vector<double> x, int max_iterations,
                    double value_tol) {
  const size_t nv = x.size();
  project_to_simplex(x);
  double fx = f(x);
  double step = 0.05;
  const double h = 1e-7;
  AscentResult res;
  std::vector<double> grad(nv, 0.0), trial(nv);
  long iter = 0;
  for (; iter < max_iterations; ++iter) {
    // Gradient along the simplex plane via central differences on the chart
    // directions e_i - e_last.
    std::vector<double> xp = x, xm = x;
    for (size_t i = 0; i + 1 < nv; ++i) {
      xp = x;
      xm = x;
      xp[i] += h;
      xp[nv - 1] -= h;
      xm[i] -= h;
      xm[nv - 1] += h;
      grad[i] = (f(xp) - f(xm)) / (2 * h);
    }
    grad[nv - 1] = 0.0;
    double gnorm = 0.0;
    for (size_t i = 0; i + 1 < nv; ++i) gnorm += grad[i] * grad[i];
    gnorm = std::sqrt(gnorm);
    if (gnorm < 1e-14) break;

    bool improved = false;
    while (step > 1e-15) {
      trial = x;
      for (size_t i = 0; i + 1 < nv; ++i) {
        trial[i] += step * grad[i] / gnorm;
        trial[nv - 1] -= step * grad[i] / gnorm;
      }
      project_to_simplex(trial);
      const double ft = f(trial);
      if (ft > fx) {
        improved = ft - fx > value_tol;
        x = trial;
        fx = ft;
        step *= 1.6;
        break;
      }
      step *= 0.5;
    }
    if (!improved && step <= 1e-15) break;
    if (!improved) {
      // keep shrinking until the quadratic cap is reached
      if (step < 1e-12) break;
    }
  }
  res.value = fx;
  res.argmax = std::move(x);
  res.iterations = iter;
  return res;
}

}  // namespace

SimplexMaxReport max_over_simplex(
    const std::function<double(std::span<const double>)>& f, int d,
    const MaxConfig& cfg) {
  const int nv = d + 1;
  std::vector<std::vector<double>> starts;
  for (const auto& x : face_barycentres(d)) {
    std::vector<double> xd(x.size());
    for (size_t i = 0; i < x.size(); ++i) xd[i] = x[i].get_d();
    starts.push_back(std::move(xd));
  }
  for (const auto& x : cfg.extra_starts)
    if (static_cast<int>(x.size()) == nv) starts.push_back(x);
  for (int s = 0; s < cfg.starts; ++s) {
    std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ULL +
                        static_cast<uint64_t>(s));
    std::exponential_distribution<double> expd(1.0);
    std::vector<double> x(static_cast<size_t>(nv));
    double total = 0.0;
    for (auto& xi : x) {
      xi = expd(rng) + 1e-12;
      total += xi;
    }
    for (auto& xi : x) xi /= total;
    starts.push_back(std::move(x));
  }

  SimplexMaxReport report;
  report.starts = static_cast<int>(starts.size());
  std::vector<AscentResult> results(starts.size());
  const int nthreads =
      std::max(1, std::min<int>(cfg.threads,
                                static_cast<int>(starts.size())));
  auto worker = [&](int tid) {
    for (size_t s = static_cast<size_t>(tid); s < starts.size();
         s += static_cast<size_t>(nthreads))
      results[s] = ascend(f, starts[s], cfg.max_iterations, cfg.value_tol);
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& r : results) {
    report.iterations += r.iterations;
    if (r.value > report.value) {
      report.value = r.value;
      report.argmax = r.argmax;
    }
  }
  return report;
}

FejerExponentResult fejer_exponent(const NumericLagrange& lag, double tol_r,
                                   MaxConfig cfg, double r_cap) {
  FejerExponentResult out;
  const int d = lag.dim;
  const double gtol = 1e-9;

  const SimplexMaxReport sup = max_over_simplex(
      [&](std::span<const double> x) { return lag.max_abs(x); }, d, cfg);
  out.linf_ok = sup.value <= 1.0 + 1e-8;
  if (!out.linf_ok) throw UndefinedExponentError();

  MaxConfig inner = cfg;
  auto eval_gap = [&](double r) {
    const SimplexMaxReport rep = max_over_simplex(
        [&](std::span<const double> x) { return lag.norm_r(x, r); }, d,
        inner);
    out.per_r.emplace_back(r, rep.value);
    if (!rep.argmax.empty()) {
      // warm-start subsequent searches near the current maximizer
      inner.extra_starts.push_back(rep.argmax);
      inner.starts = std::max(24, cfg.starts / 4);
    }
    return rep.value - 1.0;
  };

  if (eval_gap(2.0) <= gtol) {
    out.r = out.r_lo = out.r_hi = 2.0;
    return out;
  }
  double lo = 2.0, hi = 4.0;
  while (eval_gap(hi) > gtol) {
    lo = hi;
    hi *= 2.0;
    if (hi > r_cap) {
      out.r_lo = lo;
      out.r_hi = hi;
      out.r = lo;
      out.capped = true;
      return out;
    }
  }
  while (hi - lo > tol_r) {
    const double mid = 0.5 * (lo + hi);
    if (eval_gap(mid) > gtol) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.r_lo = lo;
  out.r_hi = hi;
  out.r = 0.5 * (lo + hi);
  return out;
}

// ---------------------------------------------------------------------------
// Degree-5 parameters

UniPoly deg5_parameter_poly() {
  return UniPoly({Rational(5), Rational(-235), Rational(4649),
                  Rational(-51415), Rational(354286), Rational(-1598001),
                  Rational(4800577), Rational(-9523289), Rational(11981963),
                  Rational(-8660340), Rational(2737800)});
}

namespace {

BaryPoly<Rational> bivariate_from_table(
    const std::vector<std::tuple<int, int, long>>& terms) {
  BaryPoly<Rational> p(2);
  for (const auto& [eu, ev, c] : terms)
    p.add_term(MultiIndex{eu, ev}, Rational(c));
  return p;
}

}  // namespace

BaryPoly<Rational> deg5_stationarity_q1() {
  return bivariate_from_table({{4, 0, 45},
                               {3, 1, 6},
                               {3, 0, -59},
                               {2, 2, -33},
                               {2, 1, 17},
                               {2, 0, 24},
                               {1, 2, 21},
                               {1, 1, -13},
                               {1, 0, -3},
                               {0, 2, -3},
                               {0, 1, 2}});
}

BaryPoly<Rational> deg5_stationarity_q2() {
  return bivariate_from_table({{2, 2, 33},
                               {2, 1, -21},
                               {2, 0, 3},
                               {1, 3, -6},
                               {1, 2, -17},
                               {1, 1, 13},
                               {1, 0, -2},
                               {0, 4, -45},
                               {0, 3, 59},
                               {0, 2, -24},
                               {0, 1, 3}});
}

double deg5_objective_p(double u, double v) {
  const double a = u - v;
  return a * a * a * std::pow(u, 6) * std::pow(v, 6) *
         std::pow(2 * u - 1, 3) * std::pow(2 * v - 1, 3) *
         std::pow(3 * u - 1, 2) * std::pow(3 * v - 1, 2) *
         (3 * (u + v) - 2);
}

namespace {

/// Exact bisection of a sign change of q on [lo, hi] down to width 2^-bits.
std::pair<Rational, Rational> bisect_root(const UniPoly& q, Rational lo,
                                          Rational hi, int bits) {
  int slo = sgn(q.eval(lo));
  const int shi = sgn(q.eval(hi));
  if (slo == 0) return {lo, lo};
  if (shi == 0) return {hi, hi};
  if (slo == shi) throw std::invalid_argument("no sign change on bracket");
  for (int it = 0; it < bits; ++it) {
    const Rational mid = (lo + hi) / 2;
    const int sm = sgn(q.eval(mid));
    if (sm == 0) return {mid, mid};
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

Interval interval_from_bounds(const std::pair<Rational, Rational>& b,
                              mpfr_prec_t prec) {
  return Interval::from_rational_bounds(b.first, b.second, prec);
}

}  // namespace

std::vector<Interval> deg5_parameter_roots(mpfr_prec_t prec) {
  const UniPoly q = deg5_parameter_poly();
  const int grid = 4096;
  std::vector<Interval> roots;
  Rational prev = rat(0);
  int sprev = sgn(q.eval(prev));
  for (int k = 1; k <= grid; ++k) {
    const Rational x = rat(k, grid);
    const int s = sgn(q.eval(x));
    if (s == 0) {
      roots.push_back(Interval::from_rational(x, prec));
    } else if (sprev != 0 && s != sprev) {
      roots.push_back(interval_from_bounds(
          bisect_root(q, prev, x, static_cast<int>(prec) + 16), prec));
    }
    prev = x;
    sprev = s;
  }
  return roots;
}

Deg5TwoFaceResult optimize_deg5_2face(mpfr_prec_t prec) {
  Deg5TwoFaceResult out;
  const std::vector<Interval> roots = deg5_parameter_roots(prec);
  out.roots_in_unit_interval = roots.size();

  const BaryPoly<Rational> q1 = deg5_stationarity_q1();
  const BaryPoly<Rational> q2 = deg5_stationarity_q2();

  double best = 0.0;
  int best_i = -1, best_j = -1;
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = 0; j < roots.size(); ++j) {
      if (i == j) continue;
      // the construction needs 1-2u and 1-2v nonnegative
      if (roots[i].hi_double() >= 0.5 || roots[j].hi_double() >= 0.5)
        continue;
      // stationarity filter: the pair must be a common zero of (q1, q2)
      std::vector<Interval> xi{roots[i], roots[j]};
      const Interval r1 = q1.map_scalars<Interval>([&](const Rational& c) {
                              return Interval::from_rational(c, prec);
                            }).eval(xi);
      const Interval r2 = q2.map_scalars<Interval>([&](const Rational& c) {
                              return Interval::from_rational(c, prec);
                            }).eval(xi);
      if (!r1.contains_zero() || !r2.contains_zero()) continue;
      const double val = std::abs(
          deg5_objective_p(roots[i].mid_double(), roots[j].mid_double()));
      if (val > best) {
        best = val;
        best_i = static_cast<int>(i);
        best_j = static_cast<int>(j);
      }
    }
  if (best_i < 0)
    throw std::runtime_error("no stationary root pair of q found");

  out.objective = best;
  out.params.u = roots[static_cast<size_t>(best_i)];
  out.params.v = roots[static_cast<size_t>(best_j)];
  out.params.w = Deg5Params::w_global();

  const std::vector<Interval> uv{out.params.u, out.params.v};
  auto to_interval = [&](const Rational& c) {
    return Interval::from_rational(c, prec);
  };
  const Interval b1 = q1.map_scalars<Interval>(to_interval).eval(uv);
  const Interval b2 = q2.map_scalars<Interval>(to_interval).eval(uv);
  out.q1_bound = std::max(std::abs(b1.lo_double()), std::abs(b1.hi_double()));
  out.q2_bound = std::max(std::abs(b2.lo_double()), std::abs(b2.hi_double()));

  // Collinearity diagnostic over the six interior points of the planar set.
  const double u = out.params.u.mid_double();
  const double v = out.params.v.mid_double();
  const std::vector<std::array<double, 3>> pts = {
      {1 - 2 * u, u, u}, {u, 1 - 2 * u, u}, {u, u, 1 - 2 * u},
      {1 - 2 * v, v, v}, {v, 1 - 2 * v, v}, {v, v, 1 - 2 * v}};
  double mindet = std::numeric_limits<double>::infinity();
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b)
      for (size_t c = b + 1; c < pts.size(); ++c) {
        const auto& p = pts[a];
        const auto& q = pts[b];
        const auto& r = pts[c];
        const double det = p[0] * (q[1] * r[2] - q[2] * r[1]) -
                           p[1] * (q[0] * r[2] - q[2] * r[0]) +
                           p[2] * (q[0] * r[1] - q[1] * r[0]);
        mindet = std::min(mindet, std::abs(det));
      }
  out.min_collinearity_det = mindet;
  return out;
}

UniPoly rederive_q_by_resultant() {
  const BaryPoly<Rational> q1 = deg5_stationarity_q1();
  const BaryPoly<Rational> q2 = deg5_stationarity_q2();
  // u-coefficient rows: coeff[k] is the UniPoly in v multiplying u^k.
  auto u_coeffs = [](const BaryPoly<Rational>& p, int degu) {
    std::vector<UniPoly> out(static_cast<size_t>(degu) + 1);
    std::vector<std::vector<Rational>> cs(static_cast<size_t>(degu) + 1);
    for (const auto& [m, c] : p.terms()) {
      auto& vec = cs[static_cast<size_t>(m[0])];
      if (vec.size() <= static_cast<size_t>(m[1]))
        vec.resize(static_cast<size_t>(m[1]) + 1, Rational(0));
      vec[static_cast<size_t>(m[1])] = c;
    }
    for (size_t k = 0; k < cs.size(); ++k) out[k] = UniPoly(std::move(cs[k]));
    return out;
  };
  const auto a = u_coeffs(q1, 4);  // degree 4 in u
  const auto b = u_coeffs(q2, 2);  // degree 2 in u
  const size_t m = 4, n = 2;
  std::vector<std::vector<UniPoly>> sylvester(
      m + n, std::vector<UniPoly>(m + n, UniPoly()));
  for (size_t r = 0; r < n; ++r)
    for (size_t k = 0; k <= m; ++k) sylvester[r][r + k] = a[m - k];
  for (size_t r = 0; r < m; ++r)
    for (size_t k = 0; k <= n; ++k) sylvester[n + r][r + k] = b[n - k];
  return det_by_minors(sylvester, UniPoly::constant(Rational(1)));
}

namespace {

AlgebraicScalar eval_unipoly(const UniPoly& p, const AlgebraicScalar& x) {
  AlgebraicScalar acc(0);
  for (int k = p.degree(); k >= 0; --k)
    acc = acc * x + AlgebraicScalar(p.coeff(k));
  return acc;
}

}  // namespace

Deg5ThreeFaceResult optimize_deg5_3face() {
  Deg5ThreeFaceResult out;
  out.w_global = Deg5Params::w_global();
  out.w_local = Deg5Params::w_local();

  // objective (w^3 (1-3w))^4 (1-4w)^3
  const UniPoly w = UniPoly::x();
  const UniPoly one = UniPoly::constant(Rational(1));
  const UniPoly three_w = UniPoly::term(Rational(3), 1);
  const UniPoly four_w = UniPoly::term(Rational(4), 1);
  const UniPoly objective =
      (w.pow(3) * (one - three_w)).pow(4) * (one - four_w).pow(3);

  // expected derivative 12 w^11 (1-3w)^3 (1-4w)^2 (19w^2 - 9w + 1)
  const UniPoly quad =
      UniPoly({Rational(1), Rational(-9), Rational(19)});
  const UniPoly expected = UniPoly::term(Rational(12), 11) *
                          (one - three_w).pow(3) * (one - four_w).pow(2) *
                          quad;
  out.derivative_identity_ok = (objective.derivative() == expected);

  out.quadratic_roots_ok =
      eval_unipoly(quad, out.w_global).is_zero() &&
      eval_unipoly(quad, out.w_local).is_zero();

  const AlgebraicScalar f_global = eval_unipoly(objective, out.w_global);
  const AlgebraicScalar f_local = eval_unipoly(objective, out.w_local);
  out.global_exceeds_local =
      (f_global * f_global - f_local * f_local).sign() > 0;
  return out;
}

DecouplingReport vdm_decoupling_check_deg5(int d) {
  DecouplingReport report;
  using PolyQ = BaryPoly<Rational>;
  if (d == 3) {
    // 4x4 matrix of the interior-point coordinates in the linear bubble
    // basis; variables: w.
    const UniPoly w = UniPoly::x();
    const UniPoly diag = UniPoly({Rational(1), Rational(-3)});  // 1 - 3w
    std::vector<std::vector<UniPoly>> m(4, std::vector<UniPoly>(4, w));
    for (int i = 0; i < 4; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = diag;
    const UniPoly det = det_by_minors(m, UniPoly::constant(Rational(1)));
    const UniPoly expected =
        (UniPoly::constant(Rational(1)) - UniPoly::term(Rational(4), 1))
            .pow(3);
    const auto [quot, rem] = det.divrem(expected);
    report.matches = rem.is_zero() && quot.degree() == 0;
    if (report.matches) report.constant = quot.coeff(0);
    return report;
  }
  if (d != 2) throw std::invalid_argument("decoupling check covers d = 2, 3");

  // 6x6 matrix: quadratic bubble basis evaluated at the six interior points,
  // after the common row factors are pulled out; variables (u, v).
  auto row_for = [](const PolyQ& a, const PolyQ& b, const PolyQ& c) {
    // q in {l1^2, l2^2, l3^2, l1 l2, l1 l3, l2 l3} at the point (a, b, c)
    return std::vector<PolyQ>{a * a, b * b, c * c, a * b, a * c, b * c};
  };
  const PolyQ u = PolyQ::variable(2, 0);
  const PolyQ v = PolyQ::variable(2, 1);
  const PolyQ one2 = PolyQ::constant(2, Rational(1));
  const PolyQ du = one2 - u.scaled(Rational(2));
  const PolyQ dv = one2 - v.scaled(Rational(2));
  std::vector<std::vector<PolyQ>> m;
  m.push_back(row_for(du, u, u));
  m.push_back(row_for(u, du, u));
  m.push_back(row_for(u, u, du));
  m.push_back(row_for(dv, v, v));
  m.push_back(row_for(v, dv, v));
  m.push_back(row_for(v, v, dv));
  const PolyQ det = det_by_minors(m, one2);

  const PolyQ three_u = u.scaled(Rational(3));
  const PolyQ three_v = v.scaled(Rational(3));
  const PolyQ expected = (u - v).pow(3) * (three_u - one2).pow(2) *
                         (three_v - one2).pow(2) *
                         ((u + v).scaled(Rational(3)) -
                          PolyQ::constant(2, Rational(2)));
  const PolyQ quotient = divide_exact(det, expected);
  report.matches = quotient.degree() == 0;
  if (report.matches && !quotient.is_zero())
    report.constant = quotient.terms().begin()->second;
  return report;
}

BruteForceReport brute_force_fekete_deg1(int grid) {
  if (grid < 3 || grid > 64)
    throw std::invalid_argument("grid out of supported range");
  const int g = grid - 1;  // coordinates 0..g summing to g
  std::vector<std::array<int, 3>> pts;
  for (int i = 0; i <= g; ++i)
    for (int j = 0; i + j <= g; ++j) pts.push_back({i, j, g - i - j});

  BruteForceReport report;
  const size_t np = pts.size();
  for (size_t a = 0; a < np; ++a)
    for (size_t b = a + 1; b < np; ++b) {
      const long d1 = static_cast<long>(pts[a][1]) * pts[b][2] -
                      static_cast<long>(pts[a][2]) * pts[b][1];
      const long d2 = static_cast<long>(pts[a][0]) * pts[b][2] -
                      static_cast<long>(pts[a][2]) * pts[b][0];
      const long d3 = static_cast<long>(pts[a][0]) * pts[b][1] -
                      static_cast<long>(pts[a][1]) * pts[b][0];
      for (size_t c = b + 1; c < np; ++c) {
        const long det = pts[c][0] * d1 - pts[c][1] * d2 + pts[c][2] * d3;
        const long along = std::labs(det);
        if (along > report.best_det_scaled) {
          report.best_det_scaled = along;
          report.best_triple = {pts[a], pts[b], pts[c]};
        }
      }
    }

  const long vertex_det = static_cast<long>(g) * g * g;
  report.vertices_win = (report.best_det_scaled == vertex_det);
  if (report.vertices_win) {
    for (const auto& pt : report.best_triple) {
      const int mx = *std::max_element(pt.begin(), pt.end());
      if (mx != g) report.vertices_win = false;
    }
  }
  // midpoint triple determinant is g^3/4
  report.midpoint_vertex_ratio = rat(1, 4);
  return report;
}

namespace {

DenseMatrix<Interval> interval_solve(DenseMatrix<Interval> a,
                                     DenseMatrix<Interval> b) {
  const size_t n = a.rows, m = b.cols;
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    double best = -1.0;
    for (size_t i = k; i < n; ++i) {
      if (a.at(i, k).contains_zero()) continue;
      const double mag = std::abs(a.at(i, k).mid_double());
      if (mag > best) {
        best = mag;
        pivot = i;
      }
    }
    if (best < 0.0) throw SingularMatrixError();
    if (pivot != k) {
      for (size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(k, j));
      for (size_t j = 0; j < m; ++j) std::swap(b.at(pivot, j), b.at(k, j));
    }
    for (size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k).is_exact_zero()) continue;
      const Interval f = a.at(i, k) / a.at(k, k);
      for (size_t j = k; j < n; ++j)
        a.at(i, j) = a.at(i, j) - f * a.at(k, j);
      for (size_t j = 0; j < m; ++j)
        b.at(i, j) = b.at(i, j) - f * b.at(k, j);
    }
  }
  for (size_t kk = n; kk-- > 0;) {
    for (size_t j = 0; j < m; ++j) {
      Interval s = b.at(kk, j);
      for (size_t c = kk + 1; c < n; ++c)
        s = s - a.at(kk, c) * b.at(c, j);
      b.at(kk, j) = s / a.at(kk, kk);
    }
  }
  return b;
}

}  // namespace

Interval deg5_kernel_centroid_enclosure(int d, const Deg5Params& params,
                                        mpfr_prec_t prec) {
  const NumericPointSet ps = fekete_candidate_numeric(5, d, params, prec);
  const auto basis = monomials_of_degree(5, d + 1);
  const size_t N = ps.points.size();
  DenseMatrix<Interval> vt(N, N, Interval::with_precision(prec));
  for (size_t i = 0; i < N; ++i) {
    // column i of V^t = monomials at node i
    for (size_t j = 0; j < N; ++j) {
      Interval val = Interval::from_rational(Rational(1), prec);
      for (size_t c = 0; c < ps.points[i].coords.size(); ++c)
        for (int k = 0; k < basis[j][c]; ++k)
          val = val * ps.points[i].coords[c];
      vt.at(j, i) = std::move(val);
    }
  }
  DenseMatrix<Interval> rhs(N, 1, Interval::with_precision(prec));
  const Interval cx = Interval::from_rational(rat(1, d + 1), prec);
  for (size_t j = 0; j < N; ++j) {
    Interval val = Interval::from_rational(Rational(1), prec);
    for (int k = 0; k < basis[j].degree(); ++k) val = val * cx;
    rhs.at(j, 0) = std::move(val);
  }
  const DenseMatrix<Interval> ell = interval_solve(vt, rhs);
  Interval total = Interval::with_precision(prec);
  for (size_t i = 0; i < N; ++i)
    total = total + ell.at(i, 0) * ell.at(i, 0);
  return total;
}

Deg5Params compute_deg5_params(mpfr_prec_t prec, bool local_w) {
  Deg5TwoFaceResult res = optimize_deg5_2face(prec);
  if (local_w) res.params.w = Deg5Params::w_local();
  return res.params;
}

}  // namespace fekete
