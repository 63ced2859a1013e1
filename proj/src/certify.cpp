#include "fekete/certify.hpp"

#include <chrono>

namespace fekete {

using A = AlgebraicScalar;
using PolyA = BaryPoly<A>;
using PolyQ = BaryPoly<Rational>;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

template <typename S>
FejerCertificate elevate_until_nonnegative(BaryPoly<S> g, int r_max,
                                           const char* method) {
  const auto t0 = std::chrono::steady_clock::now();
  FejerCertificate cert;
  cert.r_max = r_max;
  cert.method = method;
  for (int r = 0; r <= r_max; ++r) {
    const CoeffSignReport scan = g.min_coefficient_sign();
    if (scan.result == CoeffSignScan::all_nonnegative) {
      cert.status = CertStatus::certified;
      cert.elevation = r;
      cert.negative_witness.reset();
      cert.term_count = g.term_count();
      cert.wall_ms = ms_since(t0);
      return cert;
    }
    cert.negative_witness = scan.witness;
    if (r < r_max) g = g.elevate_once();
  }
  cert.status = CertStatus::inconclusive;
  cert.term_count = g.term_count();
  cert.wall_ms = ms_since(t0);
  return cert;
}

template <typename S>
FejerCertificate subsimplex_pipeline(const BaryPoly<S>& h, int r_max) {
  if (!h.is_homogeneous())
    throw std::invalid_argument("sub-simplex pipeline needs homogeneous input");
  const BaryPoly<S> hmu = h.substitute_subsimplex();
  const BaryPoly<S> g = hmu - hmu.restrict_last_var_zero();
  return elevate_until_nonnegative(g, r_max, "subsimplex-elevation");
}

/// Exact refutation scan: returns a rational point with defect < 0 when one
/// exists among the face barycentres.
std::optional<std::pair<std::vector<Rational>, A>> refutation_scan(
    const PolyA& defect, int d) {
  for (const auto& x : face_barycentres(d)) {
    std::vector<A> xa(x.size());
    for (size_t i = 0; i < x.size(); ++i) xa[i] = A(x[i]);
    const A val = defect.eval(xa);
    if (val.sign() < 0) return std::make_pair(x, val);
  }
  return std::nullopt;
}

FejerCertificate make_refuted(int n, int d, std::vector<Rational> point,
                              const A& defect_value) {
  FejerCertificate cert;
  cert.degree = n;
  cert.dim = d;
  cert.status = CertStatus::refuted;
  cert.method = "barycentre-refutation";
  cert.refutation_point = std::move(point);
  // kernel value = 1 - defect
  cert.refutation_value = (A(1) - defect_value).to_string();
  return cert;
}

FejerCertificate run_pipeline_with_scan(const PolyA& defect, int n, int d,
                                        int r_max) {
  // Cheap exact pre-check at the centroid, the violating point of the known
  // refuted cases.
  std::vector<A> centroid(static_cast<size_t>(d + 1), A(rat(1, d + 1)));
  const A at_centroid = defect.eval(centroid);
  if (at_centroid.sign() < 0)
    return make_refuted(n, d,
                        std::vector<Rational>(static_cast<size_t>(d + 1),
                                              rat(1, d + 1)),
                        at_centroid);

  FejerCertificate cert;
  if (auto rational = try_rational_poly(defect)) {
    cert = certify_on_subsimplex(*rational, r_max);
  } else {
    cert = certify_on_subsimplex(defect, r_max);
  }
  cert.degree = n;
  cert.dim = d;
  if (cert.status == CertStatus::inconclusive) {
    // Elevation positivity is only sufficient; look for an explicit witness
    // before reporting the gap.
    if (auto hit = refutation_scan(defect, d))
      return make_refuted(n, d, hit->first, hit->second);
  }
  return cert;
}

}  // namespace

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::certified:
      return "certified";
    case CertStatus::refuted:
      return "refuted";
    case CertStatus::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

BaryPoly<AlgebraicScalar> fejer_defect(const LagrangeBasis& basis, int n) {
  PolyA total = kernel_sum_powers(basis, 2);
  return PolyA::sum_of_variables(basis.dim + 1)
             .pow(static_cast<unsigned>(2 * n)) -
         total;
}

BaryPoly<AlgebraicScalar> fejer_defect_poly(int n, int d, KernelOptions opts) {
  const PolyA kernel = kernel_closed(n, d, opts);
  return PolyA::sum_of_variables(d + 1)
             .pow(static_cast<unsigned>(opts.power * n)) -
         kernel;
}

FejerCertificate certify_on_subsimplex(const BaryPoly<Rational>& h,
                                       int r_max) {
  return subsimplex_pipeline(h, r_max);
}

FejerCertificate certify_on_subsimplex(const BaryPoly<AlgebraicScalar>& h,
                                       int r_max) {
  return subsimplex_pipeline(h, r_max);
}

FejerCertificate certify_edge_base(int n) {
  const auto t0 = std::chrono::steady_clock::now();
  FejerCertificate cert;
  cert.degree = n;
  cert.dim = 1;
  cert.method = "edge-square-identity";
  cert.r_max = 0;

  const PolyA defect = fejer_defect_poly(n, 1);
  const auto rational = try_rational_poly(defect);
  if (!rational)
    throw std::logic_error("edge defect must have rational coefficients");

  // Fejer's identity: 1 - sum l_i^2 = c * l1 l2 * (P_n'(l2 - l1))^2 with a
  // positive rational constant c.
  const UniPoly dpn = UniPoly::legendre(n).derivative();
  const PolyQ b = homogenize_on_segment<Rational>(dpn, n - 1);
  const PolyQ witness =
      PolyQ::variable(2, 0) * PolyQ::variable(2, 1) * b * b;
  if (witness.is_zero() || rational->is_zero())
    throw std::logic_error("degenerate edge identity");
  const Rational c = rational->terms().begin()->second /
                     witness.terms().begin()->second;
  if (sgn(c) <= 0 || *rational != witness.scaled(c)) {
    cert.status = CertStatus::inconclusive;
    cert.wall_ms = ms_since(t0);
    return cert;
  }
  cert.status = CertStatus::certified;
  cert.elevation = 0;
  cert.term_count = rational->term_count();
  cert.wall_ms = ms_since(t0);
  return cert;
}

Deg3Dim2Decomposition deg3_dim2_decomposition(int r_max) {
  Deg3Dim2Decomposition out;
  const auto defect = try_rational_poly(fejer_defect_poly(3, 2));
  if (!defect)
    throw std::logic_error("degree-3 defect must be rational");
  out.defect = *defect;
  out.sub = out.defect.substitute_subsimplex();

  // Variables are (u, v, w) = (m1, m2, m3).
  const PolyQ u = PolyQ::variable(3, 0);
  const PolyQ v = PolyQ::variable(3, 1);
  const PolyQ w = PolyQ::variable(3, 2);
  out.quad_piece =
      (w.pow(4) * (u * u - u * v + v * v)).scaled(rat(262, 81));
  const PolyQ s = v * v - (u * v).scaled(Rational(3)) + u * u;
  out.square_piece = (u * v * s * s).scaled(Rational(12));

  const PolyQ remainder = out.sub - out.quad_piece - out.square_piece;
  out.bracket = divide_exact(remainder, w.scaled(rat(2, 27)));

  // The quadratic factor of quad_piece is a sum of squares:
  // 4(u^2 - uv + v^2) = (2v - u)^2 + 3u^2.
  const PolyQ quad = u * u - u * v + v * v;
  const PolyQ sos =
      (v.scaled(Rational(2)) - u).pow(2) + (u * u).scaled(Rational(3));
  if (quad.scaled(Rational(4)) != sos)
    throw std::logic_error("quadratic sum-of-squares identity failed");

  const FejerCertificate e_cert =
      elevate_until_nonnegative(out.bracket, r_max, "bracket-elevation");
  out.bracket_elevation =
      e_cert.status == CertStatus::certified ? e_cert.elevation : -1;
  return out;
}

FejerCertificate certify_deg3_dim2(int r_max) {
  const auto t0 = std::chrono::steady_clock::now();
  const Deg3Dim2Decomposition dec = deg3_dim2_decomposition(r_max);
  FejerCertificate cert;
  cert.degree = 3;
  cert.dim = 2;
  cert.method = "subtriangle-decomposition";
  cert.r_max = r_max;
  cert.term_count = dec.sub.term_count();
  if (dec.bracket_elevation >= 0) {
    cert.status = CertStatus::certified;
    cert.elevation = dec.bracket_elevation;
  } else {
    cert.status = CertStatus::inconclusive;
  }
  cert.wall_ms = ms_since(t0);
  return cert;
}

FejerCertificate certify_step(int n, int d, int r_max, KernelOptions opts) {
  if (r_max < 0) r_max = default_r_max(n);
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (d == 1) return certify_edge_base(n);
  if (n == 3 && d == 2 && !opts.exclude_face3_centroids && opts.power == 2)
    return certify_deg3_dim2(r_max);
  const PolyA defect = fejer_defect_poly(n, d, opts);
  FejerCertificate cert = run_pipeline_with_scan(defect, n, d, r_max);
  if (opts.exclude_face3_centroids) cert.method += " (partial kernel)";
  if (opts.power != 2) cert.method += " (power " + std::to_string(opts.power) + ")";
  return cert;
}

std::vector<FejerCertificate> certify_fejer(int n, int d, int r_max) {
  std::vector<FejerCertificate> chain;
  chain.reserve(static_cast<size_t>(d));
  for (int dd = 1; dd <= d; ++dd) chain.push_back(certify_step(n, dd, r_max));
  return chain;
}

FejerCertificate certify_deg4_partial_sum(int d, int r_max) {
  if (d < 3)
    throw std::invalid_argument("partial-sum certificate needs d >= 3");
  KernelOptions opts;
  opts.exclude_face3_centroids = true;
  return certify_step(4, d, r_max < 0 ? default_r_max(4) : r_max, opts);
}

FejerCertificate certify_am_gm_3face(int r_max) {
  // (x+y+z+w)^4 - 256 xyzw >= 0. Elevation cannot settle this one: the
  // polynomial vanishes at the centroid, and after the sub-simplex move the
  // coefficient of m1 m2 m4^{2+r} stays -4 for every r. Certify instead by
  // the exact two-step mean-inequality decomposition, with A = x+y, B = z+w:
  //   (A+B)^4 - 256 xyzw = (A-B)^2 ((A+B)^2 + 4AB)
  //                        + 16 (x-y)^2 (z-w)^2
  //                        + 64 zw (x-y)^2 + 64 xy (z-w)^2,
  // a sum of squares times nonnegative-coefficient factors.
  const auto t0 = std::chrono::steady_clock::now();
  PolyQ prod = PolyQ::constant(4, Rational(256));
  for (int i = 0; i < 4; ++i) prod = prod * PolyQ::variable(4, i);
  const PolyQ h = PolyQ::sum_of_variables(4).pow(4) - prod;

  FejerCertificate cert = certify_on_subsimplex(h, r_max);
  cert.degree = 4;
  cert.dim = 3;
  if (cert.status == CertStatus::certified) {
    cert.method = "am-gm-subsimplex";
    return cert;
  }

  const PolyQ x = PolyQ::variable(4, 0), y = PolyQ::variable(4, 1);
  const PolyQ z = PolyQ::variable(4, 2), w = PolyQ::variable(4, 3);
  const PolyQ a = x + y, b = z + w;
  const PolyQ outer_factor = (a + b).pow(2) + (a * b).scaled(Rational(4));
  const PolyQ decomposition =
      (a - b).pow(2) * outer_factor +
      ((x - y).pow(2) * (z - w).pow(2)).scaled(Rational(16)) +
      (z * w * (x - y).pow(2)).scaled(Rational(64)) +
      (x * y * (z - w).pow(2)).scaled(Rational(64));
  const bool identity_ok = (decomposition == h);
  const bool factor_ok = outer_factor.min_coefficient_sign().result ==
                         CoeffSignScan::all_nonnegative;
  cert.status = (identity_ok && factor_ok) ? CertStatus::certified
                                           : CertStatus::inconclusive;
  cert.method = "am-gm-product-decomposition";
  cert.elevation = 0;
  cert.term_count = h.term_count();
  cert.wall_ms = ms_since(t0);
  return cert;
}

FejerCertificate certify_fourth_power(int d, int r_max) {
  KernelOptions opts;
  opts.power = 4;
  if (d == 1) {
    const auto t0 = std::chrono::steady_clock::now();
    FejerCertificate cert;
    cert.degree = 4;
    cert.dim = 1;
    cert.method = "node-factor-elevation";
    cert.r_max = r_max;
    const auto defect = try_rational_poly(fejer_defect_poly(4, 1, opts));
    if (!defect)
      throw std::logic_error("edge fourth-power defect must be rational");
    // Each interior node is a double zero; divide out the squared rational
    // node factors x^2 (x^2 - 3/7)^2 (homogenized) and elevate the quotient.
    const PolyQ x = PolyQ::variable(2, 1) - PolyQ::variable(2, 0);
    const PolyQ sum2 = PolyQ::sum_of_variables(2).pow(2);
    const PolyQ factor = x * x * (x * x - sum2.scaled(rat(3, 7))).pow(2);
    const PolyQ quotient = divide_exact(*defect, factor);
    cert = elevate_until_nonnegative(quotient, r_max, "node-factor-elevation");
    cert.degree = 4;
    cert.dim = 1;
    cert.wall_ms = ms_since(t0);
    return cert;
  }
  return certify_step(4, d, r_max, opts);
}

}  // namespace fekete
