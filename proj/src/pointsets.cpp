#include "fekete/pointsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace fekete {

namespace {

/// One interior node of a face-level construction, in local coordinates of
/// a face of dimension k (k+1 coordinates), plus its role order.
template <typename S>
struct LocalPoint {
  std::vector<S> coords;
  std::vector<int> role;
};

template <typename S>
struct InteriorFamily {
  int face_dim = 0;
  int variant = 0;
  std::vector<LocalPoint<S>> points;
};

AlgebraicScalar half() { return AlgebraicScalar(rat(1, 2)); }

/// The larger barycentric weight of the interior edge nodes (degrees 2..4).
AlgebraicScalar big_edge_weight_exact(int n) {
  switch (n) {
    case 2:
      return half();
    case 3:
      // t = (1 + 1/sqrt5)/2 = (5 + sqrt5)/10.
      return AlgebraicScalar::of(rat(1, 2), rat(1, 10), Rational(0),
                                 Rational(0));
    case 4:
      // (1 + sqrt(3/7))/2 with sqrt(3/7) = sqrt21/7.
      return AlgebraicScalar::of(rat(1, 2), Rational(0), rat(1, 14),
                                 Rational(0));
    default:
      throw std::invalid_argument("no exact edge nodes for this degree");
  }
}

template <typename S>
LocalPoint<S> make_point(std::vector<S> coords, std::vector<int> role) {
  return LocalPoint<S>{std::move(coords), std::move(role)};
}

/// Edge family for an asymmetric node weight: both orientations are
/// generated, tagged with ordered roles (the role-leading vertex carries the
/// smaller weight).
template <typename S>
InteriorFamily<S> edge_family(const S& big_weight, const S& one, int variant) {
  const S small_weight = one - big_weight;
  InteriorFamily<S> fam;
  fam.face_dim = 1;
  fam.variant = variant;
  fam.points.push_back(make_point<S>({small_weight, big_weight}, {0, 1}));
  fam.points.push_back(make_point<S>({big_weight, small_weight}, {1, 0}));
  return fam;
}

template <typename S>
InteriorFamily<S> midpoint_family(const S& one_half, int variant) {
  InteriorFamily<S> fam;
  fam.face_dim = 1;
  fam.variant = variant;
  fam.points.push_back(make_point<S>({one_half, one_half}, {0, 1}));
  return fam;
}

/// Symmetric "apex" family on a k-face: coordinate `apex` at one slot and
/// `rest` elsewhere, one point per slot.
template <typename S>
InteriorFamily<S> apex_family(int face_dim, int variant, const S& apex,
                              const S& rest) {
  InteriorFamily<S> fam;
  fam.face_dim = face_dim;
  fam.variant = variant;
  const int m = face_dim + 1;
  for (int p = 0; p < m; ++p) {
    std::vector<S> coords(static_cast<size_t>(m), rest);
    coords[static_cast<size_t>(p)] = apex;
    std::vector<int> role{p};
    for (int q = 0; q < m; ++q)
      if (q != p) role.push_back(q);
    fam.points.push_back(make_point<S>(std::move(coords), std::move(role)));
  }
  return fam;
}

template <typename S>
InteriorFamily<S> centroid_family(int face_dim, const S& weight) {
  InteriorFamily<S> fam;
  fam.face_dim = face_dim;
  fam.variant = 0;
  const int m = face_dim + 1;
  std::vector<S> coords(static_cast<size_t>(m), weight);
  std::vector<int> role(static_cast<size_t>(m));
  for (int q = 0; q < m; ++q) role[static_cast<size_t>(q)] = q;
  fam.points.push_back(make_point<S>(std::move(coords), std::move(role)));
  return fam;
}

std::vector<InteriorFamily<AlgebraicScalar>> interior_families_exact(int n) {
  using A = AlgebraicScalar;
  std::vector<InteriorFamily<A>> fams;
  switch (n) {
    case 1:
      break;
    case 2:
      fams.push_back(midpoint_family<A>(half(), 0));
      break;
    case 3: {
      fams.push_back(edge_family<A>(big_edge_weight_exact(3), A(1), 0));
      fams.push_back(centroid_family<A>(2, A(rat(1, 3))));
      break;
    }
    case 4: {
      fams.push_back(edge_family<A>(big_edge_weight_exact(4), A(1), 0));
      fams.push_back(midpoint_family<A>(half(), 1));
      const A apex = A::of(rat(4, 11), rat(1, 11), Rational(0), Rational(0));
      const A rest = A::of(rat(7, 22), rat(-1, 22), Rational(0), Rational(0));
      fams.push_back(apex_family<A>(2, 0, apex, rest));
      fams.push_back(centroid_family<A>(3, A(rat(1, 4))));
      break;
    }
    default:
      throw std::invalid_argument("exact construction covers degrees 1..4");
  }
  return fams;
}

std::vector<InteriorFamily<Interval>> interior_families_deg5(
    const Deg5Params& params, mpfr_prec_t prec) {
  using I = Interval;
  std::vector<InteriorFamily<I>> fams;

  // Edge nodes: z = sqrt((7 -+ 2 sqrt7)/21), weights (1 +- z)/2.
  const I seven = I::from_rational(Rational(7), prec);
  const I sqrt7 = I::sqrt_of_ui(7, prec);
  const I two = I::from_rational(Rational(2), prec);
  const I twenty_one = I::from_rational(Rational(21), prec);
  const I one = I::from_rational(Rational(1), prec);
  const I half_i = I::from_rational(rat(1, 2), prec);
  for (int variant = 0; variant < 2; ++variant) {
    const I radicand =
        (variant == 0 ? (seven - two * sqrt7) : (seven + two * sqrt7)) /
        twenty_one;
    const I z = radicand.sqrt();
    fams.push_back(edge_family<I>((one + z) * half_i, one, variant));
  }

  // 2-face interior: apex weight 1-2u (resp. 1-2v) against u (resp. v).
  fams.push_back(apex_family<I>(2, 0, one - two * params.u, params.u));
  fams.push_back(apex_family<I>(2, 1, one - two * params.v, params.v));

  // 3-face interior: apex weight 1-3w against w.
  const I w = params.w.enclose(prec);
  const I three = I::from_rational(Rational(3), prec);
  fams.push_back(apex_family<I>(3, 0, one - three * w, w));

  // 4-face centroid.
  fams.push_back(centroid_family<I>(4, I::from_rational(rat(1, 5), prec)));
  return fams;
}

/// Enumerate all sorted (k+1)-subsets of {0..d} and embed each family point.
template <typename S>
void embed_families(const std::vector<InteriorFamily<S>>& fams, int d,
                    const S& zero, PointSet<S>& out) {
  for (const auto& fam : fams) {
    if (fam.face_dim > d) continue;
    const int m = fam.face_dim + 1;
    std::vector<int> subset(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) subset[static_cast<size_t>(i)] = i;
    while (true) {
      for (const auto& lp : fam.points) {
        BaryPoint<S> pt;
        pt.coords.assign(static_cast<size_t>(d + 1), zero);
        for (int i = 0; i < m; ++i)
          pt.coords[static_cast<size_t>(subset[static_cast<size_t>(i)])] =
              lp.coords[static_cast<size_t>(i)];
        pt.face = subset;
        pt.tag.face_dim = fam.face_dim;
        pt.tag.variant = fam.variant;
        pt.tag.ordered.reserve(lp.role.size());
        for (int r : lp.role)
          pt.tag.ordered.push_back(subset[static_cast<size_t>(r)]);
        out.points.push_back(std::move(pt));
      }
      int i = m - 1;
      while (i >= 0 && subset[static_cast<size_t>(i)] == d - (m - 1 - i)) --i;
      if (i < 0) break;
      ++subset[static_cast<size_t>(i)];
      for (int j = i + 1; j < m; ++j)
        subset[static_cast<size_t>(j)] =
            subset[static_cast<size_t>(j - 1)] + 1;
    }
  }
}

template <typename S>
void add_vertices(int d, const S& zero, const S& one, PointSet<S>& out) {
  for (int i = 0; i <= d; ++i) {
    BaryPoint<S> pt;
    pt.coords.assign(static_cast<size_t>(d + 1), zero);
    pt.coords[static_cast<size_t>(i)] = one;
    pt.face = {i};
    pt.tag.face_dim = 0;
    pt.tag.variant = 0;
    pt.tag.ordered = {i};
    out.points.push_back(std::move(pt));
  }
}

void validate_exact_point(const BaryPoint<AlgebraicScalar>& pt) {
  AlgebraicScalar total(0);
  for (const auto& c : pt.coords) {
    if (c.sign() < 0) throw std::logic_error("negative barycentric coordinate");
    total += c;
  }
  if (total != AlgebraicScalar(1))
    throw std::logic_error("coordinates do not sum to 1");
}

void validate_numeric_point(const BaryPoint<Interval>& pt) {
  Interval total = Interval::with_precision(pt.coords.front().precision());
  for (const auto& c : pt.coords) {
    const auto s = c.definite_sign();
    if (s.has_value() && *s < 0)
      throw std::logic_error("negative barycentric coordinate");
    total += c;
  }
  if (!total.contains(Rational(1)))
    throw std::logic_error("coordinate enclosures exclude sum 1");
}

}  // namespace

Deg5Params Deg5Params::seeded(mpfr_prec_t prec) {
  Deg5Params p{Interval::with_precision(prec), Interval::with_precision(prec), w_global()};
  // 15-digit reference roots of the degree-10 parameter polynomial, widened
  // to safe enclosures; the search module refines these.
  const Rational scale = pow_rational(Rational(10), 15);
  p.u = Interval::from_rational_bounds(
      Rational(Rational(148019471315134L - 10) / scale),
      Rational(Rational(148019471315134L + 10) / scale), prec);
  p.v = Interval::from_rational_bounds(
      Rational(Rational(420825539292557L - 10) / scale),
      Rational(Rational(420825539292557L + 10) / scale), prec);
  return p;
}

AlgebraicScalar Deg5Params::w_global() {
  return AlgebraicScalar::of(rat(9, 38), rat(-1, 38), Rational(0),
                             Rational(0));
}

AlgebraicScalar Deg5Params::w_local() {
  return AlgebraicScalar::of(rat(9, 38), rat(1, 38), Rational(0), Rational(0));
}

mpz_class cardinality(int n, int d) {
  if (n < 0 || d < 0) throw std::invalid_argument("cardinality: negative arg");
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n + d),
               static_cast<unsigned long>(d));
  return z;
}

std::vector<std::array<AlgebraicScalar, 2>> edge_nodes_exact(int n) {
  if (n < 1) throw std::invalid_argument("edge_nodes: degree must be >= 1");
  if (n > 4)
    throw std::invalid_argument(
        "edge_nodes_exact: nodes leave the quadratic tower beyond degree 4");
  std::vector<std::array<AlgebraicScalar, 2>> nodes;
  nodes.push_back({AlgebraicScalar(1), AlgebraicScalar(0)});
  if (n >= 2) {
    const AlgebraicScalar b = big_edge_weight_exact(n);
    const AlgebraicScalar a = AlgebraicScalar(1) - b;
    if (n == 2) {
      nodes.push_back({b, a});
    } else if (n == 3) {
      nodes.push_back({b, a});
      nodes.push_back({a, b});
    } else {
      nodes.push_back({b, a});
      nodes.push_back({AlgebraicScalar(rat(1, 2)), AlgebraicScalar(rat(1, 2))});
      nodes.push_back({a, b});
    }
  }
  nodes.push_back({AlgebraicScalar(0), AlgebraicScalar(1)});
  return nodes;
}

std::vector<std::array<Interval, 2>> edge_nodes_numeric(int n,
                                                        mpfr_prec_t prec) {
  if (n < 1) throw std::invalid_argument("edge_nodes: degree must be >= 1");
  std::vector<std::array<Interval, 2>> nodes;
  if (n <= 4) {
    for (const auto& node : edge_nodes_exact(n))
      nodes.push_back({node[0].enclose(prec), node[1].enclose(prec)});
    return nodes;
  }
  if (n != 5)
    throw std::invalid_argument("edge nodes implemented for degrees 1..5");
  const Interval one = Interval::from_rational(Rational(1), prec);
  const Interval half_i = Interval::from_rational(rat(1, 2), prec);
  const Interval seven = Interval::from_rational(Rational(7), prec);
  const Interval two = Interval::from_rational(Rational(2), prec);
  const Interval twenty_one = Interval::from_rational(Rational(21), prec);
  const Interval sqrt7 = Interval::sqrt_of_ui(7, prec);
  nodes.push_back({one, Interval::with_precision(prec)});
  for (const Interval& z : {((seven + two * sqrt7) / twenty_one).sqrt(),
                            ((seven - two * sqrt7) / twenty_one).sqrt()}) {
    nodes.push_back({(one + z) * half_i, (one - z) * half_i});
    nodes.push_back({(one - z) * half_i, (one + z) * half_i});
  }
  nodes.push_back({Interval::with_precision(prec), one});
  return nodes;
}

ExactPointSet fekete_candidate_exact(int n, int d) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (n < 1 || n > 5)
    throw std::invalid_argument("candidate sets are defined for degrees 1..5");
  if (n == 5)
    throw std::invalid_argument(
        "degree 5 has no closed-form coordinates; use the numeric "
        "construction");
  ExactPointSet out;
  out.degree = n;
  out.dim = d;
  add_vertices<AlgebraicScalar>(d, AlgebraicScalar(0), AlgebraicScalar(1),
                                out);
  embed_families(interior_families_exact(n), d, AlgebraicScalar(0), out);
  if (mpz_class(static_cast<long>(out.points.size())) != cardinality(n, d))
    throw std::logic_error("construction cardinality mismatch");
  for (const auto& pt : out.points) validate_exact_point(pt);
  return out;
}

NumericPointSet fekete_candidate_numeric(int n, int d,
                                         const Deg5Params& params,
                                         mpfr_prec_t prec) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (n < 1 || n > 5)
    throw std::invalid_argument("candidate sets are defined for degrees 1..5");
  NumericPointSet out;
  out.degree = n;
  out.dim = d;
  if (n <= 4) {
    const ExactPointSet exact = fekete_candidate_exact(n, d);
    out.points.reserve(exact.points.size());
    for (const auto& pt : exact.points) {
      BaryPoint<Interval> np;
      np.face = pt.face;
      np.tag = pt.tag;
      np.coords.reserve(pt.coords.size());
      for (const auto& c : pt.coords) np.coords.push_back(c.enclose(prec));
      out.points.push_back(std::move(np));
    }
    return out;
  }
  const Interval zero = Interval::with_precision(prec);
  const Interval one = Interval::from_rational(Rational(1), prec);
  add_vertices<Interval>(d, zero, one, out);
  embed_families(interior_families_deg5(params, prec), d, zero, out);
  if (mpz_class(static_cast<long>(out.points.size())) != cardinality(n, d))
    throw std::logic_error("construction cardinality mismatch");
  for (const auto& pt : out.points) validate_numeric_point(pt);
  return out;
}

template <typename S>
PointSet<S> restrict_to_face(const PointSet<S>& ps,
                             const std::vector<int>& face) {
  std::vector<int> position(static_cast<size_t>(ps.dim + 1), -1);
  for (size_t i = 0; i < face.size(); ++i)
    position[static_cast<size_t>(face[i])] = static_cast<int>(i);

  PointSet<S> out;
  out.degree = ps.degree;
  out.dim = static_cast<int>(face.size()) - 1;
  for (const auto& pt : ps.points) {
    const bool inside =
        std::all_of(pt.face.begin(), pt.face.end(), [&](int v) {
          return position[static_cast<size_t>(v)] >= 0;
        });
    if (!inside) continue;
    BaryPoint<S> np;
    np.coords.reserve(face.size());
    for (int v : face) np.coords.push_back(pt.coords[static_cast<size_t>(v)]);
    for (int v : pt.face) np.face.push_back(position[static_cast<size_t>(v)]);
    std::sort(np.face.begin(), np.face.end());
    np.tag.face_dim = pt.tag.face_dim;
    np.tag.variant = pt.tag.variant;
    for (int v : pt.tag.ordered)
      np.tag.ordered.push_back(position[static_cast<size_t>(v)]);
    out.points.push_back(std::move(np));
  }
  return out;
}

template PointSet<AlgebraicScalar> restrict_to_face(
    const PointSet<AlgebraicScalar>&, const std::vector<int>&);
template PointSet<Interval> restrict_to_face(const PointSet<Interval>&,
                                             const std::vector<int>&);

int scalar_order(const Rational& a, const Rational& b) { return cmp(a, b); }

int scalar_order(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  if (int c = cmp(a.c0, b.c0); c != 0) return c;
  if (int c = cmp(a.c1, b.c1); c != 0) return c;
  if (int c = cmp(a.c2, b.c2); c != 0) return c;
  return cmp(a.c3, b.c3);
}

int scalar_order(const Interval& a, const Interval& b) {
  const double alo = a.lo_double(), blo = b.lo_double();
  if (alo != blo) return alo < blo ? -1 : 1;
  const double ahi = a.hi_double(), bhi = b.hi_double();
  if (ahi != bhi) return ahi < bhi ? -1 : 1;
  return 0;
}

namespace {

template <typename S>
bool same_points_impl(const PointSet<S>& a, const PointSet<S>& b,
                      bool (*coords_equal)(const std::vector<S>&,
                                           const std::vector<S>&)) {
  if (a.dim != b.dim || a.points.size() != b.points.size()) return false;
  auto key_less = [](const BaryPoint<S>& x, const BaryPoint<S>& y) {
    for (size_t i = 0; i < x.coords.size(); ++i) {
      const int c = scalar_order(x.coords[i], y.coords[i]);
      if (c != 0) return c < 0;
    }
    return false;
  };
  std::vector<BaryPoint<S>> sa = a.points;
  std::vector<BaryPoint<S>> sb = b.points;
  std::sort(sa.begin(), sa.end(), key_less);
  std::sort(sb.begin(), sb.end(), key_less);
  for (size_t i = 0; i < sa.size(); ++i)
    if (!coords_equal(sa[i].coords, sb[i].coords)) return false;
  return true;
}

bool exact_coords_equal(const std::vector<AlgebraicScalar>& x,
                        const std::vector<AlgebraicScalar>& y) {
  return x == y;
}

bool numeric_coords_equal(const std::vector<Interval>& x,
                          const std::vector<Interval>& y) {
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].same_endpoints(y[i])) return false;
  return true;
}

}  // namespace

bool same_point_set(const ExactPointSet& a, const ExactPointSet& b) {
  return same_points_impl<AlgebraicScalar>(a, b, exact_coords_equal);
}

bool same_point_set(const NumericPointSet& a, const NumericPointSet& b) {
  return same_points_impl<Interval>(a, b, numeric_coords_equal);
}

}  // namespace fekete
