#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fekete/certify.hpp"

using namespace fekete;
using A = AlgebraicScalar;
using PolyQ = BaryPoly<Rational>;
using PolyA = BaryPoly<A>;

namespace {

PolyQ poly_from_table(int nvars,
                      const std::vector<std::pair<MultiIndex, long>>& terms) {
  PolyQ p(nvars);
  for (const auto& [m, c] : terms) p.add_term(m, Rational(c));
  return p;
}

// 1 - K3 in the plane, as displayed (x, y, z) = (l1, l2, l3).
PolyQ reference_h_xyz() {
  return poly_from_table(
      3, {{{0, 1, 5}, 12},  {{1, 0, 5}, 12},  {{0, 2, 4}, -72},
          {{1, 1, 4}, 6},   {{2, 0, 4}, -72}, {{0, 3, 3}, 132},
          {{1, 2, 3}, 128}, {{2, 1, 3}, 128}, {{3, 0, 3}, 132},
          {{0, 4, 2}, -72}, {{1, 3, 2}, 128}, {{2, 2, 2}, -822},
          {{3, 1, 2}, 128}, {{4, 0, 2}, -72}, {{0, 5, 1}, 12},
          {{1, 4, 1}, 6},   {{2, 3, 1}, 128}, {{3, 2, 1}, 128},
          {{4, 1, 1}, 6},   {{5, 0, 1}, 12},  {{1, 5, 0}, 12},
          {{2, 4, 0}, -72}, {{3, 3, 0}, 132}, {{4, 2, 0}, -72},
          {{5, 1, 0}, 12}});
}

// (81/2) H(u,v,w) on the sub-triangle, as displayed.
PolyQ reference_h_uvw_scaled() {
  return poly_from_table(
      3, {{{0, 2, 4}, 131},   {{1, 1, 4}, -131},  {{2, 0, 4}, 131},
          {{0, 3, 3}, 312},   {{1, 2, 3}, 318},   {{2, 1, 3}, 318},
          {{3, 0, 3}, 312},   {{0, 4, 2}, -81},   {{1, 3, 2}, 1566},
          {{2, 2, 2}, 1215},  {{3, 1, 2}, 1566},  {{4, 0, 2}, -81},
          {{0, 5, 1}, 324},   {{1, 4, 1}, -1053}, {{2, 3, 1}, 3186},
          {{3, 2, 1}, 3186},  {{4, 1, 1}, -1053}, {{5, 0, 1}, 324},
          {{1, 5, 0}, 486},   {{2, 4, 0}, -2916}, {{3, 3, 0}, 5346},
          {{4, 2, 0}, -2916}, {{5, 1, 0}, 486}});
}

// The bracket E of the decomposition, as displayed.
PolyQ reference_bracket_e() {
  return poly_from_table(
      3, {{{0, 3, 2}, 104}, {{1, 2, 2}, 106},  {{2, 1, 2}, 106},
          {{3, 0, 2}, 104}, {{0, 4, 1}, -27},  {{1, 3, 1}, 522},
          {{2, 2, 1}, 405}, {{3, 1, 1}, 522},  {{4, 0, 1}, -27},
          {{0, 5, 0}, 108}, {{1, 4, 0}, -351}, {{2, 3, 0}, 1062},
          {{3, 2, 0}, 1062}, {{4, 1, 0}, -351}, {{5, 0, 0}, 108}});
}

}  // namespace

TEST_CASE("degree-1 defect is twice the sum of off-diagonal products") {
  const auto defect = try_rational_poly(fejer_defect_poly(1, 3));
  REQUIRE(defect.has_value());
  PolyQ expected(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      MultiIndex m(4);
      m.set(i, 1);
      m.set(j, 1);
      expected.add_term(std::move(m), Rational(2));
    }
  CHECK(*defect == expected);
  CHECK(defect->min_coefficient_sign().result ==
        CoeffSignScan::all_nonnegative);
}

TEST_CASE("degree-2 defect equals the power-sum expression") {
  for (int d = 2; d <= 6; ++d) {
    const int nv = d + 1;
    const auto defect = try_rational_poly(fejer_defect_poly(2, d));
    REQUIRE(defect.has_value());
    const PolyQ p1 = power_sum<Rational>(1, nv);
    const PolyQ p2 = power_sum<Rational>(2, nv);
    const PolyQ p3 = power_sum<Rational>(3, nv);
    const PolyQ p4 = power_sum<Rational>(4, nv);
    const PolyQ expr = p1.pow(4) + p4.scaled(Rational(4)) +
                       (p1 * p3).scaled(Rational(4)) - p1 * p1 * p2 -
                       (p2 * p2).scaled(Rational(8));
    CHECK(*defect == expr);
  }
}

TEST_CASE("degree-2 defect equals the explicit nonnegative decomposition") {
  for (int d = 2; d <= 6; ++d) {
    const int nv = d + 1;
    const auto defect = try_rational_poly(fejer_defect_poly(2, d));
    REQUIRE(defect.has_value());
    PolyQ decomposition(nv);
    auto lam = [&](int i) { return PolyQ::variable(nv, i); };
    for (int j = 0; j < nv; ++j)
      for (int k = j + 1; k < nv; ++k)
        decomposition +=
            (lam(j) * lam(k) * (lam(j) - lam(k)).pow(2)).scaled(Rational(6));
    for (int i = 0; i < nv; ++i)
      for (int j = i + 1; j < nv; ++j)
        for (int k = j + 1; k < nv; ++k)
          decomposition += (lam(i) * lam(j) * lam(k) *
                            (lam(i) + lam(j) + lam(k)))
                               .scaled(Rational(10));
    for (int i = 0; i < nv; ++i)
      for (int j = i + 1; j < nv; ++j)
        for (int k = j + 1; k < nv; ++k)
          for (int m = k + 1; m < nv; ++m)
            decomposition +=
                (lam(i) * lam(j) * lam(k) * lam(m)).scaled(Rational(24));
    CHECK(*defect == decomposition);
  }
}

TEST_CASE("defect vanishes at every interpolation node") {
  for (int n = 1; n <= 4; ++n) {
    const int d = 3;
    const PolyA defect = fejer_defect_poly(n, d);
    const auto ps = fekete_candidate_exact(n, d);
    for (const auto& pt : ps.points)
      CHECK(defect.eval(pt.coords).is_zero());
  }
}

TEST_CASE("fejer_defect from an explicit basis matches the closed route") {
  const auto ps = fekete_candidate_exact(3, 3);
  const auto basis = lagrange_solve(ps, 3);
  CHECK(fejer_defect(basis, 3) == fejer_defect_poly(3, 3));
}

TEST_CASE("deg-3 planar defect matches the reference display") {
  const auto defect = try_rational_poly(fejer_defect_poly(3, 2));
  REQUIRE(defect.has_value());
  CHECK(*defect == reference_h_xyz());
  // zero at the barycentre
  const std::vector<Rational> centroid(3, rat(1, 3));
  CHECK(defect->eval(centroid) == Rational(0));
}

TEST_CASE("sub-triangle substitution matches the reference display") {
  const auto dec = deg3_dim2_decomposition();
  CHECK(dec.sub == reference_h_uvw_scaled().scaled(rat(2, 81)));
  // the -131 u v w^4 term, scaled by 2/81
  const auto report = dec.sub.min_coefficient_sign();
  CHECK(report.result == CoeffSignScan::has_negative);
  CHECK(*dec.sub.coefficient(MultiIndex{1, 1, 4}) == rat(-262, 81));
}

TEST_CASE("sub-triangle decomposition reproduces the reference bracket") {
  const auto dec = deg3_dim2_decomposition();
  CHECK(dec.bracket == reference_bracket_e());
  CHECK(dec.sub == dec.quad_piece + dec.square_piece +
                       (BaryPoly<Rational>::variable(3, 2) * dec.bracket)
                           .scaled(rat(2, 27)));
  CHECK(dec.bracket_elevation == 4);
  // E itself still has negative coefficients, e.g. -27 v^4 w
  CHECK(dec.bracket.min_coefficient_sign().result ==
        CoeffSignScan::has_negative);
}

TEST_CASE("elevated bracket matches reference spot coefficients") {
  const auto dec = deg3_dim2_decomposition();
  const PolyQ e4 = dec.bracket.degree_elevate(4);
  CHECK(e4.min_coefficient_sign().result == CoeffSignScan::all_nonnegative);
  auto coeff = [&](std::initializer_list<int> m) {
    const Rational* c = e4.coefficient(MultiIndex(m));
    return c ? *c : Rational(0);
  };
  CHECK(coeff({0, 3, 6}) == 104);
  CHECK(coeff({0, 4, 5}) == 389);
  CHECK(coeff({1, 3, 5}) == 1362);
  CHECK(coeff({3, 3, 3}) == 22996);
  CHECK(coeff({4, 4, 1}) == 29232);
  CHECK(coeff({0, 9, 0}) == 108);
  CHECK(coeff({1, 8, 0}) == 81);
  CHECK(coeff({3, 6, 0}) == 3636);
  CHECK(coeff({4, 5, 0}) == 8973);
  CHECK(coeff({0, 6, 3}) == 686);
  CHECK(coeff({0, 7, 2}) == 644);
  CHECK(coeff({0, 8, 1}) == 405);
  CHECK(coeff({1, 7, 1}) == 306);
}

TEST_CASE("edge base certificates") {
  for (int n = 1; n <= 4; ++n) {
    const auto cert = certify_edge_base(n);
    CHECK(cert.status == CertStatus::certified);
    CHECK(cert.elevation == 0);
  }
}

TEST_CASE("degree-3 chain reproduces the reference elevations") {
  const std::vector<std::pair<int, int>> expected = {
      {2, 4}, {3, 8}, {4, 5}, {5, 3}, {6, 3}};
  for (const auto& [d, r] : expected) {
    const auto cert = certify_step(3, d);
    CHECK(cert.status == CertStatus::certified);
    CHECK(cert.elevation == r);
  }
}

TEST_CASE("degree-1 and degree-2 certify with no elevation") {
  for (int d = 2; d <= 5; ++d) {
    CHECK(certify_step(1, d).elevation == 0);
    const auto c2 = certify_step(2, d);
    CHECK(c2.status == CertStatus::certified);
    CHECK(c2.elevation == 0);
  }
}

TEST_CASE("degree-4 partial sum certifies at the reference r for d=3") {
  const auto cert = certify_deg4_partial_sum(3);
  CHECK(cert.status == CertStatus::certified);
  CHECK(cert.elevation == 11);
  CHECK_THROWS(certify_deg4_partial_sum(2));
}

TEST_CASE("am-gm companion bound is exactly certified") {
  const auto cert = certify_am_gm_3face();
  CHECK(cert.status == CertStatus::certified);
  CHECK(cert.method == "am-gm-product-decomposition");
}

TEST_CASE("degree-4 full kernel refuted at the centroid for d=4") {
  const auto cert = certify_step(4, 4);
  CHECK(cert.status == CertStatus::refuted);
  REQUIRE(cert.refutation_point.size() == 5);
  for (const auto& c : cert.refutation_point) CHECK(c == rat(1, 5));
  const A expected = A::of(rat(9298842, 9453125), rat(80243, 9453125),
                           Rational(0), Rational(0));
  CHECK(cert.refutation_value == expected.to_string());
}

TEST_CASE("fourth-power bound") {
  SUBCASE("d=1 certifies through the node-factor division") {
    const auto cert = certify_fourth_power(1, 14);
    CHECK(cert.status == CertStatus::certified);
  }
  SUBCASE("value at any node is exactly 1") {
    KernelOptions opts;
    opts.power = 4;
    const PolyA k4 = kernel_closed(4, 2, opts);
    const auto ps = fekete_candidate_exact(4, 2);
    for (const auto& pt : ps.points) CHECK(k4.eval(pt.coords) == A(1));
  }
  SUBCASE("centroid values: node at d=3, strictly below 1 at d=4") {
    KernelOptions opts;
    opts.power = 4;
    const PolyA k3 = kernel_closed(4, 3, opts);
    const std::vector<A> c3(4, A(rat(1, 4)));
    CHECK(k3.eval(c3) == A(1));  // the centroid is itself a node at d=3

    const PolyA k4 = kernel_closed(4, 4, opts);
    const std::vector<A> c4(5, A(rat(1, 5)));
    const A v = k4.eval(c4);
    CHECK((v - A(1)).sign() < 0);
    CHECK(v == A::of(rat(63079334222514, 446807861328125),
                     rat(14036734617, 446807861328125), Rational(0),
                     Rational(0)));
  }
}

TEST_CASE("monotonicity: elevating past the certified r stays nonnegative") {
  const auto defect = try_rational_poly(fejer_defect_poly(3, 3));
  REQUIRE(defect.has_value());
  const PolyQ hmu = defect->substitute_subsimplex();
  const PolyQ g = hmu - hmu.restrict_last_var_zero();
  const auto cert = certify_step(3, 3);
  REQUIRE(cert.status == CertStatus::certified);
  PolyQ elevated = g.degree_elevate(cert.elevation);
  for (int extra = 0; extra < 3; ++extra) {
    CHECK(elevated.min_coefficient_sign().result ==
          CoeffSignScan::all_nonnegative);
    elevated = elevated.elevate_once();
  }
}

TEST_CASE("certified defects are nonnegative at random rational points") {
  std::mt19937_64 rng(2024);
  for (auto [n, d] : {std::pair{2, 4}, {3, 3}}) {
    const PolyA defect = fejer_defect_poly(n, d);
    const auto rational = try_rational_poly(defect);
    REQUIRE(rational.has_value());
    for (int trial = 0; trial < 400; ++trial) {
      const auto x = random_rational_simplex_point(d + 1, rng);
      CHECK(sgn(rational->eval(x)) >= 0);
    }
  }
}
