#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fekete/polyring.hpp"

using namespace fekete;

using Q = Rational;
using PolyQ = BaryPoly<Rational>;

namespace {

std::vector<Q> random_simplex_point(int nvars, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> w(0, 40);
  std::vector<Q> x(nvars, Q(0));
  Q total(0);
  while (sgn(total) == 0) {
    total = 0;
    for (auto& xi : x) {
      xi = Q(w(rng));
      total += xi;
    }
  }
  for (auto& xi : x) xi /= total;
  return x;
}

PolyQ random_poly(int nvars, int maxdeg, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<int> expo(0, maxdeg);
  PolyQ p(nvars);
  for (int t = 0; t < 12; ++t) {
    MultiIndex m(static_cast<size_t>(nvars));
    int budget = maxdeg;
    for (int i = 0; i < nvars && budget > 0; ++i) {
      const int e = expo(rng) % (budget + 1);
      m.set(i, e);
      budget -= e;
    }
    p.add_term(std::move(m), Q(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("binomial square (l1+l2)^2") {
  const PolyQ s = PolyQ::variable(2, 0) + PolyQ::variable(2, 1);
  const PolyQ sq = s * s;
  CHECK(sq.term_count() == 3);
  CHECK(*sq.coefficient(MultiIndex{2, 0}) == Q(1));
  CHECK(*sq.coefficient(MultiIndex{1, 1}) == Q(2));
  CHECK(*sq.coefficient(MultiIndex{0, 2}) == Q(1));
}

TEST_CASE("multiplying by zero annihilates") {
  std::mt19937_64 rng(3);
  const PolyQ p = random_poly(3, 4, rng);
  CHECK((p * PolyQ::zero(3)).is_zero());
  CHECK_THROWS(p * PolyQ::zero(2));
}

TEST_CASE("power sums") {
  const PolyQ p1 = power_sum<Q>(1, 3);
  CHECK(p1.term_count() == 3);
  const PolyQ p2 = power_sum<Q>(2, 3);
  const std::vector<Q> centroid{rat(1, 3), rat(1, 3), rat(1, 3)};
  CHECK(p2.eval(centroid) == rat(1, 3));
}

TEST_CASE("identity 8(p2^2 - p4) = 16 sum_{i<j} li^2 lj^2") {
  for (int nvars : {3, 4, 6}) {
    const PolyQ p2 = power_sum<Q>(2, nvars);
    const PolyQ p4 = power_sum<Q>(4, nvars);
    const PolyQ lhs = (p2 * p2 - p4).scaled(Q(8));
    PolyQ rhs(nvars);
    for (int i = 0; i < nvars; ++i)
      for (int j = i + 1; j < nvars; ++j) {
        MultiIndex m(static_cast<size_t>(nvars));
        m.set(i, 2);
        m.set(j, 2);
        rhs.add_term(std::move(m), Q(16));
      }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("homogenize") {
  SUBCASE("constant 1 to degree 2 in two variables") {
    const PolyQ one = PolyQ::constant(2, Q(1));
    const PolyQ h = one.homogenize(2);
    CHECK(*h.coefficient(MultiIndex{2, 0}) == Q(1));
    CHECK(*h.coefficient(MultiIndex{1, 1}) == Q(2));
    CHECK(*h.coefficient(MultiIndex{0, 2}) == Q(1));
  }
  SUBCASE("already homogeneous input unchanged") {
    const PolyQ p = PolyQ::variable(3, 0, 2) + PolyQ::variable(3, 2, 2);
    CHECK(p.homogenize(2) == p);
  }
  SUBCASE("target below degree throws") {
    const PolyQ p = PolyQ::variable(2, 0, 3);
    CHECK_THROWS(p.homogenize(2));
  }
  SUBCASE("agrees with original on the affine simplex") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
      const PolyQ p = random_poly(4, 3, rng);
      const PolyQ h = p.homogenize(5);
      const auto x = random_simplex_point(4, rng);
      CHECK(p.eval(x) == h.eval(x));
    }
  }
}

TEST_CASE("degree elevation") {
  std::mt19937_64 rng(29);
  SUBCASE("r=0 is the identity") {
    const PolyQ p = random_poly(3, 4, rng);
    CHECK(p.degree_elevate(0) == p);
  }
  SUBCASE("l1 - l2 elevated once gives l1^2 - l2^2") {
    const PolyQ p = PolyQ::variable(2, 0) - PolyQ::variable(2, 1);
    const PolyQ e = p.degree_elevate(1);
    CHECK(*e.coefficient(MultiIndex{2, 0}) == Q(1));
    CHECK(*e.coefficient(MultiIndex{0, 2}) == Q(-1));
    CHECK(e.coefficient(MultiIndex{1, 1}) == nullptr);
  }
  SUBCASE("evaluation is preserved on the simplex") {
    for (int trial = 0; trial < 20; ++trial) {
      const PolyQ p = random_poly(4, 3, rng);
      const PolyQ e = p.degree_elevate(3);
      const auto x = random_simplex_point(4, rng);
      CHECK(p.eval(x) == e.eval(x));
    }
  }
}

TEST_CASE("sub-simplex substitution") {
  SUBCASE("sum of variables maps to sum of variables") {
    const PolyQ s = PolyQ::sum_of_variables(5);
    CHECK(s.substitute_subsimplex() == s);
  }
  SUBCASE("last variable maps to m_last/(d+1)") {
    const int nvars = 4;
    const PolyQ p = PolyQ::variable(nvars, nvars - 1);
    const PolyQ expected =
        PolyQ::variable(nvars, nvars - 1).scaled(rat(1, nvars));
    CHECK(p.substitute_subsimplex() == expected);
  }
  SUBCASE("evaluation commutes with the coordinate map") {
    std::mt19937_64 rng(41);
    const int nvars = 4;
    for (int trial = 0; trial < 25; ++trial) {
      const PolyQ p = random_poly(nvars, 4, rng);
      const PolyQ sub = p.substitute_subsimplex();
      const auto mu = random_simplex_point(nvars, rng);
      std::vector<Q> lambda(nvars);
      const Q c = rat(1, nvars);
      for (int j = 0; j + 1 < nvars; ++j) lambda[j] = mu[j] + c * mu[nvars - 1];
      lambda[nvars - 1] = c * mu[nvars - 1];
      CHECK(sub.eval(mu) == p.eval(lambda));
    }
  }
  SUBCASE("degree is preserved") {
    std::mt19937_64 rng(43);
    const PolyQ p = random_poly(5, 6, rng);
    CHECK(p.substitute_subsimplex().degree() == p.degree());
  }
}

TEST_CASE("restriction to the last-coordinate face") {
  PolyQ p(3);
  p.add_term(MultiIndex{1, 1, 0}, Q(1));
  p.add_term(MultiIndex{0, 1, 1}, Q(1));
  const PolyQ r = p.restrict_last_var_zero();
  CHECK(r.term_count() == 1);
  CHECK(*r.coefficient(MultiIndex{1, 1, 0}) == Q(1));

  const PolyQ s = PolyQ::sum_of_variables(4).pow(3);
  const PolyQ sr = s.restrict_last_var_zero();
  PolyQ s3(4);
  for (int i = 0; i < 3; ++i) s3 += PolyQ::variable(4, i);
  CHECK(sr == s3.pow(3));
  CHECK(sr.is_homogeneous());
}

TEST_CASE("coefficient sign scan") {
  PolyQ p(3);
  p.add_term(MultiIndex{2, 0, 0}, Q(3));
  p.add_term(MultiIndex{0, 1, 1}, Q(-5));
  const auto report = p.min_coefficient_sign();
  CHECK(report.result == CoeffSignScan::has_negative);
  CHECK(report.witness == MultiIndex{0, 1, 1});
  CHECK(PolyQ::zero(3).min_coefficient_sign().result ==
        CoeffSignScan::all_nonnegative);

  BaryPoly<Interval> straddling(2);
  straddling.add_term(MultiIndex{1, 0},
                      Interval::from_rational_bounds(rat(-1), rat(1)));
  CHECK_THROWS(straddling.min_coefficient_sign());
}

TEST_CASE("multiplication is commutative and associative") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 10; ++trial) {
    const PolyQ a = random_poly(3, 3, rng);
    const PolyQ b = random_poly(3, 3, rng);
    const PolyQ c = random_poly(3, 3, rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("exact division recovers factors") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const PolyQ a = random_poly(3, 3, rng);
    PolyQ b = random_poly(3, 2, rng);
    if (b.is_zero()) b = PolyQ::constant(3, Q(2));
    CHECK(divide_exact(a * b, b) == a);
  }
  const PolyQ x = PolyQ::variable(2, 0);
  const PolyQ y = PolyQ::variable(2, 1);
  CHECK_THROWS(divide_exact(x * x + y, x * y));
}

TEST_CASE("monomial basis enumeration") {
  const auto basis = monomials_of_degree(3, 3);
  CHECK(basis.size() == 10);  // C(5,2)
  CHECK(std::is_sorted(basis.begin(), basis.end()));
  for (const auto& m : basis) CHECK(m.degree() == 3);
}

TEST_CASE("univariate polynomials and Legendre recurrence") {
  // P5 = (63 x^5 - 70 x^3 + 15 x)/8, so P5' = 15/8 (21 x^4 - 14 x^2 + 1).
  const UniPoly p5 = UniPoly::legendre(5);
  CHECK(p5.coeff(5) == rat(63, 8));
  CHECK(p5.coeff(3) == rat(-70, 8));
  CHECK(p5.coeff(1) == rat(15, 8));
  CHECK(p5.coeff(0) == Q(0));
  const UniPoly d5 = p5.derivative();
  CHECK(d5.coeff(4) == rat(15 * 21, 8));
  CHECK(d5.coeff(2) == rat(-15 * 14, 8));
  CHECK(d5.coeff(0) == rat(15, 8));

  // Legendre polynomials are 1 at x = 1.
  for (int n = 0; n <= 8; ++n)
    CHECK(UniPoly::legendre(n).eval(Q(1)) == Q(1));

  const UniPoly p3 = UniPoly::legendre(3);
  // P3' = (15 x^2 - 3)/2 with roots x = +-1/sqrt5.
  const UniPoly d3 = p3.derivative();
  CHECK(d3.eval(rat(1, 2)) == rat(15, 8) - rat(3, 2));

  std::mt19937_64 rng(71);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Q> ca(6), cb(4);
    for (auto& v : ca) v = Q(coeff(rng));
    for (auto& v : cb) v = Q(coeff(rng));
    const UniPoly a{ca}, b{cb};
    if (b.is_zero()) continue;
    const auto [q, r] = a.divrem(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("segment homogenization matches direct evaluation") {
  const UniPoly p = UniPoly::legendre(4).derivative();
  const auto h = homogenize_on_segment<Q>(p, 5);
  CHECK(h.is_homogeneous());
  CHECK(h.degree() == 5);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_simplex_point(2, rng);
    CHECK(h.eval(x) == p.eval(Q(x[1] - x[0])));
  }
}
