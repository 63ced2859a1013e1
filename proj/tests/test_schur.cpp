#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fekete/schur.hpp"

using namespace fekete;
using PolyQ = BaryPoly<Rational>;

TEST_CASE("partition basics") {
  CHECK(Partition({3, 1}).weight() == 4);
  CHECK(Partition({2, 1, 1, 0, 0}).length() == 3);  // trailing zeros dropped
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, -1}));
}

TEST_CASE("s_[1] is the sum of the variables") {
  for (int m : {2, 4, 6})
    CHECK(schur_expand({1}, m) == PolyQ::sum_of_variables(m));
}

TEST_CASE("evaluations at 1^m match the binomial expressions") {
  // s_[2,1,1](1^{d+1}) = 3 C(d+2,4), s_[1,1,1,1](1^{d+1}) = C(d+1,4)
  for (int d = 3; d <= 8; ++d) {
    const int m = d + 1;
    std::vector<Rational> ones(static_cast<size_t>(m), Rational(1));
    CHECK(schur_expand({2, 1, 1}, m).eval(ones) ==
          Rational(3) * binomial(static_cast<unsigned>(d + 2), 4));
    CHECK(schur_expand({1, 1, 1, 1}, m).eval(ones) ==
          binomial(static_cast<unsigned>(d + 1), 4));
  }
  std::vector<Rational> ones4(4, Rational(1));
  CHECK(schur_expand({2, 1, 1}, 4).eval(ones4) == Rational(15));
  CHECK(schur_expand({1, 1, 1, 1}, 4).eval(ones4) == Rational(1));
}

TEST_CASE("expansion coefficients are nonnegative integers") {
  for (const Partition& mu :
       {Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1},
        Partition{1, 1, 1, 1}}) {
    const PolyQ s = schur_expand(mu, 5);
    for (const auto& [m, c] : s.terms()) {
      CHECK(sgn(c) > 0);
      CHECK(c.get_den() == 1);
    }
  }
}

TEST_CASE("expansion count equals the Weyl dimension formula") {
  for (const Partition& mu :
       {Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1},
        Partition{1, 1, 1, 1}, Partition{4}}) {
    for (int m = 2; m <= 6; ++m) {
      std::vector<Rational> ones(static_cast<size_t>(m), Rational(1));
      const PolyQ s = schur_expand(mu, m);
      const Rational total = s.is_zero() ? Rational(0) : s.eval(ones);
      CHECK(total == schur_dimension(mu, m));
    }
  }
}

TEST_CASE("bialternant quotient agrees with the tableau expansion") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> numer(-15, 15);
  std::uniform_int_distribution<long> denom(1, 7);
  for (const Partition& mu :
       {Partition{3, 1}, Partition{2, 1, 1}, Partition{2, 2}}) {
    for (int m : {4, 5}) {
      const PolyQ s = schur_expand(mu, m);
      for (int trial = 0; trial < 8; ++trial) {
        std::vector<Rational> x(static_cast<size_t>(m));
        bool distinct = true;
        for (auto& xi : x) xi = rat(numer(rng), denom(rng));
        for (size_t i = 0; i < x.size() && distinct; ++i)
          for (size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j]) {
              distinct = false;
              break;
            }
        if (!distinct) continue;
        CHECK(schur_bialternant_eval(mu, x) == s.eval(x));
      }
    }
  }
}

TEST_CASE("majorization") {
  CHECK(majorizes({2, 1, 1}, {1, 1, 1, 1}));
  CHECK(majorizes({3, 1}, {2, 2}));
  CHECK(majorizes({2, 2}, {2, 2}));
  CHECK_FALSE(majorizes({2, 2}, {3, 1}));
  CHECK_THROWS(majorizes({2, 1}, {1, 1, 1, 1}));
}

TEST_CASE("degree-2 kernel Schur identity") {
  for (int d = 3; d <= 5; ++d) CHECK(verify_k2_schur_identity(d));
}

TEST_CASE("difference-square Schur identity") {
  for (int d = 3; d <= 5; ++d)
    CHECK(verify_difference_square_schur_identity(d));
}

TEST_CASE("normalized Schur inequality sampling") {
  const auto report = sra_inequality_check({2, 1, 1}, {1, 1, 1, 1}, 5, 1000);
  CHECK(report.samples == 1000);
  CHECK(report.violations == 0);
  CHECK(report.derived_bound_failures == 0);

  // x = 1^m: both normalized sides equal 1
  const int m = 5;
  std::vector<Rational> ones(static_cast<size_t>(m), Rational(1));
  CHECK(schur_expand({2, 1, 1}, m).eval(ones) ==
        schur_dimension({2, 1, 1}, m));

  // a zero coordinate kills s_[1,1,1,1] in 4 variables
  std::vector<Rational> withzero{Rational(0), Rational(1), rat(1, 2),
                                 Rational(3)};
  CHECK(schur_expand({1, 1, 1, 1}, 4).eval(withzero) == Rational(0));

  CHECK_THROWS(sra_inequality_check({2, 2}, {3, 1}, 5, 10));
}
