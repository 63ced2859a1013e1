#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fekete/scalar.hpp"

using namespace fekete;

namespace {

AlgebraicScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  return AlgebraicScalar::of(rat(num(rng), den(rng)), rat(num(rng), den(rng)),
                             rat(num(rng), den(rng)), rat(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("rational helpers canonicalize") {
  CHECK(rat(3, 6) == rat(1, 2));
  CHECK(rat(2, -4) == rat(-1, 2));
  CHECK(to_string(rat(-4, 8)) == "-1/2");
  CHECK(pow_rational(rat(2, 3), 3) == rat(8, 27));
  CHECK(binomial(9, 4) == Rational(126));
  CHECK(binomial(4, 7) == Rational(0));
}

TEST_CASE("golden ratio product: ((1+sqrt5)/2)((1-sqrt5)/2) = -1") {
  const AlgebraicScalar a =
      AlgebraicScalar::of(rat(1, 2), rat(1, 2), Rational(0), Rational(0));
  const AlgebraicScalar b =
      AlgebraicScalar::of(rat(1, 2), rat(-1, 2), Rational(0), Rational(0));
  CHECK(a * b == AlgebraicScalar(-1));
}

TEST_CASE("sqrt(3/7) squared = 3/7") {
  const AlgebraicScalar s =
      AlgebraicScalar::of(Rational(0), Rational(0), rat(1, 7), Rational(0));
  CHECK(s * s == AlgebraicScalar(rat(3, 7)));
}

TEST_CASE("conjugate sum (9-sqrt5)/38 + (9+sqrt5)/38 = 9/19") {
  const AlgebraicScalar wm =
      AlgebraicScalar::of(rat(9, 38), rat(-1, 38), Rational(0), Rational(0));
  const AlgebraicScalar wp =
      AlgebraicScalar::of(rat(9, 38), rat(1, 38), Rational(0), Rational(0));
  CHECK(wm + wp == AlgebraicScalar(rat(9, 19)));
}

TEST_CASE("division and inverse across the tower") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const AlgebraicScalar a = random_scalar(rng);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == AlgebraicScalar(1));
    const AlgebraicScalar b = random_scalar(rng);
    CHECK((b / a) * a == b);
  }
  CHECK_THROWS(AlgebraicScalar(0).inverse());
  CHECK_THROWS(AlgebraicScalar(1) / AlgebraicScalar(0));
}

TEST_CASE("radical product reductions") {
  const auto s5 = AlgebraicScalar::sqrt5();
  const auto s21 = AlgebraicScalar::sqrt21();
  const auto s105 = AlgebraicScalar::sqrt105();
  CHECK(s5 * s21 == s105);
  CHECK(s5 * s105 == s21.of(Rational(0), Rational(0), Rational(5), Rational(0)));
  CHECK(s21 * s105 ==
        AlgebraicScalar::of(Rational(0), Rational(21), Rational(0), Rational(0)));
  CHECK(s105 * s105 == AlgebraicScalar(105));
}

TEST_CASE("sign examples") {
  CHECK(AlgebraicScalar::of(Rational(9), Rational(-1), Rational(0), Rational(0))
            .sign() == 1);
  CHECK(AlgebraicScalar().sign() == 0);
  CHECK(AlgebraicScalar::of(Rational(2), Rational(-1), Rational(0), Rational(0))
            .sign() == -1);
  // Tiny but nonzero combination resolves via refinement.
  const AlgebraicScalar close = AlgebraicScalar::of(
      rat(161, 72), Rational(-1), Rational(0), Rational(0));
  CHECK(close.sign() == close.enclose(256).definite_sign().value());
}

TEST_CASE("ring axioms hold exactly on random quadruples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const AlgebraicScalar a = random_scalar(rng);
    const AlgebraicScalar b = random_scalar(rng);
    const AlgebraicScalar c = random_scalar(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(exact_sign(a * a).value() >= 0);
    CHECK((a.sign() == 0) == a.is_zero());
  }
}

TEST_CASE("enclose: width shrinks and contains reference big-float value") {
  // Oracle: direct MPFR evaluation of (9 - sqrt 5)/38 at high precision.
  mpfr_t t;
  mpfr_init2(t, 300);
  mpfr_sqrt_ui(t, 5, MPFR_RNDN);
  mpfr_ui_sub(t, 9, t, MPFR_RNDN);
  mpfr_div_ui(t, t, 38, MPFR_RNDN);
  const double oracle = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);

  const AlgebraicScalar w =
      AlgebraicScalar::of(rat(9, 38), rat(-1, 38), Rational(0), Rational(0));
  const Interval enc = w.enclose(53);
  CHECK(enc.width_double() < 1e-15);
  CHECK(enc.lo_double() <= oracle);
  CHECK(enc.hi_double() >= oracle);
  CHECK(oracle == doctest::Approx(0.17799821111842659).epsilon(1e-14));

  const Interval zero = AlgebraicScalar(0).enclose(53);
  CHECK(zero.is_exact_zero());

  const Interval s5 = AlgebraicScalar::sqrt5().enclose(80);
  CHECK(s5.lo_double() <= 2.2360679774997896);
  CHECK(s5.hi_double() >= 2.2360679774997896);
}

TEST_CASE("enclose always contains a higher-precision recomputation") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const AlgebraicScalar a = random_scalar(rng);
    for (mpfr_prec_t prec : {32L, 64L, 128L}) {
      const Interval coarse = a.enclose(prec);
      const Interval fine = a.enclose(2 * prec);
      CHECK(coarse.lo_double() <= fine.mid_double());
      CHECK(coarse.hi_double() >= fine.mid_double());
    }
  }
}

TEST_CASE("interval arithmetic encloses rational arithmetic") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = rat(num(rng), den(rng));
    const Rational b = rat(num(rng), den(rng));
    const Interval ia = Interval::from_rational(a, 64);
    const Interval ib = Interval::from_rational(b, 64);
    CHECK((ia + ib).contains(a + b));
    CHECK((ia - ib).contains(a - b));
    CHECK((ia * ib).contains(a * b));
    if (sgn(b) != 0 && !ib.contains_zero()) {
      CHECK((ia / ib).contains(Rational(a / b)));
    }
  }
  CHECK_THROWS((Interval::from_rational(rat(1)) /
                Interval::from_rational(rat(0))).contains_zero());
}

TEST_CASE("canonical strings") {
  const AlgebraicScalar w =
      AlgebraicScalar::of(rat(9, 38), rat(-1, 38), Rational(0), Rational(0));
  CHECK(w.to_string() == "9/38 - 1/38*sqrt5");
  CHECK(AlgebraicScalar(0).to_string() == "0");
  CHECK(AlgebraicScalar::of(Rational(0), Rational(0), rat(1, 7), Rational(0))
            .to_string() == "1/7*sqrt21");
}
