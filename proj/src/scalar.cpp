#include "fekete/scalar.hpp"

#include <sstream>
#include <utility>

namespace fekete {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow_rational(const Rational& base, unsigned exp) {
  Rational out(1);
  Rational acc = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) out *= acc;
    acc *= acc;
    e >>= 1u;
  }
  return out;
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Rational(z);
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(long value, mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval Interval::with_precision(mpfr_prec_t prec) {
  return Interval(0, prec);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this == &other) return *this;
  mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
  mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t prec) {
  Interval out = Interval::with_precision(prec);
  mpfr_set_q(out.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, q.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::from_rational_bounds(const Rational& lo, const Rational& hi,
                                        mpfr_prec_t prec) {
  if (lo > hi) throw std::invalid_argument("interval bounds out of order");
  Interval out = Interval::with_precision(prec);
  mpfr_set_q(out.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::sqrt_of_ui(unsigned long x, mpfr_prec_t prec) {
  Interval out = Interval::with_precision(prec);
  mpfr_sqrt_ui(out.lo_, x, MPFR_RNDD);
  mpfr_sqrt_ui(out.hi_, x, MPFR_RNDU);
  return out;
}

Interval Interval::from_double(double x, mpfr_prec_t prec) {
  Interval out = Interval::with_precision(prec);
  mpfr_set_d(out.lo_, x, MPFR_RNDD);
  mpfr_set_d(out.hi_, x, MPFR_RNDU);
  return out;
}

mpfr_prec_t Interval::precision() const { return mpfr_get_prec(lo_); }

bool Interval::is_exact_zero() const {
  return mpfr_zero_p(lo_) && mpfr_zero_p(hi_);
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

std::optional<int> Interval::definite_sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  if (is_exact_zero()) return 0;
  return std::nullopt;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
  mpfr_t mid;
  mpfr_init2(mid, mpfr_get_prec(lo_) + 1);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  double out = mpfr_get_d(mid, MPFR_RNDN);
  mpfr_clear(mid);
  return out;
}

double Interval::width_double() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double out = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return out;
}

Interval Interval::operator-() const {
  Interval out(precision());
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

Interval Interval::abs() const {
  Interval out(precision());
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  mpfr_set_zero(out.lo_, 1);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  if (mpfr_cmp(hi_, out.hi_) > 0) mpfr_set(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0)
    throw std::domain_error("Interval::sqrt of possibly negative value");
  Interval out(precision());
  mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out = Interval::with_precision(std::max(a.precision(), b.precision()));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out = Interval::with_precision(std::max(a.precision(), b.precision()));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Interval out = Interval::with_precision(prec);
  mpfr_t t;
  mpfr_init2(t, prec);

  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto ae : as)
    for (auto be : bs) {
      mpfr_mul(t, ae, be, MPFR_RNDD);
      if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, ae, be, MPFR_RNDU);
      if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero())
    throw std::domain_error("Interval division by interval containing zero");
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Interval out = Interval::with_precision(prec);
  mpfr_t t;
  mpfr_init2(t, prec);

  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto ae : as)
    for (auto be : bs) {
      mpfr_div(t, ae, be, MPFR_RNDD);
      if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_div(t, ae, be, MPFR_RNDU);
      if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return out;
}

bool Interval::same_endpoints(const Interval& other) const {
  return mpfr_cmp(lo_, other.lo_) == 0 && mpfr_cmp(hi_, other.hi_) == 0;
}

std::string Interval::mid_string(int digits) const {
  mpfr_t mid;
  mpfr_init2(mid, mpfr_get_prec(lo_) + 1);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, mid);
  std::string out(s);
  mpfr_free_str(s);
  mpfr_clear(mid);
  return out;
}

std::string Interval::to_string(int digits) const {
  char* slo = nullptr;
  char* shi = nullptr;
  mpfr_asprintf(&slo, "%.*Rg", digits, lo_);
  mpfr_asprintf(&shi, "%.*Rg", digits, hi_);
  std::string out = std::string("[") + slo + ", " + shi + "]";
  mpfr_free_str(slo);
  mpfr_free_str(shi);
  return out;
}

// ---------------------------------------------------------------------------
// AlgebraicScalar

AlgebraicScalar AlgebraicScalar::of(Rational a, Rational b, Rational c,
                                    Rational d) {
  AlgebraicScalar out;
  out.c0 = std::move(a);
  out.c1 = std::move(b);
  out.c2 = std::move(c);
  out.c3 = std::move(d);
  return out;
}

AlgebraicScalar AlgebraicScalar::sqrt5() {
  return of(Rational(0), Rational(1), Rational(0), Rational(0));
}
AlgebraicScalar AlgebraicScalar::sqrt21() {
  return of(Rational(0), Rational(0), Rational(1), Rational(0));
}
AlgebraicScalar AlgebraicScalar::sqrt105() {
  return of(Rational(0), Rational(0), Rational(0), Rational(1));
}

bool AlgebraicScalar::is_zero() const {
  return sgn(c0) == 0 && sgn(c1) == 0 && sgn(c2) == 0 && sgn(c3) == 0;
}

bool AlgebraicScalar::is_rational() const {
  return sgn(c1) == 0 && sgn(c2) == 0 && sgn(c3) == 0;
}

const Rational& AlgebraicScalar::rational_part() const {
  if (!is_rational())
    throw std::domain_error("rational_part of irrational value");
  return c0;
}

int AlgebraicScalar::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(c0);
  for (mpfr_prec_t prec = 64; prec <= 1 << 20; prec *= 2) {
    auto s = enclose(prec).definite_sign();
    if (s.has_value() && *s != 0) return *s;
  }
  // Unreachable: a nonzero element of the field is bounded away from zero.
  throw std::logic_error("AlgebraicScalar::sign failed to converge");
}

Interval AlgebraicScalar::enclose(mpfr_prec_t prec) const {
  Interval out = Interval::from_rational(c0, prec);
  if (sgn(c1) != 0)
    out += Interval::from_rational(c1, prec) * Interval::sqrt_of_ui(5, prec);
  if (sgn(c2) != 0)
    out += Interval::from_rational(c2, prec) * Interval::sqrt_of_ui(21, prec);
  if (sgn(c3) != 0)
    out += Interval::from_rational(c3, prec) * Interval::sqrt_of_ui(105, prec);
  return out;
}

double AlgebraicScalar::to_double() const { return enclose(64).mid_double(); }

AlgebraicScalar AlgebraicScalar::conjugate(bool flip_sqrt5,
                                           bool flip_sqrt21) const {
  AlgebraicScalar out = *this;
  if (flip_sqrt5) {
    out.c1 = -out.c1;
    out.c3 = -out.c3;
  }
  if (flip_sqrt21) {
    out.c2 = -out.c2;
    out.c3 = -out.c3;
  }
  return out;
}

AlgebraicScalar AlgebraicScalar::operator-() const {
  return of(-c0, -c1, -c2, -c3);
}

AlgebraicScalar operator+(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  return AlgebraicScalar::of(a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2,
                             a.c3 + b.c3);
}

AlgebraicScalar operator-(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  return AlgebraicScalar::of(a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2,
                             a.c3 - b.c3);
}

AlgebraicScalar operator*(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  // Basis products: sqrt5*sqrt21 = sqrt105, sqrt5*sqrt105 = 5*sqrt21,
  // sqrt21*sqrt105 = 21*sqrt5.
  AlgebraicScalar out;
  out.c0 = a.c0 * b.c0 + 5 * (a.c1 * b.c1) + 21 * (a.c2 * b.c2) +
           105 * (a.c3 * b.c3);
  out.c1 = a.c0 * b.c1 + a.c1 * b.c0 + 21 * (a.c2 * b.c3 + a.c3 * b.c2);
  out.c2 = a.c0 * b.c2 + a.c2 * b.c0 + 5 * (a.c1 * b.c3 + a.c3 * b.c1);
  out.c3 = a.c0 * b.c3 + a.c3 * b.c0 + a.c1 * b.c2 + a.c2 * b.c1;
  return out;
}

AlgebraicScalar AlgebraicScalar::inverse() const {
  if (is_zero()) throw std::domain_error("AlgebraicScalar division by zero");
  if (is_rational()) return AlgebraicScalar(Rational(1 / c0));
  // 1/a = (product of the three nontrivial conjugates) / norm, the norm being
  // the rational product over the full Galois orbit.
  const AlgebraicScalar p =
      conjugate(true, false) * conjugate(false, true) * conjugate(true, true);
  const AlgebraicScalar n = *this * p;
  if (!n.is_rational() || sgn(n.c0) == 0)
    throw std::logic_error("AlgebraicScalar norm must be nonzero rational");
  const Rational inv_n = 1 / n.c0;
  return of(p.c0 * inv_n, p.c1 * inv_n, p.c2 * inv_n, p.c3 * inv_n);
}

AlgebraicScalar operator/(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  if (b.is_rational()) {
    if (sgn(b.c0) == 0)
      throw std::domain_error("AlgebraicScalar division by zero");
    const Rational inv = 1 / b.c0;
    return AlgebraicScalar::of(a.c0 * inv, a.c1 * inv, a.c2 * inv,
                               a.c3 * inv);
  }
  return a * b.inverse();
}

AlgebraicScalar& AlgebraicScalar::operator+=(const AlgebraicScalar& b) {
  c0 += b.c0;
  c1 += b.c1;
  c2 += b.c2;
  c3 += b.c3;
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator-=(const AlgebraicScalar& b) {
  c0 -= b.c0;
  c1 -= b.c1;
  c2 -= b.c2;
  c3 -= b.c3;
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator*=(const AlgebraicScalar& b) {
  *this = *this * b;
  return *this;
}

bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3;
}

bool operator!=(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  return !(a == b);
}

std::string AlgebraicScalar::to_string() const {
  static const char* radicals[4] = {"", "*sqrt5", "*sqrt21", "*sqrt105"};
  const Rational* cs[4] = {&c0, &c1, &c2, &c3};
  std::ostringstream out;
  bool wrote = false;
  for (int k = 0; k < 4; ++k) {
    if (sgn(*cs[k]) == 0) continue;
    if (wrote) {
      out << (sgn(*cs[k]) > 0 ? " + " : " - ");
      out << fekete::to_string(Rational(abs(*cs[k]))) << radicals[k];
    } else {
      out << fekete::to_string(*cs[k]) << radicals[k];
      wrote = true;
    }
  }
  if (!wrote) return "0";
  return out.str();
}

std::string to_string(const AlgebraicScalar& a) { return a.to_string(); }

}  // namespace fekete
