#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace fekete {

/// Arbitrary-precision rational. GMP keeps values canonical (lowest terms,
/// positive denominator) as long as every value is built through the helpers
/// below or by arithmetic on canonical values.
using Rational = mpq_class;

/// Canonical rational from a numerator/denominator pair.
Rational rat(long num, long den = 1);

Rational pow_rational(const Rational& base, unsigned exp);
Rational binomial(unsigned n, unsigned k);
std::string to_string(const Rational& q);

/// Closed interval with MPFR endpoints. Every operation rounds outward, so
/// the result always encloses the exact real value.
class Interval {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  /// Exact integer value (so Interval(0), Interval(1) fit the generic
  /// scalar protocol of the polynomial layer).
  explicit Interval(long value = 0, mpfr_prec_t prec = kDefaultPrecision);
  /// Zero endpoints carried at the requested working precision.
  static Interval with_precision(mpfr_prec_t prec);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval from_rational(const Rational& q,
                                mpfr_prec_t prec = kDefaultPrecision);
  static Interval from_rational_bounds(const Rational& lo, const Rational& hi,
                                       mpfr_prec_t prec = kDefaultPrecision);
  static Interval sqrt_of_ui(unsigned long x,
                             mpfr_prec_t prec = kDefaultPrecision);
  static Interval from_double(double x, mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t precision() const;

  bool is_exact_zero() const;
  bool contains_zero() const;
  bool contains(const Rational& q) const;
  /// +1 / -1 when the interval excludes zero, 0 when it is exactly [0,0],
  /// nullopt when it straddles zero.
  std::optional<int> definite_sign() const;

  double lo_double() const;
  double hi_double() const;
  double mid_double() const;
  double width_double() const;

  Interval operator-() const;
  Interval abs() const;
  Interval sqrt() const;  // requires lo >= 0

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval& operator+=(const Interval& b) { return *this = *this + b; }
  Interval& operator-=(const Interval& b) { return *this = *this - b; }
  Interval& operator*=(const Interval& b) { return *this = *this * b; }

  bool same_endpoints(const Interval& other) const;

  std::string to_string(int digits = 20) const;
  /// Decimal rendering of the midpoint.
  std::string mid_string(int digits) const;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

/// Exact element of the field Q(sqrt5, sqrt21), stored as
/// c0 + c1*sqrt5 + c2*sqrt21 + c3*sqrt105. The four radicands are
/// multiplicatively independent over squares, so the representation is unique
/// and arithmetic is closed.
class AlgebraicScalar {
 public:
  Rational c0, c1, c2, c3;

  AlgebraicScalar() : c0(0), c1(0), c2(0), c3(0) {}
  AlgebraicScalar(long n) : c0(n), c1(0), c2(0), c3(0) {}  // NOLINT(runtime/explicit)
  AlgebraicScalar(Rational r) : c0(std::move(r)), c1(0), c2(0), c3(0) {}  // NOLINT

  static AlgebraicScalar of(Rational a, Rational b, Rational c, Rational d);
  static AlgebraicScalar sqrt5();
  static AlgebraicScalar sqrt21();
  static AlgebraicScalar sqrt105();

  bool is_zero() const;
  bool is_rational() const;
  /// c0, throws when the value has an irrational part.
  const Rational& rational_part() const;

  /// Exact sign: structural zero test, then interval refinement.
  int sign() const;
  Interval enclose(mpfr_prec_t prec = Interval::kDefaultPrecision) const;
  double to_double() const;

  AlgebraicScalar inverse() const;
  /// Field automorphism flipping the chosen radicals.
  AlgebraicScalar conjugate(bool flip_sqrt5, bool flip_sqrt21) const;

  AlgebraicScalar operator-() const;
  friend AlgebraicScalar operator+(const AlgebraicScalar& a,
                                   const AlgebraicScalar& b);
  friend AlgebraicScalar operator-(const AlgebraicScalar& a,
                                   const AlgebraicScalar& b);
  friend AlgebraicScalar operator*(const AlgebraicScalar& a,
                                   const AlgebraicScalar& b);
  friend AlgebraicScalar operator/(const AlgebraicScalar& a,
                                   const AlgebraicScalar& b);
  AlgebraicScalar& operator+=(const AlgebraicScalar& b);
  AlgebraicScalar& operator-=(const AlgebraicScalar& b);
  AlgebraicScalar& operator*=(const AlgebraicScalar& b);

  friend bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b);
  friend bool operator!=(const AlgebraicScalar& a, const AlgebraicScalar& b);

  /// Canonical form "a/b + c/d*sqrt5 + e/f*sqrt21 + g/h*sqrt105" with zero
  /// components omitted ("0" for the zero value).
  std::string to_string() const;
};

// Uniform scalar hooks used by the generic polynomial layer.

inline bool is_exact_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_exact_zero(const AlgebraicScalar& a) { return a.is_zero(); }
inline bool is_exact_zero(const Interval& x) { return x.is_exact_zero(); }

inline std::optional<int> exact_sign(const Rational& q) { return sgn(q); }
inline std::optional<int> exact_sign(const AlgebraicScalar& a) {
  return a.sign();
}
inline std::optional<int> exact_sign(const Interval& x) {
  return x.definite_sign();
}

template <typename S>
struct is_exact_domain : std::false_type {};
template <>
struct is_exact_domain<Rational> : std::true_type {};
template <>
struct is_exact_domain<AlgebraicScalar> : std::true_type {};

template <typename S>
S scalar_from_rational(const Rational& q);
template <>
inline Rational scalar_from_rational<Rational>(const Rational& q) {
  return q;
}
template <>
inline AlgebraicScalar scalar_from_rational<AlgebraicScalar>(
    const Rational& q) {
  return AlgebraicScalar(q);
}

std::string to_string(const AlgebraicScalar& a);

}  // namespace fekete
