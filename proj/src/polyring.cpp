#include "fekete/polyring.hpp"

#include <sstream>

namespace fekete {

std::string MultiIndex::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    out << " l" << (i + 1);
    if (e_[i] > 1) out << "^" << static_cast<int>(e_[i]);
  }
  return out.str();
}

namespace {

void enumerate_monomials(int remaining, int var, MultiIndex& current,
                         std::vector<MultiIndex>& out) {
  const int nvars = static_cast<int>(current.nvars());
  if (var == nvars - 1) {
    current.set(var, remaining);
    out.push_back(current);
    current.set(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current.set(var, e);
    enumerate_monomials(remaining - e, var + 1, current, out);
  }
  current.set(var, 0);
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(int degree, int nvars) {
  if (degree < 0 || nvars < 1)
    throw std::invalid_argument("monomials_of_degree: bad arguments");
  std::vector<MultiIndex> out;
  MultiIndex current(static_cast<size_t>(nvars));
  enumerate_monomials(degree, 0, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

UniPoly UniPoly::term(Rational c, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
  v.back() = std::move(c);
  return UniPoly(std::move(v));
}

const Rational& UniPoly::coeff(int k) const {
  static const Rational kZero(0);
  if (k < 0 || k > degree()) return kZero;
  return c_[static_cast<size_t>(k)];
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval UniPoly::eval_interval(const Interval& x) const {
  Interval acc = Interval::with_precision(x.precision());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + Interval::from_rational(*it, x.precision());
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k)
    d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> v(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) v[k] = -c_[k];
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) v[k] -= b.c_[k];
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly out = UniPoly::constant(Rational(1));
  UniPoly acc = *this;
  while (e > 0) {
    if (e & 1u) out *= acc;
    if ((e >>= 1u) > 0) acc *= acc;
  }
  return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& divisor) const {
  if (divisor.is_zero())
    throw std::invalid_argument("UniPoly division by zero");
  UniPoly rem = *this;
  const int dd = divisor.degree();
  const Rational& lead = divisor.c_.back();
  std::vector<Rational> q;
  if (rem.degree() >= dd)
    q.assign(static_cast<size_t>(rem.degree() - dd) + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int k = rem.degree() - dd;
    const Rational factor = rem.c_.back() / lead;
    q[static_cast<size_t>(k)] = factor;
    for (int j = 0; j <= dd; ++j)
      rem.c_[static_cast<size_t>(j + k)] -= factor * divisor.c_[j];
    rem.trim();
  }
  return {UniPoly(std::move(q)), std::move(rem)};
}

UniPoly UniPoly::legendre(int n) {
  if (n < 0) throw std::invalid_argument("legendre: negative degree");
  UniPoly p0 = UniPoly::constant(Rational(1));
  if (n == 0) return p0;
  UniPoly p1 = UniPoly::x();
  for (int k = 1; k < n; ++k) {
    // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
    UniPoly pn = UniPoly::term(rat(2 * k + 1, k + 1), 1) * p1 -
                 UniPoly::constant(rat(k, k + 1)) * p0;
    p0 = std::move(p1);
    p1 = std::move(pn);
  }
  return p1;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool wrote = false;
  for (int k = degree(); k >= 0; --k) {
    if (sgn(c_[static_cast<size_t>(k)]) == 0) continue;
    if (wrote) out << " + ";
    out << fekete::to_string(c_[static_cast<size_t>(k)]);
    if (k >= 1) out << "*x";
    if (k >= 2) out << "^" << k;
    wrote = true;
  }
  return out.str();
}

}  // namespace fekete
