#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fekete/scalar.hpp"

namespace fekete {

/// Exponent vector of a monomial in barycentric variables l1..l_{d+1}.
/// Ordering is graded lexicographic (degree first, then lex on exponents).
class MultiIndex {
 public:
  MultiIndex() : degree_(0) {}
  explicit MultiIndex(size_t nvars) : e_(nvars, 0), degree_(0) {}
  MultiIndex(std::initializer_list<int> exps) {
    e_.reserve(exps.size());
    for (int v : exps) {
      if (v < 0) throw std::invalid_argument("negative exponent");
      e_.push_back(static_cast<uint8_t>(v));
    }
    degree_ = std::accumulate(e_.begin(), e_.end(), 0);
  }

  size_t nvars() const { return e_.size(); }
  int degree() const { return degree_; }
  int operator[](size_t i) const { return e_[i]; }

  void set(size_t i, int v) {
    if (v < 0 || v > 255) throw std::invalid_argument("exponent out of range");
    degree_ += v - e_[i];
    e_[i] = static_cast<uint8_t>(v);
  }

  MultiIndex operator+(const MultiIndex& o) const {
    MultiIndex out = *this;
    for (size_t i = 0; i < e_.size(); ++i) out.set(i, out[i] + o[i]);
    return out;
  }

  /// Componentwise difference; false when any exponent would go negative.
  bool try_subtract(const MultiIndex& o, MultiIndex& out) const {
    out = *this;
    for (size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] < o.e_[i]) return false;
      out.set(i, e_[i] - o.e_[i]);
    }
    return true;
  }

  /// Image under a permutation of the variables: result[perm[i]] = e[i].
  MultiIndex permuted(std::span<const int> perm) const {
    MultiIndex out(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) out.set(perm[i], e_[i]);
    return out;
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) {
    return !(a == b);
  }
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.e_ < b.e_;
  }

  std::string to_string() const;

 private:
  std::vector<uint8_t> e_;
  int degree_;
};

/// All exponent vectors with |alpha| = degree in nvars variables,
/// graded-lex sorted.
std::vector<MultiIndex> monomials_of_degree(int degree, int nvars);

enum class CoeffSignScan { all_nonnegative, has_negative };

struct CoeffSignReport {
  CoeffSignScan result = CoeffSignScan::all_nonnegative;
  MultiIndex witness;  // a term with negative coefficient, when present
};

/// Sparse polynomial in barycentric variables over an exact or interval
/// scalar domain. Zero coefficients are never stored.
template <typename S>
class BaryPoly {
 public:
  using TermMap = std::map<MultiIndex, S>;

  explicit BaryPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("BaryPoly needs >= 1 variable");
  }

  static BaryPoly zero(int nvars) { return BaryPoly(nvars); }
  static BaryPoly constant(int nvars, S value) {
    BaryPoly p(nvars);
    p.add_term(MultiIndex(static_cast<size_t>(nvars)), std::move(value));
    return p;
  }
  static BaryPoly variable(int nvars, int i, int power = 1) {
    BaryPoly p(nvars);
    MultiIndex m(static_cast<size_t>(nvars));
    m.set(i, power);
    p.add_term(std::move(m), S(1));
    return p;
  }
  static BaryPoly monomial(int nvars, MultiIndex m, S coeff) {
    BaryPoly p(nvars);
    p.add_term(std::move(m), std::move(coeff));
    return p;
  }
  static BaryPoly sum_of_variables(int nvars) {
    BaryPoly p(nvars);
    for (int i = 0; i < nvars; ++i) {
      MultiIndex m(static_cast<size_t>(nvars));
      m.set(i, 1);
      p.add_term(std::move(m), S(1));
    }
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
  }

  void add_term(MultiIndex m, S coeff) {
    if (m.nvars() != static_cast<size_t>(nvars_))
      throw std::invalid_argument("term variable count mismatch");
    accumulate(m, coeff);
  }

  const S* coefficient(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_in_place(const BaryPoly& b) {
    check_compatible(b);
    for (const auto& [m, c] : b.terms_) accumulate(m, c);
  }
  void sub_in_place(const BaryPoly& b) {
    check_compatible(b);
    for (const auto& [m, c] : b.terms_) accumulate(m, -c);
  }

  BaryPoly operator-() const {
    BaryPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  friend BaryPoly operator+(const BaryPoly& a, const BaryPoly& b) {
    BaryPoly out = a;
    out.add_in_place(b);
    return out;
  }
  friend BaryPoly operator-(const BaryPoly& a, const BaryPoly& b) {
    BaryPoly out = a;
    out.sub_in_place(b);
    return out;
  }
  friend BaryPoly operator*(const BaryPoly& a, const BaryPoly& b) {
    a.check_compatible(b);
    BaryPoly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.accumulate(ma + mb, ca * cb);
    return out;
  }
  BaryPoly& operator+=(const BaryPoly& b) {
    add_in_place(b);
    return *this;
  }
  BaryPoly& operator-=(const BaryPoly& b) {
    sub_in_place(b);
    return *this;
  }

  friend bool operator==(const BaryPoly& a, const BaryPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const BaryPoly& a, const BaryPoly& b) {
    return !(a == b);
  }

  BaryPoly scaled(const S& factor) const {
    BaryPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.add_term(m, c * factor);
    return out;
  }

  BaryPoly pow(unsigned e) const {
    BaryPoly out = constant(nvars_, S(1));
    BaryPoly acc = *this;
    while (e > 0) {
      if (e & 1u) out = out * acc;
      if ((e >>= 1u) > 0) acc = acc * acc;
    }
    return out;
  }

  /// Direct sparse evaluation with a per-variable power table.
  S eval(std::span<const S> x) const {
    if (x.size() != static_cast<size_t>(nvars_))
      throw std::invalid_argument("eval: wrong point dimension");
    int maxdeg = 0;
    for (const auto& [m, c] : terms_)
      for (int i = 0; i < nvars_; ++i) maxdeg = std::max(maxdeg, m[i]);
    std::vector<std::vector<S>> pw(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      pw[i].reserve(maxdeg + 1);
      pw[i].push_back(S(1));
      for (int k = 1; k <= maxdeg; ++k) pw[i].push_back(pw[i].back() * x[i]);
    }
    S total(0);
    for (const auto& [m, c] : terms_) {
      S t = c;
      for (int i = 0; i < nvars_; ++i)
        if (m[i] > 0) t = t * pw[i][m[i]];
      total = total + t;
    }
    return total;
  }

  /// Multiply every term by (sum of variables)^(target - term degree).
  BaryPoly homogenize(int target_degree) const {
    if (degree() > target_degree)
      throw std::invalid_argument("homogenize target below degree");
    const BaryPoly sum = sum_of_variables(nvars_);
    std::vector<BaryPoly> sum_pows;
    sum_pows.push_back(constant(nvars_, S(1)));
    BaryPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
      const int k = target_degree - m.degree();
      while (static_cast<int>(sum_pows.size()) <= k)
        sum_pows.push_back(sum_pows.back() * sum);
      for (const auto& [ms, cs] : sum_pows[k].terms_)
        out.accumulate(m + ms, c * cs);
    }
    return out;
  }

  /// p * (sum of variables)^r, the degree-elevation step.
  BaryPoly degree_elevate(int r) const {
    if (r < 0) throw std::invalid_argument("negative elevation");
    BaryPoly out = *this;
    for (int step = 0; step < r; ++step) out = out.elevate_once();
    return out;
  }

  BaryPoly elevate_once() const {
    BaryPoly out(nvars_);
    for (const auto& [m, c] : terms_)
      for (int i = 0; i < nvars_; ++i) {
        MultiIndex mi = m;
        mi.set(i, mi[i] + 1);
        out.accumulate(mi, c);
      }
    return out;
  }

  /// Change to the barycentric coordinates of the sub-simplex spanned by
  /// V1..Vd and the centroid: l_j = m_j + m_{d+1}/(d+1) for j <= d and
  /// l_{d+1} = m_{d+1}/(d+1).
  BaryPoly substitute_subsimplex() const {
    static_assert(is_exact_domain<S>::value,
                  "sub-simplex substitution requires an exact domain");
    if (nvars_ < 2)
      throw std::invalid_argument("sub-simplex substitution needs >= 2 vars");
    const int last = nvars_ - 1;
    const Rational c = rat(1, nvars_);
    std::vector<Rational> cpow = {Rational(1)};
    BaryPoly out(nvars_);
    // Expand each (m_j + c*m_last)^{e_j} product one variable at a time,
    // carrying (exponent pattern, coefficient) pairs; this is the hot path
    // of the certifier.
    for (const auto& [m, coeff] : terms_) {
      while (static_cast<int>(cpow.size()) <= m.degree())
        cpow.push_back(cpow.back() * c);
      std::vector<std::pair<MultiIndex, S>> partial;
      MultiIndex seed(static_cast<size_t>(nvars_));
      seed.set(last, m[last]);
      partial.emplace_back(
          std::move(seed),
          coeff * scalar_from_rational<S>(cpow[static_cast<size_t>(m[last])]));
      for (int j = 0; j < last; ++j) {
        const int e = m[j];
        if (e == 0) continue;
        std::vector<std::pair<MultiIndex, S>> next;
        next.reserve(partial.size() * (e + 1));
        for (const auto& [pm, pc] : partial)
          for (int k = 0; k <= e; ++k) {
            MultiIndex nm = pm;
            nm.set(j, nm[j] + e - k);
            nm.set(last, nm[last] + k);
            next.emplace_back(
                std::move(nm),
                pc * scalar_from_rational<S>(binomial(e, k) * cpow[k]));
          }
        partial = std::move(next);
      }
      for (auto& [pm, pc] : partial) accumulate_into(out, pm, pc);
    }
    return out;
  }

  /// Drop every term with positive exponent in the last variable; the result
  /// equals p on the face where that coordinate vanishes.
  BaryPoly restrict_last_var_zero() const {
    BaryPoly out(nvars_);
    const int last = nvars_ - 1;
    for (const auto& [m, c] : terms_)
      if (m[last] == 0) out.terms_.emplace(m, c);
    return out;
  }

  BaryPoly permute_vars(std::span<const int> perm) const {
    BaryPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.permuted(perm), c);
    return out;
  }

  template <typename T, typename F>
  BaryPoly<T> map_scalars(F&& f) const {
    BaryPoly<T> out(nvars_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  /// Scan of exact coefficient signs. For interval coefficients a straddling
  /// interval cannot be classified and raises.
  CoeffSignReport min_coefficient_sign() const {
    for (const auto& [m, c] : terms_) {
      const std::optional<int> s = exact_sign(c);
      if (!s.has_value())
        throw std::runtime_error(
            "coefficient sign inconclusive (interval straddles zero)");
      if (*s < 0) return {CoeffSignScan::has_negative, m};
    }
    return {CoeffSignScan::all_nonnegative, MultiIndex()};
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      using fekete::to_string;
      out += "(" + to_string(it->second) + ")" + it->first.to_string();
    }
    return out;
  }

 private:
  void check_compatible(const BaryPoly& o) const {
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("variable count mismatch");
  }

  void accumulate(const MultiIndex& m, const S& c) {
    accumulate_into(*this, m, c);
  }

  static void accumulate_into(BaryPoly& p, const MultiIndex& m, const S& c) {
    if (is_exact_zero(c)) return;
    auto it = p.terms_.find(m);
    if (it == p.terms_.end()) {
      p.terms_.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (is_exact_zero(it->second)) p.terms_.erase(it);
    }
  }

  int nvars_;
  TermMap terms_;
};

/// The symmetric power sum p_r = sum_i x_i^r.
template <typename S>
BaryPoly<S> power_sum(int r, int nvars) {
  if (r < 1) throw std::invalid_argument("power_sum needs r >= 1");
  BaryPoly<S> p(nvars);
  for (int i = 0; i < nvars; ++i) {
    MultiIndex m(static_cast<size_t>(nvars));
    m.set(i, r);
    p.add_term(std::move(m), S(1));
  }
  return p;
}

/// Exact division: returns q with p = q * divisor, throws when the division
/// leaves a remainder.
template <typename S>
BaryPoly<S> divide_exact(BaryPoly<S> p, const BaryPoly<S>& divisor) {
  static_assert(is_exact_domain<S>::value);
  if (divisor.is_zero()) throw std::invalid_argument("division by zero poly");
  const MultiIndex dlead = divisor.terms().rbegin()->first;
  const S dlead_c = divisor.terms().rbegin()->second;
  BaryPoly<S> q(p.nvars());
  while (!p.is_zero()) {
    const MultiIndex plead = p.terms().rbegin()->first;
    const S plead_c = p.terms().rbegin()->second;
    MultiIndex qm;
    if (!plead.try_subtract(dlead, qm))
      throw std::runtime_error("divide_exact: not divisible");
    BaryPoly<S> t = BaryPoly<S>::monomial(p.nvars(), qm, plead_c / dlead_c);
    q.add_in_place(t);
    p.sub_in_place(t * divisor);
  }
  return q;
}

/// Dense univariate polynomial over the rationals, used for Legendre nodes,
/// resultants and the degree-5 parameter work.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static UniPoly constant(Rational v) { return UniPoly({std::move(v)}); }
  static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
  static UniPoly term(Rational c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  Interval eval_interval(const Interval& x) const;
  UniPoly derivative() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
  UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
  UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }

  UniPoly pow(unsigned e) const;
  /// Quotient and remainder with remainder degree < divisor degree.
  std::pair<UniPoly, UniPoly> divrem(const UniPoly& divisor) const;

  /// Legendre polynomial P_n by the three-term recurrence.
  static UniPoly legendre(int n);

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Homogenization of a univariate polynomial under x = x2 - x1 on the
/// 1-simplex: sum_k c_k (x2-x1)^k (x1+x2)^{target-k}.
template <typename S>
BaryPoly<S> homogenize_on_segment(const UniPoly& p, int target_degree) {
  if (p.degree() > target_degree)
    throw std::invalid_argument("target below degree");
  BaryPoly<S> diff(2), sum(2);
  diff.add_term(MultiIndex{0, 1}, S(1));
  diff.add_term(MultiIndex{1, 0}, S(-1));
  sum.add_term(MultiIndex{0, 1}, S(1));
  sum.add_term(MultiIndex{1, 0}, S(1));
  BaryPoly<S> out(2);
  for (int k = 0; k <= p.degree(); ++k) {
    if (sgn(p.coeff(k)) == 0) continue;
    out += (diff.pow(k) * sum.pow(target_degree - k))
               .scaled(scalar_from_rational<S>(p.coeff(k)));
  }
  return out;
}

}  // namespace fekete
