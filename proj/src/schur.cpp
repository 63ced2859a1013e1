#include "fekete/schur.hpp"

#include <algorithm>
#include <random>

#include "fekete/certify.hpp"

namespace fekete {

Partition::Partition(std::initializer_list<int> p) : parts(p) {
  if (!std::is_sorted(parts.rbegin(), parts.rend()))
    throw std::invalid_argument("partition parts must be weakly decreasing");
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (int v : parts)
    if (v < 0) throw std::invalid_argument("negative partition part");
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  if (!std::is_sorted(parts.rbegin(), parts.rend()))
    throw std::invalid_argument("partition parts must be weakly decreasing");
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (int v : parts)
    if (v < 0) throw std::invalid_argument("negative partition part");
}

int Partition::weight() const {
  int w = 0;
  for (int v : parts) w += v;
  return w;
}

namespace {

/// Row-major semistandard fill: rows weakly increase, columns strictly
/// increase, entries in 1..m. Each completed tableau contributes x^content.
void fill_tableau(const Partition& mu, int m, size_t row, size_t col,
                  std::vector<std::vector<int>>& t, MultiIndex& content,
                  BaryPoly<Rational>& out) {
  if (row == mu.parts.size()) {
    out.add_term(content, Rational(1));
    return;
  }
  const size_t row_len = static_cast<size_t>(mu.parts[row]);
  if (col == row_len) {
    fill_tableau(mu, m, row + 1, 0, t, content, out);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, t[row][col - 1]);
  if (row > 0 && col < static_cast<size_t>(mu.parts[row - 1]))
    lo = std::max(lo, t[row - 1][col] + 1);
  for (int entry = lo; entry <= m; ++entry) {
    t[row][col] = entry;
    content.set(static_cast<size_t>(entry - 1), content[entry - 1] + 1);
    fill_tableau(mu, m, row, col + 1, t, content, out);
    content.set(static_cast<size_t>(entry - 1), content[entry - 1] - 1);
  }
}

}  // namespace

BaryPoly<Rational> schur_expand(const Partition& mu, int m) {
  if (m < 1) throw std::invalid_argument("schur_expand: m must be >= 1");
  BaryPoly<Rational> out(m);
  if (static_cast<int>(mu.length()) > m) return out;  // no valid tableau
  if (mu.length() == 0) return BaryPoly<Rational>::constant(m, Rational(1));
  std::vector<std::vector<int>> t;
  for (int p : mu.parts) t.emplace_back(static_cast<size_t>(p), 0);
  MultiIndex content(static_cast<size_t>(m));
  fill_tableau(mu, m, 0, 0, t, content, out);
  return out;
}

Rational schur_dimension(const Partition& mu, int m) {
  if (static_cast<int>(mu.length()) > m) return Rational(0);
  Rational out(1);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const int mi = mu.part(static_cast<size_t>(i));
      const int mj = mu.part(static_cast<size_t>(j));
      out *= rat(mi - mj + j - i, j - i);
    }
  return out;
}

Rational schur_bialternant_eval(const Partition& mu,
                                const std::vector<Rational>& x) {
  const size_t m = x.size();
  if (static_cast<int>(mu.length()) > static_cast<int>(m))
    return Rational(0);
  DenseMatrix<Rational> num(m, m, Rational(0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      const unsigned e = static_cast<unsigned>(
          mu.part(j) + static_cast<int>(m) - 1 - static_cast<int>(j));
      num.at(i, j) = pow_rational(x[i], e);
    }
  Rational den(1);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      const Rational diff = x[i] - x[j];
      if (sgn(diff) == 0)
        throw std::invalid_argument(
            "bialternant evaluation needs distinct coordinates");
      den *= diff;
    }
  return Rational(bareiss_determinant(num) / den);
}

bool majorizes(const Partition& mu1, const Partition& mu2) {
  if (mu1.weight() != mu2.weight())
    throw std::invalid_argument("majorization needs equal weights");
  const size_t k = std::max(mu1.length(), mu2.length());
  int s1 = 0, s2 = 0;
  for (size_t i = 0; i < k; ++i) {
    s1 += mu1.part(i);
    s2 += mu2.part(i);
    if (s1 < s2) return false;
  }
  return true;
}

bool verify_k2_schur_identity(int d) {
  const int m = d + 1;
  const auto defect = try_rational_poly(fejer_defect_poly(2, d));
  if (!defect) return false;
  BaryPoly<Rational> rhs =
      schur_expand({3, 1}, m).scaled(Rational(6)) -
      schur_expand({2, 2}, m).scaled(Rational(18)) +
      schur_expand({2, 1, 1}, m).scaled(Rational(16)) -
      schur_expand({1, 1, 1, 1}, m).scaled(Rational(6));
  return *defect == rhs;
}

bool verify_difference_square_schur_identity(int d) {
  const int m = d + 1;
  BaryPoly<Rational> lhs(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto xi = BaryPoly<Rational>::variable(m, i);
      const auto xj = BaryPoly<Rational>::variable(m, j);
      lhs += xi * xj * (xi - xj).pow(2);
    }
  const BaryPoly<Rational> rhs = schur_expand({3, 1}, m) -
                                 schur_expand({2, 2}, m).scaled(Rational(3)) +
                                 schur_expand({2, 1, 1}, m);
  return lhs == rhs;
}

SraReport sra_inequality_check(const Partition& mu1, const Partition& mu2,
                               int m, size_t samples, uint64_t seed) {
  if (!majorizes(mu1, mu2))
    throw std::invalid_argument("sra check requires mu1 to majorize mu2");
  SraReport report;
  report.samples = samples;

  const BaryPoly<Rational> s1 = schur_expand(mu1, m);
  const BaryPoly<Rational> s2 = schur_expand(mu2, m);
  const Rational n1 = schur_dimension(mu1, m);
  const Rational n2 = schur_dimension(mu2, m);

  const int d = m - 1;
  const BaryPoly<Rational> s211 = schur_expand({2, 1, 1}, m);
  const BaryPoly<Rational> s1111 = schur_expand({1, 1, 1, 1}, m);
  const bool check_derived = d > 2;
  const Rational derived_factor = check_derived ? rat(3 * (d + 2), d - 2)
                                                : Rational(0);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numer(0, 40);
  std::uniform_int_distribution<long> denom(1, 12);
  for (size_t trial = 0; trial < samples; ++trial) {
    std::vector<Rational> x(static_cast<size_t>(m));
    for (auto& xi : x) xi = rat(numer(rng), denom(rng));
    const Rational lhs = sgn(n1) != 0 ? Rational(s1.eval(x) / n1)
                                      : Rational(0);
    const Rational rhs = sgn(n2) != 0 ? Rational(s2.eval(x) / n2)
                                      : Rational(0);
    if (lhs < rhs) ++report.violations;
    if (check_derived &&
        s211.eval(x) < derived_factor * s1111.eval(x))
      ++report.derived_bound_failures;
  }
  return report;
}

}  // namespace fekete
