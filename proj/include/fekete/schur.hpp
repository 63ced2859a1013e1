#pragma once

#include <cstdint>
#include <vector>

#include "fekete/polyring.hpp"

namespace fekete {

/// Integer partition with weakly decreasing nonnegative parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p);
  explicit Partition(std::vector<int> p);

  int weight() const;
  size_t length() const { return parts.size(); }
  int part(size_t k) const {
    return k < parts.size() ? parts[k] : 0;
  }
};

/// Schur polynomial s_mu in m variables, expanded combinatorially over
/// semistandard tableaux. Zero when the partition has more than m rows.
BaryPoly<Rational> schur_expand(const Partition& mu, int m);

/// s_mu(1^m): the number of semistandard tableaux, by the Weyl dimension
/// product formula (used as the independent cross-check of the expansion).
Rational schur_dimension(const Partition& mu, int m);

/// Bialternant quotient det([x_i^{mu_j + m - j}]) / prod_{i<j}(x_i - x_j)
/// at a point with pairwise distinct coordinates.
Rational schur_bialternant_eval(const Partition& mu,
                                const std::vector<Rational>& x);

/// Prefix-sum dominance; both partitions must have equal weight.
bool majorizes(const Partition& mu1, const Partition& mu2);

/// The degree-2 kernel identity
/// (sum)^4 - K2 = 6 s[3,1] - 18 s[2,2] + 16 s[2,1,1] - 6 s[1,1,1,1]
/// as an exact polynomial identity in d+1 variables.
bool verify_k2_schur_identity(int d);

/// Companion identity
/// sum_{i<j} xi xj (xi - xj)^2 = s[3,1] - 3 s[2,2] + s[2,1,1].
bool verify_difference_square_schur_identity(int d);

struct SraReport {
  size_t samples = 0;
  size_t violations = 0;            // normalized Schur inequality failures
  size_t derived_bound_failures = 0;  // s[2,1,1] >= 3(d+2)/(d-2) s[1^4]
};

/// Sampled check of the normalized Schur inequality
/// s_mu1(x)/s_mu1(1^m) >= s_mu2(x)/s_mu2(1^m) for mu1 majorizing mu2, at
/// random nonnegative rational points (exact arithmetic). Also verifies the
/// derived bound between s[2,1,1] and s[1,1,1,1] pointwise.
SraReport sra_inequality_check(const Partition& mu1, const Partition& mu2,
                               int m, size_t samples, uint64_t seed = 1);

}  // namespace fekete
