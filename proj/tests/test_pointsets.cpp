#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fekete/pointsets.hpp"

using namespace fekete;

TEST_CASE("cardinality") {
  CHECK(cardinality(5, 4) == 126);
  CHECK(cardinality(0, 3) == 1);
  CHECK(cardinality(0, 9) == 1);
  CHECK(cardinality(5, 3) == 56);
  CHECK(cardinality(4, 2) == 15);
  for (int d = 1; d <= 9; ++d) {
    // (d+1) + 2 C(d+1,2) + C(d+1,3) = C(d+3,3)
    const mpz_class lhs = mpz_class(d + 1) + mpz_class((d + 1) * d) +
                          mpz_class((d + 1) * d * (d - 1) / 6);
    CHECK(lhs == cardinality(3, d));
  }
}

TEST_CASE("degree-1 candidate is the vertex set") {
  const auto ps = fekete_candidate_exact(1, 3);
  CHECK(ps.size() == 4);
  for (const auto& pt : ps.points) {
    CHECK(pt.tag.face_dim == 0);
    CHECK(pt.face.size() == 1);
  }
}

TEST_CASE("degree-4 candidate in the plane has 15 points") {
  const auto ps = fekete_candidate_exact(4, 2);
  CHECK(ps.size() == 15);
  int by_dim[3] = {0, 0, 0};
  for (const auto& pt : ps.points) ++by_dim[pt.tag.face_dim];
  CHECK(by_dim[0] == 3);  // vertices
  CHECK(by_dim[1] == 9);  // 3 nodes on each of 3 edges
  CHECK(by_dim[2] == 3);  // interior triangle
}

TEST_CASE("degree-4 triangle points use the reference weights") {
  const auto ps = fekete_candidate_exact(4, 2);
  const AlgebraicScalar apex =
      AlgebraicScalar::of(rat(4, 11), rat(1, 11), Rational(0), Rational(0));
  const AlgebraicScalar rest =
      AlgebraicScalar::of(rat(7, 22), rat(-1, 22), Rational(0), Rational(0));
  int found = 0;
  for (const auto& pt : ps.points) {
    if (pt.tag.face_dim != 2) continue;
    ++found;
    const int a = pt.tag.ordered[0];
    CHECK(pt.coords[static_cast<size_t>(a)] == apex);
    for (int q : {pt.tag.ordered[1], pt.tag.ordered[2]})
      CHECK(pt.coords[static_cast<size_t>(q)] == rest);
  }
  CHECK(found == 3);
}

TEST_CASE("degree-5 candidate counts per face dimension") {
  const auto params = Deg5Params::seeded();
  const auto ps = fekete_candidate_numeric(5, 3, params);
  CHECK(ps.size() == 56);
  int by_dim[4] = {0, 0, 0, 0};
  for (const auto& pt : ps.points) ++by_dim[pt.tag.face_dim];
  CHECK(by_dim[0] == 4);
  CHECK(by_dim[1] == 24);
  CHECK(by_dim[2] == 24);
  CHECK(by_dim[3] == 4);

  const auto ps4 = fekete_candidate_numeric(5, 4, params);
  CHECK(ps4.size() == 126);
}

TEST_CASE("cardinality matches C(n+d,d) for all supported degrees") {
  const auto params = Deg5Params::seeded();
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 6; ++d) {
      if (n <= 4) {
        CHECK(mpz_class(static_cast<long>(
                  fekete_candidate_exact(n, d).size())) == cardinality(n, d));
      } else {
        CHECK(mpz_class(static_cast<long>(
                  fekete_candidate_numeric(n, d, params).size())) ==
              cardinality(n, d));
      }
    }
}

TEST_CASE("edge nodes") {
  SUBCASE("degree 2: endpoints plus midpoint") {
    const auto nodes = edge_nodes_exact(2);
    REQUIRE(nodes.size() == 3);
    CHECK(nodes[1][0] == AlgebraicScalar(rat(1, 2)));
  }
  SUBCASE("degree 3 interior nodes sit at t = (1+1/sqrt5)/2") {
    const auto nodes = edge_nodes_exact(3);
    REQUIRE(nodes.size() == 4);
    const AlgebraicScalar t =
        AlgebraicScalar::of(rat(1, 2), rat(1, 10), Rational(0), Rational(0));
    CHECK(nodes[1][0] == t);
    CHECK(nodes[2][0] == AlgebraicScalar(1) - t);
    // 2t - 1 = 1/sqrt5, so (2t-1)^2 = 1/5.
    const AlgebraicScalar z = t + t - AlgebraicScalar(1);
    CHECK(z * z == AlgebraicScalar(rat(1, 5)));
  }
  SUBCASE("degree 4 interior nodes are zeros of P4'") {
    const auto nodes = edge_nodes_exact(4);
    REQUIRE(nodes.size() == 5);
    const AlgebraicScalar z = nodes[1][0] + nodes[1][0] - AlgebraicScalar(1);
    CHECK(z * z == AlgebraicScalar(rat(3, 7)));
  }
  SUBCASE("degree 5 interior nodes are zeros of P5'") {
    const auto nodes = edge_nodes_numeric(5, 128);
    REQUIRE(nodes.size() == 6);
    // z = +-sqrt((7 +- 2 sqrt7)/21) ~ +-0.765055..., +-0.285231...
    bool has_outer = false, has_inner = false;
    for (const auto& node : nodes) {
      const double z = node[0].mid_double() - node[1].mid_double();
      if (std::abs(std::abs(z) - 0.765055323929465) < 1e-12) has_outer = true;
      if (std::abs(std::abs(z) - 0.285231516480645) < 1e-12) has_inner = true;
    }
    CHECK(has_outer);
    CHECK(has_inner);
  }
  SUBCASE("counts are n+1 including endpoints") {
    for (int n = 1; n <= 4; ++n)
      CHECK(edge_nodes_exact(n).size() == static_cast<size_t>(n + 1));
    CHECK(edge_nodes_numeric(5).size() == 6);
  }
}

TEST_CASE("face restriction reproduces the lower-dimensional construction") {
  for (int n = 1; n <= 4; ++n) {
    const auto big = fekete_candidate_exact(n, 4);
    for (const std::vector<int>& face :
         {std::vector<int>{0, 2}, std::vector<int>{1, 3, 4},
          std::vector<int>{0, 1, 2, 4}}) {
      const auto restricted = restrict_to_face(big, face);
      const auto direct =
          fekete_candidate_exact(n, static_cast<int>(face.size()) - 1);
      CHECK(same_point_set(restricted, direct));
    }
  }
  const auto params = Deg5Params::seeded();
  const auto big5 = fekete_candidate_numeric(5, 3, params);
  const auto restricted = restrict_to_face(big5, {0, 1, 3});
  const auto direct = fekete_candidate_numeric(5, 2, params);
  CHECK(same_point_set(restricted, direct));
}

TEST_CASE("sets are invariant under vertex permutations") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 4; ++n) {
    const auto ps = fekete_candidate_exact(n, 3);
    std::vector<int> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    ExactPointSet shuffled;
    shuffled.degree = ps.degree;
    shuffled.dim = ps.dim;
    for (const auto& pt : ps.points) {
      BaryPoint<AlgebraicScalar> np = pt;
      for (size_t i = 0; i < pt.coords.size(); ++i)
        np.coords[static_cast<size_t>(perm[i])] = pt.coords[i];
      shuffled.points.push_back(std::move(np));
    }
    CHECK(same_point_set(ps, shuffled));
  }
}

TEST_CASE("invalid arguments are rejected") {
  CHECK_THROWS(fekete_candidate_exact(6, 2));
  CHECK_THROWS(fekete_candidate_exact(0, 2));
  CHECK_THROWS(fekete_candidate_exact(2, 0));
  CHECK_THROWS(fekete_candidate_exact(5, 2));  // degree 5 is numeric-only
  const auto params = Deg5Params::seeded();
  CHECK_THROWS(fekete_candidate_numeric(6, 2, params));
}

TEST_CASE("degree-5 3-face parameter w = (9-sqrt5)/38") {
  const auto w = Deg5Params::w_global();
  const AlgebraicScalar lhs = AlgebraicScalar(19) * w * w -
                              AlgebraicScalar(9) * w + AlgebraicScalar(1);
  CHECK(lhs.is_zero());
  CHECK(Deg5Params::w_local() + w == AlgebraicScalar(rat(9, 19)));
}
