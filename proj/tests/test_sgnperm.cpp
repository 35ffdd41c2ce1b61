#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "cubecrys/error.hpp"
#include "cubecrys/signed_permutation.hpp"
#include "cubecrys/simplicial_complex.hpp"
#include "oracles.hpp"

using namespace cubecrys;

TEST_CASE("enumerate_group sizes match the wreath product and brute force") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto g = enumerate_group(n);
    CHECK(g.size() == (std::size_t{1} << n) * oracle::factorial(n));
    CHECK(std::set<SignedPermutation>(g.begin(), g.end()).size() == g.size());
  }
  CHECK(enumerate_group(6).size() == 46080);
  CHECK_THROWS_AS(enumerate_group(0), SizeError);
  CHECK_THROWS_AS(enumerate_group(7), SizeError);

  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<RatMatrix> from_group;
    for (const auto &s : enumerate_group(n))
      from_group.insert(to_matrix(s));
    auto brute = oracle::orthogonal_integer_matrices(n);
    CHECK(from_group == std::set<RatMatrix>(brute.begin(), brute.end()));
  }
}

TEST_CASE("closure under product and inverse") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto g = enumerate_group(n);
    std::set<SignedPermutation> set(g.begin(), g.end());
    for (const auto &s : g) {
      CHECK(set.count(s.inverse()));
      CHECK((s * s.inverse()).is_identity());
    }
    std::mt19937_64 rng(n);
    for (int trial = 0; trial < 200; ++trial) {
      const auto &s = g[rng() % g.size()];
      const auto &t = g[rng() % g.size()];
      CHECK(set.count(s * t));
      CHECK(to_matrix(s * t) == to_matrix(s) * to_matrix(t));
    }
  }
}

TEST_CASE("to_matrix examples") {
  CHECK(to_matrix(SignedPermutation::identity(3)) == RatMatrix::identity(3));
  CHECK(to_matrix(SignedPermutation({1, 0}, {1, 1})) == RatMatrix{{0, 1}, {1, 0}});
  CHECK(to_matrix(SignedPermutation({0, 1}, {-1, 1})) == RatMatrix{{-1, 0}, {0, 1}});
  for (const auto &s : enumerate_group(3)) {
    CHECK(is_signed_permutation_matrix(to_matrix(s)));
    CHECK(SignedPermutation::from_matrix(to_matrix(s)) == s);
  }
}

TEST_CASE("is_signed_permutation_matrix examples") {
  CHECK(is_signed_permutation_matrix(RatMatrix::identity(2)));
  CHECK(is_signed_permutation_matrix(RatMatrix{{0, -1}, {1, 0}}));
  CHECK_FALSE(is_signed_permutation_matrix(RatMatrix{{0, -1}, {1, 1}}));
  CHECK_FALSE(is_signed_permutation_matrix(RatMatrix{{2, 0}, {0, 1}}));
  CHECK_THROWS_AS(is_signed_permutation_matrix(RatMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(SignedPermutation({0, 0}, {1, 1}), InputError);
}

TEST_CASE("classify_element") {
  auto id = classify_element(SignedPermutation::identity(3));
  CHECK(id.order == 1);
  CHECK(id.determinant == 1);
  // (1 2 3) with signs (+,+,-), 0-based letters.
  auto c = classify_element(SignedPermutation({1, 2, 0}, {1, 1, -1}));
  CHECK(c.order == 6);
  CHECK(c.determinant == -1);

  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto &s : enumerate_group(n)) {
      auto e = classify_element(s);
      RatMatrix m = to_matrix(s);
      CHECK(oracle::naive_order(m) == e.order);
      CHECK(oracle::laplace_det(m) == e.determinant);
      CHECK(m.trace() == s.trace());
    }
}

TEST_CASE("orders in O(2,Z) and O(3,Z)") {
  std::set<std::size_t> orders2;
  for (const auto &s : enumerate_group(2))
    orders2.insert(classify_element(s).order);
  CHECK(orders2 == std::set<std::size_t>{1, 2, 4});

  std::set<std::size_t> orders3;
  std::size_t order_six = 0;
  for (const auto &s : enumerate_group(3)) {
    auto e = classify_element(s);
    orders3.insert(e.order);
    if (e.order == 6) {
      ++order_six;
      CHECK(e.determinant == -1);
    }
  }
  CHECK(orders3 == std::set<std::size_t>{1, 2, 3, 4, 6});
  CHECK(order_six == 8);
}

TEST_CASE("build_Qn") {
  auto q1 = build_Qn(1);
  CHECK(q1.vertex_count() == 2);
  CHECK(q1.edge_count() == 0);
  auto q2 = build_Qn(2);
  CHECK(q2.vertex_count() == 4);
  CHECK(q2.edge_count() == 4);
  for (std::size_t v = 0; v < 4; ++v)
    CHECK(q2.degree(v) == 2);
  auto q3 = build_Qn(3);
  CHECK(q3.f_vector() == std::vector<std::size_t>{6, 12, 8});
  for (std::size_t n = 1; n <= 6; ++n) {
    auto f = build_Qn(n).f_vector();
    REQUIRE(f.size() == n);
    for (std::size_t k = 0; k < n; ++k) {
      // 2^(k+1) * C(n, k+1)
      std::size_t binom = oracle::factorial(n) / (oracle::factorial(k + 1) * oracle::factorial(n - k - 1));
      CHECK(f[k] == (std::size_t{1} << (k + 1)) * binom);
    }
  }
  CHECK_THROWS_AS(build_Qn(0), SizeError);
  CHECK_THROWS_AS(build_Qn(9), SizeError);
}

TEST_CASE("signed permutations act on Q_n as automorphisms") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto q = build_Qn(n);
    std::map<std::string, std::size_t> index;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
      index[q.labels()[v]] = v;
    for (const auto &s : enumerate_group(n)) {
      // (sign, axis) -> (sign * signs(axis), perm(axis))
      auto image = [&](std::size_t v) {
        const std::string &l = q.labels()[v];
        int sign = l[0] == '+' ? 1 : -1;
        std::size_t axis = std::stoul(l.substr(1)) - 1;
        sign *= s.sign(axis);
        return index.at(std::string(sign > 0 ? "+" : "-") + std::to_string(s.image(axis) + 1));
      };
      for (auto [a, b] : q.edges())
        CHECK(q.adjacent(image(a), image(b)));
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t expected = (std::size_t{1} << n) * oracle::factorial(n);
    CHECK(oracle::brute_automorphisms(build_Qn(n)) == expected);
    CHECK(count_isomorphisms(build_Qn(n), build_Qn(n)) == expected);
  }
  CHECK(count_isomorphisms(build_Qn(4), build_Qn(4)) == 384);
}

TEST_CASE("simplicial_join") {
  auto q1 = build_Qn(1);
  auto square = simplicial_join(q1.relabeled("a"), q1.relabeled("b"));
  CHECK(is_isomorphic(square, build_Qn(2)));
  SimplicialComplex point({"p"}, {});
  auto path = simplicial_join(point, q1);
  CHECK(path.vertex_count() == 3);
  CHECK(path.edge_count() == 2);
  CHECK(is_isomorphic(path, SimplicialComplex({"x", "y", "z"}, {{0, 1}, {1, 2}})));
  CHECK(is_isomorphic(simplicial_join(build_Qn(2).relabeled("a"), q1.relabeled("b")), build_Qn(3)));
  CHECK_THROWS_AS(simplicial_join(q1, q1), RelabelError);
}

TEST_CASE("is_isomorphic") {
  SimplicialComplex four_cycle({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  SimplicialComplex path3({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(is_isomorphic(build_Qn(2), four_cycle));
  CHECK_FALSE(is_isomorphic(build_Qn(2), path3));
  CHECK_FALSE(is_isomorphic(build_Qn(2), build_Qn(3)));

  // Same degree sequence, different graphs: 6-cycle vs two triangles.
  SimplicialComplex hexagon({"0", "1", "2", "3", "4", "5"},
                            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  SimplicialComplex triangles({"0", "1", "2", "3", "4", "5"},
                              {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(is_isomorphic(hexagon, triangles));

  std::vector<std::string> many;
  for (int i = 0; i < 33; ++i)
    many.push_back(std::to_string(i));
  SimplicialComplex big(many, {});
  CHECK_THROWS_AS(is_isomorphic(big, big), SizeError);
}

TEST_CASE("property: isomorphism is invariant under random relabeling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 3 + rng() % 8;
    std::vector<SimplicialComplex::Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng() % 3 == 0)
          edges.emplace_back(a, b);
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < n; ++v)
      labels.push_back("v" + std::to_string(v));
    SimplicialComplex g(labels, edges);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<SimplicialComplex::Edge> moved;
    for (auto [a, b] : edges)
      moved.emplace_back(perm[a], perm[b]);
    CHECK(is_isomorphic(g, SimplicialComplex(labels, moved)));
    if (n <= 7)
      CHECK(count_isomorphisms(g, g) == oracle::brute_automorphisms(g));

    if (!edges.empty()) {
      auto fewer = moved;
      fewer.pop_back();
      CHECK_FALSE(is_isomorphic(g, SimplicialComplex(labels, fewer)));
    }
  }
}

TEST_CASE("complex validation") {
  CHECK_THROWS_AS(SimplicialComplex({"a"}, {{0, 0}}), InputError);
  CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(SimplicialComplex({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{0, 2}}), InputError);
}
