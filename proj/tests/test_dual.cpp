#include <doctest.h>

#include <random>
#include <set>

#include "cubecrys/cube_complex.hpp"
#include "cubecrys/error.hpp"
#include "oracles.hpp"

using namespace cubecrys;

namespace {

FiniteWallspace lines(std::vector<GeometricWall> walls, RatVector base, std::int64_t box) {
  GeometricWalls d;
  d.dimension = 2;
  d.window.assign(2, {Rational(0), Rational(box)});
  d.walls = std::move(walls);
  d.base_point = std::move(base);
  return FiniteWallspace::geometric(std::move(d));
}

FiniteWallspace parallel_three() {
  return lines({{{1, 0}, 1}, {{1, 0}, 2}, {{1, 0}, 3}}, {Rational(1, 2), Rational(1, 2)}, 4);
}

FiniteWallspace triangle() {
  // x = 1, y = 1, x + y = 3 in [0,4]^2: pairwise crossing.
  return lines({{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 3}}, {Rational(1, 2), Rational(1, 2)}, 4);
}

/// Grid with vertical lines x = 1, 2 and horizontal lines y = 1, 2, 3.
FiniteWallspace grid23() { return grid_wallspace({2, 3}); }

/// Orientation of the grid23 region with a vertical lines to the left and
/// b horizontal lines below (walls 0,1 vertical, 2,3,4 horizontal).
Orientation region(std::size_t a, std::size_t b) {
  Orientation o;
  for (std::size_t k = 0; k < a; ++k)
    o.bits |= 1U << k;
  for (std::size_t k = 0; k < b; ++k)
    o.bits |= 1U << (2 + k);
  return o;
}

CubeComplex hexagon() {
  std::vector<Orientation> z{Orientation::parse("000"), Orientation::parse("100"),
                             Orientation::parse("110"), Orientation::parse("111"),
                             Orientation::parse("011"), Orientation::parse("001")};
  return CubeComplex(3, z, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

std::set<std::uint32_t> vertex_set(const CubeComplex &c) {
  std::set<std::uint32_t> s;
  for (auto o : c.zero_cubes())
    s.insert(o.bits);
  return s;
}

} // namespace

TEST_CASE("orientation strings") {
  Orientation o = Orientation::parse("1011");
  CHECK(o.side(0));
  CHECK_FALSE(o.side(1));
  CHECK(o.str(4) == "1011");
  CHECK(o.flipped(1).str(4) == "1111");
  CHECK_THROWS_AS(Orientation::parse("10x"), ParseError);
  CHECK_THROWS_AS(Orientation::parse(std::string(25, '0')), SizeError);
}

TEST_CASE("wallspace validation") {
  CHECK_THROWS_AS(lines({{{1, 0}, 5}}, {1, 1}, 4), InputError);              // misses window
  CHECK_THROWS_AS(lines({{{1, 0}, 1}, {{2, 0}, 2}}, {3, 3}, 4), InputError); // duplicate
  CHECK_THROWS_AS(lines({{{1, 0}, 1}}, {1, 3}, 4), InputError);              // base on wall
  CHECK_THROWS_AS(lines({{{1, 0}, 1}}, {5, 3}, 4), InputError);              // base outside
  CHECK_THROWS_AS(lines({{{0, 0}, 1}}, {2, 3}, 4), InputError);              // zero normal
  CHECK_THROWS_AS(grid_wallspace({13, 12}), SizeError);
  PartitionWalls bad{3, {{true, true, true}}, 0};
  CHECK_THROWS_AS(FiniteWallspace::partition(bad), InputError);
  PartitionWalls dup{3, {{true, false, false}, {false, true, true}}, 0};
  CHECK_THROWS_AS(FiniteWallspace::partition(dup), InputError);
}

TEST_CASE("exact halfspace meeting test agrees with a vertex-enumeration oracle") {
  std::mt19937_64 rng(31);
  Window box{{Rational(0), Rational(4)}, {Rational(-1), Rational(3)}};
  for (int trial = 0; trial < 3000; ++trial) {
    auto coord = [&]() { return Rational(static_cast<std::int64_t>(rng() % 9) - 4); };
    RatVector a{coord(), coord()}, b{coord(), coord()};
    if ((a[0].is_zero() && a[1].is_zero()) || (b[0].is_zero() && b[1].is_zero()))
      continue;
    Rational alpha(static_cast<std::int64_t>(rng() % 33) - 16, 2);
    Rational beta(static_cast<std::int64_t>(rng() % 33) - 16, 2);
    bool sa = rng() & 1U, sb = rng() & 1U;
    CHECK(open_halfspaces_meet_in_box(box, a, alpha, sa, b, beta, sb) ==
          oracle::halfspaces_meet_2d(box, a, alpha, sa, b, beta, sb));
  }
  // Touching at a corner is not meeting.
  Window unit{{Rational(0), Rational(2)}, {Rational(0), Rational(2)}};
  CHECK_FALSE(open_halfspaces_meet_in_box(unit, {1, 0}, 2, true, {0, 1}, 0, false));
  CHECK(open_halfspaces_meet_in_box(unit, {1, 0}, 1, true, {0, 1}, 1, true));
}

TEST_CASE("dual_complex examples") {
  CubeComplex path = dual_complex(parallel_three());
  CHECK(path.vertex_count() == 4);
  CHECK(path.edges().size() == 3);

  CubeComplex cube = dual_complex(triangle());
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.edges().size() == 12);
  CHECK(vertex_set(cube) == oracle::consistent_orientations(triangle()));

  CubeComplex grid = dual_complex(grid23());
  CHECK(grid.vertex_count() == 12);
  CHECK(grid.edges().size() == 17);
  CHECK(vertex_set(grid) == oracle::consistent_orientations(grid23()));
}

TEST_CASE("distance and median examples") {
  CubeComplex cube = dual_complex(triangle());
  Orientation x = cube.zero_cubes()[0];
  Orientation opposite{x.bits ^ 7U};
  CHECK(distance(cube, x, x) == 0);
  CHECK(distance(cube, x, opposite) == 3);

  CubeComplex grid = dual_complex(grid23());
  CHECK(distance(grid, region(0, 0), region(2, 3)) == 5);
  CHECK(median(grid, region(0, 0), region(2, 1), region(1, 3)) == region(1, 1));
  CHECK(median(grid, region(2, 0), region(0, 3), region(0, 3)) == region(0, 3));
  CHECK(median(grid, region(1, 2), region(1, 2), region(1, 2)) == region(1, 2));
  CHECK_THROWS_AS(distance(grid, region(0, 0), Orientation{1U << 20}), MembershipError);

  // Oracle: coordinatewise median in the product of paths.
  for (std::size_t a1 = 0; a1 <= 2; ++a1)
    for (std::size_t b1 = 0; b1 <= 3; ++b1)
      for (std::size_t a2 = 0; a2 <= 2; ++a2)
        for (std::size_t b2 = 0; b2 <= 3; ++b2)
          for (std::size_t a3 = 0; a3 <= 2; ++a3)
            for (std::size_t b3 = 0; b3 <= 3; ++b3) {
              auto mid = [](std::size_t p, std::size_t q, std::size_t r) {
                return std::max(std::min(p, q), std::min(std::max(p, q), r));
              };
              CHECK(median(grid, region(a1, b1), region(a2, b2), region(a3, b3)) ==
                    region(mid(a1, a2, a3), mid(b1, b2, b3)));
            }
}

TEST_CASE("is_median_graph examples") {
  CHECK(is_median_graph(dual_complex(triangle())));
  CHECK(is_median_graph(dual_complex(grid23())));
  CHECK_FALSE(is_median_graph(hexagon()));
  CHECK_FALSE(oracle::triple_median_check(hexagon()));
  CHECK(is_median_graph(CubeComplex(0, {Orientation{}}, {})));
  // Two vertices and no edge: disconnected.
  CHECK_FALSE(is_median_graph(CubeComplex(1, {Orientation{0}, Orientation{1}}, {})));
}

TEST_CASE("is_median_graph agrees with the exhaustive triple oracle on hand-built graphs") {
  // Random induced subgraphs of small cubes: median iff the oracle says so.
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t walls = 2 + rng() % 3;
    std::vector<Orientation> z;
    for (std::uint32_t b = 0; b < (1U << walls); ++b)
      if (rng() % 3 != 0)
        z.push_back(Orientation{b});
    if (z.empty())
      continue;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = i + 1; j < z.size(); ++j)
        if (std::popcount(z[i].bits ^ z[j].bits) == 1)
          edges.emplace_back(i, j);
    CubeComplex c(walls, z, edges);
    bool connected_isometric = true;
    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
      auto d = c.graph_distances(v);
      for (std::size_t u = 0; u < c.vertex_count(); ++u)
        if (d[u] != static_cast<std::size_t>(std::popcount(z[u].bits ^ z[v].bits)))
          connected_isometric = false;
    }
    bool expected = connected_isometric && oracle::triple_median_check(c);
    CHECK(is_median_graph(c) == expected);
  }
}

TEST_CASE("hyperplane_wallspace examples") {
  auto cube_ws = hyperplane_wallspace(dual_complex(triangle()));
  CHECK(cube_ws.wall_count() == 3);
  for (const auto &sides : cube_ws.partition_data().sides)
    CHECK(std::count(sides.begin(), sides.end(), true) == 4);

  auto path_ws = hyperplane_wallspace(dual_complex(parallel_three()));
  CHECK(path_ws.wall_count() == 3);
  // Nested: each positive side contains the next.
  const auto &s = path_ws.partition_data().sides;
  for (std::size_t w = 0; w + 1 < 3; ++w)
    for (std::size_t v = 0; v < 4; ++v)
      if (s[w + 1][v])
        CHECK(s[w][v]);

  CubeComplex grid = dual_complex(grid23());
  auto grid_ws = hyperplane_wallspace(grid);
  REQUIRE(grid_ws.wall_count() == 5);
  for (std::size_t w = 0; w < 5; ++w)
    for (std::size_t v = 0; v < grid.vertex_count(); ++v)
      CHECK(grid_ws.partition_data().sides[w][v] == grid.zero_cubes()[v].side(w));
}

TEST_CASE("duality_check examples") {
  CHECK(duality_check(dual_complex(triangle())));
  CHECK(duality_check(dual_complex(parallel_three())));
  CHECK(duality_check(dual_complex(grid23())));
  CHECK_FALSE(duality_check(hexagon()));
}

TEST_CASE("union_orientation examples") {
  CubeComplex grid = dual_complex(grid23());
  CHECK(union_orientation(grid, region(0, 0), region(2, 0), region(0, 3)) == region(2, 3));
  CHECK(union_orientation(grid, region(1, 1), region(1, 1), region(2, 3)) == region(2, 3));

  CubeComplex path = dual_complex(parallel_three());
  // Base region is left of every line; y and z on opposite extremes.
  Orientation mid = path.zero_cubes()[0];
  for (auto o : path.zero_cubes())
    if (std::popcount(o.bits) == 1)
      mid = o;
  Orientation left{0}, right{7};
  CHECK_THROWS_AS(union_orientation(path, mid, left, right), CrossingConditionError);
}

TEST_CASE("link_of_vertex examples") {
  CubeComplex grid = dual_complex(grid23());
  CHECK(is_isomorphic(link_of_vertex(grid, region(1, 1)), build_Qn(2)));
  auto corner = link_of_vertex(grid, region(0, 0));
  CHECK(corner.vertex_count() == 2);
  CHECK(corner.edge_count() == 1);
  auto tri = link_of_vertex(dual_complex(triangle()), Orientation{0});
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.f_vector() == std::vector<std::size_t>{3, 3, 1});
  CHECK_THROWS_AS(link_of_vertex(grid, Orientation{1U << 10}), MembershipError);
}

TEST_CASE("grid law: the dual of a grid is the product of paths") {
  for (auto sizes : std::vector<std::vector<std::size_t>>{{1}, {3}, {1, 1}, {2, 2}, {3, 1}, {1, 2, 3}, {2, 2, 2}}) {
    CubeComplex c = dual_complex(grid_wallspace(sizes));
    std::size_t vertices = 1;
    for (auto k : sizes)
      vertices *= k + 1;
    CHECK(c.vertex_count() == vertices);
    // Product of paths: edges = sum over axes of k_i * prod_{j != i} (k_j + 1).
    std::size_t edges = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
      edges += sizes[i] * vertices / (sizes[i] + 1);
    CHECK(c.edges().size() == edges);
    CHECK(c.hyperplanes().size() == c.wall_count());
  }
}

TEST_CASE("property: random wallspaces") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    INFO(seed);
    FiniteWallspace ws = random_wallspace(seed, 2 + seed % 2, 10);
    REQUIRE(ws.wall_count() <= 10);
    CubeComplex c = dual_complex(ws);
    CHECK(vertex_set(c) == oracle::consistent_orientations(ws));
    CHECK(c.hyperplanes().size() == ws.wall_count());
    CHECK(is_median_graph(c));
    CHECK(duality_check(c));
    if (c.vertex_count() <= 120)
      CHECK(oracle::triple_median_check(c));

    std::mt19937_64 rng(seed);
    const auto &z = c.zero_cubes();
    for (int k = 0; k < 30; ++k) {
      Orientation x = z[rng() % z.size()], y = z[rng() % z.size()], w = z[rng() % z.size()];
      Orientation m = median(c, x, y, w);
      CHECK(distance(c, x, m) + distance(c, m, y) == distance(c, x, y));
      CHECK(distance(c, y, m) + distance(c, m, w) == distance(c, y, w));
      CHECK(median(c, x, y, y) == y);
      try {
        Orientation u = union_orientation(c, x, y, w);
        CHECK((u.bits ^ x.bits) == ((x.bits ^ y.bits) | (x.bits ^ w.bits)));
        CHECK(distance(c, x, u) == distance(c, x, y) + distance(c, x, w));
      } catch (const CrossingConditionError &) {
        // Precondition fails: some pair of separators is shared or does
        // not cross.
        bool violated = ((x.bits ^ y.bits) & (x.bits ^ w.bits)) != 0;
        for (std::size_t a = 0; a < c.wall_count() && !violated; ++a)
          for (std::size_t b = 0; b < c.wall_count() && !violated; ++b)
            if (((x.bits ^ y.bits) >> a & 1U) && ((x.bits ^ w.bits) >> b & 1U))
              violated = !c.walls_cross(a, b);
        CHECK(violated);
      }
    }
  }
}

TEST_CASE("cube complex validation") {
  CHECK_THROWS_AS(CubeComplex(2, {Orientation{0}, Orientation{3}}, {{0, 1}}), InputError);
  CHECK_THROWS_AS(CubeComplex(2, {Orientation{0}, Orientation{0}}, {}), InputError);
  CHECK_THROWS_AS(CubeComplex(2, {Orientation{0}, Orientation{1}}, {{0, 5}}), InputError);
  CHECK_THROWS_AS(CubeComplex(1, {Orientation{2}}, {}), InputError);
}
