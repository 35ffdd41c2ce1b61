#include "cubecrys/cube_complex.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <limits>
#include <random>
#include <set>

#include "cubecrys/error.hpp"

namespace cubecrys {

std::string Orientation::str(std::size_t wall_count) const {
  std::string s(wall_count, '0');
  for (std::size_t w = 0; w < wall_count; ++w)
    if (side(w))
      s[w] = '1';
  return s;
}

Orientation Orientation::parse(const std::string &bitstring) {
  if (bitstring.size() > kWallCap)
    throw SizeError("orientation longer than " + std::to_string(kWallCap) + " walls");
  Orientation o;
  for (std::size_t w = 0; w < bitstring.size(); ++w) {
    if (bitstring[w] == '1')
      o.bits |= std::uint32_t{1} << w;
    else if (bitstring[w] != '0')
      throw ParseError("orientation bitstring '" + bitstring + "' has a non-binary character");
  }
  return o;
}

// ---------------------------------------------------------------------------
// Halfspace geometry

namespace {

/// min over the box of <c, x>.
Rational box_minimum(const Window &window, const RatVector &c) {
  Rational m;
  for (std::size_t k = 0; k < c.size(); ++k) {
    Rational lo = c[k] * window[k].first;
    Rational hi = c[k] * window[k].second;
    m += lo < hi ? lo : hi;
  }
  return m;
}

/// Is there a point of the box with <c, x> < gamma?
bool open_halfspace_meets_box(const Window &window, const RatVector &c, const Rational &gamma) {
  return box_minimum(window, c) < gamma;
}

bool point_in_window(const Window &window, const RatVector &p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] < window[k].first || p[k] > window[k].second)
      return false;
  return true;
}

} // namespace

bool open_halfspaces_meet_in_box(const Window &window, const RatVector &a, const Rational &alpha,
                                 bool a_positive, const RatVector &b, const Rational &beta,
                                 bool b_positive) {
  // Rewrite both constraints as <c, x> < gamma.
  RatVector c1 = a_positive ? Rational(-1) * a : a;
  Rational g1 = a_positive ? -alpha : alpha;
  RatVector c2 = b_positive ? Rational(-1) * b : b;
  Rational g2 = b_positive ? -beta : beta;

  // Feasible iff min_x max(f1, f2) < 0 over the box. By minimax this equals
  // max over lambda in [0,1] of the concave piecewise-linear function
  // h(lambda) = min_x lambda f1 + (1 - lambda) f2, whose maximum sits at an
  // endpoint or where some coordinate of the combined covector vanishes.
  std::vector<Rational> lambdas{Rational(0), Rational(1)};
  for (std::size_t k = 0; k < c1.size(); ++k) {
    Rational denom = c2[k] - c1[k];
    if (denom.is_zero())
      continue;
    Rational l = c2[k] / denom;
    if (l.sign() > 0 && l < Rational(1))
      lambdas.push_back(l);
  }
  bool first = true;
  Rational best;
  for (const auto &l : lambdas) {
    Rational rest = Rational(1) - l;
    RatVector c(c1.size());
    for (std::size_t k = 0; k < c.size(); ++k)
      c[k] = l * c1[k] + rest * c2[k];
    Rational h = box_minimum(window, c) - l * g1 - rest * g2;
    if (first || h > best)
      best = h;
    first = false;
  }
  return best.sign() < 0;
}

// ---------------------------------------------------------------------------
// FiniteWallspace

FiniteWallspace FiniteWallspace::geometric(GeometricWalls data) {
  const std::size_t n = data.dimension;
  if (n == 0)
    throw DimensionError("wallspace dimension must be positive");
  if (data.window.size() != n)
    throw DimensionError("window has " + std::to_string(data.window.size()) +
                         " intervals, expected " + std::to_string(n));
  for (const auto &[lo, hi] : data.window)
    if (!(lo < hi))
      throw InputError("window interval [" + lo.str() + ", " + hi.str() + "] is empty");
  if (data.walls.size() > kWallCap)
    throw SizeError("wallspace has " + std::to_string(data.walls.size()) + " walls, cap is " +
                    std::to_string(kWallCap));
  if (data.base_point.size() != n)
    throw DimensionError("base point has wrong dimension");
  if (!point_in_window(data.window, data.base_point))
    throw InputError("base point lies outside the window");

  std::set<std::pair<RatVector, Rational>> seen;
  for (auto &w : data.walls) {
    if (w.normal.size() != n)
      throw DimensionError("wall normal has wrong dimension");
    w = canonical_wall(w.normal, w.offset);
    if (!seen.emplace(w.normal, w.offset).second)
      throw InputError("duplicate wall");
    RatVector neg = Rational(-1) * w.normal;
    if (!open_halfspace_meets_box(data.window, w.normal, w.offset) ||
        !open_halfspace_meets_box(data.window, neg, -w.offset))
      throw InputError("a wall does not split the window");
    if (dot(w.normal, data.base_point) == w.offset)
      throw InputError("base point lies on a wall");
  }
  return FiniteWallspace(std::move(data));
}

FiniteWallspace FiniteWallspace::partition(PartitionWalls data) {
  if (data.sides.size() > kWallCap)
    throw SizeError("wallspace has " + std::to_string(data.sides.size()) + " walls, cap is " +
                    std::to_string(kWallCap));
  if (data.base_point >= data.point_count)
    throw InputError("base point out of range");
  std::set<std::vector<bool>> seen;
  for (const auto &s : data.sides) {
    if (s.size() != data.point_count)
      throw DimensionError("partition wall has wrong length");
    auto positives = std::count(s.begin(), s.end(), true);
    if (positives == 0 || static_cast<std::size_t>(positives) == s.size())
      throw InputError("a partition wall has an empty side");
    std::vector<bool> complement(s.size());
    for (std::size_t v = 0; v < s.size(); ++v)
      complement[v] = !s[v];
    if (seen.count(s) || seen.count(complement))
      throw InputError("duplicate partition wall");
    seen.insert(s);
  }
  return FiniteWallspace(std::move(data));
}

std::size_t FiniteWallspace::wall_count() const {
  if (is_geometric())
    return geometric_data().walls.size();
  return partition_data().sides.size();
}

Orientation FiniteWallspace::base_orientation() const {
  Orientation o;
  if (is_geometric()) {
    const auto &d = geometric_data();
    for (std::size_t w = 0; w < d.walls.size(); ++w)
      if (dot(d.walls[w].normal, d.base_point) > d.walls[w].offset)
        o.bits |= std::uint32_t{1} << w;
  } else {
    const auto &d = partition_data();
    for (std::size_t w = 0; w < d.sides.size(); ++w)
      if (d.sides[w][d.base_point])
        o.bits |= std::uint32_t{1} << w;
  }
  return o;
}

bool FiniteWallspace::halfspaces_meet(std::size_t a, bool side_a, std::size_t b,
                                      bool side_b) const {
  if (is_geometric()) {
    const auto &d = geometric_data();
    return open_halfspaces_meet_in_box(d.window, d.walls[a].normal, d.walls[a].offset, side_a,
                                       d.walls[b].normal, d.walls[b].offset, side_b);
  }
  const auto &d = partition_data();
  for (std::size_t v = 0; v < d.point_count; ++v)
    if (d.sides[a][v] == side_a && d.sides[b][v] == side_b)
      return true;
  return false;
}

// ---------------------------------------------------------------------------
// CubeComplex

CubeComplex::CubeComplex(std::size_t wall_count, std::vector<Orientation> zero_cubes,
                         std::vector<std::pair<std::size_t, std::size_t>> edges)
    : wall_count_(wall_count), zero_cubes_(std::move(zero_cubes)) {
  if (wall_count_ > kWallCap)
    throw SizeError("cube complex has more than " + std::to_string(kWallCap) + " walls");
  const std::uint32_t mask =
      wall_count_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << wall_count_) - 1;
  for (std::size_t v = 0; v < zero_cubes_.size(); ++v) {
    if (zero_cubes_[v].bits & ~mask)
      throw InputError("0-cube uses a wall beyond the wall count");
    if (!index_.emplace(zero_cubes_[v].bits, v).second)
      throw InputError("duplicate 0-cube " + zero_cubes_[v].str(wall_count_));
  }
  adjacency_.assign(zero_cubes_.size(), {});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [a, b] : edges) {
    if (a >= zero_cubes_.size() || b >= zero_cubes_.size())
      throw InputError("edge endpoint out of range");
    if (a > b)
      std::swap(a, b);
    std::uint32_t diff = zero_cubes_[a].bits ^ zero_cubes_[b].bits;
    if (std::popcount(diff) != 1)
      throw InputError("edge joins 0-cubes that do not differ on exactly one wall");
    if (!seen.emplace(a, b).second)
      throw InputError("repeated edge");
    edges_.push_back({a, b, static_cast<std::size_t>(std::countr_zero(diff))});
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
}

std::size_t CubeComplex::index_of(Orientation o) const {
  auto it = index_.find(o.bits);
  if (it == index_.end())
    throw MembershipError("orientation " + o.str(wall_count_) + " is not a 0-cube");
  return it->second;
}

std::vector<std::size_t> CubeComplex::hyperplanes() const {
  std::set<std::size_t> walls;
  for (const auto &e : edges_)
    walls.insert(e.wall);
  return {walls.begin(), walls.end()};
}

std::vector<std::size_t> CubeComplex::graph_distances(std::size_t v) const {
  std::vector<std::size_t> dist(zero_cubes_.size(), std::numeric_limits<std::size_t>::max());
  std::deque<std::size_t> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (auto w : adjacency_[u])
      if (dist[w] == std::numeric_limits<std::size_t>::max()) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

bool CubeComplex::walls_cross(std::size_t u, std::size_t v) const {
  if (u == v)
    return false;
  unsigned seen = 0;
  for (auto o : zero_cubes_)
    seen |= 1U << (static_cast<unsigned>(o.side(u)) * 2 + static_cast<unsigned>(o.side(v)));
  return seen == 0xF;
}

// ---------------------------------------------------------------------------
// Construction and queries

CubeComplex dual_complex(const FiniteWallspace &ws) {
  const std::size_t walls = ws.wall_count();
  if (walls > kWallCap)
    throw SizeError("wallspace has more than " + std::to_string(kWallCap) + " walls");

  // meet[a][b] bit (2*sa + sb) set when the halfspaces meet.
  std::vector<std::vector<unsigned>> meet(walls, std::vector<unsigned>(walls, 0));
  for (std::size_t a = 0; a < walls; ++a)
    for (std::size_t b = a + 1; b < walls; ++b)
      for (unsigned sa = 0; sa < 2; ++sa)
        for (unsigned sb = 0; sb < 2; ++sb)
          if (ws.halfspaces_meet(a, sa != 0, b, sb != 0)) {
            meet[a][b] |= 1U << (2 * sa + sb);
            meet[b][a] |= 1U << (2 * sb + sa);
          }

  auto consistent_at = [&](Orientation o, std::size_t w) {
    for (std::size_t other = 0; other < walls; ++other) {
      if (other == w)
        continue;
      unsigned bit = 2 * static_cast<unsigned>(o.side(w)) + static_cast<unsigned>(o.side(other));
      if (!(meet[w][other] >> bit & 1U))
        return false;
    }
    return true;
  };

  std::vector<Orientation> zero_cubes{ws.base_orientation()};
  std::unordered_map<std::uint32_t, std::size_t> index{{zero_cubes[0].bits, 0}};
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < zero_cubes.size(); ++i) {
    for (std::size_t w = 0; w < walls; ++w) {
      Orientation next = zero_cubes[i].flipped(w);
      auto it = index.find(next.bits);
      if (it != index.end()) {
        if (it->second > i)
          edges.emplace_back(i, it->second);
        continue;
      }
      if (!consistent_at(next, w))
        continue;
      index.emplace(next.bits, zero_cubes.size());
      edges.emplace_back(i, zero_cubes.size());
      zero_cubes.push_back(next);
    }
  }
  // Edges to already-known vertices discovered later were added from the
  // lower index only; sweep once more for completeness.
  std::set<std::pair<std::size_t, std::size_t>> edge_set(edges.begin(), edges.end());
  for (std::size_t i = 0; i < zero_cubes.size(); ++i)
    for (std::size_t w = 0; w < walls; ++w) {
      auto it = index.find(zero_cubes[i].flipped(w).bits);
      if (it != index.end() && it->second > i)
        edge_set.emplace(i, it->second);
    }
  CubeComplex c(walls, std::move(zero_cubes), {edge_set.begin(), edge_set.end()});
  if (c.hyperplanes().size() != walls)
    throw InternalError("dual complex: some wall is not dual to any edge");
  return c;
}

std::size_t distance(const CubeComplex &c, Orientation x, Orientation y) {
  c.index_of(x);
  c.index_of(y);
  return static_cast<std::size_t>(std::popcount(x.bits ^ y.bits));
}

Orientation median(const CubeComplex &c, Orientation x, Orientation y, Orientation z) {
  c.index_of(x);
  c.index_of(y);
  c.index_of(z);
  Orientation m{(x.bits & y.bits) | (y.bits & z.bits) | (x.bits & z.bits)};
  if (!c.contains(m))
    throw MembershipError("majority vote " + m.str(c.wall_count()) + " is not a 0-cube");
  return m;
}

bool is_median_graph(const CubeComplex &c) {
  const std::size_t n = c.vertex_count();
  if (n > (std::size_t{1} << 14))
    throw SizeError("is_median_graph: more than 2^14 vertices");
  if (n <= 1)
    return true;

  for (std::size_t v = 0; v < n; ++v) {
    auto dist = c.graph_distances(v);
    for (std::size_t u = 0; u < n; ++u) {
      auto hamming = static_cast<std::size_t>(
          std::popcount(c.zero_cubes()[v].bits ^ c.zero_cubes()[u].bits));
      if (dist[u] != hamming)
        return false;
    }
  }

  // With graph distance equal to Hamming distance, the majority vote of a
  // triple is the unique candidate median, so it remains to show the vertex
  // set is closed under majority. A subset of the cube is majority-closed
  // iff it is cut out by its two-coordinate projections, so enumerate the
  // solutions of those pairwise constraints and require each to be a vertex.
  const std::size_t walls = c.wall_count();
  std::vector<std::vector<unsigned>> allowed(walls, std::vector<unsigned>(walls, 0));
  std::vector<unsigned> single(walls, 0);
  for (auto o : c.zero_cubes())
    for (std::size_t a = 0; a < walls; ++a) {
      single[a] |= 1U << static_cast<unsigned>(o.side(a));
      for (std::size_t b = 0; b < walls; ++b)
        allowed[a][b] |= 1U << (2 * static_cast<unsigned>(o.side(a)) +
                                static_cast<unsigned>(o.side(b)));
    }

  bool closed = true;
  std::uint32_t bits = 0;
  std::function<void(std::size_t)> assign = [&](std::size_t w) {
    if (!closed)
      return;
    if (w == walls) {
      if (!c.contains(Orientation{bits}))
        closed = false;
      return;
    }
    for (unsigned s = 0; s < 2 && closed; ++s) {
      if (!(single[w] >> s & 1U))
        continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < w && ok; ++prev)
        ok = allowed[prev][w] >> (2 * ((bits >> prev) & 1U) + s) & 1U;
      if (!ok)
        continue;
      if (s)
        bits |= std::uint32_t{1} << w;
      assign(w + 1);
      bits &= ~(std::uint32_t{1} << w);
    }
  };
  assign(0);
  return closed;
}

FiniteWallspace hyperplane_wallspace(const CubeComplex &c) {
  PartitionWalls data;
  data.point_count = c.vertex_count();
  for (auto w : c.hyperplanes()) {
    std::vector<bool> sides(c.vertex_count());
    for (std::size_t v = 0; v < c.vertex_count(); ++v)
      sides[v] = c.zero_cubes()[v].side(w);
    data.sides.push_back(std::move(sides));
  }
  return FiniteWallspace::partition(std::move(data));
}

bool duality_check(const CubeComplex &c) {
  if (c.vertex_count() == 0)
    return false;
  const auto hyperplanes = c.hyperplanes();
  CubeComplex back;
  try {
    back = dual_complex(hyperplane_wallspace(c));
  } catch (const InputError &) {
    return false;
  }
  if (back.vertex_count() != c.vertex_count() || back.edges().size() != c.edges().size())
    return false;

  auto principal = [&](std::size_t v) {
    Orientation o;
    for (std::size_t h = 0; h < hyperplanes.size(); ++h)
      if (c.zero_cubes()[v].side(hyperplanes[h]))
        o.bits |= std::uint32_t{1} << h;
    return o;
  };
  std::set<std::uint32_t> images;
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    Orientation o = principal(v);
    if (!back.contains(o) || !images.insert(o.bits).second)
      return false;
  }
  for (const auto &e : c.edges()) {
    std::uint32_t diff = principal(e.a).bits ^ principal(e.b).bits;
    if (std::popcount(diff) != 1)
      return false;
    auto label = static_cast<std::size_t>(std::countr_zero(diff));
    if (hyperplanes[label] != e.wall)
      return false;
  }
  return true;
}

Orientation union_orientation(const CubeComplex &c, Orientation x, Orientation y, Orientation z) {
  c.index_of(x);
  c.index_of(y);
  c.index_of(z);
  const std::uint32_t sep_y = x.bits ^ y.bits;
  const std::uint32_t sep_z = x.bits ^ z.bits;
  for (std::size_t u = 0; u < c.wall_count(); ++u) {
    if (!(sep_y >> u & 1U))
      continue;
    for (std::size_t v = 0; v < c.wall_count(); ++v) {
      if (!(sep_z >> v & 1U))
        continue;
      if (!c.walls_cross(u, v))
        throw CrossingConditionError("walls " + std::to_string(u) + " and " + std::to_string(v) +
                                     " do not cross");
    }
  }
  Orientation u{x.bits ^ sep_y ^ sep_z};
  if (!c.contains(u))
    throw InternalError("union orientation " + u.str(c.wall_count()) + " is not a 0-cube");
  return u;
}

SimplicialComplex link_of_vertex(const CubeComplex &c, Orientation v) {
  c.index_of(v);
  std::vector<std::size_t> walls;
  for (std::size_t w = 0; w < c.wall_count(); ++w)
    if (c.contains(v.flipped(w)))
      walls.push_back(w);
  std::vector<std::string> labels;
  for (auto w : walls)
    labels.push_back(std::to_string(w));
  std::vector<SimplicialComplex::Edge> edges;
  for (std::size_t i = 0; i < walls.size(); ++i)
    for (std::size_t j = i + 1; j < walls.size(); ++j)
      if (c.contains(v.flipped(walls[i]).flipped(walls[j])))
        edges.emplace_back(i, j);
  return {std::move(labels), std::move(edges)};
}

FiniteWallspace random_wallspace(std::uint64_t seed, std::size_t dim, std::size_t max_walls) {
  std::mt19937_64 rng(seed);
  const std::size_t target = 1 + static_cast<std::size_t>(rng() % max_walls);
  GeometricWalls data;
  data.dimension = dim;
  data.window.assign(dim, {Rational(0), Rational(10)});
  std::set<std::pair<RatVector, Rational>> seen;
  for (std::size_t attempt = 0; data.walls.size() < target && attempt < 1000; ++attempt) {
    RatVector normal(dim);
    bool nonzero = false;
    for (auto &x : normal) {
      x = Rational(static_cast<std::int64_t>(rng() % 7) - 3);
      nonzero = nonzero || !x.is_zero();
    }
    if (!nonzero)
      continue;
    RatVector through(dim);
    for (auto &x : through)
      x = Rational(static_cast<std::int64_t>(rng() % 99 + 1), 10);
    GeometricWall w = canonical_wall(normal, dot(normal, through));
    if (seen.emplace(w.normal, w.offset).second)
      data.walls.push_back(std::move(w));
  }
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt == 1000)
      throw InternalError("random_wallspace: no admissible base point");
    RatVector base(dim);
    for (auto &x : base)
      x = Rational(static_cast<std::int64_t>(rng() % 69 + 1), 7);
    bool on_wall = std::any_of(data.walls.begin(), data.walls.end(),
                               [&](const GeometricWall &w) { return dot(w.normal, base) == w.offset; });
    if (!on_wall) {
      data.base_point = std::move(base);
      break;
    }
  }
  return FiniteWallspace::geometric(std::move(data));
}

FiniteWallspace grid_wallspace(const std::vector<std::size_t> &walls_per_axis) {
  const std::size_t dim = walls_per_axis.size();
  std::size_t extent = 1;
  for (auto k : walls_per_axis)
    extent = std::max(extent, k + 1);
  GeometricWalls data;
  data.dimension = dim;
  data.window.assign(dim, {Rational(0), Rational(static_cast<std::int64_t>(extent))});
  data.base_point.assign(dim, Rational(1, 2));
  for (std::size_t axis = 0; axis < dim; ++axis)
    for (std::size_t k = 1; k <= walls_per_axis[axis]; ++k) {
      RatVector normal(dim);
      normal[axis] = 1;
      data.walls.push_back({normal, Rational(static_cast<std::int64_t>(k))});
    }
  return FiniteWallspace::geometric(std::move(data));
}

} // namespace cubecrys
