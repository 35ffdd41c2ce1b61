#include "cubecrys/simplicial_complex.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cubecrys/error.hpp"

namespace cubecrys {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, std::vector<Edge> edges)
    : labels_(std::move(vertices)) {
  const std::size_t n = labels_.size();
  {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != n)
      throw InputError("simplicial complex: duplicate vertex label");
  }
  adjacency_.assign(n, {});
  matrix_.assign(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) {
    if (a >= n || b >= n)
      throw InputError("simplicial complex: edge endpoint out of range");
    if (a == b)
      throw InputError("simplicial complex: loop at vertex " + labels_[a]);
    if (a > b)
      std::swap(a, b);
    if (matrix_[a][b])
      throw InputError("simplicial complex: repeated edge " + labels_[a] + "-" + labels_[b]);
    matrix_[a][b] = matrix_[b][a] = true;
    edges_.emplace_back(a, b);
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto &adj : adjacency_)
    std::sort(adj.begin(), adj.end());
}

bool SimplicialComplex::adjacent(std::size_t a, std::size_t b) const { return matrix_[a][b]; }

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  std::vector<std::size_t> clique;
  std::function<void(const std::vector<std::size_t> &)> extend =
      [&](const std::vector<std::size_t> &candidates) {
        for (std::size_t k = 0; k < candidates.size(); ++k) {
          std::size_t v = candidates[k];
          clique.push_back(v);
          if (f.size() < clique.size())
            f.push_back(0);
          ++f[clique.size() - 1];
          std::vector<std::size_t> next;
          for (std::size_t j = k + 1; j < candidates.size(); ++j)
            if (matrix_[v][candidates[j]])
              next.push_back(candidates[j]);
          extend(next);
          clique.pop_back();
        }
      };
  std::vector<std::size_t> all(labels_.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  extend(all);
  return f;
}

SimplicialComplex SimplicialComplex::relabeled(const std::string &prefix) const {
  std::vector<std::string> labels;
  labels.reserve(labels_.size());
  for (const auto &l : labels_)
    labels.push_back(prefix + l);
  return {std::move(labels), edges_};
}

SimplicialComplex build_Qn(std::size_t n) {
  if (n < 1 || n > 8)
    throw SizeError("build_Qn: n = " + std::to_string(n) + " outside 1..8");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) {
    labels.push_back("+" + std::to_string(i));
    labels.push_back("-" + std::to_string(i));
  }
  std::vector<SimplicialComplex::Edge> edges;
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b)
      if (a / 2 != b / 2)
        edges.emplace_back(a, b);
  return {std::move(labels), std::move(edges)};
}

SimplicialComplex simplicial_join(const SimplicialComplex &a, const SimplicialComplex &b) {
  std::set<std::string> left(a.labels().begin(), a.labels().end());
  for (const auto &l : b.labels())
    if (left.count(l))
      throw RelabelError("simplicial_join: label '" + l + "' occurs in both complexes");
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  const std::size_t shift = a.vertex_count();
  std::vector<SimplicialComplex::Edge> edges = a.edges();
  for (auto [u, v] : b.edges())
    edges.emplace_back(u + shift, v + shift);
  for (std::size_t u = 0; u < a.vertex_count(); ++u)
    for (std::size_t v = 0; v < b.vertex_count(); ++v)
      edges.emplace_back(u, v + shift);
  return {std::move(labels), std::move(edges)};
}

namespace {

constexpr std::size_t kIsoCap = 32;

/// Degree plus sorted neighbor degrees; equal for corresponding vertices.
std::vector<std::size_t> vertex_invariant(const SimplicialComplex &c, std::size_t v) {
  std::vector<std::size_t> inv{c.degree(v)};
  for (auto u : c.neighbors(v))
    inv.push_back(c.degree(u));
  std::sort(inv.begin() + 1, inv.end());
  return inv;
}

/// Enumerates isomorphisms a -> b, stopping once `limit` are found.
std::size_t search_isomorphisms(const SimplicialComplex &a, const SimplicialComplex &b,
                                std::size_t limit) {
  if (a.vertex_count() > kIsoCap || b.vertex_count() > kIsoCap)
    throw SizeError("is_isomorphic: more than 32 vertices");
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count())
    return 0;
  if (n == 0)
    return 1;

  std::vector<std::vector<std::size_t>> inv_a(n), inv_b(n);
  for (std::size_t v = 0; v < n; ++v) {
    inv_a[v] = vertex_invariant(a, v);
    inv_b[v] = vertex_invariant(b, v);
  }
  {
    auto sa = inv_a, sb = inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
      return 0;
  }

  // Visit a's vertices so that each one (after the first of its component)
  // has an already-placed neighbor, which prunes hardest.
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    std::size_t start = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!placed[v] && (start == n || a.degree(v) > a.degree(start)))
        start = v;
    placed[start] = true;
    order.push_back(start);
    for (std::size_t k = order.size() - 1; k < order.size(); ++k)
      for (auto u : a.neighbors(order[k]))
        if (!placed[u]) {
          placed[u] = true;
          order.push_back(u);
        }
  }

  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  std::size_t found = 0;
  std::function<void(std::size_t)> place = [&](std::size_t depth) {
    if (found >= limit)
      return;
    if (depth == n) {
      ++found;
      return;
    }
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || inv_a[v] != inv_b[w])
        continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        std::size_t u = order[d];
        ok = a.adjacent(v, u) == b.adjacent(w, image[u]);
      }
      if (!ok)
        continue;
      image[v] = w;
      used[w] = true;
      place(depth + 1);
      used[w] = false;
      image[v] = n;
      if (found >= limit)
        return;
    }
  };
  place(0);
  return found;
}

} // namespace

bool is_isomorphic(const SimplicialComplex &a, const SimplicialComplex &b) {
  return search_isomorphisms(a, b, 1) > 0;
}

std::size_t count_isomorphisms(const SimplicialComplex &a, const SimplicialComplex &b) {
  return search_isomorphisms(a, b, static_cast<std::size_t>(-1));
}

} // namespace cubecrys
