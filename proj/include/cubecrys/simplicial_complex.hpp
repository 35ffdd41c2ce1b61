#ifndef CUBECRYS_SIMPLICIAL_COMPLEX_HPP
#define CUBECRYS_SIMPLICIAL_COMPLEX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cubecrys {

/// Flag simplicial complex stored by its 1-skeleton. Every clique of the
/// graph is a simplex; higher simplices are only enumerated on demand.
class SimplicialComplex {
public:
  using Edge = std::pair<std::size_t, std::size_t>;

  SimplicialComplex() = default;
  /// Edges are index pairs into `vertices`. Loops, duplicate edges and
  /// duplicate labels are rejected with InputError.
  SimplicialComplex(std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  /// Sorted, each pair with first < second.
  const std::vector<Edge> &edges() const { return edges_; }
  const std::vector<std::size_t> &neighbors(std::size_t v) const { return adjacency_[v]; }
  bool adjacent(std::size_t a, std::size_t b) const;
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }

  /// f[k] = number of k-simplices (cliques with k+1 vertices).
  std::vector<std::size_t> f_vector() const;

  /// Same complex with every label prefixed.
  SimplicialComplex relabeled(const std::string &prefix) const;

private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::vector<bool>> matrix_;
};

/// Hyperoctahedron Q_n: vertices (sign, axis), labeled "+i"/"-i", with
/// (s,i) ~ (t,j) iff i != j.
SimplicialComplex build_Qn(std::size_t n);

/// Flag complex of the graph join. Throws RelabelError on shared labels.
SimplicialComplex simplicial_join(const SimplicialComplex &a, const SimplicialComplex &b);

/// Edge-preserving bijection test by backtracking (at most 32 vertices).
bool is_isomorphic(const SimplicialComplex &a, const SimplicialComplex &b);

/// Number of isomorphisms a -> b; with a == b this is |Aut(a)|.
std::size_t count_isomorphisms(const SimplicialComplex &a, const SimplicialComplex &b);

} // namespace cubecrys

#endif
