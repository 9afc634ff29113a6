#ifndef TUTTE_GRAPH_HPP
#define TUTTE_GRAPH_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tutte/rational.hpp"

namespace tutte {

using EdgeId = std::int64_t;

/// Undirected multigraph with loops and parallel edges.  Vertices are dense
/// indices [0, vertex_count).  Every edge carries a stable id that survives
/// deletion and contraction, so weight functions can follow edges across
/// minors.  Immutable after construction; minors return new values.
class Multigraph {
 public:
  struct Edge {
    int u;
    int v;
    EdgeId id;
  };

  Multigraph() : n_(0) {}
  explicit Multigraph(int vertex_count) : n_(vertex_count) {}
  Multigraph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge_by_id(EdgeId id) const;  // throws on unknown id
  bool has_edge_id(EdgeId id) const;

  /// Appends an edge and returns its id (construction-time convenience).
  EdgeId add_edge(int u, int v);

  /// Number of connected components of (V, subset); isolated vertices count.
  int kappa(const std::vector<EdgeId>& subset) const;
  int kappa_all() const;

  Multigraph delete_edge(EdgeId id) const;
  /// Contracting a loop deletes it; otherwise endpoints merge and vertices
  /// are relabelled to stay dense.
  Multigraph contract_edge(EdgeId id) const;

  bool is_connected() const;
  bool is_bipartite() const;      // a loop makes the graph non-bipartite
  bool is_eulerian() const;       // all degrees even; a loop adds two
  std::vector<EdgeId> bridges() const;  // loops are never bridges
  std::vector<EdgeId> loops() const;
  int degree(int v) const;        // loops contribute two

  /// Disjoint union; the other graph's vertices and edge ids are shifted.
  Multigraph disjoint_union(const Multigraph& other) const;

 private:
  int component_count(const std::vector<char>& use_edge) const;
  int n_;
  std::vector<Edge> edges_;
  EdgeId next_id_ = 0;
};

/// Total map edge id -> weight for a specific graph's edge set.
class WeightFunction {
 public:
  WeightFunction() = default;
  /// Uniform weight on every edge of g.
  WeightFunction(const Multigraph& g, const Rational& uniform);

  void set(EdgeId id, const Rational& w) { w_[id] = w; }
  const Rational& at(EdgeId id) const;
  bool contains(EdgeId id) const { return w_.count(id) != 0; }
  /// Checks totality on g's edges; throws if an edge has no weight.
  void check_total(const Multigraph& g) const;

 private:
  std::unordered_map<EdgeId, Rational> w_;
};

/// Standard small graphs used throughout the tests and gadgets.
Multigraph complete_graph(int n);
Multigraph cycle_graph(int n);
Multigraph path_graph(int edges);
Multigraph petersen_graph();

}  // namespace tutte

#endif
