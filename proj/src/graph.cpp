#include "tutte/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace tutte {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

Multigraph::Multigraph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : n_(vertex_count) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

EdgeId Multigraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  edges_.push_back({u, v, next_id_});
  return next_id_++;
}

const Multigraph::Edge& Multigraph::edge_by_id(EdgeId id) const {
  for (const Edge& e : edges_)
    if (e.id == id) return e;
  throw std::invalid_argument("unknown edge id");
}

bool Multigraph::has_edge_id(EdgeId id) const {
  for (const Edge& e : edges_)
    if (e.id == id) return true;
  return false;
}

int Multigraph::kappa(const std::vector<EdgeId>& subset) const {
  std::vector<char> use(edges_.size(), 0);
  for (EdgeId id : subset) {
    bool found = false;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i].id == id) {
        use[i] = 1;
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown edge id in subset");
  }
  return component_count(use);
}

int Multigraph::kappa_all() const {
  return component_count(std::vector<char>(edges_.size(), 1));
}

int Multigraph::component_count(const std::vector<char>& use_edge) const {
  UnionFind uf(n_);
  int merges = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (use_edge[i] && uf.unite(edges_[i].u, edges_[i].v)) ++merges;
  return n_ - merges;
}

Multigraph Multigraph::delete_edge(EdgeId id) const {
  if (!has_edge_id(id)) throw std::invalid_argument("unknown edge id");
  Multigraph g;
  g.n_ = n_;
  g.next_id_ = next_id_;
  for (const Edge& e : edges_)
    if (e.id != id) g.edges_.push_back(e);
  return g;
}

Multigraph Multigraph::contract_edge(EdgeId id) const {
  const Edge& e = edge_by_id(id);
  if (e.u == e.v) return delete_edge(id);
  // Merge the larger endpoint into the smaller, then close the gap so
  // vertex indices stay dense.
  int keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
  Multigraph g;
  g.n_ = n_ - 1;
  g.next_id_ = next_id_;
  auto remap = [&](int v) {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };
  for (const Edge& f : edges_) {
    if (f.id == id) continue;
    g.edges_.push_back({remap(f.u), remap(f.v), f.id});
  }
  return g;
}

bool Multigraph::is_connected() const {
  return n_ <= 1 || kappa_all() == 1;
}

bool Multigraph::is_bipartite() const {
  std::vector<int> colour(n_, -1);
  for (int start = 0; start < n_; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::queue<int> bfs;
    bfs.push(start);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (const Edge& e : edges_) {
        if (e.u != v && e.v != v) continue;
        if (e.u == e.v) return false;  // loop = odd cycle
        int w = e.u == v ? e.v : e.u;
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          bfs.push(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool Multigraph::is_eulerian() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) % 2 != 0) return false;
  return true;
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

std::vector<EdgeId> Multigraph::bridges() const {
  // e is a bridge iff dropping it increases the component count.
  std::vector<EdgeId> result;
  int base = kappa_all();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i].v) continue;
    std::vector<char> use(edges_.size(), 1);
    use[i] = 0;
    if (component_count(use) == base + 1) result.push_back(edges_[i].id);
  }
  return result;
}

std::vector<EdgeId> Multigraph::loops() const {
  std::vector<EdgeId> result;
  for (const Edge& e : edges_)
    if (e.u == e.v) result.push_back(e.id);
  return result;
}

Multigraph Multigraph::disjoint_union(const Multigraph& other) const {
  Multigraph g;
  g.n_ = n_ + other.n_;
  g.edges_ = edges_;
  for (const Edge& e : other.edges_)
    g.edges_.push_back({e.u + n_, e.v + n_, e.id + next_id_});
  g.next_id_ = next_id_ + other.next_id_;
  return g;
}

WeightFunction::WeightFunction(const Multigraph& g, const Rational& uniform) {
  for (const auto& e : g.edges()) w_[e.id] = uniform;
}

const Rational& WeightFunction::at(EdgeId id) const {
  auto it = w_.find(id);
  if (it == w_.end()) throw std::invalid_argument("weight function not total: missing edge weight");
  return it->second;
}

void WeightFunction::check_total(const Multigraph& g) const {
  for (const auto& e : g.edges()) at(e.id);
}

Multigraph complete_graph(int n) {
  Multigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Multigraph cycle_graph(int n) {
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph path_graph(int edges) {
  Multigraph g(edges + 1);
  for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph petersen_graph() {
  // Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram on 5..9.
  Multigraph g(10);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) g.add_edge(i, i + 5);
  for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
  return g;
}

}  // namespace tutte
