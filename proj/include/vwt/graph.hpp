#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "vwt/error.hpp"
#include "vwt/ring_traits.hpp"

namespace vwt {

/// Symmetric directed multigraph with loops and a weight plus chosen square
/// root at every vertex. Undirected edge k yields directed edges 2k (from ->
/// to) and 2k+1 (to -> from), so the inverse of d is d ^ 1.
template <RingElement F>
class VertexWeightedGraph {
 public:
  using weight_type = F;
  using context_type = typename F::context_type;

  struct Vertex {
    std::string id;
    F weight;
    F sqrt;
  };

  struct Edge {
    std::string id;
    std::size_t from;
    std::size_t to;
    bool is_loop() const noexcept { return from == to; }
  };

  explicit VertexWeightedGraph(context_type ctx) : ctx_(std::move(ctx)) {}

  const context_type& context() const noexcept { return ctx_; }

  /// Throws InvalidSquareRoot unless s * s == w.
  std::size_t add_vertex(const std::string& id, const F& w, const F& s) {
    if (index_.count(id)) throw ParseError("duplicate vertex id " + id);
    if (!(s * s == w)) throw InvalidSquareRoot("sqrt of vertex " + id + " does not square to its weight");
    index_.emplace(id, vertices_.size());
    vertices_.push_back(Vertex{id, w, s});
    return vertices_.size() - 1;
  }

  std::size_t add_edge(const std::string& id, std::size_t from, std::size_t to) {
    if (from >= vertices_.size() || to >= vertices_.size()) throw UnknownLabel("edge " + id + " has an unknown endpoint");
    if (!edge_index_.emplace(id, edges_.size()).second) throw ParseError("duplicate edge id " + id);
    edges_.push_back(Edge{id, from, to});
    return edges_.size() - 1;
  }

  std::size_t add_edge(const std::string& id, const std::string& from, const std::string& to) {
    return add_edge(id, vertex_index(from), vertex_index(to));
  }

  std::size_t vertex_index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownLabel("unknown vertex " + id);
    return it->second;
  }

  std::size_t edge_index(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw UnknownLabel("unknown edge " + id);
    return it->second;
  }

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::vector<std::string> vertex_ids() const {
    std::vector<std::string> ids;
    ids.reserve(vertices_.size());
    for (const auto& v : vertices_) ids.push_back(v.id);
    return ids;
  }

  std::size_t num_directed() const noexcept { return 2 * edges_.size(); }
  std::size_t origin(std::size_t d) const {
    const Edge& e = edges_[d / 2];
    return d % 2 == 0 ? e.from : e.to;
  }
  std::size_t terminus(std::size_t d) const {
    const Edge& e = edges_[d / 2];
    return d % 2 == 0 ? e.to : e.from;
  }
  static std::size_t inverse(std::size_t d) noexcept { return d ^ 1U; }

  const F& weight(std::size_t v) const { return vertices_[v].weight; }
  const F& sqrt_weight(std::size_t v) const { return vertices_[v].sqrt; }

  /// Copy with s_v replaced by -s_v.
  VertexWeightedGraph with_flipped_sqrt(std::size_t v) const {
    VertexWeightedGraph g = *this;
    g.vertices_[v].sqrt = -g.vertices_[v].sqrt;
    return g;
  }

 private:
  context_type ctx_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
};

template <class G>
bool is_connected(const G& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return true;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> queue;
  queue.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop();
    for (std::size_t w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push(w);
      }
    }
  }
  return count == n;
}

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace detail

inline constexpr std::size_t kDefaultTreeEdgeCap = 24;

/// Every spanning tree as a sorted list of undirected edge indices, in
/// lexicographic order of those lists. Loops never belong to a tree.
template <class G>
std::vector<std::vector<std::size_t>> spanning_trees(const G& g, std::size_t max_edges = kDefaultTreeEdgeCap) {
  if (!is_connected(g)) throw Disconnected("graph is not connected");
  std::vector<std::size_t> candidates;
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    if (!g.edges()[k].is_loop()) candidates.push_back(k);
  }
  if (candidates.size() > max_edges) {
    throw TooLarge(std::to_string(candidates.size()) + " non-loop edges exceed the enumeration cap of " +
                   std::to_string(max_edges));
  }
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::size_t>> trees;
  if (n <= 1) {
    trees.emplace_back();
    return trees;
  }
  const std::size_t k = n - 1;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  const std::size_t m = candidates.size();
  if (m < k) return trees;
  while (true) {
    detail::UnionFind uf(n);
    bool ok = true;
    for (std::size_t i : pick) {
      const auto& e = g.edges()[candidates[i]];
      if (!uf.unite(e.from, e.to)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<std::size_t> t;
      t.reserve(k);
      for (std::size_t i : pick) t.push_back(candidates[i]);
      trees.push_back(std::move(t));
    }
    // Next k-combination of {0..m-1}.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return trees;
}

/// A spanning tree with every edge oriented toward the root.
struct RootedTree {
  std::vector<std::size_t> edges;
  std::size_t root = 0;
  /// Directed edge indices d with dist(root, o(d)) > dist(root, t(d)).
  std::vector<std::size_t> directed;
};

/// Validates that `edges` is a spanning tree and orients it toward `root`.
template <class G>
RootedTree root_tree(const G& g, std::vector<std::size_t> edges, std::size_t root) {
  const std::size_t n = g.num_vertices();
  if (edges.size() + 1 != n) throw DimensionMismatch("a spanning tree needs |V|-1 edges");
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t e : edges) {
    if (g.edges().at(e).is_loop()) throw DimensionMismatch("loops cannot belong to a tree");
    adj[g.edges()[e].from].push_back(2 * e);
    adj[g.edges()[e].to].push_back(2 * e + 1);
  }
  RootedTree t{std::move(edges), root, {}};
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> queue;
  queue.push(root);
  seen[root] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop();
    for (std::size_t d : adj[u]) {
      std::size_t w = g.terminus(d);
      if (seen[w]) continue;
      seen[w] = true;
      ++count;
      queue.push(w);
      t.directed.push_back(G::inverse(d));
    }
  }
  if (count != n) throw DimensionMismatch("edge set is not a spanning tree");
  std::sort(t.directed.begin(), t.directed.end());
  return t;
}

/// Product of w_{t(e)} over the edges oriented toward the root.
template <class G>
typename G::weight_type rooted_weight(const G& g, const RootedTree& t) {
  auto w = G::weight_type::one(g.context());
  for (std::size_t d : t.directed) w = w * g.weight(g.terminus(d));
  return w;
}

template <class G>
typename G::weight_type kappa_v_oracle(const G& g, std::size_t v, std::size_t max_edges = kDefaultTreeEdgeCap) {
  auto sum = G::weight_type::zero(g.context());
  for (auto& edges : spanning_trees(g, max_edges)) sum = sum + rooted_weight(g, root_tree(g, edges, v));
  return sum;
}

template <class G>
typename G::weight_type kappa_oracle(const G& g, std::size_t max_edges = kDefaultTreeEdgeCap) {
  auto trees = spanning_trees(g, max_edges);
  auto sum = G::weight_type::zero(g.context());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    for (const auto& edges : trees) sum = sum + rooted_weight(g, root_tree(g, edges, v));
  }
  return sum;
}

}  // namespace vwt
