#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "vwt/graph.hpp"
#include "vwt/group.hpp"
#include "vwt/matrix.hpp"

namespace vwt {

/// Integer vector a(e) in Z^d per undirected edge; the reverse direction
/// carries -a(e).
struct VoltageAssignment {
  int dim = 1;
  std::vector<std::vector<long>> values;

  static VoltageAssignment zero(int dim, std::size_t edges) {
    return VoltageAssignment{dim, std::vector<std::vector<long>>(edges, std::vector<long>(static_cast<std::size_t>(dim), 0))};
  }

  /// Voltage of directed edge d (2k forward, 2k+1 reverse).
  std::vector<long> directed(std::size_t d) const {
    std::vector<long> a = values.at(d / 2);
    if (d % 2 == 1) {
      for (auto& x : a) x = -x;
    }
    return a;
  }
};

/// Reduction of every voltage into (Z/p^n)^d.
inline std::vector<GroupElement> truncate(const VoltageAssignment& a, long p, int n) {
  FiniteAbelianGroup g = FiniteAbelianGroup::tower_level(p, n, a.dim);
  std::vector<GroupElement> out;
  out.reserve(a.values.size());
  for (const auto& v : a.values) out.push_back(g.reduce(v));
  return out;
}

/// Voltage of directed edge d for a finite voltage stored per undirected edge.
inline GroupElement directed_voltage(const FiniteAbelianGroup& g, const std::vector<GroupElement>& alpha, std::size_t d) {
  return d % 2 == 0 ? alpha.at(d / 2) : g.neg(alpha.at(d / 2));
}

template <RingElement F>
struct DerivedGraph {
  VertexWeightedGraph<F> graph;
  /// The elements indexing each fiber, lexicographic.
  std::vector<GroupElement> elements;
  std::vector<std::size_t> base_vertex;
  std::vector<std::size_t> vertex_element;
  std::vector<std::size_t> base_edge;
  std::vector<std::size_t> edge_element;
};

/// X(alpha): vertices (v, s) at index v*|H| + idx(s), edges (e, s) from
/// (o(e), s) to (t(e), s + alpha(e)). H defaults to the whole group; a
/// subgroup may be passed when the voltage takes values in it.
template <RingElement F>
DerivedGraph<F> derive(const VertexWeightedGraph<F>& g, const FiniteAbelianGroup& group,
                       const std::vector<GroupElement>& alpha,
                       const std::optional<std::vector<GroupElement>>& subgroup = std::nullopt) {
  if (alpha.size() != g.num_edges()) throw DimensionMismatch("voltage count differs from edge count");
  std::vector<GroupElement> elems = subgroup ? check_subgroup(group, *subgroup) : group.elements();
  std::map<GroupElement, std::size_t> pos;
  for (std::size_t i = 0; i < elems.size(); ++i) pos.emplace(elems[i], i);
  for (const auto& a : alpha) {
    if (!group.contains(a)) throw DimensionMismatch("voltage " + element_label(a) + " is not a reduced group element");
    if (!pos.count(a)) throw DimensionMismatch("voltage " + element_label(a) + " lies outside the subgroup");
  }
  const std::size_t h = elems.size();
  DerivedGraph<F> out{VertexWeightedGraph<F>(g.context()), elems, {}, {}, {}, {}};
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto& vx = g.vertices()[v];
    for (std::size_t s = 0; s < h; ++s) {
      out.graph.add_vertex(vx.id + "." + element_label(elems[s]), vx.weight, vx.sqrt);
      out.base_vertex.push_back(v);
      out.vertex_element.push_back(s);
    }
  }
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    const auto& e = g.edges()[k];
    for (std::size_t s = 0; s < h; ++s) {
      std::size_t t = pos.at(group.add(elems[s], alpha[k]));
      out.graph.add_edge(e.id + "." + element_label(elems[s]), e.from * h + s, e.to * h + t);
      out.base_edge.push_back(k);
      out.edge_element.push_back(s);
    }
  }
  return out;
}

/// Fibers have size |H| and every vertex star maps bijectively onto the star
/// of its image.
template <RingElement F>
bool check_cover(const VertexWeightedGraph<F>& base, const DerivedGraph<F>& x) {
  const std::size_t h = x.elements.size();
  std::vector<std::size_t> fiber(base.num_vertices(), 0);
  for (std::size_t v : x.base_vertex) ++fiber.at(v);
  for (std::size_t c : fiber) {
    if (c != h) return false;
  }
  const auto& y = x.graph;
  std::vector<std::multiset<std::size_t>> star(y.num_vertices());
  for (std::size_t d = 0; d < y.num_directed(); ++d) {
    std::size_t base_d = 2 * x.base_edge[d / 2] + d % 2;
    if (base.origin(base_d) != x.base_vertex[y.origin(d)]) return false;
    if (base.terminus(base_d) != x.base_vertex[y.terminus(d)]) return false;
    star[y.origin(d)].insert(base_d);
  }
  for (std::size_t u = 0; u < y.num_vertices(); ++u) {
    std::multiset<std::size_t> expected;
    for (std::size_t d = 0; d < base.num_directed(); ++d) {
      if (base.origin(d) == x.base_vertex[u]) expected.insert(d);
    }
    if (star[u] != expected) return false;
  }
  return true;
}

/// The voltage alpha o pi on a derived graph: edge (e, s) carries alpha(e).
template <RingElement F>
VoltageAssignment lift_voltage(const VoltageAssignment& alpha, const DerivedGraph<F>& x) {
  VoltageAssignment out{alpha.dim, {}};
  out.values.reserve(x.base_edge.size());
  for (std::size_t k : x.base_edge) out.values.push_back(alpha.values.at(k));
  return out;
}

/// W^{alpha,s}(u,v) = sum over e: u -> v with alpha(e) = s of s_u s_v.
template <RingElement F>
LabeledMatrix<F> w_sigma(const VertexWeightedGraph<F>& g, const FiniteAbelianGroup& group,
                         const std::vector<GroupElement>& alpha, const GroupElement& s) {
  auto m = LabeledMatrix<F>::square(g.context(), g.vertex_ids());
  for (std::size_t d = 0; d < g.num_directed(); ++d) {
    if (directed_voltage(group, alpha, d) != s) continue;
    std::size_t u = g.origin(d);
    std::size_t v = g.terminus(d);
    m(u, v) += g.sqrt_weight(u) * g.sqrt_weight(v);
  }
  return m;
}

template <RingElement F>
struct IntermediateGraph {
  VertexWeightedGraph<F> graph;
  /// Voltage into H per undirected edge of graph (ambient coordinates).
  std::vector<GroupElement> beta;
  std::vector<GroupElement> subgroup;
  std::vector<GroupElement> reps;
};

/// Intermediate graph for H <= G with coset representatives `reps`: vertices
/// (v, H+r_i), edge (e, i) from (o(e), i) to (t(e), j) where H + r_i + alpha(e)
/// = H + r_j, and beta(e, i) = r_i + alpha(e) - r_j. Also verifies that
/// ((v,i), tau) -> (v, tau + r_i) identifies Z(beta) with X(alpha).
template <RingElement F>
IntermediateGraph<F> intermediate(const VertexWeightedGraph<F>& g, const FiniteAbelianGroup& group,
                                  const std::vector<GroupElement>& alpha, const std::vector<GroupElement>& subgroup,
                                  const std::vector<GroupElement>& reps) {
  std::vector<GroupElement> h = check_subgroup(group, subgroup);
  std::set<GroupElement> hset(h.begin(), h.end());
  if (reps.size() * h.size() != group.size()) throw NotTransversal("wrong number of coset representatives");
  auto coset_of = [&](const GroupElement& x) -> std::size_t {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (hset.count(group.sub(x, reps[i]))) return i;
    }
    throw NotTransversal("element " + element_label(x) + " lies in no listed coset");
  };
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!group.contains(reps[i])) throw NotTransversal("representative is not a group element");
    if (coset_of(reps[i]) != i) throw NotTransversal("two representatives share a coset");
  }
  const std::size_t c = reps.size();
  IntermediateGraph<F> out{VertexWeightedGraph<F>(g.context()), {}, h, reps};
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto& vx = g.vertices()[v];
    for (std::size_t i = 0; i < c; ++i) out.graph.add_vertex(vx.id + ".H" + element_label(reps[i]), vx.weight, vx.sqrt);
  }
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    const auto& e = g.edges()[k];
    for (std::size_t i = 0; i < c; ++i) {
      GroupElement moved = group.add(reps[i], alpha.at(k));
      std::size_t j = coset_of(moved);
      out.graph.add_edge(e.id + ".H" + element_label(reps[i]), e.from * c + i, e.to * c + j);
      out.beta.push_back(group.sub(moved, reps[j]));
    }
  }
  // Edge-by-edge check of Z(beta) = X(alpha) under the explicit identification.
  auto zb = derive(out.graph, group, out.beta, h);
  auto xa = derive(g, group, alpha);
  if (zb.graph.num_vertices() != xa.graph.num_vertices() || zb.graph.num_edges() != xa.graph.num_edges()) {
    throw Error("intermediate graph does not recover the derived graph");
  }
  auto image = [&](std::size_t zv) {
    std::size_t zi = zb.base_vertex[zv];
    std::size_t v = zi / c;
    std::size_t i = zi % c;
    GroupElement s = group.add(h[zb.vertex_element[zv]], reps[i]);
    return v * group.size() + group.index_of(s);
  };
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::multiset<Key> xa_edges;
  std::multiset<Key> zb_edges;
  for (std::size_t k = 0; k < xa.graph.num_edges(); ++k) {
    const auto& e = xa.graph.edges()[k];
    xa_edges.emplace(xa.base_edge[k], e.from, e.to);
  }
  for (std::size_t k = 0; k < zb.graph.num_edges(); ++k) {
    const auto& e = zb.graph.edges()[k];
    zb_edges.emplace(zb.base_edge[k] / c, image(e.from), image(e.to));
  }
  for (std::size_t zv = 0; zv < zb.graph.num_vertices(); ++zv) {
    if (!(zb.graph.weight(zv) == xa.graph.weight(image(zv)))) throw Error("intermediate graph weights disagree");
  }
  if (xa_edges != zb_edges) throw Error("intermediate graph does not recover the derived graph");
  return out;
}

}  // namespace vwt
