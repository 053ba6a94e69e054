#pragma once

#include <string>
#include <vector>

#include "vwt/graph.hpp"
#include "vwt/matrix.hpp"

namespace vwt {

/// Which directed edge represents each undirected edge in the boundary matrix.
enum class Section { first_recorded, reversed };

template <RingElement F>
struct LaplacianBundle {
  using Matrix = LabeledMatrix<F>;
  Matrix D;     ///< D(u,u) = sum over e with o(e)=u of w_{t(e)}
  Matrix W;     ///< W(u,v) = sum over e: u->v of w_v
  Matrix Wsym;  ///< sum over e: u->v of s_u s_v
  Matrix L;     ///< D - W
  Matrix Lsym;  ///< D - Wsym
  Matrix S;     ///< diag(w_v)
  Matrix sqrtS; ///< diag(s_v)
  Matrix B;     ///< weighted boundary operator, columns = section edges
  std::vector<std::size_t> section;  ///< directed edge per column of B
};

template <RingElement F>
LaplacianBundle<F> build_bundle(const VertexWeightedGraph<F>& g, Section sec = Section::first_recorded) {
  using Matrix = LabeledMatrix<F>;
  const auto& ctx = g.context();
  const auto ids = g.vertex_ids();
  Matrix D = Matrix::square(ctx, ids);
  Matrix W = Matrix::square(ctx, ids);
  Matrix Wsym = Matrix::square(ctx, ids);
  Matrix S = Matrix::square(ctx, ids);
  Matrix sqrtS = Matrix::square(ctx, ids);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    S(v, v) = g.weight(v);
    sqrtS(v, v) = g.sqrt_weight(v);
  }
  for (std::size_t d = 0; d < g.num_directed(); ++d) {
    std::size_t u = g.origin(d);
    std::size_t v = g.terminus(d);
    D(u, u) += g.weight(v);
    W(u, v) += g.weight(v);
    Wsym(u, v) += g.sqrt_weight(u) * g.sqrt_weight(v);
  }
  std::vector<std::string> cols;
  std::vector<std::size_t> section;
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    section.push_back(sec == Section::first_recorded ? 2 * k : 2 * k + 1);
    cols.push_back(g.edges()[k].id);
  }
  Matrix B(ctx, ids, cols);
  for (std::size_t c = 0; c < section.size(); ++c) {
    std::size_t d = section[c];
    std::size_t o = g.origin(d);
    std::size_t t = g.terminus(d);
    if (o == t) continue;
    B(o, c) = g.sqrt_weight(t);
    B(t, c) = -g.sqrt_weight(o);
  }
  Matrix L = D - W;
  Matrix Lsym = D - Wsym;
  return LaplacianBundle<F>{D, W, Wsym, L, Lsym, S, sqrtS, B, section};
}

/// det of the symmetrized Laplacian with row and column v removed.
template <RingElement F>
F kappa_v_det(const VertexWeightedGraph<F>& g, std::size_t v) {
  if (!is_connected(g)) throw Disconnected("graph is not connected");
  auto b = build_bundle(g);
  const auto& id = g.vertices()[v].id;
  return determinant(minor(b.Lsym, {id}, {id}));
}

/// Sum of kappa_v_det over all vertices.
template <RingElement F>
F kappa_det(const VertexWeightedGraph<F>& g) {
  if (!is_connected(g)) throw Disconnected("graph is not connected");
  auto b = build_bundle(g);
  F sum = F::zero(g.context());
  for (const auto& v : g.vertices()) sum = sum + determinant(minor(b.Lsym, {v.id}, {v.id}));
  return sum;
}

/// (sum_z w_z) adj(Lsym)(u,v) == s_u s_v kappa for all u, v.
template <RingElement F>
bool mtt2_check(const VertexWeightedGraph<F>& g) {
  F kappa = kappa_det(g);
  auto adj = adjugate(build_bundle(g).Lsym);
  F total = F::zero(g.context());
  for (const auto& v : g.vertices()) total = total + v.weight;
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      if (!(total * adj(u, v) == g.sqrt_weight(u) * g.sqrt_weight(v) * kappa)) return false;
    }
  }
  return true;
}

/// For |A| = |V|-1 loop-free: det(B without row v, columns A) is 0 when A is
/// not a tree and squares to the rooted weight when it is.
template <RingElement F>
bool boundary_minor_check(const VertexWeightedGraph<F>& g, std::size_t v, const std::vector<std::size_t>& edges) {
  if (edges.size() + 1 != g.num_vertices()) throw DimensionMismatch("edge subset must have |V|-1 elements");
  auto b = build_bundle(g);
  std::vector<bool> in_a(g.num_edges(), false);
  for (std::size_t e : edges) in_a.at(e) = true;
  std::vector<std::string> drop_cols;
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    if (!in_a[k]) drop_cols.push_back(g.edges()[k].id);
  }
  F det = determinant(minor(b.B, {g.vertices()[v].id}, drop_cols));
  detail::UnionFind uf(g.num_vertices());
  bool tree = true;
  for (std::size_t e : edges) {
    if (g.edges()[e].is_loop() || !uf.unite(g.edges()[e].from, g.edges()[e].to)) tree = false;
  }
  if (!tree) return det.is_zero();
  return det * det == rooted_weight(g, root_tree(g, edges, v));
}

}  // namespace vwt
