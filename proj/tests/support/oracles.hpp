#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library's determinant or tree routines.

#include <cstdint>
#include <deque>
#include <vector>

#include "vwt/graph.hpp"
#include "vwt/matrix.hpp"

namespace oracle {

/// Laplace expansion along the first row.
template <class E>
E cofactor_det(const std::vector<std::vector<E>>& a, const typename E::context_type& ctx) {
  const std::size_t n = a.size();
  if (n == 0) return E::one(ctx);
  if (n == 1) return a[0][0];
  E sum = E::zero(ctx);
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<E>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<E> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      sub.push_back(std::move(row));
    }
    E term = a[0][j] * cofactor_det(sub, ctx);
    sum = j % 2 == 0 ? sum + term : sum - term;
  }
  return sum;
}

template <class E>
E cofactor_det(const vwt::LabeledMatrix<E>& m) {
  std::vector<std::vector<E>> a(m.rows());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i].push_back(m(i, j));
  }
  return cofactor_det(a, m.context());
}

/// Bitmasks of non-loop edge subsets forming spanning trees.
template <class G>
std::vector<std::uint64_t> tree_masks(const G& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) + 1 != n) continue;
    bool loop = false;
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t k = 0; k < m; ++k) {
      if (!(mask >> k & 1U)) continue;
      const auto& e = g.edges()[k];
      if (e.from == e.to) loop = true;
      adj[e.from].push_back(e.to);
      adj[e.to].push_back(e.from);
    }
    if (loop) continue;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    if (count == n) out.push_back(mask);
  }
  return out;
}

/// Sum over spanning trees of prod w_{parent(v)} over non-root v, the parent
/// being the next vertex on the tree path to the root.
template <class G>
typename G::weight_type kappa_v(const G& g, std::size_t root) {
  using F = typename G::weight_type;
  const std::size_t n = g.num_vertices();
  F sum = F::zero(g.context());
  for (std::uint64_t mask : tree_masks(g)) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
      if (!(mask >> k & 1U)) continue;
      adj[g.edges()[k].from].push_back(g.edges()[k].to);
      adj[g.edges()[k].to].push_back(g.edges()[k].from);
    }
    F prod = F::one(g.context());
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[u]) {
        if (seen[w]) continue;
        seen[w] = true;
        prod = prod * g.weight(u);
        queue.push_back(w);
      }
    }
    sum = sum + prod;
  }
  return sum;
}

template <class G>
typename G::weight_type kappa(const G& g) {
  auto sum = G::weight_type::zero(g.context());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) sum = sum + kappa_v(g, v);
  return sum;
}

}  // namespace oracle
