#include <doctest.h>

#include "../support/random_graphs.hpp"
#include "vwt/error.hpp"
#include "vwt/matrix_tree.hpp"
#include "vwt/voltage.hpp"

using namespace vwt;

TEST_CASE("finite abelian groups") {
  FiniteAbelianGroup g({2, 4});
  CHECK(g.size() == 8);
  CHECK(g.exponent() == 4);
  CHECK(g.elements().front() == GroupElement{0, 0});
  CHECK(g.elements()[1] == GroupElement{0, 1});
  CHECK(g.add({1, 3}, {1, 2}) == GroupElement{0, 1});
  CHECK(g.neg({1, 1}) == GroupElement{1, 3});
  CHECK(g.reduce({-1, 9}) == GroupElement{1, 1});
  CHECK(element_label({1, 0}) == "(1,0)");
  CHECK(FiniteAbelianGroup::tower_level(3, 2, 2).orders() == std::vector<long>{9, 9});
  CHECK(generated_subgroup(g, {{0, 2}}).size() == 2);
  CHECK_THROWS_AS(check_subgroup(g, {{0, 0}, {0, 1}}), NotSubgroup);
  CHECK(check_subgroup(g, {{0, 2}, {0, 0}}).size() == 2);
}

TEST_CASE("derived graph layout") {
  RGraph g = fixtures::triangle_with_loop();
  VoltageAssignment a{1, {{1}, {0}, {0}, {1}}};
  FiniteAbelianGroup group = FiniteAbelianGroup::tower_level(2, 1, 1);
  auto x = derive(g, group, truncate(a, 2, 1));
  CHECK(x.graph.num_vertices() == 6);
  CHECK(x.graph.num_edges() == 8);
  CHECK(x.graph.vertices()[1].id == "v1.(1)");
  CHECK(x.graph.edges()[0].id == "e1.(0)");
  // e1 from (v1,0) lands on (v2,1).
  CHECK(x.graph.edges()[0].to == 3);
  CHECK(check_cover(g, x));
  CHECK(is_connected(x.graph));
  CHECK(x.graph.weight(1) == g.weight(0));
  auto lifted = lift_voltage(a, x);
  CHECK(lifted.values.size() == 8);
  CHECK(lifted.values[1] == std::vector<long>{1});
}

TEST_CASE("trivial voltage gives disjoint copies") {
  RGraph g = fixtures::triangle_with_loop();
  FiniteAbelianGroup group = FiniteAbelianGroup::tower_level(2, 2, 1);
  auto x = derive(g, group, truncate(VoltageAssignment::zero(1, 4), 2, 2));
  CHECK_FALSE(is_connected(x.graph));
  CHECK(check_cover(g, x));
}

TEST_CASE("truncation reduces voltages") {
  VoltageAssignment a{2, {{5, -1}}};
  auto t = truncate(a, 2, 2);
  CHECK(t[0] == GroupElement{1, 3});
  CHECK(a.directed(1) == std::vector<long>{-5, 1});
}

TEST_CASE("intermediate graphs identify with the full cover") {
  RGraph g = fixtures::triangle_with_loop();
  VoltageAssignment a{1, {{1}, {0}, {3}, {1}}};
  FiniteAbelianGroup group = FiniteAbelianGroup::tower_level(2, 2, 1);
  auto alpha = truncate(a, 2, 2);
  auto z = intermediate(g, group, alpha, {{0}, {2}}, {{0}, {1}});
  CHECK(z.graph.num_vertices() == 6);
  CHECK(z.graph.vertices()[1].id == "v1.H(1)");
  CHECK_THROWS_AS(intermediate(g, group, alpha, {{0}, {2}}, {{0}, {2}}), NotTransversal);
  CHECK_THROWS_AS(intermediate(g, group, alpha, {{0}, {1}}, {{0}}), NotSubgroup);
}

TEST_CASE("fiber constancy of rooted complexities") {
  RGraph g = fixtures::triangle_with_loop();
  VoltageAssignment a{1, {{1}, {0}, {0}, {1}}};
  FiniteAbelianGroup group = FiniteAbelianGroup::tower_level(2, 2, 1);
  auto x = derive(g, group, truncate(a, 2, 2));
  for (std::size_t v = 0; v < 3; ++v) {
    for (std::size_t s = 1; s < 4; ++s) CHECK(kappa_v_det(x.graph, 4 * v + s) == kappa_v_det(x.graph, 4 * v));
  }
}
