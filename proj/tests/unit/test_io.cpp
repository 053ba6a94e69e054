#include <doctest.h>

#include "../support/random_graphs.hpp"
#include "vwt/error.hpp"
#include "vwt/io.hpp"

using namespace vwt;

namespace {

Json small_graph() {
  return Json::parse(R"({
    "prime": 2, "root_index": 2, "dim": 1,
    "vertices": [
      {"id": "a", "weight": ["1/2", "0/1"], "sqrt": ["0/1", "1/2"]},
      {"id": "b", "weight": ["4/1", "0/1"], "sqrt": ["-2/1", "0/1"]}
    ],
    "edges": [
      {"id": "e1", "from": "a", "to": "b", "voltage": [3], "beta": 1},
      {"id": "e2", "from": "b", "to": "b", "voltage": [-1], "beta": 0}
    ]
  })");
}

}  // namespace

TEST_CASE("graph files parse") {
  GraphFile f = parse_graph(small_graph());
  CHECK(f.graph.context() == PiField{2, 2});
  CHECK(f.graph.num_vertices() == 2);
  CHECK(f.graph.weight(0) == PiRingElement::from_rational(PiField{2, 2}, Rational(1, 2)));
  CHECK(f.alpha.values[1] == std::vector<long>{-1});
  CHECK(edge_values(f, "beta") == std::vector<long>{1, 0});
  CHECK_THROWS_AS(edge_values(f, "gamma"), ParseError);
}

TEST_CASE("graph files round-trip") {
  GraphFile f = parse_graph(small_graph());
  GraphFile g = parse_graph(graph_to_json(f));
  CHECK(graph_to_json(g) == graph_to_json(f));
  for (std::size_t v = 0; v < 2; ++v) {
    CHECK(g.graph.weight(v) == f.graph.weight(v));
    CHECK(g.graph.sqrt_weight(v) == f.graph.sqrt_weight(v));
  }
}

TEST_CASE("exact values round-trip") {
  fixtures::Rng rng(2);
  PiField f{3, 3};
  for (int i = 0; i < 20; ++i) {
    PiRingElement x = fixtures::sample_real_root(rng, f).scaled(Rational(i - 7, 5));
    CHECK(pi_from_json(f, Json::parse(to_json(x).dump())) == x);
  }
  CycloRing r{PiField{2, 2}, 2};
  CycloElement z = CycloElement::zeta_power(r, 1).scaled(PiRingElement::pi_power(r.base, 1)) + CycloElement::from_int(r, 3);
  CHECK(cyclo_from_json(r, to_json(z)) == z);
  RGraph g = fixtures::triangle_with_loop();
  RLaurent q = q_series(g, VoltageAssignment{1, {{1}, {0}, {0}, {1}}});
  CHECK(laurent_from_json(q.context(), Json::parse(to_json(q).dump())) == q);
}

TEST_CASE("malformed files are parse errors") {
  auto broken = [](auto edit) {
    Json j = small_graph();
    edit(j);
    return j;
  };
  CHECK_THROWS_AS(parse_graph(broken([](Json& j) { j.erase("vertices"); })), ParseError);
  CHECK_THROWS_AS(parse_graph(broken([](Json& j) { j["prime"] = 4; })), ParseError);
  CHECK_THROWS_AS(parse_graph(broken([](Json& j) { j["vertices"][0]["sqrt"] = Json::array({"1/1", "0/1"}); })), ParseError);
  CHECK_THROWS_AS(parse_graph(broken([](Json& j) { j["edges"][0]["to"] = "zz"; })), ParseError);
  CHECK_THROWS_AS(parse_graph(broken([](Json& j) { j["edges"][0]["voltage"] = Json::array({1, 2}); })), ParseError);
  CHECK_THROWS_AS(parse_graph(broken([](Json& j) { j["vertices"][0]["weight"] = Json::array({"x"}); })), ParseError);
  CHECK_THROWS_AS(parse_graph(broken([](Json& j) { j["vertices"][1]["id"] = "a"; })), ParseError);
  CHECK_THROWS_AS(load_graph("/nonexistent/graph.json"), ParseError);
  CHECK(parse_tower(Json::parse(R"({"prime":2,"dim":1,"levels":3})")).levels == 3);
  CHECK_THROWS_AS(parse_tower(Json::parse(R"({"prime":2})")), ParseError);
}
