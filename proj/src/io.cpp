#include "vwt/io.hpp"

#include <fstream>

#include "vwt/error.hpp"

namespace vwt {

namespace {

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

long as_long(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<long>();
}

Rational as_rational(const Json& j) {
  std::optional<Rational> q;
  if (j.is_string()) q = parse_rational(j.get<std::string>());
  else if (j.is_number_integer()) q = Rational(j.get<long>());
  if (!q) throw ParseError("bad rational " + j.dump());
  return *q;
}

std::vector<long> as_long_vector(const Json& j, const std::string& what) {
  std::vector<long> out;
  if (j.is_number_integer()) {
    out.push_back(j.get<long>());
    return out;
  }
  if (!j.is_array()) throw ParseError(what + " must be an integer or an array of integers");
  for (const auto& x : j) out.push_back(as_long(x, what));
  return out;
}

}  // namespace

PiRingElement pi_from_json(const PiField& f, const Json& j) {
  if (!j.is_array()) return PiRingElement::from_rational(f, as_rational(j));
  if (j.size() > static_cast<std::size_t>(f.M)) throw ParseError("element has more than M coordinates: " + j.dump());
  std::vector<Rational> c(static_cast<std::size_t>(f.M), Rational(0));
  for (std::size_t i = 0; i < j.size(); ++i) c[i] = as_rational(j[i]);
  return PiRingElement(f, std::move(c));
}

CycloElement cyclo_from_json(const CycloRing& r, const Json& j) {
  if (!j.is_array()) throw ParseError("cyclotomic element must be an array");
  std::vector<PiRingElement> c;
  for (const auto& x : j) c.push_back(pi_from_json(r.base, x));
  return CycloElement(r, std::move(c));
}

RLaurent laurent_from_json(const PolyRing<PiRingElement>& ctx, const Json& j) {
  auto shift = as_long_vector(field(j, "shift"), "shift");
  RPoly p = RPoly::zero(ctx);
  for (const auto& t : field(j, "terms")) {
    auto e = as_long_vector(field(t, "exp"), "exp");
    std::vector<int> exp(e.begin(), e.end());
    p += RPoly::monomial(ctx, exp, pi_from_json(ctx.coeff, field(t, "coeff")));
  }
  return RLaurent(p, std::vector<int>(shift.begin(), shift.end()));
}

Json to_json(const PiRingElement& x) {
  Json a = Json::array();
  for (const auto& c : x.coeffs()) a.push_back(rational_to_wire(c));
  return a;
}

Json to_json(const CycloElement& x) {
  Json a = Json::array();
  for (const auto& c : x.coeffs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const RLaurent& q) {
  Json terms = Json::array();
  for (const auto& [e, c] : q.poly().terms()) terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
  return {{"shift", q.shift()}, {"terms", terms}};
}

GraphFile parse_graph(const Json& j) {
  try {
    PiField f;
    f.p = as_long(field(j, "prime"), "prime");
    if (f.p < 2) throw ParseError("prime must be at least 2");
    for (long d = 2; d * d <= f.p; ++d) {
      if (f.p % d == 0) throw ParseError("prime " + std::to_string(f.p) + " is composite");
    }
    f.M = j.contains("root_index") ? static_cast<int>(as_long(j.at("root_index"), "root_index")) : 1;
    if (f.M < 1) throw ParseError("root_index must be positive");
    const int dim = j.contains("dim") ? static_cast<int>(as_long(j.at("dim"), "dim")) : 1;
    if (dim < 1) throw ParseError("dim must be positive");

    GraphFile out{RGraph(f), VoltageAssignment{dim, {}}, {}, std::nullopt, std::nullopt};
    for (const auto& v : field(j, "vertices")) {
      const auto& id = field(v, "id");
      if (!id.is_string()) throw ParseError("vertex id must be a string");
      out.graph.add_vertex(id.get<std::string>(), pi_from_json(f, field(v, "weight")), pi_from_json(f, field(v, "sqrt")));
    }
    if (out.graph.num_vertices() == 0) throw ParseError("graph has no vertices");
    for (const auto& e : field(j, "edges")) {
      const auto& id = field(e, "id");
      const auto& from = field(e, "from");
      const auto& to = field(e, "to");
      if (!id.is_string() || !from.is_string() || !to.is_string()) throw ParseError("edge id/from/to must be strings");
      out.graph.add_edge(id.get<std::string>(), from.get<std::string>(), to.get<std::string>());
      std::vector<long> a(static_cast<std::size_t>(dim), 0);
      if (e.contains("voltage")) a = as_long_vector(e.at("voltage"), "voltage");
      if (a.size() != static_cast<std::size_t>(dim)) throw ParseError("voltage of " + id.get<std::string>() + " has wrong length");
      out.alpha.values.push_back(a);
      for (const auto& [key, val] : e.items()) {
        if (key == "id" || key == "from" || key == "to" || key == "voltage") continue;
        if (val.is_number_integer()) out.edge_keys[key].push_back(val.get<long>());
        else if (val.is_array() && val.size() == 1 && val[0].is_number_integer()) out.edge_keys[key].push_back(val[0].get<long>());
      }
    }
    for (auto it = out.edge_keys.begin(); it != out.edge_keys.end();) {
      if (it->second.size() != out.graph.num_edges()) it = out.edge_keys.erase(it);
      else ++it;
    }
    if (j.contains("levels")) out.levels = static_cast<int>(as_long(j.at("levels"), "levels"));
    if (j.contains("root")) {
      const auto& r = j.at("root");
      if (!r.is_string()) throw ParseError("root must be a vertex id");
      out.root = out.graph.vertex_index(r.get<std::string>());
    }
    return out;
  } catch (const UnknownLabel& e) {
    throw ParseError(e.what());
  } catch (const InvalidSquareRoot& e) {
    throw ParseError(e.what());
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

GraphFile load_graph(const std::filesystem::path& path) { return parse_graph(read_json(path)); }

TowerSpec parse_tower(const Json& j) {
  TowerSpec t;
  t.prime = as_long(field(j, "prime"), "prime");
  t.dim = static_cast<int>(as_long(field(j, "dim"), "dim"));
  t.levels = static_cast<int>(as_long(field(j, "levels"), "levels"));
  if (t.levels < 0) throw ParseError("levels must be nonnegative");
  return t;
}

TowerSpec load_tower(const std::filesystem::path& path) { return parse_tower(read_json(path)); }

std::vector<long> edge_values(const GraphFile& f, const std::string& key) {
  auto it = f.edge_keys.find(key);
  if (it == f.edge_keys.end()) throw ParseError("no per-edge integer key \"" + key + "\"");
  return it->second;
}

Json graph_to_json(const GraphFile& f) {
  const PiField& pf = f.graph.context();
  Json j{{"prime", pf.p}, {"root_index", pf.M}, {"dim", f.alpha.dim}};
  Json vs = Json::array();
  for (const auto& v : f.graph.vertices()) vs.push_back({{"id", v.id}, {"weight", to_json(v.weight)}, {"sqrt", to_json(v.sqrt)}});
  Json es = Json::array();
  for (std::size_t k = 0; k < f.graph.num_edges(); ++k) {
    const auto& e = f.graph.edges()[k];
    Json ej{{"id", e.id}, {"from", f.graph.vertices()[e.from].id}, {"to", f.graph.vertices()[e.to].id},
            {"voltage", f.alpha.values[k]}};
    for (const auto& [key, vals] : f.edge_keys) ej[key] = vals[k];
    es.push_back(ej);
  }
  j["vertices"] = vs;
  j["edges"] = es;
  if (f.levels) j["levels"] = *f.levels;
  if (f.root) j["root"] = f.graph.vertices()[*f.root].id;
  return j;
}

}  // namespace vwt
