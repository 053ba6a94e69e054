// vwt: command-line front end for weighted complexities, covers, Q-series and
// tower invariants of vertex-weighted graphs.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "vwt/error.hpp"
#include "vwt/io.hpp"
#include "vwt/iwasawa.hpp"
#include "vwt/matrix_tree.hpp"

namespace {

using namespace vwt;

enum Exit { kOk = 0, kOther = 1, kParse = 2, kDisconnected = 3, kMismatch = 4, kHypothesis = 5 };

struct RunConfig {
  std::string input;
  std::string tower;
  std::string command;
  int levels = 2;
  std::string root;
  std::string format = "table";
  bool oracle = false;
  std::string beta = "beta";
};

Json element(const PiRingElement& x) {
  return {{"value", x.to_string()}, {"val", x.valuation().to_string()}, {"wire", to_json(x)}};
}

// Table rendering works from the same Json the json mode prints, so the two
// modes cannot disagree.
std::string cell(const Json& v) {
  if (v.is_object() && v.contains("value")) return v["value"].get<std::string>() + " (val " + v["val"].get<std::string>() + ")";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "-";
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + cell(x);
    return s;
  }
  return v.dump();
}

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

bool is_record_list(const Json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object() && !x.contains("value"); });
}

void render_table(std::ostream& out, const Json& j, const std::string& indent = "") {
  for (const auto& [key, v] : j.items()) {
    if (is_record_list(v)) {
      out << indent << key << ":\n";
      std::vector<std::string> cols;
      for (const auto& [k, _] : v[0].items()) cols.push_back(k);
      std::vector<std::vector<std::string>> rows;
      std::vector<std::size_t> width;
      for (const auto& c : cols) width.push_back(display_width(c));
      for (const auto& r : v) {
        std::vector<std::string> row;
        for (std::size_t i = 0; i < cols.size(); ++i) {
          row.push_back(r.contains(cols[i]) ? cell(r[cols[i]]) : "-");
          width[i] = std::max(width[i], display_width(row.back()));
        }
        rows.push_back(std::move(row));
      }
      auto line = [&](const std::vector<std::string>& r) {
        out << indent << "  ";
        for (std::size_t i = 0; i < r.size(); ++i) out << r[i] << std::string(width[i] - display_width(r[i]) + 2, ' ');
        out << "\n";
      };
      line(cols);
      for (const auto& r : rows) line(r);
    } else if (v.is_object() && !v.contains("value")) {
      out << indent << key << ":\n";
      render_table(out, v, indent + "  ");
    } else {
      out << indent << key << ": " << cell(v) << "\n";
    }
  }
}

void emit(const RunConfig& cfg, const Json& j) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    render_table(std::cout, j);
  }
}

std::optional<std::size_t> root_of(const RunConfig& cfg, const GraphFile& f) {
  if (cfg.root.empty()) return f.root;
  try {
    return f.graph.vertex_index(cfg.root);
  } catch (const UnknownLabel&) {
    throw ParseError("unknown root vertex " + cfg.root);
  }
}

void require_connected(const RGraph& g) {
  if (!is_connected(g)) throw Disconnected("graph is not connected");
}

std::string group_name(const FiniteAbelianGroup& g) {
  std::string s;
  for (long m : g.orders()) s += (s.empty() ? "" : " x ") + ("Z/" + std::to_string(m));
  return s.empty() ? "trivial" : s;
}

int cmd_kappa(const RunConfig& cfg, const GraphFile& f) {
  const RGraph& g = f.graph;
  require_connected(g);
  Json rows = Json::array();
  PiRingElement total = PiRingElement::zero(g.context());
  bool agree = true;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    PiRingElement k = kappa_v_det(g, v);
    total += k;
    Json row{{"vertex", g.vertices()[v].id}, {"kappa_v", element(k)}};
    if (cfg.oracle) {
      PiRingElement b = kappa_v_oracle(g, v);
      row["oracle"] = element(b);
      agree = agree && b == k;
    }
    rows.push_back(row);
  }
  Json out{{"field", g.context().to_string()}, {"kappa", element(total)}, {"rooted", rows}};
  if (cfg.oracle) out["oracle_agrees"] = agree;
  emit(cfg, out);
  return agree ? kOk : kMismatch;
}

int cmd_mtt_check(const RunConfig& cfg, const GraphFile& f) {
  const RGraph& g = f.graph;
  require_connected(g);
  Json checks = Json::array();
  bool ok = true;
  auto record = [&](const std::string& name, bool holds) {
    checks.push_back({{"check", name}, {"holds", holds}});
    ok = ok && holds;
  };
  for (Section sec : {Section::first_recorded, Section::reversed}) {
    auto b = build_bundle(g, sec);
    std::string tag = sec == Section::first_recorded ? "recorded" : "reversed";
    record("Lsym = B B^T (" + tag + " section)", b.Lsym == b.B * b.B.transpose());
  }
  auto b = build_bundle(g);
  record("sqrt(S) L = Lsym sqrt(S)", b.sqrtS * b.L == b.Lsym * b.sqrtS);
  record("(sum w) adj(Lsym) = s s^T kappa", mtt2_check(g));
  PiRingElement total = PiRingElement::zero(g.context());
  for (const auto& v : g.vertices()) total += v.weight;
  if (total.is_zero()) record("sum w = 0 implies kappa = 0", kappa_det(g).is_zero());
  if (cfg.oracle) {
    bool same = true;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) same = same && kappa_v_oracle(g, v) == kappa_v_det(g, v);
    record("kappa_v by trees = kappa_v by minors", same);
  }
  emit(cfg, Json{{"checks", checks}, {"all_hold", ok}});
  return ok ? kOk : kMismatch;
}

int cmd_oracle(const RunConfig& cfg, const GraphFile& f) {
  const RGraph& g = f.graph;
  require_connected(g);
  Json trees = Json::array();
  for (const auto& t : spanning_trees(g)) {
    Json ids = Json::array();
    for (std::size_t e : t) ids.push_back(g.edges()[e].id);
    trees.push_back({{"edges", ids}});
  }
  Json rows = Json::array();
  bool agree = true;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    PiRingElement brute = kappa_v_oracle(g, v);
    PiRingElement det = kappa_v_det(g, v);
    agree = agree && brute == det;
    rows.push_back({{"vertex", g.vertices()[v].id}, {"trees", element(brute)}, {"minor", element(det)}, {"agree", brute == det}});
  }
  emit(cfg, Json{{"spanning_trees", trees.size()}, {"trees", trees}, {"rooted", rows}, {"all_agree", agree}});
  return agree ? kOk : kMismatch;
}

int cmd_derive(const RunConfig& cfg, const GraphFile& f) {
  const long p = f.graph.context().p;
  FiniteAbelianGroup group = FiniteAbelianGroup::tower_level(p, cfg.levels, f.alpha.dim);
  if (f.graph.num_vertices() * group.size() > kMaxDerivedVertices) {
    throw TooLarge("derived graph exceeds " + std::to_string(kMaxDerivedVertices) + " vertices");
  }
  auto x = derive(f.graph, group, truncate(f.alpha, p, cfg.levels));
  GraphFile d{x.graph, lift_voltage(f.alpha, x), {}, std::nullopt, std::nullopt};
  bool connected = is_connected(x.graph);
  Json out{{"group", group_name(group)}, {"level", cfg.levels}, {"vertices", x.graph.num_vertices()},
           {"edges", x.graph.num_edges()}, {"connected", connected}, {"is_cover", check_cover(f.graph, x)}};
  if (connected) out["kappa"] = element(kappa_det(x.graph));
  if (cfg.format == "json") {
    out["graph"] = graph_to_json(d);
  } else {
    Json es = Json::array();
    for (const auto& e : x.graph.edges()) {
      es.push_back({{"edge", e.id}, {"from", x.graph.vertices()[e.from].id}, {"to", x.graph.vertices()[e.to].id}});
    }
    out["edge_list"] = es;
  }
  emit(cfg, out);
  return connected ? kOk : kDisconnected;
}

int cmd_hfun(const RunConfig& cfg, const GraphFile& f) {
  const RGraph& g = f.graph;
  require_connected(g);
  const long p = g.context().p;
  FiniteAbelianGroup group = FiniteAbelianGroup::tower_level(p, cfg.levels, f.alpha.dim);
  auto alpha = truncate(f.alpha, p, cfg.levels);
  Json rows = Json::array();
  bool agree = true;
  RLaurent q = q_series(g, f.alpha);
  for (const auto& chi : all_characters(g.context(), group)) {
    CycloElement h1 = h_at_one(g, group, alpha, chi);
    Json row{{"character", element_label(chi.dual)},
             {"h(t)", h_function(g, group, alpha, MatrixRep::from_character(chi)).to_string()},
             {"h(1)", h1.to_string()}};
    if (cfg.oracle) {
      bool same = q_eval(q, chi) == h1;
      row["Q(zeta-1) = h(1)"] = same;
      agree = agree && same;
    }
    rows.push_back(row);
  }
  Json out{{"group", group_name(group)}, {"characters", rows}};
  if (f.graph.num_vertices() * group.size() <= kMaxDerivedVertices) {
    auto rep = decomposition_check(g, group, alpha);
    out["kappa_base"] = element(rep.kappa_base);
    out["kappa_derived"] = element(rep.kappa_derived);
    out["character_product"] = element(rep.character_product);
    out["decomposition_holds"] = rep.total_holds && rep.rooted_holds;
    agree = agree && rep.total_holds && rep.rooted_holds;
  }
  emit(cfg, out);
  return agree ? kOk : kMismatch;
}

Json coefficient_rows(const RLaurent& q) {
  Json rows = Json::array();
  for (const auto& [e, c] : q.poly().terms()) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) mono += (i ? "," : "") + std::to_string(e[i]);
    rows.push_back({{"exponent", mono}, {"coefficient", element(c)}});
  }
  return rows;
}

int cmd_qpoly(const RunConfig& cfg, const GraphFile& f) {
  require_connected(f.graph);
  RLaurent q = q_series(f.graph, f.alpha);
  Json out{{"Q", q.to_string()}, {"shift", q.shift()}, {"coefficients", coefficient_rows(q)}};
  if (cfg.format == "json") out["series"] = to_json(q);
  bool agree = true;
  if (cfg.oracle) {
    const long p = f.graph.context().p;
    FiniteAbelianGroup group = FiniteAbelianGroup::tower_level(p, cfg.levels, f.alpha.dim);
    auto alpha = truncate(f.alpha, p, cfg.levels);
    for (const auto& chi : all_characters(f.graph.context(), group)) {
      agree = agree && q_eval(q, chi) == h_at_one(f.graph, group, alpha, chi);
    }
    out["Q(zeta-1) = h(1) for all characters"] = agree;
  }
  emit(cfg, out);
  return agree ? kOk : kMismatch;
}

Json iwasawa_json(const IwasawaReport& r, const RGraph& g, bool with_rows) {
  Json out{{"mode", r.mode == TowerMode::rooted ? "rooted" : "total"}};
  if (r.root) out["root"] = g.vertices()[*r.root].id;
  out["Q"] = r.q.to_string();
  out["mu"] = rational_to_string(r.mu);
  out["lambda"] = r.lambda;
  if (r.mode == TowerMode::rooted) out["lambda_effective"] = r.lambda_effective;
  out["nu"] = r.nu ? Json(rational_to_string(*r.nu)) : Json();
  out["nonvanishing_on_W"] = nonvanishing_on_W(r.q);
  if (with_rows) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"level", row.level},
                      {"vertices", row.vertices},
                      {"kappa", row.kappa.to_string()},
                      {"kappa_val", row.valuation.to_string()},
                      {"predicted", row.predicted ? Json(rational_to_string(*row.predicted)) : Json()},
                      {"match", row.match}});
    }
    out["levels"] = rows;
  }
  out["formula_from_level"] = r.n0 ? Json(*r.n0) : Json();
  if (r.zero_from) out["kappa_vanishes_from_level"] = *r.zero_from;
  return out;
}

int cmd_tower(const RunConfig& cfg, const GraphFile& f, bool with_rows) {
  require_connected(f.graph);
  auto root = root_of(cfg, f);
  if (f.alpha.dim != 1) {
    RLaurent q = q_series(f.graph, f.alpha);
    Json out{{"Q", q.to_string()}, {"mu", rational_to_string(mu_of(q))}};
    if (with_rows) {
      Json rows = Json::array();
      for (int n = 0; n <= cfg.levels; ++n) {
        PiRingElement k = tower_complexity(f.graph, f.alpha, n, root);
        rows.push_back({{"level", n}, {"kappa", k.to_string()}, {"kappa_val", k.valuation().to_string()}});
      }
      out["levels"] = rows;
    }
    out["lambda"] = "unsupported for several variables";
    emit(cfg, out);
    return kOk;
  }
  IwasawaReport r = iwasawa_verify(f.graph, f.alpha, cfg.levels, root ? TowerMode::rooted : TowerMode::total, root);
  emit(cfg, iwasawa_json(r, f.graph, with_rows));
  return r.zero_from ? kHypothesis : kOk;
}

Json hypothesis(const HypothesisCheck& h) { return {{"holds", h.holds}, {"detail", h.detail}}; }

std::string opt_text(const std::optional<Rational>& q) { return q ? rational_to_string(*q) : "undefined"; }
std::string opt_text(const std::optional<long>& l) { return l ? std::to_string(*l) : "undefined"; }

int cmd_kida(const RunConfig& cfg, const GraphFile& f) {
  require_connected(f.graph);
  auto beta = edge_values(f, cfg.beta);
  KidaReport r = kida_verify(f.graph, f.alpha, beta, cfg.levels);
  const bool conclusion = r.mu_identity && r.lambda_identity;
  std::string summary = std::string(conclusion ? "Kida holds" : "Kida fails") + ": μ " + opt_text(r.mu_x) + "→" +
                        opt_text(r.mu_y) + ", λ " + opt_text(r.lambda_x) + "→" + opt_text(r.lambda_y);
  Json kappas = Json::array();
  for (std::size_t n = 0; n < r.kappa_levels.size(); ++n) {
    kappas.push_back({{"level", n}, {"kappa_Y", r.kappa_levels[n].to_string()}, {"kappa_val", r.kappa_levels[n].valuation().to_string()}});
  }
  Json out{{"degree", r.degree},
           {"Q_X", r.qx.to_string()},
           {"Q_Y", r.qy.to_string()},
           {"mu_X", opt_text(r.mu_x)},
           {"lambda_X", opt_text(r.lambda_x)},
           {"mu_Y", opt_text(r.mu_y)},
           {"lambda_Y", opt_text(r.lambda_y)},
           {"hypotheses",
            {{"(a)", hypothesis(r.a)}, {"(b)", hypothesis(r.b)}, {"(b)'", hypothesis(r.b_prime)}, {"(c)", hypothesis(r.c)},
             {"(c)'", hypothesis(r.c_prime)}}},
           {"hypotheses_hold", r.hypotheses},
           {"mu_identity", r.mu_identity},
           {"lambda_identity", r.lambda_identity},
           {"twisted_factorization", r.factorization},
           {"mu_additivity", r.mu_additivity},
           {"lambda_additivity", r.lambda_additivity},
           {"tower_of_Y", kappas},
           {"summary", summary}};
  emit(cfg, out);
  if (!r.hypotheses) {
    for (const auto* h : {&r.a, &r.b, &r.b_prime, &r.c, &r.c_prime}) {
      if (!h->holds) std::cerr << h->detail << "\n";
    }
    return kHypothesis;
  }
  return kOk;
}

int run(const RunConfig& cfg) {
  GraphFile f = load_graph(cfg.input);
  if (!cfg.tower.empty()) {
    TowerSpec t = load_tower(cfg.tower);
    if (t.prime != f.graph.context().p) throw ParseError("tower prime differs from graph prime");
    if (t.dim != f.alpha.dim) throw ParseError("tower dim differs from graph dim");
  }
  if (cfg.command == "kappa") return cmd_kappa(cfg, f);
  if (cfg.command == "mtt-check") return cmd_mtt_check(cfg, f);
  if (cfg.command == "oracle") return cmd_oracle(cfg, f);
  if (cfg.command == "derive") return cmd_derive(cfg, f);
  if (cfg.command == "hfun") return cmd_hfun(cfg, f);
  if (cfg.command == "qpoly") return cmd_qpoly(cfg, f);
  if (cfg.command == "invariants") return cmd_tower(cfg, f, false);
  if (cfg.command == "tower") return cmd_tower(cfg, f, true);
  if (cfg.command == "kida") return cmd_kida(cfg, f);
  throw ParseError("unknown command " + cfg.command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted complexities, covers and Iwasawa invariants of vertex-weighted graphs"};
  app.require_subcommand(1);
  RunConfig cfg;
  bool levels_given = false;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"kappa", "weighted complexity and rooted complexities"},
      {"mtt-check", "matrix-tree identities on the Laplacian"},
      {"derive", "derived graph at the given level"},
      {"hfun", "h-functions of every character at the given level"},
      {"qpoly", "the Q-series"},
      {"invariants", "mu, lambda and nu of the tower"},
      {"tower", "level table of the tower with predicted valuations"},
      {"kida", "Kida's formula along the Z/p cover given by --beta"},
      {"oracle", "spanning-tree enumeration against the determinant formulas"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", cfg.input, "graph JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--tower", cfg.tower, "tower spec JSON {prime, dim, levels}")->check(CLI::ExistingFile);
    sub->add_option("--levels", cfg.levels, "top level n (0..4)")->check(CLI::Range(0, 4))->each([&](const std::string&) {
      levels_given = true;
    });
    sub->add_option("--root", cfg.root, "root vertex id (rooted complexities)");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json"}));
    sub->add_flag("--oracle", cfg.oracle, "cross-check against brute force");
    sub->add_option("--beta", cfg.beta, "per-edge key holding the Z/p voltage for kida");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }
  try {
    if (!levels_given) {
      if (!cfg.tower.empty()) cfg.levels = load_tower(cfg.tower).levels;
      else if (auto l = load_graph(cfg.input).levels) cfg.levels = *l;
      if (cfg.levels < 0 || cfg.levels > 4) throw ParseError("levels must lie in 0..4");
    }
    return run(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Disconnected& e) {
    std::cerr << "disconnected: " << e.what() << "\n";
    return kDisconnected;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
}
