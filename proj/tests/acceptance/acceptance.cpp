// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// criterion fails.

#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "../support/oracles.hpp"
#include "../support/random_graphs.hpp"
#include "vwt/error.hpp"
#include "vwt/io.hpp"
#include "vwt/iwasawa.hpp"
#include "vwt/matrix_tree.hpp"

namespace {

using namespace vwt;
using fixtures::Rng;

struct Outcome {
  bool pass = true;
  std::string note;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && out_.pass) out_.note = what;
    out_.pass = out_.pass && ok;
  }
  Outcome done(const std::string& summary) {
    if (out_.pass) out_.note = summary;
    return out_;
  }

 private:
  Outcome out_;
};

std::string data(const std::string& name) { return std::string(VWT_DATA_DIR) + "/" + name; }

PiRingElement r_of(const PiField& f, long a, long b) {
  return PiRingElement::from_int(f, a) + PiRingElement::from_int(f, b) * PiRingElement::pi_power(f, 2);
}

Outcome criterion1() {
  Check c;
  GraphFile f = load_graph(data("four_vertex_multigraph.json"));
  const RGraph& g = f.graph;
  std::set<std::set<std::string>> got;
  for (const auto& t : spanning_trees(g)) {
    std::set<std::string> ids;
    for (std::size_t e : t) ids.insert(g.edges()[e].id);
    got.insert(ids);
  }
  const std::set<std::set<std::string>> figure = {
      {"e1", "e3", "e5"}, {"e1", "e2", "e5"}, {"e4", "e3", "e5"}, {"e4", "e2", "e5"}, {"e1", "e4", "e5"}};
  c.expect(spanning_trees(g).size() == 5, "library enumerates a number of trees other than 5");
  c.expect(got == figure, "tree edge sets differ from the figure");
  c.expect(oracle::tree_masks(g).size() == 5, "bitmask oracle count differs from 5");
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    c.expect(kappa_v_det(g, v) == PiRingElement::from_int(g.context(), 5), "unit-weight kappa_v is not the tree count");
  }
  return c.done("5 spanning trees, matching the figure");
}

Outcome criterion2() {
  Check c;
  GraphFile f = load_graph(data("triangle_loop.json"));
  const RGraph& g = f.graph;
  const PiField& pf = g.context();
  const std::vector<PiRingElement> expected = {r_of(pf, 2, 2), r_of(pf, 2, 1), r_of(pf, 2, 1)};
  auto lsym = build_bundle(g).Lsym;
  auto l = build_bundle(g).L;
  for (std::size_t v = 0; v < 3; ++v) {
    const std::string id = g.vertices()[v].id;
    c.expect(oracle::kappa_v(g, v) == expected[v], "brute force kappa_" + id);
    c.expect(kappa_v_oracle(g, v) == expected[v], "library tree sum kappa_" + id);
    c.expect(kappa_v_det(g, v) == expected[v], "symmetrized minor kappa_" + id);
    c.expect(oracle::cofactor_det(minor(l, {id}, {id})) == expected[v], "plain Laplacian minor kappa_" + id);
    c.expect(oracle::cofactor_det(minor(lsym, {id}, {id})) == expected[v], "cofactor expansion kappa_" + id);
  }
  c.expect(kappa_det(g) == r_of(pf, 6, 4), "kappa by minors");
  c.expect(oracle::kappa(g) == r_of(pf, 6, 4), "kappa by brute force");
  c.expect(mtt2_check(g), "adjugate identity");
  return c.done("kappa_v = (2+2√2, 2+√2, 2+√2), kappa = 6+4√2 by trees and minors");
}

Outcome criterion3() {
  Check c;
  GraphFile f = load_graph(data("triangle_loop.json"));
  const RGraph& g = f.graph;
  const PiField& pf = g.context();
  FiniteAbelianGroup group = FiniteAbelianGroup::tower_level(2, 1, 1);
  auto alpha = truncate(f.alpha, 2, 1);
  auto x = derive(g, group, alpha);
  const PiRingElement expected = r_of(pf, 192, 136);
  c.expect(x.graph.num_vertices() == 6, "derived graph does not have 6 vertices");
  c.expect(oracle::kappa(x.graph) == expected, "brute force on X(alpha_1)");
  c.expect(kappa_det(x.graph) == expected, "Laplacian minors on X(alpha_1)");
  Character sign(pf, group, {1});
  c.expect(kappa_det(g) * h_at_one(g, group, alpha, sign).base_part() == expected, "kappa(X) h(psi,1)");
  c.expect(expected.valuation() == PAdicValue::finite(Rational(7, 2)), "val_2 is not 7/2");
  return c.done("kappa(X(alpha_1)) = 192+136√2 three ways, val 7/2");
}

Outcome criterion4() {
  Check c;
  GraphFile f = load_graph(data("triangle_loop.json"));
  IwasawaReport r = iwasawa_verify(f.graph, f.alpha, 3, TowerMode::total);
  c.expect(r.mu == Rational(1, 2), "mu is " + rational_to_string(r.mu));
  c.expect(r.lambda == 2, "lambda is " + std::to_string(r.lambda));
  c.expect(r.nu && *r.nu == Rational(1, 2), "nu is not 1/2");
  const std::vector<Rational> vals = {Rational(1), Rational(7, 2), Rational(13, 2), Rational(21, 2)};
  for (int n = 1; n <= 3; ++n) {
    const auto& row = r.rows[static_cast<std::size_t>(n)];
    c.expect(row.valuation == PAdicValue::finite(vals[static_cast<std::size_t>(n)]), "val at level " + std::to_string(n));
    c.expect(row.match, "formula fails at level " + std::to_string(n));
  }
  return c.done("mu = 1/2, lambda = 2, nu = 1/2; vals 7/2, 13/2, 21/2 at n = 1, 2, 3");
}

Outcome criterion5() {
  Check c;
  GraphFile f = load_graph(data("triangle_loop_beta.json"));
  KidaReport r = kida_verify(f.graph, f.alpha, edge_values(f, "beta"), 2);
  c.expect(r.mu_x == Rational(1, 2) && r.mu_y == Rational(1), "mu(X), mu(Y) differ from 1/2, 1");
  c.expect(r.lambda_x == 2L && r.lambda_y == 4L, "lambda(X), lambda(Y) differ from 2, 4");
  c.expect(r.mu_identity && r.lambda_identity, "Kida identities fail");
  c.expect(r.factorization, "twisted factorization fails");
  c.expect(r.a.holds && r.b.holds && r.b_prime.holds, "hypotheses (a)/(b) fail");
  return c.done("mu 1/2 -> 1, lambda 2 -> 4");
}

Outcome criterion6() {
  Check c;
  GraphFile f = load_graph(data("triangle_loop_beta_reweighted.json"));
  KidaReport r = kida_verify(f.graph, f.alpha, edge_values(f, "beta"), 2);
  c.expect(r.mu_x == Rational(0) && r.lambda_x == 2L, "mu(X), lambda(X) differ from 0, 2");
  c.expect(r.mu_y == Rational(1) && r.lambda_y == 2L, "mu(Y), lambda(Y) differ from 1, 2");
  c.expect(!r.c.holds && r.c.detail.find("at v2: val=-1") != std::string::npos, "(c) not reported violated at v2");
  c.expect(!r.mu_identity && !r.hypotheses, "Kida identity should fail");
  return c.done("mu 0 -> 1, lambda 2 -> 2, (c) violated at v2");
}

// (i) random matrix-tree suite over R(i).
bool matrix_tree_suite(std::string& note) {
  Rng rng(20261016);
  const CycloRing r = fixtures::gaussian_ring();
  for (int trial = 0; trial < 200; ++trial) {
    const bool zero_sum = trial % 4 == 3;
    std::vector<CycloElement> roots;
    auto g = fixtures::random_graph<CycloElement>(rng, r, 6, 9, [&](Rng& gen, std::size_t v, std::size_t n) {
      if (!zero_sum) return fixtures::sample_root(gen, r);
      if (roots.size() != n) roots = fixtures::zero_sum_roots(gen, r, n);
      return roots[v];
    });
    auto fail = [&](const std::string& what) {
      note = "graph " + std::to_string(trial) + ": " + what;
      return false;
    };
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      auto brute = oracle::kappa_v(g, v);
      if (!(kappa_v_det(g, v) == brute)) return fail("symmetrized minor vs trees");
      const auto& id = g.vertices()[v].id;
      if (!(determinant(minor(build_bundle(g).L, {id}, {id})) == brute)) return fail("plain minor vs trees");
    }
    if (!mtt2_check(g)) return fail("adjugate identity");
    for (Section sec : {Section::first_recorded, Section::reversed}) {
      auto b = build_bundle(g, sec);
      if (!(b.Lsym == b.B * b.B.transpose())) return fail("Lsym = B B^T");
      if (!(b.sqrtS * b.L == b.Lsym * b.sqrtS)) return fail("sqrt(S) L = Lsym sqrt(S)");
    }
    CycloElement total = CycloElement::zero(r);
    for (const auto& v : g.vertices()) total += v.weight;
    if (zero_sum && !total.is_zero()) return fail("generator did not produce zero weight sum");
    if (total.is_zero() && g.num_vertices() > 1 && !kappa_det(g).is_zero()) return fail("zero weight sum with nonzero kappa");
  }
  return true;
}

// (ii) decomposition on random Z/2 or Z/4 voltages.
bool decomposition_suite(std::string& note) {
  Rng rng(4242);
  const PiField f{2, 2};
  for (int trial = 0; trial < 25; ++trial) {
    RGraph g = fixtures::random_real_graph(rng, f, 4, 6);
    const int n = trial % 2 == 0 ? 1 : 2;
    FiniteAbelianGroup group = FiniteAbelianGroup::tower_level(2, n, 1);
    auto alpha = truncate(fixtures::random_voltage(rng, g.num_edges(), 1, -3, 3), 2, n);
    auto x = derive(g, group, alpha);
    DecompositionReport rep = decomposition_check(g, group, alpha);
    if (!rep.total_holds || !rep.rooted_holds) {
      note = "pair " + std::to_string(trial) + ": library decomposition check";
      return false;
    }
    std::vector<CycloElement> values;
    for (const auto& chi : all_characters(f, group)) {
      if (!chi.is_trivial()) values.push_back(h_at_one(g, group, alpha, chi));
    }
    PiRingElement prod = PiRingElement::one(f);
    for (const auto& orbit : galois_orbits(all_characters(f, group))) {
      if (orbit.size() == 1 && orbit[0] == 0) continue;
      std::vector<CycloElement> vals;
      for (std::size_t k : orbit) vals.push_back(h_at_one(g, group, alpha, all_characters(f, group)[k]));
      prod = prod * galois_orbit_product(vals);
    }
    const bool connected = is_connected(x.graph);
    PiRingElement derived = connected ? (x.graph.num_edges() <= 16 ? oracle::kappa(x.graph) : kappa_det(x.graph))
                                      : PiRingElement::zero(f);
    if (!(derived == kappa_det(g) * prod)) {
      note = "pair " + std::to_string(trial) + ": kappa(X(alpha)) != kappa(X) prod h(psi,1)";
      return false;
    }
    if (connected) {
      const Rational inv(1, static_cast<long>(group.size()));
      for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        for (std::size_t s = 0; s < group.size(); ++s) {
          if (!(kappa_v_det(x.graph, v * group.size() + s) == (kappa_v_det(g, v) * prod).scaled(inv))) {
            note = "pair " + std::to_string(trial) + ": rooted decomposition";
            return false;
          }
        }
      }
    }
  }
  return true;
}

// (iii) direct sums and induction.
bool representation_suite(std::string& note) {
  Rng rng(777);
  const PiField f{2, 2};
  for (int trial = 0; trial < 10; ++trial) {
    RGraph g = fixtures::random_real_graph(rng, f, 3, 5);
    FiniteAbelianGroup group = FiniteAbelianGroup::tower_level(2, 2, 1);
    auto alpha = truncate(fixtures::random_voltage(rng, g.num_edges(), 1, -3, 3), 2, 2);
    auto chars = all_characters(f, group);
    const auto& a = chars[static_cast<std::size_t>(fixtures::uniform(rng, 0, 3))];
    const auto& b = chars[static_cast<std::size_t>(fixtures::uniform(rng, 0, 3))];
    if (!direct_sum_check(g, group, alpha, MatrixRep::from_character(a), MatrixRep::from_character(b))) {
      note = "instance " + std::to_string(trial) + ": direct sum";
      return false;
    }
    std::vector<GroupElement> h = {{0}, {2}};
    std::vector<GroupElement> reps = {{0}, {1}};
    Character chi(f, group, {fixtures::uniform(rng, 0, 3)});
    InductionReport ind = induction_check(g, group, alpha, h, reps, chi);
    if (!ind.induction || !ind.frobenius) {
      note = "instance " + std::to_string(trial) + ": induction";
      return false;
    }
  }
  return true;
}

// (iv) Q at zeta - 1 equals h(psi, 1).
bool evaluation_suite(std::string& note) {
  Rng rng(99);
  const PiField f{2, 2};
  for (int trial = 0; trial < 10; ++trial) {
    RGraph g = fixtures::random_real_graph(rng, f, 4, 6);
    auto a = fixtures::random_voltage(rng, g.num_edges(), 1, -4, 4);
    RLaurent q = q_series(g, a);
    for (int n = 0; n <= 2; ++n) {
      FiniteAbelianGroup group = FiniteAbelianGroup::tower_level(2, n, 1);
      auto alpha = truncate(a, 2, n);
      for (const auto& chi : all_characters(f, group)) {
        if (!(q_eval(q, chi) == h_at_one(g, group, alpha, chi))) {
          note = "graph " + std::to_string(trial) + " level " + std::to_string(n);
          return false;
        }
      }
    }
  }
  return true;
}

// (v) Q_Y = prod over phi of the twisted series.
bool twist_holds(const RGraph& g, const VoltageAssignment& a, const std::vector<long>& beta) {
  auto y = derive_mod_p(g, beta);
  RLaurent qy = q_series(y.graph, lift_voltage(a, y));
  RLaurent prod = descend(q_twisted(g, a, beta, 0)) * descend(q_twisted(g, a, beta, 1));
  return qy == prod && twisted_factorization(g, a, beta).factorization;
}

bool twist_suite(std::string& note) {
  GraphFile f = load_graph(data("triangle_loop_beta.json"));
  if (!twist_holds(f.graph, f.alpha, edge_values(f, "beta"))) {
    note = "fixture";
    return false;
  }
  Rng rng(5);
  const PiField pf{2, 2};
  for (int trial = 0; trial < 5; ++trial) {
    RGraph g = fixtures::random_real_graph(rng, pf, 4, 6);
    auto a = fixtures::random_voltage(rng, g.num_edges(), 1, -2, 2);
    std::vector<long> beta;
    for (std::size_t k = 0; k < g.num_edges(); ++k) beta.push_back(fixtures::uniform(rng, 0, 1));
    if (!twist_holds(g, a, beta)) {
      note = "random instance " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

// (vi) unit-monomial invariance and additivity.
bool invariant_suite(std::string& note) {
  Rng rng(31);
  const PiField f{2, 4};
  const PolyRing<PiRingElement> ring{f, 1};
  std::vector<RLaurent> qs;
  for (int trial = 0; trial < 6; ++trial) {
    RGraph g = fixtures::random_real_graph(rng, PiField{2, 2}, 4, 6);
    auto q = q_series(g, fixtures::random_voltage(rng, g.num_edges(), 1, -3, 3));
    if (!q.is_zero()) qs.push_back(q);
  }
  GraphFile ex = load_graph(data("triangle_loop.json"));
  RLaurent base = q_series(ex.graph, ex.alpha);
  for (long k = -3; k <= 3; ++k) {
    for (long sign : {1L, -1L}) {
      RLaurent u = RLaurent::unit_monomial(ring, {k}).scaled(PiRingElement::from_int(f, sign));
      RLaurent moved = base * u;
      if (!(mu_of(moved) == mu_of(base)) || lambda_of(moved) != lambda_of(base)) {
        note = "unit monomial k = " + std::to_string(k);
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = i; j < qs.size(); ++j) {
      RLaurent prod = qs[i] * qs[j];
      if (!(mu_of(prod) == mu_of(qs[i]) + mu_of(qs[j])) || lambda_of(prod) != lambda_of(qs[i]) + lambda_of(qs[j])) {
        note = "product of random series " + std::to_string(i) + ", " + std::to_string(j);
        return false;
      }
    }
  }
  return true;
}

Outcome criterion7() {
  Check c;
  const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> suites = {
      {"(i) matrix-tree", matrix_tree_suite}, {"(ii) decomposition", decomposition_suite},
      {"(iii) direct sum/induction", representation_suite}, {"(iv) Q evaluation", evaluation_suite},
      {"(v) twisted factorization", twist_suite}, {"(vi) invariants", invariant_suite}};
  for (const auto& [name, run] : suites) {
    std::string note;
    bool ok = false;
    try {
      ok = run(note);
    } catch (const std::exception& e) {
      note = e.what();
    }
    c.expect(ok, name + ": " + note);
  }
  return c.done("all six property suites");
}

Outcome criterion8() {
  Check c;
  RGraph g = fixtures::triangle_with_loop();
  const PiField& f = g.context();
  VoltageAssignment a{2, {{1, 0}, {0, 0}, {0, 0}, {0, 1}}};
  FiniteAbelianGroup group = FiniteAbelianGroup::tower_level(2, 1, 2);
  auto alpha = truncate(a, 2, 1);
  auto x = derive(g, group, alpha);
  c.expect(group.size() == 4 && x.graph.num_vertices() == 12, "derived graph over (Z/2)^2 has wrong size");
  c.expect(check_cover(g, x), "not a cover");
  auto chars = all_characters(f, group);
  c.expect(chars.size() == 4, "expected four characters");
  PiRingElement prod = PiRingElement::one(f);
  for (const auto& chi : chars) {
    if (!chi.is_trivial()) prod = prod * h_at_one(g, group, alpha, chi).base_part();
  }
  PiRingElement k = kappa_det(x.graph);
  c.expect(!k.is_zero() && k == kappa_det(g) * prod, "decomposition with four characters");
  c.expect(decomposition_check(g, group, alpha).total_holds, "library decomposition check");
  RLaurent q = q_series(g, a);
  c.expect(q.nvars() == 2, "Q should have two variables");
  c.expect(mu_of(q) >= Rational(0), "mu of the two-variable Q");
  bool refused = false;
  try {
    (void)lambda_of(q);
  } catch (const MultivariableUnsupported&) {
    refused = true;
  }
  c.expect(refused, "lambda did not refuse two variables");
  return c.done("(Z/2)^2 cover: kappa = " + k.to_string() + ", mu(Q) = " + rational_to_string(mu_of(q)) +
                ", lambda refused");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"four-vertex multigraph trees", criterion1},   {"triangle-with-loop complexities", criterion2},
      {"first tower level", criterion3},        {"tower invariants", criterion4},
      {"Kida positive case", criterion5},           {"Kida negative case", criterion6},
      {"property suites", criterion7},              {"two-variable smoke test", criterion8}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": " << o.note
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
