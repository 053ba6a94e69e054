#include "vwt/iwasawa.hpp"

#include "vwt/error.hpp"
#include "vwt/matrix_tree.hpp"

namespace vwt {

namespace {

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Rational mu_of(const RLaurent& q) {
  if (q.is_zero()) throw ZeroSeries("mu of the zero series");
  std::optional<PAdicValue> best;
  for (const auto& [e, c] : q.poly().terms()) {
    PAdicValue v = c.valuation();
    if (!best || v < *best) best = v;
  }
  return best->value();
}

long lambda_of(const RLaurent& q) {
  if (q.nvars() != 1) throw MultivariableUnsupported("lambda is only defined here for one variable");
  Rational mu = mu_of(q);
  for (const auto& [e, c] : q.poly().terms()) {
    if (c.valuation() == PAdicValue::finite(mu)) return e[0];
  }
  throw ZeroSeries("no coefficient attains mu");
}

bool nonvanishing_on_W(const RLaurent& q) {
  if (q.nvars() != 1) throw MultivariableUnsupported("nonvanishing test requires one variable");
  if (q.is_zero()) return false;
  const PiField& f = q.context().coeff;
  UPoly s = shift_to_s(to_upoly(q.poly()));
  const long deg = static_cast<long>(s.size()) - 1;
  // An irreducible factor of Phi_{p^j} over R has degree >= phi(p^j)/M, so
  // larger j cannot contribute roots.
  for (int j = 1;; ++j) {
    long phi = ipow(f.p, j - 1) * (f.p - 1);
    if (phi > static_cast<long>(f.M) * deg) break;
    UPoly g = upoly_gcd(s, cyclotomic_upoly(f, j));
    if (g.size() > 1) return false;
  }
  return true;
}

PiRingElement tower_complexity(const RGraph& g, const VoltageAssignment& alpha, int level,
                               std::optional<std::size_t> root) {
  const long p = g.context().p;
  FiniteAbelianGroup group = FiniteAbelianGroup::tower_level(p, level, alpha.dim);
  if (g.num_vertices() * group.size() > kMaxDerivedVertices) {
    throw TooLarge("level " + std::to_string(level) + " derived graph exceeds " +
                   std::to_string(kMaxDerivedVertices) + " vertices");
  }
  auto x = derive(g, group, truncate(alpha, p, level));
  if (!is_connected(x.graph)) throw Disconnected("derived graph at level " + std::to_string(level) + " is disconnected", level);
  const std::size_t h = group.size();
  if (root) return kappa_v_det(x.graph, *root * h);
  PiRingElement sum = PiRingElement::zero(g.context());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) sum += kappa_v_det(x.graph, v * h);
  return sum.scaled(Rational(static_cast<long>(h)));
}

IwasawaReport iwasawa_verify(const RGraph& g, const VoltageAssignment& alpha, int levels, TowerMode mode,
                             std::optional<std::size_t> root) {
  if (mode == TowerMode::rooted && !root) root = 0;
  if (mode == TowerMode::total) root.reset();
  IwasawaReport r;
  r.mode = mode;
  r.root = root;
  r.q = q_series(g, alpha);
  r.mu = mu_of(r.q);
  r.lambda = lambda_of(r.q);
  r.lambda_effective = mode == TowerMode::rooted ? r.lambda - 1 : r.lambda;
  const long p = g.context().p;
  for (int n = 0; n <= levels; ++n) {
    LevelRow row;
    row.level = n;
    row.vertices = g.num_vertices() * static_cast<std::size_t>(ipow(p, n * alpha.dim));
    row.kappa = tower_complexity(g, alpha, n, root);
    row.valuation = row.kappa.valuation();
    if (row.kappa.is_zero() && !r.zero_from) r.zero_from = n;
    r.rows.push_back(std::move(row));
  }
  const LevelRow& last = r.rows.back();
  if (last.valuation.is_finite()) {
    r.nu = last.valuation.value() - r.mu * ipow(p, last.level) - Rational(r.lambda_effective * last.level);
  }
  if (r.nu) {
    for (auto& row : r.rows) {
      row.predicted = r.mu * ipow(p, row.level) + Rational(r.lambda_effective * row.level) + *r.nu;
      row.match = row.valuation.is_finite() && row.valuation.value() == *row.predicted;
    }
    for (int n = levels; n >= 0 && r.rows[static_cast<std::size_t>(n)].match; --n) r.n0 = n;
  }
  return r;
}

KidaReport kida_verify(const RGraph& gx, const VoltageAssignment& alpha, const std::vector<long>& beta, int levels) {
  if (alpha.dim != 1) throw MultivariableUnsupported("Kida verification requires a one-variable tower");
  const PiField& f = gx.context();
  const long p = f.p;
  KidaReport r;
  r.degree = p;
  auto y = derive_mod_p(gx, beta);
  VoltageAssignment lifted = lift_voltage(alpha, y);
  TwistReport twist = twisted_factorization(gx, alpha, beta);
  r.qx = q_series(gx, alpha);
  r.qy = twist.q_lifted;
  r.factorization = twist.factorization;
  if (!r.qx.is_zero()) {
    r.mu_x = mu_of(r.qx);
    r.lambda_x = lambda_of(r.qx);
  }
  if (!r.qy.is_zero()) {
    r.mu_y = mu_of(r.qy);
    r.lambda_y = lambda_of(r.qy);
  }

  // (a) and the level table for Y.
  for (int n = 0; n <= levels; ++n) {
    FiniteAbelianGroup group = FiniteAbelianGroup::tower_level(p, n, 1);
    if (y.graph.num_vertices() * group.size() > kMaxDerivedVertices) {
      throw TooLarge("level " + std::to_string(n) + " of Y exceeds " + std::to_string(kMaxDerivedVertices) + " vertices");
    }
    auto yn = derive(y.graph, group, truncate(lifted, p, n));
    if (!is_connected(yn.graph)) {
      if (r.a.holds) r.a = {false, "Y(α'_" + std::to_string(n) + ") is disconnected at level " + std::to_string(n)};
      r.kappa_levels.push_back(PiRingElement::zero(f));
      continue;
    }
    r.kappa_levels.push_back(tower_complexity(y.graph, lifted, n));
  }

  // (b), (b)': nonzero at level 0 plus nonvanishing of Q_Y on W.
  bool y_connected = is_connected(y.graph);
  bool nonvanishing = nonvanishing_on_W(r.qy);
  std::optional<std::size_t> good_root;
  PiRingElement kappa_y = PiRingElement::zero(f);
  if (y_connected) {
    for (std::size_t v = 0; v < y.graph.num_vertices(); ++v) {
      PiRingElement k = kappa_v_det(y.graph, v);
      if (!k.is_zero() && !good_root) good_root = v;
      kappa_y += k;
    }
  }
  if (!y_connected) {
    r.b = {false, "Y is disconnected, so every κ_v(Y) vanishes"};
    r.b_prime = {false, "Y is disconnected, so κ(Y) = 0"};
  } else {
    if (!good_root) r.b = {false, "every κ_v(Y) vanishes"};
    if (kappa_y.is_zero()) r.b_prime = {false, "κ(Y) = 0"};
    if (!nonvanishing) {
      r.b = {false, "Q_Y vanishes at a nontrivial p-power root of unity"};
      r.b_prime = r.b;
    }
  }
  if (r.b.holds) r.b.detail = "κ_v(Y(α'_n)) ≠ 0 for v = " + y.graph.vertices()[*good_root].id;
  if (r.b_prime.holds) r.b_prime.detail = "κ(Y(α'_n)) ≠ 0 for all n";

  // (c), (c)'.
  auto check_c = [](const RGraph& g, const std::optional<Rational>& mu, const std::string& tag) {
    HypothesisCheck c;
    if (!mu) return HypothesisCheck{false, tag + " undefined: Q vanishes"};
    Rational bound = *mu / Rational(static_cast<long>(g.num_vertices()));
    bound.canonicalize();
    for (const auto& v : g.vertices()) {
      PAdicValue val = v.weight.valuation();
      if (val < PAdicValue::finite(bound)) {
        return HypothesisCheck{false, tag + " violated at " + v.id + ": val=" + val.to_string() + " < " +
                                          rational_to_string(bound)};
      }
    }
    c.detail = tag + " holds: every val ≥ " + rational_to_string(bound);
    return c;
  };
  r.c = check_c(gx, r.mu_x, "(c)");
  r.c_prime = check_c(y.graph, r.mu_y, "(c)'");
  if (r.a.holds) r.a.detail = "Y(α'_n) connected for n ≤ " + std::to_string(levels);

  r.hypotheses = r.a.holds && (r.b.holds || r.b_prime.holds) && (r.c.holds || r.c_prime.holds);
  if (r.mu_x && r.mu_y) r.mu_identity = *r.mu_y == Rational(p) * *r.mu_x;
  if (r.lambda_x && r.lambda_y) r.lambda_identity = *r.lambda_y == p * *r.lambda_x;

  // Orbit-grouped additivity: the nontrivial characters of Z/p form one orbit.
  RLaurent triv = descend(q_twisted(gx, alpha, beta, 0));
  if (!r.qy.is_zero() && !triv.is_zero() && !twist.nontrivial_product.is_zero()) {
    r.mu_additivity = *r.mu_y == mu_of(triv) + mu_of(twist.nontrivial_product);
    r.lambda_additivity = *r.lambda_y == lambda_of(triv) + lambda_of(twist.nontrivial_product);
  }
  return r;
}

}  // namespace vwt
