#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vwt/lfunctions.hpp"

namespace vwt {

/// Minimum valuation over the coefficients of the polynomial part. The unit
/// shift (1+T)^{-k} does not affect it. Throws ZeroSeries.
Rational mu_of(const RLaurent& q);

/// First index whose coefficient attains mu_of(q). One variable only.
long lambda_of(const RLaurent& q);

/// True iff q(zeta - 1) != 0 for every p-power root of unity zeta != 1. One
/// variable only.
bool nonvanishing_on_W(const RLaurent& q);

/// Largest derived graph iwasawa_verify will build.
inline constexpr std::size_t kMaxDerivedVertices = 512;

enum class TowerMode { total, rooted };

struct LevelRow {
  int level = 0;
  std::size_t vertices = 0;
  PiRingElement kappa;
  PAdicValue valuation;
  std::optional<Rational> predicted;
  bool match = false;
};

struct IwasawaReport {
  TowerMode mode = TowerMode::total;
  std::optional<std::size_t> root;
  RLaurent q;
  Rational mu;
  long lambda = 0;
  /// lambda itself in total mode, lambda - 1 in rooted mode.
  long lambda_effective = 0;
  std::optional<Rational> nu;
  std::vector<LevelRow> rows;
  /// Smallest n such that the formula holds at every computed level >= n.
  std::optional<int> n0;
  /// First level where the complexity vanishes (it then vanishes beyond).
  std::optional<int> zero_from;
};

/// Computes kappa (or kappa_v for the root) of X(alpha_n) for n = 0..levels
/// by matrix-tree determinants, extracts mu and lambda from Q, fits nu at the
/// largest level and back-checks val = mu p^n + lambda_effective n + nu.
/// Complexities on a derived graph are evaluated at the first vertex of each
/// fiber and multiplied by |G|, since kappa_v is constant along fibers.
IwasawaReport iwasawa_verify(const RGraph& g, const VoltageAssignment& alpha, int levels, TowerMode mode,
                             std::optional<std::size_t> root = std::nullopt);

/// kappa (or kappa_v) of the level-n derived graph, through fiber representatives.
PiRingElement tower_complexity(const RGraph& g, const VoltageAssignment& alpha, int level,
                               std::optional<std::size_t> root = std::nullopt);

struct HypothesisCheck {
  bool holds = true;
  std::string detail;
};

struct KidaReport {
  long degree = 0;  ///< [Y:X] = p
  RLaurent qx;
  RLaurent qy;
  std::optional<Rational> mu_x, mu_y;
  std::optional<long> lambda_x, lambda_y;
  HypothesisCheck a;        ///< every Y(alpha'_n), n <= levels, connected
  HypothesisCheck b;        ///< some kappa_v(Y(alpha'_n)) nonzero for all n
  HypothesisCheck b_prime;  ///< kappa(Y(alpha'_n)) nonzero for all n
  HypothesisCheck c;        ///< val w_v >= mu(X)/#V(X)
  HypothesisCheck c_prime;  ///< val w_v >= mu(Y)/#V(Y)
  bool hypotheses = false;
  bool mu_identity = false;
  bool lambda_identity = false;
  bool factorization = false;
  bool mu_additivity = false;
  bool lambda_additivity = false;
  /// kappa(Y(alpha'_n)) for n = 0..levels (zero when disconnected).
  std::vector<PiRingElement> kappa_levels;
};

KidaReport kida_verify(const RGraph& gx, const VoltageAssignment& alpha, const std::vector<long>& beta, int levels);

}  // namespace vwt
