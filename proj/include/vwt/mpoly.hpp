#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vwt/error.hpp"
#include "vwt/ring_traits.hpp"

namespace vwt {

/// Context for polynomials in `nvars` variables over the ring of K.
template <class K>
struct PolyRing {
  typename K::context_type coeff;
  int nvars = 1;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

/// Sparse multivariate polynomial with nonnegative exponents. Zero
/// coefficients are never stored, so equality is structural.
template <class K>
class MPoly {
 public:
  using context_type = PolyRing<K>;
  using Exponent = std::vector<int>;

  explicit MPoly(context_type ctx) : ctx_(std::move(ctx)) {}

  static MPoly zero(const context_type& ctx) { return MPoly(ctx); }
  static MPoly one(const context_type& ctx) { return constant(ctx, K::one(ctx.coeff)); }
  static MPoly from_int(const context_type& ctx, long v) { return constant(ctx, K::from_int(ctx.coeff, v)); }
  static MPoly constant(const context_type& ctx, const K& c) {
    return monomial(ctx, Exponent(static_cast<std::size_t>(ctx.nvars), 0), c);
  }
  static MPoly variable(const context_type& ctx, int i) {
    Exponent e(static_cast<std::size_t>(ctx.nvars), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(ctx, e, K::one(ctx.coeff));
  }
  static MPoly monomial(const context_type& ctx, Exponent e, const K& c) {
    MPoly r(ctx);
    if (e.size() != static_cast<std::size_t>(ctx.nvars)) throw DimensionMismatch("exponent length");
    r.add_term(std::move(e), c);
    return r;
  }

  const context_type& context() const noexcept { return ctx_; }
  const std::map<Exponent, K>& terms() const noexcept { return terms_; }
  int nvars() const noexcept { return ctx_.nvars; }

  bool is_zero() const noexcept { return terms_.empty(); }

  K coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K::zero(ctx_.coeff) : it->second;
  }

  /// Degree in variable i; -1 for the zero polynomial.
  int degree(int i) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
    return d;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  MPoly& operator+=(const MPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  MPoly& operator-=(const MPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  MPoly& operator*=(const MPoly& o) {
    check_same(o);
    MPoly r(ctx_);
    for (const auto& [e1, c1] : terms_) {
      for (const auto& [e2, c2] : o.terms_) {
        Exponent e(e1.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
        r.add_term(std::move(e), c1 * c2);
      }
    }
    *this = std::move(r);
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }

  MPoly scaled(const K& k) const {
    MPoly r(ctx_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * k);
    return r;
  }

  MPoly pow(int n) const {
    MPoly r = one(ctx_);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  /// Multiplies by (1 + T_i).
  MPoly times_one_plus(int i) const {
    MPoly r = *this;
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      ++f[static_cast<std::size_t>(i)];
      r.add_term(std::move(f), c);
    }
    return r;
  }

  /// Exact quotient by (1 + T_i), or nullopt when (1 + T_i) does not divide.
  std::optional<MPoly> divide_one_plus(int i) const {
    const auto iv = static_cast<std::size_t>(i);
    // Group by the exponent vector with T_i removed; each group is a
    // univariate polynomial in T_i handled by synthetic division at -1.
    std::map<Exponent, std::map<int, K>> groups;
    for (const auto& [e, c] : terms_) {
      Exponent rest = e;
      rest[iv] = 0;
      groups[rest].emplace(e[iv], c);
    }
    MPoly q(ctx_);
    for (const auto& [rest, uni] : groups) {
      int top = uni.rbegin()->first;
      K carry = K::zero(ctx_.coeff);
      // P = (1+T) Q: q_{k-1} = a_k - q_k, and a_0 = q_0.
      for (int k = top; k >= 1; --k) {
        auto it = uni.find(k);
        K a = it == uni.end() ? K::zero(ctx_.coeff) : it->second;
        carry = a - carry;
        Exponent f = rest;
        f[iv] = k - 1;
        q.add_term(std::move(f), carry);
      }
      auto it0 = uni.find(0);
      K a0 = it0 == uni.end() ? K::zero(ctx_.coeff) : it0->second;
      if (!(a0 - carry).is_zero()) return std::nullopt;
    }
    return q;
  }

  /// Substitutes values[i] for T_i; `lift` maps coefficients into V.
  template <class V, class Lift>
  V evaluate(const std::vector<V>& values, const V& zero_v, Lift lift) const {
    V acc = zero_v;
    for (const auto& [e, c] : terms_) {
      V term = lift(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (int k = 0; k < e[i]; ++k) term = term * values.at(i);
      }
      acc = acc + term;
    }
    return acc;
  }

  /// Applies f to every coefficient, producing a polynomial over another ring.
  template <class L, class Fn>
  MPoly<L> map_coeffs(const PolyRing<L>& target, Fn f) const {
    MPoly<L> r(target);
    for (const auto& [e, c] : terms_) r += MPoly<L>::monomial(target, e, f(c));
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }

  /// Variables print as T (one variable) or T1, T2, ... Terms in increasing
  /// exponent order.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "·";
        mono += ctx_.nvars == 1 ? "T" : "T" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string cs = c.to_string();
      bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      std::string term;
      if (mono.empty()) {
        term = cs;
      } else if (cs == "1") {
        term = mono;
      } else if (cs == "-1") {
        term = "-" + mono;
      } else {
        term = (compound ? "(" + cs + ")" : cs) + "·" + mono;
      }
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }

 private:
  void check_same(const MPoly& o) const {
    if (!(ctx_ == o.ctx_)) throw ContextMismatch("polynomial rings differ");
  }

  void add_term(Exponent e, const K& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  context_type ctx_;
  std::map<Exponent, K> terms_;
};

}  // namespace vwt
