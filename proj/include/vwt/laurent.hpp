#pragma once

#include <string>
#include <vector>

#include "vwt/mpoly.hpp"
#include "vwt/pi_ring.hpp"

namespace vwt {

/// (1+T_1)^{-k_1} ... (1+T_d)^{-k_d} * poly, kept in the normal form k_i >= 0
/// with (1+T_i) not dividing poly whenever k_i > 0. The form is unique, so
/// equality is structural.
template <class K>
class LaurentPoly {
 public:
  using context_type = PolyRing<K>;
  using Poly = MPoly<K>;

  LaurentPoly() : LaurentPoly(Poly(context_type{})) {}
  /// Any integer shift is accepted; negative entries are folded into poly.
  LaurentPoly(Poly poly, std::vector<int> shift) : poly_(std::move(poly)), shift_(std::move(shift)) {
    if (shift_.size() != static_cast<std::size_t>(poly_.nvars())) throw DimensionMismatch("shift length");
    normalize();
  }
  explicit LaurentPoly(Poly poly) : LaurentPoly(poly, std::vector<int>(static_cast<std::size_t>(poly.nvars()), 0)) {}

  static LaurentPoly zero(const context_type& ctx) { return LaurentPoly(Poly::zero(ctx)); }
  static LaurentPoly one(const context_type& ctx) { return LaurentPoly(Poly::one(ctx)); }
  static LaurentPoly from_int(const context_type& ctx, long v) { return LaurentPoly(Poly::from_int(ctx, v)); }
  static LaurentPoly constant(const context_type& ctx, const K& c) { return LaurentPoly(Poly::constant(ctx, c)); }
  /// T_i.
  static LaurentPoly variable(const context_type& ctx, int i) { return LaurentPoly(Poly::variable(ctx, i)); }
  /// (1+T_1)^{a_1} ... (1+T_d)^{a_d} for an integer vector a.
  static LaurentPoly unit_monomial(const context_type& ctx, const std::vector<long>& a) {
    std::vector<int> k(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) k[i] = static_cast<int>(-a[i]);
    return LaurentPoly(Poly::one(ctx), k);
  }

  const context_type& context() const noexcept { return poly_.context(); }
  const Poly& poly() const noexcept { return poly_; }
  const std::vector<int>& shift() const noexcept { return shift_; }
  int nvars() const noexcept { return poly_.nvars(); }
  bool is_zero() const noexcept { return poly_.is_zero(); }

  LaurentPoly operator-() const { return LaurentPoly(-poly_, shift_); }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = combine(o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = combine(o, true); }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    std::vector<int> k(shift_.size());
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = shift_[i] + o.shift_[i];
    return *this = LaurentPoly(poly_ * o.poly_, k);
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

  LaurentPoly scaled(const K& c) const { return LaurentPoly(poly_.scaled(c), shift_); }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.shift_ == b.shift_ && a.poly_ == b.poly_;
  }

  template <class L, class Fn>
  LaurentPoly<L> map_coeffs(const PolyRing<L>& target, Fn f) const {
    return LaurentPoly<L>(poly_.map_coeffs(target, f), shift_);
  }

  std::string to_string() const {
    std::string unit;
    for (std::size_t i = 0; i < shift_.size(); ++i) {
      if (shift_[i] == 0) continue;
      std::string var = shift_.size() == 1 ? "T" : "T" + std::to_string(i + 1);
      unit += "(1+" + var + ")^" + std::to_string(-shift_[i]) + "·";
    }
    if (unit.empty()) return poly_.to_string();
    return unit + "(" + poly_.to_string() + ")";
  }

 private:
  LaurentPoly combine(const LaurentPoly& o, bool subtract) const {
    if (!(context() == o.context())) throw ContextMismatch("Laurent rings differ");
    Poly a = poly_;
    Poly b = o.poly_;
    std::vector<int> k(shift_.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
      k[i] = std::max(shift_[i], o.shift_[i]);
      for (int j = shift_[i]; j < k[i]; ++j) a = a.times_one_plus(static_cast<int>(i));
      for (int j = o.shift_[i]; j < k[i]; ++j) b = b.times_one_plus(static_cast<int>(i));
    }
    return LaurentPoly(subtract ? a - b : a + b, k);
  }

  void normalize() {
    if (poly_.is_zero()) {
      std::fill(shift_.begin(), shift_.end(), 0);
      return;
    }
    for (std::size_t i = 0; i < shift_.size(); ++i) {
      const int var = static_cast<int>(i);
      while (shift_[i] < 0) {
        poly_ = poly_.times_one_plus(var);
        ++shift_[i];
      }
      while (shift_[i] > 0) {
        auto q = poly_.divide_one_plus(var);
        if (!q) break;
        poly_ = std::move(*q);
        --shift_[i];
      }
    }
  }

  Poly poly_;
  std::vector<int> shift_;
};

using RPoly = MPoly<PiRingElement>;
using RLaurent = LaurentPoly<PiRingElement>;

/// Univariate polynomial over R, coefficient i of T^i (or S^i).
using UPoly = std::vector<PiRingElement>;

/// Coefficients of a one-variable polynomial, indices 0..deg.
UPoly to_upoly(const RPoly& p);
RPoly from_upoly(const PolyRing<PiRingElement>& ctx, const UPoly& p);

/// Long division over the field R; returns {quotient, remainder}.
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);
/// Monic greatest common divisor over R.
UPoly upoly_gcd(UPoly a, UPoly b);
/// p(T) -> p(S - 1), i.e. rewrite in S = 1 + T.
UPoly shift_to_s(const UPoly& p);
/// Phi_{p^j}(S) with coefficients in field f.
UPoly cyclotomic_upoly(const PiField& f, int j);

/// a | b in R[T] after clearing unit shifts. d = 1 only.
bool poly_divides(const RLaurent& a, const RLaurent& b);

}  // namespace vwt
