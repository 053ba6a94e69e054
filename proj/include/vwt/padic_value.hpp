#pragma once

#include <compare>
#include <optional>
#include <string>

#include "vwt/rational.hpp"

namespace vwt {

/// A p-adic valuation: a rational number, or +infinity for zero.
class PAdicValue {
 public:
  /// +infinity.
  PAdicValue() = default;
  static PAdicValue infinity() { return PAdicValue(); }
  static PAdicValue finite(Rational v) { return PAdicValue(std::move(v)); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  /// Precondition: finite.
  const Rational& value() const { return *value_; }

  friend PAdicValue operator+(const PAdicValue& a, const PAdicValue& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return finite(a.value() + b.value());
  }

  friend bool operator==(const PAdicValue& a, const PAdicValue& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return a.value() == b.value();
  }

  friend std::strong_ordering operator<=>(const PAdicValue& a, const PAdicValue& b) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    int c = cmp(a.value(), b.value());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "inf" or the rational in lowest terms.
  std::string to_string() const {
    return is_infinite() ? std::string("inf") : rational_to_string(*value_);
  }

 private:
  explicit PAdicValue(Rational v) : value_(std::move(v)) { value_->canonicalize(); }

  std::optional<Rational> value_;
};

}  // namespace vwt
