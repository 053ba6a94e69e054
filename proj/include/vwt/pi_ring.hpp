#pragma once

#include <string>
#include <vector>

#include "vwt/padic_value.hpp"
#include "vwt/rational.hpp"
#include "vwt/ring_traits.hpp"

namespace vwt {

/// The field Q(pi) with pi^M = p, embedded so that pi = p^(1/M) is real and
/// positive.
struct PiField {
  long p = 2;
  int M = 1;

  friend bool operator==(const PiField&, const PiField&) = default;
  std::string to_string() const;
};

/// Element sum_j c_j pi^j of Q(p^(1/M)), j = 0..M-1, stored with canonical
/// rational coefficients so that equality is structural.
class PiRingElement {
 public:
  using context_type = PiField;

  /// Zero of Q(2^(1/1)); placeholder for default-constructed aggregates.
  PiRingElement() : PiRingElement(PiField{}, {Rational(0)}) {}
  PiRingElement(PiField field, std::vector<Rational> coeffs);

  static PiRingElement zero(const PiField& f);
  static PiRingElement one(const PiField& f);
  static PiRingElement from_int(const PiField& f, long v);
  static PiRingElement from_rational(const PiField& f, const Rational& q);
  /// pi^k for any integer k; pi^(qM + r) = p^q pi^r.
  static PiRingElement pi_power(const PiField& f, long k);

  const PiField& context() const noexcept { return field_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }

  bool is_zero() const;
  bool is_one() const;
  /// True when only the pi^0 coefficient may be nonzero.
  bool is_rational() const;

  PiRingElement operator-() const;
  PiRingElement& operator+=(const PiRingElement& o);
  PiRingElement& operator-=(const PiRingElement& o);
  PiRingElement& operator*=(const PiRingElement& o);
  friend PiRingElement operator+(PiRingElement a, const PiRingElement& b) { return a += b; }
  friend PiRingElement operator-(PiRingElement a, const PiRingElement& b) { return a -= b; }
  friend PiRingElement operator*(PiRingElement a, const PiRingElement& b) { return a *= b; }
  friend PiRingElement operator/(const PiRingElement& a, const PiRingElement& b) { return a * b.inverse(); }

  PiRingElement scaled(const Rational& q) const;
  /// Throws NotInvertible for zero.
  PiRingElement inverse() const;
  PiRingElement pow(long e) const;

  /// val_p with val_p(p) = 1.
  PAdicValue valuation() const;

  friend bool operator==(const PiRingElement& a, const PiRingElement& b);

  /// Human form, e.g. "6+4√2" or "-2^(1/4)+3/2·2^(3/4)".
  std::string to_string() const;

 private:
  void check_same(const PiRingElement& o) const;

  PiField field_;
  std::vector<Rational> coeffs_;
};

template <>
struct is_field<PiRingElement> : std::true_type {};

/// s*s == w.
bool sqrt_check(const PiRingElement& w, const PiRingElement& s);

}  // namespace vwt
