#pragma once

#include <string>
#include <vector>

#include "vwt/pi_ring.hpp"

namespace vwt {

/// C = R[x]/Phi_{p^n}(x) over R = Q(p^(1/M)); x plays the role of a primitive
/// p^n-th root of unity. Level 0 is R itself (Phi_1 = x - 1).
struct CycloRing {
  PiField base;
  int level = 0;

  friend bool operator==(const CycloRing&, const CycloRing&) = default;
  /// p^level.
  long order() const;
  /// phi(p^level), the number of stored coordinates.
  int degree() const;
  std::string to_string() const;
};

class CycloElement {
 public:
  using context_type = CycloRing;

  /// Accepts any number of coefficients and reduces mod Phi_{p^n}.
  CycloElement(CycloRing ring, std::vector<PiRingElement> coeffs);

  static CycloElement zero(const CycloRing& r);
  static CycloElement one(const CycloRing& r);
  static CycloElement from_int(const CycloRing& r, long v);
  static CycloElement from_base(const CycloRing& r, const PiRingElement& x);
  /// zeta^k for any integer k.
  static CycloElement zeta_power(const CycloRing& r, long k);

  const CycloRing& context() const noexcept { return ring_; }
  const std::vector<PiRingElement>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when every coordinate of degree >= 1 vanishes.
  bool is_base() const;
  /// The constant coordinate; throws NonRationalDescent unless is_base().
  PiRingElement base_part() const;

  CycloElement operator-() const;
  CycloElement& operator+=(const CycloElement& o);
  CycloElement& operator-=(const CycloElement& o);
  CycloElement& operator*=(const CycloElement& o);
  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(CycloElement a, const CycloElement& b) { return a *= b; }

  CycloElement scaled(const PiRingElement& x) const;
  /// Throws NotInvertible on zero divisors (C need not be a field).
  CycloElement inverse() const;
  CycloElement pow(long e) const;
  /// The automorphism zeta -> zeta^j, gcd(j, p) = 1.
  CycloElement galois(long j) const;

  friend bool operator==(const CycloElement& a, const CycloElement& b);

  /// e.g. "1+ζ" or "(2+√2)ζ^3".
  std::string to_string() const;

 private:
  CycloRing ring_;
  std::vector<PiRingElement> coeffs_;
};

/// Product of a full Galois orbit of values, descended to R. Throws
/// NonRationalDescent when the product has a nonzero coordinate of degree >= 1.
PiRingElement galois_orbit_product(const std::vector<CycloElement>& values);

}  // namespace vwt
