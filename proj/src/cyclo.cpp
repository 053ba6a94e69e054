#include "vwt/cyclo.hpp"

#include <numeric>
#include <sstream>

#include "vwt/error.hpp"

namespace vwt {

namespace {

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void reduce(const CycloRing& ring, std::vector<PiRingElement>& c) {
  const auto deg = static_cast<std::size_t>(ring.degree());
  if (ring.level == 0) {
    PiRingElement sum = PiRingElement::zero(ring.base);
    for (const auto& x : c) sum += x;
    c.assign(1, sum);
    return;
  }
  // x^phi = -(1 + x^s + ... + x^{(p-2)s}) with s = p^{n-1}.
  const auto s = static_cast<std::size_t>(ipow(ring.base.p, ring.level - 1));
  for (std::size_t k = c.size(); k-- > deg;) {
    if (c[k].is_zero()) continue;
    PiRingElement lead = c[k];
    c[k] = PiRingElement::zero(ring.base);
    for (long i = 0; i + 1 < ring.base.p; ++i) c[k - deg + static_cast<std::size_t>(i) * s] -= lead;
  }
  c.resize(deg, PiRingElement::zero(ring.base));
}

std::string wrap(const std::string& s) {
  if (s.find_first_of("+-", 1) == std::string::npos) return s;
  return "(" + s + ")";
}

}  // namespace

long CycloRing::order() const { return ipow(base.p, level); }

int CycloRing::degree() const {
  if (level == 0) return 1;
  return static_cast<int>(ipow(base.p, level - 1) * (base.p - 1));
}

std::string CycloRing::to_string() const {
  return base.to_string() + "[ζ_" + std::to_string(order()) + "]";
}

CycloElement::CycloElement(CycloRing ring, std::vector<PiRingElement> coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {
  if (ring_.level < 0) throw ContextMismatch("negative cyclotomic level");
  for (const auto& c : coeffs_) {
    if (!(c.context() == ring_.base)) throw ContextMismatch("coefficient field differs from " + ring_.to_string());
  }
  reduce(ring_, coeffs_);
}

CycloElement CycloElement::zero(const CycloRing& r) { return CycloElement(r, {}); }

CycloElement CycloElement::one(const CycloRing& r) { return from_int(r, 1); }

CycloElement CycloElement::from_int(const CycloRing& r, long v) {
  return from_base(r, PiRingElement::from_int(r.base, v));
}

CycloElement CycloElement::from_base(const CycloRing& r, const PiRingElement& x) { return CycloElement(r, {x}); }

CycloElement CycloElement::zeta_power(const CycloRing& r, long k) {
  long n = r.order();
  long e = ((k % n) + n) % n;
  std::vector<PiRingElement> c(static_cast<std::size_t>(e) + 1, PiRingElement::zero(r.base));
  c.back() = PiRingElement::one(r.base);
  return CycloElement(r, std::move(c));
}

bool CycloElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CycloElement::is_one() const { return is_base() && coeffs_[0].is_one(); }

bool CycloElement::is_base() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return false;
  }
  return true;
}

PiRingElement CycloElement::base_part() const {
  if (!is_base()) throw NonRationalDescent("element " + to_string() + " does not lie in " + ring_.base.to_string());
  return coeffs_[0];
}

CycloElement CycloElement::operator-() const {
  CycloElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloElement& CycloElement::operator+=(const CycloElement& o) {
  if (!(ring_ == o.ring_)) throw ContextMismatch(ring_.to_string() + " vs " + o.ring_.to_string());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o) {
  if (!(ring_ == o.ring_)) throw ContextMismatch(ring_.to_string() + " vs " + o.ring_.to_string());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& o) {
  if (!(ring_ == o.ring_)) throw ContextMismatch(ring_.to_string() + " vs " + o.ring_.to_string());
  const std::size_t n = coeffs_.size();
  std::vector<PiRingElement> prod(2 * n - 1, PiRingElement::zero(ring_.base));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  reduce(ring_, prod);
  coeffs_ = std::move(prod);
  return *this;
}

CycloElement CycloElement::scaled(const PiRingElement& x) const {
  CycloElement r = *this;
  for (auto& c : r.coeffs_) c *= x;
  return r;
}

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw NotInvertible("inverse of zero in " + ring_.to_string());
  if (is_base()) return from_base(ring_, coeffs_[0].inverse());
  // Solve (this * y) = 1 for the coordinates of y over R.
  const std::size_t n = coeffs_.size();
  std::vector<std::vector<PiRingElement>> a(n, std::vector<PiRingElement>(n + 1, PiRingElement::zero(ring_.base)));
  for (std::size_t j = 0; j < n; ++j) {
    CycloElement col = *this * zeta_power(ring_, static_cast<long>(j));
    for (std::size_t i = 0; i < n; ++i) a[i][j] = col.coeffs_[i];
  }
  a[0][n] = PiRingElement::one(ring_.base);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw NotInvertible(to_string() + " is a zero divisor in " + ring_.to_string());
    std::swap(a[piv], a[col]);
    PiRingElement inv = a[col][col].inverse();
    for (std::size_t k = col; k <= n; ++k) a[col][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      PiRingElement f = a[r][col];
      for (std::size_t k = col; k <= n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<PiRingElement> y;
  y.reserve(n);
  for (std::size_t i = 0; i < n; ++i) y.push_back(a[i][n]);
  return CycloElement(ring_, std::move(y));
}

CycloElement CycloElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloElement result = one(ring_);
  CycloElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

CycloElement CycloElement::galois(long j) const {
  if (ring_.level > 0 && std::gcd(j, ring_.base.p) != 1) {
    throw ContextMismatch("galois exponent " + std::to_string(j) + " is not a unit mod p");
  }
  CycloElement r = zero(ring_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    r += zeta_power(ring_, static_cast<long>(k) * j).scaled(coeffs_[k]);
  }
  return r;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

std::string CycloElement::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string term;
    std::string zeta = k == 0 ? "" : (k == 1 ? "ζ" : "ζ^" + std::to_string(k));
    std::string cs = c.to_string();
    if (k == 0) {
      term = cs;
    } else if (cs == "1") {
      term = zeta;
    } else if (cs == "-1") {
      term = "-" + zeta;
    } else {
      term = wrap(cs) + zeta;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

PiRingElement galois_orbit_product(const std::vector<CycloElement>& values) {
  if (values.empty()) throw DimensionMismatch("empty Galois orbit");
  CycloElement prod = values.front();
  for (std::size_t i = 1; i < values.size(); ++i) prod *= values[i];
  return prod.base_part();
}

}  // namespace vwt
