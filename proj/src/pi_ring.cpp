#include "vwt/pi_ring.hpp"

#include <numeric>
#include <sstream>

#include "vwt/error.hpp"

namespace vwt {

namespace {

// Solves A x = b over Q by Gauss-Jordan elimination. A is n x n, row-major.
// Returns false when A is singular.
bool solve_rational(std::vector<Rational> a, std::vector<Rational> b, std::size_t n,
                    std::vector<Rational>& x) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[pivot * n + k], a[col * n + k]);
      std::swap(b[pivot], b[col]);
    }
    Rational inv = 1 / a[col * n + col];
    for (std::size_t k = col; k < n; ++k) a[col * n + k] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0) continue;
      Rational f = a[r * n + col];
      for (std::size_t k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
      b[r] -= f * b[col];
    }
  }
  x = std::move(b);
  return true;
}

std::string radical(long p, int j, int M) {
  int g = std::gcd(j, M);
  int num = j / g;
  int den = M / g;
  std::ostringstream os;
  if (den == 1) {
    os << p << "^" << num;
  } else if (num == 1 && den == 2) {
    os << "√" << p;
  } else {
    os << p << "^(" << num << "/" << den << ")";
  }
  return os.str();
}

}  // namespace

std::string PiField::to_string() const {
  std::ostringstream os;
  os << "Q(" << p << "^(1/" << M << "))";
  return os.str();
}

PiRingElement::PiRingElement(PiField field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (field_.M < 1 || field_.p < 2) throw ContextMismatch("invalid field " + field_.to_string());
  if (coeffs_.size() != static_cast<std::size_t>(field_.M)) {
    throw DimensionMismatch("expected " + std::to_string(field_.M) + " coefficients");
  }
  for (auto& c : coeffs_) c.canonicalize();
}

PiRingElement PiRingElement::zero(const PiField& f) {
  return PiRingElement(f, std::vector<Rational>(static_cast<std::size_t>(f.M)));
}

PiRingElement PiRingElement::one(const PiField& f) { return from_int(f, 1); }

PiRingElement PiRingElement::from_int(const PiField& f, long v) { return from_rational(f, Rational(v)); }

PiRingElement PiRingElement::from_rational(const PiField& f, const Rational& q) {
  auto z = zero(f);
  z.coeffs_[0] = q;
  return z;
}

PiRingElement PiRingElement::pi_power(const PiField& f, long k) {
  long q = k / f.M;
  long r = k % f.M;
  if (r < 0) {
    r += f.M;
    q -= 1;
  }
  Rational scale = 1;
  Integer pz = f.p;
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(q < 0 ? -q : q));
  scale = q < 0 ? Rational(1, pk) : Rational(pk);
  scale.canonicalize();
  auto z = zero(f);
  z.coeffs_[static_cast<std::size_t>(r)] = scale;
  return z;
}

bool PiRingElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool PiRingElement::is_one() const { return coeffs_[0] == 1 && is_rational(); }

bool PiRingElement::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) return false;
  }
  return true;
}

void PiRingElement::check_same(const PiRingElement& o) const {
  if (!(field_ == o.field_)) {
    throw ContextMismatch("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
  }
}

PiRingElement PiRingElement::operator-() const {
  PiRingElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PiRingElement& PiRingElement::operator+=(const PiRingElement& o) {
  check_same(o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

PiRingElement& PiRingElement::operator-=(const PiRingElement& o) {
  check_same(o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

PiRingElement& PiRingElement::operator*=(const PiRingElement& o) {
  check_same(o);
  const std::size_t m = coeffs_.size();
  std::vector<Rational> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (o.coeffs_[j] == 0) continue;
      Rational prod = coeffs_[i] * o.coeffs_[j];
      std::size_t k = i + j;
      if (k >= m) {
        // pi^M = p
        prod *= field_.p;
        k -= m;
      }
      out[k] += prod;
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

PiRingElement PiRingElement::scaled(const Rational& q) const {
  PiRingElement r = *this;
  for (auto& c : r.coeffs_) {
    c *= q;
    c.canonicalize();
  }
  return r;
}

PiRingElement PiRingElement::inverse() const {
  if (is_zero()) throw NotInvertible("inverse of zero in " + field_.to_string());
  const std::size_t m = coeffs_.size();
  if (is_rational()) return from_rational(field_, 1 / coeffs_[0]);
  // Column j of the multiplication matrix holds the coordinates of x * pi^j.
  std::vector<Rational> a(m * m);
  for (std::size_t j = 0; j < m; ++j) {
    PiRingElement col = *this * pi_power(field_, static_cast<long>(j));
    for (std::size_t i = 0; i < m; ++i) a[i * m + j] = col.coeffs_[i];
  }
  std::vector<Rational> rhs(m);
  rhs[0] = 1;
  std::vector<Rational> sol;
  if (!solve_rational(std::move(a), std::move(rhs), m, sol)) {
    throw NotInvertible("singular multiplication matrix in " + field_.to_string());
  }
  return PiRingElement(field_, std::move(sol));
}

PiRingElement PiRingElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  PiRingElement result = one(field_);
  PiRingElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

PAdicValue PiRingElement::valuation() const {
  // Candidate values val_p(c_j) + j/M have pairwise distinct fractional
  // parts, so the minimum is attained exactly once and no cancellation occurs.
  std::optional<Rational> best;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    Rational v = Rational(rational_valuation(coeffs_[j], field_.p)) + Rational(static_cast<long>(j), field_.M);
    v.canonicalize();
    if (!best || v < *best) best = v;
  }
  return best ? PAdicValue::finite(*best) : PAdicValue::infinity();
}

bool operator==(const PiRingElement& a, const PiRingElement& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string PiRingElement::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    std::string term;
    if (j == 0) {
      term = rational_to_string(mag);
    } else {
      std::string rad = radical(field_.p, static_cast<int>(j), field_.M);
      if (mag == 1) {
        term = rad;
      } else if (mag.get_den() == 1) {
        term = rational_to_string(mag) + (rad.rfind("√", 0) == 0 ? "" : "·") + rad;
      } else {
        term = "(" + rational_to_string(mag) + ")" + rad;
      }
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? "-" : "+";
      out += term;
    }
  }
  return out;
}

bool sqrt_check(const PiRingElement& w, const PiRingElement& s) { return s * s == w; }

}  // namespace vwt
