#include <doctest.h>

#include <random>

#include "vwt/cyclo.hpp"
#include "vwt/error.hpp"
#include "vwt/pi_ring.hpp"

using namespace vwt;

namespace {

PiRingElement random_element(std::mt19937_64& rng, const PiField& f) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<Rational> c;
  for (int j = 0; j < f.M; ++j) c.emplace_back(num(rng), den(rng));
  for (auto& q : c) q.canonicalize();
  return PiRingElement(f, c);
}

// Schoolbook product in R[x] followed by long division by Phi_{p^n}.
std::vector<PiRingElement> reduce_by_cyclotomic(std::vector<PiRingElement> a, const CycloRing& r) {
  const long p = r.base.p;
  const long step = r.order() / p;
  const auto deg = static_cast<std::size_t>(r.degree());
  // Phi_{p^n}(x) = sum_{i<p} x^{i p^{n-1}}, monic of degree deg.
  for (std::size_t k = a.size(); k-- > deg;) {
    PiRingElement lead = a[k];
    if (lead.is_zero()) continue;
    for (long i = 0; i < p; ++i) {
      a[k - deg + static_cast<std::size_t>(i * step)] -= lead;
    }
  }
  a.resize(deg, PiRingElement::zero(r.base));
  return a;
}

}  // namespace

TEST_CASE("rational parsing and valuations") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("abc"));
  CHECK(rational_valuation(Rational(12, 5), 2) == 2);
  CHECK(rational_valuation(Rational(3, 8), 2) == -3);
  CHECK(rational_to_wire(Rational(4)) == "4/1");
  CHECK(rational_to_string(Rational(-1, 2)) == "-1/2");
}

TEST_CASE("pi powers wrap through p") {
  PiField f{2, 4};
  CHECK(PiRingElement::pi_power(f, 4) == PiRingElement::from_int(f, 2));
  CHECK(PiRingElement::pi_power(f, -1) * PiRingElement::pi_power(f, 1) == PiRingElement::one(f));
  CHECK(PiRingElement::pi_power(f, 2).to_string() == "√2");
  CHECK(PiRingElement::pi_power(f, 2).valuation() == PAdicValue::finite(Rational(1, 2)));
  CHECK(PiRingElement::zero(f).valuation().is_infinite());
}

TEST_CASE("valuation follows the distinct-residue minimum") {
  PiField f{3, 2};
  PiRingElement x = PiRingElement::from_int(f, 9) + PiRingElement::pi_power(f, 1).scaled(Rational(1, 3));
  // val 9 = 2, val(pi/3) = 1/2 - 1.
  CHECK(x.valuation() == PAdicValue::finite(Rational(-1, 2)));
}

TEST_CASE("field axioms and ultrametric inequality on random elements") {
  std::mt19937_64 rng(11);
  for (PiField f : {PiField{2, 1}, PiField{2, 4}, PiField{3, 3}, PiField{5, 2}}) {
    for (int i = 0; i < 40; ++i) {
      PiRingElement x = random_element(rng, f);
      PiRingElement y = random_element(rng, f);
      PiRingElement z = random_element(rng, f);
      CHECK((x + y) * z == x * z + y * z);
      CHECK((x * y) * z == x * (y * z));
      if (!x.is_zero()) CHECK(x * x.inverse() == PiRingElement::one(f));
      if (!x.is_zero() && !y.is_zero()) {
        CHECK((x * y).valuation() == x.valuation() + y.valuation());
        PAdicValue s = (x + y).valuation();
        CHECK(s >= std::min(x.valuation(), y.valuation()));
        if (x.valuation() != y.valuation()) CHECK(s == std::min(x.valuation(), y.valuation()));
      }
    }
  }
}

TEST_CASE("zero has no inverse and rings must agree") {
  PiField f{2, 2};
  CHECK_THROWS_AS(PiRingElement::zero(f).inverse(), NotInvertible);
  CHECK_THROWS_AS(PiRingElement::one(f) + PiRingElement::one(PiField{3, 2}), ContextMismatch);
}

TEST_CASE("square roots") {
  PiField f{2, 4};
  CHECK(sqrt_check(PiRingElement::pi_power(f, 2), PiRingElement::pi_power(f, 1)));
  CHECK_FALSE(sqrt_check(PiRingElement::from_int(f, 2), PiRingElement::pi_power(f, 1)));
}

TEST_CASE("cyclotomic arithmetic agrees with explicit long division") {
  std::mt19937_64 rng(5);
  for (CycloRing r : {CycloRing{PiField{2, 2}, 2}, CycloRing{PiField{3, 1}, 2}, CycloRing{PiField{2, 1}, 3}}) {
    for (int i = 0; i < 20; ++i) {
      std::vector<PiRingElement> a, b;
      for (int k = 0; k < r.degree(); ++k) {
        a.push_back(random_element(rng, r.base));
        b.push_back(random_element(rng, r.base));
      }
      std::vector<PiRingElement> full(a.size() + b.size() - 1, PiRingElement::zero(r.base));
      for (std::size_t x = 0; x < a.size(); ++x) {
        for (std::size_t y = 0; y < b.size(); ++y) full[x + y] += a[x] * b[y];
      }
      CHECK(CycloElement(r, a) * CycloElement(r, b) == CycloElement(r, reduce_by_cyclotomic(full, r)));
    }
  }
}

TEST_CASE("roots of unity") {
  CycloRing r{PiField{2, 1}, 2};
  CycloElement i = CycloElement::zeta_power(r, 1);
  CHECK(i * i == -CycloElement::one(r));
  CHECK(CycloElement::zeta_power(r, 4) == CycloElement::one(r));
  CHECK(CycloElement::zeta_power(r, -1) == i.galois(3));
  CHECK(i.inverse() == -i);
  CHECK((CycloElement::one(r) + i).to_string() == "1+ζ");
  CycloRing level0{PiField{2, 1}, 0};
  CHECK(CycloElement::zeta_power(level0, 5) == CycloElement::one(level0));
}

TEST_CASE("Galois orbit products descend") {
  CycloRing r{PiField{2, 2}, 2};
  CycloElement x = CycloElement::from_int(r, 2) + CycloElement::zeta_power(r, 1);
  CHECK(galois_orbit_product({x, x.galois(3)}) == PiRingElement::from_int(r.base, 5));
  CHECK_THROWS_AS(galois_orbit_product({x}), NonRationalDescent);
  CHECK_THROWS_AS(x.base_part(), NonRationalDescent);
}

TEST_CASE("zero divisors are not invertible") {
  CycloRing r{PiField{2, 1}, 2};
  CHECK_THROWS_AS(CycloElement::zero(r).inverse(), NotInvertible);
  CycloElement u = CycloElement::one(r) + CycloElement::zeta_power(r, 1);
  CHECK(u * u.inverse() == CycloElement::one(r));
}
