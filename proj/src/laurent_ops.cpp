#include "vwt/laurent.hpp"

namespace vwt {

namespace {

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

}  // namespace

UPoly to_upoly(const RPoly& p) {
  if (p.nvars() != 1) throw MultivariableUnsupported("univariate polynomial expected");
  int deg = p.degree(0);
  UPoly out(static_cast<std::size_t>(deg + 1), PiRingElement::zero(p.context().coeff));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e[0])] = c;
  return out;
}

RPoly from_upoly(const PolyRing<PiRingElement>& ctx, const UPoly& p) {
  RPoly r(ctx);
  for (std::size_t i = 0; i < p.size(); ++i) r += RPoly::monomial(ctx, {static_cast<int>(i)}, p[i]);
  return r;
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  UPoly d = b;
  trim(r);
  trim(d);
  if (d.empty()) throw NotInvertible("polynomial division by zero");
  const PiField& f = d.back().context();
  if (r.size() < d.size()) return {UPoly{}, r};
  UPoly q(r.size() - d.size() + 1, PiRingElement::zero(f));
  PiRingElement lead_inv = d.back().inverse();
  for (std::size_t k = r.size(); k-- >= d.size();) {
    if (r[k].is_zero()) continue;
    PiRingElement c = r[k] * lead_inv;
    std::size_t shift = k - (d.size() - 1);
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
  }
  trim(q);
  trim(r);
  return {q, r};
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  PiRingElement inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

UPoly shift_to_s(const UPoly& p) {
  // Horner in S: p(T) = p(S - 1).
  if (p.empty()) return {};
  const PiField& f = p.front().context();
  UPoly acc;
  for (std::size_t k = p.size(); k-- > 0;) {
    UPoly next(acc.size() + 1, PiRingElement::zero(f));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] -= acc[i];
    }
    next[0] += p[k];
    acc = std::move(next);
  }
  trim(acc);
  return acc;
}

UPoly cyclotomic_upoly(const PiField& f, int j) {
  if (j == 0) return {PiRingElement::from_int(f, -1), PiRingElement::one(f)};
  long step = 1;
  for (int i = 1; i < j; ++i) step *= f.p;
  UPoly out(static_cast<std::size_t>(step * (f.p - 1) + 1), PiRingElement::zero(f));
  for (long i = 0; i < f.p; ++i) out[static_cast<std::size_t>(i * step)] = PiRingElement::one(f);
  return out;
}

bool poly_divides(const RLaurent& a, const RLaurent& b) {
  if (a.nvars() != 1 || b.nvars() != 1) throw MultivariableUnsupported("poly_divides requires one variable");
  if (b.is_zero()) return true;
  if (a.is_zero()) return false;
  return upoly_divmod(to_upoly(b.poly()), to_upoly(a.poly())).second.empty();
}

}  // namespace vwt
