#include "vwt/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace vwt {

namespace {

long integer_valuation(const Integer& n, long p) {
  Integer rest;
  Integer prime = p;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

long rational_valuation(const Rational& q, long p) {
  if (q == 0) throw std::domain_error("valuation of zero rational");
  return integer_valuation(q.get_num(), p) - integer_valuation(q.get_den(), p);
}

std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) return std::nullopt;
  if (num[0] == '+') num.remove_prefix(1);
  if (den[0] == '+') den.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::string rational_to_wire(const Rational& q) {
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

}  // namespace vwt
