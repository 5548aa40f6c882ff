#include "sheafex/rational.hpp"

#include "sheafex/error.hpp"

#include <cctype>

namespace sheafex {

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const BigInt& n) { return n.str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorKind::InvalidInput, "not a rational literal: '" + std::string(text) + "'");
  BigInt n(std::string(num.front() == '+' ? num.substr(1) : num));
  BigInt d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::InvalidInput, "zero denominator: '" + std::string(text) + "'");
  return Rational(n, d);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return Rational(result);
}

}  // namespace sheafex
