#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace sheafex {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

// Accepts "p", "p/q" and "-p/q". Throws Error(InvalidInput) otherwise.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

Rational binomial(int n, int k);

}  // namespace sheafex
