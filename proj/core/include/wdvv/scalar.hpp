// Exact rational scalars (unbounded integers, GMP-backed).
//
// All symbolic computation in this library runs over Q; doubles appear only
// at the numeric evaluation boundary (Newton solves, residual reports).
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace wdvv {

using Scalar = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Parses "p", "-p", "p/q". Rejects anything else (in particular decimal
// points: files and expressions are bit-exact, never floating point).
Scalar parse_scalar(const std::string& text);
std::optional<Scalar> try_parse_scalar(const std::string& text);

// Canonical form: "p" or "p/q" with q > 0 and gcd(p,q)=1.
std::string scalar_to_string(const Scalar& s);

double scalar_to_double(const Scalar& s);

// Integer power; exponent may be negative (errors on 0^negative).
Scalar scalar_pow(const Scalar& s, long e);

// gcd on Q used for polynomial content: gcd(a,b) = gcd(num)/lcm(den) >= 0.
// gcd(0,b) = |b|. This makes content(c * P) = |c| * content(P).
Scalar scalar_gcd(const Scalar& a, const Scalar& b);

}  // namespace wdvv
