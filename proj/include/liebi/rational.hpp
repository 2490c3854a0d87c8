#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace liebi {

/// Exact rational scalar. Arithmetic results are always in lowest terms with
/// a positive denominator (GMP canonicalizes after every operation).
using Rational = mpq_class;

using Vector = std::vector<Rational>;

/// Builds p/q in canonical form. Throws std::invalid_argument if q == 0.
Rational make_rational(std::int64_t p, std::int64_t q = 1);

/// Parses "p", "-p" or "p/q" (decimal integers, q != 0). Anything else,
/// including floating-point notation, throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

bool is_zero(const Vector& v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);

Rational dot(const Vector& a, const Vector& b);

}  // namespace liebi
