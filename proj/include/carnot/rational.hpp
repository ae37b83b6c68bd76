#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace carnot {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Dense coordinate vector over the rationals.
using Vector = std::vector<Rational>;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses an integer or a "p/q" fraction. Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

/// y += a * x
void axpy(const Rational& a, const Vector& x, Vector& y);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& a, const Vector& v);

}  // namespace carnot
