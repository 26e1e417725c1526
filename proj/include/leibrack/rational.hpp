#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace leibrack {

/// Arbitrary precision rational. GMP keeps every result in lowest terms
/// with a positive denominator.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p", "p/q", "-p/q". Throws Error(Input) on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

// Dense vector helpers.
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
Vector& operator-=(Vector& a, const Vector& b);
/// a += s * b
void axpy(Vector& a, const Rational& s, const Vector& b);
Rational dot(const Vector& a, const Vector& b);

std::vector<std::string> to_strings(const Vector& v);

}  // namespace leibrack
