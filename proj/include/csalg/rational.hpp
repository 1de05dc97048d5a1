// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csalg {

/// Exact rational scalar. gmpxx keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Rational = mpq_class;

/// Dense coefficient vector.
using Vec = std::vector<Rational>;

class RationalFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "p/q", or "p" when q = 1; sign carried on the numerator.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", optional leading sign. Throws RationalFormatError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);
Vec& axpy(Vec& y, const Rational& s, const Vec& x);  // y += s*x
Rational dot(const Vec& a, const Vec& b);

std::string to_string(const Vec& v);

}  // namespace csalg
