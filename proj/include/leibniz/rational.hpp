#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace leibniz {

/// Exact rational number. Always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Dense coordinate vector.
using Vector = std::vector<Rational>;

/// Builds p/q from decimal strings. Throws InputError on malformed text or q == 0.
Rational parse_rational(std::string_view num, std::string_view den = "1");

/// Parses "p", "p/q" or "-p/q".
Rational parse_rational_text(std::string_view text);

std::string to_string(const Rational& r);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

bool is_zero(const Vector& v);

Vector zero_vector(std::size_t n);

Vector unit_vector(std::size_t n, std::size_t i);

}  // namespace leibniz
