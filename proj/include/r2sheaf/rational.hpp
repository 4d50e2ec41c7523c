#pragma once

// Exact rational arithmetic used throughout the library. GMP's mpq_class keeps
// every value in canonical (reduced, positive-denominator) form.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace r2sheaf {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num) { return Rational(num); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Reduced "p/q" rendering; integers are printed bare.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Parses "p", "-p" or "p/q". Throws InvalidInput on malformed text or q == 0.
Rational parse_rational(std::string_view text);

Integer floor_div(const Rational& q);
Integer ceil_div(const Rational& q);

// Narrowing with overflow check (throws InvalidInput).
std::int64_t to_int64(const Integer& z);

}  // namespace r2sheaf
