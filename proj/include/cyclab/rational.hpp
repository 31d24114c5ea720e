#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace cyclab {

// mpq_class keeps every value canonical (lowest terms, positive denominator)
// after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Bit size used for pivot selection: bits(numerator) + bits(denominator).
inline std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// True when the integer fits in a signed 64-bit value.
bool fits_int64(const Integer& z);

std::int64_t to_int64(const Integer& z);

}  // namespace cyclab
