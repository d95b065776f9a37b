#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qtrunc {

/// Arbitrary-precision signed integer used for every coefficient.
using BigInt = mpz_class;

/// Exponents and truncation orders. Signed so that intermediate exponent
/// arithmetic (e.g. q^{(h-k)S}) can be checked before it is used.
using Degree = std::int64_t;

inline std::string to_string(const BigInt& value) { return value.get_str(10); }

inline BigInt from_string(const std::string& text) { return BigInt(text, 10); }

inline BigInt big(std::int64_t value) {
  BigInt out;
  mpz_set_si(out.get_mpz_t(), static_cast<long>(value));
  return out;
}

}  // namespace qtrunc
