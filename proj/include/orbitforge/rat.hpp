#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orbitforge {

/// Exact rational scalar. GMP keeps the value canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "p/q" or a plain decimal literal such as "0.25".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

/// Always renders "num/den" in lowest terms, including "n/1" for integers.
std::string to_string(const Rat& value);

/// Renders integers as "n" and everything else as "num/den".
std::string to_short_string(const Rat& value);

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace orbitforge
