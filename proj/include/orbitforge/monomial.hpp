#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>

namespace orbitforge {

inline constexpr std::size_t kMaxVars = 16;
inline constexpr int kMaxExponent = 127;

/// Exponent tuple with signed entries; slots beyond the ring's variable count
/// stay zero so whole-array comparison and hashing are valid.
struct Monomial {
  std::array<std::int8_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }

  bool nonnegative() const {
    for (auto x : e) {
      if (x < 0) return false;
    }
    return true;
  }

  bool is_one() const {
    for (auto x : e) {
      if (x != 0) return false;
    }
    return true;
  }

  /// Caller guarantees the sum stays within int8 range.
  Monomial operator+(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int8_t>(e[i] + o.e[i]);
    return r;
  }

  Monomial operator-(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int8_t>(e[i] - o.e[i]);
    return r;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

/// Graded lexicographic: total degree first, then exponents from the first
/// variable onward.
struct GradedLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree();
    int db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t lo;
    std::uint64_t hi;
    std::memcpy(&lo, m.e.data(), 8);
    std::memcpy(&hi, m.e.data() + 8, 8);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL;
    h ^= (hi + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace orbitforge
