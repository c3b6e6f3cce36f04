#pragma once

#include "orbitforge/rat.hpp"

#include <array>
#include <string>
#include <vector>

namespace orbitforge {

using RootVec = std::array<Rat, 4>;

Rat dot(const RootVec& a, const RootVec& b);
inline Rat norm2(const RootVec& a) { return dot(a, a); }
RootVec operator+(const RootVec& a, const RootVec& b);
RootVec operator-(const RootVec& a, const RootVec& b);
RootVec operator*(const Rat& c, const RootVec& a);

/// Positive when the last non-zero coordinate is positive (x4 heaviest).
bool is_positive(const RootVec& v);

struct DominantWeight {
  std::array<long, 4> n{};
};

struct RootSystem {
  std::vector<RootVec> positive_short;  // 12, squared norm 1
  std::vector<RootVec> positive_long;   // 12, squared norm 2
  std::vector<RootVec> simple_roots;    // simple_roots[a] is dual to fundamental_weights[a]
  std::vector<RootVec> fundamental_weights;

  std::vector<RootVec> positive() const;
};

RootSystem build_root_system();

/// v - 2 (v.a)/(a.a) a. Throws std::invalid_argument for a zero root.
RootVec reflect(const RootVec& v, const RootVec& alpha);

/// Closure under the simple reflections, lexicographically sorted.
std::vector<RootVec> weyl_orbit(const RootSystem& rs, const RootVec& seed);

RootVec weight_vector(const RootSystem& rs, const DominantWeight& p);
Rat pairing(const RootSystem& rs, const DominantWeight& p, const DominantWeight& q);

/// (mu * sum of positive short roots + nu * sum of positive long roots) / 2.
RootVec deformed_weyl(const RootSystem& rs, const Rat& mu, const Rat& nu);

struct FlagConstants {
  std::array<int, 4> minimal{1, 2, 2, 3};
  std::array<int, 4> rho{8, 11, 15, 21};
  std::array<int, 4> corho{11, 16, 21, 30};
  std::vector<std::array<int, 4>> extra{{2, 2, 3, 4}, {2, 3, 4, 6}, {2, 4, 4, 6}};
};

FlagConstants flag_characteristic_constants();

std::string to_string(const RootVec& v);

}  // namespace orbitforge
