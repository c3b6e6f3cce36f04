#pragma once

#include "orbitforge/mpoly.hpp"

#include <array>
#include <string>

namespace orbitforge {

enum class Model { rational, trig };

std::string model_name(Model m);
/// Accepts "rat" / "rational" and "trig" / "trigonometric".
Model parse_model(const std::string& s);

inline const std::vector<std::string>& parameter_names() {
  static const std::vector<std::string> names{"mu", "nu", "omega", "gl", "gs"};
  return names;
}

/// x1..x4 (rational) or the Laurent variables v1..v4 with v_j = exp(i beta x_j / 4),
/// followed by the parameters.
const RingPtr& coordinate_ring(Model m);
/// t2, t6, t8, t12 (rational) or t1..t4 (trig), followed by the parameters.
const RingPtr& tau_ring(Model m);

/// Indices of the parameter variables inside either ring.
std::vector<std::size_t> parameter_indices(const RingPtr& ring);

inline constexpr std::array<int, 4> kRationalDegrees{2, 6, 8, 12};
inline constexpr std::array<int, 4> kMinimalGrading{1, 2, 2, 3};

/// Weighted degree of a tau exponent tuple with the given weights.
template <typename W>
int weighted_degree(const Monomial& m, const W& weights) {
  int d = 0;
  for (std::size_t a = 0; a < 4; ++a) d += weights[a] * m.e[a];
  return d;
}

}  // namespace orbitforge
