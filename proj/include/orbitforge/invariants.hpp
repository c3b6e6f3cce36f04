#pragma once

#include "orbitforge/f4root.hpp"
#include "orbitforge/report.hpp"
#include "orbitforge/rings.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace orbitforge {

/// Shared root system built once.
const RootSystem& f4();

struct RationalInvariants {
  std::array<MPoly, 4> t_orbit;  // t_2, t_6, t_8, t_12 over the orbit of e3+e4
  std::array<MPoly, 4> tau;      // tau_2, tau_6, tau_8, tau_12
};

struct TrigInvariants {
  std::array<MPoly, 4> tau;  // Laurent polynomials in v1..v4
};

RationalInvariants build_rational_invariants(const RootSystem& rs);
TrigInvariants build_trig_invariants(const RootSystem& rs);

/// Cached tau images for a model in its coordinate ring.
const std::array<MPoly, 4>& invariants_in_coordinates(Model m);

/// Root factors l_alpha for the positive roots: alpha.x (rational) or
/// w - 1/w with w = prod v_j^(2 alpha_j) (trig, equal to 2i sin(beta alpha.x/2)).
struct GroundStateFactors {
  Model model = Model::rational;
  std::vector<RootVec> long_roots, short_roots;
  std::vector<MPoly> long_factors, short_factors;
  MPoly long_product, short_product;  // products of the factors above
  /// rational: Delta+Delta- and Delta Delta0 themselves;
  /// trig: their squares (Delta+Delta-)^2 and (Delta Delta0)^2.
  MPoly dpm, dd0;
};

GroundStateFactors build_ground_state_factors(Model m);
const GroundStateFactors& ground_state_factors(Model m);

/// Substitutes tau images (and the parameters as themselves) into a
/// polynomial over tau_ring(m).
MPoly to_coordinates(const MPoly& p, Model m);

/// Image of a coordinate polynomial under x -> s_alpha x. For trig the
/// exponent vectors of v are reflected; throws std::domain_error when an
/// image exponent is not integral.
MPoly reflect_poly(const MPoly& p, Model m, const RootVec& alpha);

class NotInvariant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The unique tau polynomial q with q(tau(x)) = p, searched among tau
/// monomials of weighted degree <= bound (weights 2,6,8,12 or 1,2,2,3).
MPoly express_in_invariants(const MPoly& p, Model m, int bound);

/// Orbit construction against the closed forms, homogeneity / reality and
/// reflection invariance.
Report verify_invariants(Model m);
Report verify_ground_state_squares(Model m);

}  // namespace orbitforge
