#pragma once

#include "orbitforge/diffop.hpp"
#include "orbitforge/linalg.hpp"
#include "orbitforge/report.hpp"
#include "orbitforge/rings.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace orbitforge {

struct ModelParams {
  Rat mu{0};
  Rat nu{0};
  Rat omega{0};

  Rat gs() const { return mu * (mu - 1); }
  Rat gl() const { return nu * (nu - 1); }
  std::map<std::string, Rat> bindings() const;
};

/// Published algebraic operators over tau_ring(m); mu, nu, omega stay symbolic.
DiffOp algebraic_rational();
DiffOp algebraic_trig();
DiffOp algebraic_operator(Model m);
/// Same with the parameters fixed (gl, gs set from mu, nu).
DiffOp algebraic_operator(Model m, const ModelParams& p);

struct GaugeOptions {
  Rat e0_shift{0};  // negative control: perturbs the ground-state energy
};

/// First-principles gauge rotation in x (or v) space against every published
/// second- and first-order coefficient, plus the zero-order identity that
/// pins the ground-state energy.
Report verify_gauge_rotation(Model m, const GaugeOptions& opt = {});

struct MetricDecomposition {
  std::array<std::array<MPoly, 4>, 4> gab;
  std::array<MPoly, 4> gvec;  // from the Laplace-Beltrami identity
  std::array<MPoly, 4> cvec;  // B - gvec
  MPoly det;
};

MetricDecomposition metric_decomposition(Model m);
/// Checks the published metric, g and C vectors against the decomposition.
Report verify_metric(Model m);

class SingularMetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Largest |R^a_bcd| at a tau point, computed exactly. Throws SingularMetric
/// when det g^{ab} vanishes there.
Rat riemann_spot_check(Model m, const std::array<Rat, 4>& tau_point);
/// Same for any contravariant metric g^{ab} at a full ring point.
Rat riemann_max(const PolyMatrix4& gab, const std::vector<Rat>& point);
/// tau image of a coordinate point (x for rat, v for trig).
std::array<Rat, 4> tau_point(Model m, const std::array<Rat, 4>& coords);
Report verify_riemann(Model m);

/// Direct root-sum potential against the published tau forms, gl and gs
/// symbolic, denominators cleared.
Report verify_potential(Model m);

/// prod_{j=0}^k (J0 - j) with J0 = sum_a grading_a tau_a d/dtau_a.
DiffOp particular_integral(Model m, int k, const std::array<int, 4>& grading = kMinimalGrading);
Report verify_particular_integral(Model m, int kmax = 3);

struct QesParams {
  Rat a{0};
  Rat gamma{0};
  int k = 0;
};

enum class QesPotential {
  printed,  // the published V^qes - V^rat
  closing,  // the shift that makes the tau2-sector invariant in this normalization
};

/// Normalization of the QES Hamiltonian relative to the gauge-rotated one:
/// h^qes = chi^-1 h^rat chi - scale * (V^qes - V^rat), chi = tau2^gamma exp(-a tau2^2/4).
/// scale 2 matches H = -Laplacian/2 + V; scale 1 matches H = -Laplacian + V.
struct QesConvention {
  Rat scale{2};
  QesPotential potential = QesPotential::printed;
};

struct QesResult {
  DiffOp op;                // over qes_ring(): Laurent in t2
  bool polynomial = false;  // no negative exponents in any coefficient
  bool tau2_closed = false;
  bool flag_closed = false;  // closure of the whole P_k^(1,2,2,3)
  std::string leak;          // first leaked term, if any
  RatMatrix restriction;     // on tau2^j, j = 0..k (meaningful when tau2_closed)
};

const RingPtr& qes_ring();
/// V^qes - V^rat over qes_ring(); the closing shift depends on the scale.
MPoly qes_potential_shift(const ModelParams& p, const QesParams& q, QesPotential kind, const Rat& scale = Rat(2));
QesResult qes_operator(const ModelParams& p, const QesParams& q, const QesConvention& conv = {});
Report verify_qes(int kmax = 2);

class ClosureFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orbitforge
