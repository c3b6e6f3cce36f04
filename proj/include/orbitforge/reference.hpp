#pragma once

#include "orbitforge/diffop.hpp"
#include "orbitforge/rings.hpp"

#include <array>
#include <string>
#include <vector>

namespace orbitforge::reference {

/// Published closed forms of tau_2..tau_12 in x1..x4.
std::array<MPoly, 4> rational_tau();

/// Cosine ring: h_j = cos(beta x_j / 2), c_j = cos(beta x_j), k_j = cos(3 beta x_j / 2).
const RingPtr& cosine_ring();
/// Published cosine expansions of tau_1..tau_4 (prefactors already applied).
std::array<MPoly, 4> trig_tau_cosine();
/// Images of the cosine variables as Laurent polynomials in v.
std::vector<MPoly> cosine_images();

/// Ground-state polynomials in tau (rational: (D+D-)^2 = 64 P1, (D D0)^2 = P2 / 4096;
/// trig: both squares equal P_i / 2^24).
MPoly P1(Model m);
MPoly P2(Model m);

/// Potential numerators over P1 and P2, without coupling constants:
/// rational V = omega^2 tau2/2 + gl N_nu/P1 + gs N_mu/P2,
/// trig V/beta^2 = -gl N1/P1 - gs N2/(2 P2).
MPoly potential_numerator_long(Model m);
MPoly potential_numerator_short(Model m);

/// Algebraic gauge-rotated operator with mu, nu, omega as ring variables.
DiffOp algebraic_operator(Model m);

/// Metric entries g^{ab} (symmetric) as published.
std::array<std::array<MPoly, 4>, 4> metric(Model m);
std::array<MPoly, 4> gvec(Model m);
std::array<MPoly, 4> cvec(Model m);

/// Published ground-state energy with mu, nu, omega symbolic (trig in units of beta^2).
MPoly ground_energy(Model m);

struct Eigenpair {
  std::string name;
  std::array<int, 4> label;
  int grading;
  std::string function;    // expression in tau and mu, nu, omega
  std::string eigenvalue;  // expression in mu, nu, omega
};

/// Lowest published eigenfunctions for n <= 2.
const std::vector<Eigenpair>& eigenfunctions(Model m);

/// Quasi-exactly-solvable potential shift V^qes - V^rat: a polynomial in t2
/// (names a, gamma, k, mu, nu, omega) plus a coefficient of 1/t2.
std::string qes_potential_shift_polynomial();
std::string qes_potential_shift_inverse();

}  // namespace orbitforge::reference
