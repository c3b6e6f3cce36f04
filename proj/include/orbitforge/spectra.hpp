#pragma once

#include "orbitforge/diffop.hpp"
#include "orbitforge/f4root.hpp"
#include "orbitforge/hamiltonians.hpp"
#include "orbitforge/linalg.hpp"
#include "orbitforge/report.hpp"
#include "orbitforge/rings.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitforge {

using Label = std::array<int, 4>;

/// Tau exponent tuple of a monomial.
Label label_of(const Monomial& m);
Monomial monomial_of(const Label& l);
int grading(const Label& l, const std::array<int, 4>& charvec);

struct FlagBasis {
  Model model = Model::rational;
  std::array<int, 4> charvec{};
  int n = 0;
  std::vector<Label> monomials;
};

/// All tau monomials with charvec-grading <= n, sorted by grading, then by
/// weighted degree 2,6,8,12 (rat) or |p|^2 (trig), then lexicographically.
FlagBasis flag_basis(Model m, const std::array<int, 4>& charvec, int n);

/// First monomial in the image of the basis that leaves the subspace.
std::optional<Label> check_invariance(const DiffOp& op, const FlagBasis& basis);

/// Column j holds the image of basis monomial j. Throws std::domain_error
/// when the basis is not invariant or a coefficient is not a number.
RatMatrix operator_matrix(const DiffOp& op, const FlagBasis& basis);

/// Entry (i, j) non-zero only when j does not precede i.
bool is_upper_triangular(const RatMatrix& m);

class ResonantDegeneracy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AppendixMatch { pass, fail, absent };
std::string match_name(AppendixMatch m);

struct SpectralEntry {
  Label label{};
  int grading = 0;
  Rat eigenvalue;
  MPoly eigenfunction;  // leading coefficient 1
  AppendixMatch appendix = AppendixMatch::absent;
  std::string note;
};

struct SpectralReport {
  Model model = Model::rational;
  int n = 0;
  ModelParams params;
  std::vector<SpectralEntry> entries;
};

/// Exact eigenvectors of a triangular matrix by back-substitution.
SpectralReport eigen_decompose(const RatMatrix& m, const FlagBasis& basis);

/// Diagonal of the algebraic operator: -2 omega (2 n1 + 6 n2 + 8 n3 + 12 n4).
Rat rational_spectrum(const Label& n, const Rat& omega);
/// The literal published prefactor, -4 omega (...), kept for comparison.
Rat rational_spectrum_literal(const Label& n, const Rat& omega);
/// -(|p|^2 + 2 p.rho(mu, nu)).
Rat trig_spectrum(const Label& p, const Rat& mu, const Rat& nu);

/// Non-negative solutions of 2 n1 + 6 n2 + 8 n3 + 12 n4 = N.
long degeneracy(int level);
/// Independent count by direct search over all n with 2 n1 <= N (test oracle).
long degeneracy_by_search(int level);

/// Eigenpairs on the minimal flag, with each published entry compared after
/// leading-coefficient normalization.
SpectralReport reproduce_appendix(Model m, int n, const ModelParams& p);

Report verify_flags(Model m);
/// Triangularity, spectrum formulas and published eigenfunctions at the
/// given parameter points.
Report verify_appendix(Model m, const std::vector<ModelParams>& points);
std::vector<ModelParams> default_sample_points(Model m);

}  // namespace orbitforge
