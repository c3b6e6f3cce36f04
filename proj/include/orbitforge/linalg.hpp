#pragma once

#include "orbitforge/mpoly.hpp"

#include <array>
#include <vector>

namespace orbitforge {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::unique;
  RatVector x;  // filled only for a unique solution
  std::size_t rank = 0;
};

/// Fraction-free (Bareiss) elimination on the integer-scaled augmented
/// matrix, then exact back-substitution.
SolveResult solve_linear(const RatMatrix& a, const RatVector& b);

RatMatrix identity_matrix(std::size_t n);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatVector mat_vec(const RatMatrix& a, const RatVector& x);
/// Throws std::domain_error for a singular matrix.
RatMatrix mat_inverse(const RatMatrix& a);
Rat mat_det(const RatMatrix& a);

using PolyMatrix4 = std::array<std::array<MPoly, 4>, 4>;

/// Cofactor expansion along the first row.
MPoly det4(const PolyMatrix4& m);

}  // namespace orbitforge
