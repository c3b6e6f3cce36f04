#pragma once

#include "orbitforge/mpoly.hpp"

#include <map>
#include <string>

namespace orbitforge {

/// Linear differential operator sum_d c_d * D^d over the first `dims`
/// variables of a ring; the remaining variables act as parameters. The
/// multi-index d is stored as a Monomial whose exponents are derivative
/// counts.
class DiffOp {
 public:
  using Terms = std::map<Monomial, MPoly, GradedLess>;

  DiffOp() = default;
  DiffOp(RingPtr ring, std::size_t dims);

  static DiffOp identity(RingPtr ring, std::size_t dims);
  /// Euler-type operator sum_a weights[a] * t_a * d/dt_a.
  static DiffOp euler(RingPtr ring, const std::vector<Rat>& weights);

  const RingPtr& ring() const { return ring_; }
  std::size_t dims() const { return dims_; }
  const Terms& terms() const { return terms_; }

  void add(const Monomial& d, const MPoly& coeff);
  /// Adds coeff * d/dt_a d/dt_b (a may equal b).
  void add_second(std::size_t a, std::size_t b, const MPoly& coeff);
  void add_first(std::size_t a, const MPoly& coeff);
  void add_zero(const MPoly& coeff);

  MPoly coefficient(const Monomial& d) const;
  MPoly second(std::size_t a, std::size_t b) const;
  MPoly first(std::size_t a) const;
  MPoly zero_order() const;

  int order() const;

  MPoly apply(const MPoly& p) const;

  DiffOp operator+(const DiffOp& o) const;
  DiffOp operator-(const DiffOp& o) const;
  DiffOp operator*(const Rat& c) const;
  /// Left multiplication of every coefficient by a function.
  DiffOp times(const MPoly& f) const;
  /// Composition: (this o other)(p) = this(other(p)).
  DiffOp compose(const DiffOp& other) const;
  DiffOp commutator(const DiffOp& other) const { return compose(other) - other.compose(*this); }

  DiffOp specialize(const std::map<std::string, Rat>& values) const;
  DiffOp rebase(const RingPtr& target) const;

  bool operator==(const DiffOp& o) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t dims_ = 0;
  Terms terms_;

  void check_operand(const MPoly& p) const;
};

/// Index of d/dt_a (and d^2/dt_a dt_b).
Monomial deriv_index(std::size_t a);
Monomial deriv_index(std::size_t a, std::size_t b);

/// Iterated partial derivative by the multi-index d.
MPoly derive_multi(const MPoly& p, const Monomial& d);

}  // namespace orbitforge
