#pragma once

#include "orbitforge/monomial.hpp"
#include "orbitforge/rat.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace orbitforge {

/// Ordered variable list. `laurent` permits negative exponents.
class Ring {
 public:
  Ring(std::vector<std::string> names, bool laurent);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  bool laurent() const { return laurent_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> find(const std::string& name) const;
  /// Throws std::invalid_argument for unknown names.
  std::size_t index(const std::string& name) const;

  bool same_vars(const Ring& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  bool laurent_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, bool laurent = false);

/// Sparse multivariate (optionally Laurent) polynomial with exact rational
/// coefficients. Terms are kept sorted by GradedLess with no zero
/// coefficients, so structural equality is polynomial identity.
class MPoly {
 public:
  using Term = std::pair<Monomial, Rat>;

  MPoly() = default;
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MPoly constant(RingPtr ring, const Rat& c);
  static MPoly variable(RingPtr ring, std::size_t index);
  static MPoly variable(RingPtr ring, const std::string& name);
  static MPoly monomial(RingPtr ring, const Monomial& m, const Rat& c = Rat(1));
  /// Sorts, merges duplicates and drops zeros.
  static MPoly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  Rat coefficient(const Monomial& m) const;

  int total_degree() const;
  int max_exponent(std::size_t var) const;
  int min_exponent(std::size_t var) const;
  bool depends_on(std::size_t var) const;
  bool is_polynomial() const;  // no negative exponents

  const Term& leading() const { return terms_.back(); }
  const Term& trailing() const { return terms_.front(); }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }

  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  /// Throws std::domain_error for a negative exponent.
  MPoly pow(long exponent) const;
  MPoly derive(std::size_t var) const;
  MPoly derive(const std::string& var) const { return derive(ring_->index(var)); }
  /// var * d/dvar; requires a Laurent-capable ring.
  MPoly euler_derive(std::size_t var) const;
  MPoly euler_derive(const std::string& var) const { return euler_derive(ring_->index(var)); }

  /// Multiplies by a monomial (shift of every exponent).
  MPoly shift(const Monomial& m) const;

  /// Full evaluation. Negative powers of a zero value throw std::domain_error.
  Rat evaluate(std::span<const Rat> point) const;
  /// Partial evaluation; the result stays in the same ring.
  MPoly specialize(const std::map<std::size_t, Rat>& values) const;
  MPoly specialize(const std::map<std::string, Rat>& values) const;

  /// Composition: variable i is replaced by images[i]; all images share a
  /// target ring. Negative exponents need a monomial image.
  MPoly substitute(std::span<const MPoly> images) const;

  /// Re-expresses in another ring by matching variable names. Variables with
  /// non-zero exponent must exist in the target.
  MPoly rebase(const RingPtr& target) const;

  /// Splits by the listed variables: key carries only those exponents, value
  /// is the cofactor with them removed.
  std::map<Monomial, MPoly, GradedLess> split_by(const std::vector<std::size_t>& vars) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;

  void check_compatible(const MPoly& o) const;
  void canonicalize();
  friend class TermAccumulator;
};

enum class ArithKind { add, sub, mul, pow };

/// Binary arithmetic dispatch; for pow, `exponent` is used and q ignored.
MPoly poly_arith(const MPoly& p, const MPoly& q, ArithKind kind, long exponent = 0);

/// Exact quotient p/q; throws std::domain_error when q does not divide p.
MPoly divide_exact(const MPoly& p, const MPoly& q);

/// p is in the ring of q? Convenience for tests.
inline MPoly constant_like(const MPoly& p, const Rat& c) { return MPoly::constant(p.ring(), c); }

/// Monomial from an exponent list (length <= kMaxVars).
Monomial make_monomial(std::initializer_list<int> exps);

}  // namespace orbitforge
