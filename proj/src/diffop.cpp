#include "orbitforge/diffop.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace orbitforge {

Monomial deriv_index(std::size_t a) {
  Monomial d;
  d.e[a] = 1;
  return d;
}

Monomial deriv_index(std::size_t a, std::size_t b) {
  Monomial d;
  d.e[a] = static_cast<std::int8_t>(d.e[a] + 1);
  d.e[b] = static_cast<std::int8_t>(d.e[b] + 1);
  return d;
}

MPoly derive_multi(const MPoly& p, const Monomial& d) {
  MPoly r = p;
  for (std::size_t i = 0; i < kMaxVars && !r.is_zero(); ++i) {
    for (int k = 0; k < d.e[i]; ++k) r = r.derive(i);
  }
  return r;
}

DiffOp::DiffOp(RingPtr ring, std::size_t dims) : ring_(std::move(ring)), dims_(dims) {
  if (dims_ > ring_->size()) throw std::invalid_argument("operator dimension exceeds ring size");
}

DiffOp DiffOp::identity(RingPtr ring, std::size_t dims) {
  DiffOp op(ring, dims);
  op.add_zero(MPoly::constant(ring, Rat(1)));
  return op;
}

DiffOp DiffOp::euler(RingPtr ring, const std::vector<Rat>& weights) {
  DiffOp op(ring, weights.size());
  for (std::size_t a = 0; a < weights.size(); ++a) {
    op.add_first(a, MPoly::variable(ring, a) * weights[a]);
  }
  return op;
}

void DiffOp::check_operand(const MPoly& p) const {
  if (!ring_ || !p.ring() || (p.ring() != ring_ && !p.ring()->same_vars(*ring_))) {
    throw std::invalid_argument("operator and operand use different variables");
  }
}

void DiffOp::add(const Monomial& d, const MPoly& coeff) {
  check_operand(coeff);
  for (std::size_t i = dims_; i < kMaxVars; ++i) {
    if (d.e[i] != 0) throw std::invalid_argument("derivative in a parameter direction");
  }
  if (!d.nonnegative()) throw std::invalid_argument("negative derivative order");
  if (coeff.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void DiffOp::add_second(std::size_t a, std::size_t b, const MPoly& coeff) { add(deriv_index(a, b), coeff); }
void DiffOp::add_first(std::size_t a, const MPoly& coeff) { add(deriv_index(a), coeff); }
void DiffOp::add_zero(const MPoly& coeff) { add(Monomial{}, coeff); }

MPoly DiffOp::coefficient(const Monomial& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? MPoly(ring_) : it->second;
}

MPoly DiffOp::second(std::size_t a, std::size_t b) const { return coefficient(deriv_index(a, b)); }
MPoly DiffOp::first(std::size_t a) const { return coefficient(deriv_index(a)); }
MPoly DiffOp::zero_order() const { return coefficient(Monomial{}); }

int DiffOp::order() const {
  int r = 0;
  for (const auto& [d, c] : terms_) r = std::max(r, d.degree());
  return r;
}

MPoly DiffOp::apply(const MPoly& p) const {
  check_operand(p);
  std::map<Monomial, MPoly, GradedLess> cache;
  // terms_ iterate in graded order, so lower derivatives come first
  auto derivative = [&](const Monomial& d) -> const MPoly& {
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    MPoly r = p;
    Monomial reached;
    for (std::size_t i = 0; i < dims_; ++i) {
      for (int k = 0; k < d.e[i]; ++k) {
        reached.e[i] = static_cast<std::int8_t>(reached.e[i] + 1);
        auto hit = cache.find(reached);
        if (hit != cache.end()) {
          r = hit->second;
        } else {
          r = r.derive(i);
          cache.emplace(reached, r);
        }
      }
    }
    return cache.emplace(d, std::move(r)).first->second;
  };
  MPoly out(ring_);
  for (const auto& [d, c] : terms_) {
    const MPoly& dp = derivative(d);
    if (!dp.is_zero()) out += c * dp;
  }
  return out;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
  DiffOp r = *this;
  for (const auto& [d, c] : o.terms_) r.add(d, c);
  return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const {
  DiffOp r = *this;
  for (const auto& [d, c] : o.terms_) r.add(d, -c);
  return r;
}

DiffOp DiffOp::operator*(const Rat& c) const {
  DiffOp r(ring_, dims_);
  if (c == 0) return r;
  for (const auto& [d, k] : terms_) r.terms_.emplace(d, k * c);
  return r;
}

DiffOp DiffOp::times(const MPoly& f) const {
  DiffOp r(ring_, dims_);
  for (const auto& [d, k] : terms_) r.add(d, f * k);
  return r;
}

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void for_each_subindex(const Monomial& a, std::size_t dims, std::size_t i, Monomial& g,
                       const std::function<void(const Monomial&)>& fn) {
  if (i == dims) {
    fn(g);
    return;
  }
  for (int k = 0; k <= a.e[i]; ++k) {
    g.e[i] = static_cast<std::int8_t>(k);
    for_each_subindex(a, dims, i + 1, g, fn);
  }
  g.e[i] = 0;
}

}  // namespace

DiffOp DiffOp::compose(const DiffOp& other) const {
  if (dims_ != other.dims_) throw std::invalid_argument("operator dimension mismatch");
  DiffOp r(ring_, dims_);
  // c_a D^a (c_b D^b) = sum_{g <= a} binom(a,g) c_a (D^g c_b) D^{a-g+b}
  for (const auto& [da, ca] : terms_) {
    for (const auto& [db, cb] : other.terms_) {
      Monomial g;
      for_each_subindex(da, dims_, 0, g, [&](const Monomial& sub) {
        MPoly dcb = derive_multi(cb, sub);
        if (dcb.is_zero()) return;
        long coef = 1;
        for (std::size_t i = 0; i < dims_; ++i) coef *= binomial(da.e[i], sub.e[i]);
        r.add(da - sub + db, ca * dcb * Rat(coef));
      });
    }
  }
  return r;
}

DiffOp DiffOp::specialize(const std::map<std::string, Rat>& values) const {
  DiffOp r(ring_, dims_);
  for (const auto& [d, c] : terms_) r.add(d, c.specialize(values));
  return r;
}

DiffOp DiffOp::rebase(const RingPtr& target) const {
  for (std::size_t i = 0; i < dims_; ++i) {
    if (target->find(ring_->name(i)) != i) throw std::invalid_argument("rebase must keep operator variables first");
  }
  DiffOp r(target, dims_);
  for (const auto& [d, c] : terms_) r.add(d, c.rebase(target));
  return r;
}

bool DiffOp::operator==(const DiffOp& o) const {
  if (dims_ != o.dims_ || terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [d, c] : terms_) {
    if (d != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    for (std::size_t i = 0; i < dims_; ++i) {
      for (int k = 0; k < it->first.e[i]; ++k) os << "*D[" << ring_->name(i) << "]";
    }
  }
  return os.str();
}

}  // namespace orbitforge
