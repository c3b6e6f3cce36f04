#include "orbitforge/mpoly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace orbitforge {

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names, bool laurent) : names_(std::move(names)), laurent_(laurent) {
  if (names_.size() > kMaxVars) {
    throw std::invalid_argument("ring supports at most " + std::to_string(kMaxVars) + " variables");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> Ring::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::index(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown variable '" + name + "'");
}

RingPtr make_ring(std::vector<std::string> names, bool laurent) {
  return std::make_shared<const Ring>(std::move(names), laurent);
}

Monomial make_monomial(std::initializer_list<int> exps) {
  if (exps.size() > kMaxVars) throw std::invalid_argument("too many exponents");
  Monomial m;
  std::size_t i = 0;
  for (int x : exps) m.e[i++] = static_cast<std::int8_t>(x);
  return m;
}

// ---------------------------------------------------------------- helpers

namespace {

struct Bounds {
  std::array<int, kMaxVars> lo{};
  std::array<int, kMaxVars> hi{};
};

Bounds bounds_of(const std::vector<MPoly::Term>& terms) {
  Bounds b;
  if (terms.empty()) return b;
  for (std::size_t i = 0; i < kMaxVars; ++i) b.lo[i] = b.hi[i] = terms.front().first.e[i];
  for (const auto& [m, c] : terms) {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      b.lo[i] = std::min<int>(b.lo[i], m.e[i]);
      b.hi[i] = std::max<int>(b.hi[i], m.e[i]);
    }
  }
  return b;
}

void check_product_range(const Bounds& a, const Bounds& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.hi[i] + b.hi[i] > kMaxExponent || a.lo[i] + b.lo[i] < -kMaxExponent) {
      throw std::overflow_error("exponent exceeds supported range");
    }
  }
}

BigInt denominator_lcm(const std::vector<MPoly::Term>& terms) {
  BigInt l = 1;
  for (const auto& t : terms) {
    if (t.second.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
  }
  return l;
}

std::vector<BigInt> scaled_numerators(const std::vector<MPoly::Term>& terms, const BigInt& l) {
  std::vector<BigInt> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.second.get_den() == 1) {
      out.emplace_back(t.second.get_num() * l);
    } else {
      BigInt f;
      mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
      out.emplace_back(t.second.get_num() * f);
    }
  }
  return out;
}

}  // namespace

/// Open-addressing integer accumulator keyed by monomial.
class TermAccumulator {
 public:
  explicit TermAccumulator(std::size_t expected) {
    std::size_t cap = std::bit_ceil(std::max<std::size_t>(16, expected * 2));
    resize(cap);
  }

  void addmul(const Monomial& m, const BigInt& a, const BigInt& b) {
    std::size_t s = slot(m);
    mpz_addmul(vals_[s].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }

  std::vector<MPoly::Term> extract(const BigInt& denominator) {
    std::vector<MPoly::Term> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < used_.size(); ++i) {
      if (!used_[i] || vals_[i] == 0) continue;
      Rat c(vals_[i], denominator);
      c.canonicalize();
      out.emplace_back(keys_[i], std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return GradedLess{}(x.first, y.first); });
    return out;
  }

 private:
  std::vector<Monomial> keys_;
  std::vector<BigInt> vals_;
  std::vector<std::uint8_t> used_;
  std::size_t mask_ = 0;
  std::size_t count_ = 0;

  void resize(std::size_t cap) {
    keys_.assign(cap, Monomial{});
    vals_.clear();
    vals_.resize(cap);
    used_.assign(cap, 0);
    mask_ = cap - 1;
    count_ = 0;
  }

  std::size_t slot(const Monomial& m) {
    std::size_t h = MonomialHash{}(m) & mask_;
    while (used_[h]) {
      if (keys_[h] == m) return h;
      h = (h + 1) & mask_;
    }
    if ((count_ + 1) * 2 > used_.size()) {
      grow();
      return slot(m);
    }
    used_[h] = 1;
    keys_[h] = m;
    ++count_;
    return h;
  }

  void grow() {
    std::vector<Monomial> old_keys = std::move(keys_);
    std::vector<BigInt> old_vals = std::move(vals_);
    std::vector<std::uint8_t> old_used = std::move(used_);
    resize(old_used.size() * 2);
    for (std::size_t i = 0; i < old_used.size(); ++i) {
      if (!old_used[i]) continue;
      std::size_t h = MonomialHash{}(old_keys[i]) & mask_;
      while (used_[h]) h = (h + 1) & mask_;
      used_[h] = 1;
      keys_[h] = old_keys[i];
      mpz_swap(vals_[h].get_mpz_t(), old_vals[i].get_mpz_t());
      ++count_;
    }
  }
};

// ---------------------------------------------------------------- MPoly basics

MPoly MPoly::constant(RingPtr ring, const Rat& c) {
  MPoly p(std::move(ring));
  if (c != 0) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

MPoly MPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw std::invalid_argument("variable index out of range");
  Monomial m;
  m.e[index] = 1;
  return monomial(std::move(ring), m);
}

MPoly MPoly::variable(RingPtr ring, const std::string& name) {
  std::size_t i = ring->index(name);
  return variable(std::move(ring), i);
}

MPoly MPoly::monomial(RingPtr ring, const Monomial& m, const Rat& c) {
  MPoly p(std::move(ring));
  if (!p.ring_->laurent() && !m.nonnegative()) throw std::domain_error("negative exponent in non-Laurent ring");
  for (std::size_t i = p.ring_->size(); i < kMaxVars; ++i) {
    if (m.e[i] != 0) throw std::invalid_argument("exponent outside ring variables");
  }
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

MPoly MPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  MPoly p(std::move(ring));
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void MPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return GradedLess{}(x.first, y.first); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      if (!merged.empty() && merged.back().second == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().second == 0) merged.pop_back();
  terms_ = std::move(merged);
  for (const auto& [m, c] : terms_) {
    if (!ring_->laurent() && !m.nonnegative()) throw std::domain_error("negative exponent in non-Laurent ring");
    for (std::size_t i = ring_->size(); i < kMaxVars; ++i) {
      if (m.e[i] != 0) throw std::invalid_argument("exponent outside ring variables");
    }
  }
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

Rat MPoly::constant_term() const { return coefficient(Monomial{}); }

Rat MPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return GradedLess{}(t.first, key); });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rat(0);
}

int MPoly::total_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.front().first.degree();
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

int MPoly::max_exponent(std::size_t var) const {
  if (terms_.empty()) return 0;
  int r = terms_.front().first.e[var];
  for (const auto& t : terms_) r = std::max<int>(r, t.first.e[var]);
  return r;
}

int MPoly::min_exponent(std::size_t var) const {
  if (terms_.empty()) return 0;
  int r = terms_.front().first.e[var];
  for (const auto& t : terms_) r = std::min<int>(r, t.first.e[var]);
  return r;
}

bool MPoly::depends_on(std::size_t var) const {
  for (const auto& t : terms_) {
    if (t.first.e[var] != 0) return true;
  }
  return false;
}

bool MPoly::is_polynomial() const {
  for (const auto& t : terms_) {
    if (!t.first.nonnegative()) return false;
  }
  return true;
}

void MPoly::check_compatible(const MPoly& o) const {
  if (!ring_ || !o.ring_) throw std::invalid_argument("polynomial without ring");
  if (ring_ != o.ring_ && !ring_->same_vars(*o.ring_)) {
    throw std::invalid_argument("variable-list mismatch");
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

template <typename Combine>
std::vector<MPoly::Term> merge_terms(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b,
                                     Combine sign_b) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  GradedLess less;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && less(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || less(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, sign_b(b[j].second));
      ++j;
    } else {
      Rat c = a[i].second + sign_b(b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

const RingPtr& wider_ring(const RingPtr& a, const RingPtr& b) { return (a->laurent() || !b->laurent()) ? a : b; }

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  check_compatible(o);
  ring_ = wider_ring(ring_, o.ring_);
  terms_ = merge_terms(terms_, o.terms_, [](const Rat& c) { return c; });
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_compatible(o);
  ring_ = wider_ring(ring_, o.ring_);
  terms_ = merge_terms(terms_, o.terms_, [](const Rat& c) { return Rat(-c); });
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_compatible(b);
  MPoly r(wider_ring(a.ring_, b.ring_));
  if (a.is_zero() || b.is_zero()) return r;
  check_product_range(bounds_of(a.terms_), bounds_of(b.terms_));

  if (a.size() == 1 || b.size() == 1) {
    const MPoly& single = a.size() == 1 ? a : b;
    const MPoly& other = a.size() == 1 ? b : a;
    const auto& [m, c] = single.terms_.front();
    r.terms_.reserve(other.size());
    for (const auto& t : other.terms_) r.terms_.emplace_back(t.first + m, t.second * c);
    // shifting by a monomial preserves the graded order
    return r;
  }

  const MPoly& big = a.size() >= b.size() ? a : b;
  const MPoly& small = a.size() >= b.size() ? b : a;
  BigInt lb = denominator_lcm(big.terms_);
  BigInt ls = denominator_lcm(small.terms_);
  std::vector<BigInt> nb = scaled_numerators(big.terms_, lb);
  std::vector<BigInt> ns = scaled_numerators(small.terms_, ls);

  TermAccumulator acc(std::min<std::size_t>(big.size() * small.size(), big.size() * 8 + small.size()));
  for (std::size_t j = 0; j < small.size(); ++j) {
    const Monomial& mj = small.terms_[j].first;
    for (std::size_t i = 0; i < big.size(); ++i) acc.addmul(big.terms_[i].first + mj, nb[i], ns[j]);
  }
  r.terms_ = acc.extract(lb * ls);
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

MPoly MPoly::pow(long exponent) const {
  if (exponent < 0) throw std::domain_error("negative power exponent");
  MPoly r = MPoly::constant(ring_, Rat(1));
  if (exponent == 0) return r;
  if (terms_.size() == 1) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      long e = static_cast<long>(terms_[0].first.e[i]) * exponent;
      if (e > kMaxExponent || e < -kMaxExponent) throw std::overflow_error("exponent exceeds supported range");
      m.e[i] = static_cast<std::int8_t>(e);
    }
    Rat c;
    mpz_pow_ui(c.get_num_mpz_t(), terms_[0].second.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(c.get_den_mpz_t(), terms_[0].second.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return MPoly::monomial(ring_, m, c);
  }
  r = *this;
  for (long k = 1; k < exponent; ++k) r = r * *this;
  return r;
}

MPoly MPoly::derive(std::size_t var) const {
  if (var >= ring_->size()) throw std::invalid_argument("unknown variable index");
  MPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Monomial d = m;
    d.e[var] = static_cast<std::int8_t>(d.e[var] - 1);
    r.terms_.emplace_back(d, c * m.e[var]);
  }
  r.canonicalize();
  return r;
}

MPoly MPoly::euler_derive(std::size_t var) const {
  if (var >= ring_->size()) throw std::invalid_argument("unknown variable index");
  if (!ring_->laurent()) throw std::domain_error("euler_derive requires a Laurent-capable ring");
  MPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    r.terms_.emplace_back(m, c * m.e[var]);
  }
  return r;  // exponents unchanged, order preserved
}

MPoly MPoly::shift(const Monomial& m) const { return *this * MPoly::monomial(ring_->laurent() ? ring_ : make_ring(ring_->names(), true), m); }

Rat MPoly::evaluate(std::span<const Rat> point) const {
  if (point.size() != ring_->size()) throw std::invalid_argument("evaluation point has wrong dimension");
  std::vector<std::map<int, Rat>> cache(point.size());
  auto power = [&](std::size_t var, int e) -> const Rat& {
    auto it = cache[var].find(e);
    if (it != cache[var].end()) return it->second;
    Rat v;
    if (e < 0) {
      if (point[var] == 0) throw std::domain_error("negative power of zero");
      Rat inv = 1 / point[var];
      mpz_pow_ui(v.get_num_mpz_t(), inv.get_num_mpz_t(), static_cast<unsigned long>(-e));
      mpz_pow_ui(v.get_den_mpz_t(), inv.get_den_mpz_t(), static_cast<unsigned long>(-e));
    } else {
      mpz_pow_ui(v.get_num_mpz_t(), point[var].get_num_mpz_t(), static_cast<unsigned long>(e));
      mpz_pow_ui(v.get_den_mpz_t(), point[var].get_den_mpz_t(), static_cast<unsigned long>(e));
    }
    return cache[var].emplace(e, std::move(v)).first->second;
  };
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (m.e[i] != 0) t *= power(i, m.e[i]);
    }
    total += t;
  }
  return total;
}

MPoly MPoly::specialize(const std::map<std::size_t, Rat>& values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    Rat factor = c;
    for (const auto& [var, value] : values) {
      int e = m.e[var];
      if (e == 0) continue;
      if (e < 0 && value == 0) throw std::domain_error("negative power of zero");
      Rat base = e < 0 ? Rat(1 / value) : value;
      Rat p;
      mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::abs(e)));
      mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::abs(e)));
      factor *= p;
      rest.e[var] = 0;
    }
    if (factor != 0) out.emplace_back(rest, std::move(factor));
  }
  return from_terms(ring_, std::move(out));
}

MPoly MPoly::specialize(const std::map<std::string, Rat>& values) const {
  std::map<std::size_t, Rat> idx;
  for (const auto& [name, v] : values) {
    if (auto i = ring_->find(name)) idx.emplace(*i, v);
  }
  return specialize(idx);
}

namespace {

// Multivariate Horner evaluation over a variable order; the outermost loop
// multiplies the running result by the smallest image.
class HornerSubstitution {
 public:
  HornerSubstitution(std::span<const MPoly> images, std::vector<std::size_t> order, RingPtr target)
      : images_(images), order_(std::move(order)), target_(std::move(target)) {}

  MPoly run(std::vector<MPoly::Term> terms, std::size_t depth) {
    if (terms.empty()) return MPoly(target_);
    if (depth == order_.size()) {
      Rat c = 0;
      for (const auto& t : terms) c += t.second;
      return MPoly::constant(target_, c);
    }
    std::size_t var = order_[depth];
    std::map<int, std::vector<MPoly::Term>> groups;
    for (auto& t : terms) {
      int e = t.first.e[var];
      t.first.e[var] = 0;
      groups[e].push_back(std::move(t));
    }
    const int lowest = groups.begin()->first;
    MPoly result(target_);
    int current = groups.rbegin()->first;
    bool first = true;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
      int e = it->first;
      if (!first) result = result * power(var, current - e);
      result += run(std::move(it->second), depth + 1);
      current = e;
      first = false;
    }
    if (lowest > 0) result = result * power(var, lowest);
    if (lowest < 0) result = result * inverse_power(var, -lowest);
    return result;
  }

 private:
  std::span<const MPoly> images_;
  std::vector<std::size_t> order_;
  RingPtr target_;
  std::map<std::pair<std::size_t, int>, MPoly> cache_;

  const MPoly& power(std::size_t var, int e) {
    auto key = std::make_pair(var, e);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    MPoly p = e == 1 ? images_[var] : power(var, e - 1) * images_[var];
    return cache_.emplace(key, std::move(p)).first->second;
  }

  MPoly inverse_power(std::size_t var, int e) {
    const MPoly& img = images_[var];
    if (img.size() != 1) throw std::domain_error("negative exponent requires a monomial image");
    if (!target_->laurent()) throw std::domain_error("negative exponent requires a Laurent target ring");
    Monomial inv = Monomial{} - img.terms().front().first;
    Rat c = 1 / img.terms().front().second;
    return MPoly::monomial(target_, inv, c).pow(e);
  }
};

}  // namespace

MPoly MPoly::substitute(std::span<const MPoly> images) const {
  if (images.size() != ring_->size()) throw std::invalid_argument("substitution must assign every variable");
  if (images.empty()) throw std::invalid_argument("empty substitution");
  RingPtr target = images[0].ring();
  for (const auto& img : images) {
    if (img.ring() != target && !img.ring()->same_vars(*target)) {
      throw std::invalid_argument("substitution images live in different rings");
    }
    if (img.ring()->laurent()) target = img.ring();
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    if (depends_on(i)) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return images[x].size() < images[y].size(); });
  HornerSubstitution h(images, order, target);
  return h.run(terms_, 0);
}

MPoly MPoly::rebase(const RingPtr& target) const {
  std::vector<int> map(ring_->size(), -1);
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    if (auto j = target->find(ring_->name(i))) map[i] = static_cast<int>(*j);
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial n;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (m.e[i] == 0) continue;
      if (map[i] < 0) throw std::invalid_argument("variable '" + ring_->name(i) + "' missing from target ring");
      n.e[static_cast<std::size_t>(map[i])] = m.e[i];
    }
    out.emplace_back(n, c);
  }
  return from_terms(target, std::move(out));
}

std::map<Monomial, MPoly, GradedLess> MPoly::split_by(const std::vector<std::size_t>& vars) const {
  std::map<Monomial, std::vector<Term>, GradedLess> groups;
  for (const auto& [m, c] : terms_) {
    Monomial key;
    Monomial rest = m;
    for (auto v : vars) {
      key.e[v] = m.e[v];
      rest.e[v] = 0;
    }
    groups[key].emplace_back(rest, c);
  }
  std::map<Monomial, MPoly, GradedLess> out;
  for (auto& [k, ts] : groups) out.emplace(k, from_terms(ring_, std::move(ts)));
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = m.is_one();
    if (mag != 1 || unit) {
      os << to_short_string(mag);
      if (!unit) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (m.e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->name(i);
      if (m.e[i] != 1) os << "^" << static_cast<int>(m.e[i]);
    }
  }
  return os.str();
}

MPoly poly_arith(const MPoly& p, const MPoly& q, ArithKind kind, long exponent) {
  switch (kind) {
    case ArithKind::add:
      return p + q;
    case ArithKind::sub:
      return p - q;
    case ArithKind::mul:
      return p * q;
    case ArithKind::pow:
      return p.pow(exponent);
  }
  throw std::invalid_argument("unknown arithmetic kind");
}

MPoly divide_exact(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.ring() != q.ring() && !p.ring()->same_vars(*q.ring())) throw std::invalid_argument("variable-list mismatch");
  MPoly quotient(p.ring()->laurent() ? p.ring() : q.ring());
  if (p.is_zero()) return quotient;
  const bool laurent = p.ring()->laurent() || q.ring()->laurent();
  GradedLess less;
  std::map<Monomial, Rat, GradedLess> rem;
  for (const auto& t : p.terms()) rem.emplace(t.first, t.second);
  const auto& [lead_m, lead_c] = q.leading();
  const Monomial floor = p.trailing().first - q.trailing().first;
  std::vector<MPoly::Term> out;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    Monomial tm = top->first - lead_m;
    if (less(tm, floor) || (!laurent && !tm.nonnegative())) throw std::domain_error("polynomial is not divisible");
    Rat tc = top->second / lead_c;
    for (const auto& [qm, qc] : q.terms()) {
      Monomial key = tm + qm;
      auto it = rem.find(key);
      if (it == rem.end()) {
        rem.emplace(key, -tc * qc);
      } else {
        it->second -= tc * qc;
        if (it->second == 0) rem.erase(it);
      }
    }
    out.emplace_back(tm, std::move(tc));
  }
  return MPoly::from_terms(quotient.ring(), std::move(out));
}

}  // namespace orbitforge
