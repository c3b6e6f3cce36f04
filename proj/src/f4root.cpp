#include "orbitforge/f4root.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace orbitforge {

Rat dot(const RootVec& a, const RootVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

RootVec operator+(const RootVec& a, const RootVec& b) {
  RootVec r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] + b[i];
  return r;
}

RootVec operator-(const RootVec& a, const RootVec& b) {
  RootVec r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] - b[i];
  return r;
}

RootVec operator*(const Rat& c, const RootVec& a) {
  RootVec r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = c * a[i];
  return r;
}

bool is_positive(const RootVec& v) {
  for (std::size_t i = 4; i-- > 0;) {
    if (v[i] != 0) return v[i] > 0;
  }
  return false;
}

std::vector<RootVec> RootSystem::positive() const {
  std::vector<RootVec> all = positive_short;
  all.insert(all.end(), positive_long.begin(), positive_long.end());
  return all;
}

namespace {

RootVec unit(std::size_t i, const Rat& s = Rat(1)) {
  RootVec v{Rat(0), Rat(0), Rat(0), Rat(0)};
  v[i] = s;
  return v;
}

}  // namespace

RootSystem build_root_system() {
  RootSystem rs;
  const Rat half = rat(1, 2);
  std::vector<RootVec> all;
  for (std::size_t i = 0; i < 4; ++i) {
    all.push_back(unit(i));
    all.push_back(unit(i, -1));
  }
  for (int mask = 0; mask < 16; ++mask) {
    RootVec v;
    for (std::size_t i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -half : half;
    all.push_back(v);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) all.push_back(unit(i, si) + unit(j, sj));
      }
    }
  }
  for (const auto& r : all) {
    if (!is_positive(r)) continue;
    (norm2(r) == 1 ? rs.positive_short : rs.positive_long).push_back(r);
  }

  std::vector<RootVec> pos = rs.positive();
  std::vector<RootVec> simple;
  for (const auto& r : pos) {
    bool decomposable = false;
    for (const auto& a : pos) {
      RootVec rest = r - a;
      if (std::find(pos.begin(), pos.end(), rest) != pos.end()) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }

  rs.fundamental_weights = {
      unit(3),
      unit(2) + unit(3),
      RootVec{half, half, half, rat(3, 2)},
      RootVec{Rat(0), Rat(1), Rat(1), Rat(2)},
  };
  for (const auto& w : rs.fundamental_weights) {
    for (const auto& a : simple) {
      if (2 * dot(w, a) / norm2(a) == 1) rs.simple_roots.push_back(a);
    }
  }
  if (simple.size() != 4 || rs.simple_roots.size() != 4) {
    throw std::logic_error("fundamental weights are not dual to the simple roots");
  }
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      Rat c = 2 * dot(rs.fundamental_weights[a], rs.simple_roots[b]) / norm2(rs.simple_roots[b]);
      if (c != (a == b ? 1 : 0)) throw std::logic_error("fundamental weights are not dual to the simple roots");
    }
  }
  return rs;
}

RootVec reflect(const RootVec& v, const RootVec& alpha) {
  Rat n = norm2(alpha);
  if (n == 0) throw std::invalid_argument("reflection in a zero vector");
  return v - (2 * dot(v, alpha) / n) * alpha;
}

std::vector<RootVec> weyl_orbit(const RootSystem& rs, const RootVec& seed) {
  std::set<RootVec> seen{seed};
  std::vector<RootVec> frontier{seed};
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const auto& v : frontier) {
      for (const auto& a : rs.simple_roots) {
        RootVec w = reflect(v, a);
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

RootVec weight_vector(const RootSystem& rs, const DominantWeight& p) {
  RootVec v{Rat(0), Rat(0), Rat(0), Rat(0)};
  for (std::size_t a = 0; a < 4; ++a) v = v + Rat(p.n[a]) * rs.fundamental_weights[a];
  return v;
}

Rat pairing(const RootSystem& rs, const DominantWeight& p, const DominantWeight& q) {
  return dot(weight_vector(rs, p), weight_vector(rs, q));
}

RootVec deformed_weyl(const RootSystem& rs, const Rat& mu, const Rat& nu) {
  RootVec s{Rat(0), Rat(0), Rat(0), Rat(0)};
  RootVec l = s;
  for (const auto& r : rs.positive_short) s = s + r;
  for (const auto& r : rs.positive_long) l = l + r;
  return rat(1, 2) * (mu * s + nu * l);
}

FlagConstants flag_characteristic_constants() { return FlagConstants{}; }

std::string to_string(const RootVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ", ";
    s += to_short_string(v[i]);
  }
  return s + ")";
}

}  // namespace orbitforge
