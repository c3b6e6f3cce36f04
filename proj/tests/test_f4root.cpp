#include "orbitforge/f4root.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace orbitforge;

namespace {

RootVec e(int i) {
  RootVec v{};
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

const RootSystem& rs() {
  static const RootSystem r = build_root_system();
  return r;
}

DominantWeight basis(int a) {
  DominantWeight p;
  p.n[static_cast<std::size_t>(a)] = 1;
  return p;
}

}  // namespace

TEST(RootSystem, Counts) {
  EXPECT_EQ(rs().positive_short.size(), 12u);
  EXPECT_EQ(rs().positive_long.size(), 12u);
  EXPECT_EQ(rs().positive().size(), 24u);
  for (const auto& a : rs().positive_short) EXPECT_EQ(norm2(a), 1);
  for (const auto& a : rs().positive_long) EXPECT_EQ(norm2(a), 2);
  for (const auto& a : rs().positive()) EXPECT_TRUE(is_positive(a));
}

TEST(RootSystem, FundamentalWeightsAreDominant) {
  ASSERT_EQ(rs().fundamental_weights.size(), 4u);
  EXPECT_EQ(rs().fundamental_weights[0], e(4));
  EXPECT_EQ(norm2(rs().fundamental_weights[0]), 1);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      Rat d = dot(rs().fundamental_weights[a], rs().simple_roots[b]);
      EXPECT_GE(d, 0);
      if (a != b) EXPECT_EQ(d, 0);
    }
  }
  for (const auto& w : rs().fundamental_weights) {
    for (const auto& a : rs().positive()) EXPECT_GE(dot(w, a), 0);
  }
}

TEST(RootSystem, LongShortProductsExhaustive) {
  const std::set<Rat> allowed{rat(-1), rat(-1, 2), rat(0), rat(1, 2), rat(1)};
  for (const auto& l : rs().positive_long) {
    for (const auto& s : rs().positive_short) EXPECT_TRUE(allowed.count(dot(l, s))) << to_string(l) << " " << to_string(s);
  }
}

TEST(Reflect, Examples) {
  RootVec neg{};
  neg[0] = -1;
  EXPECT_EQ(reflect(e(1), e(1)), neg);
  EXPECT_EQ(reflect(e(3) + e(4), e(3) - e(4)), e(3) + e(4));
  EXPECT_THROW(reflect(e(1), RootVec{}), std::invalid_argument);
}

TEST(Reflect, InvolutionOnRandomVectors) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    RootVec v{rat(c(gen), 3), rat(c(gen), 2), rat(c(gen)), rat(c(gen), 5)};
    for (const auto& a : rs().positive()) EXPECT_EQ(reflect(reflect(v, a), a), v);
  }
}

TEST(WeylOrbit, FundamentalOrbitSizes) {
  const std::array<std::size_t, 4> sizes{24, 24, 96, 96};
  for (std::size_t a = 0; a < 4; ++a) EXPECT_EQ(weyl_orbit(rs(), rs().fundamental_weights[a]).size(), sizes[a]);
}

TEST(WeylOrbit, LongRootOrbit) {
  auto orbit = weyl_orbit(rs(), e(3) + e(4));
  std::vector<RootVec> longs;
  for (const auto& a : rs().positive_long) {
    longs.push_back(a);
    longs.push_back(Rat(-1) * a);
  }
  std::sort(longs.begin(), longs.end());
  EXPECT_EQ(orbit, longs);
}

TEST(WeylOrbit, ZeroAndGenericSeed) {
  EXPECT_EQ(weyl_orbit(rs(), RootVec{}).size(), 1u);
  RootVec generic{rat(1, 7), rat(2, 7), rat(4, 7), rat(9, 7)};
  EXPECT_EQ(weyl_orbit(rs(), generic).size(), 1152u);
}

TEST(WeylOrbit, StableUnderEveryPositiveRoot) {
  for (const auto& seed : rs().fundamental_weights) {
    auto orbit = weyl_orbit(rs(), seed);
    std::set<RootVec> set(orbit.begin(), orbit.end());
    for (const auto& v : orbit) {
      for (const auto& a : rs().positive()) EXPECT_TRUE(set.count(reflect(v, a)));
    }
  }
}

TEST(Pairing, QuadraticFormTable) {
  // |p|^2 = p1^2 + 2p2^2 + 3p3^2 + 6p4^2 + 2p1p2 + 3p1p3 + 4p1p4 + 4p2p3 + 6p2p4 + 8p3p4
  const Rat q[4][4] = {{1, 1, rat(3, 2), 2}, {1, 2, 2, 3}, {rat(3, 2), 2, 3, 4}, {2, 3, 4, 6}};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) EXPECT_EQ(pairing(rs(), basis(a), basis(b)), q[a][b]) << a << b;
  }
  DominantWeight p;
  p.n = {2, 1, 0, 3};
  Rat expect = 4 + 2 + 54 + 4 + 24 + 18;
  EXPECT_EQ(pairing(rs(), p, p), expect);
}

TEST(DeformedWeyl, NormAndComponents) {
  EXPECT_EQ(deformed_weyl(rs(), 0, 0), RootVec{});
  EXPECT_EQ(norm2(deformed_weyl(rs(), 1, 0)), 7);
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> c(-20, 20);
  for (int trial = 0; trial < 20; ++trial) {
    Rat mu = rat(c(gen), 7), nu = rat(c(gen), 3);
    RootVec r = deformed_weyl(rs(), mu, nu);
    EXPECT_EQ(norm2(r), 7 * mu * mu + 18 * mu * nu + 14 * nu * nu);
    RootVec expect{mu / 2, mu / 2 + nu, mu / 2 + 2 * nu, 5 * mu / 2 + 3 * nu};
    EXPECT_EQ(r, expect);
  }
}

TEST(FlagConstants, Published) {
  FlagConstants f = flag_characteristic_constants();
  EXPECT_EQ(f.minimal, (std::array<int, 4>{1, 2, 2, 3}));
  EXPECT_EQ(f.rho, (std::array<int, 4>{8, 11, 15, 21}));
  EXPECT_EQ(f.corho, (std::array<int, 4>{11, 16, 21, 30}));
  EXPECT_EQ(f.extra.size(), 3u);
}
