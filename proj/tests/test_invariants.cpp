#include "orbitforge/invariants.hpp"
#include "orbitforge/parse.hpp"
#include "orbitforge/reference.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace orbitforge;

namespace {

std::vector<Rat> point(Model m, std::initializer_list<Rat> coords) {
  std::vector<Rat> pt(coordinate_ring(m)->size());
  std::size_t i = 0;
  for (const auto& c : coords) pt[i++] = c;
  return pt;
}

std::vector<Rat> tau_values(Model m, const std::vector<Rat>& xpt) {
  std::vector<Rat> pt(tau_ring(m)->size());
  const auto& tau = invariants_in_coordinates(m);
  for (std::size_t a = 0; a < 4; ++a) pt[a] = tau[a].evaluate(xpt);
  return pt;
}

MPoly random_tau_poly(Model m, std::mt19937& gen, int bound) {
  const RingPtr& t = tau_ring(m);
  const std::array<int, 4> w = m == Model::rational ? kRationalDegrees : kMinimalGrading;
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<MPoly::Term> terms;
  for (int a = 0; a * w[0] <= bound; ++a)
    for (int b = 0; a * w[0] + b * w[1] <= bound; ++b)
      for (int c = 0; a * w[0] + b * w[1] + c * w[2] <= bound; ++c)
        for (int d = 0; a * w[0] + b * w[1] + c * w[2] + d * w[3] <= bound; ++d) {
          if (gen() % 3 != 0) continue;
          Monomial mono;
          mono.e[0] = static_cast<std::int8_t>(a);
          mono.e[1] = static_cast<std::int8_t>(b);
          mono.e[2] = static_cast<std::int8_t>(c);
          mono.e[3] = static_cast<std::int8_t>(d);
          terms.emplace_back(mono, rat(coef(gen), 1 + static_cast<long>(gen() % 3)));
        }
  return MPoly::from_terms(t, terms);
}

}  // namespace

TEST(RationalInvariants, Examples) {
  const auto& tau = invariants_in_coordinates(Model::rational);
  const RingPtr& x = coordinate_ring(Model::rational);
  EXPECT_EQ(tau[0], parse_poly(x, "x1^2 + x2^2 + x3^2 + x4^2"));
  EXPECT_EQ(tau[0].evaluate(point(Model::rational, {1, 2, 3, 5})), 39);
  EXPECT_EQ(tau[1].evaluate(point(Model::rational, {1, 0, 0, 0})), 0);
  RationalInvariants ri = build_rational_invariants(f4());
  EXPECT_EQ(ri.t_orbit[0], tau[0]);
}

TEST(RationalInvariants, Homogeneous) {
  const auto& tau = invariants_in_coordinates(Model::rational);
  for (std::size_t a = 0; a < 4; ++a) {
    ASSERT_FALSE(tau[a].is_zero());
    for (const auto& [mono, c] : tau[a].terms()) EXPECT_EQ(mono.degree(), kRationalDegrees[a]);
  }
}

TEST(Invariants, ReflectionInvariantBothModels) {
  for (Model m : {Model::rational, Model::trig}) {
    const auto& tau = invariants_in_coordinates(m);
    for (const auto& alpha : f4().positive()) {
      for (std::size_t a = 0; a < 4; ++a) EXPECT_EQ(reflect_poly(tau[a], m, alpha), tau[a]) << to_string(alpha);
    }
  }
}

TEST(TrigInvariants, OrbitSizesAtOrigin) {
  const std::array<long, 4> sizes{24, 24, 96, 96};
  auto t = tau_values(Model::trig, point(Model::trig, {1, 1, 1, 1}));
  for (std::size_t a = 0; a < 4; ++a) EXPECT_EQ(t[a], sizes[a]);
}

TEST(TrigInvariants, RealUnderGlobalInversion) {
  const RingPtr& v = coordinate_ring(Model::trig);
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < v->size(); ++i) {
    Monomial inv;
    inv.e[i] = static_cast<std::int8_t>(i < 4 ? -1 : 1);
    images.push_back(MPoly::monomial(v, inv));
  }
  for (const auto& tau : invariants_in_coordinates(Model::trig)) EXPECT_EQ(tau.substitute(images), tau);
}

TEST(TrigInvariants, MatchCosineForms) {
  auto tau = reference::trig_tau_cosine();
  auto images = reference::cosine_images();
  const auto& built = invariants_in_coordinates(Model::trig);
  for (std::size_t a = 0; a < 4; ++a) EXPECT_EQ(tau[a].substitute(images).rebase(coordinate_ring(Model::trig)), built[a]);
}

TEST(GroundState, RationalValues) {
  const auto& g = ground_state_factors(Model::rational);
  auto pt = point(Model::rational, {1, 2, 3, 5});
  EXPECT_EQ(g.dpm.evaluate(pt), 967680);
  EXPECT_EQ(g.dpm.evaluate(pt), (1 - 4) * (1 - 9) * (1 - 25) * (4 - 9) * (4 - 25) * (9 - 25));
  for (const auto& [mono, c] : g.dpm.terms()) EXPECT_EQ(mono.degree(), 12);
  for (const auto& [mono, c] : g.dd0.terms()) EXPECT_EQ(mono.degree(), 12);
  Rat p1 = reference::P1(Model::rational).evaluate(tau_values(Model::rational, pt));
  EXPECT_EQ(p1, Rat(967680) * 967680 / 64);
}

TEST(GroundState, SquaresAreWeylInvariant) {
  const auto& g = ground_state_factors(Model::rational);
  MPoly s1 = g.dpm * g.dpm, s2 = g.dd0 * g.dd0;
  for (const auto& alpha : f4().positive()) {
    MPoly r1 = reflect_poly(g.dpm, Model::rational, alpha);
    MPoly r2 = reflect_poly(g.dd0, Model::rational, alpha);
    EXPECT_TRUE(r1 == g.dpm || r1 == -g.dpm);
    EXPECT_TRUE(r2 == g.dd0 || r2 == -g.dd0);
    EXPECT_EQ(r1 * r1, s1);
    EXPECT_EQ(r2 * r2, s2);
  }
}

TEST(GroundState, TrigValues) {
  const auto& g = ground_state_factors(Model::trig);
  EXPECT_EQ(g.dpm.evaluate(point(Model::trig, {1, 1, 1, 1})), 0);
  std::vector<Rat> t0(tau_ring(Model::trig)->size());
  t0[0] = 24;
  t0[1] = 24;
  t0[2] = 96;
  t0[3] = 96;
  EXPECT_EQ(reference::P2(Model::trig).evaluate(t0), 0);
  EXPECT_EQ(reference::P1(Model::trig).evaluate(t0), 0);
  auto pt = point(Model::trig, {2, rat(1, 3), 5, rat(-3, 2)});
  Rat scale = Rat(1) / Rat(mpz_class(1) << 24);
  EXPECT_EQ(g.dpm.evaluate(pt), reference::P1(Model::trig).evaluate(tau_values(Model::trig, pt)) * scale);
  EXPECT_EQ(g.dd0.evaluate(pt), reference::P2(Model::trig).evaluate(tau_values(Model::trig, pt)) * scale);
}

TEST(GroundState, ReportsPass) {
  for (Model m : {Model::rational, Model::trig}) {
    EXPECT_TRUE(verify_ground_state_squares(m).pass());
    EXPECT_TRUE(verify_invariants(m).pass());
  }
}

TEST(ExpressInInvariants, Examples) {
  const RingPtr& x = coordinate_ring(Model::rational);
  const RingPtr& t = tau_ring(Model::rational);
  EXPECT_EQ(express_in_invariants(parse_poly(x, "x1^2+x2^2+x3^2+x4^2"), Model::rational, 2), MPoly::variable(t, "t2"));
  EXPECT_THROW(express_in_invariants(MPoly::variable(x, "x1"), Model::rational, 4), NotInvariant);
  const auto& g = ground_state_factors(Model::rational);
  MPoly q = express_in_invariants(g.dpm * g.dpm * rat(1, 64), Model::rational, 24);
  EXPECT_EQ(q, parse_poly(t, "-3*t12^2 + 4*t8^3"));
  EXPECT_EQ(q, reference::P1(Model::rational));
}

TEST(ExpressInInvariants, RoundTripRational) {
  std::mt19937 gen(3);
  for (int trial = 0; trial < 4; ++trial) {
    MPoly q = random_tau_poly(Model::rational, gen, 12);
    EXPECT_EQ(express_in_invariants(to_coordinates(q, Model::rational), Model::rational, 12), q);
  }
}

TEST(ExpressInInvariants, RoundTripTrig) {
  std::mt19937 gen(5);
  for (int trial = 0; trial < 3; ++trial) {
    MPoly q = random_tau_poly(Model::trig, gen, 3);
    EXPECT_EQ(express_in_invariants(to_coordinates(q, Model::trig), Model::trig, 3), q);
  }
}

TEST(ExpressInInvariants, TrigNonInvariant) {
  const RingPtr& v = coordinate_ring(Model::trig);
  EXPECT_THROW(express_in_invariants(MPoly::variable(v, "v1"), Model::trig, 2), NotInvariant);
}
