#include "orbitforge/diffop.hpp"
#include "orbitforge/linalg.hpp"
#include "orbitforge/mpoly.hpp"
#include "orbitforge/parse.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace orbitforge;

namespace {

RingPtr xring() { return make_ring({"x1", "x2", "x3", "x4"}); }

MPoly random_poly(const RingPtr& r, std::mt19937& gen, int terms, int maxdeg, bool laurent = false) {
  std::uniform_int_distribution<int> deg(laurent ? -maxdeg : 0, maxdeg);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<MPoly::Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (std::size_t i = 0; i < r->size(); ++i) m.e[i] = static_cast<std::int8_t>(deg(gen));
    ts.emplace_back(m, rat(coef(gen), den(gen)));
  }
  return MPoly::from_terms(r, ts);
}

}  // namespace

TEST(Rat, ParsesAndPrints) {
  EXPECT_EQ(parse_rat("6/4"), rat(3, 2));
  EXPECT_EQ(parse_rat("-0.25"), rat(-1, 4));
  EXPECT_EQ(parse_rat(" 7 "), rat(7));
  EXPECT_EQ(to_string(rat(4)), "4/1");
  EXPECT_EQ(to_string(rat(-2, 6)), "-1/3");
  EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rat("1/x"), std::invalid_argument);
  EXPECT_THROW(parse_rat(""), std::invalid_argument);
}

TEST(Rat, StaysReduced) {
  Rat a = rat(6, 8) * rat(4, 3);
  EXPECT_EQ(a.get_num(), 1);
  EXPECT_EQ(a.get_den(), 1);
  Rat b = rat(1, -3);
  EXPECT_GT(b.get_den(), 0);
}

TEST(MPoly, DifferenceOfSquares) {
  auto r = make_ring({"x"});
  MPoly x = MPoly::variable(r, 0);
  MPoly one = MPoly::constant(r, 1);
  EXPECT_EQ((x + one) * (x - one), parse_poly(r, "x^2 - 1"));
}

TEST(MPoly, TimesZeroIsEmpty) {
  auto r = xring();
  MPoly p = parse_poly(r, "x1^2*x3 - 5/3*x4 + 2");
  MPoly z = p * MPoly(r);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.size(), 0u);
}

TEST(MPoly, CubeOfSumOfSquaresHasTwentyTerms) {
  auto r = xring();
  MPoly s = parse_poly(r, "x1^2 + x2^2 + x3^2 + x4^2");
  // multinomial oracle: monomials of degree 3 in 4 symbols = C(6,3)
  EXPECT_EQ(s.pow(3).size(), 20u);
  EXPECT_EQ(s.pow(3).coefficient(make_monomial({2, 2, 2, 0})), 6);
}

TEST(MPoly, ArithDispatchAndErrors) {
  auto r = xring();
  auto other = make_ring({"y"});
  MPoly p = parse_poly(r, "x1 + x2");
  EXPECT_EQ(poly_arith(p, p, ArithKind::pow, 2), parse_poly(r, "x1^2 + 2*x1*x2 + x2^2"));
  EXPECT_EQ(poly_arith(p, p, ArithKind::sub), MPoly(r));
  EXPECT_THROW(p.pow(-1), std::domain_error);
  EXPECT_THROW(p + MPoly::variable(other, 0), std::invalid_argument);
  EXPECT_THROW(MPoly::monomial(r, make_monomial({-1})), std::domain_error);
}

TEST(MPoly, Derivatives) {
  auto r = make_ring({"x"});
  EXPECT_EQ(parse_poly(r, "x^3").derive(0), parse_poly(r, "3*x^2"));
  EXPECT_TRUE(MPoly::constant(r, 5).derive("x").is_zero());
  EXPECT_THROW(parse_poly(r, "x").derive("y"), std::invalid_argument);
  EXPECT_THROW(parse_poly(r, "x").euler_derive(0), std::domain_error);

  auto v = make_ring({"v"}, true);
  MPoly m = MPoly::monomial(v, make_monomial({-2}));
  EXPECT_EQ(m.euler_derive(0), MPoly::monomial(v, make_monomial({-2}), -2));
}

TEST(MPoly, SubstituteSumOfSquares) {
  auto t = make_ring({"t2"});
  auto x = xring();
  MPoly sq = parse_poly(x, "x1^2 + x2^2 + x3^2 + x4^2");
  std::vector<MPoly> img{sq};
  EXPECT_EQ(MPoly::variable(t, 0).substitute(img), sq);
  MPoly q = parse_poly(t, "t2^2").substitute(img);
  std::vector<Rat> pt{1, 2, 3, 5};
  EXPECT_EQ(q.evaluate(pt), 1521);
}

TEST(MPoly, SubstituteIdentity) {
  std::mt19937 gen(7);
  auto r = xring();
  MPoly p = random_poly(r, gen, 12, 4);
  std::vector<MPoly> id;
  for (std::size_t i = 0; i < 4; ++i) id.push_back(MPoly::variable(r, i));
  EXPECT_EQ(p.substitute(id), p);
}

TEST(MPoly, LaurentSubstituteNeedsMonomialImages) {
  auto v = make_ring({"v"}, true);
  auto w = make_ring({"w"}, true);
  MPoly p = MPoly::monomial(v, make_monomial({-3}), 2);
  std::vector<MPoly> img{MPoly::monomial(w, make_monomial({2}))};
  EXPECT_EQ(p.substitute(img), MPoly::monomial(w, make_monomial({-6}), 2));
  std::vector<MPoly> bad{parse_poly(make_ring({"w"}, true), "w + 1")};
  EXPECT_THROW(p.substitute(bad), std::domain_error);
}

TEST(MPoly, DivideExact) {
  auto r = xring();
  MPoly a = parse_poly(r, "x1^2 - x2^2 + 3*x3");
  MPoly b = parse_poly(r, "x1 + 2/3*x4 - 1");
  EXPECT_EQ(divide_exact(a * b, b), a);
  EXPECT_THROW(divide_exact(a * b + MPoly::constant(r, 1), b), std::domain_error);
  auto v = make_ring({"v"}, true);
  MPoly w = MPoly::monomial(v, make_monomial({2})) - MPoly::monomial(v, make_monomial({-2}));
  MPoly u = MPoly::monomial(v, make_monomial({1})) + MPoly::monomial(v, make_monomial({-3}), 4);
  EXPECT_EQ(divide_exact(w * u, w), u);
}

TEST(MPoly, SplitAndSpecialize) {
  auto r = make_ring({"t", "mu", "nu"});
  MPoly p = parse_poly(r, "t^2*mu + 3*t*mu + nu - 2");
  auto parts = p.split_by({1, 2});
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts.at(make_monomial({0, 1, 0})), parse_poly(r, "t^2 + 3*t"));
  EXPECT_EQ(p.specialize(std::map<std::string, Rat>{{"mu", rat(1, 2)}, {"nu", 2}}), parse_poly(r, "1/2*t^2 + 3/2*t"));
}

TEST(MPoly, RingAxiomsRandomized) {
  std::mt19937 gen(2024);
  auto r = xring();
  for (int trial = 0; trial < 25; ++trial) {
    MPoly p = random_poly(r, gen, 6, 3);
    MPoly q = random_poly(r, gen, 5, 3);
    MPoly s = random_poly(r, gen, 4, 3);
    EXPECT_EQ((p * q) * s, p * (q * s));
    EXPECT_EQ(p * (q + s), p * q + p * s);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ((p + q) - q, p);
  }
}

TEST(MPoly, LeibnizRandomized) {
  std::mt19937 gen(99);
  auto r = xring();
  auto lr = make_ring({"v1", "v2", "v3", "v4"}, true);
  for (int trial = 0; trial < 25; ++trial) {
    MPoly p = random_poly(r, gen, 6, 3);
    MPoly q = random_poly(r, gen, 6, 3);
    std::size_t i = static_cast<std::size_t>(trial % 4);
    EXPECT_EQ((p * q).derive(i), p * q.derive(i) + q * p.derive(i));
    MPoly a = random_poly(lr, gen, 6, 3, true);
    MPoly b = random_poly(lr, gen, 6, 3, true);
    EXPECT_EQ((a * b).euler_derive(i), a * b.euler_derive(i) + b * a.euler_derive(i));
  }
}

TEST(MPoly, ChainRuleRandomized) {
  std::mt19937 gen(5);
  auto u = make_ring({"u1", "u2", "u3"});
  auto w = xring();
  for (int trial = 0; trial < 10; ++trial) {
    MPoly p = random_poly(u, gen, 5, 3);
    std::vector<MPoly> a{random_poly(w, gen, 3, 2), random_poly(w, gen, 3, 2), random_poly(w, gen, 3, 2)};
    MPoly composed = p.substitute(a);
    for (std::size_t k = 0; k < 4; ++k) {
      MPoly rhs(w);
      for (std::size_t j = 0; j < 3; ++j) rhs += p.derive(j).substitute(a) * a[j].derive(k);
      EXPECT_EQ(composed.derive(k), rhs);
    }
  }
}

TEST(MPoly, EvaluateAndString) {
  auto r = xring();
  MPoly p = parse_poly(r, "x1^2 - 1/2*x2*x3 + 4");
  std::vector<Rat> pt{1, 2, 3, 5};
  EXPECT_EQ(p.evaluate(pt), 2);
  EXPECT_EQ(p.to_string(), "x1^2 - 1/2*x2*x3 + 4");
  EXPECT_EQ(MPoly(r).to_string(), "0");
}

TEST(Parse, RejectsMalformed) {
  auto r = xring();
  EXPECT_THROW(parse_poly(r, "x1 +"), std::invalid_argument);
  EXPECT_THROW(parse_poly(r, "x1 / x2"), std::invalid_argument);
  EXPECT_THROW(parse_poly(r, "y7"), std::invalid_argument);
  EXPECT_EQ(parse_poly(r, "mu*x1", {{"mu", rat(1, 3)}}), parse_poly(r, "1/3*x1"));
}

TEST(DiffOp, ApplyBasics) {
  auto t = make_ring({"t2", "t6"});
  DiffOp op(t, 2);
  op.add_second(0, 0, MPoly::variable(t, 0));
  EXPECT_EQ(op.apply(parse_poly(t, "t2^3")), parse_poly(t, "6*t2^2"));
  EXPECT_TRUE(op.apply(MPoly::constant(t, 1)).is_zero());
  EXPECT_EQ(op.order(), 2);
  EXPECT_THROW(op.apply(parse_poly(xring(), "x1")), std::invalid_argument);
}

TEST(DiffOp, CompositionMatchesSequentialApply) {
  std::mt19937 gen(11);
  auto t = make_ring({"a", "b"});
  DiffOp p(t, 2);
  p.add_second(0, 1, random_poly(t, gen, 3, 2));
  p.add_first(0, random_poly(t, gen, 3, 2));
  DiffOp q(t, 2);
  q.add_second(1, 1, random_poly(t, gen, 3, 2));
  q.add_zero(random_poly(t, gen, 2, 1));
  for (int trial = 0; trial < 5; ++trial) {
    MPoly f = random_poly(t, gen, 5, 4);
    EXPECT_EQ(p.compose(q).apply(f), p.apply(q.apply(f)));
    EXPECT_EQ(p.commutator(q).apply(f), p.apply(q.apply(f)) - q.apply(p.apply(f)));
  }
}

TEST(Linalg, IdentityAndSingular) {
  auto id = identity_matrix(3);
  RatVector b{1, rat(2, 3), -4};
  auto s = solve_linear(id, b);
  ASSERT_EQ(s.status, SolveStatus::unique);
  EXPECT_EQ(s.x, b);

  RatMatrix sing{{1, 2}, {2, 4}};
  EXPECT_EQ(solve_linear(sing, {3, 6}).status, SolveStatus::underdetermined);
  EXPECT_EQ(solve_linear(sing, {3, 7}).status, SolveStatus::inconsistent);
}

TEST(Linalg, HilbertSystem) {
  RatMatrix h(5, RatVector(5));
  RatVector b(5, Rat(0));
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      h[i][j] = rat(1, i + j + 1);
      b[i] += h[i][j];
    }
  }
  auto s = solve_linear(h, b);
  ASSERT_EQ(s.status, SolveStatus::unique);
  for (const auto& v : s.x) EXPECT_EQ(v, 1);
}

TEST(Linalg, ResidualRandomized) {
  std::mt19937 gen(3);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix a(6, RatVector(4));
    RatVector x(4);
    for (auto& v : x) v = rat(d(gen), 7);
    for (auto& row : a) {
      for (auto& v : row) v = rat(d(gen), 3);
    }
    RatVector b = mat_vec(a, x);
    auto s = solve_linear(a, b);
    if (s.status != SolveStatus::unique) continue;
    RatVector res = mat_vec(a, s.x);
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(res[i] - b[i], 0);
  }
}

TEST(Linalg, InverseAndDeterminant) {
  RatMatrix a{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  EXPECT_EQ(mat_mul(a, mat_inverse(a)), identity_matrix(3));
  EXPECT_EQ(mat_det(a), 18);
  EXPECT_THROW(mat_inverse(RatMatrix{{1, 1}, {1, 1}}), std::domain_error);
}

TEST(Linalg, Det4) {
  auto t = make_ring({"t2", "t6", "t8", "t12"});
  PolyMatrix4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = MPoly::constant(t, i == j ? 1 : 0);
  }
  EXPECT_EQ(det4(m), MPoly::constant(t, 1));
  for (std::size_t i = 0; i < 4; ++i) m[i][i] = MPoly::variable(t, i);
  EXPECT_EQ(det4(m), parse_poly(t, "t2*t6*t8*t12"));
  m[1] = m[0];
  EXPECT_TRUE(det4(m).is_zero());
}
