#include "orbitforge/reference.hpp"

#include "orbitforge/parse.hpp"

namespace orbitforge::reference {

namespace {

const char* const kRationalTau6 =
    "1/6*(x1^4*x2^2 + x1^4*x3^2 + x1^4*x4^2 + x1^2*x2^4 - 3*x1^2*x2^2*x3^2 - 3*x1^2*x2^2*x4^2"
    " + x1^2*x3^4 - 3*x1^2*x3^2*x4^2 + x1^2*x4^4 + x2^4*x3^2 + x2^4*x4^2 + x2^2*x3^4"
    " - 3*x2^2*x3^2*x4^2 + x2^2*x4^4 + x3^4*x4^2 + x3^2*x4^4)";

const char* const kRationalTau8 =
    "1/12*(x1^4*x2^4 - x1^4*x2^2*x3^2 - x1^4*x2^2*x4^2 + x1^4*x3^4 - x1^4*x3^2*x4^2 + x1^4*x4^4"
    " - x1^2*x2^4*x3^2 - x1^2*x2^4*x4^2 - x1^2*x2^2*x3^4 + 6*x1^2*x2^2*x3^2*x4^2 - x1^2*x2^2*x4^4"
    " - x1^2*x3^4*x4^2 - x1^2*x3^2*x4^4 + x2^4*x3^4 - x2^4*x3^2*x4^2 + x2^4*x4^4"
    " - x2^2*x3^4*x4^2 - x2^2*x3^2*x4^4 + x3^4*x4^4)";

const char* const kRationalTau12 =
    "1/72*(x1^2*x2^2 + x1^2*x3^2 - 2*x1^2*x4^2 - 2*x2^2*x3^2 + x2^2*x4^2 + x3^2*x4^2)"
    "*(x1^2*x2^2 - 2*x1^2*x3^2 + x1^2*x4^2 + x2^2*x3^2 - 2*x2^2*x4^2 + x3^2*x4^2)"
    "*(2*x1^2*x2^2 - x1^2*x3^2 - x1^2*x4^2 - x2^2*x3^2 - x2^2*x4^2 + 2*x3^2*x4^2)";

const char* const kRationalP2 =
    "-192*t12^2 + 256*t8^3 + 144*t6^2*t12 - 27*t6^4 - 192*t2*t6*t8^2 + 48*t2^2*t8*t12"
    " + 30*t2^2*t6^2*t8 - 12*t2^3*t6*t12 + 1/2*t2^3*t6^3 + t2^4*t8^2 - 1/2*t2^5*t6*t8"
    " + 1/6*t2^6*t12";

const char* const kTrigP1 =
    "-1728*t1^6 -1728*t1^5*t2 -432*t1^4*t2^2 +32*t1^3*t2^3 +16*t1^2*t2^4 +20736*t1^5 "
    "+34560*t1^4*t2 +10368*t1^4*t3 -864*t1^4*t4 +18432*t1^3*t2^2 +8640*t1^3*t2*t3 "
    "-576*t1^3*t2*t4 +432*t1^3*t3^2 +2976*t1^2*t2^3 +1728*t1^2*t2^2*t3 -72*t1^2*t2^2*t4 "
    "+216*t1^2*t2*t3^2 -224*t1*t2^4 -96*t1*t2^3*t3 +8*t1*t2^3*t4 -64*t2^5 -32*t2^4*t3 "
    "-4*t2^3*t3^2 +103680*t1^4 +6912*t1^3*t2 -34560*t1^3*t3 +1728*t1^3*t4 -88128*t1^2*t2^2 "
    "-79488*t1^2*t2*t3 +5184*t1^2*t2*t4 -18144*t1^2*t3^2 +2592*t1^2*t3*t4 -108*t1^2*t4^2 "
    "-45888*t1*t2^3 -43200*t1*t2^2*t3 +2592*t1*t2^2*t4 -13392*t1*t2*t3^2 +1296*t1*t2*t3*t4 "
    "-36*t1*t2*t4^2 -1296*t1*t3^3 +108*t1*t3^2*t4 -6384*t2^4 -6592*t2^3*t3 +328*t2^3*t4 "
    "-2520*t2^2*t3^2 +144*t2^2*t3*t4 +t2^2*t4^2 -432*t2*t3^3 +18*t2*t3^2*t4 -27*t3^4 "
    "-774144*t1^3 -1465344*t1^2*t2 -663552*t1^2*t3 +62208*t1^2*t4 -787968*t1*t2^2 "
    "-566784*t1*t2*t3 +48384*t1*t2*t4 -103680*t1*t3^2 +17280*t1*t3*t4 -864*t1*t4^2 "
    "-129024*t2^3 -119808*t2^2*t3 +9024*t2^2*t4 -36288*t2*t3^2 +4608*t2*t3*t4 -192*t2*t4^2 "
    "-3456*t3^3 +432*t3^2*t4 -4*t4^3 -5308416*t1^2 -4866048*t1*t2 -1990656*t1*t3 "
    "+221184*t1*t4 -1096704*t2^2 -774144*t2*t3 +78336*t2*t4 -138240*t3^2 +27648*t3*t4 "
    "-1728*t4^2 -10616832*t1 -4423680*t2 -1769472*t3 +221184*t4 -7077888 ";

const char* const kTrigP2 =
    "-16*t1^5 +48*t1^3*t2 +112*t1^3*t3 -4*t1^3*t4 +t1^2*t3^2 +4608*t1^3 +1728*t1^2*t2 "
    "+384*t1^2*t3 -144*t1^2*t4 -216*t1*t2*t3 -192*t1*t3^2 +18*t1*t3*t4 -4*t3^3 -18432*t1^2 "
    "-20736*t1*t2 -14976*t1*t3 +1728*t1*t4 -3888*t2^2 -5184*t2*t3 +648*t2*t4 -1728*t3^2 "
    "+432*t3*t4 -27*t4^2 -110592*t1 -41472*t2 -27648*t3 +3456*t4 -110592 ";

const char* const kTrigN1 =
    "1728*t1^6 +1728*t1^5*t2 +432*t1^4*t2^2 -8*t1^3*t2^3 -8*t1^2*t2^4 -20736*t1^5 "
    "-34560*t1^4*t2 -10368*t1^4*t3 +864*t1^4*t4 -19296*t1^3*t2^2 -8640*t1^3*t2*t3 "
    "+504*t1^3*t2*t4 -432*t1^3*t3^2 -3456*t1^2*t2^3 -1728*t1^2*t2^2*t3 +60*t1^2*t2^2*t4 "
    "-216*t1^2*t2*t3^2 +88*t1*t2^4 +24*t1*t2^3*t3 -2*t1*t2^3*t4 +48*t2^5 +16*t2^4*t3 "
    "+t2^3*t3^2 -103680*t1^4 +34560*t1^3*t3 +96192*t1^2*t2^2 +79488*t1^2*t2*t3 "
    "-4176*t1^2*t2*t4 +18144*t1^2*t3^2 -2592*t1^2*t3*t4 +72*t1^2*t4^2 +50016*t1*t2^3 "
    "+45792*t1*t2^2*t3 -2496*t1*t2^2*t4 +13392*t1*t2*t3^2 -1080*t1*t2*t3*t4 +18*t1*t2*t4^2 "
    "+1296*t1*t3^3 -108*t1*t3^2*t4 +6912*t2^4 +7072*t2^3*t3 -352*t2^3*t4 +2628*t2^2*t3^2 "
    "-120*t2^2*t3*t4 +432*t2*t3^3 -9*t2*t3^2*t4 +27*t3^4 +774144*t1^3 +1423872*t1^2*t2 "
    "+663552*t1^2*t3 -72576*t1^2*t4 +785664*t1*t2^2 +546048*t1*t2*t3 -52992*t1*t2*t4 "
    "+103680*t1*t3^2 -22464*t1*t3*t4 +1584*t1*t4^2 +134208*t2^3 +120960*t2^2*t3 -9936*t2^2*t4 "
    "+35424*t2*t3^2 -5184*t2*t3*t4 +396*t2*t4^2 +3456*t3^3 -648*t3^2*t4 +72*t3*t4^2 +t4^3 "
    "+5308416*t1^2 +4534272*t1*t2 +1990656*t1*t3 -304128*t1*t4 +1022976*t2^2 +718848*t2*t3 "
    "-96768*t2*t4 +138240*t3^2 -41472*t3*t4 +4032*t4^2 +10616832*t1 +3981312*t2 +1769472*t3 "
    "-331776*t4 +7077888 ";

const char* const kTrigN2 =
    "12*t1^5 -4*t1^4*t2 +288*t1^4 +84*t1^3*t2 -100*t1^3*t3 +t1^3*t4 +24*t1^2*t2*t3 -9216*t1^3 "
    "-3600*t1^2*t2 -1584*t1^2*t3 +252*t1^2*t4 -180*t1*t2*t3 +180*t1*t3^2 -9*t1*t3*t4 "
    "-36*t2*t3^2 +t3^3 +34560*t1^2 +31104*t1*t2 +25920*t1*t3 -2592*t1*t4 +3888*t2^2 "
    "+7776*t2*t3 -648*t2*t4 +3168*t3^2 -648*t3*t4 +27*t4^2 +165888*t1 +41472*t2 +41472*t3 "
    "-3456*t4 +110592 ";

const char* const kTrigA[4][4] = {
    {"-t1^2 + 12*t1 + 6*t2 + t3 + 48",
     "-t1*t2 + 12*t1 + 3*t3",
     "12*t1^2 + 4*t1*t2 - 3/2*t1*t3 - 96*t1 - 42*t2 - 24*t3 + 3/2*t4 - 288",
     "4*t1*t2 - 2*t1*t4 + 2*t2*t3 - 48*t1 - 12*t3"},
    {nullptr,
     "12*t1^2 - 2*t2^2 - 96*t1 - 48*t2 - 24*t3 + 2*t4 - 192",
     "-24*t1^2 - 4*t1*t2 + 3*t1*t3 - 2*t2*t3 + 240*t1 + 108*t2 + 60*t3 - 9*t4 + 576",
     "-24*t1^3 - 4*t1^2*t2 + 96*t1^2 + 104*t1*t2 + 72*t1*t3 - 6*t1*t4 + 12*t2^2 + 8*t2*t3"
     " - 3*t2*t4 + 3*t3^2 + 1536*t1 + 480*t2 + 288*t3 - 48*t4 + 2304"},
    {nullptr, nullptr,
     "12*t1^3 + 4*t1^2*t2 - 96*t1^2 - 60*t1*t2 - 36*t1*t3 + t1*t4 - 4*t2*t3 - 3*t3^2"
     " - 384*t1 - 48*t2 - 48*t3 + 12*t4",
     "-16*t1^2*t2 + 2*t1*t2*t3 + 96*t1^2 + 144*t1*t2 - 12*t1*t3 - 8*t1*t4 + 72*t2^2"
     " + 32*t2*t3 - 6*t2*t4 - 4*t3*t4 - 960*t1 - 48*t2 - 240*t3 + 36*t4 - 2304"},
    {nullptr, nullptr, nullptr,
     "9216 + 2880*t1*t2 + 576*t1*t3 + 512*t2*t3 + 16*t1*t4 - 24*t2*t4 - 96*t1^2*t2"
     " + 16*t3*t4 + 2*t2*t3^2 - 8*t1^2*t4 + 48*t1*t2^2 - 16*t1^3*t2 + 7680*t1 + 6144*t2"
     " + 1152*t3 + 96*t4 + 1344*t1^2 + 864*t2^2 - 192*t1^3 + 24*t3^2 - 6*t4^2"
     " + 48*t1*t2*t3 - 4*t1*t2*t4"},
};

const char* const kTrigB[4] = {
    "-t1 - 24*mu - (5*mu + 6*nu)*t1",
    "-2*t2 - 48*nu - 6*mu*t1 - (6*mu + 10*nu)*t2",
    "-3*t3 - 24*(mu + nu)*t1 - 12*mu*t2 - 3*(3*mu + 4*nu)*t3",
    "-6*t4 + 576*nu + 24*(mu + 8*nu)*t1 - 24*(mu - 4*nu)*t2 + 48*nu*t3 - 6*(2*mu + 3*nu)*t4"
    " - 24*nu*t1^2 - 4*mu*t1*t2",
};

// minus the interaction vector
const char* const kTrigMinusC[4] = {
    "24*mu + (5*mu + 6*nu)*t1",
    "48*nu + 6*mu*t1 + 2*(3*mu + 5*nu)*t2",
    "24*(mu + nu)*t1 + 12*mu*t2 + 3*(3*mu + 4*nu)*t3",
    "-576*nu - 24*(mu + 8*nu)*t1 + 24*(mu - 4*nu)*t2 - 48*nu*t3 + 6*(2*mu + 3*nu)*t4"
    " + 24*nu*t1^2 + 4*mu*t1*t2",
};

const char* const kTrigMinusG[4] = {"t1", "2*t2", "3*t3", "6*t4"};

// rational operator; cross derivatives appear once
const char* const kRationalSecond[4][4] = {
    {"4*t2", "24*t6", "32*t8", "48*t12"},
    {nullptr, "2/3*t2*(t2*t6 + 10*t8)", "8/3*(t2^2*t8 + 6*t12)", "4*(t2^2*t12 + 8*t8^2)"},
    {nullptr, nullptr, "2*(t2*t12 + 2*t6*t8)", "4*(2*t2*t8^2 + 3*t6*t12)"},
    {nullptr, nullptr, nullptr, "6*t8*(t2*t12 + 2*t6*t8)"},
};

const char* const kRationalFirst[4] = {
    "-4*(omega*t2 - 2*(6*nu + 6*mu + 1))",
    "-(12*omega*t6 - t2^2*(4*nu + 2*mu + 1))",
    "-4*(4*omega*t8 - t6*(1 + 3*nu))",
    "-4*(6*omega*t12 - t2*t8*(2 + 3*nu))",
};

const char* const kRationalMetric[4][4] = {
    {"4*t2", "12*t6", "16*t8", "24*t12"},
    {nullptr, "2/3*t2*(t2*t6 + 10*t8)", "4/3*(t2^2*t8 + 6*t12)", "2*(t2^2*t12 + 8*t8^2)"},
    {nullptr, nullptr, "2*(t2*t12 + 2*t6*t8)", "2*(2*t2*t8^2 + 3*t6*t12)"},
    {nullptr, nullptr, nullptr, "6*t8*(t2*t12 + 2*t6*t8)"},
};

const char* const kRationalG[4] = {"8", "t2^2", "t6", "2*t2*t6"};

const char* const kRationalMinusC[4] = {
    "4*(omega*t2 - 12*(nu + mu))",
    "2*(6*omega*t6 - (2*nu + mu)*t2^2)",
    "4*(4*omega*t8 - 3*nu*t6)",
    "12*(2*omega*t12 - nu*t2*t8)",
};

MPoly tau_poly(Model m, const char* text) { return parse_poly(tau_ring(m), text); }

}  // namespace

std::array<MPoly, 4> rational_tau() {
  const RingPtr& x = coordinate_ring(Model::rational);
  return {parse_poly(x, "x1^2 + x2^2 + x3^2 + x4^2"), parse_poly(x, kRationalTau6), parse_poly(x, kRationalTau8),
          parse_poly(x, kRationalTau12)};
}

const RingPtr& cosine_ring() {
  static const RingPtr r = make_ring({"h1", "h2", "h3", "h4", "c1", "c2", "c3", "c4", "k1", "k2", "k3", "k4"});
  return r;
}

std::array<MPoly, 4> trig_tau_cosine() {
  const RingPtr& r = cosine_ring();
  const char* pairs = "c1*c2 + c1*c3 + c1*c4 + c2*c3 + c2*c4 + c3*c4";
  MPoly t1 = parse_poly(r, "2*(8*h1*h2*h3*h4 + c1 + c2 + c3 + c4)");
  MPoly t2 = parse_poly(r, std::string("4*(") + pairs + ")");
  MPoly t3 = parse_poly(r,
                        "8*(2*h1*h2*h3*k4 + 2*h1*h2*k3*h4 + 2*h1*k2*h3*h4 + 2*k1*h2*h3*h4"
                        " + c1*c2*c3 + c1*c2*c4 + c1*c3*c4 + c2*c3*c4)");
  MPoly t4 = parse_poly(r, std::string("16*(c1^2*c2*c3 + c1^2*c2*c4 + c1^2*c3*c4 + c1*c2^2*c3 + c1*c2^2*c4"
                                       " + c1*c2*c3^2 + c1*c2*c4^2 + c1*c3^2*c4 + c1*c3*c4^2 + c2^2*c3*c4"
                                       " + c2*c3^2*c4 + c2*c3*c4^2 - (") +
                               pairs + "))");
  return {t1, t2, t3, t4};
}

std::vector<MPoly> cosine_images() {
  const RingPtr& v = coordinate_ring(Model::trig);
  std::vector<MPoly> img;
  for (int k : {2, 4, 6}) {
    for (std::size_t j = 0; j < 4; ++j) {
      Monomial up;
      up.e[j] = static_cast<std::int8_t>(k);
      Monomial down;
      down.e[j] = static_cast<std::int8_t>(-k);
      img.push_back(MPoly::monomial(v, up, rat(1, 2)) + MPoly::monomial(v, down, rat(1, 2)));
    }
  }
  return img;
}

MPoly P1(Model m) { return m == Model::rational ? tau_poly(m, "-3*t12^2 + 4*t8^3") : tau_poly(m, kTrigP1); }

MPoly P2(Model m) { return m == Model::rational ? tau_poly(m, kRationalP2) : tau_poly(m, kTrigP2); }

MPoly potential_numerator_long(Model m) {
  return m == Model::rational ? tau_poly(m, "-9*(t2*t12 - 2*t6*t8)*t8") : tau_poly(m, kTrigN1);
}

MPoly potential_numerator_short(Model m) {
  return m == Model::rational
             ? tau_poly(m, "-1/8*(t2^4 - 48*t2*t6 + 192*t8)*(t2^3*t8 - 3*t2*(t6^2 + 8*t12) + 48*t6*t8)")
             : tau_poly(m, kTrigN2);
}

DiffOp algebraic_operator(Model m) {
  const RingPtr& r = tau_ring(m);
  DiffOp op(r, 4);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a; b < 4; ++b) {
      if (m == Model::rational) {
        op.add_second(a, b, parse_poly(r, kRationalSecond[a][b]));
      } else {
        MPoly c = parse_poly(r, kTrigA[a][b]);
        op.add_second(a, b, a == b ? c : c * Rat(2));
      }
    }
    op.add_first(a, parse_poly(r, m == Model::rational ? kRationalFirst[a] : kTrigB[a]));
  }
  return op;
}

std::array<std::array<MPoly, 4>, 4> metric(Model m) {
  const RingPtr& r = tau_ring(m);
  std::array<std::array<MPoly, 4>, 4> g;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a; b < 4; ++b) {
      g[a][b] = parse_poly(r, m == Model::rational ? kRationalMetric[a][b] : kTrigA[a][b]);
      g[b][a] = g[a][b];
    }
  }
  return g;
}

std::array<MPoly, 4> gvec(Model m) {
  std::array<MPoly, 4> g;
  for (std::size_t a = 0; a < 4; ++a) {
    g[a] = m == Model::rational ? tau_poly(m, kRationalG[a]) : -tau_poly(m, kTrigMinusG[a]);
  }
  return g;
}

std::array<MPoly, 4> cvec(Model m) {
  std::array<MPoly, 4> c;
  for (std::size_t a = 0; a < 4; ++a) {
    c[a] = -tau_poly(m, m == Model::rational ? kRationalMinusC[a] : kTrigMinusC[a]);
  }
  return c;
}

MPoly ground_energy(Model m) {
  return m == Model::rational ? tau_poly(m, "2*omega*(1 + 6*mu + 6*nu)")
                              : tau_poly(m, "1/2*(14*nu^2 + 18*nu*mu + 7*mu^2)");
}

const std::vector<Eigenpair>& eigenfunctions(Model m) {
  static const std::vector<Eigenpair> rational{
      {"phi0", {0, 0, 0, 0}, 0, "1", "0"},
      {"phi1", {1, 0, 0, 0}, 1, "t2 - 2/omega*(6*mu + 6*nu + 1)", "-4*omega"},
      {"phi2_1", {2, 0, 0, 0}, 2,
       "t2^2 - 6/omega*(4*mu + 4*nu + 1)*t2 + 6/omega^2*(4*mu + 4*nu + 1)*(6*mu + 6*nu + 1)", "-8*omega"},
      {"phi2_2", {0, 1, 0, 0}, 2,
       "t6 - 1/(4*omega)*(2*mu + 4*nu + 1)*t2^2 + 3/(4*omega^2)*(2*mu + 4*nu + 1)*(4*mu + 4*nu + 1)*t2"
       " - 1/(2*omega^3)*(2*mu + 4*nu + 1)*(6*mu + 6*nu + 1)*(4*mu + 4*nu + 1)",
       "-12*omega"},
      {"phi2_3", {0, 0, 1, 0}, 2,
       "t8 - 1/omega*(3*nu + 1)*t6 + 1/(8*omega^2)*(3*nu + 1)*(2*mu + 4*nu + 1)*t2^2"
       " - 1/(4*omega^3)*(3*nu + 1)*(2*mu + 4*nu + 1)*(4*mu + 4*nu + 1)*t2"
       " + 1/(8*omega^4)*(3*nu + 1)*(2*mu + 4*nu + 1)*(6*mu + 6*nu + 1)*(4*mu + 4*nu + 1)",
       "-16*omega"},
  };
  static const std::vector<Eigenpair> trig{
      {"phi[0,0,0,0]", {0, 0, 0, 0}, 0, "1", "0"},
      {"phi[1,0,0,0]", {1, 0, 0, 0}, 1, "1 + 1/24*(1 + 6*nu + 5*mu)/mu*t1", "-(1 + 6*nu + 5*mu)"},
      {"phi[0,1,0,0]", {0, 1, 0, 0}, 2,
       "24*(3*mu^2 + mu*nu + 4*nu^2 + nu)/((4*nu + mu + 1)*(1 + 5*nu + 3*mu)) + 6*mu/(4*nu + mu + 1)*t1 + t2",
       "-2*(1 + 5*nu + 3*mu)"},
      {"phi[0,0,1,0]", {0, 0, 1, 0}, 2,
       "8*(6*mu^2 + 9*mu*nu + mu + 8*nu^2 + 3*nu)/((3*nu + 2*mu + 1)*(1 + 4*nu + 3*mu))"
       " + (6*mu^2 + 5*mu*nu + mu + 2*nu^2 + nu)/(mu*(3*nu + 2*mu + 1))*t1 + t2"
       " + 1/12*(3*mu + 1 + 2*nu)/mu*t3",
       "-3*(1 + 4*nu + 3*mu)"},
      {"phi[2,0,0,0]", {2, 0, 0, 0}, 2,
       "-8*(8*mu^3 - 15*mu^2 + 4*mu^2*nu - 32*mu*nu - 11*mu - 3 - 24*nu^2 - 18*nu)"
       "/((5*mu + 3 + 6*nu)*(2 + 6*nu + 5*mu))"
       " - 2*(8*mu^3 - 9*mu^2 + 4*mu^2*nu - 10*mu*nu - 9*mu - 6*nu - 2 - 4*nu^2)"
       "/((5*mu + 3 + 6*nu)*(1 + 3*mu))*t1 + t2"
       " + 1/3*(2*mu + 1 + nu)/(1 + 3*mu)*t3"
       " - 1/6*(2*mu^2 + mu*nu + 3*mu + 1 + nu)/(1 + 3*mu)*t1^2",
       "-2*(2 + 6*nu + 5*mu)"},
  };
  return m == Model::rational ? rational : trig;
}

std::string qes_potential_shift_polynomial() {
  return "a^2*t2^3 + 2*a*omega*t2^2 + 2*a*(2*k - gamma + 3*(4*mu + 4*nu + 1))*t2";
}

std::string qes_potential_shift_inverse() { return "2*gamma*(gamma - 12*mu - 12*nu - 1)"; }

}  // namespace orbitforge::reference
