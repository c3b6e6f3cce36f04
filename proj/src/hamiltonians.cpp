#include "orbitforge/hamiltonians.hpp"

#include "orbitforge/invariants.hpp"
#include "orbitforge/parse.hpp"
#include "orbitforge/reference.hpp"
#include "orbitforge/spectra.hpp"

#include <algorithm>
#include <utility>

namespace orbitforge {

std::map<std::string, Rat> ModelParams::bindings() const {
  return {{"mu", mu}, {"nu", nu}, {"omega", omega}, {"gl", gl()}, {"gs", gs()}};
}

DiffOp algebraic_rational() { return reference::algebraic_operator(Model::rational); }
DiffOp algebraic_trig() { return reference::algebraic_operator(Model::trig); }

DiffOp algebraic_operator(Model m) { return m == Model::rational ? algebraic_rational() : algebraic_trig(); }

DiffOp algebraic_operator(Model m, const ModelParams& p) { return algebraic_operator(m).specialize(p.bindings()); }

namespace {

const char* const kRatNames[4] = {"t2", "t6", "t8", "t12"};
const char* const kTrigNames[4] = {"t1", "t2", "t3", "t4"};

std::string tname(Model m, std::size_t a) { return m == Model::rational ? kRatNames[a] : kTrigNames[a]; }

// d/dx_j for rat, v_j d/dv_j for trig
MPoly dcoord(Model m, const MPoly& p, std::size_t j) { return m == Model::rational ? p.derive(j) : p.euler_derive(j); }

Rat laplacian_scale(Model m) { return m == Model::rational ? Rat(1) : rat(-1, 16); }

struct Factors {
  MPoly fl, fs;
  std::array<MPoly, 4> dfl, dfs;
};

Factors factors(Model m) {
  const GroundStateFactors& g = ground_state_factors(m);
  Factors f;
  f.fl = m == Model::rational ? g.dpm : g.long_product;
  f.fs = m == Model::rational ? g.dd0 : g.short_product;
  for (std::size_t j = 0; j < 4; ++j) {
    f.dfl[j] = dcoord(m, f.fl, j);
    f.dfs[j] = dcoord(m, f.fs, j);
  }
  return f;
}

MPoly param(Model m, const char* name) { return MPoly::variable(coordinate_ring(m), name); }

// Sum of num / (F_L^i F_S^j) terms; vanishing is tested separately for each
// parameter monomial over its own common denominator.
class FractionSum {
 public:
  FractionSum(MPoly fl, MPoly fs) : fl_(std::move(fl)), fs_(std::move(fs)) {}

  void add(const MPoly& num, int i, int j) {
    std::vector<std::size_t> params = parameter_indices(num.ring());
    for (const auto& [pm, part] : num.split_by(params)) {
      auto& slot = groups_[pm][{i, j}];
      slot = slot.ring() ? slot + part : part;
    }
  }

  MPoly residual() const {
    MPoly total(fl_.ring());
    for (const auto& [pm, by_den] : groups_) {
      int imax = 0;
      int jmax = 0;
      for (const auto& [den, num] : by_den) {
        imax = std::max(imax, den.first);
        jmax = std::max(jmax, den.second);
      }
      MPoly s(fl_.ring());
      for (const auto& [den, num] : by_den) s += num * fl_.pow(imax - den.first) * fs_.pow(jmax - den.second);
      total += s.shift(pm);
    }
    return total;
  }

 private:
  MPoly fl_, fs_;
  std::map<Monomial, std::map<std::pair<int, int>, MPoly>, GradedLess> groups_;
};

std::vector<MPoly> cofactors(const MPoly& product, const std::vector<MPoly>& factors) {
  std::vector<MPoly> out;
  for (const auto& f : factors) out.push_back(divide_exact(product, f));
  return out;
}

MPoly sum_of_squares(const std::vector<MPoly>& ps, const RingPtr& r) {
  MPoly s(r);
  for (const auto& p : ps) s += p * p;
  return s;
}

}  // namespace

Report verify_gauge_rotation(Model m, const GaugeOptions& opt) {
  Report rep;
  rep.suite = "operator";
  const RingPtr& x = coordinate_ring(m);
  const auto& tau = invariants_in_coordinates(m);
  const Rat lambda = laplacian_scale(m);
  DiffOp op = algebraic_operator(m);

  std::array<std::array<MPoly, 4>, 4> dt;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t j = 0; j < 4; ++j) dt[a][j] = dcoord(m, tau[a], j);
  }

  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a; b < 4; ++b) {
      MPoly lhs(x);
      for (std::size_t j = 0; j < 4; ++j) lhs += dt[a][j] * dt[b][j];
      lhs *= lambda * (a == b ? 1 : 2);
      MPoly rhs = to_coordinates(op.second(a, b), m);
      rep.add(identity_check("A[" + tname(m, a) + "," + tname(m, b) + "]", rhs - lhs));
    }
  }

  Factors f = factors(m);
  MPoly mu = param(m, "mu");
  MPoly nu = param(m, "nu");
  MPoly omega = param(m, "omega");
  const std::vector<std::size_t> pidx = parameter_indices(x);
  for (std::size_t a = 0; a < 4; ++a) {
    MPoly base(x), by_nu(x), by_mu(x), by_omega(x);
    for (std::size_t j = 0; j < 4; ++j) {
      base += dcoord(m, dt[a][j], j);
      by_nu += f.dfl[j] * dt[a][j];
      by_mu += f.dfs[j] * dt[a][j];
      if (m == Model::rational) by_omega -= MPoly::variable(x, j) * dt[a][j];
    }
    base *= lambda;
    by_nu *= 2 * lambda;
    by_mu *= 2 * lambda;
    by_omega *= 2 * lambda;

    MPoly residual(x);
    for (const auto& [pm, part] : to_coordinates(op.first(a), m).split_by(pidx)) {
      MPoly key = MPoly::monomial(x, pm);
      if (key == MPoly::constant(x, Rat(1))) {
        residual += part - base;
        base = MPoly(x);
      } else if (key == nu) {
        residual += (part * f.fl - by_nu) * nu;
        by_nu = MPoly(x);
      } else if (key == mu) {
        residual += (part * f.fs - by_mu) * mu;
        by_mu = MPoly(x);
      } else if (key == omega) {
        residual += (part - by_omega) * omega;
        by_omega = MPoly(x);
      } else {
        residual += part * key;
      }
    }
    residual -= base + by_nu * nu + by_mu * mu + by_omega * omega;
    rep.add(identity_check("B[" + tname(m, a) + "]", residual));
  }

  // lambda sum_j (d_j L_j + L_j^2) - 2 (V - E0) with L_j = d_j log psi0
  const GroundStateFactors& g = ground_state_factors(m);
  FractionSum z(f.fl, f.fs);
  MPoly sll(x), sl2(x), sss(x), ss2(x), sls(x), slg(x), ssg(x);
  for (std::size_t j = 0; j < 4; ++j) {
    sll += dcoord(m, f.dfl[j], j);
    sl2 += f.dfl[j] * f.dfl[j];
    sss += dcoord(m, f.dfs[j], j);
    ss2 += f.dfs[j] * f.dfs[j];
    sls += f.dfl[j] * f.dfs[j];
    if (m == Model::rational) {
      MPoly gj = -(omega * MPoly::variable(x, j));
      slg += f.dfl[j] * gj;
      ssg += f.dfs[j] * gj;
    }
  }
  z.add((f.fl * sll - sl2) * nu * lambda, 2, 0);
  z.add((f.fs * sss - ss2) * mu * lambda, 0, 2);
  z.add(sl2 * nu * nu * lambda, 2, 0);
  z.add(ss2 * mu * mu * lambda, 0, 2);
  z.add(sls * nu * mu * (2 * lambda), 1, 1);
  if (m == Model::rational) {
    z.add(slg * nu * (2 * lambda), 1, 0);
    z.add(ssg * mu * (2 * lambda), 0, 1);
    // sum_j (G_jj + G_j^2) with G = -omega tau2 / 2, then -2 * omega^2 tau2 / 2
    z.add(omega * Rat(-4) * lambda + omega * omega * tau[0] * lambda - omega * omega * tau[0], 0, 0);
  }
  const Rat kappa = m == Model::rational ? Rat(1) : Rat(-1);
  MPoly gl = nu * nu - nu;
  MPoly gs = mu * mu - mu;
  z.add(sum_of_squares(cofactors(f.fl, g.long_factors), x) * gl * (-2 * kappa), 2, 0);
  z.add(sum_of_squares(cofactors(f.fs, g.short_factors), x) * gs * (-kappa), 0, 2);
  MPoly e0 = reference::ground_energy(m).rebase(x) + MPoly::constant(x, opt.e0_shift);
  z.add(e0 * Rat(2), 0, 0);
  Check c = identity_check("E0", z.residual());
  c.detail = (opt.e0_shift != 0 ? "E0 shifted by " + to_short_string(opt.e0_shift) + "; " : std::string()) +
             (c.pass ? "zero-order terms cancel" : c.detail);
  rep.add(std::move(c));
  return rep;
}

MetricDecomposition metric_decomposition(Model m) {
  DiffOp op = algebraic_operator(m);
  const RingPtr& t = tau_ring(m);
  MetricDecomposition md;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) md.gab[a][b] = a == b ? op.second(a, a) : op.second(a, b) * rat(1, 2);
  }
  md.det = det4(md.gab);
  std::array<MPoly, 4> ddet;
  for (std::size_t a = 0; a < 4; ++a) ddet[a] = md.det.derive(a);
  for (std::size_t b = 0; b < 4; ++b) {
    MPoly div(t), grad(t);
    for (std::size_t a = 0; a < 4; ++a) {
      div += md.gab[a][b].derive(a);
      grad += md.gab[a][b] * ddet[a];
    }
    // g^b = d_a g^{ab} - g^{ab} d_a det / (2 det)
    md.gvec[b] = div - divide_exact(grad, md.det * Rat(2));
    md.cvec[b] = op.first(b) - md.gvec[b];
  }
  return md;
}

Report verify_metric(Model m) {
  Report rep;
  rep.suite = "metric";
  const RingPtr& t = tau_ring(m);
  DiffOp op = algebraic_operator(m);
  MetricDecomposition md = metric_decomposition(m);
  auto published = reference::metric(m);
  bool entries = true;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) entries = entries && md.gab[a][b] == published[a][b];
  }
  rep.add(bool_check("metric entries", entries));
  rep.add(bool_check("det nonzero", !md.det.is_zero(), "det has " + std::to_string(md.det.size()) + " terms"));

  auto gpub = reference::gvec(m);
  auto cpub = reference::cvec(m);
  for (std::size_t b = 0; b < 4; ++b) {
    MPoly div(t), grad(t);
    for (std::size_t a = 0; a < 4; ++a) {
      div += md.gab[a][b].derive(a);
      grad += md.gab[a][b] * md.det.derive(a);
    }
    MPoly residual = md.det * gpub[b] * Rat(2) - (md.det * div * Rat(2) - grad);
    Check c = identity_check("g[" + tname(m, b) + "]", residual);
    if (!c.pass) c.detail = "derived g = " + md.gvec[b].to_string();
    rep.add(std::move(c));
  }
  for (std::size_t b = 0; b < 4; ++b) {
    Check c = identity_check("C[" + tname(m, b) + "]", cpub[b] - md.cvec[b]);
    if (!c.pass) c.detail = "derived C = " + md.cvec[b].to_string();
    rep.add(std::move(c));
  }
  DiffOp rebuilt(t, 4);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a; b < 4; ++b) rebuilt.add_second(a, b, a == b ? md.gab[a][a] : md.gab[a][b] * Rat(2));
    rebuilt.add_first(a, md.gvec[a] + md.cvec[a]);
  }
  rep.add(bool_check("operator rebuilt from (g^ab, g + C)", rebuilt == op));
  return rep;
}

std::array<Rat, 4> tau_point(Model m, const std::array<Rat, 4>& coords) {
  const auto& tau = invariants_in_coordinates(m);
  std::vector<Rat> pt(coordinate_ring(m)->size(), Rat(0));
  std::copy(coords.begin(), coords.end(), pt.begin());
  std::array<Rat, 4> out;
  for (std::size_t a = 0; a < 4; ++a) out[a] = tau[a].evaluate(pt);
  return out;
}

Rat riemann_spot_check(Model m, const std::array<Rat, 4>& tp) {
  std::vector<Rat> pt(tau_ring(m)->size(), Rat(0));
  std::copy(tp.begin(), tp.end(), pt.begin());
  return riemann_max(metric_decomposition(m).gab, pt);
}

Rat riemann_max(const PolyMatrix4& gab, const std::vector<Rat>& pt) {

  using Mat = RatMatrix;
  auto zero = [] { return Mat(4, RatVector(4, Rat(0))); };
  Mat G = zero();
  std::array<Mat, 4> dG;
  std::array<std::array<Mat, 4>, 4> ddG;
  for (std::size_t c = 0; c < 4; ++c) {
    dG[c] = zero();
    for (std::size_t d = 0; d < 4; ++d) ddG[c][d] = zero();
  }
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      const MPoly& e = gab[a][b];
      G[a][b] = e.evaluate(pt);
      for (std::size_t c = 0; c < 4; ++c) {
        MPoly ec = e.derive(c);
        dG[c][a][b] = ec.evaluate(pt);
        for (std::size_t d = 0; d < 4; ++d) ddG[c][d][a][b] = ec.derive(d).evaluate(pt);
      }
    }
  }
  if (mat_det(G) == 0) throw SingularMetric("metric is degenerate at the point");
  Mat g = mat_inverse(G);

  auto neg = [](Mat a) {
    for (auto& row : a) {
      for (auto& v : row) v = -v;
    }
    return a;
  };
  auto add = [](Mat a, const Mat& b) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) a[i][j] += b[i][j];
    }
    return a;
  };
  // derivatives of the covariant metric g = G^-1
  std::array<Mat, 4> dg;
  for (std::size_t c = 0; c < 4; ++c) dg[c] = neg(mat_mul(mat_mul(g, dG[c]), g));
  std::array<std::array<Mat, 4>, 4> ddg;
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t d = 0; d < 4; ++d) {
      Mat t1 = mat_mul(mat_mul(dg[d], dG[c]), g);
      Mat t2 = mat_mul(mat_mul(g, ddG[c][d]), g);
      Mat t3 = mat_mul(mat_mul(g, dG[c]), dg[d]);
      ddg[c][d] = neg(add(add(t1, t2), t3));
    }
  }

  // Gamma[a][b][c] and dGamma[e][a][b][c] = d_e Gamma^a_bc
  Rat gamma[4][4][4];
  Rat dgamma[4][4][4][4];
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      for (std::size_t c = 0; c < 4; ++c) {
        Rat s = 0;
        for (std::size_t e = 0; e < 4; ++e) s += G[a][e] * (dg[b][e][c] + dg[c][e][b] - dg[e][b][c]);
        gamma[a][b][c] = s / 2;
        for (std::size_t q = 0; q < 4; ++q) {
          Rat t = 0;
          for (std::size_t e = 0; e < 4; ++e) {
            t += dG[q][a][e] * (dg[b][e][c] + dg[c][e][b] - dg[e][b][c]);
            t += G[a][e] * (ddg[b][q][e][c] + ddg[c][q][e][b] - ddg[e][q][b][c]);
          }
          dgamma[q][a][b][c] = t / 2;
        }
      }
    }
  }
  Rat worst = 0;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      for (std::size_t c = 0; c < 4; ++c) {
        for (std::size_t d = 0; d < 4; ++d) {
          Rat r = dgamma[c][a][d][b] - dgamma[d][a][c][b];
          for (std::size_t e = 0; e < 4; ++e) r += gamma[a][c][e] * gamma[e][d][b] - gamma[a][d][e] * gamma[e][c][b];
          worst = std::max(worst, Rat(abs(r)));
        }
      }
    }
  }
  return worst;
}

Report verify_riemann(Model m) {
  Report rep;
  rep.suite = "riemann";
  std::vector<std::array<Rat, 4>> coords;
  if (m == Model::rational) {
    coords = {{Rat(1), Rat(2), Rat(3), Rat(5)}, {rat(1, 2), Rat(3), rat(5, 3), Rat(7)}, {Rat(-2), rat(7, 4), Rat(4), rat(11, 3)}};
  } else {
    coords = {{Rat(2), Rat(3), Rat(5), Rat(7)}, {rat(1, 2), Rat(3), rat(4, 3), Rat(5)}, {Rat(-3), rat(2, 7), rat(5, 2), Rat(6)}};
  }
  for (const auto& c : coords) {
    std::string where = "(" + to_short_string(c[0]) + "," + to_short_string(c[1]) + "," + to_short_string(c[2]) + "," +
                        to_short_string(c[3]) + ")";
    try {
      Rat r = riemann_spot_check(m, tau_point(m, c));
      rep.add(bool_check("R at image of " + where, r == 0, "max |R| = " + to_short_string(r)));
    } catch (const SingularMetric& e) {
      rep.add(bool_check("R at image of " + where, false, e.what()));
    }
  }
  std::array<Rat, 4> wall = m == Model::rational ? std::array<Rat, 4>{Rat(1), Rat(1), Rat(1), Rat(1)}
                                                 : std::array<Rat, 4>{Rat(1), Rat(1), Rat(1), Rat(1)};
  bool singular = false;
  try {
    riemann_spot_check(m, tau_point(m, wall));
  } catch (const SingularMetric&) {
    singular = true;
  }
  rep.add(bool_check("degenerate metric on a mirror is reported", singular));
  return rep;
}

Report verify_potential(Model m) {
  Report rep;
  rep.suite = "potential";
  const RingPtr& x = coordinate_ring(m);
  const GroundStateFactors& g = ground_state_factors(m);
  const MPoly& fl = g.long_product;
  const MPoly& fs = g.short_product;
  MPoly p1 = to_coordinates(reference::P1(m), m);
  MPoly p2 = to_coordinates(reference::P2(m), m);
  MPoly n1 = to_coordinates(reference::potential_numerator_long(m), m);
  MPoly n2 = to_coordinates(reference::potential_numerator_short(m), m);
  MPoly gl = MPoly::variable(x, "gl");
  MPoly gs = MPoly::variable(x, "gs");

  // rat: gl sum_long 1/l^2 = gl N_nu/P1 and (gs/2) sum_short 1/l^2 = gs N_mu/P2;
  // trig: V/beta^2 = -gl sum_long 1/b^2 - (gs/2) sum_short 1/b^2 = -gl N1/P1 - gs N2/(2 P2)
  MPoly long_sum = sum_of_squares(cofactors(fl, g.long_factors), x);
  MPoly short_sum = sum_of_squares(cofactors(fs, g.short_factors), x);
  MPoly long_res = long_sum * p1 - n1 * fl * fl;
  MPoly short_res = m == Model::rational ? short_sum * p2 * rat(1, 2) - n2 * fs * fs : short_sum * p2 - n2 * fs * fs;
  rep.add(identity_check("long-root potential", long_res * gl));
  rep.add(identity_check("short-root potential", short_res * gs));
  if (m == Model::rational) {
    MPoly omega = MPoly::variable(x, "omega");
    MPoly r2(x);
    for (std::size_t j = 0; j < 4; ++j) r2 += MPoly::variable(x, j).pow(2);
    rep.add(identity_check("oscillator potential", (r2 - invariants_in_coordinates(m)[0]) * omega * omega * rat(1, 2)));
  }
  rep.add(identity_check("full potential", long_res * gl + short_res * gs));
  return rep;
}

DiffOp particular_integral(Model m, int k, const std::array<int, 4>& grading) {
  if (k < 0) throw std::invalid_argument("particular integral needs k >= 0");
  const RingPtr& t = tau_ring(m);
  DiffOp j0 = DiffOp::euler(t, {Rat(grading[0]), Rat(grading[1]), Rat(grading[2]), Rat(grading[3])});
  DiffOp id = DiffOp::identity(t, 4);
  DiffOp out = j0;
  for (int j = 1; j <= k; ++j) out = out.compose(j0 - id * Rat(j));
  return out;
}

Report verify_particular_integral(Model m, int kmax) {
  Report rep;
  rep.suite = "particular-integral";
  const RingPtr& t = tau_ring(m);
  DiffOp h = algebraic_operator(m);
  for (int k = 0; k <= kmax; ++k) {
    DiffOp ip = particular_integral(m, k);
    DiffOp comm = h.commutator(ip);
    FlagBasis next = flag_basis(m, kMinimalGrading, k + 1);
    bool kills = true;
    bool spares = true;
    bool commutes = true;
    std::string detail;
    for (const Label& l : next.monomials) {
      MPoly p = MPoly::monomial(t, monomial_of(l));
      bool inside = grading(l, kMinimalGrading) <= k;
      bool zero = ip.apply(p).is_zero();
      if (inside && !zero) kills = false;
      if (!inside && zero) spares = false;
      if (inside && !comm.apply(p).is_zero()) {
        commutes = false;
        detail = "commutator survives on " + p.to_string();
      }
    }
    std::string ks = std::to_string(k);
    rep.add(bool_check("k=" + ks + " annihilates P_" + ks, kills));
    rep.add(bool_check("k=" + ks + " acts on every grading-" + std::to_string(k + 1) + " monomial", spares));
    rep.add(bool_check("k=" + ks + " [h, i_par] annihilates P_" + ks, commutes, detail));
  }
  return rep;
}

const RingPtr& qes_ring() {
  static const RingPtr r = make_ring({"t2", "t6", "t8", "t12"}, true);
  return r;
}

namespace {

DiffOp conjugated_rational(const ModelParams& p, const QesParams& q) {
  const RingPtr& r = qes_ring();
  DiffOp h = algebraic_operator(Model::rational, p).rebase(r);
  MPoly t2 = MPoly::variable(r, std::size_t{0});
  Monomial inv;
  inv.e[0] = -1;
  // u = d log chi / d tau2, w = chi'' / chi
  MPoly u = MPoly::monomial(r, inv, q.gamma) - t2 * (q.a / 2);
  MPoly inv2 = MPoly::monomial(r, inv + inv);
  MPoly w = inv2 * (-q.gamma) + MPoly::constant(r, -q.a / 2) + u * u;
  DiffOp out(r, 4);
  for (const auto& [d, c] : h.terms()) {
    out.add(d, c);
    int order = d.degree();
    if (order == 2) {
      std::vector<std::size_t> idx;
      for (std::size_t a = 0; a < 4; ++a) {
        for (int n = 0; n < d.e[a]; ++n) idx.push_back(a);
      }
      if (idx[0] == idx[1]) {
        if (idx[0] == 0) {
          out.add_first(0, c * u * Rat(2));
          out.add_zero(c * w);
        }
      } else {
        if (idx[0] == 0) out.add_first(idx[1], c * u);
        if (idx[1] == 0) out.add_first(idx[0], c * u);
      }
    } else if (order == 1 && d.e[0] == 1) {
      out.add_zero(c * u);
    }
  }
  return out;
}

}  // namespace

MPoly qes_potential_shift(const ModelParams& p, const QesParams& q, QesPotential kind, const Rat& scale) {
  const RingPtr& r = qes_ring();
  if (kind == QesPotential::printed) {
    std::map<std::string, Rat> b{{"a", q.a}, {"gamma", q.gamma}, {"k", Rat(q.k)}, {"mu", p.mu}, {"nu", p.nu},
                                 {"omega", p.omega}};
    MPoly poly = parse_poly(r, reference::qes_potential_shift_polynomial(), b);
    Monomial inv;
    inv.e[0] = -1;
    Rat c = parse_poly(r, reference::qes_potential_shift_inverse(), b).constant_term();
    return poly + MPoly::monomial(r, inv, c);
  }
  // the zero-order part of chi^-1 h chi, without its constant, with the
  // tau2 coefficient offset so that -4 a k tau2^(k+1) from the first-order
  // part cancels on tau2^k
  MPoly z = conjugated_rational(p, q).zero_order();
  z -= MPoly::constant(r, z.constant_term());
  z -= MPoly::variable(r, std::size_t{0}) * (4 * q.a * q.k);
  return z * (1 / scale);
}

QesResult qes_operator(const ModelParams& p, const QesParams& q, const QesConvention& conv) {
  if (q.k < 0) throw std::invalid_argument("QES degree k must be non-negative");
  const RingPtr& r = qes_ring();
  QesResult res;
  MPoly dv = qes_potential_shift(p, q, conv.potential, conv.scale);
  res.op = conjugated_rational(p, q);
  res.op.add_zero(dv * (-conv.scale));

  res.polynomial = true;
  for (const auto& [d, c] : res.op.terms()) res.polynomial = res.polynomial && c.is_polynomial();

  auto in_sector = [&](const MPoly& img, int deg, bool tau2_only) {
    for (const auto& [mono, c] : img.terms()) {
      if (!mono.nonnegative()) return false;
      if (tau2_only) {
        for (std::size_t a = 1; a < 4; ++a) {
          if (mono.e[a] != 0) return false;
        }
        if (mono.e[0] > deg) return false;
      } else if (grading(label_of(mono), kMinimalGrading) > deg) {
        return false;
      }
    }
    return true;
  };

  res.tau2_closed = true;
  res.restriction.assign(q.k + 1, RatVector(q.k + 1, Rat(0)));
  for (int j = 0; j <= q.k; ++j) {
    Monomial mj;
    mj.e[0] = static_cast<std::int8_t>(j);
    MPoly img = res.op.apply(MPoly::monomial(r, mj));
    if (!in_sector(img, q.k, true)) {
      res.tau2_closed = false;
      if (res.leak.empty()) res.leak = "image of t2^" + std::to_string(j) + " = " + img.to_string();
      continue;
    }
    for (const auto& [mono, c] : img.terms()) res.restriction[mono.e[0]][j] = c;
  }
  res.flag_closed = true;
  for (const Label& l : flag_basis(Model::rational, kMinimalGrading, q.k).monomials) {
    if (!in_sector(res.op.apply(MPoly::monomial(r, monomial_of(l))), q.k, false)) res.flag_closed = false;
  }
  return res;
}

Report verify_qes(int kmax) {
  Report rep;
  rep.suite = "qes";
  struct Sample {
    ModelParams p;
    Rat a, gamma;
  };
  std::vector<Sample> samples{{{rat(1, 3), rat(1, 5), Rat(1)}, Rat(1), Rat(1)},
                              {{rat(2, 7), rat(3, 4), rat(5, 2)}, rat(1, 2), rat(3, 2)}};
  for (std::size_t s = 0; s < samples.size(); ++s) {
    for (int k = 0; k <= kmax; ++k) {
      QesParams q{samples[s].a, samples[s].gamma, k};
      std::string tag = "sample" + std::to_string(s + 1) + "/k=" + std::to_string(k);
      for (int scale : {2, 1}) {
        std::string st = tag + "/scale " + std::to_string(scale);
        QesResult printed = qes_operator(samples[s].p, q, {Rat(scale), QesPotential::printed});
        rep.add(bool_check(st + "/polynomial coefficients", printed.polynomial));
        rep.add(bool_check(st + "/tau2-sector closed", printed.tau2_closed, printed.leak));
        rep.add(bool_check(st + "/P_k closed", printed.flag_closed));
      }
      QesResult closing = qes_operator(samples[s].p, q, {Rat(2), QesPotential::closing});
      std::string ct = tag + "/derived closing potential";
      rep.add(bool_check(ct + "/tau2-sector closed", closing.tau2_closed,
                         "V^qes - V^rat = " + qes_potential_shift(samples[s].p, q, QesPotential::closing).to_string()));
      rep.add(bool_check(ct + "/polynomial coefficients", closing.polynomial,
                         closing.polynomial ? "" : "tau2^gamma leaves gamma/t2 first-order terms"));
    }
  }
  // without the tau2^gamma factor the derived potential gives an algebraic operator
  for (int k = 0; k <= kmax; ++k) {
    QesParams q{Rat(1), Rat(0), k};
    QesResult r = qes_operator(samples[0].p, q, {Rat(2), QesPotential::closing});
    rep.add(bool_check("gamma=0/k=" + std::to_string(k) + "/derived closing potential/algebraic and closed",
                       r.polynomial && r.tau2_closed));
  }
  return rep;
}

}  // namespace orbitforge
