#include "orbitforge/invariants.hpp"

#include "orbitforge/linalg.hpp"
#include "orbitforge/parse.hpp"
#include "orbitforge/reference.hpp"

#include <map>
#include <set>

namespace orbitforge {

const RootSystem& f4() {
  static const RootSystem rs = build_root_system();
  return rs;
}

namespace {

MPoly linear_form(const RingPtr& x, const RootVec& a) {
  MPoly p(x);
  for (std::size_t j = 0; j < 4; ++j) {
    if (a[j] != 0) p += MPoly::variable(x, j) * a[j];
  }
  return p;
}

// prod_j v_j^(k a_j); k a_j must be integral
Monomial exponent_monomial(const RootVec& a, long k) {
  Monomial m;
  for (std::size_t j = 0; j < 4; ++j) {
    Rat e = a[j] * k;
    if (e.get_den() != 1) throw std::domain_error("non-integral exponent " + to_short_string(e));
    m.e[j] = static_cast<std::int8_t>(e.get_num().get_si());
  }
  return m;
}

MPoly root_factor(Model m, const RootVec& a) {
  const RingPtr& r = coordinate_ring(m);
  if (m == Model::rational) return linear_form(r, a);
  Monomial up = exponent_monomial(a, 2);
  Monomial down = exponent_monomial(a, -2);
  return MPoly::monomial(r, up) - MPoly::monomial(r, down);
}

MPoly product(const std::vector<MPoly>& fs, const RingPtr& r) {
  MPoly p = MPoly::constant(r, Rat(1));
  for (const auto& f : fs) p *= f;
  return p;
}

std::vector<MPoly> coordinate_images(Model m) {
  const RingPtr& x = coordinate_ring(m);
  const auto& tau = invariants_in_coordinates(m);
  std::vector<MPoly> img(tau.begin(), tau.end());
  for (const auto& p : parameter_names()) img.push_back(MPoly::variable(x, p));
  return img;
}

}  // namespace

RationalInvariants build_rational_invariants(const RootSystem& rs) {
  const RingPtr& x = coordinate_ring(Model::rational);
  RootVec seed{Rat(0), Rat(0), Rat(1), Rat(1)};
  std::vector<MPoly> forms;
  for (const auto& w : weyl_orbit(rs, seed)) forms.push_back(linear_form(x, w));

  RationalInvariants inv;
  for (std::size_t a = 0; a < 4; ++a) {
    MPoly s(x);
    for (const auto& f : forms) s += f.pow(kRationalDegrees[a]);
    inv.t_orbit[a] = s * rat(1, 12);
  }

  const RingPtr& t = tau_ring(Model::rational);
  const char* combos[4] = {
      "t2",
      "t6/12 - t2^3/12",
      "t8/80 - t2*t6/30 + t2^4/48",
      "t12/720 - 5/288*t2^2*t8 + 1/27*t2^3*t6 - 29/1440*t2^6 - 1/1080*t6^2",
  };
  std::vector<MPoly> img(inv.t_orbit.begin(), inv.t_orbit.end());
  for (const auto& p : parameter_names()) img.push_back(MPoly::variable(x, p));
  for (std::size_t a = 0; a < 4; ++a) inv.tau[a] = parse_poly(t, combos[a]).substitute(img);
  return inv;
}

TrigInvariants build_trig_invariants(const RootSystem& rs) {
  const RingPtr& v = coordinate_ring(Model::trig);
  TrigInvariants inv;
  for (std::size_t a = 0; a < 4; ++a) {
    std::vector<MPoly::Term> terms;
    for (const auto& w : weyl_orbit(rs, rs.fundamental_weights[a])) terms.emplace_back(exponent_monomial(w, 4), Rat(1));
    inv.tau[a] = MPoly::from_terms(v, std::move(terms));
  }
  return inv;
}

const std::array<MPoly, 4>& invariants_in_coordinates(Model m) {
  static const std::array<MPoly, 4> rat = build_rational_invariants(f4()).tau;
  static const std::array<MPoly, 4> trig = build_trig_invariants(f4()).tau;
  return m == Model::rational ? rat : trig;
}

GroundStateFactors build_ground_state_factors(Model m) {
  const RootSystem& rs = f4();
  const RingPtr& r = coordinate_ring(m);
  GroundStateFactors g;
  g.model = m;
  g.long_roots = rs.positive_long;
  g.short_roots = rs.positive_short;
  for (const auto& a : g.long_roots) g.long_factors.push_back(root_factor(m, a));
  for (const auto& a : g.short_roots) g.short_factors.push_back(root_factor(m, a));
  g.long_product = product(g.long_factors, r);
  g.short_product = product(g.short_factors, r);

  if (m == Model::rational) {
    auto x = [&](std::size_t i) { return MPoly::variable(r, i); };
    MPoly dpm = MPoly::constant(r, Rat(1));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) dpm *= (x(i) + x(j)) * (x(i) - x(j));
    }
    MPoly dd0 = MPoly::constant(r, rat(1, 256));
    for (std::size_t i = 0; i < 4; ++i) dd0 *= x(i);
    for (int s = 0; s < 8; ++s) {
      MPoly f = x(0);
      for (std::size_t i = 1; i < 4; ++i) f += (s >> (i - 1)) & 1 ? -x(i) : x(i);
      dd0 *= f;
    }
    g.dpm = dpm;
    g.dd0 = dd0;
  } else {
    // sin^2 = -(w - 1/w)^2 / 4 and there are 12 factors in each product
    Rat scale = Rat(1) / Rat(mpz_class(1) << 24);
    g.dpm = g.long_product * g.long_product * scale;
    g.dd0 = g.short_product * g.short_product * scale;
  }
  return g;
}

const GroundStateFactors& ground_state_factors(Model m) {
  static const GroundStateFactors rat = build_ground_state_factors(Model::rational);
  static const GroundStateFactors trig = build_ground_state_factors(Model::trig);
  return m == Model::rational ? rat : trig;
}

MPoly to_coordinates(const MPoly& p, Model m) {
  std::vector<MPoly> img = coordinate_images(m);
  return p.rebase(tau_ring(m)).substitute(img);
}

MPoly reflect_poly(const MPoly& p, Model m, const RootVec& alpha) {
  const RingPtr& r = p.ring();
  if (m == Model::rational) {
    std::vector<MPoly> img;
    for (std::size_t j = 0; j < r->size(); ++j) {
      if (j < 4) {
        RootVec e{Rat(0), Rat(0), Rat(0), Rat(0)};
        e[j] = 1;
        img.push_back(linear_form(r, reflect(e, alpha)));
      } else {
        img.push_back(MPoly::variable(r, j));
      }
    }
    return p.substitute(img);
  }
  std::vector<MPoly::Term> terms;
  for (const auto& [mono, c] : p.terms()) {
    RootVec e{Rat(mono.e[0]), Rat(mono.e[1]), Rat(mono.e[2]), Rat(mono.e[3])};
    Monomial out = mono;
    Monomial head = exponent_monomial(reflect(e, alpha), 1);
    for (std::size_t j = 0; j < 4; ++j) out.e[j] = head.e[j];
    terms.emplace_back(out, c);
  }
  return MPoly::from_terms(r, std::move(terms));
}

MPoly express_in_invariants(const MPoly& p, Model m, int bound) {
  const RingPtr& t = tau_ring(m);
  const RingPtr& x = coordinate_ring(m);
  MPoly px = p.rebase(x);
  const auto& tau = invariants_in_coordinates(m);
  const std::array<int, 4> w = m == Model::rational ? kRationalDegrees : kMinimalGrading;

  // ansatz monomials and their images, built incrementally in graded order
  std::vector<Monomial> basis;
  std::map<Monomial, MPoly, GradedLess> image;
  Monomial one;
  basis.push_back(one);
  image.emplace(one, MPoly::constant(x, Rat(1)));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Monomial b = basis[i];
    for (std::size_t a = 0; a < 4; ++a) {
      Monomial n = b;
      n.e[a] = static_cast<std::int8_t>(n.e[a] + 1);
      if (weighted_degree(n, w) > bound || image.count(n)) continue;
      image.emplace(n, image.at(b) * tau[a]);
      basis.push_back(n);
    }
  }

  std::vector<std::size_t> params = parameter_indices(x);
  MPoly result(t);
  for (const auto& [pm, part] : px.split_by(params)) {
    std::set<Monomial, GradedLess> rows;
    for (const auto& [mono, c] : part.terms()) rows.insert(mono);
    for (const auto& [mono, img] : image) {
      for (const auto& term : img.terms()) rows.insert(term.first);
    }
    std::set<std::vector<Rat>> unique_rows;
    for (const auto& row : rows) {
      std::vector<Rat> r;
      r.reserve(basis.size() + 1);
      for (const auto& b : basis) r.push_back(image.at(b).coefficient(row));
      r.push_back(part.coefficient(row));
      unique_rows.insert(std::move(r));
    }
    RatMatrix a;
    RatVector rhs;
    for (const auto& r : unique_rows) {
      a.emplace_back(r.begin(), r.end() - 1);
      rhs.push_back(r.back());
    }
    SolveResult s = solve_linear(a, rhs);
    if (s.status == SolveStatus::inconsistent) throw NotInvariant("polynomial is not in the span of the tau monomials");
    if (s.status == SolveStatus::underdetermined) throw std::logic_error("tau images are linearly dependent");
    Monomial shift;
    for (std::size_t k = 0; k < parameter_names().size(); ++k) shift.e[4 + k] = pm.e[params[k]];
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (s.x[k] != 0) {
        Monomial mono = basis[k];
        for (std::size_t q = 4; q < kMaxVars; ++q) mono.e[q] = shift.e[q];
        result += MPoly::monomial(t, mono, s.x[k]);
      }
    }
  }
  if (to_coordinates(result, m) != px) throw NotInvariant("linear ansatz solution does not reproduce the input");
  return result;
}

Report verify_invariants(Model m) {
  Report rep;
  rep.suite = "invariants";
  const RootSystem& rs = f4();
  const auto& tau = invariants_in_coordinates(m);
  if (m == Model::rational) {
    RationalInvariants inv = build_rational_invariants(rs);
    auto closed = reference::rational_tau();
    const char* names[4] = {"tau2", "tau6", "tau8", "tau12"};
    for (std::size_t a = 0; a < 4; ++a) {
      rep.add(identity_check(std::string(names[a]) + "/closed-form", inv.tau[a] - closed[a]));
      bool homogeneous = true;
      for (const auto& [mono, c] : inv.tau[a].terms()) homogeneous = homogeneous && mono.degree() == kRationalDegrees[a];
      rep.add(bool_check(std::string(names[a]) + "/homogeneous", homogeneous));
    }
  } else {
    auto cosine = reference::trig_tau_cosine();
    std::vector<MPoly> img = reference::cosine_images();
    const RingPtr& v = coordinate_ring(Model::trig);
    for (std::size_t a = 0; a < 4; ++a) {
      std::string name = "tau" + std::to_string(a + 1);
      rep.add(identity_check(name + "/cosine-form", tau[a] - cosine[a].substitute(img).rebase(v)));
      std::vector<MPoly::Term> conj;
      for (const auto& [mono, c] : tau[a].terms()) {
        Monomial n = mono;
        for (std::size_t j = 0; j < 4; ++j) n.e[j] = static_cast<std::int8_t>(-n.e[j]);
        conj.emplace_back(n, c);
      }
      rep.add(identity_check(name + "/reality", tau[a] - MPoly::from_terms(v, std::move(conj))));
      std::vector<Rat> one(v->size(), Rat(1));
      Rat size = tau[a].evaluate(one);
      rep.add(bool_check(name + "/orbit-size", size == Rat(a < 2 ? 24 : 96), "tau(v=1) = " + to_short_string(size)));
    }
  }
  bool stable = true;
  std::string detail;
  for (std::size_t a = 0; a < 4; ++a) {
    for (const auto& alpha : rs.positive()) {
      if (reflect_poly(tau[a], m, alpha) != tau[a]) {
        stable = false;
        detail = "tau index " + std::to_string(a) + " moves under " + to_string(alpha);
      }
    }
  }
  rep.add(bool_check("reflection-invariance", stable, detail));
  return rep;
}

Report verify_ground_state_squares(Model m) {
  Report rep;
  rep.suite = "ground-state";
  const GroundStateFactors& g = ground_state_factors(m);
  MPoly p1 = to_coordinates(reference::P1(m), m);
  MPoly p2 = to_coordinates(reference::P2(m), m);
  if (m == Model::rational) {
    rep.add(identity_check("dpm^2 = 64 P1", g.dpm * g.dpm - p1 * Rat(64)));
    rep.add(identity_check("dd0^2 = P2/4096", g.dd0 * g.dd0 - p2 * rat(1, 4096)));
  } else {
    Rat scale = Rat(1) / Rat(mpz_class(1) << 24);
    rep.add(identity_check("dpm^2 = P1/2^24", g.dpm - p1 * scale));
    rep.add(identity_check("dd0^2 = P2/2^24", g.dd0 - p2 * scale));
  }
  return rep;
}

}  // namespace orbitforge
