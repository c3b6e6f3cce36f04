#include "orbitforge/spectra.hpp"

#include "orbitforge/invariants.hpp"
#include "orbitforge/parse.hpp"
#include "orbitforge/reference.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace orbitforge {

Label label_of(const Monomial& m) { return {m.e[0], m.e[1], m.e[2], m.e[3]}; }

Monomial monomial_of(const Label& l) {
  Monomial m;
  for (std::size_t a = 0; a < 4; ++a) m.e[a] = static_cast<std::int8_t>(l[a]);
  return m;
}

int grading(const Label& l, const std::array<int, 4>& charvec) {
  int g = 0;
  for (std::size_t a = 0; a < 4; ++a) g += charvec[a] * l[a];
  return g;
}

namespace {

Rat weight_norm(const Label& l) {
  DominantWeight w;
  for (std::size_t a = 0; a < 4; ++a) w.n[a] = l[a];
  return pairing(f4(), w, w);
}

bool has_parameters(const MPoly& p) {
  for (const auto& [mono, c] : p.terms()) {
    for (std::size_t i = 4; i < kMaxVars; ++i) {
      if (mono.e[i] != 0) return true;
    }
  }
  return false;
}

}  // namespace

FlagBasis flag_basis(Model m, const std::array<int, 4>& charvec, int n) {
  for (int c : charvec) {
    if (c <= 0) throw std::invalid_argument("characteristic vector must be positive");
  }
  FlagBasis fb;
  fb.model = m;
  fb.charvec = charvec;
  fb.n = n;
  if (n < 0) return fb;
  for (int a = 0; a * charvec[0] <= n; ++a) {
    for (int b = 0; a * charvec[0] + b * charvec[1] <= n; ++b) {
      for (int c = 0; a * charvec[0] + b * charvec[1] + c * charvec[2] <= n; ++c) {
        for (int d = 0; a * charvec[0] + b * charvec[1] + c * charvec[2] + d * charvec[3] <= n; ++d) {
          fb.monomials.push_back({a, b, c, d});
        }
      }
    }
  }
  using Key = std::tuple<int, Rat, Label>;
  auto key = [&](const Label& l) -> Key {
    Rat second = m == Model::rational ? Rat(grading(l, kRationalDegrees)) : weight_norm(l);
    return {grading(l, charvec), second, l};
  };
  std::sort(fb.monomials.begin(), fb.monomials.end(), [&](const Label& x, const Label& y) { return key(x) < key(y); });
  return fb;
}

std::optional<Label> check_invariance(const DiffOp& op, const FlagBasis& basis) {
  const RingPtr& r = op.ring();
  for (const Label& l : basis.monomials) {
    MPoly img = op.apply(MPoly::monomial(r, monomial_of(l)));
    for (const auto& [mono, c] : img.terms()) {
      Label out = label_of(mono);
      if (!mono.nonnegative() || grading(out, basis.charvec) > basis.n) return out;
    }
  }
  return std::nullopt;
}

RatMatrix operator_matrix(const DiffOp& op, const FlagBasis& basis) {
  const RingPtr& r = op.ring();
  std::map<Label, std::size_t> index;
  for (std::size_t i = 0; i < basis.monomials.size(); ++i) index[basis.monomials[i]] = i;
  const std::size_t n = basis.monomials.size();
  RatMatrix m(n, RatVector(n, Rat(0)));
  for (std::size_t j = 0; j < n; ++j) {
    MPoly img = op.apply(MPoly::monomial(r, monomial_of(basis.monomials[j])));
    if (has_parameters(img)) throw std::domain_error("operator matrix needs numeric parameters");
    for (const auto& [mono, c] : img.terms()) {
      auto it = index.find(label_of(mono));
      if (it == index.end()) throw std::domain_error("operator leaves the flag subspace");
      m[it->second][j] = c;
    }
  }
  return m;
}

bool is_upper_triangular(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (m[i][j] != 0) return false;
    }
  }
  return true;
}

std::string match_name(AppendixMatch m) {
  switch (m) {
    case AppendixMatch::pass:
      return "pass";
    case AppendixMatch::fail:
      return "fail";
    case AppendixMatch::absent:
      break;
  }
  return "absent";
}

SpectralReport eigen_decompose(const RatMatrix& m, const FlagBasis& basis) {
  if (!is_upper_triangular(m)) throw std::domain_error("operator matrix is not triangular in the flag basis");
  const RingPtr& r = tau_ring(basis.model);
  SpectralReport rep;
  rep.model = basis.model;
  rep.n = basis.n;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Rat lambda = m[k][k];
    RatVector v(k + 1, Rat(0));
    v[k] = 1;
    for (std::size_t i = k; i-- > 0;) {
      Rat rhs = 0;
      for (std::size_t j = i + 1; j <= k; ++j) rhs -= m[i][j] * v[j];
      Rat gap = m[i][i] - lambda;
      if (gap == 0) {
        if (rhs != 0) throw ResonantDegeneracy("repeated eigenvalue " + to_short_string(lambda) + " couples basis states");
        continue;
      }
      v[i] = rhs / gap;
    }
    SpectralEntry e;
    e.label = basis.monomials[k];
    e.grading = grading(e.label, basis.charvec);
    e.eigenvalue = lambda;
    e.eigenfunction = MPoly(r);
    for (std::size_t i = 0; i <= k; ++i) {
      if (v[i] != 0) e.eigenfunction += MPoly::monomial(r, monomial_of(basis.monomials[i]), v[i]);
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

Rat rational_spectrum(const Label& n, const Rat& omega) { return -2 * omega * grading(n, kRationalDegrees); }

Rat rational_spectrum_literal(const Label& n, const Rat& omega) { return -4 * omega * grading(n, kRationalDegrees); }

Rat trig_spectrum(const Label& p, const Rat& mu, const Rat& nu) {
  RootVec w = weight_vector(f4(), DominantWeight{{p[0], p[1], p[2], p[3]}});
  return -(norm2(w) + 2 * dot(w, deformed_weyl(f4(), mu, nu)));
}

long degeneracy(int level) {
  if (level < 0 || level % 2) return 0;
  // partitions of level/2 into parts 1, 3, 4, 6
  const int n = level / 2;
  std::vector<long> ways(n + 1, 0);
  ways[0] = 1;
  for (int part : {1, 3, 4, 6}) {
    for (int s = part; s <= n; ++s) ways[s] += ways[s - part];
  }
  return ways[n];
}

long degeneracy_by_search(int level) {
  long count = 0;
  for (int a = 0; 2 * a <= level; ++a) {
    for (int b = 0; 6 * b <= level; ++b) {
      for (int c = 0; 8 * c <= level; ++c) {
        for (int d = 0; 12 * d <= level; ++d) count += 2 * a + 6 * b + 8 * c + 12 * d == level;
      }
    }
  }
  return count;
}

SpectralReport reproduce_appendix(Model m, int n, const ModelParams& p) {
  FlagBasis basis = flag_basis(m, kMinimalGrading, n);
  DiffOp op = algebraic_operator(m, p);
  SpectralReport rep = eigen_decompose(operator_matrix(op, basis), basis);
  rep.params = p;
  const RingPtr& r = tau_ring(m);
  std::map<std::string, Rat> b{{"mu", p.mu}, {"nu", p.nu}, {"omega", p.omega}};
  for (auto& e : rep.entries) {
    for (const auto& ref : reference::eigenfunctions(m)) {
      if (ref.label != e.label) continue;
      MPoly f = parse_poly(r, ref.function, b);
      Rat lead = f.coefficient(monomial_of(e.label));
      Rat eps = parse_poly(r, ref.eigenvalue, b).constant_term();
      bool ok = lead != 0 && f * (1 / lead) == e.eigenfunction && eps == e.eigenvalue;
      e.appendix = ok ? AppendixMatch::pass : AppendixMatch::fail;
      if (!ok) e.note = "published " + (lead != 0 ? (f * (1 / lead)).to_string() : f.to_string()) + ", eigenvalue " +
                        to_short_string(eps);
    }
  }
  return rep;
}

Report verify_flags(Model m) {
  Report rep;
  rep.suite = "flags";
  DiffOp op = algebraic_operator(m);
  auto check = [&](const std::array<int, 4>& cv, int n, bool expect) {
    std::string name = "(" + std::to_string(cv[0]) + "," + std::to_string(cv[1]) + "," + std::to_string(cv[2]) + "," +
                       std::to_string(cv[3]) + ") n=" + std::to_string(n);
    auto leak = check_invariance(op, flag_basis(m, cv, n));
    std::string detail;
    if (leak) {
      const Label& l = *leak;
      detail = "leaks to exponents (" + std::to_string(l[0]) + "," + std::to_string(l[1]) + "," + std::to_string(l[2]) +
               "," + std::to_string(l[3]) + ")";
    }
    if (expect) {
      rep.add(bool_check(name + " preserved", !leak, detail));
    } else {
      rep.add(bool_check(name + " leak detected", leak.has_value(), detail));
    }
  };
  for (int n = 0; n <= 4; ++n) check(kMinimalGrading, n, true);
  if (m == Model::trig) {
    const FlagConstants fc = flag_characteristic_constants();
    std::vector<std::array<int, 4>> vecs = fc.extra;
    vecs.push_back(fc.rho);
    vecs.push_back(fc.corho);
    // rho and corho are large, so a flag of level 3 is at most a few monomials
    for (const auto& cv : vecs) {
      for (int n = 0; n <= 3; ++n) check(cv, n, true);
    }
    check({1, 1, 1, 1}, 2, false);
  }
  return rep;
}

std::vector<ModelParams> default_sample_points(Model m) {
  if (m == Model::rational) {
    return {{rat(1, 3), rat(1, 5), Rat(2)}, {rat(2, 7), rat(3, 4), rat(5, 2)}, {rat(5, 3), rat(1, 11), rat(1, 2)}};
  }
  return {{rat(1, 3), rat(1, 5), Rat(0)}, {rat(2, 7), rat(3, 4), Rat(0)}, {rat(5, 3), rat(1, 11), Rat(0)}};
}

Report verify_appendix(Model m, const std::vector<ModelParams>& points) {
  Report rep;
  rep.suite = "appendix";
  for (std::size_t s = 0; s < points.size(); ++s) {
    const ModelParams& p = points[s];
    std::string tag = "point" + std::to_string(s + 1);
    DiffOp op = algebraic_operator(m, p);
    FlagBasis basis = flag_basis(m, kMinimalGrading, 4);
    RatMatrix mat = operator_matrix(op, basis);
    rep.add(bool_check(tag + "/triangular n<=4", is_upper_triangular(mat)));
    bool formula = true;
    bool literal_factor = true;
    for (std::size_t i = 0; i < basis.monomials.size(); ++i) {
      const Label& l = basis.monomials[i];
      Rat expect = m == Model::rational ? rational_spectrum(l, p.omega) : trig_spectrum(l, p.mu, p.nu);
      formula = formula && mat[i][i] == expect;
      if (m == Model::rational) literal_factor = literal_factor && rational_spectrum_literal(l, p.omega) == 2 * mat[i][i];
    }
    rep.add(bool_check(tag + "/diagonal = spectrum formula", formula));
    if (m == Model::rational) {
      rep.add(bool_check(tag + "/literal -4 omega prefactor is twice the diagonal", literal_factor,
                         "published spectrum formula differs from the operator diagonal by a factor 2"));
    }
    try {
      SpectralReport sr = reproduce_appendix(m, 2, p);
      for (const auto& e : sr.entries) {
        std::string name = tag + "/[" + std::to_string(e.label[0]) + "," + std::to_string(e.label[1]) + "," +
                           std::to_string(e.label[2]) + "," + std::to_string(e.label[3]) + "]";
        MPoly residual = op.apply(e.eigenfunction) - e.eigenfunction * e.eigenvalue;
        rep.add(identity_check(name + " eigen-residual", residual));
        rep.add(bool_check(name + " published", e.appendix == AppendixMatch::pass, e.note));
      }
    } catch (const ResonantDegeneracy& err) {
      rep.add(bool_check(tag + "/eigenvectors", false, err.what()));
    }
  }
  return rep;
}

}  // namespace orbitforge
