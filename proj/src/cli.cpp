#include "orbitforge/cli.hpp"

#include "orbitforge/invariants.hpp"
#include "orbitforge/json_io.hpp"
#include "orbitforge/reference.hpp"
#include "orbitforge/spectra.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace orbitforge {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Report qes_report(Model m) {
  if (m != Model::rational) throw std::invalid_argument("suite qes is defined for the rational model only");
  return verify_qes();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "appendix", "flags",     "ground-state", "invariants", "metric",
      "operator", "particular-integral", "potential", "qes", "riemann",
  };
  return names;
}

Report run_suite(const std::string& name, Model m, const SuiteOptions& opt) {
  if (name == "all") return run_all_suites(m, opt);
  if (name == "invariants") return verify_invariants(m);
  if (name == "ground-state") return verify_ground_state_squares(m);
  if (name == "operator") return verify_gauge_rotation(m, opt.gauge);
  if (name == "metric") return verify_metric(m);
  if (name == "riemann") return verify_riemann(m);
  if (name == "potential") return verify_potential(m);
  if (name == "flags") return verify_flags(m);
  if (name == "particular-integral") return verify_particular_integral(m);
  if (name == "qes") return qes_report(m);
  if (name == "appendix") return verify_appendix(m, default_sample_points(m));
  throw std::invalid_argument("unknown suite '" + name + "'");
}

Report run_all_suites(Model m, const SuiteOptions& opt) {
  std::vector<std::pair<std::string, std::future<Report>>> jobs;
  for (const auto& name : suite_names()) {
    if (name == "qes" && m != Model::rational) continue;
    jobs.emplace_back(name, std::async(std::launch::async, [name, m, opt] { return run_suite(name, m, opt); }));
  }
  Report all;
  all.suite = "all";
  for (auto& [name, job] : jobs) all.merge(job.get(), name);
  return all;
}

namespace {

struct Config {
  std::string command;
  std::string model = "rat";
  std::string suite = "all";
  std::string what;
  std::optional<std::string> mu, nu, omega;
  std::optional<int> n;
  std::optional<std::string> x, v, t;
  std::optional<std::string> tamper;
  std::optional<std::string> json_path;
};

Rat parse_param(const std::optional<std::string>& s, const char* name, const Rat& fallback) {
  if (!s) return fallback;
  try {
    return parse_rat(*s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

std::array<Rat, 4> parse_point(const std::string& s, const char* name) {
  std::array<Rat, 4> out;
  std::stringstream in(s);
  std::string item;
  std::size_t i = 0;
  while (std::getline(in, item, ',')) {
    if (i == 4) throw UsageError(std::string("--") + name + " takes four comma-separated values");
    try {
      out[i++] = parse_rat(item);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--") + name + ": " + e.what());
    }
  }
  if (i != 4) throw UsageError(std::string("--") + name + " takes four comma-separated values");
  return out;
}

ModelParams read_params(const Config& c, Model m) {
  ModelParams p;
  p.mu = parse_param(c.mu, "mu", rat(1, 3));
  p.nu = parse_param(c.nu, "nu", rat(1, 5));
  p.omega = parse_param(c.omega, "omega", m == Model::rational ? Rat(1) : Rat(0));
  if (m == Model::trig && p.omega != 0) throw UsageError("--omega is not a parameter of the trig model");
  return p;
}

Json params_json(const ModelParams& p, Model m) {
  Json j{{"mu", to_string(p.mu)}, {"nu", to_string(p.nu)}};
  if (m == Model::rational) j["omega"] = to_string(p.omega);
  return j;
}

void emit(const Json& j, const Config& c, std::ostream& out) {
  std::string text = j.dump(2) + "\n";
  if (!c.json_path) {
    out << text;
    return;
  }
  std::ofstream f(*c.json_path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + *c.json_path + " for writing");
  f << text;
}

int cmd_verify(const Config& c, Model m, std::ostream& out) {
  read_params(c, m);
  SuiteOptions opt;
  if (c.tamper) {
    if (*c.tamper != "E0") throw UsageError("--tamper accepts only E0");
    opt.gauge.e0_shift = 1;
  }
  if (c.suite != "all" && std::find(suite_names().begin(), suite_names().end(), c.suite) == suite_names().end())
    throw UsageError("unknown suite '" + c.suite + "'");
  if (c.suite == "qes" && m != Model::rational) throw UsageError("suite qes is defined for the rational model only");
  Report r = run_suite(c.suite, m, opt);
  emit(to_json(r), c, out);
  if (c.json_path) {
    std::size_t passed = 0;
    for (const auto& ch : r.checks) passed += ch.pass ? 1 : 0;
    out << r.suite << " [" << model_name(m) << "]: " << (r.pass() ? "pass" : "fail") << " (" << passed << "/"
        << r.checks.size() << " checks)\n";
    for (const auto& ch : r.checks) {
      if (!ch.pass) out << "  FAIL " << ch.name << (ch.detail.empty() ? "" : ": " + ch.detail) << "\n";
    }
  }
  return r.pass() ? 0 : 1;
}

int cmd_spectrum(const Config& c, Model m, std::ostream& out) {
  ModelParams p = read_params(c, m);
  Json rows = Json::array();
  Json j;
  j["model"] = model_name(m);
  j["params"] = params_json(p, m);
  if (m == Model::rational) {
    int top = c.n.value_or(8);
    j["max_level"] = top;
    for (int level = 0; level <= top; level += 2) {
      Label l{level / 2, 0, 0, 0};
      rows.push_back({{"level", level},
                      {"degeneracy", degeneracy(level)},
                      {"eigenvalue", to_string(rational_spectrum(l, p.omega))},
                      {"eigenvalue_literal", to_string(rational_spectrum_literal(l, p.omega))}});
    }
    j["levels"] = std::move(rows);
  } else {
    int top = c.n.value_or(2);
    j["max_grading"] = top;
    if (top >= 0) {
      for (const auto& l : flag_basis(m, kMinimalGrading, top).monomials)
        rows.push_back({{"label", l}, {"grading", grading(l, kMinimalGrading)},
                        {"eigenvalue", to_string(trig_spectrum(l, p.mu, p.nu))}});
    }
    j["labels"] = std::move(rows);
  }
  emit(j, c, out);
  return 0;
}

int cmd_eigenfunctions(const Config& c, Model m, std::ostream& out) {
  ModelParams p = read_params(c, m);
  if (m == Model::trig && p.mu == 0) throw UsageError("trig eigenfunctions need mu != 0");
  int n = c.n.value_or(2);
  if (n < 0) throw UsageError("--n must be non-negative");
  SpectralReport r = reproduce_appendix(m, n, p);
  emit(to_json(r), c, out);
  for (const auto& e : r.entries) {
    if (e.appendix == AppendixMatch::fail) return 1;
  }
  return 0;
}

std::vector<Rat> ring_point(const RingPtr& ring, const std::array<Rat, 4>& head, const ModelParams& p) {
  std::vector<Rat> pt(ring->size());
  for (std::size_t i = 0; i < 4; ++i) pt[i] = head[i];
  auto set = [&](const char* name, const Rat& value) {
    if (auto idx = ring->find(name)) pt[*idx] = value;
  };
  set("mu", p.mu);
  set("nu", p.nu);
  set("omega", p.omega);
  set("gl", p.gl());
  set("gs", p.gs());
  return pt;
}

Rat inverse_square_sum(const std::vector<MPoly>& factors, const std::vector<Rat>& pt, const std::string& kind) {
  Rat s = 0;
  for (const auto& f : factors) {
    Rat val = f.evaluate(pt);
    if (val == 0) throw BoundarySingularity("point lies on a " + kind + "-root mirror");
    s += 1 / (val * val);
  }
  return s;
}

int cmd_eval(const Config& c, Model m, std::ostream& out) {
  if (c.what != "tau" && c.what != "p" && c.what != "potential")
    throw UsageError("eval needs one of: tau, p, potential");
  int given = (c.x ? 1 : 0) + (c.v ? 1 : 0) + (c.t ? 1 : 0);
  if (given != 1) throw UsageError("eval needs exactly one of --x, --v, --t");
  if (c.v && m != Model::trig) throw UsageError("--v applies to the trig model only");
  if (c.t && c.what == "tau") throw UsageError("eval tau needs a coordinate point");
  ModelParams p = read_params(c, m);

  Json j;
  j["model"] = model_name(m);
  Json values;
  std::optional<std::array<Rat, 4>> coords;
  std::array<Rat, 4> tau{};
  if (c.t) {
    tau = parse_point(*c.t, "t");
    Json pj = Json::array();
    for (const auto& q : tau) pj.push_back(to_string(q));
    j["point"] = {{"tau", pj}};
  } else {
    std::array<Rat, 4> pt = parse_point(c.x ? *c.x : *c.v, c.x ? "x" : "v");
    if (m == Model::trig && c.x) {
      // x_j = 4 pi n_j / beta, so v_j = (-1)^n_j
      for (auto& q : pt) {
        if (q.get_den() != 1) throw UsageError("trig --x takes integers (units of 4 pi / beta)");
        q = mpz_class(abs(q.get_num()) % 2) == 0 ? Rat(1) : Rat(-1);
      }
    }
    if (m == Model::trig) {
      for (const auto& q : pt) {
        if (q == 0) throw UsageError("v coordinates must be non-zero");
      }
    }
    coords = pt;
    Json pj = Json::array();
    for (const auto& q : pt) pj.push_back(to_string(q));
    j["point"] = {{m == Model::rational ? "x" : "v", pj}};
    tau = tau_point(m, pt);
  }

  const RingPtr& tr = tau_ring(m);
  std::vector<Rat> tpt = ring_point(tr, tau, p);
  if (c.what == "tau") {
    for (std::size_t a = 0; a < 4; ++a) values[tr->name(a)] = to_string(tau[a]);
    const GroundStateFactors& g = ground_state_factors(m);
    std::vector<Rat> xpt = ring_point(coordinate_ring(m), *coords, p);
    if (m == Model::rational) {
      values["delta_plus_delta_minus"] = to_string(g.dpm.evaluate(xpt));
      values["delta_delta0"] = to_string(g.dd0.evaluate(xpt));
    } else {
      values["delta_plus_delta_minus_squared"] = to_string(g.dpm.evaluate(xpt));
      values["delta_delta0_squared"] = to_string(g.dd0.evaluate(xpt));
    }
  } else if (c.what == "p") {
    values["P1"] = to_string(reference::P1(m).evaluate(tpt));
    values["P2"] = to_string(reference::P2(m).evaluate(tpt));
  } else {
    Rat p1 = reference::P1(m).evaluate(tpt);
    Rat p2 = reference::P2(m).evaluate(tpt);
    if (p1 == 0) throw BoundarySingularity("P1 vanishes: point lies on a long-root mirror");
    if (p2 == 0) throw BoundarySingularity("P2 vanishes: point lies on a short-root mirror");
    Rat n1 = reference::potential_numerator_long(m).evaluate(tpt);
    Rat n2 = reference::potential_numerator_short(m).evaluate(tpt);
    Rat v_tau;
    if (m == Model::rational)
      v_tau = p.omega * p.omega * tau[0] / 2 + p.gl() * n1 / p1 + p.gs() * n2 / p2;
    else
      v_tau = -p.gl() * n1 / p1 - p.gs() * n2 / (2 * p2);
    values[m == Model::rational ? "V" : "V_over_beta2"] = to_string(v_tau);
    if (coords) {
      const GroundStateFactors& g = ground_state_factors(m);
      std::vector<Rat> xpt = ring_point(coordinate_ring(m), *coords, p);
      Rat ls = inverse_square_sum(g.long_factors, xpt, "long");
      Rat ss = inverse_square_sum(g.short_factors, xpt, "short");
      Rat direct;
      if (m == Model::rational) {
        Rat r2 = 0;
        for (const auto& q : *coords) r2 += q * q;
        direct = p.omega * p.omega * r2 / 2 + p.gl() * ls + p.gs() * ss / 2;
      } else {
        direct = -p.gl() * ls - p.gs() * ss / 2;
      }
      values["root_sum"] = to_string(direct);
      if (direct != v_tau) {
        j["values"] = values;
        emit(j, c, out);
        return 1;
      }
    }
  }
  j["values"] = values;
  emit(j, c, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact F4 Calogero-Moser-Sutherland computations", "orbitforge"};
  app.require_subcommand(1);
  auto common = [&c](CLI::App* sub) {
    sub->add_option("--model", c.model, "rat or trig")->check(CLI::IsMember({"rat", "rational", "trig", "trigonometric"}));
    sub->add_option("--mu", c.mu, "short-root coupling, p/q");
    sub->add_option("--nu", c.nu, "long-root coupling, p/q");
    sub->add_option("--omega", c.omega, "oscillator frequency, p/q (rat)");
    sub->add_option("--json", c.json_path, "write JSON here instead of stdout");
  };
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  verify->add_option("--suite", c.suite, "suite name or all");
  verify->add_option("--tamper", c.tamper, "negative control (E0)");
  verify->add_option("--n", c.n, "unused; accepted for uniformity");
  CLI::App* spectrum = app.add_subcommand("spectrum", "levels (rat) or labelled eigenvalues (trig)");
  common(spectrum);
  spectrum->add_option("--n", c.n, "max level (rat) or grading (trig)");
  CLI::App* eig = app.add_subcommand("eigenfunctions", "eigenpairs on the minimal flag");
  common(eig);
  eig->add_option("--n", c.n, "flag grading ceiling");
  CLI::App* eval = app.add_subcommand("eval", "evaluate tau, P1/P2 or the potential");
  common(eval);
  eval->add_option("what", c.what, "tau, p or potential")->required();
  eval->add_option("--x", c.x, "coordinates a,b,c,d (trig: integers in units of 4 pi/beta)");
  eval->add_option("--v", c.v, "trig v coordinates a,b,c,d");
  eval->add_option("--t", c.t, "tau point a,b,c,d");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  for (auto* sub : {verify, spectrum, eig, eval}) {
    if (sub->parsed()) c.command = sub->get_name();
  }

  try {
    Model m = parse_model(c.model);
    if (c.command == "verify") return cmd_verify(c, m, out);
    if (c.command == "spectrum") return cmd_spectrum(c, m, out);
    if (c.command == "eigenfunctions") return cmd_eigenfunctions(c, m, out);
    return cmd_eval(c, m, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const BoundarySingularity& e) {
    err << "BoundarySingularity: " << e.what() << "\n";
    return 1;
  } catch (const ResonantDegeneracy& e) {
    err << "ResonantDegeneracy: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace orbitforge
