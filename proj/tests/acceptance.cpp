#include "orbitforge/hamiltonians.hpp"
#include "orbitforge/invariants.hpp"
#include "orbitforge/spectra.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace orbitforge;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

void require(Outcome& o, const Report& r, const std::string& label) {
  if (r.pass()) return;
  o.pass = false;
  for (const auto& c : r.checks) {
    if (c.pass) continue;
    if (!o.note.empty()) o.note += "; ";
    o.note += label + " " + c.name;
  }
}

void require(Outcome& o, bool ok, const std::string& what) {
  if (ok) return;
  o.pass = false;
  if (!o.note.empty()) o.note += "; ";
  o.note += what;
}

const Model kModels[] = {Model::rational, Model::trig};

Outcome invariants() {
  Outcome o;
  for (Model m : kModels) require(o, verify_invariants(m), model_name(m));
  return o;
}

Outcome ground_state() {
  Outcome o;
  for (Model m : kModels) require(o, verify_ground_state_squares(m), model_name(m));
  return o;
}

Outcome gauge() {
  Outcome o;
  for (Model m : kModels) {
    Report r = verify_gauge_rotation(m);
    require(o, r, model_name(m));
    require(o, r.checks.size() == 15, model_name(m) + " expected 14 coefficients and E0");
    Report t = verify_gauge_rotation(m, GaugeOptions{Rat(1)});
    const Check* e0 = t.find("E0");
    require(o, e0 && !e0->pass && e0->witness && e0->witness->is_constant(),
            model_name(m) + " E0+1 control did not fail with a constant residual");
  }
  return o;
}

Outcome metric() {
  Outcome o;
  for (Model m : kModels) {
    require(o, verify_metric(m), model_name(m));
    Report r = verify_riemann(m);
    require(o, r, model_name(m));
    std::size_t points = 0;
    for (const auto& c : r.checks) points += c.name.rfind("R at", 0) == 0 ? 1 : 0;
    require(o, points >= 3, model_name(m) + " fewer than 3 Riemann points");
  }
  return o;
}

Outcome potentials() {
  Outcome o;
  for (Model m : kModels) require(o, verify_potential(m), model_name(m));
  return o;
}

Outcome flags() {
  Outcome o;
  for (Model m : kModels) require(o, verify_flags(m), model_name(m));
  return o;
}

Outcome spectra() {
  Outcome o;
  for (Model m : kModels) {
    auto points = default_sample_points(m);
    require(o, points.size() >= 3, model_name(m) + " fewer than 3 points");
    Report r = verify_appendix(m, points);
    require(o, r, model_name(m));
    if (m == Model::rational) {
      bool reported = false;
      for (const auto& c : r.checks) reported |= c.name.find("literal -4 omega") != std::string::npos;
      require(o, reported, "factor-2 check missing");
    }
  }
  return o;
}

Outcome degeneracies() {
  Outcome o;
  for (int n = 0; n <= 40; n += 2) require(o, degeneracy(n) == degeneracy_by_search(n), "N=" + std::to_string(n));
  return o;
}

Outcome particular_integrals() {
  Outcome o;
  for (Model m : kModels) require(o, verify_particular_integral(m, 3), model_name(m));
  return o;
}

// the operator built with the published QES potential must be polynomial and
// close on span{t2^j : j <= k} under at least one normalization
Outcome qes() {
  Outcome o;
  struct Sample {
    ModelParams p;
    QesParams q;
  };
  std::vector<Sample> samples{{{rat(1, 3), rat(1, 5), Rat(1)}, {Rat(1), Rat(1), 0}},
                              {{rat(2, 7), rat(3, 4), rat(5, 2)}, {rat(1, 2), rat(3, 2), 0}}};
  for (std::size_t s = 0; s < samples.size(); ++s) {
    for (int k = 0; k <= 2; ++k) {
      QesParams q = samples[s].q;
      q.k = k;
      bool ok = false;
      std::string leak;
      for (Rat scale : {Rat(2), Rat(1)}) {
        QesResult r = qes_operator(samples[s].p, q, QesConvention{scale, QesPotential::printed});
        bool exact = r.restriction.size() == static_cast<std::size_t>(k + 1);
        if (r.polynomial && r.tau2_closed && exact) ok = true;
        if (leak.empty()) {
          leak = r.polynomial ? "" : "non-polynomial coefficients";
          if (!r.tau2_closed) leak += (leak.empty() ? "" : ", ") + r.leak;
        }
      }
      require(o, ok, "sample" + std::to_string(s + 1) + " k=" + std::to_string(k) + ": " + leak);
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
    double limit_s;
  };
  const std::vector<Criterion> criteria{
      {1, "invariant construction", invariants, 30},
      {2, "ground-state squares", ground_state, 300},
      {3, "gauge rotation", gauge, 0},
      {4, "flat metric", metric, 0},
      {5, "potentials", potentials, 0},
      {6, "flags", flags, 0},
      {7, "spectra and eigenfunctions", spectra, 0},
      {8, "degeneracies", degeneracies, 0},
      {9, "particular integral", particular_integrals, 0},
      {10, "QES", qes, 0},
  };
  bool all = true;
  double total = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += secs;
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.pass = false;
      o.note += (o.note.empty() ? "" : "; ") + std::string("runtime over limit");
    }
    all = all && o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << " [" << c.title << "]: " << (o.pass ? "PASS" : "FAIL") << " (" << secs << " s)";
    if (!o.pass) line << " " << o.note;
    std::cout << line.str() << "\n" << std::flush;
  }
  std::cout.setf(std::ios::fixed);
  std::cout.precision(2);
  std::cout << "total " << total << " s, " << (all ? "all criteria pass" : "some criteria fail") << "\n";
  return all ? 0 : 1;
}
