#include "orbitforge/json_io.hpp"

#include <stdexcept>

namespace orbitforge {

Json to_json(const MPoly& p) {
  Json j;
  j["vars"] = p.ring() ? p.ring()->names() : std::vector<std::string>{};
  Json terms = Json::array();
  const std::size_t n = p.ring() ? p.ring()->size() : 0;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(m.e.begin(), m.e.begin() + static_cast<std::ptrdiff_t>(n));
    terms.push_back({{"e", e}, {"c", to_string(c)}});
  }
  j["terms"] = std::move(terms);
  return j;
}

MPoly mpoly_from_json(const Json& j) {
  auto vars = j.at("vars").get<std::vector<std::string>>();
  bool laurent = false;
  std::vector<MPoly::Term> terms;
  for (const auto& t : j.at("terms")) {
    auto e = t.at("e").get<std::vector<int>>();
    if (e.size() != vars.size()) throw std::invalid_argument("exponent length does not match vars");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < -kMaxExponent || e[i] > kMaxExponent) throw std::invalid_argument("exponent out of range");
      if (e[i] < 0) laurent = true;
      m.e[i] = static_cast<std::int8_t>(e[i]);
    }
    terms.emplace_back(m, parse_rat(t.at("c").get<std::string>()));
  }
  return MPoly::from_terms(make_ring(std::move(vars), laurent), std::move(terms));
}

Json to_json(const RootVec& v) {
  Json j = Json::array();
  for (const auto& c : v) j.push_back(to_string(c));
  return j;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["status"] = c.pass ? "pass" : "fail";
    if (c.witness) jc["witness"] = to_json(*c.witness);
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  Json j;
  j["suite"] = r.suite;
  j["checks"] = std::move(checks);
  j["status"] = r.pass() ? "pass" : "fail";
  return j;
}

Json to_json(const SpectralReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json je;
    je["label"] = e.label;
    je["grading"] = e.grading;
    je["eigenvalue"] = to_string(e.eigenvalue);
    je["eigenfunction"] = to_json(e.eigenfunction);
    je["appendix_match"] = match_name(e.appendix);
    if (!e.note.empty()) je["note"] = e.note;
    entries.push_back(std::move(je));
  }
  Json j;
  j["model"] = model_name(r.model);
  j["n"] = r.n;
  j["params"] = {{"mu", to_string(r.params.mu)}, {"nu", to_string(r.params.nu)}, {"omega", to_string(r.params.omega)}};
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace orbitforge
