#include "orbitforge/report.hpp"

namespace orbitforge {

bool Report::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    Check copy = c;
    if (!prefix.empty()) copy.name = prefix + "/" + copy.name;
    checks.push_back(std::move(copy));
  }
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

MPoly leading_terms(const MPoly& p, std::size_t keep) {
  const auto& t = p.terms();
  std::size_t n = std::min(keep, t.size());
  return MPoly::from_terms(p.ring(), std::vector<MPoly::Term>(t.end() - static_cast<std::ptrdiff_t>(n), t.end()));
}

Check identity_check(std::string name, const MPoly& residual, std::size_t keep) {
  Check c;
  c.name = std::move(name);
  c.pass = residual.is_zero();
  if (!c.pass) {
    c.detail = "residual has " + std::to_string(residual.size()) + " terms";
    c.witness = leading_terms(residual, keep);
  }
  return c;
}

Check bool_check(std::string name, bool ok, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.pass = ok;
  c.detail = std::move(detail);
  return c;
}

}  // namespace orbitforge
