#pragma once

#include "orbitforge/mpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbitforge {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  std::optional<MPoly> witness;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void merge(const Report& other, const std::string& prefix = {});
  const Check* find(const std::string& name) const;
};

/// Passing check when `residual` is zero, otherwise a failing one carrying
/// its leading terms (at most `keep`) as witness.
Check identity_check(std::string name, const MPoly& residual, std::size_t keep = 12);
Check bool_check(std::string name, bool ok, std::string detail = {});

/// Highest `keep` terms of p.
MPoly leading_terms(const MPoly& p, std::size_t keep);

}  // namespace orbitforge
