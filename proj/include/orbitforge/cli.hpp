#pragma once

#include "orbitforge/hamiltonians.hpp"
#include "orbitforge/report.hpp"
#include "orbitforge/rings.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitforge {

/// Every suite name accepted by `verify --suite`, in report order.
const std::vector<std::string>& suite_names();

struct SuiteOptions {
  GaugeOptions gauge;
};

/// Throws std::invalid_argument for an unknown suite or for qes with trig.
Report run_suite(const std::string& name, Model m, const SuiteOptions& opt = {});
/// All suites of the model run concurrently, merged in name order.
Report run_all_suites(Model m, const SuiteOptions& opt = {});

class BoundarySingularity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Entry point of the orbitforge executable. Returns the process exit code:
/// 0 on success, 1 on a failed check or domain error, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitforge
