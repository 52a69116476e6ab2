#ifndef PHYSKIT_DEMOS_HPP
#define PHYSKIT_DEMOS_HPP

#include <map>
#include <string>
#include <vector>

namespace physkit::demos {

struct DemoRecord {
  std::string name;
  std::string anchor;   // chapter anchor / short provenance
  double computed = 0.0;
  double expected = 0.0;
  double tol = 0.0;
  bool relative = false;
  bool pass = false;
};

using Options = std::map<std::string, std::string>;

// Tolerances are scaled by PHYSKIT_TOL (default 1.0).
double tolerance_scale();

DemoRecord make_record(const std::string& name, const std::string& anchor,
                       double computed, double expected, double tol,
                       bool relative = false);

std::vector<std::string> demo_names();
bool has_demo(const std::string& name);

// Runs one demo; lines (tables, CSV) produced by the demo are appended to
// *emitted when non-null.
std::vector<DemoRecord> run_demo(const std::string& name, const Options& opts,
                                 std::string* emitted = nullptr);

}  // namespace physkit::demos

#endif
