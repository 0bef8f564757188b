#pragma once

#include <string>
#include <vector>

namespace gprc {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;
  double elapsed = 0;  // seconds

  bool passed() const;
  void add(std::string name, const std::string& expected, const std::string& actual);
  void add(std::string name, bool ok, const std::string& detail = {});
  void merge(const VerifyReport& other);
  std::string table() const;
  std::string json() const;  // without timing, so repeated runs compare equal
};

struct VerifyOptions {
  int jobs = 1;
  unsigned random_samples = 10000;
  unsigned seed = 20240611;
};

VerifyReport verify_abelian_classes(const VerifyOptions& opts = {});
VerifyReport verify_quadratic_classes(const VerifyOptions& opts = {});
VerifyReport verify_exceptional_classes(const VerifyOptions& opts = {});
VerifyReport verify_reversal_law(const VerifyOptions& opts = {});
VerifyReport verify_representatives(const VerifyOptions& opts = {});
VerifyReport verify_spin_forms(const VerifyOptions& opts = {});
VerifyReport verify_erasure_example(const VerifyOptions& opts = {});
VerifyReport verify_adjacency(const VerifyOptions& opts = {});
VerifyReport verify_properties(const VerifyOptions& opts = {});

// Named suites for the command line: appendix-d, table-1, adjacency,
// conventions, properties.
std::vector<std::string> suite_names();
VerifyReport run_suite(const std::string& name, const VerifyOptions& opts = {});

}  // namespace gprc
