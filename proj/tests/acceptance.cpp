#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gprc/verify.hpp"

using namespace gprc;

int main(int argc, char** argv) {
  VerifyOptions opts;
  if (argc > 1) opts.jobs = std::stoi(argv[1]);
  struct Criterion {
    const char* title;
    std::function<VerifyReport(const VerifyOptions&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"Abelian Rauzy class table", verify_abelian_classes},
      {"quadratic Rauzy class table", verify_quadratic_classes},
      {"exceptional extended classes", verify_exceptional_classes},
      {"reversal class sizes 2^(n-1)-1", verify_reversal_law},
      {"representative sweep", verify_representatives},
      {"spin parity closed forms and labels", verify_spin_forms},
      {"erasure example H(1^4) -> H(3,1)", verify_erasure_example},
      {"contraction chains", verify_adjacency},
      {"property suites", verify_properties},
  };
  std::vector<bool> wanted(criteria.size(), argc <= 2);
  for (int a = 2; a < argc; ++a) wanted.at(std::stoul(argv[a]) - 1) = true;
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!wanted[i]) continue;
    VerifyReport rep;
    std::string error;
    try {
      rep = criteria[i].run(opts);
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::size_t good = 0;
    for (const auto& c : rep.checks) good += c.pass;
    const bool ok = error.empty() && rep.passed();
    failed += !ok;
    std::printf("%s criterion %zu: %s (%zu/%zu checks, %.1f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].title,
                good, rep.checks.size(), rep.elapsed, error.empty() ? "" : " error: ", error.c_str());
    for (const auto& c : rep.checks)
      if (!c.pass)
        std::printf("    failed: %s expected=%s actual=%s\n", c.name.c_str(), c.expected.c_str(), c.actual.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
