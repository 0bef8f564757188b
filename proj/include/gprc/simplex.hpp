#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace gprc {

struct LpResult {
  bool bounded = true;
  mpq_class value;
  std::vector<mpq_class> x;
};

// maximize c.x subject to A x <= b, x >= 0, with b >= 0 (origin feasible).
// Dense tableau, Bland's rule, exact rationals.
LpResult maximize(const std::vector<std::vector<mpq_class>>& A, const std::vector<mpq_class>& b,
                  const std::vector<mpq_class>& c);

}  // namespace gprc
