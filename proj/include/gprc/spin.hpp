#pragma once

#include <cstdint>
#include <vector>

#include "gprc/genperm.hpp"

namespace gprc {

// Intersection form of the first-return cycles over GF(2) plus the values of
// the quadratic form on them.
struct IntersectionForm {
  std::vector<std::vector<std::uint8_t>> omega;
  std::vector<std::uint8_t> phi;
};

IntersectionForm omega_matrix(const GenPerm& p);

struct SpinTrace {
  int parity = 0;
  int pairs = 0;
  bool phi_consistent = true;  // incremental phi agrees with the quadratic-form law
};

// pivot_seed = 0 picks the least admissible partner; other values pick a
// pseudo-random admissible partner (used to check independence of the choice).
SpinTrace spin_reduce(const IntersectionForm& form, unsigned pivot_seed = 0);

int spin_parity(const GenPerm& p);

}  // namespace gprc
