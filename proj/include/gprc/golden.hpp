#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gprc/components.hpp"
#include "gprc/genperm.hpp"

namespace gprc::golden {

// One row of the published Rauzy class tables.  Degrees are listed with the
// left endpoint first (and, for Abelian rows, the right endpoint last).  Rows
// sharing a block id lie in the same extended class.
struct ClassRow {
  Holonomy holonomy;
  int genus;
  std::string seed;  // as printed, symbols numbered from 1
  std::size_t count;
  std::vector<int> degrees;
  std::string label;  // "hyp", "odd", "even", "nonhyp" or empty
  int block;
};

const std::vector<ClassRow>& abelian_class_rows();
const std::vector<ClassRow>& quadratic_class_rows();
GenPerm seed_of(const ClassRow& row);

struct ExtendedRow {
  std::string component;  // e.g. "Q(9,-1):irr"
  std::string seed;       // as printed, numbered from 0
  std::size_t count;
};

const std::vector<ExtendedRow>& exceptional_table();

// Contraction chains quoted with their own symbol labels.
struct ChainStep {
  std::string stratum;
  std::string perm;
};

const std::vector<ChainStep>& regular_chain();
const std::vector<ChainStep>& pole_merging_chain();

// The worked erasure example: base, erased labels, expected result.
struct ErasureExample {
  std::string base;
  std::vector<Symbol> erased;
  std::string result;
  std::string stratum;
  int left_degree;
};

const ErasureExample& erasure_example();

}  // namespace gprc::golden
