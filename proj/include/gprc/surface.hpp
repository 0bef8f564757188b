#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "gprc/genperm.hpp"

namespace gprc {

enum class Holonomy { Abelian, Quadratic };

// Indexed by symbol.  Lengths are horizontal, heights vertical.
struct SuspensionData {
  std::vector<mpq_class> lengths;
  std::vector<mpq_class> heights;
};

struct SingularityProfile {
  Holonomy holonomy = Holonomy::Abelian;
  std::vector<int> degrees;  // descending; poles last
  int genus = 0;
  int left_degree = 0;
  std::optional<int> right_degree;
  int marked_points = 0;

  friend bool operator==(const SingularityProfile&, const SingularityProfile&) = default;
};

bool lengths_feasible(const GenPerm& p);
bool heights_feasible(const GenPerm& p);
bool heights_feasible_lp(const GenPerm& p);

std::optional<SuspensionData> suspension_data(const GenPerm& p);
bool check_suspension(const GenPerm& p, const SuspensionData& data);

SingularityProfile stratum_of(const GenPerm& p);
SingularityProfile stratum_of_diagram(const CylinderDiagram& cd);
bool is_degenerate(const GenPerm& p);

int genus_of(Holonomy h, const std::vector<int>& degrees);
void sort_degrees(std::vector<int>& degrees);
std::string stratum_name(Holonomy h, std::vector<int> degrees);

}  // namespace gprc
