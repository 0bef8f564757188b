#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gprc/genperm.hpp"
#include "gprc/surface.hpp"

namespace gprc {

// Degrees in the order given: the first entry is the one placed at the left
// endpoint by representative(), and for Abelian strata the last one at the
// right endpoint.  Poles are written as -1.
struct StratumSpec {
  Holonomy holonomy = Holonomy::Abelian;
  std::vector<int> degrees;

  int genus() const;
  int poles() const;
  std::vector<int> sorted() const;
  std::string name() const;
  // equality is as multisets
  friend bool operator==(const StratumSpec& a, const StratumSpec& b);
};

StratumSpec make_stratum(Holonomy h, std::vector<int> degrees);
StratumSpec stratum_from_profile(const SingularityProfile& prof);

enum class Label { Connected, Hyperelliptic, NonHyperelliptic, EvenSpin, OddSpin, Irr, Reg };
const char* label_name(Label l);
std::optional<Label> label_from_name(std::string_view s);

struct ComponentId {
  StratumSpec stratum;
  Label label = Label::Connected;
  friend bool operator==(const ComponentId&, const ComponentId&) = default;
};

std::string format(const ComponentId& c);

struct ComponentSpec {
  StratumSpec stratum;
  std::optional<Label> label;
};

// H(d1,...,dn) or Q(d1,...,-1^p), optional :hyp|:nonhyp|:even|:odd|:irr|:reg
ComponentSpec parse_component(std::string_view text);

std::vector<ComponentId> components_of(const StratumSpec& s);
// Resolves a missing or Connected label on a one-component stratum.
ComponentId resolve(const ComponentSpec& spec);

GenPerm representative(const ComponentId& c);
// The single-cylinder hyperelliptic family indexed by (r, s).
GenPerm hyperelliptic_cylinder(int r, int s);

bool is_hyperelliptic_diagram(const CylinderDiagram& cd);
ComponentId classify(const GenPerm& p);
int hyp_spin_parity_closed_form(const StratumSpec& s);

// The construction before any endpoint adjustment (exposed for the contraction checks).
GenPerm base_construction(const ComponentId& c);

}  // namespace gprc
