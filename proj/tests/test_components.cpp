#include <doctest.h>

#include "gprc/components.hpp"
#include "gprc/rauzy.hpp"
#include "gprc/spin.hpp"

using namespace gprc;

namespace {

std::vector<Label> labels(const char* spec) {
  std::vector<Label> out;
  for (const auto& c : components_of(parse_component(spec).stratum)) out.push_back(c.label);
  return out;
}

ErrorKind error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("stratum specs") {
  auto s = parse_component("Q(3^3, -1):reg");
  CHECK(s.stratum.holonomy == Holonomy::Quadratic);
  CHECK(s.stratum.degrees == std::vector<int>{3, 3, 3, -1});
  CHECK(s.label == Label::Reg);
  CHECK(s.stratum.genus() == 3);
  CHECK(parse_component("H(1,3)").stratum == parse_component("H(3,1)").stratum);
  CHECK(error_of([] { parse_component("H(3)"); }) == ErrorKind::InvalidStratum);
  CHECK(error_of([] { parse_component("Q(2,1)"); }) == ErrorKind::InvalidStratum);
  CHECK(error_of([] { parse_component("X(2)"); }) == ErrorKind::MalformedInput);
  CHECK(error_of([] { parse_component("H(2):blue"); }) == ErrorKind::MalformedInput);
}

TEST_CASE("component lists") {
  CHECK(labels("H(4)") == std::vector<Label>{Label::Hyperelliptic, Label::OddSpin});
  CHECK(labels("H(6)") == std::vector<Label>{Label::Hyperelliptic, Label::EvenSpin, Label::OddSpin});
  CHECK(labels("H(3,1)") == std::vector<Label>{Label::Connected});
  CHECK(labels("Q(4)").empty());
  CHECK(labels("Q(3,1)").empty());
  CHECK(labels("Q(12)") == std::vector<Label>{Label::Irr, Label::Reg});
  CHECK(labels("Q(6,2)").size() == 2);
}

TEST_CASE("representatives") {
  CHECK(format(representative(resolve(parse_component("H(3,1)")))) == "0 1 2 3 4 5 6 / 3 2 6 5 4 1 0");
  CHECK(format(representative(resolve(parse_component("H(2):hyp")))) == "0 1 2 3 / 3 2 1 0");
  CHECK(format(representative(resolve(parse_component("Q(9,-1):irr")))) == "0 1 2 3 4 1 2 3 4 5 / 5 6 6 0");
  CHECK(error_of([] { representative(resolve(parse_component("Q(4)"))); }) == ErrorKind::EmptyStratum);
  CHECK(error_of([] { resolve(parse_component("H(4):even")); }) == ErrorKind::UnsupportedLabel);
  CHECK(error_of([] { resolve(parse_component("H(4)")); }) == ErrorKind::NoSuchComponent);
}

TEST_CASE("representatives classify back and are cylindrical") {
  for (const char* spec : {"H(4):odd", "H(2,2):hyp", "H(6):even", "Q(2,2)", "Q(6,-1,-1):hyp", "Q(1,1,-1,-1)", "Q(8)"}) {
    auto id = resolve(parse_component(spec));
    auto p = representative(id);
    CHECK(is_cylindrical(p));
    CHECK_MESSAGE(classify(p) == id, spec);
  }
}

TEST_CASE("hyperelliptic diagrams") {
  CHECK(is_hyperelliptic_diagram(make_diagram({1, 2, 3}, {3, 2, 1})));
  CHECK(is_hyperelliptic_diagram(make_diagram({1, 2, 1, 2}, {3, 4, 3, 4})));
  CHECK(is_hyperelliptic_diagram(make_diagram({1, 1}, {2, 3, 2, 3})));
  CHECK_FALSE(is_hyperelliptic_diagram(to_cylinder_diagram(parse("0 10 9 10 6 / 3 6 7 7 3 8 8 9 0"))));
  CHECK_FALSE(is_hyperelliptic_diagram(to_cylinder_diagram(parse("0 1 2 3 4 5 / 3 2 5 4 1 0"))));
  CHECK_THROWS_AS(is_hyperelliptic_diagram(make_diagram({1, 1, 2}, {2})), Error);
}

TEST_CASE("classification") {
  CHECK(format(classify(parse("0 1 2 3 4 5 / 3 2 5 4 1 0"))) == "H(4):odd");
  CHECK(format(classify(parse("0 1 2 1 3 / 4 3 4 2 0"))) == "Q(2^2)");
  CHECK(format(classify(parse("0 1 2 1 2 3 3 4 / 5 6 5 6 4 0"))) == "Q(9,-1):reg");
  CHECK(error_of([] { classify(parse("0 1 2 3 / 1 0 3 2")); }) == ErrorKind::Reducible);
  CHECK(error_of([] { classify(parse("0 1 2 / 2 1 0")); }) == ErrorKind::Degenerate);
}

TEST_CASE("closed-form hyperelliptic parity") {
  CHECK(hyp_spin_parity_closed_form(make_stratum(Holonomy::Abelian, {2})) == 1);
  CHECK(hyp_spin_parity_closed_form(make_stratum(Holonomy::Abelian, {4, 4})) == 1);
  CHECK(error_of([] { hyp_spin_parity_closed_form(make_stratum(Holonomy::Abelian, {1, 1})); }) ==
        ErrorKind::NotApplicable);
  for (int g = 2; g <= 5; ++g) {
    auto s = make_stratum(Holonomy::Abelian, {2 * g - 2});
    CHECK(spin_parity(representative({s, Label::Hyperelliptic})) == hyp_spin_parity_closed_form(s));
  }
}

TEST_CASE("hyperelliptic cylinder family") {
  auto p = hyperelliptic_cylinder(1, 1);
  CHECK(is_cylindrical(p));
  CHECK(format(classify(p)) == "Q(2^2)");
}
