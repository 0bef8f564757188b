#include <doctest.h>

#include "gprc/spin.hpp"

using namespace gprc;

namespace {

GenPerm reversal(int n) {
  Word top, bottom;
  for (int k = 0; k < n; ++k) top.push_back(k), bottom.push_back(n - 1 - k);
  return make_perm(top, bottom);
}

}  // namespace

TEST_CASE("intersection form") {
  auto form = omega_matrix(parse("0 1 2 3 / 3 2 1 0"));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(form.omega[i][j] == (i != j ? 1 : 0));
  CHECK(form.phi == std::vector<std::uint8_t>(4, 1));
  auto two = omega_matrix(parse("0 1 / 1 0"));
  CHECK(two.omega == std::vector<std::vector<std::uint8_t>>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(omega_matrix(parse("0 1 1 / 2 2 0")), Error);
}

TEST_CASE("spin parity") {
  CHECK(spin_parity(parse("0 1 2 3 4 5 / 3 2 5 4 1 0")) == 1);
  CHECK(spin_parity(parse("0 1 2 3 4 5 6 7 / 5 4 3 2 7 6 1 0")) == 0);
  CHECK(spin_parity(reversal(4)) == 1);
  CHECK(spin_parity(reversal(8)) == 0);
  CHECK_THROWS_AS(spin_parity(parse("0 1 1 / 2 2 0")), Error);
  CHECK_THROWS_AS(spin_parity(parse("0 1 2 3 4 / 4 3 2 1 0")), Error);
  CHECK_THROWS_AS(spin_parity(parse("0 1 2 / 2 1 0")), Error);
}

TEST_CASE("parity does not depend on the pivot choice") {
  auto form = omega_matrix(parse("0 1 2 3 4 5 6 7 / 5 4 3 2 7 6 1 0"));
  int base = spin_reduce(form).parity;
  for (unsigned seed = 1; seed < 20; ++seed) {
    auto t = spin_reduce(form, seed);
    CHECK(t.parity == base);
    CHECK(t.phi_consistent);
  }
}
