#include <doctest.h>

#include "gprc/surface.hpp"
#include "test_util.hpp"

using namespace gprc;

TEST_CASE("suspension data") {
  auto d = suspension_data(parse("0 1 2 3 / 3 2 1 0"));
  REQUIRE(d);
  CHECK(d->heights == std::vector<mpq_class>{3, 1, -1, -3});
  CHECK_FALSE(suspension_data(parse("0 0 / 1 1")));
  auto q = parse("0 1 1 / 2 2 0");
  auto e = suspension_data(q);
  REQUIRE(e);
  CHECK(check_suspension(q, *e));
}

TEST_CASE("stratum of a permutation") {
  auto h2 = stratum_of(parse("0 1 2 3 / 2 0 3 1"));
  CHECK(h2.holonomy == Holonomy::Abelian);
  CHECK(h2.degrees == std::vector<int>{2});
  CHECK(h2.genus == 2);

  auto q = stratum_of(parse("0 2 2 / 1 1 0"));
  CHECK(q.holonomy == Holonomy::Quadratic);
  CHECK(q.degrees == std::vector<int>{-1, -1, -1, -1});
  CHECK(q.genus == 0);

  auto torus = stratum_of(parse("0 1 2 / 2 1 0"));
  CHECK(torus.degrees == std::vector<int>{0, 0});
  CHECK(torus.genus == 1);
  CHECK(torus.marked_points == 2);
  CHECK(is_degenerate(parse("0 1 2 / 2 1 0")));
  CHECK_FALSE(is_degenerate(parse("0 1 2 3 / 3 2 1 0")));
  CHECK_THROWS_AS(is_degenerate(parse("0 1 2 3 / 1 0 3 2")), Error);

  CHECK_THROWS_AS(stratum_of(parse("0 1 / 0 1")), Error);
}

TEST_CASE("endpoint degrees") {
  auto p = parse("0 1 2 3 4 5 6 / 3 2 6 5 4 1 0");
  auto prof = stratum_of(p);
  CHECK(prof.degrees == std::vector<int>{3, 1});
  CHECK(prof.left_degree == 3);
  CHECK(prof.right_degree == 1);
}

TEST_CASE("stratum of a cylinder diagram") {
  auto h2 = stratum_of_diagram(make_diagram({1, 2, 3}, {3, 2, 1}));
  CHECK(h2.degrees == std::vector<int>{2});
  auto marked = stratum_of_diagram(make_diagram({1}, {1}));
  CHECK(marked.degrees == std::vector<int>{0});
  CHECK(marked.genus == 1);
  CHECK_THROWS_AS(stratum_of_diagram(make_diagram({1, 1, 2}, {2})), Error);
}

TEST_CASE("two height tests agree on small alphabets") {
  for (int n = 1; n <= 4; ++n)
    for_each_perm(n, [](const GenPerm& p) {
      if (is_true_permutation(p) || !lengths_feasible(p)) return;
      CHECK_MESSAGE(heights_feasible(p) == heights_feasible_lp(p), format(p));
    });
}

TEST_CASE("profiles obey the Euler relations and agree with diagrams") {
  for (int n = 2; n <= 5; ++n)
    for_each_perm(n, [](const GenPerm& p) {
      if (!suspension_data(p)) return;
      auto prof = stratum_of(p);
      CHECK(prof.degrees == stratum_of(inverse(p)).degrees);
      if (is_cylindrical(p)) {
        auto other = stratum_of_diagram(to_cylinder_diagram(p));
        CHECK_MESSAGE(other.degrees == prof.degrees, format(p));
      }
    });
}

TEST_CASE("stratum names") {
  CHECK(stratum_name(Holonomy::Abelian, {1, 1, 1, 1}) == "H(1^4)");
  CHECK(stratum_name(Holonomy::Quadratic, {9, -1}) == "Q(9,-1)");
  CHECK(genus_of(Holonomy::Quadratic, {12}) == 4);
}
