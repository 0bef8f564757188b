#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "gprc/rauzy.hpp"
#include "test_util.hpp"

using namespace gprc;

TEST_CASE("operation a") {
  CHECK(format(*op_a(parse("0 1 2 3 / 3 2 1 0")).perm) == "0 1 2 3 / 3 0 2 1");
  CHECK(format(*op_a(parse("0 1 1 / 2 2 0")).perm) == "0 0 1 1 / 2 2");
  auto bad = op_a(parse("0 1 1 0 / 2 2"));
  CHECK_FALSE(bad);
  CHECK(bad.reason == Undefined::BottomWouldDegenerate);
  auto same = op_a(parse("0 1 / 0 1"));
  CHECK_FALSE(same);
  CHECK(same.reason == Undefined::SameRightmost);
}

TEST_CASE("operation b and c") {
  CHECK(*op_b(parse("0 1 2 3 / 3 2 1 0")).perm == canonicalize(parse_labeled("0 3 1 2 / 3 2 1 0")));
  CHECK(format(op_c(parse("0 1 2 3 / 3 2 1 0"))) == "0 1 2 3 / 3 2 1 0");
  CHECK(format(op_c(parse("0 1 1 / 2 2 0"))) == "0 1 1 / 2 2 0");
}

TEST_CASE("inverse relations and involution") {
  for (int n = 2; n <= 4; ++n)
    for_each_perm(n, [](const GenPerm& p) {
      CHECK(op_c(op_c(p)) == p);
      CHECK(op_c(inverse(p)) == inverse(op_c(p)));
      auto a = op_a(inverse(p));
      auto b = op_b(p);
      CHECK(bool(a) == bool(b));
      if (a && b) CHECK(*a.perm == inverse(*b.perm));
    });
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(parse("0 1 2 3 / 3 2 1 0")));
  CHECK_FALSE(is_irreducible(parse("0 1 2 3 / 1 0 3 2")));
  CHECK(is_irreducible(parse("0 1 1 / 2 2 0")));
  CHECK_FALSE(is_irreducible(parse("0 0 / 1 1")));
}

TEST_CASE("class enumeration") {
  auto h = rauzy_class(parse("0 1 2 3 / 3 2 1 0"));
  CHECK(h.cardinality == 7);
  CHECK(h.members().size() == 7);
  auto seed = h.seed;
  CHECK(std::find(h.members().begin(), h.members().end(), seed) != h.members().end());
  CHECK(rauzy_class(parse("0 1 2 3 4 5 6 7 8 / 8 7 6 5 4 3 2 1 0")).cardinality == 255);
  CHECK(extended_rauzy_class(parse("0 1 2 3 4 5 6 / 3 2 6 5 4 1 0")).cardinality == 770);
  CHECK_THROWS_AS(rauzy_class(parse("0 1 2 3 / 1 0 3 2")), Error);
}

TEST_CASE("parallel enumeration is deterministic") {
  auto seed = parse("0 1 2 3 4 5 / 3 2 5 4 1 0");
  EnumOptions one, many;
  many.jobs = 3;
  auto a = rauzy_class(seed, one), b = rauzy_class(seed, many);
  CHECK(a.cardinality == 134);
  CHECK(a.keys == b.keys);
}

TEST_CASE("membership") {
  auto rev = parse("0 1 2 3 / 3 2 1 0");
  CHECK(contains(rev, *op_a(rev).perm, ClassKind::Rauzy));
  CHECK_FALSE(contains(rev, parse("0 1 2 3 4 / 4 3 2 1 0"), ClassKind::Rauzy));
  CHECK_FALSE(contains(parse("0 1 2 3 4 5 / 3 2 5 4 1 0"), parse("0 1 2 3 4 5 / 5 4 3 2 1 0"), ClassKind::Extended));
  auto found = find_member(rev, ClassKind::Rauzy, [](const GenPerm& p) { return p.bottom.front() == 3 && p.bottom[1] == 0; });
  REQUIRE(found);
  CHECK(format(*found) == "0 1 2 3 / 3 0 2 1");
}

TEST_CASE("class files") {
  auto dir = std::filesystem::temp_directory_path() / "gprc_test_classes";
  std::filesystem::create_directories(dir);
  auto h = rauzy_class(parse("0 1 2 3 / 3 2 1 0"));
  auto path = (dir / "h2.txt").string();
  write_class_file(h, path);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "#gprc v1 kind=rauzy seed=0 1 2 3 / 3 2 1 0 count=7");
  auto back = read_class_file(path);
  CHECK(back.cardinality == 7);
  CHECK(back.keys == h.keys);
  std::filesystem::remove_all(dir);
}
