#include <doctest.h>

#include "gprc/genperm.hpp"
#include "test_util.hpp"

using namespace gprc;

TEST_CASE("parse relabels by first appearance") {
  CHECK(format(parse("1 2 3 4 / 4 3 2 1")) == "0 1 2 3 / 3 2 1 0");
  CHECK(format(parse("0 2 2 / 1 1 0")) == "0 1 1 / 2 2 0");
  CHECK(format(parse("0,1,1 / 2,2,0")) == "0 1 1 / 2 2 0");
}

TEST_CASE("parse rejects malformed input") {
  auto kind = [](const char* text) {
    try {
      parse(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  CHECK(kind("1 2 / 1") == ErrorKind::MalformedInput);
  CHECK(kind("0 0 0 / 1 1 0") == ErrorKind::MalformedInput);
  CHECK(kind("0 1 / 1 / 0") == ErrorKind::MalformedInput);
  CHECK(kind("a b / b") == ErrorKind::MalformedInput);
  CHECK(kind(" / 0 0") == ErrorKind::MalformedInput);
  CHECK(format(parse("a b / b a")) == "0 1 / 1 0");
}

TEST_CASE("line predicates") {
  CHECK(is_true_permutation(parse("0 1 2 3 / 3 2 1 0")));
  CHECK_FALSE(is_true_permutation(parse("0 1 1 / 2 2 0")));
  CHECK(is_true_permutation(parse("0 / 0")));
  CHECK(is_cylindrical(parse("0 1 1 / 2 3 2 3 0")));
  CHECK(is_cylindrical(parse("0 1 2 3 / 3 2 1 0")));
  CHECK_FALSE(is_cylindrical(parse("0 1 0 1 / 2 2")));
  CHECK(is_balanced(parse("0 1 2 3 / 3 2 1 0")));
  CHECK(is_balanced(parse("0 1 1 / 2 2 0")));
  CHECK_FALSE(is_balanced(parse("0 1 1 / 2 2 3 3 0")));
}

TEST_CASE("inverse") {
  CHECK(format(inverse(parse("0 1 2 3 / 3 2 1 0"))) == "0 1 2 3 / 3 2 1 0");
  CHECK(format(inverse(parse("0 1 1 / 2 2 0"))) == "0 0 1 / 1 2 2");
  for_each_perm(3, [](const GenPerm& p) {
    CHECK(inverse(inverse(p)) == p);
    CHECK(is_balanced(p) == is_balanced(inverse(p)));
  });
}

TEST_CASE("erase symbols") {
  auto base = parse("0 1 2 3 4 5 6 7 8 / 4 3 2 5 8 7 6 1 0");
  CHECK(format(erase_symbols(base, {3, 5}, false)) == "0 1 2 4 6 7 8 / 4 2 8 7 6 1 0");
  CHECK(format(erase_symbols(base, {3, 5})) == "0 1 2 3 4 5 6 / 3 2 6 5 4 1 0");
  CHECK(erase_symbols(base, {}) == base);
  CHECK_THROWS_AS(erase_symbols(parse("0 1 / 1 0"), {7}), Error);
  CHECK_THROWS_AS(erase_symbols(parse("0 0 / 1 1"), {0}), Error);
  auto reg3 = parse_labeled("0 3 12 13 6 12 13 14 14 9 / 10 3 11 10 11 6 9 0");
  auto reg6 = parse_labeled("0 12 13 6 12 13 14 14 9 / 10 11 10 11 6 9 0");
  CHECK(erase_symbols(reg3, {3}) == canonicalize(reg6));
}

TEST_CASE("cylinder diagrams") {
  auto p = parse("0 1 1 / 2 3 2 3 0");
  auto cd = to_cylinder_diagram(p);
  CHECK(cd == make_diagram({1, 1}, {2, 3, 2, 3}));
  CHECK(to_cylinder_diagram(parse("0 1 2 3 / 3 2 1 0")) == make_diagram({1, 2, 3}, {3, 2, 1}));
  CHECK_THROWS_AS(to_cylinder_diagram(parse("0 1 0 1 / 2 2")), Error);
  CHECK(from_cylinder_diagram(cd, Diagonal::TopFirst, 0, 0) == p);
  CHECK(from_cylinder_diagram(cd, Diagonal::BottomFirst, 0, 0) == parse("1 1 0 / 0 2 3 2 3"));
  CHECK_THROWS_AS(from_cylinder_diagram(cd, Diagonal::TopFirst, 5, 0), Error);
}

TEST_CASE("diagram equality up to rotation and flip") {
  CHECK(make_diagram({1, 2, 3}, {3, 2, 1}) == make_diagram({2, 3, 1}, {1, 3, 2}));
  CHECK(make_diagram({1, 1}, {2, 3, 2, 3}) == make_diagram({3, 2, 3, 2}, {1, 1}));
  CHECK_FALSE(make_diagram({1, 2, 1, 2}, {3, 4, 3, 4}) == make_diagram({1, 1}, {2, 3, 2, 3}));
}

TEST_CASE("encode round trip") {
  for_each_perm(3, [](const GenPerm& p) { CHECK(decode(encode(p)) == p); });
}
