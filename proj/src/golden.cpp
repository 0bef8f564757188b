#include "gprc/golden.hpp"

namespace gprc::golden {

namespace {

constexpr int P = -1;

}  // namespace

const std::vector<ClassRow>& abelian_class_rows() {
  static const std::vector<ClassRow> rows = {
      {Holonomy::Abelian, 2, "4,3,2,1", 7, {2}, "hyp", 1},
      {Holonomy::Abelian, 2, "5,4,3,2,1", 15, {1, 1}, "hyp", 2},
      {Holonomy::Abelian, 3, "6,5,4,3,2,1", 31, {4}, "hyp", 3},
      {Holonomy::Abelian, 3, "4,3,6,5,2,1", 134, {4}, "odd", 4},
      {Holonomy::Abelian, 3, "4,3,7,6,5,2,1", 509, {3, 1}, "", 5},
      {Holonomy::Abelian, 3, "5,4,3,7,6,2,1", 261, {1, 3}, "", 5},
      {Holonomy::Abelian, 3, "7,6,5,4,3,2,1", 63, {2, 2}, "hyp", 6},
      {Holonomy::Abelian, 3, "4,3,5,7,6,2,1", 294, {2, 2}, "odd", 7},
      {Holonomy::Abelian, 3, "5,4,3,8,7,6,2,1", 1258, {1, 2, 1}, "", 8},
      {Holonomy::Abelian, 3, "4,3,5,8,7,6,2,1", 919, {2, 1, 1}, "", 8},
      {Holonomy::Abelian, 3, "5,4,3,6,9,8,7,2,1", 1255, {1, 1, 1, 1}, "", 9},
      {Holonomy::Abelian, 4, "8,7,6,5,4,3,2,1", 127, {6}, "hyp", 10},
      {Holonomy::Abelian, 4, "6,5,4,3,8,7,2,1", 2327, {6}, "even", 11},
      {Holonomy::Abelian, 4, "4,3,6,5,8,7,2,1", 5209, {6}, "odd", 12},
      {Holonomy::Abelian, 4, "5,4,3,7,6,9,8,2,1", 10543, {1, 5}, "", 13},
      {Holonomy::Abelian, 4, "4,3,6,5,9,8,7,2,1", 31031, {5, 1}, "", 13},
      {Holonomy::Abelian, 4, "7,6,5,4,3,9,8,2,1", 3954, {2, 4}, "even", 14},
      {Holonomy::Abelian, 4, "6,5,4,3,7,9,8,2,1", 6614, {4, 2}, "even", 14},
      {Holonomy::Abelian, 4, "4,3,5,7,6,9,8,2,1", 8797, {2, 4}, "odd", 15},
      {Holonomy::Abelian, 4, "4,3,6,5,7,9,8,2,1", 14709, {4, 2}, "odd", 15},
      {Holonomy::Abelian, 4, "9,8,7,6,5,4,3,2,1", 255, {3, 3}, "hyp", 16},
      {Holonomy::Abelian, 4, "4,3,7,6,5,9,8,2,1", 15568, {3, 3}, "nonhyp", 17},
  };
  return rows;
}

const std::vector<ClassRow>& quadratic_class_rows() {
  static const std::vector<ClassRow> rows = {
      {Holonomy::Quadratic, 0, "122/331", 4, {P, P, P, P}, "", 1},
      {Holonomy::Quadratic, 0, "122/3344551", 10, {1, P, P, P, P, P}, "", 2},
      {Holonomy::Quadratic, 0, "1233442/551", 22, {P, P, P, P, P, 1}, "", 2},
      {Holonomy::Quadratic, 0, "122/334455661", 13, {2, P, P, P, P, P, P}, "", 3},
      {Holonomy::Quadratic, 0, "123344552/661", 28, {P, P, P, P, P, P, 2}, "", 3},
      {Holonomy::Quadratic, 1, "1233/2441", 43, {2, P, P}, "", 4},
      {Holonomy::Quadratic, 1, "1233/4241", 20, {P, P, 2}, "", 4},
      {Holonomy::Quadratic, 1, "123344/2551", 198, {3, P, P, P}, "", 5},
      {Holonomy::Quadratic, 1, "123344/5251", 120, {P, P, P, 3}, "", 5},
      {Holonomy::Quadratic, 1, "12334455/2661", 596, {4, P, P, P, P}, "", 6},
      {Holonomy::Quadratic, 1, "12334455/6261", 440, {P, P, P, P, 4}, "", 6},
      {Holonomy::Quadratic, 1, "12344/32551", 128, {1, 1, P, P}, "", 7},
      {Holonomy::Quadratic, 1, "12344/53251", 34, {P, P, 1, 1}, "", 7},
      {Holonomy::Quadratic, 1, "1233455/42661", 714, {2, 1, P, P, P}, "", 8},
      {Holonomy::Quadratic, 1, "1234455/32661", 514, {1, 2, P, P, P}, "", 8},
      {Holonomy::Quadratic, 1, "1233455/64261", 510, {P, P, P, 2, 1}, "", 8},
      {Holonomy::Quadratic, 2, "12324/45531", 440, {5, P}, "", 9},
      {Holonomy::Quadratic, 2, "12324/53451", 54, {P, 5}, "", 9},
      {Holonomy::Quadratic, 2, "12324/4556631", 4832, {6, P, P}, "nonhyp", 10},
      {Holonomy::Quadratic, 2, "12324/5346651", 1118, {P, P, 6}, "nonhyp", 10},
      {Holonomy::Quadratic, 2, "122345/543661", 347, {6, P, P}, "hyp", 11},
      {Holonomy::Quadratic, 2, "123452/654361", 60, {P, P, 6}, "hyp", 11},
      {Holonomy::Quadratic, 2, "12324/54531", 73, {2, 2}, "", 12},
      {Holonomy::Quadratic, 2, "12324/5456631", 1666, {3, 2, P}, "", 13},
      {Holonomy::Quadratic, 2, "12324/5466531", 1348, {2, 3, P}, "", 13},
      {Holonomy::Quadratic, 2, "12324/5364651", 294, {P, 3, 2}, "", 13},
      {Holonomy::Quadratic, 2, "123245/546631", 2062, {4, 1, P}, "", 14},
      {Holonomy::Quadratic, 2, "123425/356641", 1076, {1, 4, P}, "", 14},
      {Holonomy::Quadratic, 2, "123245/635461", 260, {P, 4, 1}, "", 14},
      {Holonomy::Quadratic, 2, "123245/654631", 125, {2, 1, 1}, "", 15},
      {Holonomy::Quadratic, 2, "123425/365641", 220, {1, 1, 2}, "", 15},
      {Holonomy::Quadratic, 3, "123234/565641", 2590, {8}, "", 16},
  };
  return rows;
}

GenPerm seed_of(const ClassRow& row) {
  Word top, bottom;
  if (row.holonomy == Holonomy::Abelian) {
    std::size_t pos = 0;
    while (pos < row.seed.size()) {
      std::size_t end = row.seed.find(',', pos);
      if (end == std::string::npos) end = row.seed.size();
      bottom.push_back(std::stoi(row.seed.substr(pos, end - pos)));
      pos = end + 1;
    }
    for (std::size_t k = 1; k <= bottom.size(); ++k) top.push_back(static_cast<Symbol>(k));
    return make_perm(top, bottom);
  }
  auto slash = row.seed.find('/');
  for (std::size_t i = 0; i < row.seed.size(); ++i)
    if (i != slash) (i < slash ? top : bottom).push_back(row.seed[i] - '0');
  return make_perm(top, bottom);
}

const std::vector<ExtendedRow>& exceptional_table() {
  static const std::vector<ExtendedRow> rows = {
      {"Q(3,3,3,-1):irr", "0,1,2,3,4,5,1,6,2,3,4,5,6,7 / 7,8,8,0", 88374},
      {"Q(6,3,-1):irr", "0,1,2,3,4,5,1,2,3,4,5,6 / 6,7,7,0", 72172},
      {"Q(9,-1):irr", "0,1,2,3,4,1,2,3,4,5 / 5,6,6,0", 12366},
      {"Q(3,3,3,-1):reg", "0,1,2,3,4,2,3,5,5,6 / 7,1,8,7,8,4,6,0", 612838},
      {"Q(6,3,-1):reg", "0,1,2,3,1,2,4,4,5 / 6,7,6,7,3,5,0", 531674},
      {"Q(9,-1):reg", "0,1,2,1,2,3,3,4 / 5,6,5,6,4,0", 95944},
      {"Q(12):irr", "0,1,2,3,4,5,6,5 / 7,6,4,7,3,2,1,0", 146049},
      {"Q(12):reg", "0,1,2,1,2,3,4,3,4,5 / 5,6,7,6,7,0", 881599},
  };
  return rows;
}

const std::vector<ChainStep>& regular_chain() {
  static const std::vector<ChainStep> rows = {
      {"Q(1^9,-1)", "0,1,2,3,4,12,7,13,6,12,5,13,8,14,14,9 / 10,3,11,2,10,1,11,4,5,6,7,8,9,0"},
      {"Q(3,3,3,-1):reg", "0,3,12,13,6,12,13,14,14,9 / 10,3,11,10,11,6,9,0"},
      {"Q(6,3,-1):reg", "0,12,13,6,12,13,14,14,9 / 10,11,10,11,6,9,0"},
      {"Q(9,-1):reg", "0,12,13,12,13,14,14,9 / 10,11,10,11,9,0"},
  };
  return rows;
}

const std::vector<ChainStep>& pole_merging_chain() {
  static const std::vector<ChainStep> rows = {
      {"Q(3,3,2)", "0,3,12,13,6,12,13,9 / 10,3,11,10,11,6,9,0"},
      {"Q(6,2)", "0,12,13,6,12,13,9 / 10,11,10,11,6,9,0"},
      {"Q(8)", "0,12,13,12,13,9 / 10,11,10,11,9,0"},
  };
  return rows;
}

const ErasureExample& erasure_example() {
  static const ErasureExample ex = {"0,1,2,3,4,5,6,7,8 / 4,3,2,5,8,7,6,1,0", {3, 5},
                                    "0,1,2,4,6,7,8 / 4,2,8,7,6,1,0", "H(3,1)", 3};
  return ex;
}

}  // namespace gprc::golden
