#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gprc/error.hpp"

namespace gprc {

using Symbol = int;
using Word = std::vector<Symbol>;

// Two words in which every symbol occurs exactly twice.  Values returned by
// the library are canonical (symbols 0..k-1 in order of first appearance,
// top line first); labeled values only come from parse_labeled/make_labeled.
struct GenPerm {
  Word top;
  Word bottom;

  std::size_t alphabet_size() const { return (top.size() + bottom.size()) / 2; }
  friend bool operator==(const GenPerm&, const GenPerm&) = default;
  friend auto operator<=>(const GenPerm&, const GenPerm&) = default;
};

// Validates multiplicities and nonempty lines, then relabels.
GenPerm make_perm(Word top, Word bottom);
// Validates but keeps the given labels.
GenPerm make_labeled(Word top, Word bottom);

GenPerm canonicalize(const GenPerm& p);
bool is_canonical(const GenPerm& p);
// Every symbol lies in 0..alphabet_size()-1.
bool has_dense_labels(const GenPerm& p);

GenPerm parse(std::string_view text);
// Integer tokens kept verbatim; used for tables quoted with their own labels.
GenPerm parse_labeled(std::string_view text);
std::string format(const GenPerm& p);

bool is_true_permutation(const GenPerm& p);
bool is_cylindrical(const GenPerm& p);
bool is_balanced(const GenPerm& p);
GenPerm inverse(const GenPerm& p);

// Removes both occurrences of every victim.  With relabel=false the labels of
// the survivors are kept, which is how contraction chains are usually quoted.
GenPerm erase_symbols(const GenPerm& p, const std::vector<Symbol>& victims, bool relabel = true);

// Cyclic words; equality is up to rotation of each word, simultaneous
// swap-and-reverse of both words, and renaming of symbols.
struct CylinderDiagram {
  Word top;
  Word bottom;

  CylinderDiagram normal_form() const;
  friend bool operator==(const CylinderDiagram& a, const CylinderDiagram& b);
};

CylinderDiagram make_diagram(Word top, Word bottom);
CylinderDiagram parse_diagram(std::string_view text);
std::string format(const CylinderDiagram& cd);

enum class Diagonal { TopFirst, BottomFirst };

CylinderDiagram to_cylinder_diagram(const GenPerm& p);
GenPerm from_cylinder_diagram(const CylinderDiagram& cd, Diagonal diagonal, std::size_t top_base,
                              std::size_t bottom_base);

// Compact byte key of a canonical permutation (used by the enumerators).
std::string encode(const GenPerm& p);
GenPerm decode(std::string_view key);

}  // namespace gprc
