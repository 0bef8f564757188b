#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gprc/genperm.hpp"

namespace gprc {

enum class Undefined { SameRightmost, BottomWouldDegenerate, TopWouldDegenerate };
const char* undefined_name(Undefined u);

struct OpResult {
  std::optional<GenPerm> perm;
  Undefined reason = Undefined::SameRightmost;
  explicit operator bool() const { return perm.has_value(); }
};

OpResult op_a(const GenPerm& p);
OpResult op_b(const GenPerm& p);
GenPerm op_c(const GenPerm& p);

bool is_irreducible(const GenPerm& p);

enum class ClassKind { Rauzy, Extended };
const char* kind_name(ClassKind k);

struct EnumOptions {
  int jobs = 1;
  bool keep_members = true;
  // classes larger than this are written to GPRC_CACHE_DIR and dropped from memory
  std::size_t spill_threshold = 0;
  bool use_cache = false;
};

struct ClassHandle {
  ClassKind kind = ClassKind::Rauzy;
  GenPerm seed;
  std::size_t cardinality = 0;
  std::vector<std::string> keys;  // sorted compact keys when materialized
  std::string path;               // on-disk copy, if any

  bool materialized() const { return !keys.empty(); }
  std::vector<GenPerm> members() const;
};

ClassHandle rauzy_class(const GenPerm& seed, const EnumOptions& opts = {});
ClassHandle extended_rauzy_class(const GenPerm& seed, const EnumOptions& opts = {});
ClassHandle enumerate_class(const GenPerm& seed, ClassKind kind, const EnumOptions& opts = {});

// Closure under a, b, c through reducible permutations, then intersected with
// the irreducible ones (the original definition, only practical for small alphabets).
ClassHandle extended_class_through_reducibles(const GenPerm& seed);

bool contains(const GenPerm& seed, const GenPerm& target, ClassKind kind);
// Early exit as soon as pred accepts a member; returns that member.  A nonzero
// limit bounds the number of members visited (TooLarge beyond it).
std::optional<GenPerm> find_member(const GenPerm& seed, ClassKind kind,
                                   const std::function<bool(const GenPerm&)>& pred, std::size_t limit = 0);

void write_class_file(const ClassHandle& h, const std::string& path);
ClassHandle read_class_file(const std::string& path);
std::optional<std::string> cache_dir();
std::string cache_path(ClassKind kind, const GenPerm& seed);

}  // namespace gprc
