#include "gprc/rauzy.hpp"

#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <thread>

#include "gprc/surface.hpp"

namespace gprc {

const char* undefined_name(Undefined u) {
  switch (u) {
    case Undefined::SameRightmost: return "SameRightmost";
    case Undefined::BottomWouldDegenerate: return "BottomWouldDegenerate";
    case Undefined::TopWouldDegenerate: return "TopWouldDegenerate";
  }
  return "?";
}

const char* kind_name(ClassKind k) { return k == ClassKind::Rauzy ? "rauzy" : "extended"; }

namespace {

// The move of operation a with `upper` playing the top line.
std::optional<Undefined> move_a(Word& upper, Word& lower) {
  const Symbol x = upper.back();
  if (lower.back() == x) return Undefined::SameRightmost;
  auto in_lower = std::find(lower.begin(), lower.end(), x);
  const Symbol beta = lower.back();
  if (in_lower != lower.end()) {
    std::size_t k = in_lower - lower.begin();
    lower.pop_back();
    lower.insert(lower.begin() + k + 1, beta);
    return std::nullopt;
  }
  std::size_t twin = std::find(upper.begin(), upper.end(), x) - upper.begin();
  std::size_t beta_count = std::count(lower.begin(), lower.end(), beta);
  bool others_single = true;
  for (std::size_t i = 0; i + 1 < lower.size() && others_single; ++i)
    if (lower[i] != beta && std::count(lower.begin(), lower.end(), lower[i]) != 1) others_single = false;
  if ((beta_count == 2 && others_single) || lower.size() == 1) return Undefined::BottomWouldDegenerate;
  lower.pop_back();
  upper.insert(upper.begin() + twin, beta);
  return std::nullopt;
}

}  // namespace

OpResult op_a(const GenPerm& p) {
  GenPerm q = p;
  OpResult res;
  if (auto bad = move_a(q.top, q.bottom)) {
    res.reason = *bad;
    return res;
  }
  res.perm = canonicalize(q);
  return res;
}

OpResult op_b(const GenPerm& p) {
  GenPerm q = p;
  OpResult res;
  if (auto bad = move_a(q.bottom, q.top)) {
    res.reason = *bad == Undefined::BottomWouldDegenerate ? Undefined::TopWouldDegenerate : *bad;
    return res;
  }
  res.perm = canonicalize(q);
  return res;
}

GenPerm op_c(const GenPerm& p) {
  return canonicalize(GenPerm{Word(p.bottom.rbegin(), p.bottom.rend()), Word(p.top.rbegin(), p.top.rend())});
}

bool is_irreducible(const GenPerm& p) {
  if (!has_dense_labels(p)) return is_irreducible(canonicalize(p));
  if (is_true_permutation(p)) {
    const std::size_t n = p.top.size();
    std::vector<char> in_top(n, 0), in_bottom(n, 0);
    std::size_t common = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      in_top[p.top[k]] = 1;
      if (in_bottom[p.top[k]]) ++common;
      in_bottom[p.bottom[k]] = 1;
      if (in_top[p.bottom[k]]) ++common;
      if (common == k + 1) return false;
    }
    return true;
  }
  return lengths_feasible(p) && heights_feasible(p);
}

std::vector<GenPerm> ClassHandle::members() const {
  std::vector<GenPerm> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(decode(k));
  return out;
}

namespace {

using KeySet = absl::flat_hash_set<std::string>;

struct Explorer {
  ClassKind kind;
  int jobs = 1;
  KeySet seen;
  KeySet reducible;  // c-images already found reducible
  std::size_t limit = 0;

  // neighbours of one member; c-images are tested only when not yet known
  void expand(const std::string& key, std::vector<std::string>& out, std::vector<std::string>& bad) const {
    GenPerm p = decode(key);
    if (auto a = op_a(p)) out.push_back(encode(*a.perm));
    if (auto b = op_b(p)) out.push_back(encode(*b.perm));
    if (kind == ClassKind::Extended) {
      std::string c = encode(op_c(p));
      if (seen.contains(c)) return;
      if (reducible.contains(c)) return;
      if (is_irreducible(decode(c)))
        out.push_back(std::move(c));
      else
        bad.push_back(std::move(c));
    }
  }

  // returns the member accepted by stop, if any
  std::optional<std::string> run(const std::string& seed, const std::function<bool(const std::string&)>& stop) {
    seen.insert(seed);
    if (stop && stop(seed)) return seed;
    std::vector<std::string> frontier{seed};
    while (!frontier.empty()) {
      std::vector<std::vector<std::string>> found(std::max(1, jobs)), rejected(std::max(1, jobs));
      if (jobs <= 1 || frontier.size() < 64) {
        for (const auto& k : frontier) expand(k, found[0], rejected[0]);
      } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
          pool.emplace_back([&, t] {
            for (std::size_t i = t; i < frontier.size(); i += jobs) expand(frontier[i], found[t], rejected[t]);
          });
        for (auto& th : pool) th.join();
      }
      std::vector<std::string> next;
      for (auto& part : rejected)
        for (auto& k : part) reducible.insert(std::move(k));
      for (auto& part : found)
        for (auto& k : part) {
          if (!seen.insert(k).second) continue;
          if (limit && seen.size() > limit) throw Error(ErrorKind::TooLarge, "class exceeds search limit");
          if (stop && stop(k)) return k;
          next.push_back(std::move(k));
        }
      frontier = std::move(next);
    }
    return std::nullopt;
  }
};

void require_irreducible(const GenPerm& seed) {
  if (!is_irreducible(seed)) throw Error(ErrorKind::Reducible, format(seed));
}

}  // namespace

std::optional<std::string> cache_dir() {
  const char* dir = std::getenv("GPRC_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::string(dir);
}

std::string cache_path(ClassKind kind, const GenPerm& seed) {
  auto dir = cache_dir();
  if (!dir) return {};
  std::string name = kind_name(kind);
  name += '_';
  for (std::size_t i = 0; i < seed.top.size(); ++i) name += (i ? "." : "") + std::to_string(seed.top[i]);
  name += '_';
  for (std::size_t i = 0; i < seed.bottom.size(); ++i) name += (i ? "." : "") + std::to_string(seed.bottom[i]);
  return (std::filesystem::path(*dir) / (name + ".gprc")).string();
}

ClassHandle enumerate_class(const GenPerm& raw_seed, ClassKind kind, const EnumOptions& opts) {
  GenPerm seed = canonicalize(raw_seed);
  require_irreducible(seed);
  if (opts.use_cache) {
    std::string path = cache_path(kind, seed);
    if (!path.empty() && std::filesystem::exists(path)) {
      ClassHandle h = read_class_file(path);
      if (h.seed == seed && h.kind == kind) {
        if (!opts.keep_members) h.keys.clear();
        return h;
      }
    }
  }
  Explorer ex{kind, opts.jobs, {}, {}};
  ex.run(encode(seed), nullptr);
  ClassHandle h;
  h.kind = kind;
  h.seed = seed;
  h.cardinality = ex.seen.size();
  bool spill = opts.spill_threshold > 0 && h.cardinality > opts.spill_threshold && cache_dir();
  if (opts.keep_members || spill || opts.use_cache) {
    h.keys.assign(ex.seen.begin(), ex.seen.end());
    std::sort(h.keys.begin(), h.keys.end());
  }
  if ((spill || opts.use_cache) && cache_dir()) {
    std::filesystem::create_directories(*cache_dir());
    h.path = cache_path(kind, seed);
    write_class_file(h, h.path);
  }
  if (!opts.keep_members || spill) h.keys.clear(), h.keys.shrink_to_fit();
  return h;
}

ClassHandle rauzy_class(const GenPerm& seed, const EnumOptions& opts) {
  return enumerate_class(seed, ClassKind::Rauzy, opts);
}

ClassHandle extended_rauzy_class(const GenPerm& seed, const EnumOptions& opts) {
  return enumerate_class(seed, ClassKind::Extended, opts);
}

ClassHandle extended_class_through_reducibles(const GenPerm& raw_seed) {
  GenPerm seed = canonicalize(raw_seed);
  require_irreducible(seed);
  std::set<GenPerm> seen{seed};
  std::vector<GenPerm> stack{seed};
  while (!stack.empty()) {
    GenPerm p = stack.back();
    stack.pop_back();
    std::vector<GenPerm> next;
    if (auto a = op_a(p)) next.push_back(*a.perm);
    if (auto b = op_b(p)) next.push_back(*b.perm);
    next.push_back(op_c(p));
    for (auto& q : next)
      if (seen.insert(q).second) stack.push_back(q);
  }
  ClassHandle h;
  h.kind = ClassKind::Extended;
  h.seed = seed;
  for (const auto& p : seen)
    if (is_irreducible(p)) h.keys.push_back(encode(p));
  std::sort(h.keys.begin(), h.keys.end());
  h.cardinality = h.keys.size();
  return h;
}

std::optional<GenPerm> find_member(const GenPerm& raw_seed, ClassKind kind,
                                   const std::function<bool(const GenPerm&)>& pred, std::size_t limit) {
  GenPerm seed = canonicalize(raw_seed);
  require_irreducible(seed);
  Explorer ex{kind, 1, {}, {}, limit};
  auto hit = ex.run(encode(seed), [&](const std::string& k) { return pred(decode(k)); });
  if (!hit) return std::nullopt;
  return decode(*hit);
}

bool contains(const GenPerm& seed, const GenPerm& target, ClassKind kind) {
  GenPerm t = canonicalize(target);
  if (t.alphabet_size() != seed.alphabet_size()) {
    require_irreducible(canonicalize(seed));
    return false;
  }
  std::string want = encode(t);
  GenPerm s = canonicalize(seed);
  require_irreducible(s);
  Explorer ex{kind, 1, {}, {}};
  return ex.run(encode(s), [&](const std::string& k) { return k == want; }).has_value();
}

void write_class_file(const ClassHandle& h, const std::string& path) {
  std::vector<std::string> lines;
  lines.reserve(h.keys.size());
  for (const auto& k : h.keys) lines.push_back(format(decode(k)));
  std::sort(lines.begin(), lines.end());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << "#gprc v1 kind=" << kind_name(h.kind) << " seed=" << format(h.seed) << " count=" << lines.size()
      << '\n';
  for (const auto& l : lines) out << l << '\n';
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

ClassHandle read_class_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  std::string header;
  std::getline(in, header);
  const std::string magic = "#gprc v1 kind=";
  auto seed_at = header.find(" seed="), count_at = header.rfind(" count=");
  if (header.rfind(magic, 0) != 0 || seed_at == std::string::npos || count_at == std::string::npos)
    throw Error(ErrorKind::Io, "bad class file header in " + path);
  ClassHandle h;
  std::string kind = header.substr(magic.size(), seed_at - magic.size());
  if (kind != "rauzy" && kind != "extended") throw Error(ErrorKind::Io, "bad kind in " + path);
  h.kind = kind == "rauzy" ? ClassKind::Rauzy : ClassKind::Extended;
  h.seed = parse(header.substr(seed_at + 6, count_at - seed_at - 6));
  std::size_t count = std::stoull(header.substr(count_at + 7));
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) h.keys.push_back(encode(parse(line)));
  if (h.keys.size() != count) throw Error(ErrorKind::Io, "member count mismatch in " + path);
  std::sort(h.keys.begin(), h.keys.end());
  h.cardinality = count;
  h.path = path;
  return h;
}

}  // namespace gprc
