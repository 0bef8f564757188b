#include "gprc/surface.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "gprc/simplex.hpp"

namespace gprc {

namespace {

enum class Kind { Shared, TopPair, BottomPair };

struct Letter {
  Kind kind;
  int first = -1;   // position in its line (top line for Shared)
  int second = -1;  // second position (bottom line for Shared)
};

mpq_class ratio(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::vector<Letter> letters_of(const GenPerm& p) {
  std::vector<Letter> out(p.alphabet_size());
  std::vector<int> seen_top(out.size(), 0), seen_bot(out.size(), 0);
  for (int i = 0; i < static_cast<int>(p.top.size()); ++i) {
    auto& l = out[p.top[i]];
    if (seen_top[p.top[i]]++ == 0) {
      l.first = i;
      l.kind = Kind::Shared;
    } else {
      l.second = i;
      l.kind = Kind::TopPair;
    }
  }
  for (int j = 0; j < static_cast<int>(p.bottom.size()); ++j) {
    auto& l = out[p.bottom[j]];
    if (seen_top[p.bottom[j]]) {
      l.second = j;
    } else if (seen_bot[p.bottom[j]]++ == 0) {
      l.first = j;
      l.kind = Kind::BottomPair;
    } else {
      l.second = j;
    }
  }
  return out;
}

// Implication-graph 2-SAT, literals 2v (true) and 2v+1 (false).
class TwoSat {
 public:
  explicit TwoSat(int vars) : adj_(2 * vars) {}
  static int pos(int v) { return 2 * v; }
  static int neg(int v) { return 2 * v + 1; }
  void implies(int a, int b) {
    adj_[a].push_back(b);
    adj_[b ^ 1].push_back(a ^ 1);
  }
  void equal(int a, int b) {
    implies(a, b);
    implies(b, a);
  }
  void unit(int a) { adj_[a ^ 1].push_back(a); }

  bool satisfiable() {
    const int n = static_cast<int>(adj_.size());
    index_.assign(n, -1);
    low_.assign(n, 0);
    comp_.assign(n, -1);
    on_stack_.assign(n, false);
    counter_ = 0;
    ncomp_ = 0;
    for (int v = 0; v < n; ++v)
      if (index_[v] < 0) strongconnect(v);
    for (int v = 0; v < n; v += 2)
      if (comp_[v] == comp_[v + 1]) return false;
    return true;
  }

 private:
  void strongconnect(int root) {
    std::vector<std::pair<int, std::size_t>> work{{root, 0}};
    index_[root] = low_[root] = counter_++;
    stack_.push_back(root);
    on_stack_[root] = true;
    while (!work.empty()) {
      auto& [v, k] = work.back();
      if (k < adj_[v].size()) {
        int w = adj_[v][k++];
        if (index_[w] < 0) {
          index_[w] = low_[w] = counter_++;
          stack_.push_back(w);
          on_stack_[w] = true;
          work.emplace_back(w, 0);
        } else if (on_stack_[w]) {
          low_[v] = std::min(low_[v], index_[w]);
        }
        continue;
      }
      if (low_[v] == index_[v]) {
        int w;
        do {
          w = stack_.back();
          stack_.pop_back();
          on_stack_[w] = false;
          comp_[w] = ncomp_;
        } while (w != v);
        ++ncomp_;
      }
      int done = v;
      work.pop_back();
      if (!work.empty()) low_[work.back().first] = std::min(low_[work.back().first], low_[done]);
    }
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> index_, low_, comp_, stack_;
  std::vector<bool> on_stack_;
  int counter_ = 0, ncomp_ = 0;
};

// Searches for a nonzero Farkas certificate of the height system.  Multipliers
// of the prefix inequalities accumulate to nonincreasing staircases along each
// line; after thresholding they can be taken with values in {0,1,2} (pairs on
// one line summing to 2) or in {0,1} (paired letters carrying zero).
bool certificate_exists(const GenPerm& p, const std::vector<Letter>& letters, bool half_steps,
                        bool start_top) {
  const int r = static_cast<int>(p.top.size()), s = static_cast<int>(p.bottom.size());
  const int npos = r + s;
  TwoSat sat(2 * npos);
  auto x = [&](int id) { return TwoSat::pos(id); };
  auto y = [&](int id) { return TwoSat::pos(npos + id); };
  auto bot = [&](int j) { return r + j; };

  for (int line = 0; line < 2; ++line) {
    int base = line ? r : 0, len = line ? s : r;
    for (int i = 0; i + 1 < len; ++i) {
      sat.implies(x(base + i + 1), x(base + i));
      sat.implies(y(base + i + 1), y(base + i));
    }
    for (int i = 0; i < len; ++i) sat.implies(y(base + i), x(base + i));
    sat.unit(x(base + len - 1) ^ 1);
  }
  for (int id = 0; id < npos && !half_steps; ++id) sat.unit(y(id) ^ 1);

  for (const auto& l : letters) {
    if (l.kind == Kind::Shared) {
      sat.equal(x(l.first), x(bot(l.second)));
      sat.equal(y(l.first), y(bot(l.second)));
      continue;
    }
    int a = l.kind == Kind::TopPair ? l.first : bot(l.first);
    int b = l.kind == Kind::TopPair ? l.second : bot(l.second);
    if (half_steps) {
      sat.equal(x(b), y(a) ^ 1);
      sat.equal(y(b), x(a) ^ 1);
    } else {
      sat.unit(x(a) ^ 1);
      sat.unit(x(b) ^ 1);
    }
  }
  sat.unit(start_top ? x(0) : x(bot(0)));
  return sat.satisfiable();
}

struct Point {
  double x, y;
};

void check_profile(const SingularityProfile& prof, std::size_t alphabet) {
  int sum = std::accumulate(prof.degrees.begin(), prof.degrees.end(), 0);
  int expect = prof.holonomy == Holonomy::Abelian ? 2 * prof.genus - 2 : 4 * prof.genus - 4;
  if (sum != expect || static_cast<int>(alphabet) != 2 * prof.genus + static_cast<int>(prof.degrees.size()) - 1)
    throw Error(ErrorKind::RoundingUnstable, "profile violates the Euler characteristic relations");
}

int degree_from_angle(Holonomy h, int multiple_of_pi) {
  if (h == Holonomy::Quadratic) return multiple_of_pi - 2;
  if (multiple_of_pi % 2)
    throw Error(ErrorKind::RoundingUnstable, "odd multiple of pi on a translation surface");
  return multiple_of_pi / 2 - 1;
}

}  // namespace

bool lengths_feasible(const GenPerm& p) {
  if (!has_dense_labels(p)) return lengths_feasible(canonicalize(p));
  bool top_pair = false, bottom_pair = false;
  for (const auto& l : letters_of(p)) {
    top_pair |= l.kind == Kind::TopPair;
    bottom_pair |= l.kind == Kind::BottomPair;
  }
  return top_pair == bottom_pair;
}

bool heights_feasible(const GenPerm& p) {
  if (!has_dense_labels(p)) return heights_feasible(canonicalize(p));
  auto letters = letters_of(p);
  for (bool half : {true, false})
    for (bool start_top : {true, false})
      if (certificate_exists(p, letters, half, start_top)) return false;
  return true;
}

namespace {

// maximize eps with top prefixes >= eps, bottom prefixes <= -eps, equal totals, eps <= 1
std::optional<std::vector<mpq_class>> solve_heights(const GenPerm& p, bool level_ends) {
  const std::size_t n = p.alphabet_size();
  const std::size_t nv = 2 * n + 1, eps = 2 * n;
  std::vector<std::vector<mpq_class>> A;
  std::vector<mpq_class> b;
  auto add_row = [&](const std::vector<int>& coef, int eps_coef, int rhs) {
    std::vector<mpq_class> row(nv, 0);
    for (std::size_t a = 0; a < n; ++a) {
      row[a] = coef[a];
      row[n + a] = -coef[a];
    }
    row[eps] = eps_coef;
    A.push_back(std::move(row));
    b.push_back(rhs);
  };
  std::vector<int> acc(n, 0);
  for (std::size_t i = 0; i + 1 < p.top.size(); ++i) {
    acc[p.top[i]] += 1;
    std::vector<int> neg(n);
    for (std::size_t a = 0; a < n; ++a) neg[a] = -acc[a];
    add_row(neg, 1, 0);
  }
  std::vector<int> total(n, 0);
  for (Symbol s : p.top) total[s] += 1;
  if (level_ends) {
    add_row(total, 0, 0);
    std::vector<int> neg(n);
    for (std::size_t a = 0; a < n; ++a) neg[a] = -total[a];
    add_row(neg, 0, 0);
  }
  std::fill(acc.begin(), acc.end(), 0);
  for (std::size_t j = 0; j + 1 < p.bottom.size(); ++j) {
    acc[p.bottom[j]] += 1;
    add_row(acc, 1, 0);
  }
  for (Symbol s : p.bottom) total[s] -= 1;
  add_row(total, 0, 0);
  std::vector<int> neg_total(n);
  for (std::size_t a = 0; a < n; ++a) neg_total[a] = -total[a];
  add_row(neg_total, 0, 0);
  add_row(std::vector<int>(n, 0), 1, 1);

  std::vector<mpq_class> c(nv, 0);
  c[eps] = 1;
  auto res = maximize(A, b, c);
  if (!res.bounded || sgn(res.value) <= 0) return std::nullopt;
  std::vector<mpq_class> h(n);
  for (std::size_t a = 0; a < n; ++a) h[a] = res.x[a] - res.x[n + a];
  return h;
}

// Both ends on the same level keeps the polygon embedded; not always possible.
std::optional<std::vector<mpq_class>> solve_heights(const GenPerm& p) {
  if (auto h = solve_heights(p, true)) return h;
  return solve_heights(p, false);
}

struct ExactPoint {
  mpq_class x, y;
};

int orientation(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
  return sgn((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

bool on_segment(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

bool segments_meet(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c, const ExactPoint& d) {
  int o1 = orientation(a, b, c), o2 = orientation(a, b, d), o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

// Boundary cycle: bottom line left to right, then the top line back.
bool polygon_is_simple(const GenPerm& p, const SuspensionData& d) {
  std::vector<ExactPoint> cycle{{0, 0}};
  ExactPoint cur{0, 0};
  for (Symbol s : p.bottom) {
    cur.x += d.lengths[s];
    cur.y += d.heights[s];
    cycle.push_back(cur);
  }
  std::vector<ExactPoint> top;
  cur = {0, 0};
  for (std::size_t i = 0; i + 1 < p.top.size(); ++i) {
    cur.x += d.lengths[p.top[i]];
    cur.y += d.heights[p.top[i]];
    top.push_back(cur);
  }
  cycle.insert(cycle.end(), top.rbegin(), top.rend());
  const std::size_t m = cycle.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto &a = cycle[i], &b = cycle[(i + 1) % m];
    const auto& c = cycle[(i + 2) % m];
    if (orientation(a, b, c) == 0 && sgn((b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y)) <= 0) return false;
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (segments_meet(a, b, cycle[j], cycle[(j + 1) % m])) return false;
    }
  }
  return true;
}

}  // namespace

bool heights_feasible_lp(const GenPerm& p) { return solve_heights(canonicalize(p)).has_value(); }

bool check_suspension(const GenPerm& p, const SuspensionData& d) {
  const std::size_t n = p.alphabet_size();
  if (!has_dense_labels(p)) return false;
  if (d.lengths.size() != n || d.heights.size() != n) return false;
  for (const auto& l : d.lengths)
    if (sgn(l) <= 0) return false;
  mpq_class h = 0, w = 0;
  for (std::size_t i = 0; i < p.top.size(); ++i) {
    h += d.heights[p.top[i]];
    w += d.lengths[p.top[i]];
    if (i + 1 < p.top.size() && sgn(h) <= 0) return false;
  }
  mpq_class hb = 0, wb = 0;
  for (std::size_t j = 0; j < p.bottom.size(); ++j) {
    hb += d.heights[p.bottom[j]];
    wb += d.lengths[p.bottom[j]];
    if (j + 1 < p.bottom.size() && sgn(hb) >= 0) return false;
  }
  return h == hb && w == wb;
}

std::optional<SuspensionData> suspension_data(const GenPerm& p) {
  if (!has_dense_labels(p)) throw Error(ErrorKind::UnknownSymbol, "symbols must be 0..n-1: " + format(p));
  const std::size_t n = p.alphabet_size();
  SuspensionData d;
  if (is_true_permutation(p)) {
    std::vector<int> where(n);
    for (std::size_t j = 0; j < n; ++j) where[p.bottom[j]] = static_cast<int>(j);
    for (std::size_t k = 0; k < n; ++k) {
      Symbol s = p.top[k];
      d.lengths.push_back(1 + ratio(static_cast<long>(k), static_cast<long>(n + 1)));
      d.heights.emplace_back(where[s] - static_cast<int>(k));
    }
    // lengths/heights are indexed by symbol; canonical true permutations have top = 0..n-1
    std::vector<mpq_class> L(n), H(n);
    for (std::size_t k = 0; k < n; ++k) {
      L[p.top[k]] = d.lengths[k];
      H[p.top[k]] = d.heights[k];
    }
    d.lengths = std::move(L);
    d.heights = std::move(H);
    if (!check_suspension(p, d)) return std::nullopt;
    return d;
  }

  if (!lengths_feasible(p)) return std::nullopt;
  auto heights = solve_heights(p);
  if (!heights) return std::nullopt;
  d.heights = std::move(*heights);

  auto letters = letters_of(p);
  std::vector<Symbol> top_pairs, bottom_pairs;
  for (std::size_t a = 0; a < n; ++a) {
    if (letters[a].kind == Kind::TopPair) top_pairs.push_back(static_cast<Symbol>(a));
    if (letters[a].kind == Kind::BottomPair) bottom_pairs.push_back(static_cast<Symbol>(a));
  }
  d.lengths.assign(n, 1);
  if (!top_pairs.empty()) {
    const long na = static_cast<long>(top_pairs.size()), nb = static_cast<long>(bottom_pairs.size());
    mpq_class step(1, 16 * static_cast<long>(n * n));
    mpq_class top_sum = 0;
    for (long i = 0; i < na; ++i) {
      d.lengths[top_pairs[i]] = 1 + step * (i + 1);
      top_sum += d.lengths[top_pairs[i]];
    }
    mpq_class base = top_sum / nb;
    for (long j = 0; j < nb; ++j)
      d.lengths[bottom_pairs[j]] = base + step * ratio(2 * j + 1 - nb, 2 * nb);
  }
  if (!check_suspension(p, d)) return std::nullopt;
  if (polygon_is_simple(p, d)) return d;

  // the default lengths fold the polygon over itself; search other balanced lengths
  std::mt19937 rng(static_cast<unsigned>(n));
  std::uniform_int_distribution<long> pick(1, 64);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    SuspensionData e = d;
    mpq_class top_sum = 0, bottom_sum = 0;
    for (std::size_t a = 0; a < n; ++a) {
      e.lengths[a] = ratio(pick(rng), 8);
      if (letters[a].kind == Kind::TopPair) top_sum += e.lengths[a];
      if (letters[a].kind == Kind::BottomPair) bottom_sum += e.lengths[a];
    }
    if (!top_pairs.empty())
      for (Symbol b : bottom_pairs) {
        e.lengths[b] *= top_sum / bottom_sum;
        e.lengths[b].canonicalize();
      }
    if (check_suspension(p, e) && polygon_is_simple(p, e)) return e;
  }
  return d;
}

SingularityProfile stratum_of(const GenPerm& p) {
  if (!has_dense_labels(p)) return stratum_of(canonicalize(p));
  auto data = suspension_data(p);
  if (!data) throw Error(ErrorKind::NotSuspendable, format(p));
  const int r = static_cast<int>(p.top.size()), s = static_cast<int>(p.bottom.size());

  // vertex ids: bottom points 0..s, top interior points s+1..s+r-1
  auto top_id = [&](int i) { return i == 0 ? 0 : i == r ? s : s + i; };
  std::vector<Point> pt(r + s);
  Point cur{0, 0};
  for (int j = 0; j < s; ++j) {
    cur.x += data->lengths[p.bottom[j]].get_d();
    cur.y += data->heights[p.bottom[j]].get_d();
    pt[j + 1] = cur;
  }
  cur = {0, 0};
  for (int i = 0; i + 1 < r; ++i) {
    cur.x += data->lengths[p.top[i]].get_d();
    cur.y += data->heights[p.top[i]].get_d();
    pt[top_id(i + 1)] = cur;
  }

  std::vector<int> parent(r + s);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& l : letters_of(p)) {
    if (l.kind == Kind::Shared) {
      join(top_id(l.first), l.second);
      join(top_id(l.first + 1), l.second + 1);
    } else if (l.kind == Kind::TopPair) {
      join(top_id(l.first), top_id(l.second + 1));
      join(top_id(l.first + 1), top_id(l.second));
    } else {
      join(l.first, l.second + 1);
      join(l.first + 1, l.second);
    }
  }

  // counterclockwise boundary: along the bottom, then back along the top
  std::vector<int> cycle;
  for (int j = 0; j < s; ++j) cycle.push_back(j);
  for (int i = r; i >= 1; --i) cycle.push_back(top_id(i));
  std::vector<double> angle(r + s, 0.0);
  const int m = static_cast<int>(cycle.size());
  for (int k = 0; k < m; ++k) {
    const Point& a = pt[cycle[(k + m - 1) % m]];
    const Point& b = pt[cycle[k]];
    const Point& c = pt[cycle[(k + 1) % m]];
    double ux = b.x - a.x, uy = b.y - a.y, vx = c.x - b.x, vy = c.y - b.y;
    double turn = std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
    angle[find(cycle[k])] += M_PI - turn;
  }

  SingularityProfile prof;
  prof.holonomy = is_true_permutation(p) ? Holonomy::Abelian : Holonomy::Quadratic;
  std::vector<int> deg_of(r + s, 0);
  for (int v = 0; v < r + s; ++v) {
    if (find(v) != v) continue;
    double units = angle[v] / M_PI;
    double k = std::round(units);
    if (std::fabs(units - k) > 0.1) throw Error(ErrorKind::RoundingUnstable, format(p));
    deg_of[v] = degree_from_angle(prof.holonomy, static_cast<int>(k));
    prof.degrees.push_back(deg_of[v]);
  }
  sort_degrees(prof.degrees);
  prof.genus = genus_of(prof.holonomy, prof.degrees);
  prof.left_degree = deg_of[find(0)];
  if (prof.holonomy == Holonomy::Abelian) prof.right_degree = deg_of[find(s)];
  prof.marked_points = static_cast<int>(std::count(prof.degrees.begin(), prof.degrees.end(), 0));
  check_profile(prof, p.alphabet_size());
  return prof;
}

SingularityProfile stratum_of_diagram(const CylinderDiagram& cd) {
  const int a = static_cast<int>(cd.top.size()), c = static_cast<int>(cd.bottom.size());
  const int arcs = a + c;
  // arc k: ends 2k (left) and 2k+1 (right); bottom arcs follow top arcs
  std::vector<int> junction(2 * arcs), glue(2 * arcs, -1);
  for (int line = 0; line < 2; ++line) {
    int base = line ? a : 0, len = line ? c : a;
    for (int k = 0; k < len; ++k) {
      int right = 2 * (base + k) + 1, left = 2 * (base + (k + 1) % len);
      junction[right] = left;
      junction[left] = right;
    }
  }
  Symbol hi = 0;
  for (Symbol s : cd.top) hi = std::max(hi, s);
  for (Symbol s : cd.bottom) hi = std::max(hi, s);
  std::vector<std::vector<int>> where(hi + 1);
  for (int k = 0; k < a; ++k) where[cd.top[k]].push_back(k);
  for (int k = 0; k < c; ++k) where[cd.bottom[k]].push_back(a + k);
  bool same_line_twins = false, top_pair = false, bottom_pair = false;
  for (const auto& w : where) {
    if (w.empty()) continue;
    if (w.size() != 2) throw Error(ErrorKind::MalformedInput, "symbol not used twice");
    int u = w[0], v = w[1];
    bool opposite = (u < a) != (v < a);
    if (opposite) {
      glue[2 * u] = 2 * v;
      glue[2 * v] = 2 * u;
      glue[2 * u + 1] = 2 * v + 1;
      glue[2 * v + 1] = 2 * u + 1;
    } else {
      same_line_twins = true;
      (u < a ? top_pair : bottom_pair) = true;
      glue[2 * u] = 2 * v + 1;
      glue[2 * v + 1] = 2 * u;
      glue[2 * u + 1] = 2 * v;
      glue[2 * v] = 2 * u + 1;
    }
  }
  if (top_pair != bottom_pair) throw Error(ErrorKind::LengthInfeasible, format(cd));

  SingularityProfile prof;
  prof.holonomy = same_line_twins ? Holonomy::Quadratic : Holonomy::Abelian;
  std::vector<int> deg_at(2 * arcs, 0);
  std::vector<bool> seen(2 * arcs, false);
  int total = 0;
  for (int start = 0; start < 2 * arcs; ++start) {
    if (seen[start]) continue;
    std::vector<int> members;
    int v = start, junctions = 0;
    do {
      int w = junction[v];
      seen[v] = seen[w] = true;
      members.push_back(v);
      members.push_back(w);
      ++junctions;
      v = glue[w];
    } while (v != start);
    total += junctions;
    int d = degree_from_angle(prof.holonomy, junctions);
    for (int u : members) deg_at[u] = d;
    prof.degrees.push_back(d);
  }
  if (total != arcs) throw Error(ErrorKind::MalformedInput, "junction count mismatch");
  sort_degrees(prof.degrees);
  prof.genus = genus_of(prof.holonomy, prof.degrees);
  prof.left_degree = deg_at[2 * a];
  if (prof.holonomy == Holonomy::Abelian) prof.right_degree = deg_at[0];
  prof.marked_points = static_cast<int>(std::count(prof.degrees.begin(), prof.degrees.end(), 0));
  check_profile(prof, static_cast<std::size_t>(arcs / 2 + 1));
  return prof;
}

bool is_degenerate(const GenPerm& p) { return stratum_of(p).marked_points > 0; }

int genus_of(Holonomy h, const std::vector<int>& degrees) {
  int sum = std::accumulate(degrees.begin(), degrees.end(), 0);
  return h == Holonomy::Abelian ? (sum + 2) / 2 : (sum + 4) / 4;
}

void sort_degrees(std::vector<int>& degrees) { std::sort(degrees.rbegin(), degrees.rend()); }

std::string stratum_name(Holonomy h, std::vector<int> degrees) {
  sort_degrees(degrees);
  std::string out = h == Holonomy::Abelian ? "H(" : "Q(";
  for (std::size_t i = 0; i < degrees.size();) {
    std::size_t j = i;
    while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
    if (i) out += ",";
    out += std::to_string(degrees[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

}  // namespace gprc
