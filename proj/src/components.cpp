#include "gprc/components.hpp"

#include <algorithm>
#include <numeric>

#include "gprc/golden.hpp"
#include "gprc/rauzy.hpp"
#include "gprc/spin.hpp"

namespace gprc {

namespace {

using Multiset = std::vector<int>;

Multiset sorted_copy(Multiset d) {
  sort_degrees(d);
  return d;
}

bool has(const std::vector<ComponentId>& list, Label l) {
  return std::any_of(list.begin(), list.end(), [&](const ComponentId& c) { return c.label == l; });
}

std::vector<int> positive_degrees(const StratumSpec& s) {
  std::vector<int> d;
  for (int x : s.degrees)
    if (x > 0) d.push_back(x);
  return d;
}

bool all_even(const std::vector<int>& d) {
  return std::all_of(d.begin(), d.end(), [](int x) { return x % 2 == 0; });
}

// Stratum of the hyperelliptic single-cylinder family for parameters (r, s).
Multiset hyperelliptic_stratum(int r, int s) {
  Multiset d;
  if (r % 2) d.push_back(2 * r);
  else d.insert(d.end(), {r - 1, r - 1});
  if (s % 2) d.push_back(2 * s);
  else d.insert(d.end(), {s - 1, s - 1});
  return sorted_copy(d);
}

bool has_hyperelliptic_component(const Multiset& target, int genus) {
  for (int r = 0; r <= 2 * genus + 2; ++r)
    for (int s = 0; s <= 2 * genus + 2; ++s)
      if (hyperelliptic_stratum(r, s) == target) return true;
  return false;
}

bool is_exceptional(const Multiset& d) {
  static const std::vector<Multiset> list = {{9, -1}, {6, 3, -1}, {3, 3, 3, -1}, {12}};
  return std::find(list.begin(), list.end(), d) != list.end();
}

// Symbols step apart from mult*D(i-1)+first up to mult*D(i)-last, D the partial sums.
std::vector<Symbol> erase_runs(const std::vector<int>& d, int mult, int first, int last) {
  std::vector<Symbol> out;
  int partial = 0;
  for (int x : d) {
    for (int v = mult * partial + first; v <= mult * (partial + x) - last; v += mult) out.push_back(v);
    partial += x;
  }
  return out;
}

GenPerm reversal(int n) {
  Word top(n), bottom(n);
  std::iota(top.begin(), top.end(), 0);
  std::iota(bottom.rbegin(), bottom.rend(), 0);
  return make_perm(top, bottom);
}

GenPerm abelian_general(const std::vector<int>& d, int genus) {
  Word top(4 * genus - 3), bottom{4, 3, 2};
  std::iota(top.begin(), top.end(), 0);
  for (int m = 1; m <= genus - 2; ++m) bottom.insert(bottom.end(), {4 * m + 1, 4 * m + 4, 4 * m + 3, 4 * m + 2});
  bottom.insert(bottom.end(), {1, 0});
  return erase_symbols(make_labeled(top, bottom), erase_runs(d, 2, 3, 1));
}

GenPerm abelian_spin(const std::vector<int>& d, int genus, bool even) {
  Word top(3 * genus - 2), bottom;
  std::iota(top.begin(), top.end(), 0);
  if (even) bottom = {6, 5, 4, 3, 2};
  else bottom = {3, 2};
  for (int m = even ? 2 : 1; m <= genus - 2; ++m) bottom.insert(bottom.end(), {3 * m + 1, 3 * m + 3, 3 * m + 2});
  bottom.insert(bottom.end(), {1, 0});
  std::vector<int> half;
  for (int x : d) half.push_back(x / 2);
  return erase_symbols(make_labeled(top, bottom), erase_runs(half, 3, 4, 2));
}

GenPerm quadratic_genus0(const std::vector<int>& d, int poles) {
  const int p = poles;
  Word top{0, 2 * p - 6, 2 * p - 6}, bottom;
  for (int k = 1; k <= p - 4; ++k) bottom.insert(bottom.end(), {2 * k, 2 * k, 2 * k + 1});
  for (int v = 2 * p - 7; v >= 1; v -= 2) bottom.push_back(v);
  bottom.insert(bottom.end(), {1, 0});
  return erase_symbols(make_labeled(top, bottom), erase_runs(d, 2, 3, 1));
}

GenPerm quadratic_genus1(const std::vector<int>& d, int poles) {
  const int p = poles;
  Word top{0, 1}, bottom;
  for (int k = 1; k <= p - 1; ++k) top.insert(top.end(), {2 * k, 2 * k + 1, 2 * k + 1});
  for (int k = 1; k <= p - 1; ++k) bottom.push_back(2 * k);
  bottom.insert(bottom.end(), {1, 2 * p, 2 * p, 0});
  return erase_symbols(make_labeled(top, bottom), erase_runs(d, 2, 2, 2));
}

GenPerm quadratic_genus2(const std::vector<int>& d, int poles) {
  const int p = poles;
  Word top, bottom;
  if (p == 0) {
    top = {0, 6, 1, 5, 6, 4, 3};
    bottom = {1, 2, 3, 4, 2, 5, 0};
  } else {
    top = {0, 2 * p + 6, 1, 2 * p + 5, 2 * p + 6, p + 4, p + 3};
    for (int v = 1; v <= p + 4; ++v) bottom.push_back(v);
    for (int i = 0; i < p; ++i) bottom.insert(bottom.end(), {p + 2 - i, p + 5 + i, p + 5 + i});
    bottom.insert(bottom.end(), {2, 2 * p + 5, 0});
  }
  return erase_symbols(make_labeled(top, bottom), erase_runs(d, 1, 1, 1));
}

GenPerm quadratic_higher(const std::vector<int>& d, int poles, int genus) {
  const int p = poles, g = genus;
  Word top{0, 1, 2, 3};
  for (int k = 0; k <= g - 3; ++k)
    top.insert(top.end(), {4 + 4 * k, 4 * g - 1 + p + 2 * k, 7 + 4 * k, 4 * g + p + 2 * k, 6 + 4 * k,
                           4 * g - 1 + p + 2 * k, 5 + 4 * k, 4 * g + p + 2 * k});
  for (int l = 0; l < p; ++l) top.insert(top.end(), {4 * g - 4 + l, 6 * g + p - 5 + l, 6 * g + p - 5 + l});
  top.push_back(4 * g + p - 4);
  Word bottom{4 * g - 3 + p, 3, 4 * g - 2 + p, 2, 4 * g - 3 + p, 1, 4 * g - 2 + p};
  for (int v = 4; v <= 4 * g - 4 + p; ++v) bottom.push_back(v);
  bottom.push_back(0);
  return erase_symbols(make_labeled(top, bottom), erase_runs(d, 1, 1, 1));
}

GenPerm quadratic_connected(const StratumSpec& s) {
  const auto d = positive_degrees(s);
  const int p = s.poles(), g = s.genus();
  if (g == 0) return quadratic_genus0(d, p);
  if (g == 1) return quadratic_genus1(d, p);
  if (g == 2) return quadratic_genus2(d, p);
  return quadratic_higher(d, p, g);
}

GenPerm quadratic_hyperelliptic(const StratumSpec& s) {
  const Multiset target = s.sorted();
  const int want_left = s.degrees.front();
  std::optional<GenPerm> fallback;
  const int bound = 2 * s.genus() + 2;
  for (int r = 0; r <= bound; ++r)
    for (int t = 0; t <= bound; ++t) {
      if (hyperelliptic_stratum(r, t) != target) continue;
      GenPerm rep = hyperelliptic_cylinder(r, t);
      if (stratum_of(rep).left_degree == want_left) return rep;
      if (!fallback) fallback = rep;
    }
  if (!fallback) throw Error(ErrorKind::NoSuchComponent, s.name() + " has no hyperelliptic component");
  return *fallback;
}

GenPerm exceptional(const StratumSpec& s, Label l) {
  for (const auto& row : golden::exceptional_table()) {
    auto spec = parse_component(row.component);
    if (spec.stratum == s && spec.label == l) return parse(row.seed);
  }
  throw Error(ErrorKind::NoSuchComponent, s.name());
}

bool endpoints_match(const SingularityProfile& prof, const StratumSpec& s) {
  if (prof.left_degree != s.degrees.front()) return false;
  if (s.holonomy == Holonomy::Abelian && prof.right_degree != s.degrees.back()) return false;
  return true;
}

// Rotates w so that it starts at position k.
Word rotated(const Word& w, std::size_t k) {
  Word out(w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return out;
}

bool cyclic_equal(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t k = 0; k < b.size(); ++k)
    if (rotated(b, k) == a) return true;
  return false;
}

bool symmetric_form(const Word& top, const Word& bottom) {
  Word rev(top.rbegin(), top.rend());
  return cyclic_equal(bottom, rev);
}

bool interleaved_form(const Word& top, const Word& bottom) {
  auto paired = [](const Word& w) {
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (w[i] == w[j]) out.push_back(w[i]);
    return out;
  };
  auto top_pairs = paired(top), bottom_pairs = paired(bottom);
  if (top_pairs.size() != 1 || bottom_pairs.size() != 1) return false;
  const Symbol a = top_pairs[0], b = bottom_pairs[0];
  std::size_t first = std::find(top.begin(), top.end(), a) - top.begin();
  Word t = rotated(top, first);
  std::size_t second = std::find(t.begin() + 1, t.end(), a) - t.begin();
  Word x(t.begin() + 1, t.begin() + second), y(t.begin() + second + 1, t.end());
  Word expected(y.rbegin(), y.rend());
  expected.push_back(b);
  expected.insert(expected.end(), x.rbegin(), x.rend());
  expected.push_back(b);
  return cyclic_equal(bottom, expected);
}

bool doubled_form(const Word& top, const Word& bottom) {
  auto doubled = [](const Word& w) {
    if (w.size() % 2) return false;
    const std::size_t h = w.size() / 2;
    for (std::size_t i = 0; i < h; ++i)
      if (w[i] != w[i + h]) return false;
    return true;
  };
  if (!doubled(top) || !doubled(bottom)) return false;
  for (Symbol x : top)
    if (std::find(bottom.begin(), bottom.end(), x) != bottom.end()) return false;
  return true;
}

}  // namespace

GenPerm hyperelliptic_cylinder(int r, int s) {
  const Symbol a = s + r + 1, b = s + r + 2;
  Word top{0, a}, bottom;
  for (int v = 1; v <= s; ++v) top.push_back(v);
  top.push_back(a);
  for (int v = s + 1; v <= s + r; ++v) top.push_back(v);
  for (int v = s + r; v >= s + 1; --v) bottom.push_back(v);
  bottom.push_back(b);
  for (int v = s; v >= 1; --v) bottom.push_back(v);
  bottom.insert(bottom.end(), {b, 0});
  return make_perm(top, bottom);
}

std::vector<ComponentId> components_of(const StratumSpec& raw) {
  const StratumSpec s = make_stratum(raw.holonomy, raw.degrees);
  const Multiset d = s.sorted();
  const int g = s.genus();
  auto list = [&](std::initializer_list<Label> labels) {
    std::vector<ComponentId> out;
    for (Label l : labels) out.push_back({StratumSpec{s.holonomy, d}, l});
    return out;
  };
  if (s.holonomy == Holonomy::Abelian) {
    if (g == 2) return list({Label::Hyperelliptic});
    const bool even = all_even(d);
    const bool minimal = d.size() == 1;
    const bool equal_pair = d.size() == 2 && d[0] == d[1];
    if (g == 3) {
      if (even) return list({Label::Hyperelliptic, Label::OddSpin});
      return list({Label::Connected});
    }
    if (even && (minimal || equal_pair)) return list({Label::Hyperelliptic, Label::EvenSpin, Label::OddSpin});
    if (even) return list({Label::EvenSpin, Label::OddSpin});
    if (equal_pair) return list({Label::Hyperelliptic, Label::NonHyperelliptic});
    return list({Label::Connected});
  }
  static const std::vector<Multiset> empty = {{}, {1, -1}, {3, 1}, {4}};
  if (std::find(empty.begin(), empty.end(), d) != empty.end()) return {};
  if (g <= 1) return list({Label::Connected});
  if (g == 2) {
    if (d == Multiset{6, -1, -1} || d == Multiset{3, 3, -1, -1})
      return list({Label::Hyperelliptic, Label::NonHyperelliptic});
    return list({Label::Connected});
  }
  if (is_exceptional(d)) return list({Label::Irr, Label::Reg});
  if (has_hyperelliptic_component(d, g)) return list({Label::Hyperelliptic, Label::NonHyperelliptic});
  return list({Label::Connected});
}

ComponentId resolve(const ComponentSpec& spec) {
  auto comps = components_of(spec.stratum);
  if (comps.empty()) throw Error(ErrorKind::EmptyStratum, spec.stratum.name());
  if (!spec.label || *spec.label == Label::Connected) {
    if (comps.size() != 1)
      throw Error(ErrorKind::NoSuchComponent, spec.stratum.name() + " is not connected; give a component label");
    return {spec.stratum, comps[0].label};
  }
  if (!has(comps, *spec.label)) {
    const bool special = *spec.label == Label::EvenSpin || *spec.label == Label::OddSpin ||
                         *spec.label == Label::Irr || *spec.label == Label::Reg;
    throw Error(special ? ErrorKind::UnsupportedLabel : ErrorKind::NoSuchComponent,
                spec.stratum.name() + " has no component " + label_name(*spec.label));
  }
  return {spec.stratum, *spec.label};
}

namespace {

GenPerm construct(const ComponentId& c) {
  const StratumSpec& s = c.stratum;
  const int g = s.genus();
  const auto d = positive_degrees(s);
  if (s.holonomy == Holonomy::Abelian) {
    switch (c.label) {
      case Label::Hyperelliptic: return d.size() == 1 ? reversal(2 * g) : reversal(2 * g + 1);
      case Label::OddSpin: return abelian_spin(d, g, false);
      case Label::EvenSpin: return abelian_spin(d, g, true);
      default: return abelian_general(d, g);
    }
  }
  switch (c.label) {
    case Label::Hyperelliptic: return quadratic_hyperelliptic(s);
    case Label::Irr:
    case Label::Reg: return exceptional(s, c.label);
    default: return quadratic_connected(s);
  }
}

}  // namespace

// The erasure rules are stated for the degree orders they were designed for;
// when an order does not survive them, the descending order is used instead.
GenPerm base_construction(const ComponentId& raw) {
  const ComponentId c = resolve({raw.stratum, raw.label});
  GenPerm p = construct(c);
  if (is_irreducible(p) && stratum_from_profile(stratum_of(p)) == c.stratum) return p;
  return construct({StratumSpec{c.stratum.holonomy, c.stratum.sorted()}, c.label});
}

GenPerm representative(const ComponentId& c) {
  GenPerm p = base_construction(c);
  if (endpoints_match(stratum_of(p), c.stratum)) return p;
  auto hit = find_member(
      p, ClassKind::Extended,
      [&](const GenPerm& q) { return is_cylindrical(q) && endpoints_match(stratum_of(q), c.stratum); }, 4000000);
  if (!hit) throw Error(ErrorKind::NoSuchComponent, "no cylindrical member of " + c.stratum.name() + " with the requested endpoints");
  return *hit;
}

bool is_hyperelliptic_diagram(const CylinderDiagram& cd) {
  if (!lengths_feasible(from_cylinder_diagram(cd, Diagonal::TopFirst, 0, 0)))
    throw Error(ErrorKind::LengthInfeasible, format(cd));
  return symmetric_form(cd.top, cd.bottom) || interleaved_form(cd.top, cd.bottom) ||
         interleaved_form(cd.bottom, cd.top) || doubled_form(cd.top, cd.bottom);
}

int hyp_spin_parity_closed_form(const StratumSpec& s) {
  const Multiset d = s.sorted();
  if (s.holonomy == Holonomy::Abelian && !d.empty() && all_even(d)) {
    const int g = s.genus();
    if (d.size() == 1) return ((g + 1) / 2) % 2;
    if (d.size() == 2 && d[0] == d[1]) return (d[0] / 2 + 1) % 2;
  }
  throw Error(ErrorKind::NotApplicable, s.name());
}

ComponentId classify(const GenPerm& raw) {
  const GenPerm p = canonicalize(raw);
  if (!is_irreducible(p)) throw Error(ErrorKind::Reducible, format(p));
  const auto prof = stratum_of(p);
  if (prof.marked_points) throw Error(ErrorKind::Degenerate, format(p));
  const StratumSpec s = stratum_from_profile(prof);
  const auto comps = components_of(s);
  if (comps.empty()) throw Error(ErrorKind::EmptyStratum, s.name());
  if (comps.size() == 1) return comps[0];
  auto in_class_of = [&](Label l) { return contains(base_construction({s, l}), p, ClassKind::Extended); };
  Label label;
  if (has(comps, Label::EvenSpin) || has(comps, Label::OddSpin)) {
    const int parity = spin_parity(p);
    const Label spin = parity ? Label::OddSpin : Label::EvenSpin;
    if (!has(comps, Label::Hyperelliptic) || parity != hyp_spin_parity_closed_form(s))
      label = spin;
    else if (!has(comps, spin))
      label = Label::Hyperelliptic;
    else
      label = in_class_of(Label::Hyperelliptic) ? Label::Hyperelliptic : spin;
  } else if (has(comps, Label::Irr)) {
    label = in_class_of(Label::Irr) ? Label::Irr : Label::Reg;
  } else {
    label = in_class_of(Label::Hyperelliptic) ? Label::Hyperelliptic : Label::NonHyperelliptic;
  }
  return {StratumSpec{s.holonomy, s.sorted()}, label};
}

}  // namespace gprc
