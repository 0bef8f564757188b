#include <algorithm>
#include <cctype>
#include <numeric>

#include "gprc/components.hpp"

namespace gprc {

int StratumSpec::genus() const { return genus_of(holonomy, degrees); }

int StratumSpec::poles() const { return static_cast<int>(std::count(degrees.begin(), degrees.end(), -1)); }

std::vector<int> StratumSpec::sorted() const {
  auto d = degrees;
  sort_degrees(d);
  return d;
}

std::string StratumSpec::name() const {
  std::string out = holonomy == Holonomy::Abelian ? "H(" : "Q(";
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

bool operator==(const StratumSpec& a, const StratumSpec& b) {
  return a.holonomy == b.holonomy && a.sorted() == b.sorted();
}

StratumSpec make_stratum(Holonomy h, std::vector<int> degrees) {
  StratumSpec s{h, std::move(degrees)};
  const int sum = std::accumulate(s.degrees.begin(), s.degrees.end(), 0);
  if (h == Holonomy::Abelian) {
    if (std::any_of(s.degrees.begin(), s.degrees.end(), [](int d) { return d < 1; }))
      throw Error(ErrorKind::InvalidStratum, s.name() + ": Abelian degrees must be positive");
    if (sum % 2 != 0 || sum < 2) throw Error(ErrorKind::InvalidStratum, s.name() + ": degree sum must be even and >= 2");
  } else {
    if (std::any_of(s.degrees.begin(), s.degrees.end(), [](int d) { return d < -1 || d == 0; }))
      throw Error(ErrorKind::InvalidStratum, s.name() + ": degrees must be positive or -1");
    if (((sum % 4) + 4) % 4 != 0 || sum < -4)
      throw Error(ErrorKind::InvalidStratum, s.name() + ": degree sum must be a multiple of 4 and >= -4");
  }
  return s;
}

StratumSpec stratum_from_profile(const SingularityProfile& prof) {
  std::vector<int> d;
  for (int x : prof.degrees)
    if (x != 0) d.push_back(x);
  return StratumSpec{prof.holonomy, d};
}

const char* label_name(Label l) {
  switch (l) {
    case Label::Connected: return "connected";
    case Label::Hyperelliptic: return "hyp";
    case Label::NonHyperelliptic: return "nonhyp";
    case Label::EvenSpin: return "even";
    case Label::OddSpin: return "odd";
    case Label::Irr: return "irr";
    case Label::Reg: return "reg";
  }
  return "?";
}

std::optional<Label> label_from_name(std::string_view s) {
  for (Label l : {Label::Connected, Label::Hyperelliptic, Label::NonHyperelliptic, Label::EvenSpin, Label::OddSpin,
                  Label::Irr, Label::Reg})
    if (s == label_name(l)) return l;
  return std::nullopt;
}

std::string format(const ComponentId& c) {
  StratumSpec sorted{c.stratum.holonomy, c.stratum.sorted()};
  std::string out = sorted.name();
  if (c.label != Label::Connected) out += std::string(":") + label_name(c.label);
  return out;
}

ComponentSpec parse_component(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto bad = [&](const std::string& why) { return Error(ErrorKind::MalformedInput, "'" + s + "': " + why); };
  if (s.size() < 3 || (s[0] != 'H' && s[0] != 'Q') || s[1] != '(') throw bad("expected H(...) or Q(...)");
  auto close = s.find(')');
  if (close == std::string::npos) throw bad("missing ')'");
  ComponentSpec out;
  std::string suffix = s.substr(close + 1);
  if (!suffix.empty()) {
    if (suffix[0] != ':') throw bad("unexpected text after ')'");
    out.label = label_from_name(suffix.substr(1));
    if (!out.label || *out.label == Label::Connected) throw bad("unknown component label " + suffix.substr(1));
  }
  std::vector<int> degrees;
  std::string body = s.substr(2, close - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string::npos) end = body.size();
    std::string item = body.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) throw bad("empty entry");
    int reps = 1;
    auto caret = item.find('^');
    try {
      std::size_t used = 0;
      int value = std::stoi(item.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? item.size() : caret)) throw bad("bad entry " + item);
      if (caret != std::string::npos) {
        std::string r = item.substr(caret + 1);
        reps = std::stoi(r, &used);
        if (used != r.size() || reps < 1) throw bad("bad repetition " + item);
      }
      degrees.insert(degrees.end(), reps, value);
    } catch (const std::logic_error&) {
      throw bad("bad entry " + item);
    }
  }
  out.stratum = make_stratum(s[0] == 'H' ? Holonomy::Abelian : Holonomy::Quadratic, std::move(degrees));
  return out;
}

}  // namespace gprc
