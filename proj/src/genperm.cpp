#include "gprc/genperm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace gprc {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::EmptyLine: return "EmptyLine";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::NotCylindrical: return "NotCylindrical";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotSuspendable: return "NotSuspendable";
    case ErrorKind::RoundingUnstable: return "RoundingUnstable";
    case ErrorKind::LengthInfeasible: return "LengthInfeasible";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::NotTruePermutation: return "NotTruePermutation";
    case ErrorKind::OddDegrees: return "OddDegrees";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::InvalidStratum: return "InvalidStratum";
    case ErrorKind::EmptyStratum: return "EmptyStratum";
    case ErrorKind::NoSuchComponent: return "NoSuchComponent";
    case ErrorKind::UnsupportedLabel: return "UnsupportedLabel";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput:
    case ErrorKind::EmptyLine:
    case ErrorKind::UnknownSymbol:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::InvalidStratum:
    case ErrorKind::UnsupportedLabel:
    case ErrorKind::NoSuchComponent:
    case ErrorKind::Io:
      return true;
    default:
      return false;
  }
}

namespace {

void validate(const Word& top, const Word& bottom) {
  if (top.empty() || bottom.empty()) throw Error(ErrorKind::MalformedInput, "empty line");
  std::map<Symbol, int> count;
  for (Symbol s : top) {
    if (s < 0) throw Error(ErrorKind::MalformedInput, "negative symbol");
    ++count[s];
  }
  for (Symbol s : bottom) {
    if (s < 0) throw Error(ErrorKind::MalformedInput, "negative symbol");
    ++count[s];
  }
  for (auto [s, c] : count)
    if (c != 2)
      throw Error(ErrorKind::MalformedInput,
                  "symbol " + std::to_string(s) + " occurs " + std::to_string(c) + " times");
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  if (text.find('/') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      auto pos = text.find('/', start);
      lines.emplace_back(text.substr(start, pos == std::string_view::npos ? text.npos : pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  } else {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    lines.push_back(cur);
    while (!lines.empty() && split_ws(lines.back()).empty()) lines.pop_back();
  }
  if (lines.size() != 2)
    throw Error(ErrorKind::MalformedInput, "expected two lines, got " + std::to_string(lines.size()));
  return lines;
}

bool valid_token(const std::string& tok) {
  return std::all_of(tok.begin(), tok.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Word rotate(const Word& w, std::size_t k) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + k) % w.size()];
  return out;
}

}  // namespace

GenPerm make_labeled(Word top, Word bottom) {
  validate(top, bottom);
  return GenPerm{std::move(top), std::move(bottom)};
}

GenPerm make_perm(Word top, Word bottom) {
  return canonicalize(make_labeled(std::move(top), std::move(bottom)));
}

GenPerm canonicalize(const GenPerm& p) {
  Symbol hi = 0;
  for (Symbol s : p.top) hi = std::max(hi, s);
  for (Symbol s : p.bottom) hi = std::max(hi, s);
  std::vector<Symbol> name(hi + 1, -1);
  Symbol next = 0;
  GenPerm out;
  out.top.reserve(p.top.size());
  out.bottom.reserve(p.bottom.size());
  for (Symbol s : p.top) {
    if (name[s] < 0) name[s] = next++;
    out.top.push_back(name[s]);
  }
  for (Symbol s : p.bottom) {
    if (name[s] < 0) name[s] = next++;
    out.bottom.push_back(name[s]);
  }
  return out;
}

bool is_canonical(const GenPerm& p) { return canonicalize(p) == p; }

GenPerm parse_labeled(std::string_view text) {
  auto lines = split_lines(text);
  Word rows[2];
  for (int r = 0; r < 2; ++r) {
    auto toks = split_ws(lines[r]);
    if (toks.empty()) throw Error(ErrorKind::MalformedInput, "empty line");
    for (auto& t : toks) {
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw Error(ErrorKind::MalformedInput, "non-integer token '" + t + "'");
      rows[r].push_back(std::stoi(t));
    }
  }
  return make_labeled(std::move(rows[0]), std::move(rows[1]));
}

GenPerm parse(std::string_view text) {
  auto lines = split_lines(text);
  std::map<std::string, Symbol> ids;
  Word rows[2];
  for (int r = 0; r < 2; ++r) {
    auto toks = split_ws(lines[r]);
    if (toks.empty()) throw Error(ErrorKind::MalformedInput, "empty line");
    for (auto& t : toks) {
      if (!valid_token(t)) throw Error(ErrorKind::MalformedInput, "bad token '" + t + "'");
      auto [it, fresh] = ids.emplace(t, static_cast<Symbol>(ids.size()));
      rows[r].push_back(it->second);
    }
  }
  return make_perm(std::move(rows[0]), std::move(rows[1]));
}

std::string format(const GenPerm& p) {
  std::string out;
  auto put = [&](const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(w[i]);
    }
  };
  put(p.top);
  out += " / ";
  put(p.bottom);
  return out;
}

bool has_dense_labels(const GenPerm& p) {
  const auto n = static_cast<Symbol>(p.alphabet_size());
  auto ok = [&](Symbol s) { return s >= 0 && s < n; };
  return std::all_of(p.top.begin(), p.top.end(), ok) && std::all_of(p.bottom.begin(), p.bottom.end(), ok);
}

bool is_true_permutation(const GenPerm& p) {
  if (p.top.size() != p.bottom.size()) return false;
  std::set<Symbol> t(p.top.begin(), p.top.end());
  return t.size() == p.top.size() &&
         std::all_of(p.bottom.begin(), p.bottom.end(), [&](Symbol s) { return t.count(s) > 0; });
}

bool is_cylindrical(const GenPerm& p) {
  bool cut = p.top.front() == p.bottom.back() || p.bottom.front() == p.top.back();
  if (!cut) return false;
  std::set<Symbol> t(p.top.begin(), p.top.end()), b(p.bottom.begin(), p.bottom.end());
  auto proper_subset = [](const std::set<Symbol>& x, const std::set<Symbol>& y) {
    return x.size() < y.size() && std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  return !proper_subset(t, b) && !proper_subset(b, t);
}

bool is_balanced(const GenPerm& p) { return p.top.size() == p.bottom.size(); }

GenPerm inverse(const GenPerm& p) { return canonicalize(GenPerm{p.bottom, p.top}); }

GenPerm erase_symbols(const GenPerm& p, const std::vector<Symbol>& victims, bool relabel) {
  std::set<Symbol> present(p.top.begin(), p.top.end());
  present.insert(p.bottom.begin(), p.bottom.end());
  std::set<Symbol> drop;
  for (Symbol v : victims) {
    if (!present.count(v)) throw Error(ErrorKind::UnknownSymbol, "symbol " + std::to_string(v));
    drop.insert(v);
  }
  GenPerm out;
  for (Symbol s : p.top)
    if (!drop.count(s)) out.top.push_back(s);
  for (Symbol s : p.bottom)
    if (!drop.count(s)) out.bottom.push_back(s);
  if (out.top.empty() || out.bottom.empty()) throw Error(ErrorKind::EmptyLine, "erasure empties a line");
  return relabel ? canonicalize(out) : out;
}

CylinderDiagram make_diagram(Word top, Word bottom) {
  validate(top, bottom);
  return CylinderDiagram{std::move(top), std::move(bottom)};
}

CylinderDiagram parse_diagram(std::string_view text) {
  GenPerm p = parse(text);
  return CylinderDiagram{p.top, p.bottom};
}

std::string format(const CylinderDiagram& cd) {
  return "(" + format(GenPerm{cd.top, cd.bottom}) + ")";
}

CylinderDiagram CylinderDiagram::normal_form() const {
  GenPerm best;
  bool have = false;
  Word rtop(bottom.rbegin(), bottom.rend()), rbot(top.rbegin(), top.rend());
  for (int flip = 0; flip < 2; ++flip) {
    const Word& t = flip ? rtop : top;
    const Word& b = flip ? rbot : bottom;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        GenPerm c = canonicalize(GenPerm{rotate(t, i), rotate(b, j)});
        if (!have || c < best) best = std::move(c), have = true;
      }
  }
  return CylinderDiagram{best.top, best.bottom};
}

bool operator==(const CylinderDiagram& a, const CylinderDiagram& b) {
  if (a.top.size() + a.bottom.size() != b.top.size() + b.bottom.size()) return false;
  auto na = a.normal_form(), nb = b.normal_form();
  return na.top == nb.top && na.bottom == nb.bottom;
}

CylinderDiagram to_cylinder_diagram(const GenPerm& p) {
  if (!is_cylindrical(p)) throw Error(ErrorKind::NotCylindrical, format(p));
  CylinderDiagram cd;
  if (p.top.front() == p.bottom.back()) {
    cd.top.assign(p.top.begin() + 1, p.top.end());
    cd.bottom.assign(p.bottom.begin(), p.bottom.end() - 1);
  } else {
    cd.top.assign(p.top.begin(), p.top.end() - 1);
    cd.bottom.assign(p.bottom.begin() + 1, p.bottom.end());
  }
  if (cd.top.empty() || cd.bottom.empty())
    throw Error(ErrorKind::NotCylindrical, "no arcs left after removing the cut");
  return cd;
}

GenPerm from_cylinder_diagram(const CylinderDiagram& cd, Diagonal diagonal, std::size_t top_base,
                              std::size_t bottom_base) {
  if (top_base >= cd.top.size() || bottom_base >= cd.bottom.size())
    throw Error(ErrorKind::IndexOutOfRange, "basepoint outside the cyclic word");
  Symbol cut = 0;
  for (Symbol s : cd.top) cut = std::max(cut, s + 1);
  for (Symbol s : cd.bottom) cut = std::max(cut, s + 1);
  Word t = rotate(cd.top, top_base), b = rotate(cd.bottom, bottom_base);
  GenPerm p;
  if (diagonal == Diagonal::TopFirst) {
    p.top.push_back(cut);
    p.top.insert(p.top.end(), t.begin(), t.end());
    p.bottom = b;
    p.bottom.push_back(cut);
  } else {
    p.top = t;
    p.top.push_back(cut);
    p.bottom.push_back(cut);
    p.bottom.insert(p.bottom.end(), b.begin(), b.end());
  }
  return make_perm(std::move(p.top), std::move(p.bottom));
}

std::string encode(const GenPerm& p) {
  std::size_t n = p.alphabet_size();
  std::string key;
  if (p.top.size() >= 128 || n > 255) throw Error(ErrorKind::TooLarge, "alphabet too large to encode");
  if (n <= 15) {
    key.push_back(static_cast<char>(0x80 | p.top.size()));
    std::size_t total = p.top.size() + p.bottom.size();
    for (std::size_t i = 0; i < total; i += 2) {
      auto at = [&](std::size_t k) -> unsigned {
        if (k >= total) return 0xF;
        return static_cast<unsigned>(k < p.top.size() ? p.top[k] : p.bottom[k - p.top.size()]);
      };
      key.push_back(static_cast<char>((at(i) << 4) | at(i + 1)));
    }
  } else {
    key.push_back(static_cast<char>(p.top.size()));
    for (Symbol s : p.top) key.push_back(static_cast<char>(s));
    for (Symbol s : p.bottom) key.push_back(static_cast<char>(s));
  }
  return key;
}

GenPerm decode(std::string_view key) {
  GenPerm p;
  unsigned head = static_cast<unsigned char>(key[0]);
  std::size_t ntop = head & 0x7F;
  Word all;
  if (head & 0x80) {
    for (std::size_t i = 1; i < key.size(); ++i) {
      unsigned byte = static_cast<unsigned char>(key[i]);
      all.push_back(static_cast<Symbol>(byte >> 4));
      if ((byte & 0xF) != 0xF) all.push_back(static_cast<Symbol>(byte & 0xF));
    }
  } else {
    for (std::size_t i = 1; i < key.size(); ++i) all.push_back(static_cast<unsigned char>(key[i]));
  }
  p.top.assign(all.begin(), all.begin() + ntop);
  p.bottom.assign(all.begin() + ntop, all.end());
  return p;
}

}  // namespace gprc
