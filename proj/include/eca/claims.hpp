#pragma once

// Executable catalog of small facts about individual rules. Each claim is a
// finite statement decided by exhaustive search; universally quantified
// context cells range over every assignment.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "eca/catalog_data.hpp"
#include "eca/core.hpp"
#include "eca/preimage.hpp"
#include "eca/problems.hpp"
#include "eca/protocols.hpp"

namespace eca {

enum class ClaimKind {
  MapsTo,
  NoAntecedent,
  StablePattern,
  Wall,
  Nilpotent,
  EqualsShiftOnImage,
  ShiftOnAvoiding,
  UniformImage,
  DependsOnCenter,
  AffineRule,
  AuditPasses,
  Invadable,
};

inline const std::vector<std::pair<ClaimKind, const char*>>& claim_kind_names() {
  static const std::vector<std::pair<ClaimKind, const char*>> names = {
      {ClaimKind::MapsTo, "MapsTo"},
      {ClaimKind::NoAntecedent, "NoAntecedent"},
      {ClaimKind::StablePattern, "StablePattern"},
      {ClaimKind::Wall, "Wall"},
      {ClaimKind::Nilpotent, "Nilpotent"},
      {ClaimKind::EqualsShiftOnImage, "EqualsShiftOnImage"},
      {ClaimKind::ShiftOnAvoiding, "ShiftOnAvoiding"},
      {ClaimKind::UniformImage, "UniformImage"},
      {ClaimKind::DependsOnCenter, "DependsOnCenter"},
      {ClaimKind::AffineRule, "AffineRule"},
      {ClaimKind::AuditPasses, "AuditPasses"},
      {ClaimKind::Invadable, "Invadable"},
  };
  return names;
}

inline const char* to_string(ClaimKind k) {
  for (const auto& [kind, name] : claim_kind_names())
    if (kind == k) return name;
  return "?";
}

inline ClaimKind parse_claim_kind(const std::string& s) {
  for (const auto& [kind, name] : claim_kind_names())
    if (s == name) return kind;
  throw std::invalid_argument("unknown claim kind: " + s);
}

/// One checkable statement. `group` names the proposition it belongs to;
/// `expect_pass` is false for entries kept although the text they come from
/// is wrong as written.
struct Claim {
  std::string id;
  int rule = 0;
  ClaimKind kind = ClaimKind::MapsTo;
  std::map<std::string, std::string> params;
  bool expect_pass = true;
  std::string anchor;

  std::string group() const { return id.substr(0, id.find('.')); }
  std::string param(const std::string& key, const std::string& fallback = {}) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
  int int_param(const std::string& key, int fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : std::stoi(it->second);
  }
  bool operator==(const Claim&) const = default;
};

struct ClaimReport {
  std::string id;
  bool passed = false;
  bool expected = true;
  std::string witness;  // nonempty on failure
  std::string detail;

  bool unexpected() const { return passed != expected; }
  bool operator==(const ClaimReport&) const = default;
};

// ---------------------------------------------------------------------------
// Text format: one claim per line,
//   id | rule | kind | key=value key=value | pass|fail | anchor
// Blank lines and lines starting with '#' are ignored.

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

inline Claim parse_claim(const std::string& line) {
  const auto fields = detail::split(line, '|');
  if (fields.size() != 6) throw std::invalid_argument("claim record needs 6 fields: " + line);
  Claim c;
  c.id = detail::trim(fields[0]);
  if (c.id.empty()) throw std::invalid_argument("claim without id");
  c.rule = make_rule(std::stoi(detail::trim(fields[1]))).code();
  c.kind = parse_claim_kind(detail::trim(fields[2]));
  std::istringstream ps(fields[3]);
  std::string kv;
  while (ps >> kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("bad parameter '" + kv + "' in " + c.id);
    c.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  const std::string expect = detail::trim(fields[4]);
  if (expect != "pass" && expect != "fail") throw std::invalid_argument("expectation must be pass or fail in " + c.id);
  c.expect_pass = expect == "pass";
  c.anchor = detail::trim(fields[5]);
  return c;
}

inline std::string serialize_claim(const Claim& c) {
  std::string params;
  for (const auto& [k, v] : c.params) params += (params.empty() ? "" : " ") + k + "=" + v;
  return c.id + " | " + std::to_string(c.rule) + " | " + to_string(c.kind) + " | " + params + " | " +
         (c.expect_pass ? "pass" : "fail") + " | " + c.anchor;
}

inline std::vector<Claim> parse_catalog(std::istream& in) {
  std::vector<Claim> out;
  std::set<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(parse_claim(t));
    if (!ids.insert(out.back().id).second) throw std::invalid_argument("duplicate claim id " + out.back().id);
  }
  return out;
}

inline std::vector<Claim> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog " + path);
  return parse_catalog(in);
}

inline std::string serialize_catalog(const std::vector<Claim>& claims) {
  std::string out = "# id | rule | kind | params | expected | anchor\n";
  std::string group;
  for (const Claim& c : claims) {
    if (c.group() != group) {
      if (!group.empty()) out += "\n";
      group = c.group();
    }
    out += serialize_claim(c) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Patterns
//
// Input patterns: 0 1 literal cells; a..z free cells (a repeated letter is
// the same cell); A B C D the blocks 00 01 10 11; {w1,w2,...} a choice of
// literal words. Output patterns: alternatives separated by '/', each made of
// 0 1, '*' (any cell), A..D, and [k] for "same as input cell k".

namespace detail {

struct PatternPart {
  std::vector<Word> choices;  // literal alternatives
  char var = 0;               // free cell
};

inline Word block_cells(char b) {
  if (b < 'A' || b > 'D') throw std::invalid_argument(std::string("unknown block ") + b);
  const int v = b - 'A';
  return Word(std::vector<Cell>{static_cast<Cell>(v >> 1), static_cast<Cell>(v & 1)});
}

inline Word literal_word(const std::string& s) {
  Word w;
  for (char ch : s) {
    if (ch == '0' || ch == '1') w = w + Word(std::vector<Cell>{static_cast<Cell>(ch - '0')});
    else if (ch >= 'A' && ch <= 'D') w = w + block_cells(ch);
    else throw std::invalid_argument("bad literal " + s);
  }
  return w;
}

inline std::vector<PatternPart> parse_input_pattern(const std::string& p) {
  std::vector<PatternPart> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const char ch = p[i];
    if (ch == '{') {
      const auto close = p.find('}', i);
      if (close == std::string::npos) throw std::invalid_argument("unclosed choice in " + p);
      PatternPart part;
      for (const auto& alt : split(p.substr(i + 1, close - i - 1), ',')) part.choices.push_back(literal_word(alt));
      parts.push_back(std::move(part));
      i = close;
    } else if (ch >= 'a' && ch <= 'z') {
      parts.push_back(PatternPart{{}, ch});
    } else {
      parts.push_back(PatternPart{{literal_word(std::string(1, ch))}, 0});
    }
  }
  return parts;
}

/// Every word matching an input pattern, in a fixed order.
inline std::vector<Word> expand_pattern(const std::string& pattern) {
  const auto parts = parse_input_pattern(pattern);
  std::vector<char> vars;
  for (const auto& part : parts)
    if (part.var && std::find(vars.begin(), vars.end(), part.var) == vars.end()) vars.push_back(part.var);
  std::uint64_t combos = std::uint64_t{1} << vars.size();
  for (const auto& part : parts)
    if (!part.var) combos *= part.choices.size();
  if (vars.size() > 20 || combos > (1U << 20)) throw GuardExceeded("pattern has too many instances");
  std::vector<Word> out;
  for (std::uint64_t idx = 0; idx < combos; ++idx) {
    std::uint64_t rest = idx >> vars.size();
    Word w;
    for (const auto& part : parts) {
      if (part.var) {
        const auto k = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), part.var) - vars.begin());
        w = w + Word(std::vector<Cell>{static_cast<Cell>((idx >> k) & 1)});
      } else {
        w = w + part.choices[rest % part.choices.size()];
        rest /= part.choices.size();
      }
    }
    out.push_back(w);
  }
  return out;
}

inline bool output_matches(const std::string& alt, const Word& input, const Word& got) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < alt.size(); ++i) {
    const char ch = alt[i];
    if (ch == '[') {
      const auto close = alt.find(']', i);
      const auto k = static_cast<std::size_t>(std::stoul(alt.substr(i + 1, close - i - 1)));
      if (pos >= got.size() || k >= input.size() || got[pos] != input[k]) return false;
      ++pos;
      i = close;
    } else if (ch == '*') {
      if (pos >= got.size()) return false;
      ++pos;
    } else {
      const Word lit = literal_word(std::string(1, ch));
      for (Cell c : lit) {
        if (pos >= got.size() || got[pos] != c) return false;
        ++pos;
      }
    }
  }
  return pos == got.size();
}

inline bool output_matches_any(const std::string& out, const Word& input, const Word& got) {
  for (const auto& alt : split(out, '/'))
    if (output_matches(alt, input, got)) return true;
  return false;
}

inline std::vector<Word> all_words(std::size_t len) {
  if (len > 20) throw GuardExceeded("word enumeration too long");
  std::vector<Word> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << len); ++b) out.push_back(Word::from_bits(b, len));
  return out;
}

inline std::vector<CyclicWord> primitive_backgrounds(std::size_t max_len) {
  std::vector<CyclicWord> out;
  std::set<std::string> seen;
  for (std::size_t len = 1; len <= max_len; ++len)
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << len); ++b) {
      const CyclicWord u(Word::from_bits(b, len));
      if (u.primitive_root().size() != len) continue;
      const CyclicWord canon = u.canonical().first;
      if (seen.insert(canon.str()).second) out.push_back(canon);
    }
  return out;
}

inline std::string fail_word(const Word& w) { return w.empty() ? std::string("(empty)") : w.str(); }

// --- deciders ---------------------------------------------------------------

inline ClaimReport check_maps_to(const Claim& c) {
  ClaimReport r;
  const int t = c.int_param("t", 1);
  const std::string out = c.param("out");
  for (const Word& w : expand_pattern(c.param("in"))) {
    const Word got = step_word(Rule(c.rule), w, t);
    if (!output_matches_any(out, w, got)) {
      r.witness = fail_word(w);
      r.detail = "image " + fail_word(got);
      return r;
    }
  }
  r.passed = true;
  return r;
}

inline ClaimReport check_no_antecedent(const Claim& c) {
  ClaimReport r;
  const Word w = literal_word(c.param("word"));
  const int t = c.int_param("t", 1);
  if (!has_antecedent(Rule(c.rule), w, t)) {
    r.passed = true;
    return r;
  }
  // A witness preimage of length |w|+2t.
  const std::size_t len = w.size() + 2 * static_cast<std::size_t>(t);
  for (const Word& v : all_words(len))
    if (step_word(Rule(c.rule), v, t) == w) {
      r.witness = v.str();
      break;
    }
  r.detail = "has an antecedent";
  return r;
}

/// Stable: every context of width t on each side maps w back to itself.
inline ClaimReport check_stable(const Claim& c) {
  const int t = c.int_param("t", 1);
  std::string left, right;
  for (int i = 0; i < t; ++i) {
    left.push_back(static_cast<char>('a' + i));
    right.push_back(static_cast<char>('n' + i));
  }
  Claim m = c;
  m.params = {{"in", left + c.param("word") + right}, {"out", c.param("word")}, {"t", std::to_string(t)}};
  return check_maps_to(m);
}

/// Wall: for t = 1..steps the cells above w do not depend on the context.
inline ClaimReport check_wall(const Claim& c) {
  ClaimReport r;
  const Word w = literal_word(c.param("word"));
  const int steps = c.int_param("steps", 4);
  for (int t = 1; t <= steps; ++t) {
    const auto len = static_cast<std::size_t>(t);
    std::optional<Word> first;
    for (const Word& x : all_words(len))
      for (const Word& y : all_words(len)) {
        const Word got = step_word(Rule(c.rule), x + w + y, t);
        if (!first) first = got;
        if (got != *first) {
          r.witness = (x + w + y).str();
          r.detail = "t=" + std::to_string(t) + " image " + got.str() + " vs " + first->str();
          return r;
        }
      }
  }
  r.passed = true;
  return r;
}

/// Nilpotent: after `steps` steps every cyclic word (|u| <= 8) and every
/// finite word (|w| <= 10) is uniform with one common value.
inline ClaimReport check_nilpotent(const Claim& c) {
  ClaimReport r;
  const int steps = c.int_param("steps", 1);
  const Rule f(c.rule);
  const Cell value = step_cyclic(f, CyclicWord::parse("0"), steps).at(0);
  for (std::size_t len = 1; len <= 8; ++len)
    for (const Word& u : all_words(len)) {
      const CyclicWord img = step_cyclic(f, CyclicWord(u), steps);
      if (img.word() != Word::filled(len, value)) {
        r.witness = "cyclic " + u.str();
        r.detail = "image " + img.str();
        return r;
      }
    }
  for (std::size_t len = static_cast<std::size_t>(2 * steps + 1); len <= 10; ++len)
    for (const Word& w : all_words(len)) {
      const Word img = step_word(f, w, steps);
      if (img != Word::filled(img.size(), value)) {
        r.witness = w.str();
        r.detail = "image " + img.str();
        return r;
      }
    }
  r.passed = true;
  return r;
}

/// F^power = sigma^shift on F^after(words), checked on all words of
/// length width + 2*after.
inline ClaimReport check_shift_on_image(const Claim& c) {
  ClaimReport r;
  const int p = c.int_param("power", 1), s = c.int_param("shift", 0), k = c.int_param("after", 1);
  const int width = c.int_param("width", 9);
  if (std::abs(s) > p || width < 2 * p + 1) throw std::invalid_argument("shift claim needs |shift| <= power and room");
  for (const Word& v : all_words(static_cast<std::size_t>(width + 2 * k))) {
    const Word w = step_word(Rule(c.rule), v, k);
    const Word got = step_word(Rule(c.rule), w, p);
    const Word want = w.sub(static_cast<std::size_t>(p + s), w.size() - static_cast<std::size_t>(2 * p));
    if (got != want) {
      r.witness = v.str();
      r.detail = "F^" + std::to_string(k) + " = " + w.str() + ", then " + got.str() + " instead of " + want.str();
      return r;
    }
  }
  r.passed = true;
  return r;
}

/// One step is sigma^shift on every word avoiding the listed factors.
inline ClaimReport check_shift_avoiding(const Claim& c) {
  ClaimReport r;
  const int s = c.int_param("shift", 0), width = c.int_param("width", 10);
  std::vector<Word> avoid;
  for (const auto& a : split(c.param("avoid"), '/'))
    if (!a.empty()) avoid.push_back(literal_word(a));
  for (const Word& w : all_words(static_cast<std::size_t>(width))) {
    if (std::any_of(avoid.begin(), avoid.end(), [&](const Word& a) { return w.contains(a); })) continue;
    const Word got = step_word(Rule(c.rule), w);
    const Word want = w.sub(static_cast<std::size_t>(1 + s), w.size() - 2);
    if (got != want) {
      r.witness = w.str();
      r.detail = "image " + got.str() + " instead of " + want.str();
      return r;
    }
  }
  r.passed = true;
  return r;
}

/// Every cyclic word of length <= max_u not conjugate to an excepted
/// background is uniformly `value` after |u| steps.
inline ClaimReport check_uniform_image(const Claim& c) {
  ClaimReport r;
  const auto value = static_cast<Cell>(c.int_param("value", 0));
  const int max_u = c.int_param("max_u", 8);
  std::vector<CyclicWord> except;
  for (const auto& e : split(c.param("except"), '/'))
    if (!e.empty()) except.push_back(CyclicWord::parse(e).primitive_root().canonical().first);
  for (std::size_t len = 1; len <= static_cast<std::size_t>(max_u); ++len)
    for (const Word& w : all_words(len)) {
      const CyclicWord u(w);
      const CyclicWord root = u.primitive_root().canonical().first;
      if (std::find(except.begin(), except.end(), root) != except.end()) continue;
      const CyclicWord img = step_cyclic(Rule(c.rule), u, static_cast<int>(len));
      if (img.word() != Word::filled(len, value)) {
        r.witness = "cyclic " + w.str();
        r.detail = "image " + img.str();
        return r;
      }
    }
  r.passed = true;
  return r;
}

/// Pred_{F,n} only reads the 2*radius+1 central cells, for n <= n_max.
inline ClaimReport check_depends_on_center(const Claim& c) {
  ClaimReport r;
  const int rad = c.int_param("radius", 1), n_max = c.int_param("n_max", 5);
  if (n_max > 7) throw GuardExceeded("dependency check limited to n <= 7");
  for (int n = rad + 1; n <= n_max; ++n) {
    const auto len = static_cast<std::size_t>(2 * n + 1);
    std::map<std::uint64_t, std::pair<int, std::uint64_t>> seen;  // center bits -> value, input
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << len); ++b) {
      const Word w = Word::from_bits(b, len);
      const std::uint64_t center = w.sub(static_cast<std::size_t>(n - rad), static_cast<std::size_t>(2 * rad + 1)).to_bits();
      const int v = pred_value(Rule(c.rule), w);
      auto [it, fresh] = seen.emplace(center, std::make_pair(v, b));
      if (!fresh && it->second.first != v) {
        r.witness = Word::from_bits(it->second.second, len).str() + "," + w.str();
        r.detail = "same center, different Pred at n=" + std::to_string(n);
        return r;
      }
    }
  }
  r.passed = true;
  return r;
}

/// Fit f = a.l ^ b.c ^ c.r ^ d from four neighborhoods, check the other four.
inline ClaimReport check_affine(const Claim& c) {
  ClaimReport r;
  const Rule f(c.rule);
  const int d = f.at(0), a = f.at(4) ^ d, b = f.at(2) ^ d, e = f.at(1) ^ d;
  std::string bad;
  for (int i = 0; i < 8; ++i) {
    const int fit = (a & (i >> 2)) ^ (b & (i >> 1)) ^ (e & i) ^ d;
    if (fit != f.at(i)) bad += (bad.empty() ? "" : ",") + Word::from_bits(static_cast<std::uint64_t>(i), 3).str();
  }
  r.passed = bad.empty();
  r.witness = bad;
  if (!bad.empty()) r.detail = "neighborhoods off the affine fit";
  return r;
}

/// Delegates to the exhaustive protocol audit; the claimed growth class must
/// also hold (bound=const: same max bits at n=3 and n_max).
inline ClaimReport check_audit(const Claim& c) {
  ClaimReport r;
  const Problem problem = parse_problem(c.param("problem", "pred"));
  const auto s = get_strategy(Rule(c.rule), problem, c.param("variant"));
  if (!s) {
    r.witness = "no strategy";
    return r;
  }
  const Rule oracle(c.int_param("oracle", c.rule));
  const AuditReport a = problem == Problem::Pred ? audit_pred(*s, oracle, c.int_param("n_max", 5)) : audit_sinv(*s, oracle);
  if (!a.correct) {
    r.witness = a.mismatches.front().instance;
    r.detail = std::to_string(a.mismatch_count) + " mismatches against rule " + std::to_string(oracle.code());
    return r;
  }
  if (!a.within_bound) {
    r.witness = "bits";
    r.detail = "exceeds declared bound " + a.bound.str();
    return r;
  }
  if (problem == Problem::Pred && c.param("bound", "const") == "const") {
    const int n3 = a.max_bits_by_n[3], nm = a.max_bits_by_n.back();
    if (a.bound.kind != BitBound::Kind::Constant || n3 != nm) {
      r.witness = "bits n=3:" + std::to_string(n3) + " n=" + std::to_string(a.n_max) + ":" + std::to_string(nm);
      r.detail = "cost grows with n";
      return r;
    }
  }
  r.passed = true;
  r.detail = "max bits " + std::to_string(a.max_bits);
  return r;
}

/// The set of invadable primitive backgrounds (|u| <= max_u, perturbations
/// |x| <= max_x) is exactly the listed one ("none" for empty).
inline ClaimReport check_invadable(const Claim& c) {
  ClaimReport r;
  const auto max_u = static_cast<std::size_t>(c.int_param("max_u", 4));
  const auto max_x = static_cast<std::size_t>(c.int_param("max_x", 6));
  std::set<std::string> claimed;
  const std::string list = c.param("backgrounds", "none");
  if (list != "none")
    for (const auto& b : split(list, '/')) claimed.insert(CyclicWord::parse(b).primitive_root().canonical().first.str());
  for (const CyclicWord& u : primitive_backgrounds(max_u)) {
    std::optional<Word> invader;
    for (std::size_t lx = 1; lx <= max_x && !invader; ++lx)
      for (const Word& x : all_words(lx)) {
        const SInvVerdict v = sinv_decide(Rule(c.rule), u, x);
        if (!v.conclusive()) throw GuardExceeded("inconclusive SInv verdict while checking " + c.id);
        if (v.kind == SInvVerdict::Kind::Invaded) {
          invader = x;
          break;
        }
      }
    const bool listed = claimed.count(u.str()) > 0;
    if (invader.has_value() != listed) {
      r.witness = "u=" + u.str() + (invader ? " x=" + invader->str() : "");
      r.detail = invader ? "invaded although not listed" : "listed but never invaded";
      return r;
    }
  }
  r.passed = true;
  return r;
}

}  // namespace detail

inline ClaimReport run_claim(const Claim& c) {
  ClaimReport r;
  switch (c.kind) {
    case ClaimKind::MapsTo: r = detail::check_maps_to(c); break;
    case ClaimKind::NoAntecedent: r = detail::check_no_antecedent(c); break;
    case ClaimKind::StablePattern: r = detail::check_stable(c); break;
    case ClaimKind::Wall: r = detail::check_wall(c); break;
    case ClaimKind::Nilpotent: r = detail::check_nilpotent(c); break;
    case ClaimKind::EqualsShiftOnImage: r = detail::check_shift_on_image(c); break;
    case ClaimKind::ShiftOnAvoiding: r = detail::check_shift_avoiding(c); break;
    case ClaimKind::UniformImage: r = detail::check_uniform_image(c); break;
    case ClaimKind::DependsOnCenter: r = detail::check_depends_on_center(c); break;
    case ClaimKind::AffineRule: r = detail::check_affine(c); break;
    case ClaimKind::AuditPasses: r = detail::check_audit(c); break;
    case ClaimKind::Invadable: r = detail::check_invadable(c); break;
  }
  r.id = c.id;
  r.expected = c.expect_pass;
  if (!r.passed && r.witness.empty()) r.witness = "?";
  return r;
}

/// Re-derives a failure from its witness with the core primitives only.
inline bool witness_reproduces(const Claim& c, const ClaimReport& r) {
  if (r.passed) return false;
  const Rule f(c.rule);
  auto cyclic = [](const std::string& w) { return CyclicWord::parse(w.substr(w.find(' ') + 1)); };
  switch (c.kind) {
    case ClaimKind::MapsTo: {
      const Word w = Word::parse(r.witness);
      const auto inst = detail::expand_pattern(c.param("in"));
      return std::find(inst.begin(), inst.end(), w) != inst.end() &&
             !detail::output_matches_any(c.param("out"), w, step_word(f, w, c.int_param("t", 1)));
    }
    case ClaimKind::StablePattern: {
      const Word w = Word::parse(r.witness);
      const Word p = detail::literal_word(c.param("word"));
      return step_word(f, w, c.int_param("t", 1)) != p;
    }
    case ClaimKind::NoAntecedent:
      return step_word(f, Word::parse(r.witness), c.int_param("t", 1)) == detail::literal_word(c.param("word"));
    case ClaimKind::Wall: {
      // The checker compares every context against the all-zero one.
      const Word w = Word::parse(r.witness);
      const Word p = detail::literal_word(c.param("word"));
      const auto t = (w.size() - p.size()) / 2;
      const Word base = Word::filled(t, 0) + p + Word::filled(t, 0);
      return step_word(f, w, static_cast<int>(t)) != step_word(f, base, static_cast<int>(t));
    }
    case ClaimKind::Nilpotent: {
      const int steps = c.int_param("steps", 1);
      const Cell z = step_cyclic(f, CyclicWord::parse("0"), steps).at(0);
      if (r.witness.rfind("cyclic ", 0) == 0) {
        const CyclicWord img = step_cyclic(f, cyclic(r.witness), steps);
        return img.word() != Word::filled(img.size(), z);
      }
      const Word img = step_word(f, Word::parse(r.witness), steps);
      return img != Word::filled(img.size(), z);
    }
    case ClaimKind::EqualsShiftOnImage: {
      const int p = c.int_param("power", 1), s = c.int_param("shift", 0);
      const Word w = step_word(f, Word::parse(r.witness), c.int_param("after", 1));
      return step_word(f, w, p) != w.sub(static_cast<std::size_t>(p + s), w.size() - static_cast<std::size_t>(2 * p));
    }
    case ClaimKind::ShiftOnAvoiding: {
      const Word w = Word::parse(r.witness);
      return step_word(f, w) != w.sub(static_cast<std::size_t>(1 + c.int_param("shift", 0)), w.size() - 2);
    }
    case ClaimKind::UniformImage: {
      const CyclicWord u = cyclic(r.witness);
      const CyclicWord img = step_cyclic(f, u, static_cast<int>(u.size()));
      return img.word() != Word::filled(u.size(), static_cast<Cell>(c.int_param("value", 0)));
    }
    case ClaimKind::DependsOnCenter: {
      const auto parts = detail::split(r.witness, ',');
      const Word a = Word::parse(parts.at(0)), b = Word::parse(parts.at(1));
      const int rad = c.int_param("radius", 1);
      const std::size_t n = a.size() / 2;
      return a.size() == b.size() && a.sub(n - static_cast<std::size_t>(rad), static_cast<std::size_t>(2 * rad + 1)) ==
                                          b.sub(n - static_cast<std::size_t>(rad), static_cast<std::size_t>(2 * rad + 1)) &&
             pred_value(f, a) != pred_value(f, b);
    }
    case ClaimKind::AffineRule:
      return !is_affine(f);
    case ClaimKind::AuditPasses: {
      const auto parts = detail::split(r.witness, '|');
      if (parts.size() >= 2) {
        const auto s = get_strategy(f, parse_problem(c.param("problem", "pred")), c.param("variant"));
        const Rule oracle(c.int_param("oracle", c.rule));
        if (parts.size() == 2) {
          const Word w = Word::parse(parts[0]);
          return run_strategy(*s, PredInstance{w, std::stoi(parts[1])}).answer != pred_value(oracle, w);
        }
        const CyclicWord u = CyclicWord::parse(parts[0]);
        const Word x = Word::parse(parts[1]);
        const int want = sinv_decide(oracle, u, x).kind == SInvVerdict::Kind::Invaded;
        return run_strategy(*s, SInvInstance{u, x, std::stoi(parts[2])}).answer != want;
      }
      return !detail::check_audit(c).passed;
    }
    case ClaimKind::Invadable: {
      // "u=... [x=...]": either an invading x for an unlisted u, or a listed
      // u for which no short perturbation invades.
      const auto parts = detail::split(r.witness, ' ');
      const CyclicWord u = CyclicWord::parse(parts.at(0).substr(2));
      if (parts.size() == 2)
        return sinv_decide(f, u, Word::parse(parts[1].substr(2))).kind == SInvVerdict::Kind::Invaded;
      for (std::size_t lx = 1; lx <= static_cast<std::size_t>(c.int_param("max_x", 6)); ++lx)
        for (const Word& x : detail::all_words(lx))
          if (sinv_decide(f, u, x).kind == SInvVerdict::Kind::Invaded) return false;
      return true;
    }
  }
  return false;
}

struct CatalogSummary {
  struct Group {
    int passed = 0;
    int failed = 0;
    int unexpected = 0;
  };
  std::map<std::string, Group> groups;
  int total = 0;
  int passed = 0;
  int expected_failures = 0;
  int unexpected = 0;

  bool healthy() const { return unexpected == 0; }
};

struct CatalogRun {
  std::vector<ClaimReport> reports;  // in catalog order
  CatalogSummary summary;
};

/// Runs claims on a few threads; reports come back in catalog order.
inline CatalogRun run_catalog(const std::vector<Claim>& claims, unsigned threads = 0) {
  if (threads == 0) threads = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
  CatalogRun out;
  out.reports.resize(claims.size());
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t)
    jobs.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < claims.size(); i += threads) out.reports[i] = run_claim(claims[i]);
    }));
  for (auto& j : jobs) j.get();
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const ClaimReport& r = out.reports[i];
    auto& g = out.summary.groups[claims[i].group()];
    ++out.summary.total;
    (r.passed ? g.passed : g.failed)++;
    if (r.passed) ++out.summary.passed;
    if (!r.passed && !r.expected) ++out.summary.expected_failures;
    if (r.unexpected()) {
      ++g.unexpected;
      ++out.summary.unexpected;
    }
  }
  return out;
}

/// The catalog compiled into the library.
inline std::vector<Claim> builtin_catalog() {
  std::istringstream in(kBuiltinCatalog);
  return parse_catalog(in);
}

/// One group id per proposition about an individual rule or rule family.
inline const std::vector<std::string>& proposition_ids() {
  static const std::vector<std::string> ids = {"lin",   "r76",  "dep",   "r5",     "r7",   "r13",  "r28",  "r78",
                                               "r140",  "r172", "r32",   "r156a",  "r27",  "r44",  "walls", "absorb",
                                               "r104",  "r132", "r152",  "r156b",  "r184", "r56"};
  return ids;
}

}  // namespace eca
