#pragma once

// Command dispatch for ecatool. Everything lives here rather than in main()
// so the tests can drive the commands with in-memory streams.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eca/claims.hpp"
#include "eca/commcomp.hpp"
#include "eca/core.hpp"
#include "eca/preimage.hpp"
#include "eca/problems.hpp"
#include "eca/protocols.hpp"
#include "eca/render.hpp"

namespace ecatool {

using json = nlohmann::json;

inline constexpr const char* kVersion = "1.0.0";

enum Status : int {
  kOk = 0,
  kFailures = 1,  // a check reported something wrong (verify, protocols)
  kUsage = 2,     // bad arguments or malformed input
  kGuard = 3,     // a size guard stopped the computation
  kIo = 4,        // files could not be read or written
};

/// What a command hands back before formatting.
struct Outcome {
  json parameters = json::object();
  json results = json::object();
  std::string text;
  int status = kOk;
};

namespace detail {

using eca::Rule;
using eca::Word;

inline Word random_word(std::uint64_t seed, std::size_t width) {
  std::mt19937_64 rng(seed);
  std::vector<eca::Cell> cells(width);
  for (auto& c : cells) c = static_cast<eca::Cell>(rng() >> 63);
  return Word(std::move(cells));
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << data)) throw std::ios_base::failure("cannot write " + path);
}

/// Depth-first search for t-step antecedents, pruned by the automaton test.
inline void collect_preimages(Rule rule, const Word& w, int t, std::size_t limit, std::vector<Word>& out) {
  if (out.size() >= limit) return;
  if (t == 0) {
    out.push_back(w);
    return;
  }
  for (const Word& v : eca::enumerate_preimages(rule, w)) {
    if (out.size() >= limit) return;
    if (t == 1 || eca::has_antecedent(rule, v, t - 1)) collect_preimages(rule, v, t - 1, limit, out);
  }
}

inline eca::FunctionTable read_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot open " + path);
  std::vector<std::vector<int>> m;
  std::string line;
  while (std::getline(f, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("bad table entry '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) m.push_back(std::move(row));
  }
  return eca::FunctionTable::from_matrix(m);
}

inline json audit_json(const eca::AuditReport& r) {
  json mism = json::array();
  for (const auto& m : r.mismatches) mism.push_back({{"instance", m.instance}, {"expected", m.expected}, {"got", m.got}});
  return {{"rule", r.rule},
          {"oracle_rule", r.oracle_rule},
          {"problem", eca::to_string(r.problem)},
          {"strategy", r.strategy},
          {"variant", r.variant},
          {"bound", r.bound.str()},
          {"n_min", r.n_min},
          {"n_max", r.n_max},
          {"max_bits_by_n", r.max_bits_by_n},
          {"max_bits", r.max_bits},
          {"instances", r.instances},
          {"inconclusive", r.inconclusive},
          {"mismatch_count", r.mismatch_count},
          {"mismatches", mism},
          {"correct", r.correct},
          {"within_bound", r.within_bound},
          {"passed", r.passed()},
          {"note", r.note}};
}

inline std::string audit_line(const eca::AuditReport& r) {
  std::ostringstream s;
  s << "rule " << r.rule << " " << eca::to_string(r.problem) << " " << r.strategy;
  if (!r.variant.empty()) s << " [" << r.variant << "]";
  s << "  bound " << r.bound.str() << "  bits";
  if (r.problem == eca::Problem::Pred) {
    for (int n = r.n_min; n <= r.n_max; ++n) s << " " << n << ":" << r.max_bits_by_n[static_cast<std::size_t>(n)];
  } else {
    s << " " << r.max_bits;
  }
  s << "  instances " << r.instances;
  if (r.inconclusive) s << " (" << r.inconclusive << " inconclusive)";
  s << "  " << (r.passed() ? "ok" : "FAILED");
  if (!r.correct) s << " mismatches " << r.mismatch_count << " first " << r.mismatches.front().instance;
  if (!r.within_bound) s << " over bound";
  return s.str();
}

inline json claim_json(const eca::Claim& c, const eca::ClaimReport& r) {
  return {{"id", r.id},          {"rule", c.rule},           {"kind", eca::to_string(c.kind)},
          {"passed", r.passed},  {"expected", r.expected},   {"unexpected", r.unexpected()},
          {"witness", r.witness}, {"detail", r.detail},      {"anchor", c.anchor}};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands

struct EvolveArgs {
  int rule = 110;
  std::optional<std::string> word;
  std::uint64_t seed = 0;
  int width = 64;
  int steps = 32;
  std::optional<std::string> image;
  std::string format = "p1";
  bool rows = false;
};

inline Outcome cmd_evolve(const EvolveArgs& a, bool structured) {
  if (a.width < 1 && !a.word) throw std::invalid_argument("width must be positive");
  const eca::Word w = a.word ? eca::Word::parse(*a.word) : detail::random_word(a.seed, static_cast<std::size_t>(a.width));
  if (w.empty()) throw std::invalid_argument("initial word is empty");
  const auto d = eca::evolve(eca::Rule(a.rule), w, a.steps);
  Outcome o;
  o.parameters = {{"rule", a.rule}, {"seed", a.seed}, {"width", a.width}, {"steps", a.steps},
                  {"format", a.format}, {"rows", a.rows}};
  o.parameters["word"] = a.word ? json(*a.word) : json(nullptr);
  o.parameters["image"] = a.image ? json(*a.image) : json(nullptr);
  if (a.image) {
    if (a.format != "p1" && a.format != "p4") throw std::invalid_argument("format must be p1 or p4");
    detail::write_file(*a.image, eca::render_pbm(d, a.format == "p1" ? eca::PbmFormat::Plain : eca::PbmFormat::Raw));
  }
  json rows = json::array();
  for (const auto& r : d) rows.push_back(r.str());
  o.results = {{"rule", a.rule}, {"initial", w.str()}, {"width", w.size()}, {"steps", a.steps}};
  if (structured || a.rows || !a.image) o.results["rows"] = rows;
  if (a.image) o.results["image"] = *a.image;
  if (a.rows || !a.image) o.text = eca::render_text(d);
  if (a.image) o.text += "wrote " + *a.image + " (" + std::to_string(w.size()) + "x" + std::to_string(d.size()) + ")\n";
  return o;
}

inline Outcome cmd_classify() {
  const eca::Classification c = eca::classify();
  Outcome o;
  json classes = json::array();
  std::ostringstream s;
  std::size_t rules = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    classes.push_back(c.classes[i]);
    rules += c.classes[i].size();
    s << "class " << i + 1 << ":";
    for (int r : c.classes[i]) s << " " << r;
    s << "\n";
  }
  s << c.size() << " classes, " << rules << " rules\n";
  o.results = {{"class_count", c.size()}, {"rule_count", rules}, {"classes", classes}};
  o.text = s.str();
  return o;
}

struct PreimageArgs {
  int rule = 0;
  std::string word;
  int steps = 1;
  int limit = 8;
  int forbidden = 0;
};

inline Outcome cmd_preimage(const PreimageArgs& a) {
  const eca::Rule rule(a.rule);
  const eca::Word w = eca::Word::parse(a.word);
  Outcome o;
  o.parameters = {{"rule", a.rule}, {"word", a.word}, {"steps", a.steps}, {"limit", a.limit}, {"forbidden", a.forbidden}};
  const bool has = eca::has_antecedent(rule, w, a.steps);
  std::ostringstream s;
  s << (has ? "has antecedent" : "no antecedent") << "\n";
  o.results = {{"has_antecedent", has}};
  if (has && a.limit > 0) {
    if (w.size() + 2 * static_cast<std::size_t>(a.steps) <= eca::kMaxEnumeratedLength) {
      std::vector<eca::Word> found;
      detail::collect_preimages(rule, w, a.steps, static_cast<std::size_t>(a.limit), found);
      json ws = json::array();
      for (const auto& v : found) {
        ws.push_back(v.str());
        s << "  " << v.str() << "\n";
      }
      o.results["witnesses"] = ws;
    } else {
      o.results["witnesses"] = nullptr;
      s << "  (word too long to list witnesses)\n";
    }
  }
  if (a.forbidden > 0) {
    json fw = json::array();
    s << "minimal forbidden words up to length " << a.forbidden << ":";
    for (const auto& f : eca::forbidden_words(rule, a.steps, a.forbidden)) {
      fw.push_back(f.str());
      s << " " << f.str();
    }
    s << "\n";
    o.results["forbidden"] = fw;
  }
  o.text = s.str();
  return o;
}

struct CcArgs {
  std::optional<std::string> table;
  std::optional<int> rule;
  int n = 1;
  int cut = 0;
  std::optional<int> cap;
};

inline Outcome cmd_cc(const CcArgs& a) {
  if (a.table.has_value() == a.rule.has_value()) throw std::invalid_argument("give exactly one of --table or --rule");
  const eca::FunctionTable f =
      a.table ? detail::read_table(*a.table) : eca::build_pred_table(eca::Rule(*a.rule), a.n, a.cut);
  const int cap = a.cap ? *a.cap
                        : eca::ceil_log2(f.rows()) + eca::ceil_log2(std::max<std::size_t>(1, f.distinct_values()));
  const eca::CcResult r = eca::cc_exact(f, cap);
  Outcome o;
  o.parameters = {{"n", a.n}, {"cut", a.cut}};
  o.parameters["table"] = a.table ? json(*a.table) : json(nullptr);
  o.parameters["rule"] = a.rule ? json(*a.rule) : json(nullptr);
  o.parameters["cap"] = a.cap ? json(*a.cap) : json(nullptr);
  const int lower = eca::cc_lower_bound(f);
  o.results = {{"rows", f.rows()},     {"cols", f.cols()},         {"cap", cap},
               {"depth", r.depth},     {"exceeded", r.exceeded},   {"lower_bound", lower}};
  std::ostringstream s;
  s << f.rows() << "x" << f.cols() << " table: ";
  if (r.exceeded)
    s << "D > " << cap << "\n";
  else
    s << "D = " << r.depth << " (lower bound " << lower << ")\n";
  o.text = s.str();
  return o;
}

inline Outcome cmd_pred(int rule, int n) {
  const eca::PredCcReport r = eca::pred_cc_report(eca::Rule(rule), n);
  Outcome o;
  o.parameters = {{"rule", rule}, {"n", n}};
  json cuts = json::array();
  std::ostringstream s;
  for (std::size_t i = 0; i < r.per_cut.size(); ++i) {
    cuts.push_back(r.per_cut[i].depth);
    s << "cut " << i << ": " << r.per_cut[i].depth << "\n";
  }
  s << "max: " << r.max << "\n";
  o.results = {{"rule", rule}, {"n", n}, {"per_cut", cuts}, {"max", r.max}};
  o.text = s.str();
  return o;
}

struct SinvArgs {
  int rule = 0;
  std::string u;
  std::string x;
  int horizon = 256;
  int width_cap = -1;
};

inline Outcome cmd_sinv(const SinvArgs& a) {
  const auto v = eca::sinv_decide(eca::Rule(a.rule), eca::CyclicWord::parse(a.u), eca::Word::parse(a.x),
                                  {a.horizon, a.width_cap});
  Outcome o;
  o.parameters = {{"rule", a.rule}, {"u", a.u}, {"x", a.x}, {"horizon", a.horizon}, {"width-cap", a.width_cap}};
  o.results = {{"verdict", eca::to_string(v.kind)},
               {"decided_at", v.decided_at},
               {"max_width", v.max_width},
               {"horizon", v.horizon}};
  std::ostringstream s;
  s << eca::to_string(v.kind);
  if (v.conclusive()) s << " at step " << v.decided_at;
  s << " (widest difference " << v.max_width << ")\n";
  o.text = s.str();
  return o;
}

struct ProtocolsArgs {
  std::optional<int> rule;
  bool all = false;
  std::string problem = "pred";
  int n_max = 5;
  std::string variant;
};

inline Outcome cmd_protocols(const ProtocolsArgs& a) {
  if (a.rule.has_value() == a.all) throw std::invalid_argument("give exactly one of --rule or --all");
  const eca::Problem p = eca::parse_problem(a.problem);
  std::vector<std::pair<int, std::string>> jobs;
  if (a.all) {
    for (int r : eca::covered_rules(p))
      for (const auto& v : eca::strategy_variants(r, p)) jobs.emplace_back(r, v);
  } else if (!a.variant.empty()) {
    jobs.emplace_back(*a.rule, a.variant);
  } else {
    const auto vs = eca::strategy_variants(*a.rule, p);
    if (vs.empty()) throw std::invalid_argument("no " + a.problem + " strategy for rule " + std::to_string(*a.rule));
    for (const auto& v : vs) jobs.emplace_back(*a.rule, v);
  }
  Outcome o;
  o.parameters = {{"all", a.all}, {"problem", a.problem}, {"n-max", a.n_max}, {"variant", a.variant}};
  o.parameters["rule"] = a.rule ? json(*a.rule) : json(nullptr);
  json reports = json::array();
  int failed = 0;
  for (const auto& [r, v] : jobs) {
    const auto rep = eca::audit_strategy(eca::Rule(r), p, a.n_max, v);
    if (!rep) throw std::invalid_argument("no " + a.problem + " strategy for rule " + std::to_string(r) + " variant " + v);
    reports.push_back(detail::audit_json(*rep));
    o.text += detail::audit_line(*rep) + "\n";
    if (!rep->passed()) ++failed;
  }
  o.text += std::to_string(jobs.size()) + " audits, " + std::to_string(failed) + " failed\n";
  o.results = {{"reports", reports}, {"audits", jobs.size()}, {"failed", failed}};
  o.status = failed ? kFailures : kOk;
  return o;
}

struct VerifyArgs {
  std::optional<std::string> catalog;
  unsigned threads = 0;
};

inline Outcome cmd_verify(const VerifyArgs& a) {
  const auto claims = a.catalog ? eca::load_catalog(*a.catalog) : eca::builtin_catalog();
  const eca::CatalogRun run = eca::run_catalog(claims, a.threads);
  Outcome o;
  o.parameters = {{"threads", a.threads}};
  o.parameters["catalog"] = a.catalog ? json(*a.catalog) : json(nullptr);
  json reports = json::array(), groups = json::object();
  std::ostringstream s;
  for (std::size_t i = 0; i < claims.size(); ++i) reports.push_back(detail::claim_json(claims[i], run.reports[i]));
  for (const auto& [g, st] : run.summary.groups) {
    groups[g] = {{"passed", st.passed}, {"failed", st.failed}, {"unexpected", st.unexpected}};
    s << g << ": " << st.passed << " passed, " << st.failed << " failed";
    if (st.unexpected) s << ", " << st.unexpected << " UNEXPECTED";
    s << "\n";
  }
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const auto& r = run.reports[i];
    if (!r.passed || r.unexpected())
      s << (r.unexpected() ? "UNEXPECTED " : "expected failure ") << r.id << " (rule " << claims[i].rule << ", "
        << eca::to_string(claims[i].kind) << "): " << r.detail << "; witness " << r.witness << "\n";
  }
  const auto& sum = run.summary;
  s << sum.total << " claims: " << sum.passed << " passed, " << sum.expected_failures << " expected failures, "
    << sum.unexpected << " unexpected\n";
  o.results = {{"total", sum.total},
               {"passed", sum.passed},
               {"expected_failures", sum.expected_failures},
               {"unexpected", sum.unexpected},
               {"healthy", sum.healthy()},
               {"groups", groups},
               {"reports", reports}};
  o.text = s.str();
  o.status = sum.healthy() ? kOk : kFailures;
  return o;
}

inline Outcome cmd_catalog() {
  Outcome o;
  json claims = json::array();
  for (const auto& c : eca::builtin_catalog())
    claims.push_back({{"id", c.id},
                      {"rule", c.rule},
                      {"kind", eca::to_string(c.kind)},
                      {"params", c.params},
                      {"expected", c.expect_pass ? "pass" : "fail"},
                      {"anchor", c.anchor}});
  o.results = {{"claims", claims}};
  o.text = eca::kBuiltinCatalog;
  return o;
}

// ---------------------------------------------------------------------------
// Dispatch

/// Parses `args` (without the program name), runs one command and writes its
/// output. Returns the process exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elementary cellular automata: simulation, preimages and communication complexity", "ecatool"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  bool structured = false;
  app.add_flag("--json", structured, "Emit a JSON report document instead of text");
  app.fallthrough();

  EvolveArgs ev;
  auto* evolve = app.add_subcommand("evolve", "Space-time diagram of a finite word");
  evolve->add_option("--rule", ev.rule, "Rule code 0..255")->required();
  evolve->add_option("--word", ev.word, "Initial word of 0s and 1s");
  evolve->add_option("--seed", ev.seed, "Seed for a random initial word");
  evolve->add_option("--width", ev.width, "Random word width");
  evolve->add_option("--steps", ev.steps, "Number of steps");
  evolve->add_option("--image", ev.image, "Write a PBM image to this path");
  evolve->add_option("--format", ev.format, "p1 (plain) or p4 (raw)");
  evolve->add_flag("--rows", ev.rows, "Print the rows even when writing an image");

  auto* classify = app.add_subcommand("classify", "Equivalence classes under mirror and complement");

  PreimageArgs pre;
  auto* preimage = app.add_subcommand("preimage", "Does a word have an antecedent after t steps?");
  preimage->add_option("--rule", pre.rule)->required();
  preimage->add_option("--word", pre.word)->required();
  preimage->add_option("--steps", pre.steps);
  preimage->add_option("--limit", pre.limit, "Maximum number of witnesses");
  preimage->add_option("--forbidden", pre.forbidden, "Also list minimal forbidden words up to this length");

  CcArgs cc;
  auto* ccmd = app.add_subcommand("cc", "Exact deterministic communication complexity");
  ccmd->add_option("--table", cc.table, "Matrix file: one row of integers per line");
  ccmd->add_option("--rule", cc.rule, "Pred cut table of this rule");
  ccmd->add_option("--n", cc.n);
  ccmd->add_option("--cut", cc.cut);
  ccmd->add_option("--cap", cc.cap);

  int pred_rule = 0, pred_n = 1;
  auto* pred = app.add_subcommand("pred", "Exact Pred complexity for every cut");
  pred->add_option("--rule", pred_rule)->required();
  pred->add_option("--n", pred_n)->required();

  SinvArgs si;
  auto* sinv = app.add_subcommand("sinv", "Is p_u[x] invaded?");
  sinv->add_option("--rule", si.rule)->required();
  sinv->add_option("--u", si.u, "Background period")->required();
  sinv->add_option("--x", si.x, "Perturbation written from cell 0")->required();
  sinv->add_option("--horizon", si.horizon);
  sinv->add_option("--width-cap", si.width_cap, "Negative: 4(|x|+|u|)");

  ProtocolsArgs pr;
  auto* protocols = app.add_subcommand("protocols", "Audit protocol strategies against the oracles");
  protocols->add_option("--rule", pr.rule);
  protocols->add_flag("--all", pr.all);
  protocols->add_option("--problem", pr.problem, "pred or sinv");
  protocols->add_option("--n-max", pr.n_max);
  protocols->add_option("--variant", pr.variant);

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "Run the claims catalog");
  verify->add_option("--catalog", ve.catalog, "Catalog file (default: built-in)");
  verify->add_option("--threads", ve.threads);

  auto* catalog = app.add_subcommand("catalog", "Print the built-in claims catalog");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  std::string command;
  try {
    if (evolve->parsed()) {
      command = "evolve";
      o = cmd_evolve(ev, structured);
    } else if (classify->parsed()) {
      command = "classify";
      o = cmd_classify();
    } else if (preimage->parsed()) {
      command = "preimage";
      o = cmd_preimage(pre);
    } else if (ccmd->parsed()) {
      command = "cc";
      o = cmd_cc(cc);
    } else if (pred->parsed()) {
      command = "pred";
      o = cmd_pred(pred_rule, pred_n);
    } else if (sinv->parsed()) {
      command = "sinv";
      o = cmd_sinv(si);
    } else if (protocols->parsed()) {
      command = "protocols";
      o = cmd_protocols(pr);
    } else if (verify->parsed()) {
      command = "verify";
      o = cmd_verify(ve);
    } else if (catalog->parsed()) {
      command = "catalog";
      o = cmd_catalog();
    }
  } catch (const eca::GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (structured) {
    const json doc = {{"tool", "ecatool"},          {"version", kVersion},  {"command", command},
                      {"parameters", o.parameters}, {"results", o.results}, {"status", o.status},
                      {"timing_ms", ms}};
    out << doc.dump(2) << "\n";
  } else {
    out << o.text;
  }
  return o.status;
}

/// Argument list that repeats the command described by a report document.
inline std::vector<std::string> rerun_args(const json& doc) {
  std::vector<std::string> args = {doc.at("command").get<std::string>()};
  for (const auto& [key, value] : doc.at("parameters").items()) {
    if (value.is_null()) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
      continue;
    }
    args.push_back("--" + key);
    args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  args.push_back("--json");
  return args;
}

}  // namespace ecatool
