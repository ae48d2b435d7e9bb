// ccskit: command-line front end for the CCS toolkit.
//
//   ccskit [-w FILE]... [--max-states N] [--max-steps N] [--seed S]
//          [--format json|text|dot] <command> ...
//
// Exit status: 0 related/pass, 1 unrelated/fail, 2 usage or parse error,
// 3 resource cap exceeded.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccs/congruence.hpp"
#include "ccs/klop.hpp"
#include "ccs/laws.hpp"
#include "ccs/parser.hpp"
#include "ccs/serialize.hpp"

namespace {

using namespace ccs;

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kCap = 3 };

struct UsageError : Error {
  using Error::Error;
};

struct Config {
  std::vector<std::string> files;
  std::size_t max_states = Limits{}.max_states;
  std::size_t max_steps = Limits{}.max_steps;
  std::uint64_t seed = 1;
  std::string format = "json";

  Limits limits() const {
    Limits l;
    l.max_states = max_states;
    l.max_steps = max_steps;
    return l;
  }
  bool json() const { return format == "json"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Environment load(const Config& cfg) {
  Environment env;
  for (const auto& path : cfg.files) {
    Environment part = parse_workspace(read_file(path));
    for (const auto& l : part.alphabet()) env.declare_label(l);
    for (const auto& [name, body] : part.definitions()) env.define(name, body);
  }
  env.validate();
  return env;
}

// Parses a term argument and adds its labels to the alphabet, so that
// terms typed on the command line need no alphabet header.
Process term_arg(Environment& env, const std::string& text) {
  Process p = parse_term(text);
  for (const auto& c : referenced_constants(p)) {
    if (!env.is_defined(c)) throw UnboundConstant(c);
  }
  for (const auto& l : mentioned_labels(p)) env.declare_label(l);
  return p;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string verdict_text(const Verdict& v) {
  std::string out = std::string(v.related ? "related" : "not related") + " (" +
                    relation_name(v.kind) + ", " + std::to_string(v.states) + " states, " +
                    std::to_string(v.classes) + " classes)";
  if (v.witness) {
    const Witness& w = *v.witness;
    out += "\n  " + std::string(w.side == Side::Left ? "left " : "right ") +
           print_term(w.state) + " --" + print_action(w.action) + "--> " +
           print_term(w.target) + " has no answer";
  }
  return out;
}

void print_lts_text(const Lts& lts) {
  std::cout << lts.size() << " states, " << lts.edges().size() << " edges"
            << (lts.complete() ? "" : " (incomplete)") << '\n';
  for (StateId s = 0; s < lts.size(); ++s) {
    std::cout << "s" << s << ": " << print_term(lts.state(s)) << '\n';
  }
  for (const Edge& e : lts.edges()) {
    std::cout << "s" << e.source << " --" << print_action(lts.action(e.action)) << "--> s"
              << e.target << '\n';
  }
}

// ---------------------------------------------------------------------------

int cmd_parse(const Config& cfg, const std::vector<std::string>& terms) {
  Environment env = load(cfg);
  if (terms.empty()) {
    if (cfg.json()) {
      Json defs = Json::array();
      for (const auto& [name, body] : env.definitions()) {
        defs.push_back(Json{{"name", name}, {"body", term_to_json(body)}});
      }
      Json alpha = Json::array();
      for (const auto& l : env.alphabet()) alpha.push_back(l.str());
      emit(Json{{"alphabet", alpha}, {"agents", defs}});
    } else {
      std::cout << print_workspace(env);
    }
    return kPass;
  }
  for (const auto& t : terms) {
    Process p = term_arg(env, t);
    if (cfg.json()) {
      emit(Json{{"text", print_term(p)}, {"term", term_to_json(p)}});
    } else {
      std::cout << print_term(p) << '\n';
    }
  }
  return kPass;
}

int cmd_lts(const Config& cfg, const std::string& term, bool saturated) {
  Environment env = load(cfg);
  Process p = term_arg(env, term);
  Lts lts = explore_complete(env, {p}, cfg.limits());
  if (cfg.format == "dot") {
    std::cout << to_dot(lts);
  } else if (cfg.json()) {
    emit(saturated ? saturated_to_json(saturate(std::move(lts))) : lts_to_json(lts));
  } else {
    print_lts_text(lts);
    if (saturated) {
      SaturatedLts sat = saturate(std::move(lts));
      for (const Edge& e : sat.weak_edges()) {
        std::cout << "s" << e.source << " ==" << print_action(sat.base().action(e.action))
                  << "==> s" << e.target << '\n';
      }
    }
  }
  return kPass;
}

int cmd_check(const Config& cfg, const std::string& kind, const std::string& lhs,
              const std::string& rhs) {
  Relation rel;
  try {
    rel = parse_relation(kind);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  Environment env = load(cfg);
  Process p = term_arg(env, lhs);
  Process q = term_arg(env, rhs);
  Verdict v = check_relation(rel, env, p, q, cfg.limits());
  if (cfg.json()) {
    emit(verdict_to_json(v));
  } else {
    std::cout << verdict_text(v) << '\n';
  }
  return v.related ? kPass : kFail;
}

int cmd_laws(const Config& cfg, const std::vector<std::string>& law_ids,
             const std::vector<std::string>& binds, std::size_t corpus, std::size_t depth,
             bool list) {
  const auto& catalog = law_catalog();
  if (list) {
    if (cfg.json()) {
      Json out = Json::array();
      for (const Law& law : catalog) {
        out.push_back(Json{{"law", law.id}, {"statement", law.statement()}});
      }
      emit(out);
    } else {
      for (const Law& law : catalog) std::cout << law.id << ": " << law.statement() << '\n';
    }
    return kPass;
  }

  std::vector<const Law*> laws;
  for (const auto& id : law_ids) laws.push_back(&find_law(id));
  if (laws.empty()) {
    if (!binds.empty()) throw UsageError("--bind needs --law");
    for (const Law& law : catalog) laws.push_back(&law);
  }

  Environment env = load(cfg);
  std::vector<LawReport> reports;
  if (!binds.empty() || corpus == 0) {
    if (laws.size() != 1) throw UsageError("explicit bindings need exactly one --law");
    const Law& law = *laws.front();
    Bindings b;
    for (const auto& spec : binds) {
      auto eq = spec.find('=');
      if (eq == std::string::npos) throw UsageError("--bind expects NAME=VALUE, got " + spec);
      std::string name = spec.substr(0, eq);
      auto mv = std::find_if(law.metavars.begin(), law.metavars.end(),
                             [&](const auto& m) { return m.first == name; });
      if (mv == law.metavars.end()) {
        throw UsageError(law.id + " has no metavariable " + name);
      }
      Binding value = parse_binding(mv->second, spec.substr(eq + 1));
      if (const Process* p = std::get_if<Process>(&value)) {
        for (const auto& l : mentioned_labels(*p)) env.declare_label(l);
      } else if (const Action* u = std::get_if<Action>(&value); u && !u->is_tau()) {
        env.declare_label(u->label().base);
      } else if (const LabelSet* ls = std::get_if<LabelSet>(&value)) {
        for (const auto& l : *ls) env.declare_label(l);
      } else if (const Relabeling* rf = std::get_if<Relabeling>(&value)) {
        for (const auto& [from, to] : rf->map) {
          env.declare_label(from);
          env.declare_label(to);
        }
      }
      b[name] = std::move(value);
    }
    reports.push_back(check_law(env, law, b, cfg.limits()));
  } else {
    std::vector<LabelId> alphabet = env.alphabet();
    if (alphabet.empty()) alphabet = {LabelId("a"), LabelId("b")};
    for (const auto& l : alphabet) env.declare_label(l);
    TermGenerator gen(alphabet, depth, cfg.seed);
    for (const Law* law : laws) {
      for (std::size_t i = 0; i < corpus; ++i) {
        reports.push_back(check_law(env, *law, instantiate(*law, gen), cfg.limits()));
      }
    }
  }

  std::size_t failed = 0, vacuous = 0;
  for (const auto& r : reports) {
    if (!r.passed()) ++failed;
    if (!r.premises_hold()) ++vacuous;
  }
  if (cfg.json()) {
    Json instances = Json::array();
    for (const auto& r : reports) instances.push_back(law_report_to_json(r));
    emit(Json{{"instances", instances},
              {"checked", reports.size()},
              {"failed", failed},
              {"vacuous", vacuous}});
  } else {
    for (const auto& r : reports) {
      if (!r.passed()) {
        std::cout << "FAIL " << r.law;
        for (const auto& [k, v] : r.bindings) std::cout << ' ' << k << '=' << print_binding(v);
        std::cout << '\n';
      }
    }
    std::cout << reports.size() << " instances, " << failed << " failed, " << vacuous
              << " vacuous\n";
  }
  return failed == 0 ? kPass : kFail;
}

int cmd_congr(const Config& cfg, const std::string& kind, std::size_t depth,
              const std::vector<std::string>& fills, const std::vector<std::string>& terms) {
  if (terms.size() % 2 != 0 || terms.empty()) {
    throw UsageError("congr expects pairs of terms: LHS RHS [LHS RHS]...");
  }
  Relation rel;
  try {
    rel = parse_relation(kind);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  Environment env = load(cfg);
  std::vector<std::pair<Process, Process>> pairs;
  for (std::size_t i = 0; i < terms.size(); i += 2) {
    pairs.emplace_back(term_arg(env, terms[i]), term_arg(env, terms[i + 1]));
  }
  std::vector<Process> fill_terms;
  for (const auto& f : fills) fill_terms.push_back(term_arg(env, f));
  if (fill_terms.empty()) fill_terms.push_back(Process::nil());

  CongruenceReport r = congruence_check(env, rel, pairs, depth, fill_terms, cfg.limits());
  if (cfg.json()) {
    emit(congruence_to_json(r));
  } else if (r.counterexample) {
    const auto& c = *r.counterexample;
    std::cout << "counterexample in context " << print_context(c.context) << " (pair "
              << c.pair_index << ")\n  " << verdict_text(c.verdict) << '\n';
  } else {
    std::cout << "all " << r.contexts << " contexts of depth <= " << r.depth << " preserve "
              << relation_name(r.kind) << '\n';
  }
  return r.all_contexts_pass ? kPass : kFail;
}

int cmd_deng(const Config& cfg, const std::string& lhs, const std::string& rhs) {
  Environment env = load(cfg);
  Process p = term_arg(env, lhs);
  Process q = term_arg(env, rhs);
  DengOutcome d;
  try {
    d = deng_classify(env, p, q, cfg.limits());
  } catch (const NotWeaklyEquivalent& e) {
    if (cfg.json()) {
      emit(Json{{"error", e.what()}, {"holds", false}});
    } else {
      std::cout << e.what() << '\n';
    }
    return kFail;
  }
  if (cfg.json()) {
    emit(deng_to_json(d));
  } else {
    for (const auto& x : d.case1) std::cout << "case 1: p --tau--> " << print_term(x) << '\n';
    for (const auto& x : d.case2) std::cout << "case 2: q --tau--> " << print_term(x) << '\n';
    if (d.case3) std::cout << "case 3: p ~~c q\n";
    if (!d.any()) std::cout << "no case holds\n";
  }
  return d.any() ? kPass : kFail;
}

int cmd_hennessy(const Config& cfg, const std::string& lhs, const std::string& rhs) {
  Environment env = load(cfg);
  Process p = term_arg(env, lhs);
  Process q = term_arg(env, rhs);
  HennessyOutcome h = hennessy_classify(env, p, q, cfg.limits());
  if (cfg.json()) {
    emit(hennessy_to_json(h));
  } else {
    if (h.congr) std::cout << "p ~~c q\n";
    if (h.congr_tau_right) std::cout << "p ~~c tau.q\n";
    if (h.congr_tau_left) std::cout << "tau.p ~~c q\n";
    std::cout << (h.weak ? "p ~~ q" : "p and q are not weakly equivalent")
              << (h.consistent() ? "" : " (inconsistent with the flags)") << '\n';
  }
  return h.consistent() ? kPass : kFail;
}

int cmd_klop(const Config& cfg, const std::string& action, std::size_t index) {
  if (index > klop_max_index) {
    throw UsageError("--index must be at most " + std::to_string(klop_max_index));
  }
  Action u = parse_action(action);
  if (u.is_tau()) throw UsageError("--action must be a visible label");
  Process k = klop(u.label().base, index);
  if (cfg.json()) {
    emit(Json{{"action", action}, {"index", index}, {"text", print_term(k)},
              {"term", term_to_json(k)}});
  } else {
    std::cout << print_term(k) << '\n';
  }
  return kPass;
}

int cmd_coarsest(const Config& cfg, const std::string& lhs, const std::string& rhs,
                 std::size_t samples) {
  Environment env = load(cfg);
  Process p = term_arg(env, lhs);
  Process q = term_arg(env, rhs);
  if (env.alphabet().empty()) env.declare_label(LabelId("a"));
  CoarsestDecision d = coarsest_congr_decide(env, p, q, cfg.limits());
  CrosscheckReport x = coarsest_congr_crosscheck(env, p, q, samples, cfg.seed, cfg.limits());
  if (cfg.json()) {
    emit(Json{{"decide", coarsest_to_json(d)}, {"crosscheck", crosscheck_to_json(x)}});
  } else {
    std::cout << (d.related ? "observation congruent" : "not observation congruent")
              << " (witness " << print_term(d.witness.term) << ")\n"
              << x.samples << " sampled r, " << x.failing.size() << " separating\n";
    for (const auto& msg : x.problems) std::cout << "inconsistent: " << msg << '\n';
  }
  if (!x.consistent()) return kFail;
  return d.related ? kPass : kFail;
}

std::size_t env_max_states() {
  const char* v = std::getenv("CCSKIT_MAX_STATES");
  if (v == nullptr || *v == '\0') return Limits{}.max_states;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw UsageError("CCSKIT_MAX_STATES must be a positive integer");
  return static_cast<std::size_t>(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CCS equivalence checking toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  Config cfg;
  app.add_option("-w,--workspace", cfg.files, ".ccs workspace files")
      ->allow_extra_args(false)->check(CLI::ExistingFile);
  auto* max_states_opt = app.add_option("--max-states", cfg.max_states, "state cap")
                             ->check(CLI::PositiveNumber);
  app.add_option("--max-steps", cfg.max_steps, "transition cap")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized runs");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));

  std::vector<std::string> terms;
  std::string lhs, rhs, kind = "weak", action = "a";
  bool saturated = false, list = false;
  std::vector<std::string> law_ids, binds, fills;
  std::size_t corpus = 0, depth = 3, index = 0, samples = 25, congr_depth = 2;

  auto* parse = app.add_subcommand("parse", "print terms (or the workspace) canonically");
  parse->add_option("terms", terms);

  auto* lts = app.add_subcommand("lts", "explore a term's transition system");
  lts->add_option("term", lhs)->required();
  lts->add_flag("--saturated", saturated, "include eps closures and weak transitions");

  auto* check = app.add_subcommand("check", "decide strong, weak or obscongr");
  check->add_option("kind", kind)->required();
  check->add_option("lhs", lhs)->required();
  check->add_option("rhs", rhs)->required();

  auto* laws = app.add_subcommand("laws", "check law instances");
  laws->add_option("--law", law_ids, "law identifier")
      ->allow_extra_args(false);
  laws->add_option("--bind", binds, "NAME=VALUE metavariable binding")
      ->allow_extra_args(false);
  laws->add_option("--corpus", corpus, "random instances per law");
  laws->add_option("--depth", depth, "term depth for random instances");
  laws->add_flag("--list", list, "list the catalog");

  auto* congr = app.add_subcommand("congr", "check pairs under every context up to a depth");
  congr->add_option("--kind", kind)->default_val("weak");
  congr->add_option("--depth", congr_depth)->default_val(2);
  congr->add_option("--fill", fills, "terms for the other operand of + and |")
      ->allow_extra_args(false);
  congr->add_option("pairs", terms)->required();

  auto* deng = app.add_subcommand("deng", "case analysis of a weakly equivalent pair");
  deng->add_option("lhs", lhs)->required();
  deng->add_option("rhs", rhs)->required();

  auto* hennessy = app.add_subcommand("hennessy", "rooted variants of a pair");
  hennessy->add_option("lhs", lhs)->required();
  hennessy->add_option("rhs", rhs)->required();

  auto* klop_cmd = app.add_subcommand("klop", "print a Klop process");
  klop_cmd->add_option("--action", action)->default_val("a");
  klop_cmd->add_option("--index", index)->required();

  auto* coarsest = app.add_subcommand("coarsest", "decide obscongr via a Klop witness");
  coarsest->add_option("lhs", lhs)->required();
  coarsest->add_option("rhs", rhs)->required();
  coarsest->add_option("--samples", samples, "sampled r terms for the crosscheck");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (max_states_opt->count() == 0) cfg.max_states = env_max_states();
    if (cfg.format == "dot" && !lts->parsed()) throw UsageError("--format dot applies to lts only");

    if (parse->parsed()) return cmd_parse(cfg, terms);
    if (lts->parsed()) return cmd_lts(cfg, lhs, saturated);
    if (check->parsed()) return cmd_check(cfg, kind, lhs, rhs);
    if (laws->parsed()) return cmd_laws(cfg, law_ids, binds, corpus, depth, list);
    if (congr->parsed()) return cmd_congr(cfg, kind, congr_depth, fills, terms);
    if (deng->parsed()) return cmd_deng(cfg, lhs, rhs);
    if (hennessy->parsed()) return cmd_hennessy(cfg, lhs, rhs);
    if (klop_cmd->parsed()) return cmd_klop(cfg, action, index);
    if (coarsest->parsed()) return cmd_coarsest(cfg, lhs, rhs, samples);
  } catch (const ExceedsCap& e) {
    std::cerr << "ccskit: " << e.what() << '\n';
    return kCap;
  } catch (const IncompleteLts& e) {
    std::cerr << "ccskit: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "ccskit: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
