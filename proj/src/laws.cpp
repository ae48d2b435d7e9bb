#include "ccs/laws.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ccs/parser.hpp"

namespace ccs {

namespace {

const char* symbol(Relation r) {
  switch (r) {
    case Relation::Strong: return "~";
    case Relation::Weak: return "~~";
    case Relation::ObsCongr: return "~~c";
  }
  return "~";
}

const Process& term(const Bindings& b, const std::string& name) {
  return std::get<Process>(b.at(name));
}

const Action& act(const Bindings& b, const std::string& name) {
  return std::get<Action>(b.at(name));
}

using Side = Claim::Side;

Side var(std::string name) {
  return [name](const Bindings& b) { return term(b, name); };
}

Side tau(Side x) {
  return [x](const Bindings& b) { return Process::prefix(Action::tau(), x(b)); };
}

Side pre(std::string u, Side x) {
  return [u, x](const Bindings& b) { return Process::prefix(act(b, u), x(b)); };
}

Side sum(Side l, Side r) {
  return [l, r](const Bindings& b) { return Process::sum(l(b), r(b)); };
}

Side par(Side l, Side r) {
  return [l, r](const Bindings& b) { return Process::par(l(b), r(b)); };
}

Side restr(std::string labels, Side x) {
  return [labels, x](const Bindings& b) {
    return Process::restr(std::get<LabelSet>(b.at(labels)), x(b));
  };
}

Side relab(Side x, std::string rf) {
  return [x, rf](const Bindings& b) {
    return Process::relab(x(b), std::get<Relabeling>(b.at(rf)));
  };
}

Claim rel(Relation r, Side lhs, Side rhs, const std::string& lt, const std::string& rt) {
  return {Claim::Kind::Relate, r, std::move(lhs), std::move(rhs),
          lt + " " + symbol(r) + " " + rt};
}

Claim is_stable(const std::string& name) {
  return {Claim::Kind::Stable, Relation::Weak, var(name), nullptr, "STABLE " + name};
}

constexpr MetaKind T = MetaKind::Term;
constexpr MetaKind A = MetaKind::Action;

std::vector<Law> build_catalog() {
  using R = Relation;
  const Side E = var("E"), E1 = var("E'"), E2 = var("E''");
  const Side E1a = var("E1"), E1b = var("E1'"), E2a = var("E2"), E2b = var("E2'");
  const Side p = var("p"), q = var("q"), r = var("r"), s = var("s");
  std::vector<Law> out;

  // tau-laws
  out.push_back({"TAU_WEAK", {{"E", T}}, {}, rel(R::Weak, tau(E), E, "tau.E", "E"), {}});
  out.push_back({"TAU1", {{"u", A}, {"E", T}}, {},
                 rel(R::ObsCongr, pre("u", tau(E)), pre("u", E), "u.tau.E", "u.E"), {}});
  out.push_back({"TAU2", {{"E", T}}, {},
                 rel(R::ObsCongr, sum(E, tau(E)), tau(E), "E + tau.E", "tau.E"), {}});
  out.push_back({"TAU3", {{"u", A}, {"E", T}, {"E'", T}}, {},
                 rel(R::ObsCongr, sum(pre("u", sum(E, tau(E1))), pre("u", E1)),
                     pre("u", sum(E, tau(E1))), "u.(E + tau.E') + u.E'", "u.(E + tau.E')"),
                 {}});
  out.push_back({"TAU_STRAT", {{"E", T}, {"E'", T}}, {},
                 rel(R::ObsCongr, sum(E, tau(sum(E1, E))), tau(sum(E1, E)),
                     "E + tau.(E' + E)", "tau.(E' + E)"),
                 {}});

  // equivalence-relation laws
  for (R k : {R::Weak, R::ObsCongr}) {
    const std::string pfx = k == R::Weak ? "WEAK_EQUIV" : "OBS_CONGR";
    out.push_back({pfx + "_REFL", {{"E", T}}, {}, rel(k, E, E, "E", "E"), {}});
    out.push_back({pfx + "_SYM", {{"E", T}, {"E'", T}}, {rel(k, E, E1, "E", "E'")},
                   rel(k, E1, E, "E'", "E"), {{"E", "E'", k}}});
    out.push_back({pfx + "_TRANS", {{"E", T}, {"E'", T}, {"E''", T}},
                   {rel(k, E, E1, "E", "E'"), rel(k, E1, E2, "E'", "E''")},
                   rel(k, E, E2, "E", "E''"), {{"E", "E'", k}, {"E'", "E''", k}}});
  }

  // implications between the relations
  out.push_back({"STRONG_IMP_WEAK_EQUIV", {{"E", T}, {"E'", T}},
                 {rel(R::Strong, E, E1, "E", "E'")}, rel(R::Weak, E, E1, "E", "E'"),
                 {{"E", "E'", R::Strong}}});
  out.push_back({"STRONG_IMP_OBS_CONGR", {{"E", T}, {"E'", T}},
                 {rel(R::Strong, E, E1, "E", "E'")}, rel(R::ObsCongr, E, E1, "E", "E'"),
                 {{"E", "E'", R::Strong}}});
  out.push_back({"OBS_CONGR_IMP_WEAK_EQUIV", {{"E", T}, {"E'", T}},
                 {rel(R::ObsCongr, E, E1, "E", "E'")}, rel(R::Weak, E, E1, "E", "E'"),
                 {{"E", "E'", R::ObsCongr}}});
  out.push_back({"WEAK_EQUIV_STABLE_IMP_CONGR", {{"E", T}, {"E'", T}},
                 {rel(R::Weak, E, E1, "E", "E'"), is_stable("E"), is_stable("E'")},
                 rel(R::ObsCongr, E, E1, "E", "E'"), {{"E", "E'", R::Weak}}});

  // substitutivity
  for (R k : {R::Weak, R::ObsCongr}) {
    const std::string pfx = k == R::Weak ? "WEAK_EQUIV" : "OBS_CONGR";
    const std::vector<std::tuple<std::string, std::string, Relation>> pair_e{{"E", "E'", k}};
    out.push_back({pfx + "_SUBST_PREFIX", {{"E", T}, {"E'", T}, {"u", A}},
                   {rel(k, E, E1, "E", "E'")},
                   rel(k, pre("u", E), pre("u", E1), "u.E", "u.E'"), pair_e});
    out.push_back({pfx + "_PRESD_BY_PAR", {{"E1", T}, {"E1'", T}, {"E2", T}, {"E2'", T}},
                   {rel(k, E1a, E1b, "E1", "E1'"), rel(k, E2a, E2b, "E2", "E2'")},
                   rel(k, par(E1a, E2a), par(E1b, E2b), "E1 | E2", "E1' | E2'"),
                   {{"E1", "E1'", k}, {"E2", "E2'", k}}});
    out.push_back({pfx + "_SUBST_RESTR", {{"E", T}, {"E'", T}, {"L", MetaKind::Labels}},
                   {rel(k, E, E1, "E", "E'")},
                   rel(k, restr("L", E), restr("L", E1), "new L E", "new L E'"), pair_e});
    out.push_back({pfx + "_SUBST_RELAB", {{"E", T}, {"E'", T}, {"rf", MetaKind::Relabeling}},
                   {rel(k, E, E1, "E", "E'")},
                   rel(k, relab(E, "rf"), relab(E1, "rf"), "E[rf]", "E'[rf]"), pair_e});
  }
  out.push_back({"WEAK_EQUIV_PRESD_BY_SUM", {{"E1", T}, {"E1'", T}, {"E2", T}, {"E2'", T}},
                 {rel(R::Weak, E1a, E1b, "E1", "E1'"), is_stable("E1"), is_stable("E1'"),
                  rel(R::Weak, E2a, E2b, "E2", "E2'"), is_stable("E2"), is_stable("E2'")},
                 rel(R::Weak, sum(E1a, E2a), sum(E1b, E2b), "E1 + E2", "E1' + E2'"),
                 {{"E1", "E1'", R::Weak}, {"E2", "E2'", R::Weak}}});
  out.push_back({"WEAK_EQUIV_SUBST_SUM_R", {{"E", T}, {"E'", T}, {"E''", T}},
                 {rel(R::Weak, E, E1, "E", "E'"), is_stable("E"), is_stable("E'")},
                 rel(R::Weak, sum(E, E2), sum(E1, E2), "E + E''", "E' + E''"),
                 {{"E", "E'", R::Weak}}});
  out.push_back({"WEAK_EQUIV_SUBST_SUM_L", {{"E", T}, {"E'", T}, {"E''", T}},
                 {rel(R::Weak, E, E1, "E", "E'"), is_stable("E"), is_stable("E'")},
                 rel(R::Weak, sum(E2, E), sum(E2, E1), "E'' + E", "E'' + E'"),
                 {{"E", "E'", R::Weak}}});
  out.push_back({"OBS_CONGR_PRESD_BY_SUM", {{"p", T}, {"q", T}, {"r", T}, {"s", T}},
                 {rel(R::ObsCongr, p, q, "p", "q"), rel(R::ObsCongr, r, s, "r", "s")},
                 rel(R::ObsCongr, sum(p, r), sum(q, s), "p + r", "q + s"),
                 {{"p", "q", R::ObsCongr}, {"r", "s", R::ObsCongr}}});
  out.push_back({"OBS_CONGR_SUBST_SUM_R", {{"E", T}, {"E'", T}, {"E''", T}},
                 {rel(R::ObsCongr, E, E1, "E", "E'")},
                 rel(R::ObsCongr, sum(E, E2), sum(E1, E2), "E + E''", "E' + E''"),
                 {{"E", "E'", R::ObsCongr}}});

  // the easy half of the coarsest-congruence theorem
  out.push_back({"COARSEST_CONGR_LR", {{"p", T}, {"q", T}, {"r", T}},
                 {rel(R::ObsCongr, p, q, "p", "q")},
                 rel(R::Weak, sum(p, r), sum(q, r), "p + r", "q + r"),
                 {{"p", "q", R::ObsCongr}}});
  return out;
}

}  // namespace

std::string Law::statement() const {
  std::string out;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    out += (i ? " /\\ " : "") + premises[i].text;
  }
  if (!premises.empty()) out += " ==> ";
  return out + conclusion.text;
}

const std::vector<Law>& law_catalog() {
  static const std::vector<Law> catalog = build_catalog();
  return catalog;
}

const Law& find_law(std::string_view id) {
  for (const Law& l : law_catalog()) {
    if (l.id == id) return l;
  }
  throw UnknownLaw(std::string(id));
}

bool LawReport::premises_hold() const {
  return std::all_of(premises.begin(), premises.end(),
                     [](const ClaimResult& c) { return c.holds; });
}

bool LawReport::passed() const {
  return !premises_hold() || (conclusion && conclusion->holds);
}

namespace {

const char* sort_name(MetaKind k) {
  switch (k) {
    case MetaKind::Term: return "term";
    case MetaKind::Action: return "action";
    case MetaKind::Labels: return "label set";
    case MetaKind::Relabeling: return "relabeling";
  }
  return "term";
}

void check_bindings(const Law& law, const Bindings& b) {
  for (const auto& [name, kind] : law.metavars) {
    auto it = b.find(name);
    if (it == b.end()) throw Error(law.id + ": metavariable " + name + " is unbound");
    if (it->second.index() != static_cast<std::size_t>(kind)) {
      throw Error(law.id + ": metavariable " + name + " must be bound to a " + sort_name(kind));
    }
  }
  for (const auto& [name, value] : b) {
    bool known = std::any_of(law.metavars.begin(), law.metavars.end(),
                             [&](const auto& m) { return m.first == name; });
    if (!known) throw Error(law.id + " has no metavariable " + name);
  }
}

ClaimResult evaluate(const Environment& env, const Claim& c, const Bindings& b,
                     const Limits& limits) {
  ClaimResult out;
  out.text = c.text;
  out.lhs = c.lhs(b);
  if (c.kind == Claim::Kind::Stable) {
    out.holds = stable(env, out.lhs);
    return out;
  }
  out.rhs = c.rhs(b);
  out.verdict = check_relation(c.relation, env, out.lhs, *out.rhs, limits);
  out.holds = out.verdict->related;
  return out;
}

}  // namespace

LawReport check_law(const Environment& env, const Law& law, const Bindings& bindings,
                    const Limits& limits) {
  check_bindings(law, bindings);
  LawReport report;
  report.law = law.id;
  report.bindings = bindings;
  for (const Claim& c : law.premises) {
    report.premises.push_back(evaluate(env, c, bindings, limits));
    if (!report.premises.back().holds) return report;
  }
  report.conclusion = evaluate(env, law.conclusion, bindings, limits);
  return report;
}

LawReport check_law(const Environment& env, std::string_view law_id, const Bindings& bindings,
                    const Limits& limits) {
  return check_law(env, find_law(law_id), bindings, limits);
}

Bindings instantiate(const Law& law, TermGenerator& gen) {
  Bindings b;
  for (const auto& [name, kind] : law.metavars) {
    switch (kind) {
      case MetaKind::Term: {
        auto paired = std::find_if(law.pairings.begin(), law.pairings.end(),
                                   [&](const auto& t) { return std::get<1>(t) == name; });
        if (paired != law.pairings.end() && b.contains(std::get<0>(*paired))) {
          const Process& base = std::get<Process>(b.at(std::get<0>(*paired)));
          b.emplace(name, related_variant(gen, base, std::get<2>(*paired),
                                          1 + static_cast<int>(gen.below(3))));
        } else {
          b.emplace(name, gen.next());
        }
        break;
      }
      case MetaKind::Action: b.emplace(name, gen.action()); break;
      case MetaKind::Labels: b.emplace(name, gen.label_set()); break;
      case MetaKind::Relabeling: b.emplace(name, gen.relabeling()); break;
    }
  }
  return b;
}

Binding parse_binding(MetaKind kind, std::string_view text) {
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
  };
  std::string t = trimmed(text);
  switch (kind) {
    case MetaKind::Term: return parse_term(t);
    case MetaKind::Action: return parse_action(t);
    case MetaKind::Labels: {
      if (t.empty() || t.front() != '{') t = "{" + t + "}";
      return parse_term("new " + t + " 0").hidden();
    }
    case MetaKind::Relabeling: {
      if (t.empty() || t.front() != '[') t = "[" + t + "]";
      return parse_term("0" + t).relabeling();
    }
  }
  return parse_term(t);
}

std::string print_binding(const Binding& b) {
  struct Printer {
    std::string operator()(const Process& p) const { return print_term(p); }
    std::string operator()(const Action& u) const { return print_action(u); }
    std::string operator()(const LabelSet& ls) const {
      std::string out = "{";
      for (const auto& l : ls) out += (out.size() > 1 ? ", " : "") + l.str();
      return out + "}";
    }
    std::string operator()(const Relabeling& rf) const { return print_relabeling(rf); }
  };
  return std::visit(Printer{}, b);
}

// ---------------------------------------------------------------------------

DengOutcome deng_classify(const Environment& env, const Process& p, const Process& q,
                          const Limits& limits) {
  SaturatedLts sat = saturate(explore_complete(env, {p, q}, limits));
  Partition weak = weak_bisim_partition(sat);
  const Lts& lts = sat.base();
  const StateId P = lts.roots()[0], Q = lts.roots()[1];
  if (!weak.same(P, Q)) throw NotWeaklyEquivalent();

  DengOutcome out;
  for (const Edge& e : lts.out(P)) {
    if (e.action == Lts::tau_id && weak.same(e.target, Q)) out.case1.push_back(lts.state(e.target));
  }
  for (const Edge& e : lts.out(Q)) {
    if (e.action == Lts::tau_id && weak.same(P, e.target)) out.case2.push_back(lts.state(e.target));
  }
  out.case3 = obs_congr(sat, weak, P, Q).related;
  return out;
}

HennessyOutcome hennessy_classify(const Environment& env, const Process& p, const Process& q,
                                  const Limits& limits) {
  const Process tp = Process::prefix(Action::tau(), p);
  const Process tq = Process::prefix(Action::tau(), q);
  SaturatedLts sat = saturate(explore_complete(env, {p, q, tp, tq}, limits));
  Partition weak = weak_bisim_partition(sat);
  const auto& r = sat.base().roots();

  HennessyOutcome out;
  out.congr = obs_congr(sat, weak, r[0], r[1]).related;
  out.congr_tau_right = obs_congr(sat, weak, r[0], r[3]).related;
  out.congr_tau_left = obs_congr(sat, weak, r[2], r[1]).related;
  out.weak = weak_equiv(env, p, q, limits).related;
  return out;
}

}  // namespace ccs
