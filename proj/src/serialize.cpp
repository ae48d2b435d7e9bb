#include "ccs/serialize.hpp"

#include <set>

#include "ccs/parser.hpp"

namespace ccs {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("malformed term JSON: " + what); }

void expect_keys(const Json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) bad("expected an object");
  if (j.size() != keys.size()) bad("unexpected set of fields");
  for (const char* k : keys) {
    if (!j.contains(k)) bad(std::string("missing field '") + k + "'");
  }
}

const std::string& str(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get_ref<const std::string&>();
}

Json labels_json(const LabelSet& ls) {
  Json out = Json::array();
  for (const auto& l : ls) out.push_back(l.str());
  return out;
}

}  // namespace

Json action_to_json(const Action& u) {
  if (u.is_tau()) return Json{{"tau", true}};
  return Json{{"name", u.label().base.str()}, {"co", u.label().polarity == Polarity::CoName}};
}

Action action_from_json(const Json& j) {
  if (j.is_object() && j.size() == 1 && j.contains("tau")) {
    if (j.at("tau") != true) bad("\"tau\" must be true");
    return Action::tau();
  }
  expect_keys(j, {"name", "co"});
  if (!j.at("co").is_boolean()) bad("field 'co' must be a boolean");
  const std::string& name = str(j, "name");
  if (name.empty()) bad("empty label");
  return j.at("co").get<bool>() ? Action::coname(name) : Action::name(name);
}

Json term_to_json(const Process& p) {
  switch (p.kind()) {
    case TermKind::Nil: return Json{{"kind", "nil"}};
    case TermKind::Prefix:
      return Json{{"kind", "prefix"}, {"action", action_to_json(p.action())},
                  {"body", term_to_json(p.body())}};
    case TermKind::Sum:
      return Json{{"kind", "sum"}, {"left", term_to_json(p.left())},
                  {"right", term_to_json(p.right())}};
    case TermKind::Par:
      return Json{{"kind", "par"}, {"left", term_to_json(p.left())},
                  {"right", term_to_json(p.right())}};
    case TermKind::Restr:
      return Json{{"kind", "restr"}, {"hidden", labels_json(p.hidden())},
                  {"body", term_to_json(p.body())}};
    case TermKind::Relab: {
      Json map = Json::object();
      for (const auto& [from, to] : p.relabeling().map) map[from.str()] = to.str();
      return Json{{"kind", "relab"}, {"body", term_to_json(p.body())}, {"map", map}};
    }
    case TermKind::Const: return Json{{"kind", "const"}, {"name", p.name()}};
  }
  return Json{{"kind", "nil"}};
}

Process term_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) bad("expected an object with a 'kind'");
  const std::string& kind = str(j, "kind");
  if (kind == "nil") {
    expect_keys(j, {"kind"});
    return Process::nil();
  }
  if (kind == "prefix") {
    expect_keys(j, {"kind", "action", "body"});
    return Process::prefix(action_from_json(j.at("action")), term_from_json(j.at("body")));
  }
  if (kind == "sum" || kind == "par") {
    expect_keys(j, {"kind", "left", "right"});
    Process l = term_from_json(j.at("left"));
    Process r = term_from_json(j.at("right"));
    return kind == "sum" ? Process::sum(std::move(l), std::move(r))
                         : Process::par(std::move(l), std::move(r));
  }
  if (kind == "restr") {
    expect_keys(j, {"kind", "hidden", "body"});
    const Json& h = j.at("hidden");
    if (!h.is_array()) bad("'hidden' must be an array");
    LabelSet hidden;
    for (const Json& l : h) {
      if (!l.is_string() || l.get_ref<const std::string&>().empty()) bad("bad hidden label");
      if (!hidden.insert(LabelId(l.get<std::string>())).second) bad("repeated hidden label");
    }
    return Process::restr(std::move(hidden), term_from_json(j.at("body")));
  }
  if (kind == "relab") {
    expect_keys(j, {"kind", "body", "map"});
    const Json& m = j.at("map");
    if (!m.is_object()) bad("'map' must be an object");
    Relabeling rf;
    for (const auto& [from, to] : m.items()) {
      if (from.empty() || !to.is_string() || to.get_ref<const std::string&>().empty()) {
        bad("bad relabeling entry");
      }
      rf.map.emplace(LabelId(from), LabelId(to.get<std::string>()));
    }
    return Process::relab(term_from_json(j.at("body")), std::move(rf));
  }
  if (kind == "const") {
    expect_keys(j, {"kind", "name"});
    if (str(j, "name").empty()) bad("empty constant name");
    return Process::constant(str(j, "name"));
  }
  bad("unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------------------

Json lts_to_json(const Lts& lts) {
  Json states = Json::array();
  for (const auto& s : lts.states()) states.push_back(print_term(s));
  Json edges = Json::array();
  for (const Edge& e : lts.edges()) {
    edges.push_back(Json{{"source", e.source},
                         {"action", print_action(lts.action(e.action))},
                         {"target", e.target}});
  }
  return Json{{"states", states}, {"roots", lts.roots()}, {"complete", lts.complete()},
              {"edges", edges}};
}

Json saturated_to_json(const SaturatedLts& sat) {
  Json out = lts_to_json(sat.base());
  Json eps = Json::array();
  for (StateId s = 0; s < sat.size(); ++s) eps.push_back(sat.eps(s));
  Json weak = Json::array();
  for (const Edge& e : sat.weak_edges()) {
    weak.push_back(Json{{"source", e.source},
                        {"action", print_action(sat.base().action(e.action))},
                        {"target", e.target}});
  }
  out["eps"] = eps;
  out["weak_edges"] = weak;
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json w = nullptr;
  if (v.witness) {
    w = Json{{"side", v.witness->side == Side::Left ? "left" : "right"},
             {"state", print_term(v.witness->state)},
             {"action", print_action(v.witness->action)},
             {"target", print_term(v.witness->target)}};
  }
  return Json{{"related", v.related}, {"kind", relation_name(v.kind)}, {"witness", w},
              {"states", v.states}, {"classes", v.classes}};
}

namespace {

Json claim_json(const ClaimResult& c) {
  Json out{{"claim", c.text}, {"holds", c.holds}, {"lhs", print_term(c.lhs)}};
  if (c.rhs) out["rhs"] = print_term(*c.rhs);
  if (c.verdict) out["verdict"] = verdict_to_json(*c.verdict);
  return out;
}

}  // namespace

Json law_report_to_json(const LawReport& r) {
  Json bindings = Json::object();
  for (const auto& [name, value] : r.bindings) bindings[name] = print_binding(value);
  Json premises = Json::array();
  for (const auto& c : r.premises) premises.push_back(claim_json(c));
  return Json{{"law", r.law},
              {"bindings", bindings},
              {"premises", premises},
              {"premises_hold", r.premises_hold()},
              {"conclusion", r.conclusion ? claim_json(*r.conclusion) : Json(nullptr)},
              {"passed", r.passed()}};
}

Json deng_to_json(const DengOutcome& d) {
  Json c1 = Json::array(), c2 = Json::array();
  for (const auto& p : d.case1) c1.push_back(print_term(p));
  for (const auto& q : d.case2) c2.push_back(print_term(q));
  return Json{{"case1", c1}, {"case2", c2}, {"case3", d.case3}, {"holds", d.any()}};
}

Json hennessy_to_json(const HennessyOutcome& h) {
  return Json{{"p ~~c q", h.congr},
              {"p ~~c tau.q", h.congr_tau_right},
              {"tau.p ~~c q", h.congr_tau_left},
              {"weak", h.weak},
              {"consistent", h.consistent()}};
}

Json congruence_to_json(const CongruenceReport& r) {
  Json cx = nullptr;
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    cx = Json{{"pair", c.pair_index}, {"context", print_context(c.context)},
              {"lhs", print_term(c.lhs)}, {"rhs", print_term(c.rhs)},
              {"verdict", verdict_to_json(c.verdict)}};
  }
  return Json{{"kind", relation_name(r.kind)},   {"depth", r.depth},
              {"contexts", r.contexts},          {"pairs_checked", r.pairs_checked},
              {"all_contexts_pass", r.all_contexts_pass}, {"counterexample", cx}};
}

Json klop_witness_to_json(const KlopWitness& w) {
  return Json{{"action", w.action.str()}, {"index", w.index}, {"term", print_term(w.term)},
              {"excluded_nodes", w.excluded_nodes}};
}

Json coarsest_to_json(const CoarsestDecision& d) {
  return Json{{"related", d.related}, {"witness", klop_witness_to_json(d.witness)},
              {"lhs", print_term(d.lhs)}, {"rhs", print_term(d.rhs)},
              {"verdict", verdict_to_json(d.verdict)}};
}

Json crosscheck_to_json(const CrosscheckReport& r) {
  Json failing = Json::array();
  for (const auto& p : r.failing) failing.push_back(print_term(p));
  return Json{{"obs_congr", r.obs_congr}, {"decide", r.decide}, {"samples", r.samples},
              {"failing", failing}, {"problems", r.problems}, {"consistent", r.consistent()}};
}

}  // namespace ccs
