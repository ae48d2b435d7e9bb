#include <doctest.h>

#include "ccs/generator.hpp"
#include "ccs/laws.hpp"
#include "ccs/parser.hpp"

using namespace ccs;

namespace {

const std::vector<LabelId> ab{LabelId("a"), LabelId("b")};

Environment env_ab() {
  Environment env;
  for (const auto& l : ab) env.declare_label(l);
  return env;
}

Bindings bind(std::initializer_list<std::pair<const char*, const char*>> terms) {
  Bindings b;
  for (const auto& [k, v] : terms) b[k] = parse_term(v);
  return b;
}

}  // namespace

TEST_CASE("catalog") {
  const auto& cat = law_catalog();
  for (const char* id : {"TAU_WEAK", "TAU1", "TAU2", "TAU3", "TAU_STRAT", "WEAK_EQUIV_REFL",
                         "OBS_CONGR_TRANS", "STRONG_IMP_OBS_CONGR", "OBS_CONGR_IMP_WEAK_EQUIV",
                         "WEAK_EQUIV_STABLE_IMP_CONGR", "WEAK_EQUIV_SUBST_PREFIX",
                         "OBS_CONGR_SUBST_PREFIX", "COARSEST_CONGR_LR"}) {
    CHECK(find_law(id).id == id);
  }
  CHECK_THROWS_AS(find_law("NOT_A_LAW"), UnknownLaw);
  std::set<std::string> ids;
  for (const Law& law : cat) {
    CHECK(ids.insert(law.id).second);
    CHECK_FALSE(law.statement().empty());
  }
}

TEST_CASE("law examples") {
  Environment env = env_ab();
  LawReport w = check_law(env, "TAU_WEAK", bind({{"E", "b.0"}}));
  CHECK(w.passed());
  REQUIRE(w.conclusion);
  CHECK(w.conclusion->holds);
  CHECK(w.conclusion->lhs == parse_term("tau.b.0"));

  LawReport t2 = check_law(env, "TAU2", bind({{"E", "a.0"}}));
  CHECK(t2.passed());
  CHECK(t2.conclusion->lhs == parse_term("a.0 + tau.a.0"));
  CHECK(*t2.conclusion->rhs == parse_term("tau.a.0"));

  Bindings t1 = bind({{"E", "0"}});
  t1["u"] = Action::name("a");
  CHECK(check_law(env, "TAU1", t1).passed());

  SUBCASE("a fabricated non-law fails") {
    Law fake{"FAKE", {{"E", MetaKind::Term}}, {},
             Claim{Claim::Kind::Relate, Relation::ObsCongr,
                   [](const Bindings& b) { return Process::prefix(Action::tau(), std::get<Process>(b.at("E"))); },
                   [](const Bindings& b) { return std::get<Process>(b.at("E")); }, "tau.E ~~c E"},
             {}};
    LawReport r = check_law(env, fake, bind({{"E", "a.0"}}));
    CHECK_FALSE(r.passed());
    CHECK(r.premises_hold());
  }
  SUBCASE("failed premises make the instance vacuous") {
    LawReport r = check_law(env, "WEAK_EQUIV_SUBST_PREFIX",
                            [] {
                              Bindings b = bind({{"E", "a.0"}, {"E'", "b.0"}});
                              b["u"] = Action::tau();
                              return b;
                            }());
    CHECK_FALSE(r.premises_hold());
    CHECK(r.passed());
    CHECK_FALSE(r.conclusion);
  }
  SUBCASE("stability premise") {
    LawReport r = check_law(env, "WEAK_EQUIV_STABLE_IMP_CONGR", bind({{"E", "a.tau.0"}, {"E'", "a.0"}}));
    CHECK(r.premises_hold());
    CHECK(r.passed());
    LawReport s = check_law(env, "WEAK_EQUIV_STABLE_IMP_CONGR", bind({{"E", "tau.a.0"}, {"E'", "a.0"}}));
    CHECK_FALSE(s.premises_hold());
  }
}

TEST_CASE("binding errors") {
  Environment env = env_ab();
  CHECK_THROWS_AS(check_law(env, "TAU_WEAK", {}), Error);
  Bindings wrong;
  wrong["E"] = Action::name("a");
  CHECK_THROWS_AS(check_law(env, "TAU_WEAK", wrong), Error);
  CHECK_THROWS_AS(check_law(env, "NOPE", bind({{"E", "0"}})), UnknownLaw);
}

TEST_CASE("binding syntax") {
  CHECK(std::get<Process>(parse_binding(MetaKind::Term, "a.0 + b.0")) == parse_term("a.0 + b.0"));
  CHECK(std::get<Action>(parse_binding(MetaKind::Action, "'a")) == Action::coname("a"));
  CHECK(std::get<Action>(parse_binding(MetaKind::Action, "tau")) == Action::tau());
  LabelSet ab_set{LabelId("a"), LabelId("b")};
  CHECK(std::get<LabelSet>(parse_binding(MetaKind::Labels, "{a, b}")) == ab_set);
  CHECK(std::get<LabelSet>(parse_binding(MetaKind::Labels, "b, a")) == ab_set);
  Relabeling rf{{{LabelId("a"), LabelId("b")}}};
  CHECK(std::get<Relabeling>(parse_binding(MetaKind::Relabeling, "[a->b]")) == rf);
  CHECK(std::get<Relabeling>(parse_binding(MetaKind::Relabeling, "a->b")) == rf);
  CHECK_THROWS_AS(parse_binding(MetaKind::Term, "a."), SyntaxError);
  for (const auto& [kind, text] : std::vector<std::pair<MetaKind, std::string>>{
           {MetaKind::Term, "a.0 | tau.0"}, {MetaKind::Action, "'b"},
           {MetaKind::Labels, "{a, b}"}, {MetaKind::Relabeling, "[a->b]"}}) {
    CHECK(print_binding(parse_binding(kind, text)) == text);
  }
}

TEST_CASE("every catalog law holds on random instances") {
  Environment env = env_ab();
  TermGenerator gen(ab, 3, 5);
  for (const Law& law : law_catalog()) {
    std::size_t non_vacuous = 0;
    for (int i = 0; i < 15; ++i) {
      LawReport r = check_law(env, law, instantiate(law, gen));
      CAPTURE(law.id);
      CHECK(r.passed());
      if (r.premises_hold()) ++non_vacuous;
    }
    CAPTURE(law.id);
    CHECK(non_vacuous > 0);
  }
}

TEST_CASE("generator") {
  TermGenerator z(ab, 0, 1);
  for (int i = 0; i < 20; ++i) CHECK(z.next() == Process::nil());

  TermGenerator g1(ab, 3, 42), g2(ab, 3, 42);
  for (int i = 0; i < 50; ++i) {
    Process p = g1.next();
    CHECK(p == g2.next());
    CHECK(p.depth() <= 3);
    CHECK(referenced_constants(p).empty());
    CHECK(parse_term(print_term(p)) == p);
    CHECK(finite_state_count(env_ab(), p, 10000).has_value());
  }
  for (int i = 0; i < 50; ++i) {
    CHECK_FALSE(g1.label_set().empty());
    CHECK_FALSE(g1.relabeling().map.empty());
    CHECK_FALSE(g1.visible_action().is_tau());
  }
}

TEST_CASE("related variants stay related") {
  Environment env = env_ab();
  TermGenerator gen(ab, 3, 77);
  for (Relation r : {Relation::Strong, Relation::ObsCongr, Relation::Weak}) {
    for (int i = 0; i < 60; ++i) {
      Process p = gen.next();
      Process q = related_variant(gen, p, r, 3);
      CAPTURE(print_term(p));
      CAPTURE(print_term(q));
      CHECK(check_relation(r, env, p, q).related);
    }
  }
}

TEST_CASE("deng examples") {
  Environment env = env_ab();
  DengOutcome d = deng_classify(env, parse_term("tau.a.0"), parse_term("a.0"));
  CHECK(d.case1 == std::vector<Process>{parse_term("a.0")});
  CHECK(d.case2.empty());
  CHECK_FALSE(d.case3);

  DengOutcome same = deng_classify(env, parse_term("a.0"), parse_term("a.0"));
  CHECK(same.case3);

  DengOutcome c2 = deng_classify(env, parse_term("a.0"), parse_term("a.0 + tau.a.0"));
  CHECK(c2.case2 == std::vector<Process>{parse_term("a.0")});

  CHECK_THROWS_AS(deng_classify(env, parse_term("a.0"), parse_term("b.0")), NotWeaklyEquivalent);
}

TEST_CASE("hennessy examples") {
  Environment env = env_ab();
  HennessyOutcome h = hennessy_classify(env, parse_term("tau.a.0"), parse_term("a.0"));
  CHECK_FALSE(h.congr);
  CHECK(h.congr_tau_right);
  CHECK_FALSE(h.congr_tau_left);
  CHECK(h.weak);
  CHECK(h.consistent());

  HennessyOutcome z = hennessy_classify(env, Process::nil(), Process::nil());
  CHECK(z.congr);

  HennessyOutcome n = hennessy_classify(env, parse_term("a.0"), parse_term("b.0"));
  CHECK_FALSE(n.any());
  CHECK_FALSE(n.weak);
  CHECK(n.consistent());
}

TEST_CASE("deng and hennessy on generated pairs") {
  Environment env = env_ab();
  TermGenerator gen(ab, 3, 8);
  for (int i = 0; i < 60; ++i) {
    Process p = gen.next();
    Process q = i % 2 ? related_variant(gen, p, Relation::Weak, 2) : gen.next();
    CAPTURE(print_term(p));
    CAPTURE(print_term(q));
    HennessyOutcome h = hennessy_classify(env, p, q);
    CHECK(h.consistent());
    if (h.weak) {
      CHECK(deng_classify(env, p, q).any());
    } else {
      CHECK_THROWS_AS(deng_classify(env, p, q), NotWeaklyEquivalent);
    }
  }
}
