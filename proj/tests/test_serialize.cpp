#include <doctest.h>

#include "ccs/generator.hpp"
#include "ccs/parser.hpp"
#include "ccs/serialize.hpp"

using namespace ccs;

TEST_CASE("term encoding") {
  Json j = term_to_json(parse_term("tau.'a.0"));
  CHECK(j.dump() ==
        R"({"kind":"prefix","action":{"tau":true},"body":{"kind":"prefix","action":{"name":"a","co":true},"body":{"kind":"nil"}}})");
  CHECK(term_to_json(parse_term("new {b, a} A[x->y]")).dump() ==
        R"({"kind":"restr","hidden":["a","b"],"body":{"kind":"relab","body":{"kind":"const","name":"A"},"map":{"x":"y"}}})");
}

TEST_CASE("json round trip is bit exact") {
  TermGenerator gen({LabelId("a"), LabelId("b"), LabelId("c")}, 4, 19);
  for (int i = 0; i < 300; ++i) {
    Process p = gen.next();
    Json j = term_to_json(p);
    CHECK(term_from_json(j) == p);
    CHECK(term_to_json(term_from_json(Json::parse(j.dump()))).dump() == j.dump());
  }
}

TEST_CASE("malformed term json") {
  for (const char* bad : {R"({"kind":"nope"})", R"({"kind":"nil","extra":1})", R"([1,2])",
                          R"({"kind":"prefix","action":{"tau":false},"body":{"kind":"nil"}})",
                          R"({"kind":"prefix","action":{"name":"","co":false},"body":{"kind":"nil"}})",
                          R"({"kind":"restr","hidden":["a","a"],"body":{"kind":"nil"}})",
                          R"({"kind":"sum","left":{"kind":"nil"}})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(term_from_json(Json::parse(bad)), Error);
  }
}

TEST_CASE("report encodings") {
  Environment env;
  Verdict v = obs_congr(env, parse_term("tau.a.0"), parse_term("a.0"));
  Json j = verdict_to_json(v);
  CHECK(j["related"] == false);
  CHECK(j["kind"] == "obscongr");
  CHECK(j["witness"]["side"] == "left");
  CHECK(j["witness"]["action"] == "tau");
  CHECK(j["states"].is_number());
  CHECK(j["classes"].is_number());
  CHECK(verdict_to_json(weak_equiv(env, parse_term("tau.a.0"), parse_term("a.0")))["witness"].is_null());

  Lts l = explore(env, {parse_term("a.0 | 'a.0")});
  Json lj = lts_to_json(l);
  CHECK(lj["states"].size() == 4);
  CHECK(lj["edges"].size() == 5);
  CHECK(lj["complete"] == true);
  Json sj = saturated_to_json(saturate(l));
  CHECK(sj["eps"].size() == 4);
  CHECK(sj.contains("weak_edges"));
}
