#include <gtest/gtest.h>

#include "formal_rings/json_io.hpp"
#include "test_support.hpp"

using namespace formal_rings;
using namespace testing_support;

TEST(Json, TupleRoundTrip) {
  const auto r = std::get<FormalRing<Q>>(make_ring("euler", {}, 10));
  const json j = to_json(r.psi());
  EXPECT_EQ(j["num_vars"], 2);
  EXPECT_EQ(j["trunc_degree"], 10);
  EXPECT_EQ(std::get<T>(tuple_from_json(j)), r.psi());
  EXPECT_EQ(std::get<T>(tuple_from_json(parse_json_text(j.dump()))), r.psi());
}

TEST(Json, ParametricRoundTrip) {
  const auto r = std::get<FormalRing<Poly>>(make_ring("abel", {}, 4));
  const json j = to_json(r.psi());
  EXPECT_EQ(j["parameters"], json::array({"a", "b"}));
  EXPECT_EQ(std::get<SeriesTuple<Poly>>(tuple_from_json(j)), r.psi());
}

TEST(Json, InterchangeExample) {
  const auto j = parse_json_text(R"({"num_vars": 2, "trunc_degree": 8, "parameters": ["a","b"], "components": [{"terms": [{"exponents": [1,0], "coefficient": "1"}, {"exponents": [1,1], "coefficient": {"poly": [{"monomial": {"a": 1}, "coefficient": "-1/2"}]}}]}]})");
  const auto t = std::get<SeriesTuple<Poly>>(tuple_from_json(j));
  EXPECT_EQ(t[0].coefficient({1, 1}), Poly::parse("-1/2*a", t.ring()));
  EXPECT_EQ(t[0].coefficient({1, 0}), t.ring().one());
}

TEST(Json, RejectsBadInput) {
  const json good = to_json(single(var(1, 3, 0)));
  json extra = good;
  extra["color"] = "red";
  EXPECT_THROW(tuple_from_json(extra), ParseError);
  json bad_len = good;
  bad_len["components"][0]["terms"][0]["exponents"] = json::array({1, 0});
  EXPECT_THROW(tuple_from_json(bad_len), Error);
  json bad_term = good;
  bad_term["components"][0]["terms"][0]["weight"] = 2;
  EXPECT_THROW(tuple_from_json(bad_term), ParseError);
  EXPECT_THROW(parse_json_text("{not json"), ParseError);
}

TEST(Json, RingAndGroup) {
  const auto r = std::get<FormalRing<Q>>(make_ring("todd", {}, 6));
  const json j = to_json(r);
  EXPECT_EQ(j["dim"], 1);
  EXPECT_TRUE(j.contains("phi") && j.contains("psi") && j.contains("log"));
  const auto back = std::get<FormalRing<Q>>(ring_from_json(j));
  EXPECT_EQ(back.phi(), r.phi());
  EXPECT_EQ(back.psi(), r.psi());
  const auto g = std::get<FormalGroup<Q>>(group_from_json(to_json(r.add_law)));
  EXPECT_EQ(g.law, r.phi());
}

TEST(Json, GhostFamilies) {
  const auto g = ghosts_from_json(parse_json_text(R"({"n": 2, "kind": "p_typical", "p": 2})"));
  EXPECT_EQ(g.tuple(), ghosts_p_typical(2, 2).tuple());
  const auto c = ghosts_from_json(json{{"kind", "custom"}, {"ghosts", to_json(ghosts_universal(3).tuple())}});
  EXPECT_EQ(c.tuple(), ghosts_universal(3).tuple());
  EXPECT_EQ(ghosts_from_json(to_json(ghosts_universal(3))).tuple(), ghosts_universal(3).tuple());
  EXPECT_THROW(ghosts_from_json(json{{"kind", "p_typical"}, {"n", 2}, {"p", 6}}), InvalidArgument);
}

TEST(Json, Report) {
  const FormalGroup<Q> bad{single(var(2, 4, 0) + var(2, 4, 1) + series(2, 4, {{{2, 0}, "1"}}))};
  const json j = to_json(verify_group_axioms(bad, 4));
  EXPECT_FALSE(j["ok"].get<bool>());
  EXPECT_EQ(j["max_degree"], 4);
  EXPECT_FALSE(j["failures"].empty());
}
