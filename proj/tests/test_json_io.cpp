#include "regent/instances.hpp"

#include <doctest.h>

using namespace regent;

TEST_CASE("group descriptors round-trip") {
  for (const auto& g : {exa1_group(), exa2_group(), exa3_group(), GroupDescriptor::cone(2, {IntVector{1, 0}, IntVector{1, 2}})})
    CHECK(group_from_json(group_to_json(g)) == g);
  CHECK(group_to_json(exa2_group())["poly"] == Json::array({7, 1, -1, 1}));
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"kind":"cone","d":1,"P":[[60]],"extra":1})")), ParseError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"kind":"torus"})")), ParseError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"kind":"cone","d":2,"P":[[60]]})")), ParseError);
}

TEST_CASE("elements and subsets round-trip") {
  const auto g1 = exa1_group();
  CHECK(element_from_json(g1, Json(-7)) == integer_element(-7));
  const Int big = Int(1) << 80;
  CHECK(int_from_json(int_to_json(big)) == big);
  CHECK(int_to_json(big).is_string());
  CHECK(subset_from_json(g1, Json::parse("[130, 84, 84]")) == integer_set({84, 130}));
  CHECK_THROWS_AS(subset_from_json(g1, Json::array()), ParseError);

  const auto g2 = exa2_group();
  const GroupElement y(exa2_y());
  CHECK(element_from_json(g2, element_to_json(y)) == y);
  CHECK(element_to_json(y) == Json::parse(R"(["1/2","0","1/2"])"));
  CHECK_THROWS_AS(element_from_json(g2, Json::parse(R"(["0","0","0"])")), ParseError);
}

namespace {

Json u1_certificate() {
  const auto g = exa1_group();
  const MinimalSystem sm(g);
  auto u = u_force_holds(sm, integer_element(1), integer_set({-1}), integer_element(0));
  REQUIRE(u.holds());
  return u_certificate_json(g, "sm", integer_set({-1}), integer_element(1), *u.certificate);
}

}  // namespace

TEST_CASE("certificates verify and tampering is caught") {
  const Json u = u1_certificate();
  CHECK(verify_certificate(u).valid);
  Json bad = u;
  bad["k"][0] = 58;
  const auto r = verify_certificate(bad);
  CHECK_FALSE(r.valid);
  CHECK(r.message.find("T_x") != std::string::npos);

  const auto g = exa1_group();
  const auto dec = lcd_decide(g, integer_set({-1}));
  Json cone = with_claim(cone_certificate_json(g, integer_set({-1}), dec), integer_set({0}), integer_set({1}));
  CHECK(verify_certificate(cone).valid);
  Json wrong_claim = cone;
  wrong_claim["claim"]["B"] = Json::array({2});
  CHECK_FALSE(verify_certificate(wrong_claim).valid);
  Json more = cone;
  more["n"][0] = 61;
  CHECK_FALSE(verify_certificate(more).valid);

  CHECK_THROWS_AS(verify_certificate(Json::parse(R"({"type":"mystery"})")), ParseError);
  CHECK_THROWS_AS(verify_certificate(Json::parse("[1,2]")), ParseError);
}
