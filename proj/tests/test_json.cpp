#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "ordtop/fixtures.hpp"
#include "ordtop/json_io.hpp"

using namespace ordtop;

namespace {

Ordinal O(const std::string& s) { return parse_ordinal(s); }

}  // namespace

TEST_CASE("ordinal fields serialize as grammar strings") {
  Json j = to_json(O("W*2+w^3"));
  CHECK(j.is_string());
  CHECK(j.get<std::string>() == "W*2+w^3");
  CHECK(ordinal_from_json(j) == O("W*2+w^3"));
}

TEST_CASE("space round-trip: every generated description re-parses identically") {
  testgen::Gen g(5150);
  for (int i = 0; i < 200; ++i) {
    SpaceDesc s = g.space();
    CAPTURE(s.str());
    Json j = to_json(s);
    SpaceDesc back = space_from_json(j);
    REQUIRE(back == s);
    REQUIRE(to_json(back) == j);
  }
}

TEST_CASE("piece and point field names follow the schema") {
  Json j = to_json(Piece::offset(O("w"), O("w^2"), 3));
  CHECK(j["kind"] == "offsetclass");
  CHECK(j["a"] == "w");
  CHECK(j["b"] == "w^2");
  CHECK(j["k"] == 3);

  Json p = to_json(Point::long_point(O("w"), Rational(1, 2)));
  CHECK(p["kind"] == "longpoint");
  CHECK(p["alpha"] == "w");
  CHECK(p["q"] == "1/2");

  Json pr = to_json(Point::pair(Point::rat(Rational(0)), Point::long_infinity()));
  CHECK(pr["first"]["kind"] == "rat");
  CHECK(pr["second"]["kind"] == "longinfinity");

  Json sp = to_json(SpaceDesc::rational_segment(true, false));
  CHECK(sp["hasmin"] == true);
  CHECK(sp["hasmax"] == false);
}

TEST_CASE("rules and schedules round-trip") {
  Rule r{RuleKind::RightRayWhere, Pred{PredTarget::Left, SideClass::Uncountable}};
  Json j = to_json(r);
  CHECK(j["kind"] == "rightraywhere");
  CHECK(j["pred"]["target"] == "left");
  CHECK(j["pred"]["class"] == "Uncountable");
  CHECK(rule_from_json(j) == r);

  Schedule seq = Schedule::pair(
      Schedule::Component::of(Schedule::rat_approach(Rational(1, 2), RatDirection::Up)),
      Schedule::Component::of(Point::long_point(Ordinal(), Rational(0))));
  Json js = to_json(seq);
  Schedule back = schedule_from_json(js);
  CHECK(to_json(back) == js);

  Json aff = to_json(Schedule::affine(O("w"), O("w^2")));
  CHECK(aff["kind"] == "affineord");
  CHECK(aff["stride"] == "w");
  CHECK(aff["offset"] == "w^2");
}

TEST_CASE("partition schedules parse both forms") {
  Json j;
  j["target"] = to_json(Point::ordinal(O("W")));
  j["offsetfamily"]["a"] = "0";
  j["offsetfamily"]["b"] = "W";
  PartitionSchedule ps = partition_schedule_from_json(j);
  CHECK(ps.offset_family);
  CHECK(ps.b == O("W"));

  Json j2;
  j2["target"] = to_json(Point::ordinal(O("w^2")));
  j2["list"] = Json::array();
  Json lst = Json::array();
  lst.push_back(to_json(Piece::full(Ordinal(), O("w"))));
  j2["list"].push_back(lst);
  PartitionSchedule ps2 = partition_schedule_from_json(j2);
  CHECK_FALSE(ps2.offset_family);
  REQUIRE(ps2.list.size() == 1);
  CHECK(ps2.list[0][0] == Piece::full(Ordinal(), O("w")));
}

TEST_CASE("spectrum reports are sorted by class key") {
  auto spec = character_spectrum(*fixture_space("E-successors"));
  Json j = to_json(spec);
  for (size_t i = 1; i < j.size(); ++i)
    CHECK(j[i - 1]["class"].get<std::string>() < j[i]["class"].get<std::string>());
}

TEST_CASE("bad input shapes raise domain errors") {
  CHECK_THROWS_AS(space_from_json(Json{{"kind", "mystery"}}), DomainError);
  CHECK_THROWS_AS(ordinal_from_json(Json(42)), DomainError);
  CHECK_THROWS_AS(piece_from_json(Json{{"kind", "full"}, {"a", "3"}, {"b", "1"}}), DomainError);
}
