#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "ordtop/oracle.hpp"

using namespace ordtop;

namespace {

Ordinal O(const std::string& s) { return parse_ordinal(s); }
Ordinal w() { return Ordinal::omega(); }

SpaceDesc interval(const Ordinal& bound) {
  return SpaceDesc::ordinal_sub(bound, {Piece::full(Ordinal(), bound)});
}

// random countable ordinal below ω⁴
Ordinal random_countable(std::mt19937_64& rng) {
  auto nat = [&](uint64_t lo, uint64_t hi) {
    return std::uniform_int_distribution<uint64_t>(lo, hi)(rng);
  };
  Ordinal acc;
  Ordinal w3 = Ordinal::omega_pow(Ordinal(3));
  Ordinal w2 = Ordinal::omega_pow(Ordinal(2));
  acc = add(acc, mul(w3, Ordinal(nat(0, 5))));
  acc = add(acc, mul(w2, Ordinal(nat(0, 5))));
  acc = add(acc, mul(Ordinal::omega(), Ordinal(nat(0, 5))));
  acc = add(acc, Ordinal(nat(0, 5)));
  return acc;
}

}  // namespace

TEST_CASE("fundamental sequences: canonical assignments") {
  auto fs1 = fundamental_sequence(w());
  CHECK(fs1.term(0) == Ordinal());
  CHECK(fs1.term(5) == Ordinal(5));
  CHECK(fs1.sup == w());

  auto fs2 = fundamental_sequence(O("w^2"));
  CHECK(fs2.term(3) == O("w*3"));
  verify_fundamental_sequence(fs2);

  auto fs3 = fundamental_sequence(O("w^w"));
  CHECK(fs3.term(2) == O("w^2"));
  verify_fundamental_sequence(fs3);

  auto fs4 = fundamental_sequence(O("w^3+w^2*2"));
  CHECK(fs4.term(1) == O("w^3+w^2+w"));
  verify_fundamental_sequence(fs4);

  CHECK_THROWS_AS(fundamental_sequence(O("w+1")), DomainError);
  CHECK_THROWS_AS(fundamental_sequence(O("W")), DomainError);
}

TEST_CASE("cof_via_fs classifies the easy shapes") {
  CHECK(cof_via_fs(O("w^3+w")) == CofClass::CountableCof);
  CHECK(cof_via_fs(O("5")) == CofClass::Successor);
  CHECK(cof_via_fs(O("0")) == CofClass::Zero);
  CHECK_THROWS_AS(cof_via_fs(O("W")), DomainError);
}

TEST_CASE("classify agrees with the fundamental-sequence oracle on 1000 ordinals below w^4") {
  std::mt19937_64 rng(13579);
  for (int i = 0; i < 1000; ++i) {
    Ordinal x = random_countable(rng);
    CAPTURE(x.str());
    REQUIRE(classify(x) == cof_via_fs(x));
  }
}

TEST_CASE("fundamental sequences satisfy their proof obligations on the pool") {
  std::mt19937_64 rng(8642);
  int limits = 0;
  while (limits < 300) {
    Ordinal x = random_countable(rng);
    if (classify(x) != CofClass::CountableCof) continue;
    ++limits;
    auto fs = fundamental_sequence(x);
    CHECK_NOTHROW(verify_fundamental_sequence(fs));
  }
}

TEST_CASE("cb_profile: hand-computed fixtures") {
  // [0, ω]: derivative 1 leaves {ω}, derivative 2 empty
  auto p1 = cb_profile(interval(O("w+1")));
  CHECK(p1.ranks.size() == 2);
  CHECK(p1.reached_empty);

  // discrete [0, ω): one derivative
  auto p2 = cb_profile(interval(w()));
  CHECK(p2.ranks.size() == 1);
  CHECK(p2.reached_empty);

  // [0, ω²]: survivors {ω·n} ∪ {ω²}, then {ω²}, then empty
  auto p3 = cb_profile(interval(O("w^2+1")));
  CHECK(p3.ranks.size() == 3);
  CHECK(p3.reached_empty);

  // one more by hand: [0, ω³] has CB rank 4
  auto p4 = cb_profile(interval(O("w^3+1")));
  CHECK(p4.ranks.size() == 4);
}

TEST_CASE("cb_derivative matches the survivor sets") {
  SpaceDesc d1 = cb_derivative(interval(O("w^2+1")));
  // survivors {ω·n : n ≥ 1} ∪ {ω²} re-embed as [interval of type ω] + top
  CHECK(space_order_type(d1) == O("w+1"));
  SpaceDesc d2 = cb_derivative(d1);
  CHECK(space_order_type(d2) == Ordinal(1));
  SpaceDesc d3 = cb_derivative(d2);
  CHECK(d3.is_empty());
  CHECK_THROWS_AS(cb_derivative(interval(Ordinal::Omega())), DomainError);
}

TEST_CASE("cb profiles are invariant under the normal form") {
  std::vector<SpaceDesc> inputs = {
      SpaceDesc::ordinal_sub(O("w^2*2"), {Piece::limits(Ordinal(), O("w^2*2"))}),
      SpaceDesc::ordinal_sub(O("w^2"), {Piece::successors(Ordinal(), O("w*3")),
                                        Piece::singleton(O("w*3"))}),
      SpaceDesc::ordinal_sub(O("w^3"), {Piece::offset(Ordinal(), O("w^2"), 1),
                                        Piece::full(O("w^2"), O("w^2+w"))}),
  };
  for (const auto& s : inputs) {
    CAPTURE(s.str());
    CHECK(profiles_equivalent(cb_profile(s), cb_profile(cb_normal_form(s))));
  }
}

TEST_CASE("converges_bruteforce on the basic shapes") {
  auto s = interval(O("w^2+1"));
  Schedule seq = Schedule::affine(w(), Ordinal());
  CHECK(converges_bruteforce(seq, Point::ordinal(O("w^2")), s));
  // wrong target ω²·2 with stalled schedule
  auto s2 = interval(O("w^2*2+1"));
  CHECK_FALSE(converges_bruteforce(seq, Point::ordinal(O("w^2*2")), s2));
  // schedule into an isolated point
  auto go = apply_rules(s, {Rule{RuleKind::IsolateWhere,
                                 Pred{PredTarget::Left, SideClass::Countable}}});
  CHECK_FALSE(converges_bruteforce(seq, Point::ordinal(O("w^2")), go));
}

TEST_CASE("converges equals converges_bruteforce on a countable pool") {
  testgen::Gen g(31337);
  int checked = 0;

  // ordinal subspaces with affine schedules
  std::vector<SpaceDesc> spaces = {
      interval(O("w^2+1")),
      interval(O("w^2*2+1")),
      interval(O("w^3+1")),
      SpaceDesc::ordinal_sub(O("w^2+2"), {Piece::full(Ordinal(), O("w^2")),
                                          Piece::singleton(O("w^2+1"))}),
      SpaceDesc::ordinal_sub(O("w^2"), {Piece::limits(Ordinal(), O("w^2"))}),
      apply_rules(interval(O("w^2+1")),
                  {Rule{RuleKind::RightRayWhere, Pred{PredTarget::Left, SideClass::Countable}}}),
      apply_rules(interval(O("w^3")),
                  {Rule{RuleKind::IsolateWhere, Pred{PredTarget::Total, SideClass::Countable}}}),
  };
  std::vector<Schedule> schedules = {
      Schedule::affine(w(), Ordinal()),
      Schedule::affine(w(), O("w^2")),
      Schedule::affine(O("w^2"), Ordinal()),
      Schedule::affine(Ordinal(1), O("w*3")),
      Schedule::affine(O("w+1"), Ordinal()),
  };
  std::vector<Point> points;
  for (const char* t : {"w", "w+1", "w*2", "w^2", "w^2+1", "w^2*2", "w^3", "5"})
    points.push_back(Point::ordinal(O(t)));

  for (const auto& s : spaces) {
    for (const auto& seq : schedules) {
      for (const auto& p : points) {
        bool lhs, rhs;
        try {
          lhs = converges(seq, p, s);
        } catch (const DomainError&) {
          CHECK_THROWS_AS(converges_bruteforce(seq, p, s), DomainError);
          continue;
        }
        rhs = converges_bruteforce(seq, p, s);
        CAPTURE(s.str());
        CAPTURE(p.str());
        REQUIRE(lhs == rhs);
        ++checked;
      }
    }
  }

  // rational and lex cases
  auto r = SpaceDesc::real_line();
  auto seg = SpaceDesc::rational_segment(true, false);
  auto longseg = SpaceDesc::long_segment(O("w^2"));
  auto prod = SpaceDesc::lex_product(interval(O("w+1")), interval(O("w^2")));
  for (int i = 0; i < 200; ++i) {
    Rational target(static_cast<int64_t>(g.nat(1, 8)), static_cast<int64_t>(g.nat(1, 8)));
    RatDirection dir = g.coin() ? RatDirection::Up : RatDirection::Down;
    Schedule seq = Schedule::rat_approach(target, dir);
    Point p = Point::rat(g.coin() ? target : Rational(static_cast<int64_t>(g.nat(0, 3))));
    bool lhs;
    try {
      lhs = converges(seq, p, r);
    } catch (const DomainError&) {
      continue;
    }
    REQUIRE(lhs == converges_bruteforce(seq, p, r));
    ++checked;
    if (target <= Rational(1) && target > Rational(0) && dir == RatDirection::Up) {
      Point ps = Point::rat(target);
      if (contains(seg, ps)) {
        REQUIRE(converges(seq, ps, seg) == converges_bruteforce(seq, ps, seg));
        ++checked;
      }
    }
  }
  // long segment fiber climbs and crossings
  for (uint64_t a : {0ull, 1ull, 3ull}) {
    for (const char* tgt : {"1/2", "1", "1/3"}) {
      Schedule seq = Schedule::pair(
          Schedule::Component::of(Point::ordinal(Ordinal(a))),
          Schedule::Component::of(Schedule::rat_approach(parse_rational(tgt), RatDirection::Up)));
      std::vector<Point> targets = {Point::long_point(Ordinal(a), parse_rational("1/2")),
                                    Point::long_point(Ordinal(a + 1), Rational(0)),
                                    Point::long_infinity()};
      for (const auto& p : targets) {
        bool lhs;
        try {
          lhs = converges(seq, p, longseg);
        } catch (const DomainError&) {
          continue;
        }
        REQUIRE(lhs == converges_bruteforce(seq, p, longseg));
        ++checked;
      }
    }
  }
  // climbing the first coordinate of a lex product
  {
    Schedule seq = Schedule::pair(Schedule::Component::of(Schedule::affine(Ordinal(1), Ordinal())),
                                  Schedule::Component::of(Point::ordinal(Ordinal())));
    Point good = Point::pair(Point::ordinal(w()), Point::ordinal(Ordinal()));
    Point bad = Point::pair(Point::ordinal(w()), Point::ordinal(Ordinal(1)));
    REQUIRE(converges(seq, good, prod) == converges_bruteforce(seq, good, prod));
    REQUIRE(converges(seq, bad, prod) == converges_bruteforce(seq, bad, prod));
    checked += 2;
  }
  CHECK(checked >= 250);
}
