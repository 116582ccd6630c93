#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "ordtop/refine.hpp"

using namespace ordtop;

namespace {

Ordinal O(const std::string& s) { return parse_ordinal(s); }
Ordinal W() { return Ordinal::Omega(); }

SpaceDesc interval(const Ordinal& bound) {
  return SpaceDesc::ordinal_sub(bound, {Piece::full(Ordinal(), bound)});
}

bool spectra_equal(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].key != b[i].key) return false;
    if (!(a[i].left == b[i].left) || !(a[i].right == b[i].right)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("refinement rules are input-independent") {
  auto r1 = refinement_rules_for(interval(W()));
  auto r2 = refinement_rules_for(SpaceDesc::real_line());
  REQUIRE(r1.size() == 2);
  CHECK(r1 == r2);
  CHECK(r1[0].kind == RuleKind::RightRayWhere);
  CHECK(r1[0].pred.target == PredTarget::Left);
  CHECK(r1[0].pred.cls == SideClass::Uncountable);
  CHECK(r1[1].kind == RuleKind::LeftRayWhere);
  CHECK(r1[1].pred.target == PredTarget::Right);
}

TEST_CASE("rule (2) matches exactly the top of [0, Ω]; rule (3) matches nothing") {
  auto s = interval(add(W(), Ordinal(1)));
  auto rules = refinement_rules_for(s);
  auto spec = character_spectrum(s);
  size_t m2 = 0, m3 = 0;
  for (const auto& c : spec) {
    if (rules[0].pred.matches(c.chars())) {
      ++m2;
      CHECK(c.witness == Point::ordinal(W()));
    }
    if (rules[1].pred.matches(c.chars())) ++m3;
  }
  CHECK(m2 == 1);
  CHECK(m3 == 0);
}

TEST_CASE("rule (2) matches the <x, inf> class of R x_l I") {
  auto base = SpaceDesc::lex_product(SpaceDesc::real_line(), SpaceDesc::long_segment(W()));
  auto rules = refinement_rules_for(base);
  auto spec = character_spectrum(base);
  size_t m = 0;
  for (const auto& c : spec) {
    if (rules[0].pred.matches(c.chars())) {
      ++m;
      CHECK(c.second_key == "infinity");
    }
  }
  CHECK(m == 1);
}

TEST_CASE("refine_first_countable on [0, Ω]") {
  auto rep = refine_first_countable(interval(add(W(), Ordinal(1))));
  CHECK(rep.coarseness_witness);
  CHECK(first_countable(rep.output));
  CHECK(side_character(rep.output, Point::ordinal(W()), Side::Left) == SideClass::Neighbor);
}

TEST_CASE("refine_first_countable is vacuous on [0, ω²)") {
  auto rep = refine_first_countable(interval(O("w^2")));
  CHECK(rep.coarseness_witness);
  CHECK(spectra_equal(rep.spectrum_before, rep.spectrum_after));
}

TEST_CASE("refine_first_countable on R x_l I") {
  auto base = SpaceDesc::lex_product(SpaceDesc::real_line(), SpaceDesc::long_segment(W()));
  auto rep = refine_first_countable(base);
  CHECK(first_countable(rep.output));
  CHECK(rep.coarseness_witness);
}

TEST_CASE("property: refinement is first-countable, coarser, idempotent over a pool") {
  testgen::Gen g(20240817);
  int made = 0;
  for (int i = 0; i < 250; ++i) {
    SpaceDesc y = g.space();
    CAPTURE(y.str());
    RefinementReport rep = refine_first_countable(y);
    ++made;
    REQUIRE(first_countable(rep.output));
    REQUIRE(is_coarser(y, rep.output));
    // idempotence: refining the output changes nothing
    RefinementReport again = refine_first_countable(rep.output);
    REQUIRE(spectra_equal(character_spectrum(rep.output), character_spectrum(again.output)));
    // vacuity on already-first-countable inputs
    if (first_countable(y)) REQUIRE(spectra_equal(rep.spectrum_before, rep.spectrum_after));
  }
  CHECK(made >= 250);
}

TEST_CASE("convergence preservation over a generated schedule pool") {
  // limits in the refinement are limits in the input, for schedules aimed at
  // generated ordinal subspaces
  testgen::Gen g(60103);
  int converged = 0;
  for (int i = 0; i < 200; ++i) {
    SpaceDesc y = g.ordinal_sub();
    if (y.is_empty()) continue;
    RefinementReport rep = refine_first_countable(y);
    // aim at a piece base with a stride from the pool
    const Piece& p = y.pieces()[g.nat(0, y.pieces().size() - 1)];
    Ordinal off = p.a.limit_part();
    Ordinal stride = parse_ordinal(g.coin() ? "w" : (g.coin() ? "1" : "w^2"));
    Schedule seq = Schedule::affine(stride, off);
    Point target = Point::ordinal(add(off, mul(stride, Ordinal::omega())));
    bool in_z;
    try {
      in_z = contains(rep.output, target) && converges(seq, target, rep.output);
    } catch (const DomainError&) {
      continue;
    }
    if (in_z) {
      ++converged;
      CAPTURE(y.str());
      REQUIRE(converges(seq, target, y));
    }
  }
  CHECK(converged > 10);
}

TEST_CASE("convergence preservation: limits in Z are limits in y") {
  // schedules against ordinal subspaces and the L fixture
  auto s = interval(O("w^2*2+1"));
  auto rep = refine_first_countable(s);
  Schedule seq = Schedule::affine(O("w"), O("w^2"));
  Point p = Point::ordinal(O("w^2*2"));
  if (converges(seq, p, rep.output)) CHECK(converges(seq, p, s));

  auto base = SpaceDesc::lex_product(SpaceDesc::real_line(), SpaceDesc::long_segment(W()));
  auto rep2 = refine_first_countable(base);
  Point bottom = Point::long_point(Ordinal(), Rational(0));
  Schedule seq2 = Schedule::pair(
      Schedule::Component::of(Schedule::rat_approach(Rational(1, 3), RatDirection::Up)),
      Schedule::Component::of(bottom));
  Point target = Point::pair(Point::rat(Rational(1, 3)), bottom);
  REQUIRE(converges(seq2, target, rep2.output));
  CHECK(converges(seq2, target, base));
}
