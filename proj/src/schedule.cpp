#include "ordtop/schedule.hpp"

#include <algorithm>

namespace ordtop {

namespace {

constexpr int kValidationPrefix = 64;

// Starting mesh index keeping the first term on the valid side of 0 / 1
// (rational fibers are [0,1) segments; the real line is unconstrained).
int64_t mesh_start(const Rational& target, RatDirection dir) {
  if (dir == RatDirection::Up) {
    if (target.num <= 0) return 2;
    // smallest m with target - 1/m >= 0, plus one
    int64_t m = (target.den + target.num - 1) / target.num;
    return std::max<int64_t>(2, m + 1);
  }
  Rational gap = rat_sub(Rational(1), target);
  if (gap.num <= 0) return 2;
  int64_t m = (gap.den + gap.num - 1) / gap.num;
  return std::max<int64_t>(2, m + 1);
}

Rational rat_term(const Schedule& seq, uint64_t n) {
  int64_t m0 = mesh_start(seq.target, seq.direction);
  Rational step(1, m0 + static_cast<int64_t>(n));
  return seq.direction == RatDirection::Up ? rat_sub(seq.target, step)
                                           : rat_add(seq.target, step);
}

// Ordinal value of a component used as a first coordinate.
Ordinal component_ord(const Schedule::Component& c, uint64_t n) {
  if (c.is_const) {
    if (c.constant.kind != PointKind::OrdPoint)
      throw DomainError("ordinal-valued schedule component expected");
    return c.constant.ord;
  }
  if (c.sched->kind != SchedKind::AffineOrd)
    throw DomainError("ordinal coordinate schedules must be AffineOrd");
  return add(c.sched->offset, mul(c.sched->stride, Ordinal(n)));
}

Rational component_rat(const Schedule::Component& c, uint64_t n) {
  if (c.is_const) {
    if (c.constant.kind != PointKind::Rat)
      throw DomainError("rational-valued schedule component expected");
    return c.constant.q;
  }
  if (c.sched->kind != SchedKind::RatApproach)
    throw DomainError("rational coordinate schedules must be RatApproach");
  return rat_term(*c.sched, n);
}

}  // namespace

bool schedule_increasing(const Schedule& seq) {
  switch (seq.kind) {
    case SchedKind::AffineOrd:
      if (seq.stride.is_zero()) throw DomainError("non-monotone schedule: zero stride");
      return true;
    case SchedKind::RatApproach:
      return seq.direction == RatDirection::Up;
    case SchedKind::PairSchedule: {
      if (!seq.first->is_const) return schedule_increasing(*seq.first->sched);
      if (!seq.second->is_const) return schedule_increasing(*seq.second->sched);
      throw DomainError("non-monotone schedule: both pair components constant");
    }
  }
  throw DomainError("unreachable");
}

Point schedule_term(const Schedule& seq, uint64_t n, const SpaceDesc& s) {
  const SpaceDesc& lots = s.lots();
  switch (seq.kind) {
    case SchedKind::AffineOrd:
      return Point::ordinal(add(seq.offset, mul(seq.stride, Ordinal(n))));
    case SchedKind::RatApproach:
      return Point::rat(rat_term(seq, n));
    case SchedKind::PairSchedule: {
      if (lots.kind() == SpaceKind::LongSegment)
        return Point::long_point(component_ord(*seq.first, n), component_rat(*seq.second, n));
      if (lots.kind() != SpaceKind::LexProduct)
        throw DomainError("PairSchedule requires a lex product or long segment space");
      auto sub_term = [&](const Schedule::Component& c, const SpaceDesc& factor) {
        return c.is_const ? c.constant : schedule_term(*c.sched, n, factor);
      };
      return Point::pair(sub_term(*seq.first, lots.first()), sub_term(*seq.second, lots.second()));
    }
  }
  throw DomainError("unreachable");
}

namespace {

// Limit of a rational mesh inside a dense space: the target itself, when
// the space contains it.
std::optional<Point> rat_limit_in(const SpaceDesc& B, const Rational& target) {
  Point cand = Point::rat(target);
  if (contains(B, cand)) return cand;
  return std::nullopt;
}

// True when the value 'target' equals B's unattained boundary on the given
// side (so a mesh toward it escapes B).
bool hits_unattained_end(const SpaceDesc& B, Side side, const Rational& target) {
  EndInfo e = end_info(B, side);
  return !e.attained && e.boundary_rat && *e.boundary_rat == target;
}

bool hits_unattained_end_ord(const SpaceDesc& B, Side side, const Ordinal& value) {
  EndInfo e = end_info(B, side);
  return !e.attained && e.boundary_ord && *e.boundary_ord == value;
}

std::optional<Point> limit_point(const Schedule& seq, const SpaceDesc& s);

// Limit of a pair schedule over a lex product A ×_l B.
std::optional<Point> lex_limit(const Schedule& seq, const SpaceDesc& s) {
  const SpaceDesc& A = s.first();
  const SpaceDesc& B = s.second();
  bool inc = schedule_increasing(seq);
  if (!seq.first->is_const) {
    // First coordinate climbs; the limit sits over the first coordinate's
    // limit point, at the near end of the fiber.
    auto a_lim = limit_point(*seq.first->sched, A);
    if (!a_lim) return std::nullopt;
    EndInfo near = end_info(B, inc ? Side::Left : Side::Right);
    if (!near.attained) return std::nullopt;
    return Point::pair(*a_lim, *near.endpoint);
  }
  // Constant first coordinate: climb within the fiber.
  const Point& a = seq.first->constant;
  auto b_lim = limit_point(*seq.second->sched, B);
  if (b_lim) return Point::pair(a, *b_lim);
  // The fiber mesh may escape through B's missing end and land on the
  // adjacent fiber's near endpoint.
  const Schedule& inner = *seq.second->sched;
  bool crosses = false;
  if (inner.kind == SchedKind::RatApproach) {
    crosses = hits_unattained_end(B, inc ? Side::Right : Side::Left, inner.target);
  } else if (inner.kind == SchedKind::AffineOrd && inc) {
    crosses = hits_unattained_end_ord(B, Side::Right, add(inner.offset, mul(inner.stride, Ordinal::omega())));
  }
  if (!crosses) return std::nullopt;
  if (inc) {
    auto a_next = next_point_above(A, a);
    if (!a_next) return std::nullopt;
    EndInfo bot = end_info(B, Side::Left);
    if (!bot.attained) return std::nullopt;
    return Point::pair(*a_next, *bot.endpoint);
  }
  return std::nullopt;  // descending cross-overs need a predecessor; not representable here
}

std::optional<Point> limit_point(const Schedule& seq, const SpaceDesc& s) {
  const SpaceDesc& lots = s.lots();
  bool inc = schedule_increasing(seq);
  switch (seq.kind) {
    case SchedKind::AffineOrd: {
      if (lots.kind() != SpaceKind::OrdinalSub)
        throw DomainError("AffineOrd schedule requires an ordinal subspace");
      Ordinal sup = add(seq.offset, mul(seq.stride, Ordinal::omega()));
      Point cand = Point::ordinal(sup);
      if (contains(lots, cand)) return cand;
      return std::nullopt;
    }
    case SchedKind::RatApproach: {
      if (lots.kind() != SpaceKind::RationalSegment && lots.kind() != SpaceKind::RealLine)
        throw DomainError("RatApproach schedule requires a dense rational space");
      (void)inc;
      return rat_limit_in(lots, seq.target);
    }
    case SchedKind::PairSchedule: {
      if (lots.kind() == SpaceKind::LexProduct) return lex_limit(seq, lots);
      if (lots.kind() != SpaceKind::LongSegment)
        throw DomainError("PairSchedule requires a lex product or long segment space");
      const Ordinal& kappa = lots.kappa();
      if (!seq.first->is_const) {
        // climbing fibers: limit at <sup, 0>, or the adjoined top when the
        // sup reaches kappa
        const Schedule& fs = *seq.first->sched;
        if (fs.kind != SchedKind::AffineOrd)
          throw DomainError("long segment first coordinate must be AffineOrd");
        Ordinal sup = add(fs.offset, mul(fs.stride, Ordinal::omega()));
        if (sup < kappa) return Point::long_point(sup, Rational(0));
        if (sup == kappa) return Point::long_infinity();
        return std::nullopt;
      }
      Ordinal alpha = seq.first->constant.kind == PointKind::OrdPoint
                          ? seq.first->constant.ord
                          : throw DomainError("long segment first coordinate must be an ordinal");
      if (seq.second->is_const) throw DomainError("non-monotone schedule: both pair components constant");
      const Schedule& qs = *seq.second->sched;
      if (qs.kind != SchedKind::RatApproach)
        throw DomainError("long segment second coordinate must be RatApproach");
      if (qs.direction == RatDirection::Up) {
        if (qs.target < Rational(1)) return Point::long_point(alpha, qs.target);
        if (qs.target == Rational(1)) {
          Ordinal nxt = add(alpha, Ordinal(1));
          if (nxt < kappa) return Point::long_point(nxt, Rational(0));
          if (nxt == kappa) return Point::long_infinity();
        }
        return std::nullopt;
      }
      if (qs.target >= Rational(0)) return Point::long_point(alpha, qs.target);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Point> schedule_limit_point(const Schedule& seq, const SpaceDesc& s) {
  return limit_point(seq, s);
}

bool converges(const Schedule& seq, const Point& p, const SpaceDesc& s) {
  bool inc = schedule_increasing(seq);  // throws on non-monotone shapes
  if (!contains(s, p)) throw DomainError("target point not in space");
  Point prev = schedule_term(seq, 0, s);
  if (!contains(s, prev)) throw DomainError("schedule term " + prev.str() + " not in space");
  for (int n = 1; n < kValidationPrefix; ++n) {
    Point t = schedule_term(seq, static_cast<uint64_t>(n), s);
    if (!contains(s, t))
      throw DomainError("schedule term " + t.str() + " not in space");
    Cmp c = point_cmp(prev, t);
    if ((inc && c != Cmp::LT) || (!inc && c != Cmp::GT))
      throw DomainError("non-monotone schedule at term " + std::to_string(n));
    prev = t;
  }
  auto lim = limit_point(seq, s);
  if (!lim || !(*lim == p)) return false;
  if (s.kind() == SpaceKind::GoSpace) {
    SideCharacter base = side_characters(s.base(), p);
    if (rule_set_cuts(s.rules(), base, inc ? Side::Left : Side::Right)) return false;
  }
  return true;
}

}  // namespace ordtop
