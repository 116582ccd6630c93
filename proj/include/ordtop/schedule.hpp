#pragma once

#include <memory>
#include <optional>

#include "ordtop/spectrum.hpp"

namespace ordtop {

enum class SchedKind { AffineOrd, RatApproach, PairSchedule };
enum class RatDirection { Up, Down };

// A strictly monotone ω-sequence of points. AffineOrd denotes
// n ↦ offset + stride·n; RatApproach a standard monotone rational mesh
// toward its target; PairSchedule combines a schedule or a constant point
// per coordinate (for lex pairs and long-segment points).
struct Schedule {
  struct Component {
    bool is_const = false;
    std::shared_ptr<const Schedule> sched;  // when !is_const
    Point constant;                         // when is_const

    static Component of(Schedule s) {
      Component c;
      c.sched = std::make_shared<const Schedule>(std::move(s));
      return c;
    }
    static Component of(Point p) {
      Component c;
      c.is_const = true;
      c.constant = std::move(p);
      return c;
    }
  };

  SchedKind kind = SchedKind::AffineOrd;
  Ordinal stride, offset;              // AffineOrd
  Rational target;                     // RatApproach
  RatDirection direction = RatDirection::Up;
  std::shared_ptr<const Component> first, second;  // PairSchedule

  static Schedule affine(Ordinal stride, Ordinal offset) {
    Schedule s;
    s.kind = SchedKind::AffineOrd;
    s.stride = std::move(stride);
    s.offset = std::move(offset);
    return s;
  }
  static Schedule rat_approach(Rational target, RatDirection dir) {
    Schedule s;
    s.kind = SchedKind::RatApproach;
    s.target = target;
    s.direction = dir;
    return s;
  }
  static Schedule pair(Component first, Component second) {
    Schedule s;
    s.kind = SchedKind::PairSchedule;
    s.first = std::make_shared<const Component>(std::move(first));
    s.second = std::make_shared<const Component>(std::move(second));
    return s;
  }
};

// Whether the denoted sequence is increasing; throws DomainError when the
// schedule is not strictly monotone (zero stride, constant pair).
bool schedule_increasing(const Schedule& seq);

// n-th point of the sequence, shaped for the given space.
Point schedule_term(const Schedule& seq, uint64_t n, const SpaceDesc& s);

// The point of s the sequence converges to in the order topology of the
// underlying LOTS, if any (rule cuts are not applied here).
std::optional<Point> schedule_limit_point(const Schedule& seq, const SpaceDesc& s);

// True iff the sequence converges to p in the topology of s. Validates
// monotonicity and membership of a sampled prefix; throws DomainError on a
// non-monotone schedule or terms outside the space.
bool converges(const Schedule& seq, const Point& p, const SpaceDesc& s);

}  // namespace ordtop
