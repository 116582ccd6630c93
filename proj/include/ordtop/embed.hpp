#pragma once

#include "ordtop/schedule.hpp"
#include "ordtop/spectrum.hpp"

namespace ordtop {

// Caller-supplied countable partition of a space minus its top point: either
// the offset-class family k ↦ OffsetClass(a,b,k) over [a,b), or an explicit
// finite list of piece lists with an optional constant ω-tail.
struct PartitionSchedule {
  bool offset_family = false;
  Ordinal a, b;                                   // offset family range
  std::vector<std::vector<Piece>> list;           // explicit A_1..A_m
  std::optional<std::vector<Piece>> tail;         // repeated ω-tail
  Point target;                                   // the top point z

  static PartitionSchedule offsets(Ordinal a, Ordinal b, Point target) {
    PartitionSchedule p;
    p.offset_family = true;
    p.a = std::move(a);
    p.b = std::move(b);
    p.target = std::move(target);
    return p;
  }
};

// Syntactic hereditary-paracompactness test for ordinal subspaces: no Full
// or LimitsOnly piece of length with Ω-degree ≥ 1 (no closed copy of a
// stationary set in the representable class).
bool is_hered_paracompact(const SpaceDesc& s);

// Doubling re-embedding e(x) = 2·x + flag(x) of a left-isolating GO space
// over an ordinal subspace into a plain ordinal subspace with the same
// character spectrum classwise. Throws when a rule is not left-isolating or
// a flagged class is not expressible in the piece representation.
SpaceDesc reembed_double(const SpaceDesc& g);

// Decomposition into maximal convex clopen pieces separated by gaps, each
// re-based to a fresh bound. ω-many uniform blocks are returned as a tail
// pattern repeated at constant stride.
struct GapSplit {
  std::vector<SpaceDesc> pieces;
  std::optional<SpaceDesc> tail;
};
GapSplit split_at_gaps(const SpaceDesc& s);

// End-to-end sum of ordinal subspaces below a new top point. Offsets advance
// by the least additively closed ordinal ≥ each bound; an ω-tail of equal
// summands collapses to one piece and puts the top at a countable limit.
struct PieceFamily {
  std::vector<SpaceDesc> prefix;
  std::optional<SpaceDesc> tail;
};
SpaceDesc omega_sum_with_top(const PieceFamily& family);

// One step of the inductive first-countable transformation, recorded for the
// transformation trace.
struct StepTrace {
  std::string action;
  std::string detail;
  std::vector<StepTrace> children;
};

struct TransformResult {
  SpaceDesc space;
  StepTrace trace;

  TransformResult() : space(SpaceDesc::real_line()) {}
};

// The inductive transformation of a hereditarily paracompact ordinal
// subspace into a first-countable one. A schedule is demanded exactly when
// the top point has uncountable left character.
TransformResult go5_transform(const SpaceDesc& s,
                              const std::optional<PartitionSchedule>& schedule);

// Order type of the member set of an ordinal subspace.
Ordinal space_order_type(const SpaceDesc& s);

// Spectrum-equivalent canonical form used when the recursion bottoms out:
// discrete subspaces re-embed as successor blocks.
SpaceDesc canonicalize_subspace(const SpaceDesc& s);

}  // namespace ordtop
