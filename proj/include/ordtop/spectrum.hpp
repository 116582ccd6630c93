#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordtop/space.hpp"

namespace ordtop {

// Side classification enriched with attainedness: a Neighbor side either has
// an adjacent member (attained) or is cut by a gap in the ambient order.
// Lexicographic composition distinguishes the two.
struct SideInfo {
  SideClass cls = SideClass::Empty;
  bool attained = false;
};

inline bool operator==(const SideInfo& a, const SideInfo& b) {
  return a.cls == b.cls && a.attained == b.attained;
}

// Character of a space at one of its ends. attained: the end is a member
// (min / max point). Otherwise cls gives the cofinality class of the
// approach to the missing end; for comparable orders the boundary value is
// carried for gap analysis.
struct EndInfo {
  bool attained = false;
  SideClass cls = SideClass::Empty;
  std::optional<Point> endpoint;       // when attained
  std::optional<Ordinal> boundary_ord; // unattained OrdinalSub end
  std::optional<Rational> boundary_rat;// unattained RationalSegment end
};

EndInfo end_info(const SpaceDesc& s, Side side);

// Point-level side character. Computed in the base order for GoSpace with
// rule cuts applied to the matched point. Throws if p is not in s.
SideInfo side_info(const SpaceDesc& s, const Point& p, Side side);
SideClass side_character(const SpaceDesc& s, const Point& p, Side side);
SideCharacter side_characters(const SpaceDesc& s, const Point& p);

// Exact successor / predecessor of a point within the described set.
std::optional<Point> next_point_above(const SpaceDesc& s, const Point& p);

// ---------------------------------------------------------------------------
// Character spectrum: a finite partition of the space into syntactic point
// classes on which both side characters are constant.

enum class SubClass {
  None,
  First,        // least member of a piece
  Last,         // greatest member of a piece
  Single,       // singleton piece
  FullSucc,     // interior successors of a Full piece
  FullLimCt,    // interior countable-cofinality limits of a Full piece
  FullLimUnc,   // interior uncountable-cofinality limits of a Full piece
  SuccOff1,     // interior μ+1 points of a SuccessorsOnly piece
  SuccOffK,     // interior μ+k (k ≥ 2) points of a SuccessorsOnly piece
  OffsetInt,    // interior points of an OffsetClass piece
  LimNbr,       // interior ν+ω·c limits of a LimitsOnly piece
  LimCt,        // interior countable limits of limits
  LimUnc,       // interior uncountable-cofinality limits
  Origin,       // ⟨0,0⟩ of a long segment
  SuccBottom,   // ⟨α+1, 0⟩ fiber bottoms
  Generic,      // dense-order generic points / ⟨α, q>0⟩
  LimBottomCt,  // ⟨λ, 0⟩, λ countable-cofinality limit
  LimBottomUnc, // ⟨λ, 0⟩, λ uncountable-cofinality limit
  Infinity,     // the adjoined top of a long segment
  MinPt,
  MaxPt,
  LexPair,      // product class
};

struct PointClass {
  std::string key;
  std::string desc;
  SideInfo left, right;
  Point witness;
  int piece = -1;               // OrdinalSub piece index
  SubClass sub = SubClass::None;
  bool cut_left = false;        // a GoSpace rule matched this class and cuts this side
  bool cut_right = false;
  // Factor class keys for LexPair classes.
  std::string first_key, second_key;

  SideCharacter chars() const { return SideCharacter{left.cls, right.cls}; }
};

using Spectrum = std::vector<PointClass>;

// Finite exhaustive partition with the common SideCharacter of each class.
Spectrum character_spectrum(const SpaceDesc& s);

// True iff no class has an Uncountable side.
bool first_countable(const SpaceDesc& s);

// GoSpace(s, rules), merging when s is already a GoSpace.
SpaceDesc apply_rules(const SpaceDesc& s, const RuleSet& rules);

// topology(a) ⊆ topology(b), decided structurally on the shared base
// spectrum. Throws DomainError when the underlying ordered sets differ.
bool is_coarser(const SpaceDesc& a, const SpaceDesc& b);

// Distinct (left, right) pairs present in a spectrum, sorted — a compact
// signature used by the embedding checks.
std::vector<SideCharacter> spectrum_char_set(const Spectrum& sp);

// Whether any rule matching the given base characters cuts the given side.
bool rule_set_cuts(const RuleSet& rules, const SideCharacter& base_chars, Side side);

}  // namespace ordtop
