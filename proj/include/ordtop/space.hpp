#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordtop/ordinal.hpp"
#include "ordtop/rational.hpp"

namespace ordtop {

// ---------------------------------------------------------------------------
// Pieces of an ordinal subspace

enum class PieceKind { Full, Singleton, SuccessorsOnly, LimitsOnly, OffsetClass };

// A selectable chunk of [0, bound). Full(a,b) is the interval [a,b);
// Singleton(a) the point a; SuccessorsOnly / LimitsOnly filter [a,b) by
// cofinality class; OffsetClass(a,b,k) keeps the points μ+k with μ a limit
// or zero.
struct Piece {
  PieceKind kind;
  Ordinal a;
  Ordinal b;        // unused for Singleton
  uint64_t k = 0;   // OffsetClass only

  static Piece full(Ordinal a, Ordinal b) { return {PieceKind::Full, std::move(a), std::move(b), 0}; }
  static Piece singleton(Ordinal a) { return {PieceKind::Singleton, std::move(a), Ordinal(), 0}; }
  static Piece successors(Ordinal a, Ordinal b) { return {PieceKind::SuccessorsOnly, std::move(a), std::move(b), 0}; }
  static Piece limits(Ordinal a, Ordinal b) { return {PieceKind::LimitsOnly, std::move(a), std::move(b), 0}; }
  static Piece offset(Ordinal a, Ordinal b, uint64_t k) { return {PieceKind::OffsetClass, std::move(a), std::move(b), k}; }

  // Range [lo, hi) occupied by this piece (Singleton: [a, a+1)).
  Ordinal range_lo() const { return a; }
  Ordinal range_hi() const { return kind == PieceKind::Singleton ? add(a, Ordinal(1)) : b; }

  bool member(const Ordinal& x) const;

  // Least member strictly greater than x (x may be outside the range);
  // nullopt if none.
  std::optional<Ordinal> min_above(const Ordinal& x) const;

  // Least member of the piece, if any.
  std::optional<Ordinal> first() const;

  // Supremum of the member set strictly below x, with attainment flag
  // (attained = the sup is itself a member). nullopt if empty.
  struct Sup {
    Ordinal value;
    bool attained;
  };
  std::optional<Sup> sup_below(const Ordinal& x) const;
};

bool operator==(const Piece& p, const Piece& q);

// ---------------------------------------------------------------------------
// Points

enum class PointKind { OrdPoint, Pair, LongPoint, LongInfinity, Rat };

// A point of a described space. Pair points are used for LexProduct spaces,
// LongPoint/LongInfinity for LongSegment, Rat for the dense orders.
struct Point {
  PointKind kind = PointKind::OrdPoint;
  Ordinal ord;                       // OrdPoint, LongPoint alpha
  Rational q;                        // LongPoint, Rat
  std::shared_ptr<const Point> first, second;  // Pair

  static Point ordinal(Ordinal x) {
    Point p;
    p.kind = PointKind::OrdPoint;
    p.ord = std::move(x);
    return p;
  }
  static Point pair(Point a, Point b) {
    Point p;
    p.kind = PointKind::Pair;
    p.first = std::make_shared<const Point>(std::move(a));
    p.second = std::make_shared<const Point>(std::move(b));
    return p;
  }
  static Point long_point(Ordinal alpha, Rational q) {
    Point p;
    p.kind = PointKind::LongPoint;
    p.ord = std::move(alpha);
    p.q = q;
    return p;
  }
  static Point long_infinity() {
    Point p;
    p.kind = PointKind::LongInfinity;
    return p;
  }
  static Point rat(Rational q) {
    Point p;
    p.kind = PointKind::Rat;
    p.q = q;
    return p;
  }

  std::string str() const;
};

bool operator==(const Point& a, const Point& b);
inline bool operator!=(const Point& a, const Point& b) { return !(a == b); }

// Order comparison of two points of the same space shape.
Cmp point_cmp(const Point& a, const Point& b);

// ---------------------------------------------------------------------------
// Side characters and rules

enum class Side { Left, Right };
enum class SideClass { Empty, Neighbor, Countable, Uncountable };

std::string to_string(SideClass c);
std::string to_string(Side s);

struct SideCharacter {
  SideClass left = SideClass::Empty;
  SideClass right = SideClass::Empty;
};

inline bool operator==(const SideCharacter& a, const SideCharacter& b) {
  return a.left == b.left && a.right == b.right;
}

// Severity order Empty < Neighbor < Countable < Uncountable; "total"
// character of a point is the max of its two sides.
inline SideClass side_max(SideClass a, SideClass b) { return a < b ? b : a; }

enum class PredTarget { Left, Right, Total };

// Selects points by their SideCharacter pattern in the base space.
struct Pred {
  PredTarget target = PredTarget::Total;
  SideClass cls = SideClass::Uncountable;

  bool matches(const SideCharacter& ch) const {
    switch (target) {
      case PredTarget::Left: return ch.left == cls;
      case PredTarget::Right: return ch.right == cls;
      case PredTarget::Total: return side_max(ch.left, ch.right) == cls;
    }
    return false;
  }
};

bool operator==(const Pred& a, const Pred& b);

enum class RuleKind { IsolateWhere, RightRayWhere, LeftRayWhere };

// Convex-basis modification rule. RightRayWhere adds {z ≥ y} for matching y
// (cuts the left side), LeftRayWhere adds {z ≤ y} (cuts the right side),
// IsolateWhere cuts both.
struct Rule {
  RuleKind kind;
  Pred pred;

  bool cuts_left() const { return kind != RuleKind::LeftRayWhere; }
  bool cuts_right() const { return kind != RuleKind::RightRayWhere; }
};

bool operator==(const Rule& a, const Rule& b);

using RuleSet = std::vector<Rule>;

// ---------------------------------------------------------------------------
// Space descriptions

enum class SpaceKind { OrdinalSub, LexProduct, LongSegment, RationalSegment, RealLine, GoSpace };

// Immutable algebraic description of a LOTS or GO space.
class SpaceDesc {
 public:
  static SpaceDesc ordinal_sub(Ordinal bound, std::vector<Piece> pieces);
  static SpaceDesc lex_product(SpaceDesc first, SpaceDesc second);
  static SpaceDesc long_segment(Ordinal kappa);
  static SpaceDesc rational_segment(bool has_min, bool has_max);
  static SpaceDesc real_line();
  static SpaceDesc go_space(SpaceDesc base, RuleSet rules);

  SpaceKind kind() const { return kind_; }
  const Ordinal& bound() const { return bound_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  const Ordinal& kappa() const { return bound_; }
  const SpaceDesc& first() const { return *first_; }
  const SpaceDesc& second() const { return *second_; }
  const SpaceDesc& base() const { return *first_; }
  const RuleSet& rules() const { return rules_; }
  bool has_min_flag() const { return has_min_; }
  bool has_max_flag() const { return has_max_; }

  // The LOTS part: *this unless GoSpace, in which case the base.
  const SpaceDesc& lots() const { return kind_ == SpaceKind::GoSpace ? *first_ : *this; }

  bool is_empty() const;
  std::string str() const;

 private:
  SpaceKind kind_ = SpaceKind::RealLine;
  Ordinal bound_;                 // OrdinalSub bound / LongSegment kappa
  std::vector<Piece> pieces_;
  std::shared_ptr<const SpaceDesc> first_, second_;   // LexProduct factors / GoSpace base
  RuleSet rules_;
  bool has_min_ = false, has_max_ = false;
};

bool operator==(const SpaceDesc& a, const SpaceDesc& b);
inline bool operator!=(const SpaceDesc& a, const SpaceDesc& b) { return !(a == b); }

// Membership test. Throws DomainError if the point shape is incompatible
// with the space shape.
bool contains(const SpaceDesc& s, const Point& p);

// Piece algebra over a whole OrdinalSub.
std::optional<Ordinal> ordsub_min_above(const SpaceDesc& s, const Ordinal& x);
std::optional<Piece::Sup> ordsub_sup_below(const SpaceDesc& s, const Ordinal& x);
std::optional<Ordinal> ordsub_min(const SpaceDesc& s);
// Supremum of the whole member set (attained = maximum exists); nullopt if empty.
std::optional<Piece::Sup> ordsub_sup(const SpaceDesc& s);

// All ordinals of the form ω³c₃+ω²c₂+ωc₁+c₀ with cᵢ ≤ coeff_cap lying in
// [lo, hi), in increasing order — a countable test mesh. Throws when the
// result would exceed cap.
std::vector<Ordinal> ordinal_mesh(const Ordinal& lo, const Ordinal& hi, uint64_t coeff_cap,
                                  size_t cap = 100000);

}  // namespace ordtop
