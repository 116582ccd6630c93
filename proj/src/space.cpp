#include "ordtop/space.hpp"

#include <algorithm>

namespace ordtop {

namespace {

// Least successor ordinal ≥ t.
Ordinal ceil_successor(const Ordinal& t) {
  if (t.is_successor()) return t;
  return add(t, Ordinal(1));
}

// Least limit ordinal ≥ t (t = 0 gives ω).
Ordinal ceil_limit(const Ordinal& t) {
  if (t.is_limit()) return t;
  return add(t.limit_part(), Ordinal::omega());
}

// Least μ+k (μ limit or zero) ≥ t.
Ordinal ceil_offset(const Ordinal& t, uint64_t k) {
  Ordinal lambda = t.limit_part();
  uint64_t kt = t.finite_part();
  if (kt <= k) return add(lambda, Ordinal(k));
  return add(add(lambda, Ordinal::omega()), Ordinal(k));
}

// Whether the last CNF unit of a limit ordinal m is ω·c (exponent exactly 1),
// i.e. limits below m top out at m − ω instead of being cofinal.
bool last_unit_is_omega(const Ordinal& m) {
  const auto& u = m.units().back();
  return u.d == 0 && u.e.size() == 1 && u.e[0].d == 0 && u.e[0].e.empty() && u.e[0].c == 1;
}

// For m with last unit ω·c: m − ω (prefix + ω·(c−1)).
Ordinal drop_one_omega(const Ordinal& m) {
  auto units = m.units();
  if (units.back().c == 1) {
    units.pop_back();
  } else {
    units.back().c -= 1;
  }
  return Ordinal::from_units(std::move(units));
}

}  // namespace

// ---------------------------------------------------------------------------
// Piece semantics

bool Piece::member(const Ordinal& x) const {
  switch (kind) {
    case PieceKind::Full:
      return x >= a && x < b;
    case PieceKind::Singleton:
      return x == a;
    case PieceKind::SuccessorsOnly:
      return x >= a && x < b && classify(x) == CofClass::Successor;
    case PieceKind::LimitsOnly: {
      CofClass c = classify(x);
      return x >= a && x < b && (c == CofClass::CountableCof || c == CofClass::UncountableCof);
    }
    case PieceKind::OffsetClass:
      return x >= a && x < b && x.finite_part() == k;
  }
  return false;
}

std::optional<Ordinal> Piece::first() const {
  switch (kind) {
    case PieceKind::Full:
      return a < b ? std::optional<Ordinal>(a) : std::nullopt;
    case PieceKind::Singleton:
      return a;
    case PieceKind::SuccessorsOnly: {
      Ordinal f = ceil_successor(a);
      return f < b ? std::optional<Ordinal>(f) : std::nullopt;
    }
    case PieceKind::LimitsOnly: {
      Ordinal f = ceil_limit(a);
      return f < b ? std::optional<Ordinal>(f) : std::nullopt;
    }
    case PieceKind::OffsetClass: {
      Ordinal f = ceil_offset(a, k);
      return f < b ? std::optional<Ordinal>(f) : std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Ordinal> Piece::min_above(const Ordinal& x) const {
  Ordinal t = add(x, Ordinal(1));
  if (t < a) t = a;
  switch (kind) {
    case PieceKind::Full:
      return t < b ? std::optional<Ordinal>(t) : std::nullopt;
    case PieceKind::Singleton:
      return a > x ? std::optional<Ordinal>(a) : std::nullopt;
    case PieceKind::SuccessorsOnly: {
      Ordinal v = ceil_successor(t);
      return v < b ? std::optional<Ordinal>(v) : std::nullopt;
    }
    case PieceKind::LimitsOnly: {
      Ordinal v = ceil_limit(t);
      return v < b ? std::optional<Ordinal>(v) : std::nullopt;
    }
    case PieceKind::OffsetClass: {
      Ordinal v = ceil_offset(t, k);
      return v < b ? std::optional<Ordinal>(v) : std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Piece::Sup> Piece::sup_below(const Ordinal& x) const {
  switch (kind) {
    case PieceKind::Full: {
      if (x <= a) return std::nullopt;
      Ordinal m = std::min(b, x, [](const Ordinal& p, const Ordinal& q) { return p < q; });
      if (m <= a) return std::nullopt;
      if (m.is_successor()) return Sup{m.pred(), true};
      return Sup{m, false};
    }
    case PieceKind::Singleton:
      return a < x ? std::optional<Sup>(Sup{a, true}) : std::nullopt;
    case PieceKind::SuccessorsOnly: {
      Ordinal m = std::min(b, x, [](const Ordinal& p, const Ordinal& q) { return p < q; });
      auto f = first();
      if (!f || *f >= m) return std::nullopt;
      if (m.is_limit()) return Sup{m, false};
      Ordinal v = m.pred();
      return Sup{v, classify(v) == CofClass::Successor};
    }
    case PieceKind::LimitsOnly: {
      Ordinal m = std::min(b, x, [](const Ordinal& p, const Ordinal& q) { return p < q; });
      auto f = first();
      if (!f || *f >= m) return std::nullopt;
      if (m.is_successor() || m.finite_part() > 0) {
        // largest limit ≤ m is limit_part(m)
        return Sup{m.limit_part(), true};
      }
      // m is a limit; limits below are cofinal unless m = prefix + ω·c.
      if (last_unit_is_omega(m)) return Sup{drop_one_omega(m), true};
      return Sup{m, false};
    }
    case PieceKind::OffsetClass: {
      Ordinal m = std::min(b, x, [](const Ordinal& p, const Ordinal& q) { return p < q; });
      auto f = first();
      if (!f || *f >= m) return std::nullopt;
      Ordinal lm = m.limit_part();
      uint64_t km = m.finite_part();
      if (km > k) return Sup{add(lm, Ordinal(k)), true};
      // members have μ < lm
      if (lm.is_zero()) return std::nullopt;
      if (last_unit_is_omega(lm)) return Sup{add(drop_one_omega(lm), Ordinal(k)), true};
      return Sup{lm, false};
    }
  }
  return std::nullopt;
}

bool operator==(const Piece& p, const Piece& q) {
  return p.kind == q.kind && p.a == q.a && (p.kind == PieceKind::Singleton || p.b == q.b) &&
         (p.kind != PieceKind::OffsetClass || p.k == q.k);
}

// ---------------------------------------------------------------------------
// Points

std::string Point::str() const {
  switch (kind) {
    case PointKind::OrdPoint:
      return ord.str();
    case PointKind::Pair:
      return "<" + first->str() + "," + second->str() + ">";
    case PointKind::LongPoint:
      return "<" + ord.str() + "," + q.str() + ">";
    case PointKind::LongInfinity:
      return "inf";
    case PointKind::Rat:
      return q.str();
  }
  return "?";
}

bool operator==(const Point& a, const Point& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case PointKind::OrdPoint:
      return a.ord == b.ord;
    case PointKind::Pair:
      return *a.first == *b.first && *a.second == *b.second;
    case PointKind::LongPoint:
      return a.ord == b.ord && a.q == b.q;
    case PointKind::LongInfinity:
      return true;
    case PointKind::Rat:
      return a.q == b.q;
  }
  return false;
}

Cmp point_cmp(const Point& a, const Point& b) {
  if (a.kind == PointKind::LongInfinity || b.kind == PointKind::LongInfinity) {
    bool ai = a.kind == PointKind::LongInfinity, bi = b.kind == PointKind::LongInfinity;
    if (ai && bi) return Cmp::EQ;
    if ((ai && b.kind != PointKind::LongPoint) || (bi && a.kind != PointKind::LongPoint))
      throw DomainError("incomparable point shapes");
    return ai ? Cmp::GT : Cmp::LT;
  }
  if (a.kind != b.kind) throw DomainError("incomparable point shapes");
  switch (a.kind) {
    case PointKind::OrdPoint:
      return cmp(a.ord, b.ord);
    case PointKind::Rat: {
      int c = rat_cmp(a.q, b.q);
      return c < 0 ? Cmp::LT : c > 0 ? Cmp::GT : Cmp::EQ;
    }
    case PointKind::LongPoint: {
      Cmp c = cmp(a.ord, b.ord);
      if (c != Cmp::EQ) return c;
      int r = rat_cmp(a.q, b.q);
      return r < 0 ? Cmp::LT : r > 0 ? Cmp::GT : Cmp::EQ;
    }
    case PointKind::Pair: {
      Cmp c = point_cmp(*a.first, *b.first);
      if (c != Cmp::EQ) return c;
      return point_cmp(*a.second, *b.second);
    }
    default:
      throw DomainError("incomparable point shapes");
  }
}

// ---------------------------------------------------------------------------
// Rules

bool operator==(const Pred& a, const Pred& b) { return a.target == b.target && a.cls == b.cls; }
bool operator==(const Rule& a, const Rule& b) { return a.kind == b.kind && a.pred == b.pred; }

std::string to_string(SideClass c) {
  switch (c) {
    case SideClass::Empty: return "Empty";
    case SideClass::Neighbor: return "Neighbor";
    case SideClass::Countable: return "Countable";
    case SideClass::Uncountable: return "Uncountable";
  }
  return "?";
}

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

// ---------------------------------------------------------------------------
// Space descriptions

SpaceDesc SpaceDesc::ordinal_sub(Ordinal bound, std::vector<Piece> pieces) {
  for (size_t i = 0; i < pieces.size(); ++i) {
    const Piece& p = pieces[i];
    if (p.kind != PieceKind::Singleton && !(p.a < p.b))
      throw DomainError("piece with empty range [a,b)");
    if (p.kind == PieceKind::OffsetClass && p.k == 0)
      throw DomainError("OffsetClass requires k >= 1");
    if (!(p.range_lo() < bound)) throw DomainError("piece endpoint not below bound");
    if (p.range_hi() > bound) throw DomainError("piece range exceeds bound");
    if (i + 1 < pieces.size() && !(p.range_hi() <= pieces[i + 1].range_lo()))
      throw DomainError("pieces must have disjoint, increasing ranges");
  }
  SpaceDesc s;
  s.kind_ = SpaceKind::OrdinalSub;
  s.bound_ = std::move(bound);
  s.pieces_ = std::move(pieces);
  return s;
}

SpaceDesc SpaceDesc::lex_product(SpaceDesc first, SpaceDesc second) {
  if (first.kind() == SpaceKind::GoSpace || second.kind() == SpaceKind::GoSpace)
    throw DomainError("LexProduct factors must be LOTS descriptions");
  if (first.is_empty() || second.is_empty())
    throw DomainError("LexProduct factors must be nonempty");
  SpaceDesc s;
  s.kind_ = SpaceKind::LexProduct;
  s.first_ = std::make_shared<const SpaceDesc>(std::move(first));
  s.second_ = std::make_shared<const SpaceDesc>(std::move(second));
  return s;
}

SpaceDesc SpaceDesc::long_segment(Ordinal kappa) {
  SpaceDesc s;
  s.kind_ = SpaceKind::LongSegment;
  s.bound_ = std::move(kappa);
  return s;
}

SpaceDesc SpaceDesc::rational_segment(bool has_min, bool has_max) {
  SpaceDesc s;
  s.kind_ = SpaceKind::RationalSegment;
  s.has_min_ = has_min;
  s.has_max_ = has_max;
  return s;
}

SpaceDesc SpaceDesc::real_line() {
  SpaceDesc s;
  s.kind_ = SpaceKind::RealLine;
  return s;
}

SpaceDesc SpaceDesc::go_space(SpaceDesc base, RuleSet rules) {
  SpaceDesc s;
  s.kind_ = SpaceKind::GoSpace;
  if (base.kind() == SpaceKind::GoSpace) {
    // Flatten: merge rule sets, deduplicating.
    RuleSet merged = base.rules();
    for (const auto& r : rules) {
      if (std::find(merged.begin(), merged.end(), r) == merged.end()) merged.push_back(r);
    }
    s.first_ = base.first_;
    s.rules_ = std::move(merged);
  } else {
    s.first_ = std::make_shared<const SpaceDesc>(std::move(base));
    s.rules_ = std::move(rules);
  }
  return s;
}

bool SpaceDesc::is_empty() const {
  switch (kind_) {
    case SpaceKind::OrdinalSub:
      for (const auto& p : pieces_)
        if (p.first()) return false;
      return true;
    case SpaceKind::LexProduct:
      return first_->is_empty() || second_->is_empty();
    case SpaceKind::GoSpace:
      return first_->is_empty();
    default:
      return false;
  }
}

std::string SpaceDesc::str() const {
  switch (kind_) {
    case SpaceKind::OrdinalSub: {
      std::string out = "OrdinalSub(" + bound_.str() + ";";
      for (const auto& p : pieces_) {
        switch (p.kind) {
          case PieceKind::Full: out += " Full[" + p.a.str() + "," + p.b.str() + ")"; break;
          case PieceKind::Singleton: out += " {" + p.a.str() + "}"; break;
          case PieceKind::SuccessorsOnly: out += " Succ[" + p.a.str() + "," + p.b.str() + ")"; break;
          case PieceKind::LimitsOnly: out += " Lim[" + p.a.str() + "," + p.b.str() + ")"; break;
          case PieceKind::OffsetClass:
            out += " Off" + std::to_string(p.k) + "[" + p.a.str() + "," + p.b.str() + ")";
            break;
        }
      }
      return out + ")";
    }
    case SpaceKind::LexProduct:
      return first_->str() + " x_l " + second_->str();
    case SpaceKind::LongSegment:
      return "LongSegment(" + bound_.str() + ")";
    case SpaceKind::RationalSegment:
      return std::string("RationalSegment(") + (has_min_ ? "min" : "-") + "," +
             (has_max_ ? "max" : "-") + ")";
    case SpaceKind::RealLine:
      return "RealLine";
    case SpaceKind::GoSpace:
      return "GoSpace(" + first_->str() + ", " + std::to_string(rules_.size()) + " rules)";
  }
  return "?";
}

bool operator==(const SpaceDesc& a, const SpaceDesc& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case SpaceKind::OrdinalSub:
      return a.bound() == b.bound() && a.pieces() == b.pieces();
    case SpaceKind::LexProduct:
      return a.first() == b.first() && a.second() == b.second();
    case SpaceKind::LongSegment:
      return a.kappa() == b.kappa();
    case SpaceKind::RationalSegment:
      return a.has_min_flag() == b.has_min_flag() && a.has_max_flag() == b.has_max_flag();
    case SpaceKind::RealLine:
      return true;
    case SpaceKind::GoSpace:
      return a.base() == b.base() && a.rules() == b.rules();
  }
  return false;
}

bool contains(const SpaceDesc& s, const Point& p) {
  switch (s.kind()) {
    case SpaceKind::OrdinalSub: {
      if (p.kind != PointKind::OrdPoint) throw DomainError("OrdinalSub expects an OrdPoint");
      if (!(p.ord < s.bound())) return false;
      for (const auto& piece : s.pieces())
        if (piece.member(p.ord)) return true;
      return false;
    }
    case SpaceKind::LexProduct: {
      if (p.kind != PointKind::Pair) throw DomainError("LexProduct expects a Pair point");
      return contains(s.first(), *p.first) && contains(s.second(), *p.second);
    }
    case SpaceKind::LongSegment: {
      if (p.kind == PointKind::LongInfinity) return true;
      if (p.kind != PointKind::LongPoint)
        throw DomainError("LongSegment expects a LongPoint or LongInfinity");
      return p.ord < s.kappa() && p.q >= Rational(0) && p.q < Rational(1);
    }
    case SpaceKind::RationalSegment: {
      if (p.kind != PointKind::Rat) throw DomainError("RationalSegment expects a Rat point");
      if (p.q < Rational(0) || p.q > Rational(1)) return false;
      if (p.q == Rational(0)) return s.has_min_flag();
      if (p.q == Rational(1)) return s.has_max_flag();
      return true;
    }
    case SpaceKind::RealLine: {
      if (p.kind != PointKind::Rat) throw DomainError("RealLine expects a Rat point");
      return true;
    }
    case SpaceKind::GoSpace:
      return contains(s.base(), p);
  }
  return false;
}

std::optional<Ordinal> ordsub_min_above(const SpaceDesc& s, const Ordinal& x) {
  std::optional<Ordinal> best;
  for (const auto& p : s.pieces()) {
    auto v = p.min_above(x);
    if (v && *v < s.bound() && (!best || *v < *best)) best = v;
  }
  return best;
}

std::optional<Piece::Sup> ordsub_sup_below(const SpaceDesc& s, const Ordinal& x) {
  std::optional<Piece::Sup> best;
  for (const auto& p : s.pieces()) {
    auto v = p.sup_below(x);
    if (!v) continue;
    if (!best || best->value < v->value || (best->value == v->value && v->attained))
      best = v;
  }
  return best;
}

std::optional<Ordinal> ordsub_min(const SpaceDesc& s) {
  std::optional<Ordinal> best;
  for (const auto& p : s.pieces()) {
    auto v = p.first();
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

std::optional<Piece::Sup> ordsub_sup(const SpaceDesc& s) {
  return ordsub_sup_below(s, s.bound());
}

std::vector<Ordinal> ordinal_mesh(const Ordinal& lo, const Ordinal& hi, uint64_t coeff_cap,
                                  size_t cap) {
  std::vector<Ordinal> out;
  Ordinal w = Ordinal::omega();
  Ordinal w2 = Ordinal::omega_pow(Ordinal(2));
  Ordinal w3 = Ordinal::omega_pow(Ordinal(3));
  for (uint64_t c3 = 0; c3 <= coeff_cap; ++c3)
    for (uint64_t c2 = 0; c2 <= coeff_cap; ++c2)
      for (uint64_t c1 = 0; c1 <= coeff_cap; ++c1)
        for (uint64_t c0 = 0; c0 <= coeff_cap; ++c0) {
          Ordinal x = add(add(add(mul(w3, Ordinal(c3)), mul(w2, Ordinal(c2))), mul(w, Ordinal(c1))),
                          Ordinal(c0));
          if (x >= lo && x < hi) {
            out.push_back(x);
            if (out.size() > cap) throw DomainError("ordinal mesh exceeds materialization cap");
          }
        }
  std::sort(out.begin(), out.end(), [](const Ordinal& p, const Ordinal& q) { return p < q; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw DomainError("bad rational: " + text);
  }
}

}  // namespace ordtop
