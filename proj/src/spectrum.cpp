#include "ordtop/spectrum.hpp"

#include <algorithm>

namespace ordtop {

namespace {

SideClass cof_side(const Ordinal& x) {
  switch (classify(x)) {
    case CofClass::CountableCof: return SideClass::Countable;
    case CofClass::UncountableCof: return SideClass::Uncountable;
    default: throw DomainError("cof_side on a non-limit");
  }
}

// Rules matching the base characters of a point/class.
bool rules_cut(const RuleSet& rules, const SideCharacter& base, Side side) {
  for (const auto& r : rules) {
    if (!r.pred.matches(base)) continue;
    if (side == Side::Left ? r.cuts_left() : r.cuts_right()) return true;
  }
  return false;
}

SideInfo apply_cut(SideInfo info, bool cut) {
  if (cut && (info.cls == SideClass::Countable || info.cls == SideClass::Uncountable))
    return SideInfo{SideClass::Neighbor, false};
  return info;
}

SideInfo side_info_lots(const SpaceDesc& s, const Point& p, Side side);

// Left/right character of a lex pair, composing fiber and first-factor data.
SideInfo lex_side(const SpaceDesc& A, const SpaceDesc& B, const Point& pa, const Point& pb,
                  Side side) {
  SideInfo fiber = side_info_lots(B, pb, side);
  if (fiber.cls != SideClass::Empty) return fiber;
  SideInfo af = side_info_lots(A, pa, side);
  switch (af.cls) {
    case SideClass::Empty:
      return SideInfo{SideClass::Empty, false};
    case SideClass::Countable:
    case SideClass::Uncountable:
      return SideInfo{af.cls, false};
    case SideClass::Neighbor: {
      if (!af.attained) return SideInfo{SideClass::Neighbor, false};  // ambient gap
      // Immediate neighbor fiber: compose with the far end of the fiber.
      EndInfo far = end_info(B, side == Side::Left ? Side::Right : Side::Left);
      if (far.attained) return SideInfo{SideClass::Neighbor, true};
      return SideInfo{far.cls, false};
    }
  }
  return SideInfo{};
}

SideInfo side_info_lots(const SpaceDesc& s, const Point& p, Side side) {
  switch (s.kind()) {
    case SpaceKind::OrdinalSub: {
      const Ordinal& x = p.ord;
      if (side == Side::Right) {
        auto above = ordsub_min_above(s, x);
        if (!above) return SideInfo{SideClass::Empty, false};
        return SideInfo{SideClass::Neighbor, true};
      }
      auto sup = ordsub_sup_below(s, x);
      if (!sup) return SideInfo{SideClass::Empty, false};
      if (sup->value < x) return SideInfo{SideClass::Neighbor, sup->attained};
      return SideInfo{cof_side(x), false};
    }
    case SpaceKind::RationalSegment: {
      if (side == Side::Left)
        return p.q == Rational(0) ? SideInfo{SideClass::Empty, false}
                                  : SideInfo{SideClass::Countable, false};
      return p.q == Rational(1) ? SideInfo{SideClass::Empty, false}
                                : SideInfo{SideClass::Countable, false};
    }
    case SpaceKind::RealLine:
      return SideInfo{SideClass::Countable, false};
    case SpaceKind::LongSegment: {
      const Ordinal& kappa = s.kappa();
      if (p.kind == PointKind::LongInfinity) {
        if (side == Side::Right) return SideInfo{SideClass::Empty, false};
        if (kappa.is_zero()) return SideInfo{SideClass::Empty, false};
        if (kappa.is_successor()) return SideInfo{SideClass::Countable, false};
        return SideInfo{cof_side(kappa), false};
      }
      if (side == Side::Right) return SideInfo{SideClass::Countable, false};
      if (p.q > Rational(0)) return SideInfo{SideClass::Countable, false};
      if (p.ord.is_zero()) return SideInfo{SideClass::Empty, false};
      if (p.ord.is_successor()) return SideInfo{SideClass::Countable, false};
      return SideInfo{cof_side(p.ord), false};
    }
    case SpaceKind::LexProduct:
      return lex_side(s.first(), s.second(), *p.first, *p.second, side);
    case SpaceKind::GoSpace:
      throw DomainError("side_info_lots on a GoSpace");
  }
  return SideInfo{};
}

}  // namespace

EndInfo end_info(const SpaceDesc& s, Side side) {
  switch (s.kind()) {
    case SpaceKind::OrdinalSub: {
      EndInfo e;
      if (side == Side::Left) {
        auto m = ordsub_min(s);
        if (!m) throw DomainError("end_info of an empty space");
        e.attained = true;
        e.endpoint = Point::ordinal(*m);
        return e;
      }
      auto sup = ordsub_sup(s);
      if (!sup) throw DomainError("end_info of an empty space");
      if (sup->attained) {
        e.attained = true;
        e.endpoint = Point::ordinal(sup->value);
      } else {
        e.cls = cof_side(sup->value);
        e.boundary_ord = sup->value;
      }
      return e;
    }
    case SpaceKind::RationalSegment: {
      EndInfo e;
      bool flag = side == Side::Left ? s.has_min_flag() : s.has_max_flag();
      Rational edge = side == Side::Left ? Rational(0) : Rational(1);
      if (flag) {
        e.attained = true;
        e.endpoint = Point::rat(edge);
      } else {
        e.cls = SideClass::Countable;
        e.boundary_rat = edge;
      }
      return e;
    }
    case SpaceKind::RealLine: {
      EndInfo e;
      e.cls = SideClass::Countable;
      return e;
    }
    case SpaceKind::LongSegment: {
      EndInfo e;
      e.attained = true;
      if (side == Side::Right) {
        e.endpoint = Point::long_infinity();
      } else {
        e.endpoint = s.kappa().is_zero() ? Point::long_infinity()
                                         : Point::long_point(Ordinal(), Rational(0));
      }
      return e;
    }
    case SpaceKind::LexProduct: {
      EndInfo ea = end_info(s.first(), side);
      if (!ea.attained) return ea;
      EndInfo eb = end_info(s.second(), side);
      if (!eb.attained) return eb;
      EndInfo e;
      e.attained = true;
      e.endpoint = Point::pair(*ea.endpoint, *eb.endpoint);
      return e;
    }
    case SpaceKind::GoSpace:
      return end_info(s.base(), side);
  }
  return EndInfo{};
}

SideInfo side_info(const SpaceDesc& s, const Point& p, Side side) {
  if (!contains(s, p)) throw DomainError("point " + p.str() + " not in space " + s.str());
  if (s.kind() != SpaceKind::GoSpace) return side_info_lots(s, p, side);
  const SpaceDesc& base = s.base();
  SideInfo li = side_info_lots(base, p, Side::Left);
  SideInfo ri = side_info_lots(base, p, Side::Right);
  SideCharacter ch{li.cls, ri.cls};
  bool cut = rules_cut(s.rules(), ch, side);
  return apply_cut(side == Side::Left ? li : ri, cut);
}

SideClass side_character(const SpaceDesc& s, const Point& p, Side side) {
  return side_info(s, p, side).cls;
}

SideCharacter side_characters(const SpaceDesc& s, const Point& p) {
  return SideCharacter{side_info(s, p, Side::Left).cls, side_info(s, p, Side::Right).cls};
}

std::optional<Point> next_point_above(const SpaceDesc& s, const Point& p) {
  switch (s.kind()) {
    case SpaceKind::OrdinalSub: {
      auto v = ordsub_min_above(s, p.ord);
      if (!v) return std::nullopt;
      return Point::ordinal(*v);
    }
    case SpaceKind::RationalSegment:
    case SpaceKind::RealLine:
    case SpaceKind::LongSegment:
      return std::nullopt;  // dense (or top) — no immediate successor
    case SpaceKind::LexProduct: {
      auto inner = next_point_above(s.second(), *p.second);
      if (inner) return Point::pair(*p.first, *inner);
      EndInfo top = end_info(s.second(), Side::Right);
      if (!top.attained || !(*top.endpoint == *p.second)) return std::nullopt;
      auto outer = next_point_above(s.first(), *p.first);
      if (!outer) return std::nullopt;
      EndInfo bot = end_info(s.second(), Side::Left);
      if (!bot.attained) return std::nullopt;
      return Point::pair(*outer, *bot.endpoint);
    }
    case SpaceKind::GoSpace:
      return next_point_above(s.base(), p);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Spectrum

namespace {

std::string sub_name(SubClass s) {
  switch (s) {
    case SubClass::First: return "first";
    case SubClass::Last: return "last";
    case SubClass::Single: return "pt";
    case SubClass::FullSucc: return "int.succ";
    case SubClass::FullLimCt: return "int.lim.ct";
    case SubClass::FullLimUnc: return "int.lim.unc";
    case SubClass::SuccOff1: return "int.off1";
    case SubClass::SuccOffK: return "int.offk";
    case SubClass::OffsetInt: return "int.off";
    case SubClass::LimNbr: return "int.lim.nbr";
    case SubClass::LimCt: return "int.limlim.ct";
    case SubClass::LimUnc: return "int.limlim.unc";
    case SubClass::Origin: return "origin";
    case SubClass::SuccBottom: return "succ-bottom";
    case SubClass::Generic: return "generic";
    case SubClass::LimBottomCt: return "lim-bottom.ct";
    case SubClass::LimBottomUnc: return "lim-bottom.unc";
    case SubClass::Infinity: return "infinity";
    case SubClass::MinPt: return "min";
    case SubClass::MaxPt: return "max";
    default: return "?";
  }
}

std::string piece_key(size_t i, SubClass sub) {
  char buf[8];
  snprintf(buf, sizeof buf, "p%02zu.", i);
  return std::string(buf) + sub_name(sub);
}

// Greatest member of a piece, when one exists.
std::optional<Ordinal> piece_last(const Piece& p) {
  switch (p.kind) {
    case PieceKind::Full:
      return p.b.is_successor() ? std::optional<Ordinal>(p.b.pred()) : std::nullopt;
    case PieceKind::Singleton:
      return p.a;
    case PieceKind::SuccessorsOnly: {
      if (p.b.is_limit()) return std::nullopt;
      Ordinal v = p.b.pred();
      if (classify(v) == CofClass::Successor && p.member(v)) return v;
      return std::nullopt;
    }
    case PieceKind::LimitsOnly: {
      auto sup = p.sup_below(p.b);
      if (sup && sup->attained) return sup->value;
      return std::nullopt;
    }
    case PieceKind::OffsetClass: {
      auto sup = p.sup_below(p.b);
      if (sup && sup->attained) return sup->value;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

void push_class(Spectrum& out, const SpaceDesc& s, std::string key, std::string desc,
                Point witness, int piece, SubClass sub) {
  PointClass c;
  c.key = std::move(key);
  c.desc = std::move(desc);
  c.left = side_info(s, witness, Side::Left);
  c.right = side_info(s, witness, Side::Right);
  c.witness = std::move(witness);
  c.piece = piece;
  c.sub = sub;
  out.push_back(std::move(c));
}

Spectrum spectrum_ordsub(const SpaceDesc& s) {
  Spectrum out;
  const auto& pieces = s.pieces();
  for (size_t i = 0; i < pieces.size(); ++i) {
    const Piece& p = pieces[i];
    auto f = p.first();
    if (!f) continue;
    if (p.kind == PieceKind::Singleton) {
      push_class(out, s, piece_key(i, SubClass::Single), "{" + p.a.str() + "}",
                 Point::ordinal(p.a), static_cast<int>(i), SubClass::Single);
      continue;
    }
    auto l = piece_last(p);
    if (l && *l == *f) l = std::nullopt;  // one-element piece: first covers it
    push_class(out, s, piece_key(i, SubClass::First), "least member " + f->str(),
               Point::ordinal(*f), static_cast<int>(i), SubClass::First);

    auto interior_ok = [&](const Ordinal& w) {
      return p.member(w) && *f < w && (!l || w < *l);
    };
    auto add_interior = [&](SubClass sub, const Ordinal& w, const std::string& desc) {
      if (interior_ok(w))
        push_class(out, s, piece_key(i, sub), desc, Point::ordinal(w), static_cast<int>(i), sub);
    };

    switch (p.kind) {
      case PieceKind::Full:
        add_interior(SubClass::FullSucc, add(*f, Ordinal(1)), "interior successors");
        add_interior(SubClass::FullLimCt, add(*f, Ordinal::omega()),
                     "interior limits of countable cofinality");
        add_interior(SubClass::FullLimUnc, add(*f, Ordinal::Omega()),
                     "interior limits of uncountable cofinality");
        break;
      case PieceKind::SuccessorsOnly:
        add_interior(SubClass::SuccOff1, add(add(*f, Ordinal::omega()), Ordinal(1)),
                     "interior points at offset 1 from a limit");
        add_interior(SubClass::SuccOffK, add(*f, Ordinal(1)),
                     "interior points at offset >= 2 from a limit");
        break;
      case PieceKind::LimitsOnly:
        add_interior(SubClass::LimNbr, add(*f, Ordinal::omega()),
                     "interior limits with gap left approach");
        add_interior(SubClass::LimCt, add(*f, Ordinal::omega_pow(Ordinal(2))),
                     "interior limits of limits, countable cofinality");
        add_interior(SubClass::LimUnc, add(*f, Ordinal::Omega()),
                     "interior limits of uncountable cofinality");
        break;
      case PieceKind::OffsetClass:
        add_interior(SubClass::OffsetInt, add(add(*f, Ordinal::omega()), Ordinal(p.k)),
                     "interior offset points");
        break;
      default:
        break;
    }

    if (l)
      push_class(out, s, piece_key(i, SubClass::Last), "greatest member " + l->str(),
                 Point::ordinal(*l), static_cast<int>(i), SubClass::Last);
  }
  return out;
}

Spectrum spectrum_long(const SpaceDesc& s) {
  Spectrum out;
  const Ordinal& kappa = s.kappa();
  if (!kappa.is_zero()) {
    push_class(out, s, "origin", "<0,0>", Point::long_point(Ordinal(), Rational(0)), -1,
               SubClass::Origin);
    if (Ordinal(1) < kappa)
      push_class(out, s, "succ-bottom", "<a+1,0> fiber bottoms",
                 Point::long_point(Ordinal(1), Rational(0)), -1, SubClass::SuccBottom);
    push_class(out, s, "generic", "<a,q>, q>0", Point::long_point(Ordinal(), Rational(1, 2)), -1,
               SubClass::Generic);
    if (Ordinal::omega() < kappa)
      push_class(out, s, "lim-bottom.ct", "<l,0>, countable cofinality",
                 Point::long_point(Ordinal::omega(), Rational(0)), -1, SubClass::LimBottomCt);
    if (Ordinal::Omega() < kappa)
      push_class(out, s, "lim-bottom.unc", "<l,0>, uncountable cofinality",
                 Point::long_point(Ordinal::Omega(), Rational(0)), -1, SubClass::LimBottomUnc);
  }
  push_class(out, s, "infinity", "adjoined top", Point::long_infinity(), -1, SubClass::Infinity);
  return out;
}

Spectrum spectrum_rat(const SpaceDesc& s) {
  Spectrum out;
  if (s.has_min_flag())
    push_class(out, s, "min", "left endpoint", Point::rat(Rational(0)), -1, SubClass::MinPt);
  push_class(out, s, "generic", "interior rationals", Point::rat(Rational(1, 2)), -1,
             SubClass::Generic);
  if (s.has_max_flag())
    push_class(out, s, "max", "right endpoint", Point::rat(Rational(1)), -1, SubClass::MaxPt);
  return out;
}

Spectrum spectrum_real(const SpaceDesc& s) {
  Spectrum out;
  push_class(out, s, "generic", "points of the real line", Point::rat(Rational(0)), -1,
             SubClass::Generic);
  return out;
}

Spectrum spectrum_lex(const SpaceDesc& s) {
  Spectrum out;
  Spectrum sa = character_spectrum(s.first());
  Spectrum sb = character_spectrum(s.second());
  for (const auto& ca : sa) {
    for (const auto& cb : sb) {
      PointClass c;
      c.key = "(" + ca.key + ")x(" + cb.key + ")";
      c.desc = ca.desc + " x " + cb.desc;
      Point w = Point::pair(ca.witness, cb.witness);
      c.left = side_info(s, w, Side::Left);
      c.right = side_info(s, w, Side::Right);
      c.witness = std::move(w);
      c.sub = SubClass::LexPair;
      c.first_key = ca.key;
      c.second_key = cb.key;
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

Spectrum character_spectrum(const SpaceDesc& s) {
  switch (s.kind()) {
    case SpaceKind::OrdinalSub:
      return spectrum_ordsub(s);
    case SpaceKind::LongSegment:
      return spectrum_long(s);
    case SpaceKind::RationalSegment:
      return spectrum_rat(s);
    case SpaceKind::RealLine:
      return spectrum_real(s);
    case SpaceKind::LexProduct:
      return spectrum_lex(s);
    case SpaceKind::GoSpace: {
      Spectrum base = character_spectrum(s.base());
      for (auto& c : base) {
        SideCharacter ch = c.chars();
        c.cut_left = rules_cut(s.rules(), ch, Side::Left);
        c.cut_right = rules_cut(s.rules(), ch, Side::Right);
        c.left = apply_cut(c.left, c.cut_left);
        c.right = apply_cut(c.right, c.cut_right);
      }
      return base;
    }
  }
  return {};
}

bool first_countable(const SpaceDesc& s) {
  for (const auto& c : character_spectrum(s)) {
    if (c.left.cls == SideClass::Uncountable || c.right.cls == SideClass::Uncountable)
      return false;
  }
  return true;
}

SpaceDesc apply_rules(const SpaceDesc& s, const RuleSet& rules) {
  return SpaceDesc::go_space(s, rules);
}

bool is_coarser(const SpaceDesc& a, const SpaceDesc& b) {
  if (a.lots() != b.lots())
    throw DomainError("is_coarser requires the same underlying ordered set");
  Spectrum base = character_spectrum(a.lots());
  auto effective = [&](const SpaceDesc& sp, const PointClass& c, Side side) {
    if (sp.kind() != SpaceKind::GoSpace) return false;
    SideClass cls = side == Side::Left ? c.left.cls : c.right.cls;
    if (cls != SideClass::Countable && cls != SideClass::Uncountable) return false;
    return rules_cut(sp.rules(), c.chars(), side);
  };
  for (const auto& c : base) {
    if (effective(a, c, Side::Left) && !effective(b, c, Side::Left)) return false;
    if (effective(a, c, Side::Right) && !effective(b, c, Side::Right)) return false;
  }
  return true;
}

bool rule_set_cuts(const RuleSet& rules, const SideCharacter& base_chars, Side side) {
  return rules_cut(rules, base_chars, side);
}

std::vector<SideCharacter> spectrum_char_set(const Spectrum& sp) {
  std::vector<SideCharacter> out;
  for (const auto& c : sp) out.push_back(c.chars());
  std::sort(out.begin(), out.end(), [](const SideCharacter& x, const SideCharacter& y) {
    if (x.left != y.left) return x.left < y.left;
    return x.right < y.right;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ordtop
