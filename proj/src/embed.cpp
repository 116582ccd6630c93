#include "ordtop/embed.hpp"

#include <algorithm>

namespace ordtop {

namespace {

void require_ordsub(const SpaceDesc& s, const char* who) {
  if (s.kind() != SpaceKind::OrdinalSub)
    throw DomainError(std::string(who) + " requires an OrdinalSub");
}

Ordinal piece_len(const Piece& p) { return diff(p.a, p.range_hi()); }

// Order type of the successor ordinals below x.
Ordinal type_succ_below(const Ordinal& x) {
  Ordinal lambda = x.limit_part();
  uint64_t k = x.finite_part();
  return k >= 1 ? add(lambda, Ordinal(k - 1)) : lambda;
}

// Order type of the limit ordinals below x.
Ordinal type_lim_below(const Ordinal& x) {
  Ordinal rho = x.div_omega();
  uint64_t k = x.finite_part();
  if (rho.is_zero()) return Ordinal();
  Ordinal base = diff(Ordinal(1), rho);
  return k >= 1 ? add(base, Ordinal(1)) : base;
}

// Order type of the μ+k points (μ limit or zero) below x.
Ordinal type_offset_below(const Ordinal& x, uint64_t k) {
  Ordinal rho = x.div_omega();
  uint64_t r = x.finite_part();
  return r > k ? add(rho, Ordinal(1)) : rho;
}

Ordinal piece_order_type(const Piece& p) {
  switch (p.kind) {
    case PieceKind::Full:
      return diff(p.a, p.b);
    case PieceKind::Singleton:
      return Ordinal(1);
    case PieceKind::SuccessorsOnly:
      return diff(type_succ_below(p.a), type_succ_below(p.b));
    case PieceKind::LimitsOnly:
      return diff(type_lim_below(p.a), type_lim_below(p.b));
    case PieceKind::OffsetClass:
      return diff(type_offset_below(p.a, p.k), type_offset_below(p.b, p.k));
  }
  return Ordinal();
}

// Translate pieces upward by a limit (or zero) offset.
std::vector<Piece> shift_pieces(const std::vector<Piece>& pieces, const Ordinal& delta) {
  if (delta.finite_part() != 0)
    throw DomainError("piece shift offset must be a limit or zero");
  std::vector<Piece> out;
  for (const auto& p : pieces) {
    Piece q = p;
    q.a = add(delta, p.a);
    if (p.kind != PieceKind::Singleton) q.b = add(delta, p.b);
    // A LimitsOnly piece starting at 0 must not absorb the new base point,
    // which becomes a limit after the shift.
    if (p.kind == PieceKind::LimitsOnly && p.a.is_zero() && !delta.is_zero())
      q.a = add(delta, Ordinal(1));
    out.push_back(std::move(q));
  }
  return out;
}

bool is_discrete(const SpaceDesc& s) {
  for (const auto& c : character_spectrum(s)) {
    if (c.left.cls == SideClass::Countable || c.left.cls == SideClass::Uncountable) return false;
    if (c.right.cls == SideClass::Countable || c.right.cls == SideClass::Uncountable) return false;
  }
  return true;
}

SpaceDesc canonical_discrete(const Ordinal& type) {
  Ordinal lambda = type.limit_part();
  uint64_t k = type.finite_part();
  std::vector<Piece> pieces;
  Ordinal bound;
  if (lambda.is_zero()) {
    if (k == 0) return SpaceDesc::ordinal_sub(Ordinal(), {});
    pieces.push_back(Piece::full(Ordinal(), Ordinal(k)));
    bound = Ordinal(k);
  } else {
    pieces.push_back(Piece::successors(Ordinal(), lambda));
    bound = lambda;
    if (k > 0) {
      Ordinal lo = add(lambda, Ordinal(1));
      bound = add(lo, Ordinal(k));
      pieces.push_back(Piece::full(lo, bound));
    }
  }
  return SpaceDesc::ordinal_sub(bound, std::move(pieces));
}

// Members of one spectrum class of an OrdinalSub, enumerated in order.
// Throws when the class is infinite or larger than the cap.
std::vector<Ordinal> enumerate_class(const SpaceDesc& s, const PointClass& c) {
  constexpr size_t kCap = 256;
  std::vector<Ordinal> out;
  const Piece& p = s.pieces()[static_cast<size_t>(c.piece)];
  switch (c.sub) {
    case SubClass::First:
    case SubClass::Last:
    case SubClass::Single:
      return {c.witness.ord};
    default:
      break;
  }
  auto f = p.first();
  auto l = [&]() -> std::optional<Ordinal> {
    auto sup = p.sup_below(p.range_hi());
    if (sup && sup->attained) return sup->value;
    return std::nullopt;
  }();
  if (!f) return {};
  Ordinal hi = l ? *l : p.range_hi();  // interior members are strictly below hi
  Ordinal t = c.witness.ord;           // least member of the class
  auto next = [&](const Ordinal& x) -> Ordinal {
    switch (c.sub) {
      case SubClass::FullSucc:
        return add(x, Ordinal(1));
      case SubClass::FullLimCt:
        return add(x, Ordinal::omega());
      case SubClass::FullLimUnc:
        return add(x, Ordinal::Omega());
      case SubClass::SuccOff1:
        return add(add(x, Ordinal::omega()), Ordinal(1));
      case SubClass::SuccOffK:
        return add(x, Ordinal(1));
      case SubClass::OffsetInt:
        return add(add(x, Ordinal::omega()), Ordinal(p.k));
      case SubClass::LimNbr:
        return add(x, Ordinal::omega());
      case SubClass::LimCt:
        return add(x, Ordinal::omega_pow(Ordinal(2)));
      case SubClass::LimUnc:
        return add(x, Ordinal::Omega());
      default:
        throw DomainError("class not enumerable");
    }
  };
  auto member_of_class = [&](const Ordinal& x) {
    if (!p.member(x) || !(x < hi)) return false;
    switch (c.sub) {
      case SubClass::FullLimCt:
        return classify(x) == CofClass::CountableCof;
      case SubClass::FullLimUnc:
        return classify(x) == CofClass::UncountableCof;
      case SubClass::SuccOff1:
        return x.finite_part() == 1;
      case SubClass::SuccOffK:
        return x.finite_part() >= 2;
      case SubClass::LimNbr: {
        const auto& u = x.units().back();
        return u.d == 0 && u.e.size() == 1 && u.e[0].d == 0 && u.e[0].e.empty() && u.e[0].c == 1;
      }
      case SubClass::LimCt:
        return classify(x) == CofClass::CountableCof &&
               !(x.units().back().d == 0 && x.units().back().e.size() == 1 &&
                 x.units().back().e[0].d == 0 && x.units().back().e[0].e.empty() &&
                 x.units().back().e[0].c == 1);
      case SubClass::LimUnc:
        return classify(x) == CofClass::UncountableCof;
      default:
        return true;
    }
  };
  while (t < hi) {
    if (member_of_class(t)) out.push_back(t);
    if (out.size() > kCap)
      throw DomainError("flagged class not expressible as pieces (too many points)");
    t = next(t);
  }
  return out;
}

Ordinal dbl(const Ordinal& x) { return mul(Ordinal(2), x); }

}  // namespace

Ordinal space_order_type(const SpaceDesc& s) {
  require_ordsub(s, "space_order_type");
  Ordinal acc;
  for (const auto& p : s.pieces()) acc = add(acc, piece_order_type(p));
  return acc;
}

SpaceDesc canonicalize_subspace(const SpaceDesc& s) {
  require_ordsub(s, "canonicalize_subspace");
  if (is_discrete(s)) return canonical_discrete(space_order_type(s));
  return s;
}

bool is_hered_paracompact(const SpaceDesc& s) {
  require_ordsub(s, "is_hered_paracompact");
  for (const auto& p : s.pieces()) {
    if (p.kind != PieceKind::Full && p.kind != PieceKind::LimitsOnly) continue;
    Ordinal len = piece_len(p);
    if (!len.is_zero() && len.units().front().d >= 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// reembed_double

SpaceDesc reembed_double(const SpaceDesc& g) {
  const SpaceDesc& base = g.lots();
  require_ordsub(base, "reembed_double");
  RuleSet rules = g.kind() == SpaceKind::GoSpace ? g.rules() : RuleSet{};
  for (const auto& r : rules) {
    if (r.kind == RuleKind::LeftRayWhere)
      throw DomainError("reembed_double requires left-isolating rules only");
  }
  Spectrum spec = character_spectrum(g.kind() == SpaceKind::GoSpace ? g : base);

  // Classes per piece, to recognize wholly flagged pieces that map as a
  // whole instead of point by point.
  std::vector<size_t> class_count(base.pieces().size(), 0);
  std::vector<size_t> flagged_class_count(base.pieces().size(), 0);
  for (const auto& c : spec) {
    if (c.piece < 0) continue;
    ++class_count[static_cast<size_t>(c.piece)];
    if (c.cut_left) ++flagged_class_count[static_cast<size_t>(c.piece)];
  }
  auto wholly_flagged = [&](size_t i) {
    if (class_count[i] == 0 || class_count[i] != flagged_class_count[i]) return false;
    PieceKind k = base.pieces()[i].kind;
    return k == PieceKind::LimitsOnly || k == PieceKind::OffsetClass ||
           k == PieceKind::Singleton;
  };

  // Flagged points per remaining piece, in increasing order.
  std::vector<std::vector<Ordinal>> flagged(base.pieces().size());
  for (const auto& c : spec) {
    if (!c.cut_left) continue;
    size_t i = static_cast<size_t>(c.piece);
    if (wholly_flagged(i)) continue;
    auto pts = enumerate_class(base, c);
    flagged[i].insert(flagged[i].end(), pts.begin(), pts.end());
  }
  for (auto& v : flagged)
    std::sort(v.begin(), v.end(), [](const Ordinal& a, const Ordinal& b) { return a < b; });

  std::vector<Piece> out;
  // The image of [lo, hi) ends at e(hi−1) for successor hi; doubling the raw
  // bound would append points past the image and shift the last member's
  // character.
  auto dbl_hi = [&](const Ordinal& hi) {
    return hi.is_successor() ? add(dbl(hi.pred()), Ordinal(1)) : dbl(hi);
  };
  auto emit_subrange = [&](const Piece& p, const Ordinal& lo, const Ordinal& hi) {
    if (!(lo < hi)) return;
    switch (p.kind) {
      case PieceKind::Full:
        out.push_back(Piece::full(dbl(lo), dbl_hi(hi)));
        break;
      case PieceKind::Singleton:
        out.push_back(Piece::singleton(dbl(lo)));
        break;
      case PieceKind::SuccessorsOnly:
        out.push_back(Piece::successors(dbl(lo), dbl_hi(hi)));
        break;
      case PieceKind::LimitsOnly:
        out.push_back(Piece::limits(dbl(lo), dbl_hi(hi)));
        break;
      case PieceKind::OffsetClass:
        out.push_back(Piece::offset(dbl(lo), dbl_hi(hi), 2 * p.k));
        break;
    }
  };

  for (size_t i = 0; i < base.pieces().size(); ++i) {
    const Piece& p = base.pieces()[i];
    if (wholly_flagged(i)) {
      switch (p.kind) {
        case PieceKind::Singleton:
          out.push_back(Piece::singleton(add(dbl(p.a), Ordinal(1))));
          break;
        case PieceKind::LimitsOnly: {
          // e maps every limit λ to λ+1; the image is an offset-1 class.
          Ordinal lo = p.a.is_zero() ? Ordinal::omega() : dbl(p.a);
          out.push_back(Piece::offset(lo, dbl(p.b), 1));
          break;
        }
        case PieceKind::OffsetClass:
          out.push_back(Piece::offset(dbl(p.a), dbl(p.b), 2 * p.k + 1));
          break;
        default:
          break;
      }
      continue;
    }
    if (p.kind == PieceKind::Singleton) {
      out.push_back(Piece::singleton(dbl(p.a)));
      continue;
    }
    Ordinal lo = p.a;
    for (const auto& x : flagged[i]) {
      emit_subrange(p, lo, x);
      out.push_back(Piece::singleton(add(dbl(x), Ordinal(1))));
      lo = add(x, Ordinal(1));
    }
    emit_subrange(p, lo, p.b);
  }

  Ordinal bound_out = add(dbl(base.bound()), Ordinal(1));
  SpaceDesc result = SpaceDesc::ordinal_sub(bound_out, std::move(out));
  // Classwise spectrum preservation is this operation's contract.
  auto before = spectrum_char_set(spec);
  auto after = spectrum_char_set(character_spectrum(result));
  if (before != after)
    throw DomainError("reembed_double failed to preserve the character set");
  return result;
}

// ---------------------------------------------------------------------------
// split_at_gaps

namespace {

// Re-base a run of pieces so its least member's limit part moves to 0.
SpaceDesc rebase_run(const std::vector<Piece>& run) {
  Ordinal mn = *run.front().first();
  for (const auto& p : run) {
    auto f = p.first();
    if (f && *f < mn) mn = *f;
  }
  Ordinal base = mn.limit_part();
  std::vector<Piece> out;
  for (const auto& p : run) {
    Piece q = p;
    Ordinal lo = p.a < base ? base : p.a;  // no members of the run lie below base
    q.a = diff(base, lo);
    if (p.kind != PieceKind::Singleton) q.b = diff(base, p.b);
    if (p.kind == PieceKind::LimitsOnly && q.a.is_zero() && !base.is_zero() && p.member(base)) {
      // The run starts at the limit `base` itself; keep it as an explicit
      // point since 0 is not a limit in the new coordinates.
      out.push_back(Piece::singleton(Ordinal()));
      q.a = Ordinal(1);
      if (!(q.a < q.b)) continue;
    }
    out.push_back(std::move(q));
  }
  Ordinal bound = out.back().range_hi();
  return SpaceDesc::ordinal_sub(bound, std::move(out));
}

}  // namespace

GapSplit split_at_gaps(const SpaceDesc& s) {
  require_ordsub(s, "split_at_gaps");
  if (!is_hered_paracompact(s))
    throw DomainError("split_at_gaps requires a hereditarily paracompact subspace");

  std::vector<Piece> pieces;
  for (const auto& p : s.pieces())
    if (p.first()) pieces.push_back(p);
  GapSplit out;
  if (pieces.empty()) return out;

  // A single successor/offset piece spanning Ω-degree length splits at its
  // internal Ω^d multiples, which are limits absent from the piece.
  if (pieces.size() == 1 &&
      (pieces[0].kind == PieceKind::SuccessorsOnly || pieces[0].kind == PieceKind::OffsetClass)) {
    const Piece& p = pieces[0];
    Ordinal len = piece_len(p);
    if (!len.is_zero() && len.units().front().d >= 1) {
      if (p.a.finite_part() != 0)
        throw DomainError("no gap decomposition exists in the representation");
      uint32_t d = len.units().front().d;
      Ordinal block = Ordinal::Omega_pow(d);
      Piece pattern = p;
      pattern.a = Ordinal();
      pattern.b = block;
      SpaceDesc pat = SpaceDesc::ordinal_sub(block, {pattern});
      // Count of blocks: len = Ω^d·γ + rest.
      const auto& lead = len.units().front();
      if (!lead.e.empty()) {
        // ω-many blocks only when the length is exactly Ω^d·ω.
        if (len == mul(Ordinal::Omega_pow(d), Ordinal::omega())) {
          out.tail = pat;
          return out;
        }
        throw DomainError("no gap decomposition exists in the representation");
      }
      uint64_t m = lead.c;
      Ordinal cursor = p.a;
      for (uint64_t j = 0; j < m; ++j) {
        Piece blockp = p;
        blockp.a = cursor;
        cursor = add(cursor, block);
        blockp.b = cursor;
        if (blockp.first()) out.pieces.push_back(rebase_run({blockp}));
      }
      Ordinal restlo = cursor;
      if (restlo < p.b) {
        Piece rest = p;
        rest.a = restlo;
        if (rest.first()) out.pieces.push_back(rebase_run({rest}));
      }
      if (out.pieces.size() <= 1 && !out.tail) {
        out.pieces.clear();
        out.pieces.push_back(s);
      }
      return out;
    }
  }

  // Gaps between consecutive pieces.
  std::vector<std::vector<Piece>> runs;
  runs.push_back({pieces[0]});
  for (size_t i = 1; i < pieces.size(); ++i) {
    auto sup = pieces[i - 1].sup_below(pieces[i - 1].range_hi());
    Ordinal nxt = *pieces[i].first();
    bool gap = sup->attained ? nxt > add(sup->value, Ordinal(1)) : nxt > sup->value;
    if (gap)
      runs.push_back({pieces[i]});
    else
      runs.back().push_back(pieces[i]);
  }
  if (runs.size() == 1) {
    out.pieces.push_back(s);
    return out;
  }
  for (const auto& run : runs) out.pieces.push_back(rebase_run(run));
  return out;
}

// ---------------------------------------------------------------------------
// omega_sum_with_top

namespace {

bool upper_end_uncountable(const SpaceDesc& s) {
  EndInfo e = end_info(s, Side::Right);
  return !e.attained && e.cls == SideClass::Uncountable;
}

bool contains_zero(const SpaceDesc& s) {
  auto m = ordsub_min(s);
  return m && m->is_zero();
}

}  // namespace

SpaceDesc omega_sum_with_top(const PieceFamily& family) {
  std::vector<SpaceDesc> prefix;
  for (const auto& p : family.prefix) {
    require_ordsub(p, "omega_sum_with_top");
    if (p.is_empty()) continue;
    if (!first_countable(p))
      throw DomainError("omega_sum_with_top requires first-countable summands");
    if (!is_hered_paracompact(p))
      throw DomainError("omega_sum_with_top requires hereditarily paracompact summands");
    prefix.push_back(p);
  }
  if (family.tail) {
    require_ordsub(*family.tail, "omega_sum_with_top");
    if (family.tail->is_empty()) throw DomainError("omega tail must be nonempty");
    if (!first_countable(*family.tail) || !is_hered_paracompact(*family.tail))
      throw DomainError("omega_sum_with_top requires first-countable, hereditarily paracompact summands");
  }
  if (prefix.empty() && !family.tail) throw DomainError("omega_sum_with_top of an empty family");

  std::vector<Piece> out;
  Ordinal cursor;
  bool prev_unc = false;
  Ordinal prev_pad;
  for (const auto& p : prefix) {
    // Keep placement strides limit-valued so shifted class pieces stay exact.
    Ordinal pad = pad_additively_closed(p.bound());
    if (pad < Ordinal::omega()) pad = Ordinal::omega();
    if (prev_unc && contains_zero(p)) cursor = add(cursor, prev_pad);
    auto shifted = shift_pieces(p.pieces(), cursor);
    out.insert(out.end(), shifted.begin(), shifted.end());
    prev_unc = upper_end_uncountable(p);
    prev_pad = pad;
    cursor = add(cursor, pad);
  }

  Ordinal z;
  if (family.tail) {
    const SpaceDesc& t = *family.tail;
    if (t.pieces().size() != 1) throw DomainError("omega tail must be a single collapsible piece");
    const Piece& pc = t.pieces()[0];
    // Blocks placed at consecutive multiples of the bound collapse to one
    // piece; successor/offset blocks keep their separating gaps at the limit
    // boundaries, interval blocks glue into a longer interval.
    if (!pc.a.is_zero() || !(pc.range_hi() == t.bound()) || !t.bound().is_limit())
      throw DomainError("omega tail piece must span [0, bound) below a limit bound");
    if (pc.kind != PieceKind::Full && pc.kind != PieceKind::SuccessorsOnly &&
        pc.kind != PieceKind::OffsetClass)
      throw DomainError("omega tail piece kind is not collapsible");
    if (prev_unc && contains_zero(t)) cursor = add(cursor, prev_pad);
    Ordinal span = mul(t.bound(), Ordinal::omega());
    Piece collapsed = pc;
    collapsed.a = cursor;
    collapsed.b = add(cursor, span);
    out.push_back(collapsed);
    z = add(cursor, span);
  } else {
    z = add(cursor, Ordinal(1));
  }
  out.push_back(Piece::singleton(z));
  SpaceDesc result = SpaceDesc::ordinal_sub(add(z, Ordinal(1)), std::move(out));
  if (!is_hered_paracompact(result))
    throw DomainError("omega_sum_with_top produced a non-paracompact space");
  return result;
}

// ---------------------------------------------------------------------------
// go5_transform

namespace {

// Remove the greatest member m from s (m must be the maximum) and clamp the
// bound down to m.
SpaceDesc drop_top(const SpaceDesc& s, const Ordinal& m) {
  std::vector<Piece> out;
  for (const auto& p : s.pieces()) {
    if (!p.member(m)) {
      if (p.range_lo() < m) {
        Piece q = p;
        if (q.kind != PieceKind::Singleton && q.b > m) q.b = m;
        if (q.first()) out.push_back(std::move(q));
      }
      continue;
    }
    if (p.kind == PieceKind::Singleton) continue;
    Piece q = p;
    q.b = m;
    if (q.first()) out.push_back(std::move(q));
  }
  return SpaceDesc::ordinal_sub(m, std::move(out));
}

// Clamp the bound (and piece ranges) down to b.
SpaceDesc clamp_bound(const SpaceDesc& s, const Ordinal& b) {
  std::vector<Piece> out;
  for (const auto& p : s.pieces()) {
    if (!(p.range_lo() < b)) continue;
    Piece q = p;
    if (q.kind != PieceKind::Singleton && q.b > b) q.b = b;
    if (q.first()) out.push_back(std::move(q));
  }
  return SpaceDesc::ordinal_sub(b, std::move(out));
}

bool pieces_equal(const std::vector<Piece>& a, const std::vector<Piece>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

TransformResult go5_recurse(const SpaceDesc& s,
                            const std::optional<PartitionSchedule>& schedule);

TransformResult go5_case_limit(const SpaceDesc& s) {
  GapSplit gs = split_at_gaps(s);
  if (gs.tail)
    throw DomainError("no gap decomposition exists in the representation");
  if (gs.pieces.size() <= 1)
    throw DomainError("no gap decomposition exists in the representation");
  TransformResult res;
  res.trace.action = "limit-split";
  res.trace.detail = std::to_string(gs.pieces.size()) + " clopen pieces";
  std::vector<SpaceDesc> parts;
  for (const auto& piece : gs.pieces) {
    TransformResult r = go5_recurse(piece, std::nullopt);
    parts.push_back(r.space);
    res.trace.children.push_back(std::move(r.trace));
  }
  // Re-concatenate, keeping the parts separated by gaps.
  std::vector<Piece> out;
  Ordinal cursor;
  Ordinal prev_pad;
  for (const auto& part : parts) {
    if (part.is_empty()) continue;
    Ordinal pad = pad_additively_closed(part.bound());
    if (!cursor.is_zero() && contains_zero(part))
      cursor = add(cursor, prev_pad);
    auto shifted = shift_pieces(part.pieces(), cursor);
    out.insert(out.end(), shifted.begin(), shifted.end());
    prev_pad = pad;
    cursor = add(cursor, pad);
  }
  res.space = SpaceDesc::ordinal_sub(cursor, std::move(out));
  return res;
}

TransformResult go5_case_top(const SpaceDesc& s, const Ordinal& top,
                             const std::optional<PartitionSchedule>& schedule) {
  SideInfo zleft = side_info(s, Point::ordinal(top), Side::Left);
  if (zleft.cls == SideClass::Uncountable) {
    if (!schedule)
      throw DomainError("schedule required: top point " + top.str() +
                        " has uncountable left character");
    const PartitionSchedule& ps = *schedule;
    if (!(ps.target == Point::ordinal(top)))
      throw DomainError("schedule target is not the top point");
    SpaceDesc rest = drop_top(s, top);
    TransformResult res;
    res.trace.action = "top-scheduled";
    res.trace.detail = "z = " + top.str();
    PieceFamily fam;
    if (ps.offset_family) {
      CofClass bc = classify(ps.b);
      if (bc != CofClass::CountableCof && bc != CofClass::UncountableCof)
        throw DomainError("offset family range must end at a limit");
      std::vector<Piece> expected{Piece::successors(ps.a, ps.b)};
      if (!pieces_equal(rest.pieces(), expected))
        throw DomainError("offset family does not partition the space minus its top");
      // A_1 and A_2 stand in for the whole family; all members canonicalize
      // to the same block.
      SpaceDesc a1 = SpaceDesc::ordinal_sub(ps.b, {Piece::offset(ps.a, ps.b, 1)});
      SpaceDesc a2 = SpaceDesc::ordinal_sub(ps.b, {Piece::offset(ps.a, ps.b, 2)});
      TransformResult r1 = go5_recurse(a1, std::nullopt);
      TransformResult r2 = go5_recurse(a2, std::nullopt);
      if (!(r1.space == r2.space))
        throw DomainError("offset family pieces do not transform uniformly");
      fam.tail = r1.space;
      res.trace.children.push_back(std::move(r1.trace));
    } else {
      // Explicit list: validate the partition by set equality of pieces.
      std::vector<Piece> all;
      for (const auto& lst : ps.list) all.insert(all.end(), lst.begin(), lst.end());
      std::sort(all.begin(), all.end(), [](const Piece& x, const Piece& y) {
        return x.range_lo() < y.range_lo();
      });
      if (!pieces_equal(rest.pieces(), all))
        throw DomainError("schedule pieces do not partition the space minus its top");
      for (const auto& lst : ps.list) {
        SpaceDesc part = SpaceDesc::ordinal_sub(top, lst);
        TransformResult r = go5_recurse(part, std::nullopt);
        fam.prefix.push_back(r.space);
        res.trace.children.push_back(std::move(r.trace));
      }
      if (ps.tail) {
        SpaceDesc part = SpaceDesc::ordinal_sub(top, *ps.tail);
        TransformResult r = go5_recurse(part, std::nullopt);
        fam.tail = r.space;
        res.trace.children.push_back(std::move(r.trace));
      }
    }
    res.space = omega_sum_with_top(fam);
    return res;
  }
  if (zleft.cls == SideClass::Neighbor || zleft.cls == SideClass::Empty) {
    // Isolated top: detach, transform the rest, re-attach past a gap.
    SpaceDesc rest = drop_top(s, top);
    TransformResult inner = go5_recurse(rest, schedule);
    TransformResult res;
    res.trace.action = "top-detached";
    res.trace.detail = "z = " + top.str();
    res.trace.children.push_back(std::move(inner.trace));
    std::vector<Piece> out = inner.space.pieces();
    Ordinal z = add(inner.space.bound(), Ordinal(1));
    out.push_back(Piece::singleton(z));
    res.space = SpaceDesc::ordinal_sub(add(z, Ordinal(1)), std::move(out));
    return res;
  }
  throw DomainError(
      "schedule cannot be derived: a non-top point has uncountable character (top " +
      top.str() + " is approached countably)");
}

TransformResult go5_recurse(const SpaceDesc& s,
                            const std::optional<PartitionSchedule>& schedule) {
  if (s.is_empty()) {
    TransformResult res;
    res.space = SpaceDesc::ordinal_sub(Ordinal(), {});
    res.trace.action = "empty";
    return res;
  }
  // Successor-bound stripping ("α and β are topologically homeomorphic"):
  // drop the bound straight down to just above the member supremum.
  auto sup = ordsub_sup(s);
  Ordinal tight = sup->attained ? add(sup->value, Ordinal(1)) : sup->value;
  if (tight < s.bound()) {
    TransformResult inner = go5_recurse(clamp_bound(s, tight), schedule);
    TransformResult res;
    res.space = inner.space;
    res.trace.action = "strip-bound";
    res.trace.detail = s.bound().str() + " -> " + tight.str();
    res.trace.children.push_back(std::move(inner.trace));
    return res;
  }
  if (first_countable(s)) {
    TransformResult res;
    res.space = canonicalize_subspace(s);
    res.trace.action = "first-countable";
    res.trace.detail = s.str();
    return res;
  }
  if (sup->attained) return go5_case_top(s, sup->value, schedule);
  return go5_case_limit(s);
}

}  // namespace

TransformResult go5_transform(const SpaceDesc& s,
                              const std::optional<PartitionSchedule>& schedule) {
  require_ordsub(s, "go5_transform");
  if (!is_hered_paracompact(s))
    throw DomainError("go5_transform requires a hereditarily paracompact subspace");
  TransformResult res = go5_recurse(s, schedule);
  if (!first_countable(res.space))
    throw DomainError("go5_transform output is not first-countable");
  if (!is_hered_paracompact(res.space))
    throw DomainError("go5_transform output is not hereditarily paracompact");
  return res;
}

}  // namespace ordtop
