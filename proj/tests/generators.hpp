#pragma once

// Random space/schedule generators shared by the property tests and the
// acceptance suite.

#include <random>
#include <vector>

#include "ordtop/schedule.hpp"
#include "ordtop/spectrum.hpp"

namespace ordtop::testgen {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(uint64_t seed) : rng(seed) {}

  uint64_t nat(uint64_t lo, uint64_t hi) {
    return std::uniform_int_distribution<uint64_t>(lo, hi)(rng);
  }

  bool coin() { return nat(0, 1) == 1; }

  // endpoint pool including Ω, Ω·2, Ω·ω, ω^ω per the acceptance spec
  Ordinal pool_ordinal() {
    static const char* pool[] = {"0",  "1",     "3",     "w",     "w*2",   "w+3",  "w^2",
                                 "w^2*2", "w^2+w", "w^3",   "w^w",   "W",     "W+1",  "W*2",
                                 "w^(W+1)", "W+w^2", "W*2+w", "w^2*3+5"};
    return parse_ordinal(pool[nat(0, sizeof(pool) / sizeof(pool[0]) - 1)]);
  }

  // A valid OrdinalSub: ordered pieces over increasing cut points.
  SpaceDesc ordinal_sub() {
    std::vector<Ordinal> cuts;
    int n = static_cast<int>(nat(1, 4));
    for (int i = 0; i < n * 2; ++i) cuts.push_back(pool_ordinal());
    std::sort(cuts.begin(), cuts.end(), [](const Ordinal& a, const Ordinal& b) { return a < b; });
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Piece> pieces;
    Ordinal bound = Ordinal(1);
    for (size_t i = 0; i + 1 < cuts.size(); i += 2) {
      const Ordinal& a = cuts[i];
      const Ordinal& b = cuts[i + 1];
      switch (nat(0, 4)) {
        case 0:
          pieces.push_back(Piece::full(a, b));
          break;
        case 1:
          pieces.push_back(Piece::singleton(a));
          break;
        case 2:
          pieces.push_back(Piece::successors(a, b));
          break;
        case 3:
          pieces.push_back(Piece::limits(a, b));
          break;
        default:
          pieces.push_back(Piece::offset(a, b, nat(1, 3)));
          break;
      }
      bound = pieces.back().range_hi();
    }
    if (pieces.empty()) {
      pieces.push_back(Piece::full(Ordinal(), Ordinal::omega()));
      bound = Ordinal::omega();
    }
    if (coin()) bound = add(bound, Ordinal(nat(0, 2)));
    return SpaceDesc::ordinal_sub(bound, std::move(pieces));
  }

  SpaceDesc lots(int depth) {
    if (depth <= 0) {
      switch (nat(0, 3)) {
        case 0:
          return ordinal_sub();
        case 1:
          return SpaceDesc::long_segment(pool_ordinal());
        case 2:
          return SpaceDesc::rational_segment(coin(), coin());
        default:
          return SpaceDesc::real_line();
      }
    }
    if (nat(0, 2) == 0) {
      SpaceDesc a = lots(depth - 1);
      SpaceDesc b = lots(depth - 1);
      if (!a.is_empty() && !b.is_empty()) return SpaceDesc::lex_product(a, b);
    }
    return lots(0);
  }

  Rule rule() {
    Rule r;
    switch (nat(0, 2)) {
      case 0: r.kind = RuleKind::IsolateWhere; break;
      case 1: r.kind = RuleKind::RightRayWhere; break;
      default: r.kind = RuleKind::LeftRayWhere; break;
    }
    switch (nat(0, 2)) {
      case 0: r.pred.target = PredTarget::Left; break;
      case 1: r.pred.target = PredTarget::Right; break;
      default: r.pred.target = PredTarget::Total; break;
    }
    r.pred.cls = nat(0, 1) ? SideClass::Uncountable : SideClass::Countable;
    return r;
  }

  // Space description of constructor depth ≤ 3 (GoSpace on top of a lex tree).
  SpaceDesc space(int depth = 3) {
    SpaceDesc base = lots(depth - 1);
    if (coin()) {
      RuleSet rules;
      int n = static_cast<int>(nat(1, 2));
      for (int i = 0; i < n; ++i) rules.push_back(rule());
      return SpaceDesc::go_space(base, rules);
    }
    return base;
  }
};

}  // namespace ordtop::testgen
