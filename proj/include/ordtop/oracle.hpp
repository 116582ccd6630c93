#pragma once

#include <functional>

#include "ordtop/embed.hpp"
#include "ordtop/schedule.hpp"

namespace ordtop {

// A canonical strictly increasing ω-sequence with a symbolic supremum.
// AffineOrd where possible; composed closures for limit exponents.
struct FundamentalSeq {
  Ordinal target;
  std::function<Ordinal(uint64_t)> term;
  Ordinal sup;        // symbolic; equals target by construction
  std::string form;   // printable description
};

// Canonical fundamental-sequence assignment for a countable limit ordinal.
// Throws DomainError when the argument is not a countable limit.
FundamentalSeq fundamental_sequence(const Ordinal& a);

// Proof obligations: first `terms` values strictly increasing and below the
// target, symbolic sup equal to the target. Throws on failure.
void verify_fundamental_sequence(const FundamentalSeq& fs, int terms = 64);

// Cofinality through the fundamental-sequence route; the independent oracle
// for classify. Requires a countable argument.
CofClass cof_via_fs(const Ordinal& a);

// ---------------------------------------------------------------------------
// Cantor–Bendixson machinery for countable ordinal subspaces.

struct CBLevel {
  size_t index = 0;
  std::string summary;                    // canonical piece description
  std::vector<SideCharacter> char_multiset;  // sorted, with repetitions
};

struct CBProfile {
  std::vector<CBLevel> ranks;
  bool reached_empty = false;
};

bool operator==(const CBLevel& a, const CBLevel& b);

// Profiles compare by rank length and per-level character multisets;
// summaries are informational.
bool profiles_equivalent(const CBProfile& a, const CBProfile& b);

// Normal form of a countable subspace: an order-homeomorphic copy built from
// Full intervals, successor blocks and singletons only.
SpaceDesc cb_normal_form(const SpaceDesc& s);

// One Cantor–Bendixson derivative (isolated points removed), re-expressed in
// normal form. Requires a countable OrdinalSub.
SpaceDesc cb_derivative(const SpaceDesc& s);

// Iterated derivatives down to the empty space.
CBProfile cb_profile(const SpaceDesc& s);

// Brute-force convergence decision on countable spaces: neighborhood tests
// against a cofinal family of probe points below (above) the target.
bool converges_bruteforce(const Schedule& seq, const Point& p, const SpaceDesc& s);

}  // namespace ordtop
