#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordtop/error.hpp"

namespace ordtop {

enum class Cmp { LT, EQ, GT };

// Cofinality classification of an ordinal notation.
enum class CofClass { Zero, Successor, CountableCof, UncountableCof };

std::string to_string(CofClass c);
std::string to_string(Cmp c);

// Exact ordinal notation below Ω^ω, where Ω is a formal regular uncountable
// ordinal (standing for ω₁) and the countable fragment lies below ε₀.
//
// Representation: a strictly decreasing sum of units Ω^d · ω^e · c with
// d a natural number, e a countable Ordinal (all units of e have d = 0,
// recursively), and c a positive natural coefficient. Units are ordered by
// the lexicographic key (d, e). The empty sum is 0. Canonical form is unique,
// so equality is structural.
class Ordinal {
 public:
  struct Unit {
    uint32_t d = 0;            // exponent of Ω
    std::vector<Unit> e;       // countable exponent of ω (unit list, d = 0 throughout)
    uint64_t c = 1;            // positive natural coefficient
  };

  Ordinal() = default;                       // zero
  explicit Ordinal(uint64_t n);              // natural number
  static Ordinal omega();                    // ω
  static Ordinal Omega();                    // Ω
  static Ordinal omega_pow(const Ordinal& e);   // ω^e, e countable
  static Ordinal Omega_pow(uint32_t d);         // Ω^d
  static Ordinal from_units(std::vector<Unit> units);  // validates canonical form

  bool is_zero() const { return units_.empty(); }
  bool is_successor() const;
  bool is_limit() const { return !is_zero() && !is_successor(); }
  bool is_countable() const;                 // no Ω in any unit
  bool is_natural() const;                   // zero or a single (0,0,c) unit
  uint64_t as_natural() const;               // requires is_natural()

  const std::vector<Unit>& units() const { return units_; }

  // x = limit_part() + finite_part(), finite_part < ω.
  Ordinal limit_part() const;
  uint64_t finite_part() const;

  // Predecessor of a successor ordinal.
  Ordinal pred() const;

  // x = ω·rho + r with r < ω; returns rho.
  Ordinal div_omega() const;

  std::string str() const;

  size_t depth() const;                      // nesting depth of exponents

 private:
  std::vector<Unit> units_;
  friend Ordinal add(const Ordinal&, const Ordinal&);
  friend Ordinal mul(const Ordinal&, const Ordinal&);
  friend Ordinal diff(const Ordinal&, const Ordinal&);
  friend Cmp cmp(const Ordinal&, const Ordinal&);
};

Cmp cmp(const Ordinal& a, const Ordinal& b);
inline bool operator==(const Ordinal& a, const Ordinal& b) { return cmp(a, b) == Cmp::EQ; }
inline bool operator!=(const Ordinal& a, const Ordinal& b) { return cmp(a, b) != Cmp::EQ; }
inline bool operator<(const Ordinal& a, const Ordinal& b) { return cmp(a, b) == Cmp::LT; }
inline bool operator<=(const Ordinal& a, const Ordinal& b) { return cmp(a, b) != Cmp::GT; }
inline bool operator>(const Ordinal& a, const Ordinal& b) { return cmp(a, b) == Cmp::GT; }
inline bool operator>=(const Ordinal& a, const Ordinal& b) { return cmp(a, b) != Cmp::LT; }

// Ordinal addition (absorbing, left-associative merge of canonical forms).
Ordinal add(const Ordinal& a, const Ordinal& b);

// Ordinal multiplication, exact on the whole representable class.
// Throws DomainError on natural-coefficient overflow.
Ordinal mul(const Ordinal& a, const Ordinal& b);

// The unique δ with a + δ = b. Throws DomainError if a > b.
Ordinal diff(const Ordinal& a, const Ordinal& b);

// Cofinality classification.
CofClass classify(const Ordinal& a);

// Smallest ordinal strictly above a in the given cofinality class.
// Successor: a+1; CountableCof: a+ω; UncountableCof: a+Ω.
Ordinal smallest_above(CofClass cls, const Ordinal& a);

// Least additively closed ordinal (a power ω^ξ, including Ω^d·ω^e forms) ≥ a.
// pad(0) = 1.
Ordinal pad_additively_closed(const Ordinal& a);

// Grammar (ASCII, whitespace ignored):
//   expr     := term ('+' term)*
//   term     := atom ('*' nat)? | nat
//   atom     := 'w' ('^' exponent)? | 'W' ('^' nat)?
//   exponent := '(' expr ')' | atom | nat
// Non-canonical input is normalized (1+w parses to w). Zero coefficients are
// rejected; a bare 0 term denotes the zero ordinal.
Ordinal parse_ordinal(const std::string& text);

// Canonical printing: units in decreasing significance, '+'-separated, no
// spaces; parse(print(x)) == x.
std::string print_ordinal(const Ordinal& a);

}  // namespace ordtop
