#include "ordtop/ordinal.hpp"

#include <algorithm>
#include <sstream>

namespace ordtop {

namespace {

using Unit = Ordinal::Unit;
using Units = std::vector<Unit>;

Cmp cmp_units(const Units& a, const Units& b);

Cmp cmp_nat(uint64_t a, uint64_t b) {
  if (a < b) return Cmp::LT;
  if (a > b) return Cmp::GT;
  return Cmp::EQ;
}

// Lexicographic key comparison (d, e) of two units.
Cmp cmp_key(const Unit& x, const Unit& y) {
  if (x.d != y.d) return cmp_nat(x.d, y.d);
  return cmp_units(x.e, y.e);
}

Cmp cmp_units(const Units& a, const Units& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    Cmp k = cmp_key(a[i], b[i]);
    if (k != Cmp::EQ) return k;
    Cmp c = cmp_nat(a[i].c, b[i].c);
    if (c != Cmp::EQ) {
      // Larger coefficient wins unless the smaller side continues with more
      // units below this key; even then the coefficient dominates.
      return c;
    }
  }
  return cmp_nat(a.size(), b.size());
}

uint64_t checked_add(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("natural coefficient overflow in add");
  return r;
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("natural coefficient overflow in mul");
  return r;
}

bool units_countable(const Units& u) {
  for (const auto& t : u) {
    if (t.d != 0) return false;
    if (!units_countable(t.e)) return false;
  }
  return true;
}

void validate_units(const Units& u) {
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i].c == 0) throw DomainError("zero coefficient in ordinal unit");
    if (!units_countable(u[i].e)) throw DomainError("omega exponent must be countable");
    if (i + 1 < u.size() && cmp_key(u[i], u[i + 1]) != Cmp::GT)
      throw DomainError("ordinal units not strictly decreasing");
    validate_units(u[i].e);
  }
}

// a + b on unit lists: keep a's units above b's leading key, merge an
// equal-key unit into the lead coefficient, drop the rest of a (absorbed).
Units add_units(const Units& a, const Units& b) {
  if (b.empty()) return a;
  if (a.empty()) return b;
  const Unit& lead = b.front();
  Units out;
  size_t i = 0;
  while (i < a.size() && cmp_key(a[i], lead) == Cmp::GT) {
    out.push_back(a[i]);
    ++i;
  }
  if (i < a.size() && cmp_key(a[i], lead) == Cmp::EQ) {
    Unit m = lead;
    m.c = checked_add(a[i].c, lead.c);
    out.push_back(m);
  } else {
    out.push_back(lead);
  }
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

}  // namespace

Ordinal::Ordinal(uint64_t n) {
  if (n > 0) units_.push_back(Unit{0, {}, n});
}

Ordinal Ordinal::omega() {
  Ordinal x;
  x.units_.push_back(Unit{0, {Unit{0, {}, 1}}, 1});
  return x;
}

Ordinal Ordinal::Omega() {
  Ordinal x;
  x.units_.push_back(Unit{1, {}, 1});
  return x;
}

Ordinal Ordinal::omega_pow(const Ordinal& e) {
  if (!e.is_countable()) throw DomainError("omega_pow exponent must be countable");
  if (e.is_zero()) return Ordinal(1);
  Ordinal x;
  x.units_.push_back(Unit{0, e.units_, 1});
  return x;
}

Ordinal Ordinal::Omega_pow(uint32_t d) {
  if (d == 0) return Ordinal(1);
  Ordinal x;
  x.units_.push_back(Unit{d, {}, 1});
  return x;
}

Ordinal Ordinal::from_units(std::vector<Unit> units) {
  validate_units(units);
  Ordinal x;
  x.units_ = std::move(units);
  return x;
}

bool Ordinal::is_successor() const {
  if (units_.empty()) return false;
  const Unit& last = units_.back();
  return last.d == 0 && last.e.empty();
}

bool Ordinal::is_countable() const { return units_countable(units_); }

bool Ordinal::is_natural() const {
  if (units_.empty()) return true;
  return units_.size() == 1 && units_[0].d == 0 && units_[0].e.empty();
}

uint64_t Ordinal::as_natural() const {
  if (!is_natural()) throw DomainError("ordinal is not a natural number: " + str());
  return units_.empty() ? 0 : units_[0].c;
}

Ordinal Ordinal::limit_part() const {
  Ordinal x = *this;
  if (x.is_successor()) x.units_.pop_back();
  return x;
}

uint64_t Ordinal::finite_part() const {
  if (is_successor()) return units_.back().c;
  return 0;
}

Ordinal Ordinal::pred() const {
  if (!is_successor()) throw DomainError("pred of a non-successor ordinal: " + str());
  Ordinal x = *this;
  if (x.units_.back().c == 1) {
    x.units_.pop_back();
  } else {
    x.units_.back().c -= 1;
  }
  return x;
}

Ordinal Ordinal::div_omega() const {
  // x = ω·rho + r. Units with d ≥ 1 pass through (ω·Ω^d·ω^e = Ω^d·ω^e);
  // (0,e,c) with e ≥ 1 maps to (0,e',c) with 1+e' = e; a finite unit is the
  // remainder and is dropped.
  Units out;
  for (const auto& t : units_) {
    if (t.d >= 1) {
      out.push_back(t);
    } else if (!t.e.empty()) {
      Ordinal e = Ordinal::from_units(t.e);
      Ordinal e2 = diff(Ordinal(1), e);
      Unit u{0, e2.units_, t.c};
      out.push_back(u);
    }
    // finite unit: remainder, dropped
  }
  Ordinal x;
  x.units_ = std::move(out);
  return x;
}

size_t Ordinal::depth() const {
  size_t d = 0;
  for (const auto& t : units_) {
    Ordinal e;
    e.units_ = t.e;
    d = std::max(d, 1 + e.depth());
  }
  return d;
}

Cmp cmp(const Ordinal& a, const Ordinal& b) { return cmp_units(a.units_, b.units_); }

Ordinal add(const Ordinal& a, const Ordinal& b) {
  Ordinal x;
  x.units_ = add_units(a.units_, b.units_);
  return x;
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const Unit& lead = a.units_.front();
  Ordinal acc;
  for (const auto& u : b.units_) {
    Ordinal part;
    if (u.d >= 1) {
      // a · Ω^f·ω^g·k = Ω^{d1+f}·ω^g·k
      uint64_t nd = static_cast<uint64_t>(lead.d) + u.d;
      if (nd > 0xffffffffull) throw DomainError("Omega degree overflow in mul");
      part.units_.push_back(Unit{static_cast<uint32_t>(nd), u.e, u.c});
    } else if (!u.e.empty()) {
      // a · ω^g·k = Ω^{d1}·ω^{e1+g}·k
      Ordinal e1 = Ordinal::from_units(lead.e);
      Ordinal g = Ordinal::from_units(u.e);
      Ordinal ne = add(e1, g);
      part.units_.push_back(Unit{lead.d, ne.units_, u.c});
    } else {
      // a · k = Ω^{d1}·ω^{e1}·(c1·k) + (tail of a)
      part.units_.push_back(Unit{lead.d, lead.e, checked_mul(lead.c, u.c)});
      part.units_.insert(part.units_.end(), a.units_.begin() + 1, a.units_.end());
    }
    acc = add(acc, part);
  }
  return acc;
}

Ordinal diff(const Ordinal& a, const Ordinal& b) {
  if (cmp(a, b) == Cmp::GT) throw DomainError("diff: left operand exceeds right (" + a.str() + " > " + b.str() + ")");
  const Units& ua = a.units_;
  const Units& ub = b.units_;
  size_t i = 0;
  while (i < ua.size() && i < ub.size()) {
    if (cmp_key(ua[i], ub[i]) != Cmp::EQ || ua[i].c != ub[i].c) break;
    ++i;
  }
  Ordinal out;
  if (i == ua.size()) {
    // a is a prefix of b: remainder is b's tail.
    out.units_.assign(ub.begin() + i, ub.end());
    return out;
  }
  // Units differ at i. Either keys differ (a's smaller key is absorbed) or
  // coefficients differ at an equal key.
  Cmp k = cmp_key(ua[i], ub[i]);
  if (k == Cmp::LT) {
    out.units_.assign(ub.begin() + i, ub.end());
    return out;
  }
  if (k == Cmp::GT) throw DomainError("diff: inconsistent comparison");
  // Equal keys, coefficient of a smaller (a < b guarantees this).
  Unit head = ub[i];
  head.c = ub[i].c - ua[i].c;
  out.units_.push_back(head);
  out.units_.insert(out.units_.end(), ub.begin() + i + 1, ub.end());
  return out;
}

CofClass classify(const Ordinal& a) {
  if (a.is_zero()) return CofClass::Zero;
  const auto& last = a.units().back();
  if (last.d == 0 && last.e.empty()) return CofClass::Successor;
  if (last.d >= 1 && last.e.empty()) return CofClass::UncountableCof;
  return CofClass::CountableCof;
}

Ordinal smallest_above(CofClass cls, const Ordinal& a) {
  switch (cls) {
    case CofClass::Successor:
      return add(a, Ordinal(1));
    case CofClass::CountableCof:
      return add(a, Ordinal::omega());
    case CofClass::UncountableCof:
      return add(a, Ordinal::Omega());
    case CofClass::Zero:
      throw DomainError("no ordinal of class Zero lies above another");
  }
  throw DomainError("unreachable");
}

Ordinal pad_additively_closed(const Ordinal& a) {
  if (a.is_zero()) return Ordinal(1);
  const auto& lead = a.units().front();
  if (a.units().size() == 1 && lead.c == 1) return a;  // already a power
  Ordinal e = add(Ordinal::from_units(lead.e), Ordinal(1));
  std::vector<Ordinal::Unit> u{Ordinal::Unit{lead.d, e.units(), 1}};
  return Ordinal::from_units(std::move(u));
}

std::string to_string(CofClass c) {
  switch (c) {
    case CofClass::Zero: return "Zero";
    case CofClass::Successor: return "Successor";
    case CofClass::CountableCof: return "CountableCof";
    case CofClass::UncountableCof: return "UncountableCof";
  }
  return "?";
}

std::string to_string(Cmp c) {
  switch (c) {
    case Cmp::LT: return "LT";
    case Cmp::EQ: return "EQ";
    case Cmp::GT: return "GT";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_units(const Units& u, std::string& out);

// True when the printed form of e is a single atom or natural (no top-level
// '+' or '*'), so it can stand after '^' without parentheses.
bool exponent_is_bare(const Units& e) {
  if (e.empty()) return true;       // prints "0"
  if (e.size() > 1) return false;   // contains '+'
  const Unit& t = e[0];
  if (t.d == 0 && t.e.empty()) return true;  // natural, prints digits
  return t.c == 1;                  // atom without coefficient
}

void print_unit(const Unit& t, std::string& out) {
  if (t.d == 0 && t.e.empty()) {
    out += std::to_string(t.c);
    return;
  }
  if (t.d >= 1 && t.e.empty()) {
    out += 'W';
    if (t.d > 1) {
      out += '^';
      out += std::to_string(t.d);
    }
  } else if (t.d == 0) {
    out += 'w';
    if (!(t.e.size() == 1 && t.e[0].d == 0 && t.e[0].e.empty() && t.e[0].c == 1)) {
      out += '^';
      if (exponent_is_bare(t.e)) {
        print_units(t.e, out);
      } else {
        out += '(';
        print_units(t.e, out);
        out += ')';
      }
    }
  } else {
    // Ω^d·ω^e with both nonzero: one ω-power, exponent Ω·d + e.
    Units exp;
    exp.push_back(Unit{1, {}, t.d});
    exp.insert(exp.end(), t.e.begin(), t.e.end());
    out += "w^(";
    print_units(exp, out);
    out += ')';
  }
  if (t.c > 1) {
    out += '*';
    out += std::to_string(t.c);
  }
}

void print_units(const Units& u, std::string& out) {
  if (u.empty()) {
    out += '0';
    return;
  }
  for (size_t i = 0; i < u.size(); ++i) {
    if (i) out += '+';
    print_unit(u[i], out);
  }
}

}  // namespace

std::string Ordinal::str() const { return print_ordinal(*this); }

std::string print_ordinal(const Ordinal& a) {
  std::string out;
  print_units(a.units(), out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
  }

  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }

  uint64_t parse_nat() {
    skip_ws();
    if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected a natural number", i);
    uint64_t v = 0;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
      uint64_t digit = static_cast<uint64_t>(s[i] - '0');
      if (v > (UINT64_MAX - digit) / 10) throw ParseError("natural number overflow", i);
      v = v * 10 + digit;
      ++i;
    }
    return v;
  }

  // Builds ω^e from a parsed exponent ordinal; e may contain Ω only in the
  // form Ω·d + countable (so that ω^e stays inside the representable class).
  Ordinal omega_power_of(const Ordinal& e, size_t pos) {
    uint32_t d = 0;
    Units countable;
    for (const auto& t : e.units()) {
      if (t.d >= 2 || (t.d == 1 && !t.e.empty()))
        throw ParseError("omega exponent leaves the representable class (below W^w)", pos);
      if (t.d == 1) {
        if (t.c > 0xffffffffull) throw ParseError("Omega degree overflow", pos);
        d = static_cast<uint32_t>(t.c);
      } else {
        countable.push_back(t);
      }
    }
    if (d == 0) {
      Ordinal ce = Ordinal::from_units(countable);
      return Ordinal::omega_pow(ce);
    }
    Units u{Unit{d, countable, 1}};
    return Ordinal::from_units(std::move(u));
  }

  Ordinal parse_exponent() {
    skip_ws();
    if (eat('(')) {
      Ordinal e = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", i);
      return e;
    }
    if (peek('w') || peek('W')) return parse_atom();
    return Ordinal(parse_nat());
  }

  Ordinal parse_atom() {
    skip_ws();
    if (eat('w')) {
      if (eat('^')) {
        size_t pos = i;
        Ordinal e = parse_exponent();
        return omega_power_of(e, pos);
      }
      return Ordinal::omega();
    }
    if (eat('W')) {
      if (eat('^')) {
        uint64_t d = parse_nat();
        if (d > 0xffffffffull) throw ParseError("Omega degree overflow", i);
        return Ordinal::Omega_pow(static_cast<uint32_t>(d));
      }
      return Ordinal::Omega();
    }
    throw ParseError("expected 'w' or 'W'", i);
  }

  Ordinal parse_term() {
    skip_ws();
    if (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
      return Ordinal(parse_nat());
    }
    Ordinal atom = parse_atom();
    if (eat('*')) {
      size_t pos = i;
      uint64_t n = parse_nat();
      if (n == 0) throw ParseError("zero coefficient rejected", pos);
      return mul(atom, Ordinal(n));
    }
    return atom;
  }

  Ordinal parse_expr() {
    Ordinal acc = parse_term();
    while (eat('+')) acc = add(acc, parse_term());
    return acc;
  }

  Ordinal run() {
    skip_ws();
    if (i >= s.size()) throw ParseError("empty ordinal expression", i);
    Ordinal v = parse_expr();
    skip_ws();
    if (i < s.size()) throw ParseError(std::string("unexpected character '") + s[i] + "'", i);
    return v;
  }
};

}  // namespace

Ordinal parse_ordinal(const std::string& text) {
  Parser p(text);
  return p.run();
}

}  // namespace ordtop
