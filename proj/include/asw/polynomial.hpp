#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asw/errors.hpp"
#include "asw/monomial.hpp"
#include "asw/prime.hpp"

namespace asw {

using Int = boost::multiprecision::cpp_int;

/// Coefficient ring Z with exact arbitrary-precision integers. binom(p^2, i)
/// already overflows 64 bits at p = 7, so there is no fixed-width fallback.
struct IntegerRing {
  using value_type = Int;

  value_type normalize(value_type c) const { return c; }
  bool is_zero(const value_type& c) const { return c == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type one() const { return 1; }
  bool compatible(const IntegerRing&) const { return true; }
  std::string describe() const { return "Z"; }
  static value_type parse_coeff(const std::string& s) { return Int(s); }
  static std::string coeff_str(const value_type& c) { return c.str(); }
};

/// Coefficient field F_p; residues stored least non-negative, zero never kept.
struct PrimeField {
  explicit PrimeField(Prime prime) : p(prime) {}
  Prime p;

  using value_type = std::int64_t;

  value_type normalize(value_type c) const { return p.reduce(c); }
  bool is_zero(const value_type& c) const { return p.reduce(c) == 0; }
  value_type add(value_type a, value_type b) const { return p.add(a, b); }
  value_type mul(value_type a, value_type b) const { return p.mul(a, b); }
  value_type neg(value_type a) const { return p.neg(a); }
  value_type one() const { return 1; }
  bool compatible(const PrimeField& o) const { return p == o.p; }
  std::string describe() const { return "F_" + std::to_string(p.value()); }
  static value_type parse_coeff(const std::string& s) { return std::stoll(s); }
  static std::string coeff_str(const value_type& c) { return std::to_string(c); }
};

/// Sparse multivariate polynomial with exact coefficients. Terms live in a
/// map ordered by the canonical monomial order (descending), which makes
/// serialization canonical by construction.
template <class Ring>
class Polynomial {
public:
  using Coeff = typename Ring::value_type;
  using TermMap = std::map<Monomial, Coeff, MonomialDescending>;

  explicit Polynomial(Ring ring = Ring()) : ring_(std::move(ring)) {}

  static Polynomial zero(Ring ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(Ring ring, Coeff c) {
    Polynomial f(std::move(ring));
    f.add_term(Monomial{}, std::move(c));
    return f;
  }

  static Polynomial variable(Ring ring, Var v, std::uint32_t e = 1) {
    Polynomial f(std::move(ring));
    f.add_term(Monomial::variable(v, e), f.ring_.one());
    return f;
  }

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Coeff coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  void add_term(const Monomial& m, Coeff c) {
    c = ring_.normalize(std::move(c));
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  std::uint32_t degree(Var v) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exp(v));
    return d;
  }

  bool mentions(Var v) const {
    for (const auto& [m, c] : terms_)
      if (m.exp(v)) return true;
    return false;
  }

  /// True when no x-variable above `index` occurs (sub-tower membership).
  bool mentions_only_x_up_to(int index) const {
    for (const auto& [m, c] : terms_)
      if (m.mentions_x_above(index)) return false;
    return true;
  }

  void check_compatible(const Polynomial& o) const {
    if (!ring_.compatible(o.ring_)) {
      throw ModulusMismatchError("operation between " + ring_.describe() + " and " +
                                 o.ring_.describe());
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, ring_.neg(c));
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial operator-() const {
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, ring_.neg(c));
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.ring_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        out.add_term(ma * mb, a.ring_.mul(ca, cb));
      }
    }
    return out;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Coeff& c) const {
    Polynomial out(ring_);
    Coeff cc = ring_.normalize(c);
    if (ring_.is_zero(cc)) return out;
    for (const auto& [m, v] : terms_) out.add_term(m, ring_.mul(v, cc));
    return out;
  }

  Polynomial pow(std::uint64_t e) const {
    Polynomial acc = constant(ring_, ring_.one());
    Polynomial base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  /// Ring-homomorphic substitution; variables absent from the assignment map
  /// to themselves. Per-variable image powers are cached across terms.
  Polynomial substitute(const std::map<Var, Polynomial>& assignment) const {
    for (const auto& [v, img] : assignment) check_compatible(img);
    std::array<std::vector<Polynomial>, kVarCount> powers;
    auto power_of = [&](Var v, std::uint32_t e) -> const Polynomial& {
      auto& tab = powers[static_cast<int>(v)];
      if (tab.empty()) {
        tab.push_back(constant(ring_, ring_.one()));
        auto it = assignment.find(v);
        tab.push_back(it == assignment.end() ? variable(ring_, v) : it->second);
      }
      while (tab.size() <= e) tab.push_back(tab.back() * tab[1]);
      return tab[e];
    };
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(ring_, c);
      for (int i = 0; i < kVarCount; ++i) {
        std::uint32_t e = m.exp(static_cast<Var>(i));
        if (e) t = t * power_of(static_cast<Var>(i), e);
      }
      out += t;
    }
    return out;
  }

  bool operator==(const Polynomial& o) const {
    return ring_.compatible(o.ring_) && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Canonical text form: terms in descending monomial order joined by " + ",
  /// e.g. "2*b1*x1^2 + 2*b1^2*x1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += term_str(m, c);
    }
    return out;
  }

  static Polynomial parse(Ring ring, std::string_view text);

private:
  std::string term_str(const Monomial& m, const Coeff& c) const {
    std::string cs = Ring::coeff_str(c);
    if (m.is_one()) return cs;
    if (cs == "1") return m.str();
    if (cs == "-1") return "-" + m.str();
    return cs + "*" + m.str();
  }

  Ring ring_;
  TermMap terms_;
};

using IntPoly = Polynomial<IntegerRing>;
using ModPoly = Polynomial<PrimeField>;

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

}  // namespace detail

template <class Ring>
Polynomial<Ring> Polynomial<Ring>::parse(Ring ring, std::string_view text) {
  Polynomial<Ring> out(ring);
  std::size_t i = 0;
  detail::skip_ws(text, i);
  if (i == text.size()) throw ParseError("empty polynomial text");
  bool first = true;
  while (i < text.size()) {
    if (!first) {
      if (text[i] != '+') throw ParseError("expected '+' between terms");
      ++i;
      detail::skip_ws(text, i);
    }
    first = false;
    // term: [sign][digits] ['*' factor]* | factor ['*' factor]*
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
    }
    Coeff c = digits.empty() ? ring.one() : Ring::parse_coeff(digits);
    if (neg) c = ring.neg(c);
    Monomial m;
    bool want_factor = digits.empty();  // bare monomial must have >= 1 factor
    while (i < text.size()) {
      if (!want_factor) {
        if (text[i] != '*') break;
        ++i;
      }
      want_factor = false;
      if (i + 1 >= text.size()) throw ParseError("truncated variable");
      auto v = var_from_name(text.substr(i, 2));
      if (!v) throw ParseError("unknown variable at '" + std::string(text.substr(i)) + "'");
      i += 2;
      std::uint32_t e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string es;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) es += text[i++];
        if (es.empty()) throw ParseError("missing exponent");
        e = static_cast<std::uint32_t>(std::stoul(es));
      }
      m = m * Monomial::variable(*v, e);
    }
    out.add_term(m, c);
    detail::skip_ws(text, i);
  }
  return out;
}

/// Exact division of every coefficient by d; throws NonDivisibleError on the
/// first remainder. The error doubles as the integrality tripwire for the
/// divided-binomial numerators.
inline IntPoly exact_div_by(const IntPoly& f, const Int& d) {
  if (d == 0) throw Error("division by zero");
  IntPoly out;
  for (const auto& [m, c] : f.terms()) {
    if (c % d != 0) throw NonDivisibleError(c.str(), d.str());
    out.add_term(m, c / d);
  }
  return out;
}

inline IntPoly exact_div_by(const IntPoly& f, std::int64_t d) { return exact_div_by(f, Int(d)); }

/// Coefficient-wise reduction Z -> F_p.
inline ModPoly reduce_mod(const IntPoly& f, const Prime& p) {
  ModPoly out{PrimeField(p)};
  Int pp(p.value());
  for (const auto& [m, c] : f.terms()) {
    Int r = c % pp;
    if (r < 0) r += pp;
    out.add_term(m, static_cast<std::int64_t>(r));
  }
  return out;
}

/// f^p over F_p: coefficients are fixed by Fermat and monomial exponents
/// multiply by p. Valid because the b-variables are free generators.
inline ModPoly frobenius(const ModPoly& f) {
  ModPoly out{f.ring()};
  auto p = static_cast<std::uint32_t>(f.ring().p.value());
  for (const auto& [m, c] : f.terms()) out.add_term(m.pow(p), c);
  return out;
}

inline IntPoly int_variable(Var v, std::uint32_t e = 1) {
  return IntPoly::variable(IntegerRing{}, v, e);
}

inline IntPoly int_constant(Int c) { return IntPoly::constant(IntegerRing{}, std::move(c)); }

inline ModPoly mod_variable(const Prime& p, Var v, std::uint32_t e = 1) {
  return ModPoly::variable(PrimeField(p), v, e);
}

inline ModPoly mod_constant(const Prime& p, std::int64_t c) {
  return ModPoly::constant(PrimeField(p), c);
}

}  // namespace asw
