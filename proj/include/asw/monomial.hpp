#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "asw/errors.hpp"

namespace asw {

/// The variable set is closed: four tower generators x1..x4 and four free
/// base-field constants b1..b4. Enum order is the printing order inside a
/// monomial (b1 first), comparison precedence runs the other way (x4 first).
enum class Var : std::uint8_t { b1 = 0, b2, b3, b4, x1, x2, x3, x4 };

inline constexpr int kVarCount = 8;

inline constexpr std::array<Var, 4> kXVars = {Var::x1, Var::x2, Var::x3, Var::x4};
inline constexpr std::array<Var, 4> kBVars = {Var::b1, Var::b2, Var::b3, Var::b4};

inline bool is_x_var(Var v) { return static_cast<int>(v) >= 4; }

/// 1-based index of an x-variable (x1 -> 1, ..., x4 -> 4).
inline int x_index(Var v) { return static_cast<int>(v) - 3; }

inline Var x_var(int index) { return static_cast<Var>(3 + index); }
inline Var b_var(int index) { return static_cast<Var>(index - 1); }

inline std::string_view var_name(Var v) {
  static constexpr std::array<std::string_view, 8> names = {"b1", "b2", "b3", "b4",
                                                            "x1", "x2", "x3", "x4"};
  return names[static_cast<int>(v)];
}

inline std::string_view var_latex(Var v) {
  static constexpr std::array<std::string_view, 8> names = {
      "\\beta_1", "\\beta_2", "\\beta_3", "\\beta_4", "x_1", "x_2", "x_3", "x_4"};
  return names[static_cast<int>(v)];
}

inline std::optional<Var> var_from_name(std::string_view s) {
  for (int i = 0; i < kVarCount; ++i) {
    if (var_name(static_cast<Var>(i)) == s) return static_cast<Var>(i);
  }
  return std::nullopt;
}

/// Exponent vector over the closed variable set. The total order is
/// lexicographic with precedence x4 > x3 > x2 > x1 > b4 > b3 > b2 > b1.
class Monomial {
public:
  Monomial() = default;

  static Monomial variable(Var v, std::uint32_t e = 1) {
    Monomial m;
    m.e_[static_cast<int>(v)] = e;
    return m;
  }

  std::uint32_t exp(Var v) const { return e_[static_cast<int>(v)]; }

  Monomial with_exp(Var v, std::uint32_t e) const {
    Monomial m = *this;
    m.e_[static_cast<int>(v)] = e;
    return m;
  }

  bool is_one() const {
    for (auto e : e_)
      if (e) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kVarCount; ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
  }

  Monomial pow(std::uint32_t k) const {
    Monomial m;
    for (int i = 0; i < kVarCount; ++i) m.e_[i] = e_[i] * k;
    return m;
  }

  /// lex compare; positive when *this is larger.
  int compare(const Monomial& o) const {
    for (int i = kVarCount - 1; i >= 0; --i) {
      if (e_[i] != o.e_[i]) return e_[i] > o.e_[i] ? 1 : -1;
    }
    return 0;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (auto e : e_) d += e;
    return d;
  }

  /// Largest x-variable with exponent >= bound, or nullopt.
  std::optional<Var> highest_x_at_least(std::uint32_t bound) const {
    for (int i = kVarCount - 1; i >= 4; --i) {
      if (e_[i] >= bound) return static_cast<Var>(i);
    }
    return std::nullopt;
  }

  bool mentions_x_above(int index) const {
    for (int i = 4; i < kVarCount; ++i) {
      if (e_[i] && x_index(static_cast<Var>(i)) > index) return true;
    }
    return false;
  }

  /// "b1^2*x1"; empty string for the unit monomial.
  std::string str() const {
    std::string out;
    for (int i = 0; i < kVarCount; ++i) {
      if (!e_[i]) continue;
      if (!out.empty()) out += '*';
      out += var_name(static_cast<Var>(i));
      if (e_[i] > 1) {
        out += '^';
        out += std::to_string(e_[i]);
      }
    }
    return out;
  }

  std::string latex() const {
    std::string out;
    for (int i = 0; i < kVarCount; ++i) {
      if (!e_[i]) continue;
      out += var_latex(static_cast<Var>(i));
      if (e_[i] > 1) {
        out += "^{";
        out += std::to_string(e_[i]);
        out += '}';
      }
    }
    return out;
  }

private:
  std::array<std::uint32_t, 8> e_{};
};

/// Canonical term order: descending, so leading terms print first.
struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.compare(b) > 0; }
};

}  // namespace asw
