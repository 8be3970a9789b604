#pragma once

#include <string>

#include "asw/tower.hpp"

namespace asw {

enum class OutputFormat { Text, JsonFmt, Latex };

inline std::optional<OutputFormat> format_from_string(std::string_view s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::JsonFmt;
  if (s == "latex") return OutputFormat::Latex;
  return std::nullopt;
}

inline std::string latex_poly(const ModPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    if (m.is_one()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += m.latex();
    } else {
      out += std::to_string(c) + m.latex();
    }
  }
  return out;
}

/// "℘(x3) = b2*x1 + b3", one line per tower relation.
inline std::string equations_text(const TowerSpec& spec) {
  std::string out;
  for (const auto& r : spec.relations()) {
    out += "℘(" + std::string(var_name(r.var)) + ") = " + r.rhs.str() + "\n";
  }
  return out;
}

/// Display-math block with the defining equations in \wp / \beta notation.
inline std::string equations_latex(const TowerSpec& spec) {
  std::string out = "\\[\\begin{aligned}\n";
  for (const auto& r : spec.relations()) {
    out += "\\wp(" + std::string(var_latex(r.var)) + ") &= " + latex_poly(r.rhs) + "\\\\\n";
  }
  out += "\\end{aligned}\\]\n";
  return out;
}

}  // namespace asw
