#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "asw/prime.hpp"

namespace asw {

using Json = nlohmann::ordered_json;

enum class GroupKind { DegreeP3, DegreeP4, GroupH };

inline std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::DegreeP3: return "p3";
    case GroupKind::DegreeP4: return "p4";
    case GroupKind::GroupH: return "H";
  }
  return "?";
}

/// b2 ranges over {0, 1, alpha} with alpha a quadratic non-residue; the
/// symbolic form is kept so the same row works for every p. Other values are
/// representable for permissive experiments.
struct B2 {
  enum class Kind { Zero, One, Alpha, Other } kind = Kind::Zero;
  std::int64_t other = 0;

  static B2 zero() { return {Kind::Zero, 0}; }
  static B2 one() { return {Kind::One, 0}; }
  static B2 alpha() { return {Kind::Alpha, 0}; }
  static B2 of(std::int64_t v) {
    if (v == 0) return zero();
    if (v == 1) return one();
    return {Kind::Other, v};
  }

  std::int64_t value(const Prime& p) const {
    switch (kind) {
      case Kind::Zero: return 0;
      case Kind::One: return 1;
      case Kind::Alpha: return quadratic_nonresidue(p);
      case Kind::Other: return p.reduce(other);
    }
    return 0;
  }

  bool is_alpha() const { return kind == Kind::Alpha; }

  std::string str() const {
    switch (kind) {
      case Kind::Zero: return "0";
      case Kind::One: return "1";
      case Kind::Alpha: return "alpha";
      case Kind::Other: return std::to_string(other);
    }
    return "?";
  }

  bool operator==(const B2& o) const { return kind == o.kind && other == o.other; }
};

/// (p, a, b) parameter block, or the H flag. For degree p^3 the a_i may be
/// arbitrary elements of F_p; degree p^4 keeps the 0/1 ranges of the catalog.
struct GroupParams {
  Prime p;
  GroupKind kind;
  std::int64_t a0 = 0, a1 = 0;
  std::int64_t b0 = 0, b1 = 0, b3 = 0;
  B2 b2 = B2::zero();

  static GroupParams degree_p3(Prime p, std::int64_t a0, std::int64_t a1) {
    GroupParams g{p, GroupKind::DegreeP3};
    g.a0 = p.reduce(a0);
    g.a1 = p.reduce(a1);
    return g;
  }

  static GroupParams degree_p4(Prime p, std::int64_t a0, std::int64_t a1, std::int64_t b0,
                               std::int64_t b1, B2 b2, std::int64_t b3) {
    GroupParams g{p, GroupKind::DegreeP4};
    g.a0 = a0;
    g.a1 = a1;
    g.b0 = b0;
    g.b1 = b1;
    g.b2 = b2;
    g.b3 = b3;
    return g;
  }

  static GroupParams group_h(Prime p) {
    GroupParams g{p, GroupKind::GroupH};
    // the degree-p^3 sub-extension of H has a = (0, 1)
    g.a0 = 0;
    g.a1 = 1;
    return g;
  }

  std::int64_t b2_value() const { return b2.value(p); }

  bool same_shape(const GroupParams& o) const {
    return kind == o.kind && a0 == o.a0 && a1 == o.a1 && b0 == o.b0 && b1 == o.b1 &&
           b2 == o.b2 && b3 == o.b3;
  }

  Json to_json() const {
    Json j;
    j["kind"] = kind_name(kind);
    if (kind != GroupKind::GroupH) {
      j["a"] = Json::array({a0, a1});
      if (kind == GroupKind::DegreeP4) {
        j["b"] = Json::array({b0, b1, b2.value(p), b3});
        j["b2_symbol"] = b2.is_alpha() ? Json("alpha") : Json(nullptr);
      }
    }
    return j;
  }

  std::string str() const {
    if (kind == GroupKind::GroupH) return "H";
    std::string s = "a=(" + std::to_string(a0) + "," + std::to_string(a1) + ")";
    if (kind == GroupKind::DegreeP4) {
      s += ", b=(" + std::to_string(b0) + "," + std::to_string(b1) + "," + b2.str() + "," +
           std::to_string(b3) + ")";
    }
    return s;
  }
};

/// One line of the group catalog: the classical labels, the translation from
/// the generators P,Q,R,S used in the classical listing, the parameter
/// values, and when the line applies (two of the label rows split on p = 3).
struct CatalogRow {
  int table;  // 1 = degree p^4, 2 = degree p^3
  std::string label;
  std::string james_p3;    // label when p = 3
  std::string james_pgt3;  // label when p > 3
  std::array<std::string, 4> translation;
  GroupKind kind;
  std::int64_t a0 = 0, a1 = 0, b0 = 0, b1 = 0, b3 = 0;
  B2 b2 = B2::zero();
  enum class Applies { All, OnlyP3, OnlyPgt3 } applies = Applies::All;

  bool applicable(const Prime& p) const {
    switch (applies) {
      case Applies::All: return true;
      case Applies::OnlyP3: return p.value() == 3;
      case Applies::OnlyPgt3: return p.value() > 3;
    }
    return true;
  }

  std::string james(const Prime& p) const { return p.value() == 3 ? james_p3 : james_pgt3; }

  GroupParams params(Prime p) const {
    switch (kind) {
      case GroupKind::GroupH: return GroupParams::group_h(p);
      case GroupKind::DegreeP3: return GroupParams::degree_p3(p, a0, a1);
      case GroupKind::DegreeP4: return GroupParams::degree_p4(p, a0, a1, b0, b1, b2, b3);
    }
    throw Error("bad catalog row");
  }

  Json to_json(const Prime& p) const {
    Json j;
    j["label"] = label;
    if (table == 1) {
      j["james"] = james(p);
      j["translation"] = Json{{"sigma1", translation[0]},
                              {"sigma2", translation[1]},
                              {"sigma3", translation[2]},
                              {"sigma4", translation[3]}};
    }
    if (kind == GroupKind::GroupH) {
      j["a"] = Json(nullptr);
      j["b"] = Json(nullptr);
    } else {
      j["a"] = Json::array({a0, a1});
      if (kind == GroupKind::DegreeP4) {
        j["b"] = Json::array({b0, b1, b2.value(p), b3});
        j["b2_symbol"] = b2.is_alpha() ? Json("alpha") : Json(nullptr);
      }
    }
    j["applicable"] = applicable(p);
    return j;
  }
};

/// 11 degree-p^4 rows (ten groups; one label has a p=3 variant and a p>3
/// variant) followed by the 4 degree-p^3 rows.
inline const std::vector<CatalogRow>& catalog() {
  static const std::vector<CatalogRow> rows = [] {
    using A = CatalogRow::Applies;
    std::vector<CatalogRow> r;
    auto g4 = [&](std::string label, std::string j3, std::string jg, std::array<std::string, 4> tr,
                  std::int64_t a0, std::int64_t a1, std::int64_t b0, std::int64_t b1, B2 b2,
                  std::int64_t b3, A ap) {
      CatalogRow row;
      row.table = 1;
      row.label = std::move(label);
      row.james_p3 = std::move(j3);
      row.james_pgt3 = std::move(jg);
      row.translation = std::move(tr);
      row.kind = GroupKind::DegreeP4;
      row.a0 = a0;
      row.a1 = a1;
      row.b0 = b0;
      row.b1 = b1;
      row.b2 = b2;
      row.b3 = b3;
      row.applies = ap;
      r.push_back(std::move(row));
    };
    g4("(xiv)", "phi2(1^4)", "phi2(1^4)", {"S", "R", "Q", "P"}, 0, 0, 1, 0, B2::zero(), 0, A::All);
    g4("(ix)", "phi2(211)a", "phi2(211)a", {"P", "R^-1", "Q", "P^p"}, 0, 0, 1, 1, B2::zero(), 0,
       A::All);
    g4("(vii)", "phi2(211)b", "phi2(211)b", {"R", "P", "Q", "P^p"}, 0, 0, 0, 0, B2::one(), 1,
       A::All);
    g4("(xv),p=3", "phi3(1^4)", "phi3(1^4)", {"R", "P^-1", "Q^-1", "P^p"}, 1, 0, 0, 0, B2::alpha(),
       1, A::OnlyP3);
    g4("(xv),p>3", "phi3(1^4)", "phi3(1^4)", {"S", "R", "Q", "P"}, 1, 0, 0, 0, B2::zero(), 1,
       A::OnlyPgt3);
    g4("(x)", "phi2(211)", "phi2(211)", {"P", "R", "Q^-1", "P^p"}, 1, 0, 0, 1, B2::zero(), 0,
       A::All);
    g4("(xi)", "phi3(211)b1", "phi3(211)a", {"P", "R", "Q^-1", "P^p"}, 1, 0, 0, 1, B2::zero(), 1,
       A::All);
    g4("(xii)", "phi3(211)bnu", "phi3(211)b1", {"P", "R", "Q^-1", "P^p"}, 1, 0, 0, 1, B2::one(), 1,
       A::All);
    g4("(xiii)", "phi3(211)a", "phi3(211)bnu", {"P", "R", "Q^-1", "P^p"}, 1, 0, 0, 1, B2::alpha(),
       1, A::All);
    g4("(viii)", "phi2(22)", "phi2(22)", {"P", "Q^-1", "P^p", "Q^-p"}, 1, 1, 0, 0, B2::one(), 0,
       A::All);
    {
      CatalogRow row;
      row.table = 1;
      row.label = "(vi)";
      row.james_p3 = row.james_pgt3 = "phi2(31)";
      row.translation = {"P", "Q^-1", "P^p", "P^(p^2)"};
      row.kind = GroupKind::GroupH;
      r.push_back(std::move(row));
    }
    auto g3 = [&](std::string label, std::int64_t a0, std::int64_t a1) {
      CatalogRow row;
      row.table = 2;
      row.label = std::move(label);
      row.kind = GroupKind::DegreeP3;
      row.a0 = a0;
      row.a1 = a1;
      r.push_back(std::move(row));
    };
    g3("C_p^3", 0, 0);
    g3("C_p^2xC_p", 0, 1);
    g3("H(p^3)", 1, 0);
    g3("M(p^3)", 1, 1);
    return r;
  }();
  return rows;
}

namespace detail {

inline std::string normalize_label(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == ' ' || c == '_' || c == '{' || c == '}') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace detail

/// Label lookup with a few forgiving aliases; "(xv)" alone resolves to the
/// variant that applies at the given p.
inline const CatalogRow* catalog_lookup(std::string_view key, const Prime& p) {
  std::string k = detail::normalize_label(key);
  if (k == "(xv)") k = p.value() == 3 ? "(xv),p=3" : "(xv),p>3";
  if (k == "h" || k == "grouph") k = "(vi)";
  if (k == "cp3") k = "cp^3";
  if (k == "cp2xcp" || k == "cpp2xcp") k = "cp^2xcp";
  if (k == "h(p3)" || k == "hp3" || k == "hp^3") k = "h(p^3)";
  if (k == "m(p3)" || k == "mp3" || k == "mp^3") k = "m(p^3)";
  for (const auto& row : catalog()) {
    if (detail::normalize_label(row.label) == k) return &row;
  }
  return nullptr;
}

/// Reverse lookup params -> row (exact shape match, alpha matched by symbol).
inline const CatalogRow* catalog_find(const GroupParams& gp) {
  for (const auto& row : catalog()) {
    if (row.kind != gp.kind) continue;
    if (gp.kind == GroupKind::GroupH) return &row;
    if (row.a0 != gp.a0 || row.a1 != gp.a1) continue;
    if (gp.kind == GroupKind::DegreeP4) {
      if (row.b0 != gp.b0 || row.b1 != gp.b1 || row.b3 != gp.b3) continue;
      if (!(row.b2 == gp.b2 || row.b2.value(gp.p) == gp.b2.value(gp.p))) continue;
    }
    return &row;
  }
  return nullptr;
}

/// Constraint checks. Strict mode additionally pins degree-p^4 parameters to
/// catalog rows; permissive mode downgrades that to a warning so equivalent
/// representations stay constructible.
inline void validate_params(const GroupParams& gp, bool strict,
                            std::vector<std::string>* warnings = nullptr) {
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };
  switch (gp.kind) {
    case GroupKind::GroupH:
      return;
    case GroupKind::DegreeP3:
      return;  // general a in F_p is allowed
    case GroupKind::DegreeP4: {
      auto in01 = [](std::int64_t v) { return v == 0 || v == 1; };
      if (!in01(gp.a0) || !in01(gp.a1) || !in01(gp.b0) || !in01(gp.b1) || !in01(gp.b3)) {
        throw InvalidParamsError("degree-p^4 parameters a0,a1,b0,b1,b3 must be 0 or 1");
      }
      if (gp.a1 * gp.b3 != 0) throw InvalidParamsError("a1*b3 must be 0");
      if (gp.b2.kind == B2::Kind::Other) {
        if (strict) {
          throw InvalidParamsError("b2 must be 0, 1, or a quadratic non-residue (alpha)");
        }
        warn("b2 = " + gp.b2.str() + " is outside {0,1,alpha}");
      }
      if (!catalog_find(gp)) {
        if (strict) {
          throw InvalidParamsError("parameter row " + gp.str() +
                                   " is outside the catalog (strict mode)");
        }
        warn("parameter row " + gp.str() + " is outside the catalog");
      }
      return;
    }
  }
}

}  // namespace asw
