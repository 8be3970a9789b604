#pragma once

#include <optional>
#include <string>

#include "asw/fingerprint.hpp"
#include "asw/galois.hpp"
#include "asw/isomorphism.hpp"

namespace asw {

struct ClassifyResult {
  std::optional<std::string> label;  // matched catalog row
  std::string note;                  // "abelian: C_p^4, outside catalog", "no match", ...
  Fingerprint fp;
  bool used_search = false;
  std::uint64_t nodes = 0;
  GroupParams params;

  Json to_json() const {
    Json j;
    j["params"] = params.to_json();
    j["p"] = params.p.value();
    j["match"] = label ? Json(*label) : Json(nullptr);
    if (!note.empty()) j["note"] = note;
    j["fingerprint"] = fp.to_json();
    j["method"] = used_search ? "fingerprint+search" : "fingerprint";
    return j;
  }
};

/// Identify the catalog row isomorphic to the group presented by `gp`:
/// fingerprint first, generator-image search for collisions. Abelian
/// degree-p^4 combinations sit outside the catalog and are reported as such.
inline ClassifyResult classify_params(const GroupParams& gp, std::uint64_t node_budget = 10'000'000) {
  ClassifyResult out{std::nullopt, "", {}, false, 0, gp};
  validate_params(gp, /*strict=*/false, nullptr);
  PresGroup G = PresGroup::from_params(gp);
  out.fp = fingerprint(G);

  int want_table = gp.kind == GroupKind::DegreeP3 ? 2 : 1;
  for (const auto& row : catalog()) {
    if (row.table != want_table || !row.applicable(gp.p)) continue;
    PresGroup H = PresGroup::from_params(row.params(gp.p));
    Fingerprint fph = fingerprint(H);
    if (fph != out.fp) continue;
    if (row.params(gp.p).same_shape(gp)) {
      out.label = row.label;
      return out;
    }
    IsoOptions opts;
    opts.node_budget = node_budget;
    opts.fingerprint_prescreen = false;  // already matched
    IsoResult iso = are_isomorphic(G, H, opts);
    out.used_search = true;
    out.nodes += iso.nodes;
    if (iso.isomorphic) {
      out.label = row.label;
      return out;
    }
  }
  if (out.fp.derived_order == 1 && want_table == 1) {
    // abelian degree-p^4 combinations sit outside the catalog by design
    auto pv = static_cast<std::uint64_t>(gp.p.value());
    out.note = out.fp.exponent == pv ? "abelian: C_p^4, outside catalog"
                                     : "abelian, outside catalog";
    return out;
  }
  out.note = "no match";
  return out;
}

/// Recover (a, b) or the H shape from a bare tower by matching the relation
/// right-hand sides against the defining-equation templates.
inline std::optional<GroupParams> infer_params(const TowerPtr& spec) {
  const Prime p = spec->prime();
  auto ws = witt_set(p);
  ModPoly vb1 = mod_variable(p, Var::b1);
  ModPoly vb2 = mod_variable(p, Var::b2);
  ModPoly vb3 = mod_variable(p, Var::b3);
  ModPoly vx1 = mod_variable(p, Var::x1);

  if (spec->size() < 3) return std::nullopt;
  if (spec->relations()[0].var != Var::x1 || !(spec->rhs(Var::x1) == vb1)) return std::nullopt;
  if (spec->relations()[1].var != Var::x2 || !(spec->rhs(Var::x2) == vb2)) return std::nullopt;
  if (spec->relations()[2].var != Var::x3) return std::nullopt;

  // wp(x3) = a0*b2*x1 + a1*D1 + b3
  std::optional<std::pair<std::int64_t, std::int64_t>> a;
  for (std::int64_t a0 = 0; a0 < p.value() && !a; ++a0) {
    for (std::int64_t a1 = 0; a1 < p.value() && !a; ++a1) {
      ModPoly w3 = (vb2 * vx1).scaled(a0) + ws->d1.scaled(a1) + vb3;
      if (w3 == spec->rhs(Var::x3)) a = {a0, a1};
    }
  }

  if (spec->size() == 3) {
    if (!a) return std::nullopt;
    return GroupParams::degree_p3(p, a->first, a->second);
  }
  if (spec->size() != 4 || spec->relations()[3].var != Var::x4) return std::nullopt;

  // H shape: wp(x3) = D1 + b3 and wp(x4) = b2*x1 + D2 + b4
  if (spec->rhs(Var::x3) == ws->d1 + vb3) {
    GroupParams h = GroupParams::group_h(p);
    if (build_equations(h)->rhs(Var::x4) == spec->rhs(Var::x4)) return h;
  }
  if (!a) return std::nullopt;

  for (std::int64_t b0 = 0; b0 <= 1; ++b0) {
    for (std::int64_t b1 = 0; b1 <= 1; ++b1) {
      for (std::int64_t b3 = 0; b3 <= 1; ++b3) {
        for (std::int64_t b2v = 0; b2v < p.value(); ++b2v) {
          if (a->second * b3 != 0) continue;
          B2 b2 = b2v == quadratic_nonresidue(p) ? B2::alpha() : B2::of(b2v);
          GroupParams gp = GroupParams::degree_p4(p, a->first, a->second, b0, b1, b2, b3);
          if (build_equations(gp)->rhs(Var::x4) == spec->rhs(Var::x4)) return gp;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace asw
