#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "asw/polynomial.hpp"

namespace asw {

using Json = nlohmann::ordered_json;

/// Triangular Artin-Schreier quotient ring
///   R = F_p[b1..b4][x_i : relations] / (x_i^p - x_i - W_i)
/// where each right-hand side W_i is in normal form and mentions only
/// strictly earlier tower generators (plus the free b's). Triangularity is
/// what makes the rewriting below terminate.
class TowerSpec {
public:
  struct Relation {
    Var var;
    ModPoly rhs;
  };

  static std::shared_ptr<const TowerSpec> create(Prime p, std::vector<Relation> relations) {
    auto spec = std::shared_ptr<TowerSpec>(new TowerSpec(p, std::move(relations)));
    spec->validate();
    return spec;
  }

  const Prime& prime() const { return p_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t size() const { return relations_.size(); }

  bool has_var(Var v) const { return is_x_var(v) && index_of_[x_index(v) - 1] >= 0; }

  const ModPoly& rhs(Var v) const {
    if (!has_var(v)) throw UnknownVariableError(std::string(var_name(v)) + " not in tower");
    return relations_[index_of_[x_index(v) - 1]].rhs;
  }

  /// x_v + W_v, the replacement for x_v^p during normalization.
  const ModPoly& step(Var v) const {
    if (!has_var(v)) throw UnknownVariableError(std::string(var_name(v)) + " not in tower");
    return steps_[index_of_[x_index(v) - 1]];
  }

  bool same_as(const TowerSpec& o) const {
    if (p_ != o.p_ || relations_.size() != o.relations_.size()) return false;
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      if (relations_[i].var != o.relations_[i].var) return false;
      if (relations_[i].rhs != o.relations_[i].rhs) return false;
    }
    return true;
  }

  Json to_json() const {
    Json rels = Json::array();
    for (const auto& r : relations_) {
      rels.push_back(Json{{"var", std::string(var_name(r.var))}, {"rhs", r.rhs.str()}});
    }
    return Json{{"p", p_.value()}, {"relations", rels}};
  }

  static std::shared_ptr<const TowerSpec> from_json(const Json& j) {
    Prime p(j.at("p").get<std::int64_t>());
    std::vector<Relation> rels;
    for (const auto& r : j.at("relations")) {
      auto v = var_from_name(r.at("var").get<std::string>());
      if (!v) throw ParseError("bad tower variable: " + r.at("var").get<std::string>());
      rels.push_back({*v, ModPoly::parse(PrimeField(p), r.at("rhs").get<std::string>())});
    }
    return create(p, std::move(rels));
  }

private:
  TowerSpec(Prime p, std::vector<Relation> relations)
      : p_(p), relations_(std::move(relations)) {
    index_of_.fill(-1);
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      index_of_[x_index(relations_[i].var) - 1] = static_cast<int>(i);
      steps_.push_back(mod_variable(p_, relations_[i].var) + relations_[i].rhs);
    }
  }

  void validate() const {
    auto pv = static_cast<std::uint32_t>(p_.value());
    int prev = 0;
    for (const auto& r : relations_) {
      if (!is_x_var(r.var)) throw Error("tower generator must be an x-variable");
      int idx = x_index(r.var);
      if (idx <= prev) throw Error("tower generators must be strictly ascending");
      if (!r.rhs.ring().compatible(PrimeField(p_))) {
        throw ModulusMismatchError("relation rhs modulus differs from tower prime");
      }
      for (const auto& [m, c] : r.rhs.terms()) {
        for (Var xv : kXVars) {
          std::uint32_t e = m.exp(xv);
          if (!e) continue;
          if (x_index(xv) >= idx) {
            throw Error("relation for " + std::string(var_name(r.var)) +
                        " mentions " + std::string(var_name(xv)) + "; tower not triangular");
          }
          if (!has_var_raw(xv, prev)) {
            throw UnknownVariableError("relation mentions " + std::string(var_name(xv)) +
                                       " which has no tower relation");
          }
          if (e >= pv) throw Error("relation rhs not in normal form");
        }
      }
      prev = idx;
    }
  }

  bool has_var_raw(Var v, int upto) const {
    int idx = x_index(v);
    return idx <= upto && index_of_[idx - 1] >= 0;
  }

  Prime p_;
  std::vector<Relation> relations_;
  std::vector<ModPoly> steps_;
  std::array<int, 4> index_of_{};
};

using TowerPtr = std::shared_ptr<const TowerSpec>;

/// Rewrites x_i^e with e >= p via x_i^e -> x_i^{e-p} * (x_i + W_i), highest
/// generator first, until every x-exponent is < p. Terminates because each
/// W_i only mentions strictly lower generators in normal form.
inline ModPoly tower_normalize(ModPoly f, const TowerSpec& spec) {
  auto pv = static_cast<std::uint32_t>(spec.prime().value());
  if (!f.ring().compatible(PrimeField(spec.prime()))) {
    throw ModulusMismatchError("element modulus differs from tower prime");
  }
  ModPoly out{f.ring()};
  ModPoly work = std::move(f);
  while (!work.is_zero()) {
    ModPoly next{work.ring()};
    for (const auto& [m, c] : work.terms()) {
      auto hot = m.highest_x_at_least(pv);
      if (!hot) {
        for (Var xv : kXVars) {
          if (m.exp(xv) && !spec.has_var(xv)) {
            throw UnknownVariableError("element mentions " + std::string(var_name(xv)) +
                                       " which is not a tower generator");
          }
        }
        out.add_term(m, c);
        continue;
      }
      Monomial rest = m.with_exp(*hot, m.exp(*hot) - pv);
      ModPoly piece{work.ring()};
      piece.add_term(rest, c);
      next += piece * spec.step(*hot);
    }
    work = std::move(next);
  }
  return out;
}

/// Element of the quotient ring, kept in normal form at all times.
class TowerElem {
public:
  TowerElem(TowerPtr spec, ModPoly value)
      : spec_(std::move(spec)), v_(tower_normalize(std::move(value), *spec_)) {}

  static TowerElem zero(TowerPtr spec) {
    ModPoly z{PrimeField(spec->prime())};
    return TowerElem(std::move(spec), std::move(z));
  }

  static TowerElem constant(TowerPtr spec, std::int64_t c) {
    auto p = spec->prime();
    return TowerElem(std::move(spec), mod_constant(p, c));
  }

  static TowerElem generator(TowerPtr spec, Var v) {
    if (!spec->has_var(v) && is_x_var(v)) {
      throw UnknownVariableError(std::string(var_name(v)) + " not in tower");
    }
    auto p = spec->prime();
    return TowerElem(std::move(spec), mod_variable(p, v));
  }

  const TowerPtr& spec() const { return spec_; }
  const ModPoly& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }

  void check_same_tower(const TowerElem& o) const {
    if (spec_.get() != o.spec_.get() && !spec_->same_as(*o.spec_)) {
      throw TowerMismatchError("operands live in different towers");
    }
  }

  friend TowerElem operator+(const TowerElem& a, const TowerElem& b) {
    a.check_same_tower(b);
    return TowerElem(a.spec_, a.v_ + b.v_, already_normal{});
  }

  friend TowerElem operator-(const TowerElem& a, const TowerElem& b) {
    a.check_same_tower(b);
    return TowerElem(a.spec_, a.v_ - b.v_, already_normal{});
  }

  friend TowerElem operator*(const TowerElem& a, const TowerElem& b) {
    a.check_same_tower(b);
    return TowerElem(a.spec_, a.v_ * b.v_);
  }

  TowerElem scaled(std::int64_t c) const {
    return TowerElem(spec_, v_.scaled(c), already_normal{});
  }

  TowerElem& operator+=(const TowerElem& o) { return *this = *this + o; }
  TowerElem& operator-=(const TowerElem& o) { return *this = *this - o; }
  TowerElem& operator*=(const TowerElem& o) { return *this = *this * o; }

  TowerElem pow(std::uint64_t e) const {
    TowerElem acc = constant(spec_, 1);
    TowerElem base = *this;
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  bool operator==(const TowerElem& o) const {
    check_same_tower(o);
    return v_ == o.v_;
  }
  bool operator!=(const TowerElem& o) const { return !(*this == o); }

  /// True when the element lies in the sub-tower generated by x_1..x_index.
  bool in_subtower(int index) const { return v_.mentions_only_x_up_to(index); }

  std::string str() const { return v_.str(); }

private:
  struct already_normal {};
  TowerElem(TowerPtr spec, ModPoly value, already_normal)
      : spec_(std::move(spec)), v_(std::move(value)) {}

  TowerPtr spec_;
  ModPoly v_;
};

/// wp(f) = f^p - f, via Frobenius on the normal form.
inline TowerElem wp(const TowerElem& f) {
  return TowerElem(f.spec(), frobenius(f.value()) - f.value());
}

inline TowerElem lift(TowerPtr spec, const ModPoly& f) { return TowerElem(std::move(spec), f); }

}  // namespace asw
