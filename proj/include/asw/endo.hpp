#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asw/tower.hpp"

namespace asw {

/// Ring endomorphism of a tower, given by the images of the generators
/// (the b's are fixed pointwise). Construction checks the well-definedness
/// certificate wp(u_i) = W_i(u) unless explicitly deferred; a corrupted image
/// cannot silently masquerade as an automorphism.
class Endo {
public:
  static Endo identity(TowerPtr spec) {
    std::vector<TowerElem> images;
    for (const auto& r : spec->relations()) images.push_back(TowerElem::generator(spec, r.var));
    return Endo(std::move(spec), std::move(images));
  }

  Endo(TowerPtr spec, std::vector<TowerElem> images, bool check_certificate = true)
      : spec_(std::move(spec)), images_(std::move(images)) {
    if (images_.size() != spec_->size()) {
      throw Error("endomorphism needs one image per tower generator");
    }
    if (check_certificate) {
      auto bad = certificate_failure();
      if (bad) {
        throw EndoCertificateError("image of " + std::string(var_name(*bad)) +
                                   " violates wp(u) = W(u)");
      }
    }
  }

  static Endo unchecked(TowerPtr spec, std::vector<TowerElem> images) {
    return Endo(std::move(spec), std::move(images), false);
  }

  const TowerPtr& spec() const { return spec_; }
  const std::vector<TowerElem>& images() const { return images_; }

  const TowerElem& image(Var v) const {
    for (std::size_t i = 0; i < spec_->size(); ++i) {
      if (spec_->relations()[i].var == v) return images_[i];
    }
    throw UnknownVariableError(std::string(var_name(v)) + " not in tower");
  }

  /// First generator whose image breaks wp(u_i) = W_i(u), if any.
  std::optional<Var> certificate_failure() const {
    for (std::size_t i = 0; i < spec_->size(); ++i) {
      const auto& rel = spec_->relations()[i];
      TowerElem lhs = wp(images_[i]);
      TowerElem rhs = apply_poly(rel.rhs);
      if (lhs != rhs) return rel.var;
    }
    return std::nullopt;
  }

  bool certificate_ok() const { return !certificate_failure().has_value(); }

  /// Substitution homomorphism: x_i -> u_i, b's fixed.
  TowerElem apply(const TowerElem& f) const {
    if (spec_.get() != f.spec().get() && !spec_->same_as(*f.spec())) {
      throw TowerMismatchError("endomorphism applied to element of another tower");
    }
    return apply_poly(f.value());
  }

  /// this after inner: (this * inner)(x) = this(inner(x)); matches the word
  /// convention sigma2*sigma1 meaning "apply sigma1 first".
  Endo compose_after(const Endo& inner) const {
    if (spec_.get() != inner.spec_.get() && !spec_->same_as(*inner.spec_)) {
      throw TowerMismatchError("composition across different towers");
    }
    std::vector<TowerElem> images;
    images.reserve(images_.size());
    for (const auto& u : inner.images_) images.push_back(apply(u));
    return Endo(spec_, std::move(images), false);
  }

  friend Endo operator*(const Endo& outer, const Endo& inner) {
    return outer.compose_after(inner);
  }

  Endo pow(std::uint64_t e) const {
    Endo acc = identity(spec_);
    Endo base = *this;
    while (e) {
      if (e & 1) acc = acc.compose_after(base);
      base = base.compose_after(base);
      e >>= 1;
    }
    return acc;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < spec_->size(); ++i) {
      if (images_[i] != TowerElem::generator(spec_, spec_->relations()[i].var)) return false;
    }
    return true;
  }

  bool operator==(const Endo& o) const {
    if (spec_.get() != o.spec_.get() && !spec_->same_as(*o.spec_)) return false;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != o.images_[i]) return false;
    }
    return true;
  }
  bool operator!=(const Endo& o) const { return !(*this == o); }

  /// Canonical key for closure sets.
  std::string key() const {
    std::string k;
    for (const auto& u : images_) {
      k += u.str();
      k += '|';
    }
    return k;
  }

private:
  TowerElem apply_poly(const ModPoly& f) const {
    auto pv = static_cast<std::uint32_t>(spec_->prime().value());
    ensure_power_tables(pv);
    TowerElem out = TowerElem::zero(spec_);
    for (const auto& [m, c] : f.terms()) {
      Monomial bpart;
      for (Var bv : kBVars) {
        if (m.exp(bv)) bpart = bpart * Monomial::variable(bv, m.exp(bv));
      }
      ModPoly coeff{PrimeField(spec_->prime())};
      coeff.add_term(bpart, c);
      TowerElem t = lift(spec_, coeff);
      for (std::size_t i = 0; i < spec_->size(); ++i) {
        std::uint32_t e = m.exp(spec_->relations()[i].var);
        if (e) t *= pow_[i][e];
      }
      out += t;
    }
    return out;
  }

  void ensure_power_tables(std::uint32_t pv) const {
    if (!pow_.empty()) return;
    pow_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      pow_[i].push_back(TowerElem::constant(spec_, 1));
      for (std::uint32_t k = 1; k < pv; ++k) pow_[i].push_back(pow_[i].back() * images_[i]);
    }
  }

  TowerPtr spec_;
  std::vector<TowerElem> images_;
  mutable std::vector<std::vector<TowerElem>> pow_;
};

/// sum_{k=0}^{n-1} e^k(f); demands e^n = id first.
inline TowerElem trace(const Endo& e, std::uint64_t n, const TowerElem& f) {
  if (!e.pow(n).is_identity()) {
    throw OrderViolationError("trace over " + std::to_string(n) +
                              " iterates of a map whose order does not divide it");
  }
  TowerElem acc = f;
  TowerElem g = f;
  for (std::uint64_t k = 1; k < n; ++k) {
    g = e.apply(g);
    acc += g;
  }
  return acc;
}

/// (e - 1)^k f, computed by repeated apply-and-subtract; the binomial
/// expansion is deliberately avoided in characteristic p.
inline TowerElem difference_power(const Endo& e, std::uint64_t k, const TowerElem& f) {
  TowerElem h = f;
  for (std::uint64_t i = 0; i < k; ++i) h = e.apply(h) - h;
  return h;
}

/// Multiplicative order by iterated composition, capped.
inline std::uint64_t endo_order(const Endo& e, std::uint64_t cap) {
  Endo g = e;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (g.is_identity()) return n;
    g = g.compose_after(e);
  }
  throw OrderViolationError("order exceeds cap " + std::to_string(cap));
}

}  // namespace asw
