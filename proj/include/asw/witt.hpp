#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "asw/polynomial.hpp"

namespace asw {

/// The four correction polynomials, kept both as exact integer lifts (the
/// canonical lifts, with coefficients -binom(p,i)/p and friends) and as their
/// reductions mod p. The lifts matter: the degree-p^2 numerators are
/// assembled in Z from them before the division by p^2.
struct WittSet {
  Prime p;
  IntPoly c1_lift;  // in x1
  IntPoly d1_lift;  // in x1, b1
  IntPoly c2_lift;  // in x1, x3
  IntPoly d2_lift;  // in x1, x3, b1, b3
  ModPoly c1, d1, c2, d2;
};

namespace detail {

inline IntPoly int_one_plus(Var v) { return int_variable(v) + int_constant(1); }

}  // namespace detail

/// (x1^p + 1 - (x1+1)^p) / p, exactly in Z[x1].
inline IntPoly build_c1_lift(const Prime& p) {
  auto e = static_cast<std::uint64_t>(p.value());
  IntPoly num = int_variable(Var::x1, static_cast<std::uint32_t>(e)) + int_constant(1) -
                detail::int_one_plus(Var::x1).pow(e);
  return exact_div_by(num, p.value());
}

/// (x1^p + b1^p - (x1+b1)^p) / p, exactly in Z[x1,b1].
inline IntPoly build_d1_lift(const Prime& p, Var xv = Var::x1, Var bv = Var::b1) {
  auto e = static_cast<std::uint64_t>(p.value());
  IntPoly num = int_variable(xv, static_cast<std::uint32_t>(e)) +
                int_variable(bv, static_cast<std::uint32_t>(e)) -
                (int_variable(xv) + int_variable(bv)).pow(e);
  return exact_div_by(num, p.value());
}

/// (x1^{p^2} + 1 - (x1+1)^{p^2} + p*(x3^p - (x3 + C1)^p)) / p^2, with the
/// canonical integer lift of C1 inside the numerator. Whole-numerator
/// integrality is the point; individual binomial terms need not divide.
inline IntPoly build_c2_lift(const Prime& p) {
  auto pv = static_cast<std::uint64_t>(p.value());
  auto p2 = static_cast<std::uint32_t>(pv * pv);
  IntPoly c1 = build_c1_lift(p);
  IntPoly x3 = int_variable(Var::x3);
  IntPoly num = int_variable(Var::x1, p2) + int_constant(1) -
                detail::int_one_plus(Var::x1).pow(pv * pv) +
                (x3.pow(pv) - (x3 + c1).pow(pv)).scaled(Int(p.value()));
  return exact_div_by(num, Int(p.value()) * p.value());
}

/// (x1^{p^2} + b1^{p^2} - (x1+b1)^{p^2}
///    + p*(x3^p + b3^p - (x3 + D1 + b3)^p)) / p^2.
inline IntPoly build_d2_lift(const Prime& p) {
  auto pv = static_cast<std::uint64_t>(p.value());
  auto p2 = static_cast<std::uint32_t>(pv * pv);
  IntPoly d1 = build_d1_lift(p);
  IntPoly x3 = int_variable(Var::x3);
  IntPoly b3 = int_variable(Var::b3);
  IntPoly num = int_variable(Var::x1, p2) + int_variable(Var::b1, p2) -
                (int_variable(Var::x1) + int_variable(Var::b1)).pow(pv * pv) +
                (x3.pow(pv) + b3.pow(pv) - (x3 + d1 + b3).pow(pv)).scaled(Int(p.value()));
  return exact_div_by(num, Int(p.value()) * p.value());
}

inline ModPoly build_c1(const Prime& p) { return reduce_mod(build_c1_lift(p), p); }
inline ModPoly build_d1(const Prime& p) { return reduce_mod(build_d1_lift(p), p); }
inline ModPoly build_c2(const Prime& p) { return reduce_mod(build_c2_lift(p), p); }
inline ModPoly build_d2(const Prime& p) { return reduce_mod(build_d2_lift(p), p); }

/// Cached per prime; the degree-p^2 constructions are the expensive ones.
inline std::shared_ptr<const WittSet> witt_set(const Prime& p) {
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const WittSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p.value());
  if (it != cache.end()) return it->second;
  auto ws = std::make_shared<WittSet>(WittSet{p,
                                              build_c1_lift(p),
                                              build_d1_lift(p),
                                              build_c2_lift(p),
                                              build_d2_lift(p),
                                              ModPoly{PrimeField(p)},
                                              ModPoly{PrimeField(p)},
                                              ModPoly{PrimeField(p)},
                                              ModPoly{PrimeField(p)}});
  auto* w = const_cast<WittSet*>(ws.get());
  w->c1 = reduce_mod(ws->c1_lift, p);
  w->d1 = reduce_mod(ws->d1_lift, p);
  w->c2 = reduce_mod(ws->c2_lift, p);
  w->d2 = reduce_mod(ws->d2_lift, p);
  cache.emplace(p.value(), ws);
  return ws;
}

/// D1 with x2/b2 (or any generator pair) in place of x1/b1.
inline ModPoly d1_in(const Prime& p, Var xv, Var bv) {
  return reduce_mod(build_d1_lift(p, xv, bv), p);
}

/// C1 with another generator in place of x1.
inline ModPoly c1_in(const Prime& p, Var xv) {
  ModPoly c1 = witt_set(p)->c1;
  std::map<Var, ModPoly> sub{{Var::x1, mod_variable(p, xv)}};
  return c1.substitute(sub);
}

}  // namespace asw
