#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "asw/catalog.hpp"
#include "asw/prime.hpp"

namespace asw {

/// Defining relator, stored as a pair of positive words over generator
/// letters (1-based). Keeping relators as words lets the same list drive the
/// abstract collection engine, the realized automorphism checks, and the
/// naive rewriting oracle in the tests.
struct Relator {
  std::string name;
  std::string display;
  std::vector<int> lhs;
  std::vector<int> rhs;
};

namespace detail {

inline std::vector<int> word_pow(int letter, std::int64_t e) {
  return std::vector<int>(static_cast<std::size_t>(e), letter);
}

inline std::vector<int> word_cat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& w : parts) out.insert(out.end(), w.begin(), w.end());
  return out;
}

inline std::string word_str(const std::vector<int>& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += "sigma" + std::to_string(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace detail

/// Abstract polycyclic presentation with exponent-tuple normal forms.
/// G-forms store (e1,e2,e3,e4) with every entry in [0,p); the metacyclic H
/// stores (e1,e2) with e1 in [0,p^3). Multiplication is collection: the
/// incoming sigma1-block moves left through the swap relations and the power
/// relations absorb the carries.
class PresGroup {
public:
  struct Elem {
    std::array<std::int64_t, 4> e{};
    bool operator==(const Elem& o) const { return e == o.e; }
    bool operator!=(const Elem& o) const { return e != o.e; }
    bool operator<(const Elem& o) const { return e < o.e; }
  };

  static PresGroup g_form(Prime p, bool has4, std::int64_t a0, std::int64_t a1, std::int64_t b0,
                          std::int64_t b1, std::int64_t b2, std::int64_t b3) {
    PresGroup g(p);
    g.hform_ = false;
    g.has4_ = has4;
    g.a0_ = p.reduce(a0);
    g.a1_ = p.reduce(a1);
    g.b0_ = has4 ? p.reduce(b0) : 0;
    g.b1_ = has4 ? p.reduce(b1) : 0;
    g.b2_ = has4 ? p.reduce(b2) : 0;
    g.b3_ = has4 ? p.reduce(b3) : 0;
    g.build_relators();
    return g;
  }

  static PresGroup h_form(Prime p) {
    PresGroup g(p);
    g.hform_ = true;
    g.has4_ = false;
    g.build_relators();
    return g;
  }

  static PresGroup from_params(const GroupParams& gp) {
    switch (gp.kind) {
      case GroupKind::GroupH: return h_form(gp.p);
      case GroupKind::DegreeP3: return g_form(gp.p, false, gp.a0, gp.a1, 0, 0, 0, 0);
      case GroupKind::DegreeP4:
        return g_form(gp.p, true, gp.a0, gp.a1, gp.b0, gp.b1, gp.b2_value(), gp.b3);
    }
    throw Error("bad params");
  }

  const Prime& prime() const { return p_; }
  bool is_h_form() const { return hform_; }

  int generator_count() const { return hform_ ? 2 : (has4_ ? 4 : 3); }

  std::uint64_t order() const {
    auto pv = static_cast<std::uint64_t>(p_.value());
    if (hform_) return pv * pv * pv * pv;
    return has4_ ? pv * pv * pv * pv : pv * pv * pv;
  }

  Elem id() const { return Elem{}; }

  Elem gen(int i) const {  // 1-based
    Elem g;
    g.e[static_cast<std::size_t>(i - 1)] = 1;
    return g;
  }

  Elem mul(const Elem& x, const Elem& y) const {
    std::int64_t p = p_.value();
    if (hform_) {
      std::int64_t p3 = p * p * p;
      Elem r;
      r.e[0] = (x.e[0] + y.e[0] % p3 * pow_mod(1 + p * p, x.e[1], p3)) % p3;
      r.e[1] = (x.e[1] + y.e[1]) % p;
      return r;
    }
    std::int64_t t1 = x.e[0] + y.e[0];
    std::int64_t t2 = x.e[1] + y.e[1];
    std::int64_t t3 = x.e[2] + y.e[2] + a0_ * x.e[1] * y.e[0];
    std::int64_t t4 = x.e[3] + y.e[3] + b0_ * x.e[1] * y.e[0] +
                      a0_ * b3_ * x.e[1] * (y.e[0] * (y.e[0] - 1) / 2) + b3_ * x.e[2] * y.e[0];
    if (t1 >= p) {
      t1 -= p;
      t3 += a1_;
      t4 += b1_;
    }
    if (t2 >= p) {
      t2 -= p;
      t4 += b2_;
    }
    Elem r;
    r.e[0] = t1;
    r.e[1] = t2;
    r.e[2] = t3 % p;
    r.e[3] = has4_ ? t4 % p : 0;
    return r;
  }

  Elem pow(Elem g, std::uint64_t n) const {
    Elem acc = id();
    while (n) {
      if (n & 1) acc = mul(acc, g);
      g = mul(g, g);
      n >>= 1;
    }
    return acc;
  }

  std::uint64_t elem_order(const Elem& g) const {
    Elem h = g;
    std::uint64_t n = 1;
    while (!(h == id())) {
      h = mul(h, g);
      ++n;
    }
    return n;
  }

  Elem inv(const Elem& g) const { return pow(g, elem_order(g) - 1); }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    std::int64_t p = p_.value();
    if (hform_) {
      std::int64_t p3 = p * p * p;
      out.reserve(static_cast<std::size_t>(p3 * p));
      for (std::int64_t e2 = 0; e2 < p; ++e2)
        for (std::int64_t e1 = 0; e1 < p3; ++e1) out.push_back(Elem{{e1, e2, 0, 0}});
      return out;
    }
    std::int64_t r4 = has4_ ? p : 1;
    out.reserve(static_cast<std::size_t>(p * p * p * r4));
    for (std::int64_t e4 = 0; e4 < r4; ++e4)
      for (std::int64_t e3 = 0; e3 < p; ++e3)
        for (std::int64_t e2 = 0; e2 < p; ++e2)
          for (std::int64_t e1 = 0; e1 < p; ++e1) out.push_back(Elem{{e1, e2, e3, e4}});
    return out;
  }

  std::uint64_t index_of(const Elem& g) const {
    std::int64_t p = p_.value();
    if (hform_) return static_cast<std::uint64_t>(g.e[0] + p * p * p * g.e[1]);
    return static_cast<std::uint64_t>(g.e[0] + p * (g.e[1] + p * (g.e[2] + p * g.e[3])));
  }

  const std::vector<Relator>& relators() const { return relators_; }

  Elem eval_word(const std::vector<int>& w) const {
    Elem acc = id();
    for (int L : w) acc = mul(acc, gen(L));
    return acc;
  }

  Elem eval_word(const std::vector<int>& w, const std::vector<Elem>& images) const {
    Elem acc = id();
    for (int L : w) acc = mul(acc, images[static_cast<std::size_t>(L - 1)]);
    return acc;
  }

  std::string elem_str(const Elem& g) const {
    std::string out;
    int n = hform_ ? 2 : generator_count();
    for (int i = 0; i < n; ++i) {
      if (!g.e[static_cast<std::size_t>(i)]) continue;
      if (!out.empty()) out += "*";
      out += "sigma" + std::to_string(i + 1);
      if (g.e[static_cast<std::size_t>(i)] > 1)
        out += "^" + std::to_string(g.e[static_cast<std::size_t>(i)]);
    }
    return out.empty() ? "1" : out;
  }

private:
  explicit PresGroup(Prime p) : p_(p) {}

  static std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t acc = 1 % m;
    b %= m;
    while (e) {
      if (e & 1) acc = acc * b % m;
      b = b * b % m;
      e >>= 1;
    }
    return acc;
  }

  void build_relators() {
    using detail::word_cat;
    using detail::word_pow;
    auto p = p_.value();
    relators_.clear();
    auto add = [&](std::string name, std::vector<int> lhs, std::vector<int> rhs) {
      Relator r;
      r.name = std::move(name);
      r.display = detail::word_str(lhs) + " = " + detail::word_str(rhs);
      r.lhs = std::move(lhs);
      r.rhs = std::move(rhs);
      relators_.push_back(std::move(r));
    };
    if (hform_) {
      add("pow_sigma1", word_pow(1, p * p * p), {});
      add("pow_sigma2", word_pow(2, p), {});
      add("swap_sigma2_sigma1", {2, 1}, word_cat({word_pow(1, 1 + p * p), {2}}));
      return;
    }
    if (has4_) {
      add("pow_sigma1", word_pow(1, p), word_cat({word_pow(3, a1_), word_pow(4, b1_)}));
      add("pow_sigma2", word_pow(2, p), word_pow(4, b2_));
      add("pow_sigma3", word_pow(3, p), {});
      add("pow_sigma4", word_pow(4, p), {});
      add("comm_sigma3_sigma2", {3, 2}, {2, 3});
      add("swap_sigma3_sigma1", {3, 1}, word_cat({{1, 3}, word_pow(4, b3_)}));
      add("swap_sigma2_sigma1", {2, 1}, word_cat({{1, 2}, word_pow(3, a0_), word_pow(4, b0_)}));
      add("central_sigma4_sigma1", {4, 1}, {1, 4});
      add("central_sigma4_sigma2", {4, 2}, {2, 4});
      add("central_sigma4_sigma3", {4, 3}, {3, 4});
    } else {
      add("pow_sigma1", word_pow(1, p), word_pow(3, a1_));
      add("pow_sigma2", word_pow(2, p), {});
      add("pow_sigma3", word_pow(3, p), {});
      add("swap_sigma2_sigma1", {2, 1}, word_cat({{1, 2}, word_pow(3, a0_)}));
      add("central_sigma3_sigma1", {3, 1}, {1, 3});
      add("central_sigma3_sigma2", {3, 2}, {2, 3});
    }
  }

  Prime p_;
  bool hform_ = false;
  bool has4_ = true;
  std::int64_t a0_ = 0, a1_ = 0, b0_ = 0, b1_ = 0, b2_ = 0, b3_ = 0;
  std::vector<Relator> relators_;
};

}  // namespace asw
