#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asw/fingerprint.hpp"
#include "asw/presentation.hpp"

namespace asw {

struct IsoOptions {
  std::uint64_t node_budget = 10'000'000;
  bool fingerprint_prescreen = true;
};

struct IsoResult {
  bool isomorphic = false;
  bool decided_by_search = false;
  std::uint64_t nodes = 0;
  std::vector<PresGroup::Elem> witness;  // images of A's generators in B
};

namespace detail {

struct IsoSearch {
  const PresGroup& A;
  const PresGroup& B;
  std::vector<PresGroup::Elem> elsB;
  std::vector<std::uint64_t> ordB;
  std::vector<std::uint64_t> gen_orders;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<PresGroup::Elem> img;

  bool relators_ok(int assigned) const {
    for (const auto& r : A.relators()) {
      bool complete = true;
      for (int L : r.lhs)
        if (L > assigned) complete = false;
      for (int L : r.rhs)
        if (L > assigned) complete = false;
      if (!complete) continue;
      if (!(B.eval_word(r.lhs, img) == B.eval_word(r.rhs, img))) return false;
    }
    return true;
  }

  bool generates_all() const {
    std::set<std::uint64_t> sub{B.index_of(B.id())};
    std::vector<PresGroup::Elem> frontier{B.id()};
    while (!frontier.empty()) {
      auto g = frontier.back();
      frontier.pop_back();
      for (const auto& h : img) {
        auto x = B.mul(g, h);
        if (sub.insert(B.index_of(x)).second) frontier.push_back(x);
      }
    }
    return sub.size() == elsB.size();
  }

  bool dfs() {
    int k = static_cast<int>(img.size());
    if (k == A.generator_count()) return generates_all();
    for (std::size_t c = 0; c < elsB.size(); ++c) {
      if (ordB[c] != gen_orders[static_cast<std::size_t>(k)]) continue;
      if (++nodes > budget) {
        throw SearchBudgetExceededError("isomorphism search exceeded node budget " +
                                        std::to_string(budget));
      }
      img.push_back(elsB[c]);
      if (relators_ok(k + 1) && dfs()) return true;
      img.pop_back();
    }
    return false;
  }
};

}  // namespace detail

/// Generator-image search: a relator-respecting, order-respecting assignment
/// of A's generators onto elements of B that generates all of B is an
/// isomorphism (a surjective homomorphism between groups of equal finite
/// order). Exhausting the pruned space proves non-isomorphism.
inline IsoResult are_isomorphic(const PresGroup& A, const PresGroup& B,
                                const IsoOptions& opts = {}) {
  IsoResult res;
  if (A.order() != B.order()) return res;
  if (opts.fingerprint_prescreen && fingerprint(A) != fingerprint(B)) return res;

  detail::IsoSearch s{A, B, B.elements(), {}, {}, opts.node_budget};
  s.ordB.reserve(s.elsB.size());
  for (const auto& g : s.elsB) s.ordB.push_back(B.elem_order(g));
  for (int i = 1; i <= A.generator_count(); ++i) s.gen_orders.push_back(A.elem_order(A.gen(i)));

  res.decided_by_search = true;
  res.isomorphic = s.dfs();
  res.nodes = s.nodes;
  if (res.isomorphic) res.witness = s.img;
  return res;
}

}  // namespace asw
