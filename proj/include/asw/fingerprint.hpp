#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <json.hpp>

#include "asw/presentation.hpp"

namespace asw {

/// Isomorphism invariants computed by exhaustive enumeration: enough to
/// separate most of the catalog cheaply, with the generator-image search
/// reserved for colliding pairs.
struct Fingerprint {
  std::uint64_t group_order = 0;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::uint64_t exponent = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> order_histogram;  // (order, count)
  std::vector<std::uint64_t> class_sizes;                                // sorted

  bool operator==(const Fingerprint& o) const {
    return group_order == o.group_order && center_order == o.center_order &&
           derived_order == o.derived_order && exponent == o.exponent &&
           order_histogram == o.order_histogram && class_sizes == o.class_sizes;
  }
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }

  Json to_json() const {
    Json hist = Json::array();
    for (auto [ord, cnt] : order_histogram) hist.push_back(Json::array({ord, cnt}));
    std::map<std::uint64_t, std::uint64_t> cls;
    for (auto s : class_sizes) ++cls[s];
    Json classes = Json::array();
    for (auto [size, cnt] : cls) classes.push_back(Json::array({size, cnt}));
    return Json{{"order", group_order},          {"center_order", center_order},
                {"derived_order", derived_order}, {"exponent", exponent},
                {"element_orders", hist},         {"class_size_multiset", classes}};
  }
};

inline Fingerprint fingerprint(const PresGroup& G) {
  Fingerprint fp;
  auto els = G.elements();
  std::size_t n = els.size();
  fp.group_order = n;

  std::vector<PresGroup::Elem> gens;
  for (int i = 1; i <= G.generator_count(); ++i) gens.push_back(G.gen(i));

  // center
  for (const auto& z : els) {
    bool central = true;
    for (const auto& g : gens) {
      if (!(G.mul(z, g) == G.mul(g, z))) {
        central = false;
        break;
      }
    }
    if (central) ++fp.center_order;
  }

  // element orders (and inverses for the class computation)
  std::vector<std::uint64_t> ord(n);
  std::vector<PresGroup::Elem> inv(n);
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::size_t i = 0; i < n; ++i) {
    ord[i] = G.elem_order(els[i]);
    inv[i] = G.pow(els[i], ord[i] - 1);
    ++hist[ord[i]];
    fp.exponent = std::max(fp.exponent, ord[i]);
  }
  fp.order_histogram.assign(hist.begin(), hist.end());

  // derived subgroup: closure of all commutators
  std::set<std::uint64_t> comm;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto c = G.mul(G.mul(inv[i], inv[j]), G.mul(els[i], els[j]));
      comm.insert(G.index_of(c));
    }
  }
  std::vector<PresGroup::Elem> commgens;
  for (auto idx : comm) commgens.push_back(els[idx]);
  std::set<std::uint64_t> sub{G.index_of(G.id())};
  std::vector<PresGroup::Elem> frontier{G.id()};
  while (!frontier.empty()) {
    auto g = frontier.back();
    frontier.pop_back();
    for (const auto& h : commgens) {
      auto x = G.mul(g, h);
      if (sub.insert(G.index_of(x)).second) frontier.push_back(x);
    }
  }
  fp.derived_order = sub.size();

  // conjugacy classes
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::set<std::uint64_t> cls;
    for (std::size_t h = 0; h < n; ++h) {
      cls.insert(G.index_of(G.mul(G.mul(els[h], els[i]), inv[h])));
    }
    for (auto idx : cls) seen[idx] = true;
    fp.class_sizes.push_back(cls.size());
  }
  std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
  return fp;
}

}  // namespace asw
