// Copyright 2026 The Hyperkernel Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact minimum hitting set for small hypergraphs.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperkernel/core.hpp"

namespace hyperkernel {

/// Default bound on |V| for min_hitting_set.
inline constexpr std::size_t kDefaultHittingSetBound = 20;

/// Node sets are bitmasks, so no bound can exceed this.
inline constexpr std::size_t kMaxHittingSetNodes = 64;

struct HittingSetResult {
  enum class Status { kFeasible, kInfeasible };

  Status status = Status::kInfeasible;
  std::set<NodeId> witness;  // empty when infeasible

  static HittingSetResult infeasible() { return {}; }
  static HittingSetResult feasible(std::set<NodeId> w) {
    return {Status::kFeasible, std::move(w)};
  }

  bool is_feasible() const { return status == Status::kFeasible; }
  std::size_t size() const { return witness.size(); }

  /// Same status and, if feasible, same cardinality.
  bool same_outcome(const HittingSetResult& o) const {
    return status == o.status && (!is_feasible() || size() == o.size());
  }
};

inline bool is_hitting_set(const Hypergraph& h, const std::set<NodeId>& s) {
  for (const auto& v : s) {
    if (!h.has_node(v)) throw DomainError("unknown node id '" + v.value + "' in candidate set");
  }
  for (const auto& e : h.edges()) {
    const auto& members = h.incident_nodes(e);
    bool hit = std::any_of(members.begin(), members.end(),
                           [&](const NodeId& v) { return s.count(v) != 0; });
    if (!hit) return false;
  }
  return true;
}

namespace detail {

// Minimum number of nodes from `allowed` hitting every mask in `edges`.
// Nodes are tried in descending degree order; include-before-exclude.
class HittingSetSearch {
 public:
  HittingSetSearch(std::vector<std::uint64_t> edges, std::uint64_t allowed)
      : edges_(std::move(edges)), allowed_(allowed) {
    for (auto& e : edges_) e &= allowed_;
    for (int v = 0; v < 64; ++v) {
      if (allowed_ >> v & 1) order_.push_back(v);
    }
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return degree(a) > degree(b); });
  }

  std::optional<std::size_t> solve() {
    for (auto e : edges_) {
      if (e == 0) return std::nullopt;
    }
    best_ = greedy_upper_bound();
    std::vector<std::size_t> unhit(edges_.size());
    std::iota(unhit.begin(), unhit.end(), 0);
    search(0, 0, unhit);
    return best_;
  }

 private:
  std::size_t degree(int v) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [&](auto e) { return e >> v & 1; }));
  }

  std::size_t greedy_upper_bound() const {
    std::vector<std::uint64_t> rest = edges_;
    std::size_t picks = 0;
    while (!rest.empty()) {
      int best_v = -1;
      std::size_t best_hits = 0;
      for (int v : order_) {
        std::size_t hits = static_cast<std::size_t>(
            std::count_if(rest.begin(), rest.end(), [&](auto e) { return e >> v & 1; }));
        if (hits > best_hits) {
          best_hits = hits;
          best_v = v;
        }
      }
      ++picks;
      std::erase_if(rest, [&](auto e) { return e >> best_v & 1; });
    }
    return picks;
  }

  // Greedy packing of pairwise disjoint unhit edges; each needs its own node.
  static std::size_t disjoint_lower_bound(const std::vector<std::uint64_t>& edges,
                                          const std::vector<std::size_t>& unhit,
                                          std::uint64_t remaining) {
    std::uint64_t covered = 0;
    std::size_t count = 0;
    for (auto i : unhit) {
      std::uint64_t e = edges[i] & remaining;
      if ((e & covered) == 0) {
        covered |= e;
        ++count;
      }
    }
    return count;
  }

  void search(std::size_t pos, std::size_t chosen, const std::vector<std::size_t>& unhit) {
    if (unhit.empty()) {
      best_ = std::min(best_, chosen);
      return;
    }
    if (chosen + 1 >= best_ || pos == order_.size()) return;
    std::uint64_t remaining = 0;
    for (std::size_t i = pos; i < order_.size(); ++i) remaining |= std::uint64_t{1} << order_[i];
    for (auto i : unhit) {
      if ((edges_[i] & remaining) == 0) return;
    }
    if (chosen + disjoint_lower_bound(edges_, unhit, remaining) >= best_) return;

    const int v = order_[pos];
    std::vector<std::size_t> still;
    for (auto i : unhit) {
      if (!(edges_[i] >> v & 1)) still.push_back(i);
    }
    if (still.size() < unhit.size()) search(pos + 1, chosen + 1, still);
    search(pos + 1, chosen, unhit);
  }

  std::vector<std::uint64_t> edges_;
  std::uint64_t allowed_;
  std::vector<int> order_;
  std::size_t best_ = 0;
};

inline std::optional<std::size_t> min_cover(const std::vector<std::uint64_t>& edges,
                                            std::uint64_t allowed) {
  return HittingSetSearch(edges, allowed).solve();
}

}  // namespace detail

/// Minimum hitting set by branch and bound. Infeasible iff some edge is
/// empty. Among minimum witnesses the lexicographically least (as a sorted
/// id sequence) is returned.
inline HittingSetResult min_hitting_set(const Hypergraph& h,
                                        std::size_t bound = kDefaultHittingSetBound) {
  const std::size_t limit = std::min(bound, kMaxHittingSetNodes);
  if (h.num_nodes() > limit) throw CapacityError("minimum hitting set", h.num_nodes(), limit);

  const std::vector<NodeId> nodes(h.nodes().begin(), h.nodes().end());
  std::vector<std::uint64_t> edges;
  for (const auto& e : h.edges()) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (h.incident(nodes[i], e)) mask |= std::uint64_t{1} << i;
    }
    if (mask == 0) return HittingSetResult::infeasible();
    edges.push_back(mask);
  }
  const std::uint64_t all = nodes.size() == 64 ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << nodes.size()) - 1;
  const std::size_t k = *detail::min_cover(edges, all);

  // Fix witness elements smallest-first: x is taken next iff the edges it
  // leaves unhit can be covered by the remaining budget using larger nodes.
  std::set<NodeId> witness;
  std::vector<std::uint64_t> unhit = edges;
  std::size_t next = 0;
  while (!unhit.empty()) {
    const std::size_t budget = k - witness.size();
    for (std::size_t x = next; x < nodes.size(); ++x) {
      std::vector<std::uint64_t> rest;
      for (auto e : unhit) {
        if (!(e >> x & 1)) rest.push_back(e);
      }
      const std::uint64_t above = all & ~((std::uint64_t{2} << x) - 1);
      auto need = detail::min_cover(rest, above);
      if (need && *need + 1 <= budget) {
        witness.insert(nodes[x]);
        unhit = std::move(rest);
        next = x + 1;
        break;
      }
    }
  }
  return HittingSetResult::feasible(std::move(witness));
}

}  // namespace hyperkernel
