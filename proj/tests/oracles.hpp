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

// Slow reference implementations used only to compute expected values.
// None of them shares code with the library paths they check.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperkernel/core.hpp"
#include "hyperkernel/rewrite.hpp"

namespace hyperkernel::testing {

// Lexicographically least row-concatenated bit string over every row
// permutation and every column permutation.
inline std::string brute_canonical_bits(const Hypergraph& h) {
  const std::vector<NodeId> nodes(h.nodes().begin(), h.nodes().end());
  const std::vector<EdgeId> edges(h.edges().begin(), h.edges().end());
  std::vector<int> rp(nodes.size()), cp(edges.size());
  std::iota(rp.begin(), rp.end(), 0);
  std::optional<std::string> best;
  do {
    std::iota(cp.begin(), cp.end(), 0);
    do {
      std::string s;
      for (int r : rp) {
        for (int c : cp) s += h.incident(nodes[r], edges[c]) ? '1' : '0';
      }
      if (!best || s < *best) best = s;
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  return *best;
}

// Minimum hitting set size by enumerating every node subset; nullopt when
// no subset hits every edge.
inline std::optional<std::size_t> brute_min_hitting_set(const Hypergraph& h) {
  const std::vector<NodeId> nodes(h.nodes().begin(), h.nodes().end());
  std::optional<std::size_t> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nodes.size()); ++mask) {
    bool hits_all = true;
    for (const auto& e : h.edges()) {
      bool hit = false;
      for (std::size_t i = 0; i < nodes.size() && !hit; ++i) {
        hit = (mask >> i & 1) && h.incident(nodes[i], e);
      }
      if (!hit) {
        hits_all = false;
        break;
      }
    }
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (hits_all && (!best || size < *best)) best = size;
  }
  return best;
}

// Applicable rules straight from the incidence pairs: r is applicable iff
// no incidence pair contradicts the required inclusion.
inline std::set<RuleApplication> brute_rules(const Hypergraph& h) {
  std::set<RuleApplication> out;
  for (const auto& e : h.edges()) {
    for (const auto& e2 : h.edges()) {
      if (e == e2) continue;
      bool ok = true;
      for (const auto& v : h.nodes()) {
        if (h.incident(v, e) && !h.incident(v, e2)) ok = false;
      }
      if (ok) out.insert(RuleApplication::edge(e2, e));
    }
  }
  for (const auto& v : h.nodes()) {
    for (const auto& v2 : h.nodes()) {
      if (v == v2) continue;
      bool ok = true;
      for (const auto& e : h.edges()) {
        if (h.incident(v, e) && !h.incident(v2, e)) ok = false;
      }
      if (ok) out.insert(RuleApplication::node(v, v2));
    }
  }
  return out;
}

}  // namespace hyperkernel::testing
