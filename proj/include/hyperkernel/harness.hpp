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

// Instance generators and executable checks of the confluence properties.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperkernel/core.hpp"
#include "hyperkernel/hitting.hpp"
#include "hyperkernel/iso.hpp"
#include "hyperkernel/rewrite.hpp"
#include "hyperkernel/rng.hpp"

namespace hyperkernel {

struct GeneratorParams {
  std::size_t max_nodes = 8;
  std::size_t max_edges = 8;
  double density = 0.35;
  std::size_t planted_dominations = 2;
  std::uint64_t seed = 0;
};

namespace detail {

inline Hypergraph from_dense(const std::vector<std::vector<bool>>& rows, std::size_t num_edges) {
  std::set<NodeId> nodes;
  std::set<EdgeId> edges;
  std::set<Incidence> inc;
  for (std::size_t i = 0; i < rows.size(); ++i) nodes.insert("v" + std::to_string(i + 1));
  for (std::size_t j = 0; j < num_edges; ++j) edges.insert("e" + std::to_string(j + 1));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < num_edges; ++j) {
      if (rows[i][j]) inc.insert({"v" + std::to_string(i + 1), "e" + std::to_string(j + 1)});
    }
  }
  return Hypergraph::make(std::move(nodes), std::move(edges), std::move(inc));
}

}  // namespace detail

/// Seeded random hypergraph with nodes v1..vn and edges e1..em.
///
/// Draw order: n in [1, max_nodes]; m in [0, max_edges]; one Bernoulli
/// draw per (node, edge) pair in row-major order. Then, per planted
/// domination, a fair coin picks a node plant or an edge plant (falling
/// back to the other kind when fewer than two objects exist, and skipped
/// when neither kind has two objects):
///   node plant: distinct a, b; E(a) := E(b) plus each other edge with
///               probability `density`, so b is dominated by a.
///   edge plant: distinct a, b; V(a) := each node of V(b) kept with
///               probability 1/2, so b is dominated by a.
inline Hypergraph random_hypergraph(const GeneratorParams& p) {
  Rng rng(p.seed);
  const std::size_t n = rng.uniform_between(1, std::max<std::size_t>(p.max_nodes, 1));
  const std::size_t m = rng.uniform_between(0, p.max_edges);
  std::vector<std::vector<bool>> rows(n, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) rows[i][j] = rng.bernoulli(p.density);
  }

  auto pick_pair = [&](std::size_t count) {
    std::size_t a = rng.uniform_index(count);
    std::size_t b = rng.uniform_index(count - 1);
    if (b >= a) ++b;
    return std::pair{a, b};
  };

  for (std::size_t k = 0; k < p.planted_dominations; ++k) {
    bool node_plant = rng.bernoulli(0.5);
    if (n < 2 && m < 2) continue;
    if (node_plant && n < 2) node_plant = false;
    if (!node_plant && m < 2) node_plant = true;
    if (node_plant) {
      auto [a, b] = pick_pair(n);
      for (std::size_t j = 0; j < m; ++j) rows[a][j] = rows[b][j] || rng.bernoulli(p.density);
    } else {
      auto [a, b] = pick_pair(m);
      for (std::size_t i = 0; i < n; ++i) rows[i][a] = rows[i][b] && rng.bernoulli(0.5);
    }
  }
  return detail::from_dense(rows, m);
}

/// Number of forced steps when reducing chain_hypergraph(length).
inline std::size_t chain_path_length(std::size_t length) { return 2 * ((length + 1) / 4); }

/// Generalized alternating chain with `length` nodes and `length` edges.
///
/// v1 I e1; v_i I e_i and v_i I e_{i-1} for i in [2, length]; and
/// v_{p+1} I e_length, where p = 2 * floor((length + 1) / 4). The first p
/// nodes form a path hanging off a cycle of length - p >= 3 nodes. For
/// length 7 this is the seven-node example with the triangle on v5, v6, v7.
/// Reduction is forced: exactly one rule applies at every step, removing
/// v1, e2, v3, e4, ..., e_p (p steps) and ending at the cycle.
inline Hypergraph chain_hypergraph(std::size_t length) {
  if (length < 5) throw DomainError("chain length must be at least 5");
  const std::size_t p = chain_path_length(length);
  std::vector<std::vector<bool>> rows(length, std::vector<bool>(length, false));
  rows[0][0] = true;
  for (std::size_t i = 1; i < length; ++i) {
    rows[i][i] = true;
    rows[i][i - 1] = true;
  }
  rows[p][length - 1] = true;
  return detail::from_dense(rows, length);
}

/// Calls fn on every hypergraph with nodes v1..vn and edges e1..em for all
/// n <= max_nodes, m <= max_edges and all 2^(n*m) incidence patterns.
inline void for_each_hypergraph(std::size_t max_nodes, std::size_t max_edges,
                                const std::function<void(const Hypergraph&)>& fn) {
  for (std::size_t n = 0; n <= max_nodes; ++n) {
    for (std::size_t m = 0; m <= max_edges; ++m) {
      const std::size_t cells = n * m;
      if (cells >= 63) throw CapacityError("exhaustive enumeration", cells, 62);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        std::vector<std::vector<bool>> rows(n, std::vector<bool>(m, false));
        for (std::size_t c = 0; c < cells; ++c) rows[c / m][c % m] = (mask >> c & 1) != 0;
        fn(detail::from_dense(rows, m));
      }
    }
  }
}

/// Renaming of node and edge ids.
struct Relabeling {
  std::map<NodeId, NodeId> nodes;
  std::map<EdgeId, EdgeId> edges;

  RuleApplication map(const RuleApplication& r) const {
    if (r.is_node()) return RuleApplication::node(nodes.at(r.removed), nodes.at(r.witness));
    return RuleApplication::edge(edges.at(r.removed), edges.at(r.witness));
  }
};

inline Hypergraph relabel(const Hypergraph& h, const Relabeling& f) {
  std::set<NodeId> nodes;
  std::set<EdgeId> edges;
  std::set<Incidence> inc;
  for (const auto& v : h.nodes()) nodes.insert(f.nodes.at(v));
  for (const auto& e : h.edges()) edges.insert(f.edges.at(e));
  for (const auto& [v, e] : h.incidence()) inc.insert({f.nodes.at(v), f.edges.at(e)});
  return Hypergraph::make(std::move(nodes), std::move(edges), std::move(inc));
}

inline Relabeling identity_relabeling(const Hypergraph& h) {
  Relabeling f;
  for (const auto& v : h.nodes()) f.nodes.emplace(v, v);
  for (const auto& e : h.edges()) f.edges.emplace(e, e);
  return f;
}

/// Maps nodes to fresh ids a<k> and edges to b<k>, k a seeded shuffle of
/// 1..count, so that the relabeled id order is unrelated to the original.
inline Relabeling random_relabeling(const Hypergraph& h, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> node_slots(h.num_nodes()), edge_slots(h.num_edges());
  std::iota(node_slots.begin(), node_slots.end(), 1);
  std::iota(edge_slots.begin(), edge_slots.end(), 1);
  rng.shuffle(node_slots);
  rng.shuffle(edge_slots);
  Relabeling f;
  std::size_t i = 0;
  for (const auto& v : h.nodes()) f.nodes.emplace(v, "a" + std::to_string(node_slots[i++]));
  i = 0;
  for (const auto& e : h.edges()) f.edges.emplace(e, "b" + std::to_string(edge_slots[i++]));
  return f;
}

/// Outcome of the one-step joinability check on one hypergraph.
struct DiamondReport {
  Hypergraph instance;
  std::size_t divergent_pairs_checked = 0;
  std::vector<std::pair<RuleApplication, RuleApplication>> failures;

  bool ok() const { return failures.empty(); }
};

/// For every unordered pair of distinct applicable rules r1, r2, looks for
/// H3 in {H1} + successors(H1) and H4 in {H2} + successors(H2) with
/// H3 isomorphic to H4, where Hi = apply(H, ri).
inline DiamondReport check_diamond(const Hypergraph& h,
                                   std::size_t size_guard = kDefaultSizeGuard) {
  DiamondReport report{h, 0, {}};
  const auto rules = find_rules(h);
  std::vector<std::set<CanonicalForm>> reach;
  reach.reserve(rules.size());
  for (const auto& r : rules) {
    const Hypergraph first = apply(h, r);
    std::set<CanonicalForm> forms{canonical_form(first, size_guard)};
    for (const auto& s : find_rules(first)) forms.insert(canonical_form(apply(first, s), size_guard));
    reach.push_back(std::move(forms));
  }
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      ++report.divergent_pairs_checked;
      const auto& a = reach[i];
      const auto& b = reach[j];
      bool joined = std::any_of(a.begin(), a.end(), [&](const auto& c) { return b.count(c) != 0; });
      if (!joined) report.failures.emplace_back(rules[i], rules[j]);
    }
  }
  return report;
}

/// Reduces h under every strategy; true iff all minimal forms are
/// isomorphic (equal canonical forms).
inline bool check_confluence(const Hypergraph& h, const std::vector<Strategy>& strategies,
                             std::size_t size_guard = kDefaultSizeGuard) {
  if (strategies.empty()) throw DomainError("check_confluence needs at least one strategy");
  const CanonicalForm first = canonical_form(reduce(h, strategies.front()).result, size_guard);
  for (std::size_t i = 1; i < strategies.size(); ++i) {
    if (canonical_form(reduce(h, strategies[i]).result, size_guard) != first) return false;
  }
  return true;
}

/// The two lexicographic strategies plus `random_count` random ones with
/// seeds base_seed, base_seed + 1, ...
inline std::vector<Strategy> standard_strategies(std::size_t random_count, std::uint64_t base_seed) {
  std::vector<Strategy> out{Strategy::lex_node_first(), Strategy::lex_edge_first()};
  for (std::size_t i = 0; i < random_count; ++i) out.push_back(Strategy::random(base_seed + i));
  return out;
}

/// Rules of h and of relabel(h, f) correspond exactly under f, and
/// corresponding applications give isomorphic results.
inline bool check_rule_lifting(const Hypergraph& h, const Relabeling& f,
                               std::size_t size_guard = kDefaultSizeGuard) {
  const Hypergraph image = relabel(h, f);
  const auto rules = find_rules(h);
  std::set<RuleApplication> mapped;
  for (const auto& r : rules) mapped.insert(f.map(r));
  const auto image_rules = find_rules(image);
  if (mapped != std::set<RuleApplication>(image_rules.begin(), image_rules.end())) return false;
  for (const auto& r : rules) {
    if (!is_isomorphic(apply(h, r), apply(image, f.map(r)), size_guard)) return false;
  }
  return true;
}

inline bool check_rule_lifting(const Hypergraph& h, std::uint64_t relabel_seed,
                               std::size_t size_guard = kDefaultSizeGuard) {
  return check_rule_lifting(h, random_relabeling(h, relabel_seed), size_guard);
}

/// Minimum hitting-set outcome is unchanged by every single applicable rule
/// and by a full reduction.
inline bool check_hs_preservation(const Hypergraph& h,
                                  std::size_t bound = kDefaultHittingSetBound) {
  const auto base = min_hitting_set(h, bound);
  for (const auto& r : find_rules(h)) {
    if (!min_hitting_set(apply(h, r), bound).same_outcome(base)) return false;
  }
  return min_hitting_set(reduce(h, Strategy::lex_node_first()).result, bound).same_outcome(base);
}

/// The trace of a reduction of h is at most |V|+|E| long, every step
/// deletes exactly one object, replay reproduces the result, and the result
/// is minimal.
inline bool check_reduction(const Hypergraph& h, const Reduction& red) {
  if (red.trace.size() > h.size()) return false;
  Hypergraph cur = h;
  for (const auto& r : red.trace.steps) {
    if (!is_applicable(cur, r)) return false;
    Hypergraph next = apply(cur, r);
    if (next.size() + 1 != cur.size()) return false;
    cur = std::move(next);
  }
  return cur == red.result && is_minimal(cur);
}

}  // namespace hyperkernel
