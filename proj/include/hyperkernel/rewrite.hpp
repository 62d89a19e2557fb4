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

// Edge-domination and node-domination rewrite rules.
//
//   edge: remove e' when some other edge e has V(e) ⊆ V(e')
//   node: remove v  when some other node v' has E(v) ⊆ E(v')
//
// Inclusions are not strict, so objects with equal incidence sets dominate
// each other in both directions.

#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperkernel/core.hpp"
#include "hyperkernel/rng.hpp"

namespace hyperkernel {

/// One rewrite step: which object is deleted and the counterpart that
/// justifies the deletion.
struct RuleApplication {
  enum class Kind { kNodeDomination, kEdgeDomination };

  Kind kind = Kind::kNodeDomination;
  std::string removed;
  std::string witness;

  static RuleApplication node(NodeId removed, NodeId witness) {
    return {Kind::kNodeDomination, std::move(removed.value), std::move(witness.value)};
  }
  static RuleApplication edge(EdgeId removed, EdgeId witness) {
    return {Kind::kEdgeDomination, std::move(removed.value), std::move(witness.value)};
  }

  bool is_node() const { return kind == Kind::kNodeDomination; }
  bool is_edge() const { return kind == Kind::kEdgeDomination; }

  auto operator<=>(const RuleApplication&) const = default;
  bool operator==(const RuleApplication&) const = default;
};

/// Text form used in traces: `<kind> remove=<id> witness=<id>`.
inline std::string to_string(const RuleApplication& r) {
  return std::string(r.is_node() ? "node" : "edge") + " remove=" + r.removed +
         " witness=" + r.witness;
}

inline std::ostream& operator<<(std::ostream& os, const RuleApplication& r) {
  return os << to_string(r);
}

/// Inverse of to_string(RuleApplication); nullopt on malformed input.
inline std::optional<RuleApplication> parse_rule(const std::string& line) {
  std::istringstream in(line);
  std::string kind, removed, witness, extra;
  if (!(in >> kind >> removed >> witness) || (in >> extra)) return std::nullopt;
  if (removed.rfind("remove=", 0) != 0 || witness.rfind("witness=", 0) != 0) return std::nullopt;
  RuleApplication r;
  if (kind == "node") {
    r.kind = RuleApplication::Kind::kNodeDomination;
  } else if (kind == "edge") {
    r.kind = RuleApplication::Kind::kEdgeDomination;
  } else {
    return std::nullopt;
  }
  r.removed = removed.substr(7);
  r.witness = witness.substr(8);
  if (!is_valid_identifier(r.removed) || !is_valid_identifier(r.witness)) return std::nullopt;
  return r;
}

/// How step() picks among several applicable rules.
struct Strategy {
  enum class Kind { kLexNodeFirst, kLexEdgeFirst, kRandom };

  Kind kind = Kind::kLexNodeFirst;
  std::uint64_t seed = 0;  // only used by kRandom

  static Strategy lex_node_first() { return {Kind::kLexNodeFirst, 0}; }
  static Strategy lex_edge_first() { return {Kind::kLexEdgeFirst, 0}; }
  static Strategy random(std::uint64_t seed) { return {Kind::kRandom, seed}; }

  bool operator==(const Strategy&) const = default;
};

inline std::string to_string(const Strategy& s) {
  switch (s.kind) {
    case Strategy::Kind::kLexNodeFirst:
      return "lex-node-first";
    case Strategy::Kind::kLexEdgeFirst:
      return "lex-edge-first";
    case Strategy::Kind::kRandom:
      return "random(" + std::to_string(s.seed) + ")";
  }
  return "?";
}

struct ReductionTrace {
  std::vector<RuleApplication> steps;

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
  bool operator==(const ReductionTrace&) const = default;
};

/// One line per step, each terminated by '\n'.
inline std::string to_string(const ReductionTrace& trace) {
  std::string out;
  for (const auto& r : trace.steps) out += to_string(r) + "\n";
  return out;
}

namespace detail {

template <typename T>
bool is_subset(const std::set<T>& small, const std::set<T>& big) {
  return small.size() <= big.size() &&
         std::includes(big.begin(), big.end(), small.begin(), small.end());
}

template <typename T>
std::string brace_list(const std::set<T>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ", ";
    out += x.value;
    first = false;
  }
  return out + "}";
}

}  // namespace detail

/// Every edge-domination step applicable to h, ordered by (removed, witness).
inline std::vector<RuleApplication> find_edge_dominations(const Hypergraph& h) {
  std::vector<RuleApplication> out;
  for (const auto& removed : h.edges()) {
    const auto& big = h.incident_nodes(removed);
    for (const auto& witness : h.edges()) {
      if (witness == removed) continue;
      if (detail::is_subset(h.incident_nodes(witness), big)) {
        out.push_back(RuleApplication::edge(removed, witness));
      }
    }
  }
  return out;
}

/// Every node-domination step applicable to h, ordered by (removed, witness).
inline std::vector<RuleApplication> find_node_dominations(const Hypergraph& h) {
  std::vector<RuleApplication> out;
  for (const auto& removed : h.nodes()) {
    const auto& small = h.incident_edges(removed);
    for (const auto& witness : h.nodes()) {
      if (witness == removed) continue;
      if (detail::is_subset(small, h.incident_edges(witness))) {
        out.push_back(RuleApplication::node(removed, witness));
      }
    }
  }
  return out;
}

/// Node rules followed by edge rules. This is the candidate list the
/// random strategy draws from.
inline std::vector<RuleApplication> find_rules(const Hypergraph& h) {
  auto rules = find_node_dominations(h);
  auto edges = find_edge_dominations(h);
  rules.insert(rules.end(), edges.begin(), edges.end());
  return rules;
}

inline bool is_minimal(const Hypergraph& h) {
  return find_node_dominations(h).empty() && find_edge_dominations(h).empty();
}

/// Throws PreconditionError unless r can be applied to h.
inline void check_applicable(const Hypergraph& h, const RuleApplication& r) {
  const std::string name = to_string(r);
  if (r.removed == r.witness) {
    throw PreconditionError(name + " is not applicable: removed object equals its witness");
  }
  if (r.is_edge()) {
    const EdgeId removed{r.removed}, witness{r.witness};
    if (!h.has_edge(removed) || !h.has_edge(witness)) {
      throw PreconditionError(name + " is not applicable: unknown edge");
    }
    const auto& small = h.incident_nodes(witness);
    const auto& big = h.incident_nodes(removed);
    if (!detail::is_subset(small, big)) {
      throw PreconditionError(name + " is not applicable: V(" + r.witness + ") = " +
                              detail::brace_list(small) + " is not a subset of V(" + r.removed +
                              ") = " + detail::brace_list(big));
    }
  } else {
    const NodeId removed{r.removed}, witness{r.witness};
    if (!h.has_node(removed) || !h.has_node(witness)) {
      throw PreconditionError(name + " is not applicable: unknown node");
    }
    const auto& small = h.incident_edges(removed);
    const auto& big = h.incident_edges(witness);
    if (!detail::is_subset(small, big)) {
      throw PreconditionError(name + " is not applicable: E(" + r.removed + ") = " +
                              detail::brace_list(small) + " is not a subset of E(" + r.witness +
                              ") = " + detail::brace_list(big));
    }
  }
}

inline bool is_applicable(const Hypergraph& h, const RuleApplication& r) {
  try {
    check_applicable(h, r);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

inline Hypergraph apply(const Hypergraph& h, const RuleApplication& r) {
  check_applicable(h, r);
  return r.is_edge() ? h.without_edge(EdgeId{r.removed}) : h.without_node(NodeId{r.removed});
}

struct StepResult {
  RuleApplication rule;
  Hypergraph result;
};

/// Picks one applicable rule per the strategy and applies it; nullopt iff
/// h is minimal. Random draws come from rng so that a sequence of steps
/// consumes one stream.
inline std::optional<StepResult> step(const Hypergraph& h, const Strategy& s, Rng& rng) {
  auto node_rules = find_node_dominations(h);
  auto edge_rules = find_edge_dominations(h);
  if (node_rules.empty() && edge_rules.empty()) return std::nullopt;

  RuleApplication chosen;
  switch (s.kind) {
    case Strategy::Kind::kLexNodeFirst:
      chosen = node_rules.empty() ? edge_rules.front() : node_rules.front();
      break;
    case Strategy::Kind::kLexEdgeFirst:
      chosen = edge_rules.empty() ? node_rules.front() : edge_rules.front();
      break;
    case Strategy::Kind::kRandom: {
      const std::size_t total = node_rules.size() + edge_rules.size();
      const std::size_t pick = rng.uniform_index(total);
      chosen = pick < node_rules.size() ? node_rules[pick] : edge_rules[pick - node_rules.size()];
      break;
    }
  }
  Hypergraph next = apply(h, chosen);
  return StepResult{std::move(chosen), std::move(next)};
}

inline std::optional<StepResult> step(const Hypergraph& h, const Strategy& s) {
  Rng rng(s.seed);
  return step(h, s, rng);
}

struct Reduction {
  Hypergraph result;
  ReductionTrace trace;
};

/// Applies steps until no rule applies. Terminates after at most
/// h.size() steps since each step deletes one object.
inline Reduction reduce(const Hypergraph& h, const Strategy& s) {
  Rng rng(s.seed);
  Reduction out{h, {}};
  while (auto next = step(out.result, s, rng)) {
    out.trace.steps.push_back(std::move(next->rule));
    out.result = std::move(next->result);
  }
  return out;
}

/// Re-applies a trace from h, checking every step.
inline Hypergraph replay(const Hypergraph& h, const ReductionTrace& trace) {
  Hypergraph cur = h;
  for (const auto& r : trace.steps) cur = apply(cur, r);
  return cur;
}

}  // namespace hyperkernel
