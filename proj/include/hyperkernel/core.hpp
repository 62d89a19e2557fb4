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

// Hypergraph data model: a node set, an edge set and an incidence relation
// between them. Values are immutable; every deletion returns a new value.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperkernel/errors.hpp"

namespace hyperkernel {

/// Identifier of a node. Ordered lexicographically by its text.
struct NodeId {
  std::string value;

  NodeId() = default;
  NodeId(std::string v) : value(std::move(v)) {}  // NOLINT: implicit by intent
  NodeId(const char* v) : value(v) {}             // NOLINT

  auto operator<=>(const NodeId&) const = default;
  bool operator==(const NodeId&) const = default;
};

/// Identifier of a hyperedge. Never compared with a NodeId.
struct EdgeId {
  std::string value;

  EdgeId() = default;
  EdgeId(std::string v) : value(std::move(v)) {}  // NOLINT
  EdgeId(const char* v) : value(v) {}             // NOLINT

  auto operator<=>(const EdgeId&) const = default;
  bool operator==(const EdgeId&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const NodeId& id) {
  return os << id.value;
}
inline std::ostream& operator<<(std::ostream& os, const EdgeId& id) {
  return os << id.value;
}

/// An identifier is a nonempty token without whitespace. ':' and '#' are
/// reserved by the text format.
inline bool is_valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v' || c == ':' || c == '#';
  });
}

/// One (node, edge) pair of the incidence relation.
struct Incidence {
  NodeId node;
  EdgeId edge;

  auto operator<=>(const Incidence&) const = default;
  bool operator==(const Incidence&) const = default;
};

/// A broken hypergraph invariant, reported by validate().
struct Violation {
  enum class Kind { kDanglingNode, kDanglingEdge, kInvalidNodeId, kInvalidEdgeId };
  Kind kind;
  std::string message;
};

class Hypergraph {
 public:
  Hypergraph() = default;

  /// Builds a hypergraph from raw parts without checking that incidence
  /// pairs reference existing objects. Use validate() to inspect the result.
  static Hypergraph from_parts(std::set<NodeId> nodes, std::set<EdgeId> edges,
                               std::set<Incidence> incidence) {
    Hypergraph h;
    h.nodes_ = std::move(nodes);
    h.edges_ = std::move(edges);
    h.incidence_ = std::move(incidence);
    h.rebuild_index();
    return h;
  }

  /// Checked construction; throws DomainError on the first violation.
  static Hypergraph make(std::set<NodeId> nodes, std::set<EdgeId> edges,
                         std::set<Incidence> incidence);

  /// Convenience constructor: node list plus edges given as (id, members).
  static Hypergraph build(
      std::initializer_list<NodeId> nodes,
      std::initializer_list<std::pair<EdgeId, std::vector<NodeId>>> edges) {
    return build(std::vector<NodeId>(nodes),
                 std::vector<std::pair<EdgeId, std::vector<NodeId>>>(edges));
  }
  static Hypergraph build(
      const std::vector<NodeId>& nodes,
      const std::vector<std::pair<EdgeId, std::vector<NodeId>>>& edges) {
    std::set<NodeId> ns(nodes.begin(), nodes.end());
    std::set<EdgeId> es;
    std::set<Incidence> inc;
    for (const auto& [e, members] : edges) {
      es.insert(e);
      for (const auto& v : members) inc.insert({v, e});
    }
    return make(std::move(ns), std::move(es), std::move(inc));
  }

  const std::set<NodeId>& nodes() const { return nodes_; }
  const std::set<EdgeId>& edges() const { return edges_; }
  const std::set<Incidence>& incidence() const { return incidence_; }

  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  /// |V| + |E|, the measure every rule application decreases by one.
  std::size_t size() const { return nodes_.size() + edges_.size(); }
  bool empty() const { return nodes_.empty() && edges_.empty(); }

  bool has_node(const NodeId& v) const { return nodes_.count(v) != 0; }
  bool has_edge(const EdgeId& e) const { return edges_.count(e) != 0; }
  bool incident(const NodeId& v, const EdgeId& e) const {
    return incidence_.count({v, e}) != 0;
  }

  /// E(v): the edges incident to v.
  const std::set<EdgeId>& incident_edges(const NodeId& v) const {
    if (!has_node(v)) throw DomainError("unknown node id '" + v.value + "'");
    return node_edges_.at(v);
  }

  /// V(e): the nodes e is incident to.
  const std::set<NodeId>& incident_nodes(const EdgeId& e) const {
    if (!has_edge(e)) throw DomainError("unknown edge id '" + e.value + "'");
    return edge_nodes_.at(e);
  }

  Hypergraph without_node(const NodeId& v) const {
    if (!has_node(v)) throw DomainError("unknown node id '" + v.value + "'");
    Hypergraph h = *this;
    h.nodes_.erase(v);
    for (const auto& e : node_edges_.at(v)) {
      h.incidence_.erase({v, e});
      h.edge_nodes_[e].erase(v);
    }
    h.node_edges_.erase(v);
    return h;
  }

  Hypergraph without_edge(const EdgeId& e) const {
    if (!has_edge(e)) throw DomainError("unknown edge id '" + e.value + "'");
    Hypergraph h = *this;
    h.edges_.erase(e);
    for (const auto& v : edge_nodes_.at(e)) {
      h.incidence_.erase({v, e});
      h.node_edges_[v].erase(e);
    }
    h.edge_nodes_.erase(e);
    return h;
  }

  bool operator==(const Hypergraph& o) const {
    return nodes_ == o.nodes_ && edges_ == o.edges_ && incidence_ == o.incidence_;
  }

 private:
  void rebuild_index() {
    node_edges_.clear();
    edge_nodes_.clear();
    for (const auto& v : nodes_) node_edges_[v];
    for (const auto& e : edges_) edge_nodes_[e];
    for (const auto& [v, e] : incidence_) {
      node_edges_[v].insert(e);
      edge_nodes_[e].insert(v);
    }
  }

  std::set<NodeId> nodes_;
  std::set<EdgeId> edges_;
  std::set<Incidence> incidence_;
  // Adjacency indexes derived from incidence_. Dangling pairs of an
  // unchecked hypergraph get entries here too but are never reachable
  // through the public accessors.
  std::map<NodeId, std::set<EdgeId>> node_edges_;
  std::map<EdgeId, std::set<NodeId>> edge_nodes_;
};

/// Reports every broken invariant; an empty result means H is well formed.
inline std::vector<Violation> validate(const Hypergraph& h) {
  std::vector<Violation> out;
  for (const auto& v : h.nodes()) {
    if (!is_valid_identifier(v.value)) {
      out.push_back({Violation::Kind::kInvalidNodeId, "invalid node id '" + v.value + "'"});
    }
  }
  for (const auto& e : h.edges()) {
    if (!is_valid_identifier(e.value)) {
      out.push_back({Violation::Kind::kInvalidEdgeId, "invalid edge id '" + e.value + "'"});
    }
  }
  for (const auto& [v, e] : h.incidence()) {
    if (!h.has_node(v)) {
      out.push_back({Violation::Kind::kDanglingNode,
                     "incidence (" + v.value + ", " + e.value + ") references missing node '" +
                         v.value + "'"});
    }
    if (!h.has_edge(e)) {
      out.push_back({Violation::Kind::kDanglingEdge,
                     "incidence (" + v.value + ", " + e.value + ") references missing edge '" +
                         e.value + "'"});
    }
  }
  return out;
}

inline Hypergraph Hypergraph::make(std::set<NodeId> nodes, std::set<EdgeId> edges,
                                   std::set<Incidence> incidence) {
  Hypergraph h = from_parts(std::move(nodes), std::move(edges), std::move(incidence));
  auto violations = validate(h);
  if (!violations.empty()) throw DomainError(violations.front().message);
  return h;
}

inline const std::set<EdgeId>& incident_edges(const Hypergraph& h, const NodeId& v) {
  return h.incident_edges(v);
}

inline const std::set<NodeId>& incident_nodes(const Hypergraph& h, const EdgeId& e) {
  return h.incident_nodes(e);
}

inline Hypergraph remove_node(const Hypergraph& h, const NodeId& v) { return h.without_node(v); }

inline Hypergraph remove_edge(const Hypergraph& h, const EdgeId& e) { return h.without_edge(e); }

/// Dense 0/1 view of the incidence relation: rows are nodes, columns edges.
struct IncidenceMatrix {
  std::vector<NodeId> node_order;
  std::vector<EdgeId> edge_order;
  std::vector<std::uint8_t> bits;  // row-major

  std::size_t rows() const { return node_order.size(); }
  std::size_t cols() const { return edge_order.size(); }
  bool at(std::size_t row, std::size_t col) const { return bits[row * cols() + col] != 0; }

  /// Rebuilds the hypergraph the matrix was taken from.
  Hypergraph to_hypergraph() const {
    std::set<Incidence> inc;
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols(); ++j) {
        if (at(i, j)) inc.insert({node_order[i], edge_order[j]});
      }
    }
    return Hypergraph::make({node_order.begin(), node_order.end()},
                            {edge_order.begin(), edge_order.end()}, std::move(inc));
  }
};

namespace detail {

template <typename Id>
bool is_permutation_of(const std::vector<Id>& order, const std::set<Id>& ids) {
  if (order.size() != ids.size()) return false;
  std::set<Id> seen(order.begin(), order.end());
  return seen == ids;
}

}  // namespace detail

inline IncidenceMatrix incidence_matrix(const Hypergraph& h, std::vector<NodeId> node_order,
                                        std::vector<EdgeId> edge_order) {
  if (!detail::is_permutation_of(node_order, h.nodes())) {
    throw DomainError("node order is not a permutation of the node set");
  }
  if (!detail::is_permutation_of(edge_order, h.edges())) {
    throw DomainError("edge order is not a permutation of the edge set");
  }
  IncidenceMatrix m{std::move(node_order), std::move(edge_order), {}};
  m.bits.assign(m.rows() * m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (h.incident(m.node_order[i], m.edge_order[j])) m.bits[i * m.cols() + j] = 1;
    }
  }
  return m;
}

/// Incidence matrix in sorted id order.
inline IncidenceMatrix incidence_matrix(const Hypergraph& h) {
  return incidence_matrix(h, {h.nodes().begin(), h.nodes().end()},
                          {h.edges().begin(), h.edges().end()});
}

}  // namespace hyperkernel
