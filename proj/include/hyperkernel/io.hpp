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

// Hypergraph documents.
//
// Text form, one statement per line, '#' starts a comment:
//
//   nodes: v1 v2 v3
//   edge e1: v1 v2
//   edge e2:
//
// The nodes line comes first (it may be omitted when there are no nodes).
// JSON form: {"nodes": ["v1", ...], "edges": [{"id": "e1", "nodes": [...]}]}.
// Serializers always emit ids in sorted order.

#pragma once

#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperkernel/core.hpp"
#include "hyperkernel/rewrite.hpp"

namespace hyperkernel {

class ParseError : public Error {
 public:
  enum class Kind { kSyntax, kUnknownNode, kDuplicateId };

  // line and column are 1-based; 0 when the error has no position.
  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& detail)
      : Error(format(kind, line, column, detail)), kind_(kind), line_(line), column_(column) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(Kind kind, std::size_t line, std::size_t column,
                            const std::string& detail) {
    std::string label = kind == Kind::kSyntax        ? "syntax error"
                        : kind == Kind::kUnknownNode ? "unknown node"
                                                     : "duplicate id";
    std::string where;
    if (line > 0) where = std::to_string(line) + ":" + std::to_string(column) + ": ";
    return where + label + ": " + detail;
  }

  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

enum class Format { kText, kJson };

namespace detail {

class TextParser {
 public:
  explicit TextParser(std::string_view doc) : doc_(doc) {}

  Hypergraph run() {
    std::size_t start = 0;
    while (start <= doc_.size()) {
      std::size_t end = doc_.find('\n', start);
      if (end == std::string_view::npos) end = doc_.size();
      ++line_no_;
      std::string_view line = doc_.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      parse_line(line);
      if (end == doc_.size()) break;
      start = end + 1;
    }
    return Hypergraph::make(std::move(nodes_), std::move(edges_), std::move(incidence_));
  }

 private:
  static bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

  void skip_space() {
    while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
  }

  // Reads up to whitespace or ':'.
  std::string_view token() {
    std::size_t begin = pos_;
    while (pos_ < line_.size() && !is_space(line_[pos_]) && line_[pos_] != ':') ++pos_;
    return line_.substr(begin, pos_ - begin);
  }

  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(ParseError::Kind kind, std::size_t col, const std::string& msg) const {
    throw ParseError(kind, line_no_, col, msg);
  }

  void expect_colon() {
    skip_space();
    if (pos_ >= line_.size() || line_[pos_] != ':') {
      fail(ParseError::Kind::kSyntax, column(), "expected ':'");
    }
    ++pos_;
  }

  // Reads the id list after a ':'. Each entry is (id, column).
  std::vector<std::pair<std::string, std::size_t>> id_list() {
    std::vector<std::pair<std::string, std::size_t>> out;
    for (;;) {
      skip_space();
      if (pos_ >= line_.size()) return out;
      if (line_[pos_] == ':') fail(ParseError::Kind::kSyntax, column(), "unexpected ':'");
      std::size_t col = column();
      out.emplace_back(std::string(token()), col);
    }
  }

  void parse_line(std::string_view line) {
    line_ = line;
    pos_ = 0;
    skip_space();
    if (pos_ >= line_.size()) return;
    const std::size_t kw_col = column();
    const std::string_view keyword = token();
    if (keyword == "nodes") {
      if (seen_nodes_) fail(ParseError::Kind::kSyntax, kw_col, "second nodes line");
      if (seen_edge_) fail(ParseError::Kind::kSyntax, kw_col, "nodes line must precede edge lines");
      seen_nodes_ = true;
      expect_colon();
      for (auto& [id, col] : id_list()) {
        if (!nodes_.insert(NodeId{id}).second) {
          fail(ParseError::Kind::kDuplicateId, col, "node '" + id + "' declared twice");
        }
      }
    } else if (keyword == "edge") {
      seen_edge_ = true;
      skip_space();
      const std::size_t id_col = column();
      const std::string id(token());
      if (id.empty()) fail(ParseError::Kind::kSyntax, id_col, "expected edge id");
      expect_colon();
      if (!edges_.insert(EdgeId{id}).second) {
        fail(ParseError::Kind::kDuplicateId, id_col, "edge '" + id + "' declared twice");
      }
      for (auto& [member, col] : id_list()) {
        if (nodes_.count(NodeId{member}) == 0) {
          fail(ParseError::Kind::kUnknownNode, col,
               "edge '" + id + "' references undeclared node '" + member + "'");
        }
        if (!incidence_.insert({NodeId{member}, EdgeId{id}}).second) {
          fail(ParseError::Kind::kDuplicateId, col,
               "node '" + member + "' listed twice in edge '" + id + "'");
        }
      }
    } else {
      fail(ParseError::Kind::kSyntax, kw_col,
           "expected 'nodes' or 'edge', got '" + std::string(keyword) + "'");
    }
  }

  std::string_view doc_;
  std::string_view line_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
  bool seen_nodes_ = false;
  bool seen_edge_ = false;
  std::set<NodeId> nodes_;
  std::set<EdgeId> edges_;
  std::set<Incidence> incidence_;
};

inline std::pair<std::size_t, std::size_t> line_column(std::string_view doc, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < doc.size(); ++i) {
    if (doc[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline std::string json_id(const nlohmann::json& j, const char* what) {
  if (!j.is_string()) throw ParseError(ParseError::Kind::kSyntax, 0, 0, std::string(what) + " must be a string");
  std::string id = j.get<std::string>();
  if (!is_valid_identifier(id)) {
    throw ParseError(ParseError::Kind::kSyntax, 0, 0, std::string("invalid ") + what + " '" + id + "'");
  }
  return id;
}

inline Hypergraph parse_json(std::string_view doc) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(doc.begin(), doc.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(doc, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(ParseError::Kind::kSyntax, line, col, "malformed JSON");
  }
  using Kind = ParseError::Kind;
  if (!j.is_object()) throw ParseError(Kind::kSyntax, 0, 0, "document must be a JSON object");
  std::set<NodeId> nodes;
  std::set<EdgeId> edges;
  std::set<Incidence> inc;
  if (j.contains("nodes")) {
    if (!j["nodes"].is_array()) throw ParseError(Kind::kSyntax, 0, 0, "'nodes' must be an array");
    for (const auto& v : j["nodes"]) {
      auto id = json_id(v, "node id");
      if (!nodes.insert(NodeId{id}).second) {
        throw ParseError(Kind::kDuplicateId, 0, 0, "node '" + id + "' declared twice");
      }
    }
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError(Kind::kSyntax, 0, 0, "'edges' must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_object() || !e.contains("id")) {
        throw ParseError(Kind::kSyntax, 0, 0, "edge entries must be objects with an 'id'");
      }
      auto id = json_id(e["id"], "edge id");
      if (!edges.insert(EdgeId{id}).second) {
        throw ParseError(Kind::kDuplicateId, 0, 0, "edge '" + id + "' declared twice");
      }
      if (!e.contains("nodes")) continue;
      if (!e["nodes"].is_array()) throw ParseError(Kind::kSyntax, 0, 0, "edge 'nodes' must be an array");
      for (const auto& m : e["nodes"]) {
        auto member = json_id(m, "node id");
        if (nodes.count(NodeId{member}) == 0) {
          throw ParseError(Kind::kUnknownNode, 0, 0,
                           "edge '" + id + "' references undeclared node '" + member + "'");
        }
        if (!inc.insert({NodeId{member}, EdgeId{id}}).second) {
          throw ParseError(Kind::kDuplicateId, 0, 0,
                           "node '" + member + "' listed twice in edge '" + id + "'");
        }
      }
    }
  }
  return Hypergraph::make(std::move(nodes), std::move(edges), std::move(inc));
}

}  // namespace detail

/// Parses either document form; JSON is recognized by a leading '{'.
inline Hypergraph parse(std::string_view doc) {
  for (char c : doc) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return detail::parse_json(doc);
    break;
  }
  return detail::TextParser(doc).run();
}

inline nlohmann::json to_json(const Hypergraph& h) {
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (const auto& v : h.nodes()) j["nodes"].push_back(v.value);
  j["edges"] = nlohmann::json::array();
  for (const auto& e : h.edges()) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& v : h.incident_nodes(e)) members.push_back(v.value);
    j["edges"].push_back({{"id", e.value}, {"nodes", std::move(members)}});
  }
  return j;
}

inline nlohmann::json to_json(const RuleApplication& r) {
  return {{"kind", r.is_node() ? "node" : "edge"}, {"remove", r.removed}, {"witness", r.witness}};
}

inline nlohmann::json to_json(const ReductionTrace& trace) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : trace.steps) j.push_back(to_json(r));
  return j;
}

inline std::string serialize_text(const Hypergraph& h) {
  std::string out = "nodes:";
  for (const auto& v : h.nodes()) out += " " + v.value;
  out += "\n";
  for (const auto& e : h.edges()) {
    out += "edge " + e.value + ":";
    for (const auto& v : h.incident_nodes(e)) out += " " + v.value;
    out += "\n";
  }
  return out;
}

inline std::string serialize(const Hypergraph& h, Format format = Format::kText) {
  if (format == Format::kJson) return to_json(h).dump(2) + "\n";
  return serialize_text(h);
}

/// Incidence bipartite graph in Graphviz syntax: nodes as circles, edges
/// as boxes.
inline std::string to_dot(const Hypergraph& h) {
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  std::ostringstream out;
  out << "graph hypergraph {\n";
  for (const auto& v : h.nodes()) out << "  " << quote("n:" + v.value) << " [label=" << quote(v.value) << ", shape=circle];\n";
  for (const auto& e : h.edges()) out << "  " << quote("e:" + e.value) << " [label=" << quote(e.value) << ", shape=box];\n";
  for (const auto& [v, e] : h.incidence()) {
    out << "  " << quote("n:" + v.value) << " -- " << quote("e:" + e.value) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hyperkernel
