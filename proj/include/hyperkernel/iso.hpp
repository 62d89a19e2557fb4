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

// Hypergraph isomorphism and canonical forms.
//
// The canonical form of H is the lexicographically least bit string
// obtained by concatenating the rows of an incidence matrix of H, taken
// over every ordering of the rows (nodes) and every ordering of the
// columns (edges). Two hypergraphs are isomorphic iff their canonical
// forms are equal.
//
// Search. Once a sequence of rows is fixed, the best column order sorts
// columns by their column vector read top-down, so only row orders need to
// be searched. Rows are chosen one at a time. The columns are kept in an
// ordered partition of cells whose members agree on every chosen row, and
// choosing a row splits each cell into its 0-part followed by its 1-part.
// The next row string is therefore a function of the per-cell counts of
// ones, and only rows that produce the least next string can extend the
// optimum. Branches whose prefix is already larger than the best leaf are
// cut. Two leaves with equal strings yield an automorphism; automorphisms
// fixing the chosen prefix pointwise let the search skip candidates in an
// orbit that was already explored. Rows with identical incidence sets
// seed that list.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hyperkernel/core.hpp"

namespace hyperkernel {

/// Default bound on |V|+|E| for the canonical-form search.
inline constexpr std::size_t kDefaultSizeGuard = 40;

/// Bound on |V|+|E| for brute_force_isomorphic.
inline constexpr std::size_t kBruteForceLimit = 10;

struct CanonicalForm {
  std::size_t num_nodes = 0;
  std::size_t num_edges = 0;
  std::string bits;  // rows concatenated, '0'/'1'

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
};

/// `<|V|>x<|E|>:<bits>`
inline std::string to_string(const CanonicalForm& c) {
  return std::to_string(c.num_nodes) + "x" + std::to_string(c.num_edges) + ":" + c.bits;
}

inline std::ostream& operator<<(std::ostream& os, const CanonicalForm& c) {
  return os << to_string(c);
}

/// A canonical form together with the row and column orders realizing it.
struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<NodeId> node_order;
  std::vector<EdgeId> edge_order;
};

/// Bijections from the nodes/edges of the second hypergraph onto those of
/// the first, preserving incidence in both directions.
struct IsomorphismWitness {
  std::map<NodeId, NodeId> node_map;
  std::map<EdgeId, EdgeId> edge_map;
};

namespace detail {

class CanonicalSearch {
 public:
  CanonicalSearch(std::vector<std::vector<std::uint8_t>> matrix, std::size_t cols)
      : rows_(std::move(matrix)), n_(rows_.size()), m_(cols) {
    seed_twin_automorphisms();
  }

  void run() {
    std::vector<std::vector<int>> cells;
    if (m_ > 0) {
      cells.emplace_back(m_);
      std::iota(cells.front().begin(), cells.front().end(), 0);
    }
    used_.assign(n_, false);
    dfs(0, cells, false);
  }

  const std::vector<int>& best_rows() const { return best_order_; }
  const std::vector<int>& best_cols() const { return best_cols_; }
  std::string best_bits() const {
    std::string out;
    for (const auto& r : best_strings_) out += r;
    return out;
  }

 private:
  static constexpr std::size_t kMaxAutomorphisms = 4096;

  void seed_twin_automorphisms() {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = a + 1; b < n_; ++b) {
        if (rows_[a] != rows_[b]) continue;
        std::vector<int> perm(n_);
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[a], perm[b]);
        automorphisms_.push_back(std::move(perm));
        break;  // transpositions with the next twin generate the whole class
      }
    }
  }

  std::string row_string(int row, const std::vector<std::vector<int>>& cells) const {
    std::string s;
    s.reserve(m_);
    for (const auto& cell : cells) {
      std::size_t ones = 0;
      for (int c : cell) ones += rows_[row][c];
      s.append(cell.size() - ones, '0');
      s.append(ones, '1');
    }
    return s;
  }

  std::vector<std::vector<int>> split(const std::vector<std::vector<int>>& cells, int row) const {
    std::vector<std::vector<int>> out;
    out.reserve(cells.size() * 2);
    for (const auto& cell : cells) {
      std::vector<int> zeros, ones;
      for (int c : cell) (rows_[row][c] ? ones : zeros).push_back(c);
      if (!zeros.empty()) out.push_back(std::move(zeros));
      if (!ones.empty()) out.push_back(std::move(ones));
    }
    return out;
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Orbit representatives of the group generated by the known
  // automorphisms that fix every chosen row.
  std::vector<int> orbit_roots() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& perm : automorphisms_) {
      bool fixes_prefix = std::all_of(chosen_.begin(), chosen_.end(),
                                      [&](int r) { return perm[r] == r; });
      if (!fixes_prefix) continue;
      for (std::size_t i = 0; i < n_; ++i) {
        int a = find(parent, static_cast<int>(i)), b = find(parent, perm[i]);
        if (a != b) parent[a] = b;
      }
    }
    std::vector<int> roots(n_);
    for (std::size_t i = 0; i < n_; ++i) roots[i] = find(parent, static_cast<int>(i));
    return roots;
  }

  // prefix_equal: the chosen rows spell exactly the first `level` rows of
  // the best leaf. Otherwise they spell a strictly smaller prefix (or no
  // leaf exists yet).
  void dfs(std::size_t level, const std::vector<std::vector<int>>& cells, bool prefix_equal) {
    if (level == n_) {
      if (have_best_ && prefix_equal) {
        record_automorphism();
      } else {
        have_best_ = true;
        ++version_;
        best_order_ = chosen_;
        best_strings_ = current_strings_;
        best_cols_.clear();
        for (const auto& cell : cells) {
          for (int c : cell) best_cols_.push_back(c);
        }
      }
      return;
    }

    std::string least;
    std::vector<int> candidates;
    for (std::size_t r = 0; r < n_; ++r) {
      if (used_[r]) continue;
      std::string s = row_string(static_cast<int>(r), cells);
      if (candidates.empty() || s < least) {
        least = std::move(s);
        candidates.assign(1, static_cast<int>(r));
      } else if (s == least) {
        candidates.push_back(static_cast<int>(r));
      }
    }

    bool equal = prefix_equal;
    std::vector<int> explored_roots;
    for (int cand : candidates) {
      int relation = -1;
      if (have_best_ && equal) relation = least.compare(best_strings_[level]);
      if (relation > 0) return;

      auto roots = orbit_roots();
      bool seen = std::any_of(explored_roots.begin(), explored_roots.end(),
                              [&](int e) { return roots[e] == roots[cand]; });
      if (seen) continue;
      explored_roots.push_back(cand);

      const std::uint64_t before = version_;
      used_[cand] = true;
      chosen_.push_back(cand);
      current_strings_.push_back(least);
      dfs(level + 1, split(cells, cand), relation == 0);
      current_strings_.pop_back();
      chosen_.pop_back();
      used_[cand] = false;
      // A new best found below shares this prefix.
      if (version_ != before) equal = true;
    }
  }

  void record_automorphism() {
    if (automorphisms_.size() >= kMaxAutomorphisms) return;
    std::vector<int> perm(n_);
    for (std::size_t i = 0; i < n_; ++i) perm[best_order_[i]] = chosen_[i];
    automorphisms_.push_back(std::move(perm));
  }

  std::vector<std::vector<std::uint8_t>> rows_;
  std::size_t n_;
  std::size_t m_;

  std::vector<bool> used_;
  std::vector<int> chosen_;
  std::vector<std::string> current_strings_;

  bool have_best_ = false;
  std::uint64_t version_ = 0;
  std::vector<int> best_order_;
  std::vector<int> best_cols_;
  std::vector<std::string> best_strings_;

  std::vector<std::vector<int>> automorphisms_;
};

inline void check_size_guard(const Hypergraph& h, std::size_t guard, const char* what) {
  if (h.size() > guard) throw CapacityError(what, h.size(), guard);
}

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Hypergraph& h,
                                            std::size_t size_guard = kDefaultSizeGuard) {
  detail::check_size_guard(h, size_guard, "canonical form");
  const std::vector<NodeId> nodes(h.nodes().begin(), h.nodes().end());
  const std::vector<EdgeId> edges(h.edges().begin(), h.edges().end());
  std::vector<std::vector<std::uint8_t>> matrix(nodes.size(),
                                                std::vector<std::uint8_t>(edges.size(), 0));
  std::map<EdgeId, int> edge_index;
  for (std::size_t j = 0; j < edges.size(); ++j) edge_index[edges[j]] = static_cast<int>(j);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const auto& e : h.incident_edges(nodes[i])) matrix[i][edge_index[e]] = 1;
  }

  detail::CanonicalSearch search(std::move(matrix), edges.size());
  search.run();

  CanonicalLabeling out;
  out.form = {nodes.size(), edges.size(), search.best_bits()};
  for (int r : search.best_rows()) out.node_order.push_back(nodes[r]);
  if (nodes.empty()) {
    out.edge_order = edges;
  } else {
    for (int c : search.best_cols()) out.edge_order.push_back(edges[c]);
  }
  return out;
}

inline CanonicalForm canonical_form(const Hypergraph& h,
                                    std::size_t size_guard = kDefaultSizeGuard) {
  return canonical_labeling(h, size_guard).form;
}

/// True iff w is a pair of bijections from `second` onto `first` that
/// preserves incidence in both directions.
inline bool is_valid_witness(const Hypergraph& first, const Hypergraph& second,
                             const IsomorphismWitness& w) {
  if (w.node_map.size() != second.num_nodes() || w.edge_map.size() != second.num_edges()) {
    return false;
  }
  if (first.num_nodes() != second.num_nodes() || first.num_edges() != second.num_edges()) {
    return false;
  }
  std::set<NodeId> node_image;
  for (const auto& [from, to] : w.node_map) {
    if (!second.has_node(from) || !first.has_node(to)) return false;
    node_image.insert(to);
  }
  std::set<EdgeId> edge_image;
  for (const auto& [from, to] : w.edge_map) {
    if (!second.has_edge(from) || !first.has_edge(to)) return false;
    edge_image.insert(to);
  }
  if (node_image.size() != first.num_nodes() || edge_image.size() != first.num_edges()) {
    return false;
  }
  for (const auto& [v, fv] : w.node_map) {
    for (const auto& [e, ge] : w.edge_map) {
      if (second.incident(v, e) != first.incident(fv, ge)) return false;
    }
  }
  return true;
}

/// Returns a witness mapping `second` onto `first` iff they are isomorphic.
inline std::optional<IsomorphismWitness> is_isomorphic(
    const Hypergraph& first, const Hypergraph& second,
    std::size_t size_guard = kDefaultSizeGuard) {
  detail::check_size_guard(first, size_guard, "isomorphism test");
  detail::check_size_guard(second, size_guard, "isomorphism test");
  if (first.num_nodes() != second.num_nodes() || first.num_edges() != second.num_edges()) {
    return std::nullopt;
  }
  const auto a = canonical_labeling(first, size_guard);
  const auto b = canonical_labeling(second, size_guard);
  if (a.form != b.form) return std::nullopt;
  IsomorphismWitness w;
  for (std::size_t i = 0; i < a.node_order.size(); ++i) {
    w.node_map.emplace(b.node_order[i], a.node_order[i]);
  }
  for (std::size_t j = 0; j < a.edge_order.size(); ++j) {
    w.edge_map.emplace(b.edge_order[j], a.edge_order[j]);
  }
  return w;
}

namespace detail {

// Assigns edges of `second` (by index) to unused edges of `first` so that
// columns agree under the fixed node bijection.
inline bool match_edges(const std::vector<std::vector<std::uint8_t>>& cols_first,
                        const std::vector<std::vector<std::uint8_t>>& cols_second,
                        const std::vector<int>& node_perm, std::size_t next,
                        std::vector<bool>& used) {
  if (next == cols_second.size()) return true;
  for (std::size_t j = 0; j < cols_first.size(); ++j) {
    if (used[j]) continue;
    bool ok = true;
    for (std::size_t v = 0; v < node_perm.size() && ok; ++v) {
      ok = cols_second[next][v] == cols_first[j][node_perm[v]];
    }
    if (!ok) continue;
    used[j] = true;
    if (match_edges(cols_first, cols_second, node_perm, next + 1, used)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace detail

/// Exhaustive search over node bijections and edge bijections. Independent
/// of the canonical-form code; used as a test oracle.
inline bool brute_force_isomorphic(const Hypergraph& first, const Hypergraph& second,
                                   std::size_t limit = kBruteForceLimit) {
  detail::check_size_guard(first, limit, "brute-force isomorphism");
  detail::check_size_guard(second, limit, "brute-force isomorphism");
  if (first.num_nodes() != second.num_nodes() || first.num_edges() != second.num_edges()) {
    return false;
  }
  auto columns = [](const Hypergraph& h) {
    const std::vector<NodeId> nodes(h.nodes().begin(), h.nodes().end());
    std::vector<std::vector<std::uint8_t>> cols;
    for (const auto& e : h.edges()) {
      std::vector<std::uint8_t> col(nodes.size(), 0);
      for (std::size_t v = 0; v < nodes.size(); ++v) col[v] = h.incident(nodes[v], e) ? 1 : 0;
      cols.push_back(std::move(col));
    }
    return cols;
  };
  const auto cols_first = columns(first);
  const auto cols_second = columns(second);

  // node_perm[v] = index in `first` of the image of node v of `second`.
  std::vector<int> node_perm(second.num_nodes());
  std::iota(node_perm.begin(), node_perm.end(), 0);
  do {
    std::vector<bool> used(cols_first.size(), false);
    if (detail::match_edges(cols_first, cols_second, node_perm, 0, used)) return true;
  } while (std::next_permutation(node_perm.begin(), node_perm.end()));
  return false;
}

}  // namespace hyperkernel
