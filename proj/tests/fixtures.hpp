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

// Hypergraphs from the worked examples, shared by the test suites.

#pragma once

#include "hyperkernel/core.hpp"

namespace hyperkernel::testing {

// Two twin nodes on one edge.
inline Hypergraph twin() { return Hypergraph::build({"v1", "v2"}, {{"e", {"v1", "v2"}}}); }

// Two edges with identical contents.
inline Hypergraph dupe() { return Hypergraph::build({"v1"}, {{"e1", {"v1"}}, {"e2", {"v1"}}}); }

// Seven nodes, seven edges: path v1..v5 ending in the triangle v5 v6 v7.
inline Hypergraph alternating() {
  return Hypergraph::build({"v1", "v2", "v3", "v4", "v5", "v6", "v7"},
                           {{"e1", {"v1", "v2"}},
                            {"e2", {"v2", "v3"}},
                            {"e3", {"v3", "v4"}},
                            {"e4", {"v4", "v5"}},
                            {"e5", {"v5", "v6"}},
                            {"e6", {"v6", "v7"}},
                            {"e7", {"v5", "v7"}}});
}

// Diverging node and edge rule that rejoin after one more step each:
// node v3 (E = {c}) is dominated by v2, edge b = {v1, v2} by a = {v1}.
inline Hypergraph diverging_pair() {
  return Hypergraph::build({"v1", "v2", "v3"},
                           {{"a", {"v1"}}, {"b", {"v1", "v2"}}, {"c", {"v2", "v3"}}});
}

}  // namespace hyperkernel::testing
