// Copyright 2026 The lwdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LWDP_EDGE_LIST_H_
#define LWDP_EDGE_LIST_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lwdp/graph.h"

namespace lwdp {

struct ParsedGraph {
  WeightedGraph graph;
  // external_ids[v] is the id that dense node v had in the input.
  std::vector<std::int64_t> external_ids;
};

// Reads "u v w" lines of whitespace-separated integers. Blank lines and lines
// whose first non-blank character is '#' are skipped. External ids may be any
// 64-bit integers; they are relabeled densely in ascending order, so nodes
// without edges do not survive a round trip.
//
// Throws ParseError for malformed lines and ValidationError (naming the line)
// for self-loops and duplicate edges.
ParsedGraph ParseEdgeList(std::istream& in,
                          const std::string& source_name = "<input>");
// Throws Error if the file cannot be opened.
ParsedGraph ReadEdgeListFile(const std::string& path);

// One "u v w" line per edge in EdgeId order.
void WriteEdgeList(const WeightedGraph& graph, std::ostream& out);
void WriteEdgeListFile(const WeightedGraph& graph, const std::string& path);

}  // namespace lwdp

#endif  // LWDP_EDGE_LIST_H_
