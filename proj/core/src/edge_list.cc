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

#include "lwdp/edge_list.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string_view>
#include <utility>

#include "lwdp/error.h"

namespace lwdp {
namespace {

struct RawEdge {
  std::int64_t u;
  std::int64_t v;
  Weight w;
  std::size_t line;
};

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsSpace(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !IsSpace(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool ParseInt(std::string_view token, std::int64_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

ParsedGraph ParseEdgeList(std::istream& in, const std::string& source_name) {
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = Tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens.size() != 3) {
      throw ParseError(source_name, line_no,
                       "expected 'u v w', found " +
                           std::to_string(tokens.size()) + " fields");
    }
    RawEdge e{0, 0, 0, line_no};
    if (!ParseInt(tokens[0], e.u) || !ParseInt(tokens[1], e.v) ||
        !ParseInt(tokens[2], e.w)) {
      throw ParseError(source_name, line_no, "fields must be integers");
    }
    if (e.u == e.v) {
      throw ValidationError(source_name + ":" + std::to_string(line_no) +
                            ": self-loop at node " + std::to_string(e.u));
    }
    raw.push_back(e);
  }

  std::vector<std::int64_t> ids;
  ids.reserve(2 * raw.size());
  for (const RawEdge& e : raw) {
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto dense = [&](std::int64_t id) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) -
                               ids.begin());
  };

  std::map<std::pair<NodeId, NodeId>, std::size_t> seen;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw) {
    NodeId a = dense(e.u);
    NodeId b = dense(e.v);
    if (a > b) std::swap(a, b);
    const auto [it, inserted] = seen.emplace(std::pair(a, b), e.line);
    if (!inserted) {
      throw ValidationError(source_name + ":" + std::to_string(e.line) +
                            ": duplicate edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "}, first seen on line " +
                            std::to_string(it->second));
    }
    edges.push_back({a, b, e.w});
  }
  ParsedGraph out;
  out.graph = WeightedGraph(static_cast<NodeId>(ids.size()), edges);
  out.external_ids = std::move(ids);
  return out;
}

ParsedGraph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return ParseEdgeList(in, path);
}

void WriteEdgeList(const WeightedGraph& graph, std::ostream& out) {
  for (const Edge& e : graph.edges()) {
    out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
  }
}

void WriteEdgeListFile(const WeightedGraph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  WriteEdgeList(graph, out);
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace lwdp
