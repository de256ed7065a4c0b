// Copyright 2026 The histk Authors
//
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

#ifndef HISTK_GRAPH_IO_HPP_
#define HISTK_GRAPH_IO_HPP_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "histk/graph.hpp"

namespace histk {

// Edge-list text format:
//
//   c optional comment lines start with 'c'
//   n m
//   u v      (m lines, 0-based ids)
//
// The structured form is a JSON document {"n": int, "edges": [[u, v], ...]}.
// `parse_graph` accepts either and picks by the first non-blank character.
// All parse failures throw Error(kInvalidInput).

struct EdgeListDocument {
  Vertex n = 0;
  std::vector<Edge> edges;
};

EdgeListDocument parse_edge_list(std::istream& in);
EdgeListDocument parse_graph_json(const std::string& text);
EdgeListDocument parse_graph_text(const std::string& text);

Graph read_graph(const std::string& path);
std::string read_file(const std::string& path);

/// Writes "n m" and the edges in the given order.
void write_edge_list(std::ostream& out, Vertex n, std::span<const Edge> edges);
std::string graph_to_json(const Graph& g);

/// Whitespace-separated vertex ids; 'c' comment lines ignored.
std::vector<Vertex> parse_vertex_set(const std::string& text);

/// Graphviz rendering. When `overlay` is given, those edges are drawn bold.
void write_dot(std::ostream& out, const Graph& g, std::span<const Edge> overlay = {});

}  // namespace histk

#endif  // HISTK_GRAPH_IO_HPP_
