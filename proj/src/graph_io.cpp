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

#include "histk/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "histk/error.hpp"
#include "json.hpp"

namespace histk {
namespace {

bool is_comment_or_blank(const std::string& line) {
  auto it = std::find_if(line.begin(), line.end(), [](unsigned char ch) { return !std::isspace(ch); });
  return it == line.end() || *it == 'c' || *it == '#';
}

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::kInvalidInput, "parse error: " + what); }

long long read_int(std::istringstream& ls, const std::string& what) {
  long long x = 0;
  if (!(ls >> x)) parse_fail("expected integer for " + what);
  return x;
}

}  // namespace

EdgeListDocument parse_edge_list(std::istream& in) {
  EdgeListDocument doc;
  std::string line;
  bool have_header = false;
  long long expected = 0;
  while (std::getline(in, line)) {
    if (is_comment_or_blank(line)) continue;
    std::istringstream ls(line);
    if (!have_header) {
      const long long n = read_int(ls, "vertex count");
      expected = read_int(ls, "edge count");
      if (n < 0 || expected < 0) parse_fail("negative header value");
      doc.n = static_cast<Vertex>(n);
      have_header = true;
    } else {
      const long long u = read_int(ls, "edge endpoint");
      const long long v = read_int(ls, "edge endpoint");
      doc.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    std::string rest;
    if (ls >> rest) parse_fail("trailing token '" + rest + "'");
  }
  if (!have_header) parse_fail("missing 'n m' header");
  if (static_cast<long long>(doc.edges.size()) != expected) {
    parse_fail("header announces " + std::to_string(expected) + " edges, found " + std::to_string(doc.edges.size()));
  }
  return doc;
}

EdgeListDocument parse_graph_json(const std::string& text) {
  EdgeListDocument doc;
  try {
    const auto j = nlohmann::json::parse(text);
    const long long n = j.at("n").get<long long>();
    if (n < 0) parse_fail("negative vertex count");
    doc.n = static_cast<Vertex>(n);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) parse_fail("edge must be a pair");
      doc.edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    }
  } catch (const nlohmann::json::exception& ex) {
    parse_fail(ex.what());
  }
  return doc;
}

EdgeListDocument parse_graph_text(const std::string& text) {
  auto it = std::find_if(text.begin(), text.end(), [](unsigned char ch) { return !std::isspace(ch); });
  if (it != text.end() && *it == '{') return parse_graph_json(text);
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph read_graph(const std::string& path) {
  const auto doc = parse_graph_text(read_file(path));
  return build_graph(doc.n, doc.edges);
}

void write_edge_list(std::ostream& out, Vertex n, std::span<const Edge> edges) {
  out << n << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  auto arr = nlohmann::json::array();
  for (const Edge& e : g.edges()) arr.push_back({e.u, e.v});
  j["edges"] = std::move(arr);
  return j.dump();
}

std::vector<Vertex> parse_vertex_set(const std::string& text) {
  std::vector<Vertex> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (is_comment_or_blank(line)) continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t pos = 0;
        const long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) parse_fail("bad vertex id '" + tok + "'");
        out.push_back(static_cast<Vertex>(v));
      } catch (const std::logic_error&) {
        parse_fail("bad vertex id '" + tok + "'");
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void write_dot(std::ostream& out, const Graph& g, std::span<const Edge> overlay) {
  std::vector<Edge> bold(overlay.begin(), overlay.end());
  for (Edge& e : bold) e = make_edge(e.u, e.v);
  std::sort(bold.begin(), bold.end());
  out << "graph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (std::binary_search(bold.begin(), bold.end(), e)) {
      out << " [style=bold, penwidth=3]";
    } else if (!bold.empty()) {
      out << " [color=gray]";
    }
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace histk
