#pragma once

#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"

namespace p6mwis {

// Text graph format: `p <n> <m>`, optional `w <v> <weight>`, `e <u> <v>`,
// comments `c ...`. Vertices are 1-indexed in files and 0-indexed in memory.

namespace detail {

[[noreturn]] inline void parse_fail(int line, const std::string& what) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

}  // namespace detail

inline Graph parse_graph(std::istream& in) {
  std::string raw;
  int line = 0;
  int n = -1;
  long long m = -1;
  std::vector<Weight> weights;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<bool> weight_set;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ls(raw);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    auto read_int = [&](long long& v, const char* what) {
      if (!(ls >> v)) detail::parse_fail(line, std::string("expected ") + what);
    };
    if (tag == "p") {
      if (n >= 0) detail::parse_fail(line, "second header");
      long long nn;
      read_int(nn, "vertex count");
      read_int(m, "edge count");
      if (nn < 0 || nn > kMaxVertices) detail::parse_fail(line, "vertex count out of range [0, " + std::to_string(kMaxVertices) + "]");
      if (m < 0) detail::parse_fail(line, "negative edge count");
      n = static_cast<int>(nn);
      weights.assign(n, 1);
      weight_set.assign(n, false);
    } else if (tag == "w" || tag == "e") {
      if (n < 0) detail::parse_fail(line, "data before header");
      long long a, b;
      read_int(a, "vertex");
      read_int(b, tag == "w" ? "weight" : "vertex");
      if (a < 1 || a > n) detail::parse_fail(line, "vertex " + std::to_string(a) + " out of range");
      if (tag == "w") {
        if (b < 0) detail::parse_fail(line, "negative weight");
        if (weight_set[a - 1]) detail::parse_fail(line, "duplicate weight for vertex " + std::to_string(a));
        weight_set[a - 1] = true;
        weights[a - 1] = b;
      } else {
        if (b < 1 || b > n) detail::parse_fail(line, "vertex " + std::to_string(b) + " out of range");
        if (a == b) detail::parse_fail(line, "self-loop");
        Edge e{static_cast<Vertex>(std::min(a, b) - 1), static_cast<Vertex>(std::max(a, b) - 1)};
        if (!seen.insert(e).second) detail::parse_fail(line, "duplicate edge");
        edges.push_back(e);
      }
    } else {
      detail::parse_fail(line, "unknown line type '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) detail::parse_fail(line, "trailing token '" + extra + "'");
  }
  if (n < 0) fail(ErrorKind::Parse, "missing header");
  if (static_cast<long long>(edges.size()) != m)
    fail(ErrorKind::Parse, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(n, edges, weights);
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << "p " << g.n() << " " << es.size() << "\n";
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.weight(v) != 1) out << "w " << v + 1 << " " << g.weight(v) << "\n";
  for (auto [u, v] : es) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

inline nlohmann::json ids_json(const VertexSet& s) {
  nlohmann::json a = nlohmann::json::array();
  for (Vertex v : s) a.push_back(v + 1);
  return a;
}

}  // namespace p6mwis
