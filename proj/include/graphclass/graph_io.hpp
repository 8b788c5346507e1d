// Copyright 2026 The graphclass Authors
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

#ifndef GRAPHCLASS_GRAPH_IO_HPP_
#define GRAPHCLASS_GRAPH_IO_HPP_

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphclass/graph.hpp"

namespace graphclass {

/// Malformed textual input. line/column are 1-based; 0 means not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(locate(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string locate(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    std::string s = "line " + std::to_string(line);
    if (column > 0) s += ", column " + std::to_string(column);
    return s + ": " + what;
  }

  int line_;
  int column_;
};

/// graph6 one-line ASCII encoding (n <= 12, so always the single-byte size
/// form). Bit order matches GraphCode: upper triangle, column-major.
inline std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string s(1, char(63 + n));
  int acc = 0;
  int nbits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++nbits == 6) {
        s += char(63 + acc);
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits) s += char(63 + (acc << (6 - nbits)));  // zero-pad the last group
  return s;
}

inline Graph from_graph6(const std::string& text) {
  if (text.empty()) throw ParseError("graph6: empty string");
  const int n = text[0] - 63;
  if (n < 1 || n > kMaxVertices) {
    throw ParseError("graph6: unsupported vertex count (need 1.." +
                     std::to_string(kMaxVertices) + ")");
  }
  const int nbits = n * (n - 1) / 2;
  const std::size_t expect = 1 + std::size_t((nbits + 5) / 6);
  if (text.size() != expect) {
    throw ParseError("graph6: expected " + std::to_string(expect) + " characters for n=" +
                     std::to_string(n) + ", got " + std::to_string(text.size()));
  }
  Graph g(n);
  int bit = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    const int c = text[i] - 63;
    if (c < 0 || c > 63) throw ParseError("graph6: character out of range", 0, int(i) + 1);
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (c >> k) & 1;
      if (bit >= nbits) {
        if (set) throw ParseError("graph6: non-zero padding bits");
        continue;
      }
      if (set) {
        // invert bit index -> (row, col) in column-major upper triangle
        int col = 1, consumed = 0;
        while (consumed + col <= bit) consumed += col++;
        g.add_edge(bit - consumed, col);
      }
    }
  }
  return g;
}

/// Edge-list text: header line "n m", then m lines "u v" (1-indexed).
/// Blank lines and '#' comments are skipped.
inline void write_edge_list(const Graph& g, std::ostream& out) {
  const auto edges = g.edges();
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u + 1 << ' ' << v + 1 << '\n';
}

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      const std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_line(header)) throw ParseError("edge list: missing header line");
  std::istringstream hs(header);
  int n = 0;
  long m = -1;
  std::string extra;
  if (!(hs >> n >> m) || (hs >> extra)) {
    throw ParseError("edge list: header must be 'n m'", lineno);
  }
  if (n < 1 || n > kMaxVertices) {
    throw ParseError("edge list: vertex count must be 1.." + std::to_string(kMaxVertices),
                     lineno);
  }
  if (m < 0) throw ParseError("edge list: negative edge count", lineno);

  Graph g(n);
  for (long i = 0; i < m; ++i) {
    std::string row;
    if (!next_line(row)) {
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                       std::to_string(i), lineno);
    }
    std::istringstream rs(row);
    int u = 0, v = 0;
    if (!(rs >> u >> v) || (rs >> extra)) {
      throw ParseError("edge list: edge line must be 'u v'", lineno);
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError("edge list: vertex out of range 1.." + std::to_string(n), lineno);
    }
    if (u == v) throw ParseError("edge list: self-loop", lineno);
    g.add_edge(u - 1, v - 1);
  }
  std::string trailing;
  if (next_line(trailing)) throw ParseError("edge list: unexpected extra line", lineno);
  return g;
}

/// Inline grammar: "<n>: u-v u-v ..." with 1-indexed vertices, e.g.
/// "3: 1-2 2-3". Zero edges ("2:") is a valid edgeless graph.
inline Graph parse_inline(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError("inline graph: missing ':' after vertex count");
  }
  int n = 0;
  try {
    std::size_t used = 0;
    const std::string head = text.substr(0, colon);
    n = std::stoi(head, &used, 10);
    while (used < head.size() && (head[used] == ' ' || head[used] == '\t')) ++used;
    if (used != head.size()) throw std::invalid_argument(head);
  } catch (const std::exception&) {
    throw ParseError("inline graph: bad vertex count before ':'", 1, 1);
  }
  if (n < 1 || n > kMaxVertices) {
    throw ParseError("inline graph: vertex count must be 1.." + std::to_string(kMaxVertices));
  }

  Graph g(n);
  const std::string rest = text.substr(colon + 1);
  std::istringstream ts(rest);
  std::string tok;
  while (ts >> tok) {
    // 1-based column of the token start in the original text
    std::streamoff after = ts.tellg();
    if (after < 0) after = std::streamoff(rest.size());
    const int column = int(colon + 1 + std::size_t(after) - tok.size()) + 1;
    const std::size_t dash = tok.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size()) {
      throw ParseError("inline graph: edge token must be 'u-v', got '" + tok + "'", 1, column);
    }
    int u = 0, v = 0;
    try {
      std::size_t used = 0;
      u = std::stoi(tok.substr(0, dash), &used, 10);
      if (used != dash) throw std::invalid_argument(tok);
      v = std::stoi(tok.substr(dash + 1), &used, 10);
      if (used != tok.size() - dash - 1) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("inline graph: edge token must be 'u-v', got '" + tok + "'", 1, column);
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError("inline graph: vertex out of range 1.." + std::to_string(n), 1, column);
    }
    if (u == v) throw ParseError("inline graph: self-loop '" + tok + "'", 1, column);
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

}  // namespace graphclass

#endif  // GRAPHCLASS_GRAPH_IO_HPP_
