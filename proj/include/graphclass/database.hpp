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

#ifndef GRAPHCLASS_DATABASE_HPP_
#define GRAPHCLASS_DATABASE_HPP_

#include <cstdint>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graphclass/graph.hpp"
#include "graphclass/graph_io.hpp"
#include "graphclass/invariants.hpp"
#include "graphclass/orbits.hpp"

namespace graphclass {

inline constexpr const char* kDatabaseMagic = "graphclass-db v1";

namespace detail {

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

inline int parse_int_field(const std::string& s, const char* what, int lineno) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used, 10);
    if (used != s.size() || s.empty()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + ": not an integer: '" + s + "'", lineno);
  }
}

// Both table identities: sum of multiplicities = sum of value*multiplicity
// = 2^n. Catches most transcription and corruption mistakes on the spot.
inline void check_signature_sums(const MultiplicitySignature& sig, int n, int lineno) {
  std::uint64_t msum = 0, wsum = 0;
  for (const auto& [value, mult] : sig.pairs) {
    msum += mult;
    wsum += std::uint64_t(value) * mult;
  }
  const std::uint64_t want = std::uint64_t(1) << n;
  if (msum != want || wsum != want) {
    throw ParseError("signature sums " + std::to_string(msum) + "/" + std::to_string(wsum) +
                     " do not both equal 2^" + std::to_string(n), lineno);
  }
}

}  // namespace detail

/// Line-oriented UTF-8 dump: magic header, then one class per line,
/// `n \t class_id \t representative-graph6 \t member_count \t signature`,
/// rows sorted by (n, class_id). Byte-exact round-trip with read_database.
inline void write_database(const ClassDatabase& db, std::ostream& out) {
  out << kDatabaseMagic << '\n';
  for (const ClassRecord& r : db.records) {
    out << r.n << '\t' << r.class_id << '\t' << to_graph6(r.representative) << '\t'
        << r.member_count << '\t' << to_string(r.signature) << '\n';
  }
}

inline ClassDatabase read_database(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("database: empty input", 1);
  if (line == std::string(kDatabaseMagic) + "\r") line.pop_back();
  if (line != kDatabaseMagic) {
    throw ParseError("database: bad header (expected '" + std::string(kDatabaseMagic) + "')",
                     1);
  }
  ClassDatabase db;
  std::set<int> ids;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw ParseError("database: blank line", lineno);
    const auto fields = detail::split_tabs(line);
    if (fields.size() != 5) {
      throw ParseError("database: expected 5 tab-separated fields, got " +
                       std::to_string(fields.size()), lineno);
    }
    ClassRecord rec;
    rec.n = detail::parse_int_field(fields[0], "database: n", lineno);
    rec.class_id = detail::parse_int_field(fields[1], "database: class_id", lineno);
    if (rec.n < 2 || rec.n > kMaxVertices) {
      throw ParseError("database: n out of range", lineno);
    }
    if (rec.class_id < 1) throw ParseError("database: class_id must be positive", lineno);
    if (!ids.insert(rec.class_id).second) {
      throw ParseError("database: duplicate class_id " + std::to_string(rec.class_id), lineno);
    }
    try {
      rec.representative = from_graph6(fields[2]);
      rec.signature = parse_signature(fields[4]);
    } catch (const std::exception& e) {
      throw ParseError("database: " + std::string(e.what()), lineno);
    }
    if (rec.representative.vertex_count() != rec.n) {
      throw ParseError("database: representative has wrong vertex count", lineno);
    }
    const int mc = detail::parse_int_field(fields[3], "database: member_count", lineno);
    if (mc < 1) throw ParseError("database: member_count must be >= 1", lineno);
    rec.member_count = std::uint32_t(mc);
    detail::check_signature_sums(rec.signature, rec.n, lineno);
    rec.compact = compact_invariant(rec.signature);
    if (!db.records.empty()) {
      const ClassRecord& prev = db.records.back();
      if (rec.n < prev.n || (rec.n == prev.n && rec.class_id <= prev.class_id)) {
        throw ParseError("database: rows not sorted by (n, class_id)", lineno);
      }
    }
    db.n_max = rec.n > db.n_max ? rec.n : db.n_max;
    db.records.push_back(std::move(rec));
  }
  if (db.records.empty()) throw ParseError("database: no records", lineno);
  db.rebuild_indexes();  // throws DatabaseError on signature/compact collisions
  return db;
}

/// Reads the shipped reference table: `class_id \t n \t signature` rows,
/// '#' comment lines and blank lines skipped. Every row is validated against
/// the two signature sum rules before it is accepted.
inline std::vector<ReferenceRow> read_reference(std::istream& in) {
  std::vector<ReferenceRow> rows;
  std::set<int> ids;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto fields = detail::split_tabs(line);
    if (fields.size() != 3) {
      throw ParseError("reference: expected 3 tab-separated fields, got " +
                       std::to_string(fields.size()), lineno);
    }
    ReferenceRow row;
    row.class_id = detail::parse_int_field(fields[0], "reference: class_id", lineno);
    row.n = detail::parse_int_field(fields[1], "reference: n", lineno);
    if (row.class_id < 1) throw ParseError("reference: class_id must be positive", lineno);
    if (row.n < 2 || row.n > kMaxVertices) throw ParseError("reference: n out of range", lineno);
    if (!ids.insert(row.class_id).second) {
      throw ParseError("reference: duplicate class_id " + std::to_string(row.class_id), lineno);
    }
    try {
      row.signature = parse_signature(fields[2]);
    } catch (const std::exception& e) {
      throw ParseError("reference: " + std::string(e.what()), lineno);
    }
    detail::check_signature_sums(row.signature, row.n, lineno);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("reference: no rows", lineno);
  return rows;
}

inline std::vector<ReferenceRow> read_reference(const std::string& text) {
  std::istringstream in(text);
  return read_reference(in);
}

}  // namespace graphclass

#endif  // GRAPHCLASS_DATABASE_HPP_
