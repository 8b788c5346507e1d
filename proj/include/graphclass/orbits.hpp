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

#ifndef GRAPHCLASS_ORBITS_HPP_
#define GRAPHCLASS_ORBITS_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphclass/graph.hpp"
#include "graphclass/invariants.hpp"
#include "graphclass/stabilizer.hpp"

namespace graphclass {

/// Classification was asked for a disconnected graph. Components (as vertex
/// masks) ride along so callers can fall back to per-component handling.
class DisconnectedGraphError : public std::invalid_argument {
 public:
  explicit DisconnectedGraphError(std::vector<std::uint16_t> components)
      : std::invalid_argument(describe(components)), components_(std::move(components)) {}

  const std::vector<std::uint16_t>& components() const { return components_; }

 private:
  static std::string describe(const std::vector<std::uint16_t>& comps) {
    std::string s = "graph is disconnected (components:";
    for (std::uint16_t c : comps) s += " " + support_to_string(c);
    return s + "); classify each component separately";
  }

  std::vector<std::uint16_t> components_;
};

/// Inconsistent, impossible, or corrupt class-database state.
class DatabaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The set of canonical forms LC-equivalent to g: breadth-first closure of
/// {canonical(g)} under local complementation at every vertex followed by
/// canonicalization. Sorted by code, so membership and order are stable.
inline std::vector<Graph> lc_orbit(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError(connected_components(g));
  const int n = g.vertex_count();
  std::vector<Graph> queue{canonical_form(g).graph};
  std::set<GraphCode> seen{queue.front().code()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Graph cur = queue[head];  // copy: queue may reallocate
    for (int v = 0; v < n; ++v) {
      if (cur.degree(v) < 2) continue;  // LC at degree <= 1 is the identity
      Graph t = canonical_form(local_complement(cur, v)).graph;
      if (seen.insert(t.code()).second) queue.push_back(std::move(t));
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

/// One LC-equivalence class of connected n-vertex graph states.
struct ClassRecord {
  int class_id = 0;  // published table numbering once recovered
  int n = 0;
  Graph representative = Graph(1);  // lexicographically least canonical member
  std::uint32_t member_count = 0;   // isomorphism classes in the orbit
  MultiplicitySignature signature;
  CompactInvariant compact;
};

/// All classes for 2 <= n <= n_max plus lookup indexes. Both indexes are
/// injective: no two classes share a signature, and no two classes share a
/// compact quadruple (this holds globally, not just per n).
struct ClassDatabase {
  int n_max = 0;
  std::vector<ClassRecord> records;  // sorted by (n, class_id)
  std::map<MultiplicitySignature, int> index;        // signature -> class_id
  std::map<CompactInvariant, int> compact_index;     // quadruple -> class_id

  const ClassRecord* find_by_id(int class_id) const {
    for (const ClassRecord& r : records) {
      if (r.class_id == class_id) return &r;
    }
    return nullptr;
  }

  const ClassRecord* find_by_signature(const MultiplicitySignature& s) const {
    auto it = index.find(s);
    return it == index.end() ? nullptr : find_by_id(it->second);
  }

  /// Rebuilds both indexes from records, enforcing injectivity.
  void rebuild_indexes() {
    index.clear();
    compact_index.clear();
    for (const ClassRecord& r : records) {
      if (!index.emplace(r.signature, r.class_id).second) {
        throw DatabaseError("multiplicity signature collision between classes " +
                            std::to_string(index[r.signature]) + " and " +
                            std::to_string(r.class_id));
      }
      if (!compact_index.emplace(r.compact, r.class_id).second) {
        throw DatabaseError("compact invariant collision between classes " +
                            std::to_string(compact_index[r.compact]) + " and " +
                            std::to_string(r.class_id) + " at " + to_string(r.compact));
      }
    }
  }
};

/// Partitions every connected graph (up to isomorphism) with 2 <= n <= n_max
/// into LC orbits and records one signature per orbit. Provisional class ids
/// count upward through (n, representative)-sorted classes; use
/// recover_paper_numbering to switch to the published numbering. A signature
/// or compact collision anywhere is a hard error.
inline ClassDatabase build_class_database(int n_max) {
  if (n_max < 2 || n_max > 10) {
    throw std::invalid_argument("build_class_database: n_max must be 2..10");
  }
  ClassDatabase db;
  db.n_max = n_max;
  const auto levels = connected_graph_levels(n_max);
  int next_id = 1;
  for (int n = 2; n <= n_max; ++n) {
    const std::vector<Graph>& all = levels[std::size_t(n)];
    std::set<GraphCode> pending;
    for (const Graph& g : all) pending.insert(g.code());
    std::size_t covered = 0;
    // Scanning ascending and removing whole orbits keeps each seed the
    // smallest member of its orbit, so representatives come out sorted.
    for (const Graph& seed : all) {
      if (!pending.count(seed.code())) continue;
      ClassRecord rec;
      rec.class_id = next_id++;
      rec.n = n;
      const std::vector<Graph> orbit = lc_orbit(seed);
      for (const Graph& member : orbit) {
        if (!pending.erase(member.code())) {
          throw DatabaseError("orbit member missing from enumeration at n=" +
                              std::to_string(n));
        }
      }
      covered += orbit.size();
      rec.representative = orbit.front();
      rec.member_count = std::uint32_t(orbit.size());
      rec.signature = multiplicity_signature(support_tally(rec.representative));
      rec.compact = compact_invariant(rec.signature);
      db.records.push_back(std::move(rec));
    }
    if (covered != all.size()) {
      throw DatabaseError("orbits do not partition the n=" + std::to_string(n) + " graphs");
    }
  }
  db.rebuild_indexes();
  return db;
}

/// Determines the LC class of a connected graph from its multiplicity
/// signature alone — no orbit is ever generated.
inline const ClassRecord& classify(const Graph& g, const ClassDatabase& db) {
  const int n = g.vertex_count();
  if (n < 2 || n > db.n_max) {
    throw std::out_of_range("classify: need 2 <= n <= " + std::to_string(db.n_max) +
                            ", got n=" + std::to_string(n));
  }
  if (!is_connected(g)) throw DisconnectedGraphError(connected_components(g));
  const MultiplicitySignature sig = multiplicity_signature(support_tally(g));
  auto it = db.index.find(sig);
  if (it == db.index.end()) {
    throw DatabaseError("internal consistency failure: signature " + to_string(sig) +
                        " (n=" + std::to_string(n) + ") not present in the database");
  }
  return *db.find_by_id(it->second);
}

/// Per-component convenience classification for disconnected inputs.
struct ComponentClassification {
  /// (vertex mask, class record) for every component with >= 2 vertices.
  std::vector<std::pair<std::uint16_t, ClassRecord>> classified;
  /// Isolated vertices (unentangled qubits), 0-indexed.
  std::vector<int> isolated;
};

inline ComponentClassification classify_components(const Graph& g, const ClassDatabase& db) {
  ComponentClassification out;
  for (std::uint16_t comp : connected_components(g)) {
    if (std::popcount(comp) == 1) {
      out.isolated.push_back(std::countr_zero(comp));
    } else {
      out.classified.emplace_back(comp, classify(induced_subgraph(g, comp), db));
    }
  }
  return out;
}

/// One row of the shipped reference table (published class numbering).
struct ReferenceRow {
  int class_id = 0;
  int n = 0;
  MultiplicitySignature signature;
};

/// Replaces provisional class ids with the published ones by matching
/// signatures against the reference rows. Every computed class must match
/// exactly one reference row and vice versa (for n <= n_max); any mismatch
/// throws with a full diff, since it would mean a transcription or
/// implementation defect.
inline ClassDatabase recover_paper_numbering(const ClassDatabase& db,
                                             const std::vector<ReferenceRow>& reference) {
  std::map<std::string, const ReferenceRow*> by_signature;
  for (const ReferenceRow& row : reference) {
    if (row.n > db.n_max) continue;
    if (!by_signature.emplace(to_string(row.signature), &row).second) {
      throw DatabaseError("reference rows share a signature: " + to_string(row.signature));
    }
  }

  ClassDatabase out;
  out.n_max = db.n_max;
  out.records = db.records;
  std::string diff;
  std::set<int> used_ids;
  for (ClassRecord& rec : out.records) {
    auto it = by_signature.find(to_string(rec.signature));
    if (it == by_signature.end()) {
      diff += "\n  computed class (n=" + std::to_string(rec.n) + ", " +
              to_string(rec.signature) + ") has no reference row";
      continue;
    }
    if (it->second->n != rec.n) {
      diff += "\n  signature " + to_string(rec.signature) + " computed at n=" +
              std::to_string(rec.n) + " but published at n=" + std::to_string(it->second->n);
      continue;
    }
    rec.class_id = it->second->class_id;
    used_ids.insert(rec.class_id);
  }
  for (const auto& [sig, row] : by_signature) {
    if (!used_ids.count(row->class_id)) {
      diff += "\n  reference class " + std::to_string(row->class_id) + " (n=" +
              std::to_string(row->n) + ", " + sig + ") was not computed";
    }
  }
  if (!diff.empty()) {
    throw DatabaseError("numbering recovery failed:" + diff);
  }

  std::sort(out.records.begin(), out.records.end(),
            [](const ClassRecord& a, const ClassRecord& b) {
              return a.n != b.n ? a.n < b.n : a.class_id < b.class_id;
            });
  out.rebuild_indexes();
  return out;
}

}  // namespace graphclass

#endif  // GRAPHCLASS_ORBITS_HPP_
