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

#ifndef GRAPHCLASS_CLI_HPP_
#define GRAPHCLASS_CLI_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphclass/database.hpp"
#include "graphclass/graph.hpp"
#include "graphclass/graph_io.hpp"
#include "graphclass/invariants.hpp"
#include "graphclass/orbits.hpp"
#include "graphclass/stabilizer.hpp"
#include "reference_embedded.hpp"

namespace graphclass::cli {

namespace detail {

struct InputOptions {
  std::string edges;
  std::string file;
  std::string graph6;
};

inline void add_input_options(CLI::App* cmd, InputOptions& in, bool required = true) {
  auto* grp = cmd->add_option_group("input", "graph input");
  grp->add_option("--edges", in.edges, "inline edge list \"<n>: u-v u-v ...\" (1-indexed)");
  grp->add_option("--file", in.file, "edge-list file: header line 'n m', then 'u v' lines");
  grp->add_option("--graph6", in.graph6, "file containing one graph6 line");
  if (required) {
    grp->require_option(1);
  } else {
    grp->require_option(0, 1);
  }
}

inline bool has_input(const InputOptions& in) {
  return !in.edges.empty() || !in.file.empty() || !in.graph6.empty();
}

inline Graph load_graph(const InputOptions& in) {
  if (!in.edges.empty()) return parse_inline(in.edges);
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw std::runtime_error("cannot open file: " + in.file);
    return read_edge_list(f);
  }
  std::ifstream f(in.graph6);
  if (!f) throw std::runtime_error("cannot open file: " + in.graph6);
  std::string line;
  while (std::getline(f, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return from_graph6(line);
  }
  throw ParseError("graph6 file has no graph line: " + in.graph6);
}

inline ClassDatabase load_database(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open database: " + path);
  return read_database(f);
}

inline std::vector<ReferenceRow> load_reference(const std::string& path) {
  if (path.empty()) return read_reference(std::string(embedded::kReferenceTsv));
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open reference table: " + path);
  return read_reference(f);
}

// Table-I row order: generators by index, the identity, then larger products
// by (size, mask).
inline std::vector<std::uint32_t> stabilizer_row_order(int n) {
  std::vector<std::uint32_t> order(std::size_t(1) << n);
  for (std::uint32_t a = 0; a < order.size(); ++a) order[a] = a;
  auto key = [](std::uint32_t a) {
    const int pc = std::popcount(a);
    if (pc == 1) return std::pair<int, std::uint32_t>(1, a);
    if (pc == 0) return std::pair<int, std::uint32_t>(2, 0);
    return std::pair<int, std::uint32_t>(pc, a);
  };
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
  return order;
}

inline std::string decomposition_label(std::uint32_t a) {
  if (a == 0) return "1";
  std::string s;
  while (a) {
    const int i = std::countr_zero(a);
    a &= a - 1;
    if (!s.empty()) s += ' ';
    s += "g" + std::to_string(i + 1);
  }
  return s;
}

inline nlohmann::json signature_json(const MultiplicitySignature& sig) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [value, mult] : sig.pairs) {
    arr.push_back(nlohmann::json::array({value, mult}));
  }
  return arr;
}

inline nlohmann::json compact_json(const CompactInvariant& c) {
  return nlohmann::json::array({c.m0, c.m1, c.m3, c.m4});
}

inline nlohmann::json support_json(std::uint16_t mask) {
  nlohmann::json arr = nlohmann::json::array();
  while (mask) {
    arr.push_back(std::countr_zero(mask) + 1);
    mask &= std::uint16_t(mask - 1);
  }
  return arr;
}

inline nlohmann::json record_json(const ClassRecord& rec) {
  nlohmann::json j;
  j["n"] = rec.n;
  j["class_id"] = rec.class_id;
  j["signature"] = signature_json(rec.signature);
  j["compact"] = compact_json(rec.compact);
  j["member_count"] = rec.member_count;
  j["representative"] = to_graph6(rec.representative);
  return j;
}

// Support masks ordered as the tally sections print them: by size, then mask.
inline std::vector<std::uint32_t> tally_order(const SupportTally& t) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < t.counts.size(); ++m) {
    if (t.counts[m]) masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return masks;
}

inline int cmd_stabilizer(const InputOptions& in, std::ostream& out) {
  const Graph g = load_graph(in);
  const int n = g.vertex_count();
  const GeneratorSet gs = generators(g);
  const std::vector<PauliOperator> elems = enumerate_stabilizer(g);
  const std::vector<std::uint32_t> order = stabilizer_row_order(n);

  std::vector<std::array<std::string, 5>> rows;
  std::array<std::size_t, 5> width{};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::uint32_t a = order[i];
    std::array<std::string, 5> row{"s" + std::to_string(i + 1), to_string(elems[a]),
                                   decomposition_label(a),
                                   support_to_string(support(elems[a])),
                                   std::to_string(weight(elems[a]))};
    for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], row[c].size());
    rows.push_back(std::move(row));
  }
  for (const auto& row : rows) {
    out << std::left << std::setw(int(width[0])) << row[0] << "  " << std::setw(int(width[1]))
        << row[1] << "  " << std::setw(int(width[2])) << row[2] << "  "
        << std::setw(int(width[3])) << row[3] << "  " << row[4] << "\n";
  }
  return 0;
}

inline int cmd_invariants(const InputOptions& in, bool full, const std::string& output,
                          std::ostream& out) {
  const Graph g = load_graph(in);
  const SupportTally t = support_tally(g);
  const WeightDistribution w = weight_distribution(t);
  const MultiplicitySignature sig = multiplicity_signature(t);
  const CompactInvariant c = compact_invariant(sig);

  if (output == "json") {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["weight_distribution"] = w.a;
    j["signature"] = signature_json(sig);
    j["compact"] = compact_json(c);
    if (full) {
      nlohmann::json tally = nlohmann::json::array();
      for (std::uint32_t mask : tally_order(t)) {
        tally.push_back({{"support", support_json(std::uint16_t(mask))},
                         {"count", t.counts[mask]}});
      }
      j["tally"] = tally;
    }
    out << j.dump() << "\n";
    return 0;
  }

  out << "n: " << g.vertex_count() << "\n";
  if (full) {
    out << "tally:\n";
    for (std::uint32_t mask : tally_order(t)) {
      out << "  A" << support_to_string(std::uint16_t(mask)) << " = " << t.counts[mask] << "\n";
    }
  }
  out << "weight distribution: " << to_string(w) << "\n";
  out << "signature: " << to_string(sig) << "\n";
  out << "compact: " << to_string(c) << "\n";
  return 0;
}

inline int cmd_classify(const InputOptions& in, const std::string& dbpath, bool components,
                        const std::string& output, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(in);
  const ClassDatabase db = load_database(dbpath);

  if (!components) {
    const ClassRecord& rec = classify(g, db);
    if (output == "json") {
      out << record_json(rec).dump() << "\n";
    } else {
      out << "class " << rec.class_id << "  signature " << to_string(rec.signature) << "\n";
    }
    return 0;
  }

  const ComponentClassification cc = classify_components(g, db);
  if (output == "json") {
    nlohmann::json j;
    j["components"] = nlohmann::json::array();
    for (const auto& [mask, rec] : cc.classified) {
      nlohmann::json item = record_json(rec);
      item["vertices"] = support_json(mask);
      j["components"].push_back(std::move(item));
    }
    j["isolated"] = nlohmann::json::array();
    for (int v : cc.isolated) j["isolated"].push_back(v + 1);
    out << j.dump() << "\n";
    return 0;
  }
  // interleave components and isolated vertices by lowest original vertex
  std::size_t ci = 0, ii = 0;
  while (ci < cc.classified.size() || ii < cc.isolated.size()) {
    const int cv = ci < cc.classified.size()
                       ? std::countr_zero(cc.classified[ci].first)
                       : kMaxVertices;
    const int iv = ii < cc.isolated.size() ? cc.isolated[ii] : kMaxVertices;
    if (cv < iv) {
      out << "component " << support_to_string(cc.classified[ci].first) << ": class "
          << cc.classified[ci].second.class_id << "  signature "
          << to_string(cc.classified[ci].second.signature) << "\n";
      ++ci;
    } else {
      out << "vertex " << iv + 1 << ": isolated (unentangled)\n";
      ++ii;
    }
  }
  (void)err;
  return 0;
}

inline int cmd_orbits(const InputOptions& in, int build_n, const std::string& outpath,
                      const std::string& refpath, std::ostream& out, std::ostream& err) {
  if (build_n > 0) {
    if (has_input(in)) {
      err << "error: --build cannot be combined with a graph input\n";
      return 1;
    }
    if (outpath.empty()) {
      err << "error: --build requires --out\n";
      return 1;
    }
    const std::vector<ReferenceRow> reference = load_reference(refpath);
    const ClassDatabase db = recover_paper_numbering(build_class_database(build_n), reference);
    std::ofstream f(outpath);
    if (!f) throw std::runtime_error("cannot write database: " + outpath);
    write_database(db, f);
    out << "classes per n:";
    for (int n = 2; n <= build_n; ++n) {
      std::size_t c = 0;
      for (const ClassRecord& r : db.records) c += std::size_t(r.n == n);
      out << " " << c;
    }
    out << " (total " << db.records.size() << ")\n";
    out << "wrote " << outpath << "\n";
    return 0;
  }
  if (!has_input(in)) {
    err << "error: orbits needs either --build N --out FILE or a graph input\n";
    return 1;
  }
  const Graph g = load_graph(in);
  const std::vector<Graph> orbit = lc_orbit(g);
  for (const Graph& member : orbit) out << to_graph6(member) << "\n";
  out << "orbit size: " << orbit.size() << "\n";
  return 0;
}

inline int cmd_tables(int which, const std::string& dbpath, std::ostream& out) {
  const ClassDatabase db = load_database(dbpath);
  const int need_n = which == 2 ? 6 : which == 3 ? 6 : which == 4 ? 7 : 8;
  if (db.n_max < need_n) {
    throw std::runtime_error("database covers n <= " + std::to_string(db.n_max) +
                             " but this table needs n = " + std::to_string(need_n));
  }
  auto in_table = [&](const ClassRecord& r) {
    if (which == 2 || which == 3) return r.n <= 6;
    if (which == 4) return r.n == 7;
    return r.n == 8;
  };
  for (const ClassRecord& r : db.records) {
    if (!in_table(r)) continue;
    if (which == 2) {
      const WeightDistribution w = weight_distribution(support_tally(r.representative));
      out << r.class_id << '\t' << r.n << '\t' << to_string(w) << "\n";
    } else {
      out << r.class_id << '\t' << r.n << '\t' << to_string(r.signature) << "\n";
    }
  }
  return 0;
}

inline int cmd_counts(int n, int r, bool total, std::ostream& out, std::ostream& err) {
  if ((r > 0) == total) {
    err << "error: counts needs exactly one of --r and --total\n";
    return 1;
  }
  out << (total ? count_total_invariants(n) : count_r_invariants(n, r)) << "\n";
  return 0;
}

}  // namespace detail

/// Entry point shared by the binary and the test suite. Exit status: 0 ok,
/// 1 usage error, 2 data error (unreadable/malformed input, database
/// problems, classification failures).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local-Clifford invariants and LC-class lookup for graph states"};
  app.require_subcommand(1);

  detail::InputOptions in;
  std::string dbpath, outpath, refpath, output = "text";
  bool full = false, components = false, total = false;
  int build_n = 0, which = 0, nval = 0, rval = 0;

  auto* cmd_stab = app.add_subcommand("stabilizer", "print the stabilizer table of a graph state");
  detail::add_input_options(cmd_stab, in);

  auto* cmd_inv =
      app.add_subcommand("invariants", "weight distribution, multiplicity signature, compact invariant");
  detail::add_input_options(cmd_inv, in);
  cmd_inv->add_flag("--full", full, "also print the non-zero support tally");
  cmd_inv->add_option("--output", output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* cmd_cls = app.add_subcommand("classify", "look up the LC class from invariants alone");
  detail::add_input_options(cmd_cls, in);
  cmd_cls->add_option("--db", dbpath, "class database written by 'orbits --build'")->required();
  cmd_cls->add_flag("--components", components,
                    "classify each component of a disconnected graph separately");
  cmd_cls->add_option("--output", output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* cmd_orb = app.add_subcommand("orbits", "build the class database, or list one LC orbit");
  detail::add_input_options(cmd_orb, in, /*required=*/false);
  cmd_orb->add_option("--build", build_n, "enumerate all LC classes for 2 <= n <= N")
      ->check(CLI::Range(2, 10));
  cmd_orb->add_option("--out", outpath, "database file to write");
  cmd_orb->add_option("--reference", refpath,
                      "reference table for class numbering (default: embedded copy)");

  auto* cmd_tab = app.add_subcommand("tables", "emit a class table from a database");
  cmd_tab->add_option("--which", which, "2 (weight distributions), 3, 4, or 5 (signatures)")
      ->required()
      ->check(CLI::IsMember({2, 3, 4, 5}));
  cmd_tab->add_option("--db", dbpath, "class database file")->required();

  auto* cmd_cnt = app.add_subcommand("counts", "invariant-count formulas");
  cmd_cnt->add_option("--n", nval, "qubit count")->required()->check(CLI::Range(1, 16));
  cmd_cnt->add_option("--r", rval, "tuple length (1 or 2)")->check(CLI::IsMember({1, 2}));
  cmd_cnt->add_flag("--total", total, "total pattern count over all tuple lengths");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 convention
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_stab->parsed()) return detail::cmd_stabilizer(in, out);
    if (cmd_inv->parsed()) return detail::cmd_invariants(in, full, output, out);
    if (cmd_cls->parsed()) return detail::cmd_classify(in, dbpath, components, output, out, err);
    if (cmd_orb->parsed()) return detail::cmd_orbits(in, build_n, outpath, refpath, out, err);
    if (cmd_tab->parsed()) return detail::cmd_tables(which, dbpath, out);
    if (cmd_cnt->parsed()) return detail::cmd_counts(nval, rval, total, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

/// argv adapter for main().
inline int run_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace graphclass::cli

#endif  // GRAPHCLASS_CLI_HPP_
