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

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "graphclass/database.hpp"
#include "graphclass/orbits.hpp"

using namespace graphclass;

namespace {

std::vector<ReferenceRow> shipped_reference() {
  std::ifstream in(std::string(GRAPHCLASS_DATA_DIR) + "/reference_signatures.tsv");
  REQUIRE(in.good());
  return read_reference(in);
}

std::string dump(const ClassDatabase& db) {
  std::ostringstream out;
  write_database(db, out);
  return out.str();
}

void expect_rejected(const std::string& text) {
  std::istringstream in(text);
  REQUIRE_THROWS_AS(read_database(in), std::exception);
}

}  // namespace

TEST_CASE("database serialization", "[database]") {
  SECTION("two-qubit database has a known byte form") {
    REQUIRE(dump(build_class_database(2)) == "graphclass-db v1\n2\t1\tA_\t1\t0_2,1_1,3_1\n");
  }

  SECTION("byte-exact round-trip") {
    const ClassDatabase db =
        recover_paper_numbering(build_class_database(6), shipped_reference());
    const std::string text = dump(db);
    std::istringstream in(text);
    const ClassDatabase back = read_database(in);
    REQUIRE(dump(back) == text);
    REQUIRE(back.n_max == 6);
    REQUIRE(back.records.size() == db.records.size());
    for (std::size_t i = 0; i < db.records.size(); ++i) {
      REQUIRE(back.records[i].class_id == db.records[i].class_id);
      REQUIRE(back.records[i].n == db.records[i].n);
      REQUIRE(back.records[i].representative == db.records[i].representative);
      REQUIRE(back.records[i].member_count == db.records[i].member_count);
      REQUIRE(back.records[i].signature == db.records[i].signature);
      REQUIRE(back.records[i].compact == db.records[i].compact);
    }
  }

  SECTION("windows line endings are tolerated") {
    const std::string text = dump(build_class_database(3));
    std::string crlf;
    for (char c : text) {
      if (c == '\n') crlf += '\r';
      crlf += c;
    }
    std::istringstream in(crlf);
    REQUIRE(dump(read_database(in)) == text);
  }

  SECTION("corrupt inputs are rejected") {
    const std::string good = "graphclass-db v1\n2\t1\tA_\t1\t0_2,1_1,3_1\n";
    {
      std::istringstream in(good);
      REQUIRE_NOTHROW(read_database(in));
    }
    expect_rejected("");                                                  // empty
    expect_rejected("graphclass-db v1\n");                                // no records
    expect_rejected("graphclass-db v2\n2\t1\tA_\t1\t0_2,1_1,3_1\n");      // bad magic
    expect_rejected("2\t1\tA_\t1\t0_2,1_1,3_1\n");                        // missing magic
    expect_rejected("graphclass-db v1\n2\t1\tA_\t0_2,1_1,3_1\n");         // 4 fields
    expect_rejected("graphclass-db v1\n2\t1\tA_\t1\t0_2,1_1,3_1\tx\n");   // 6 fields
    expect_rejected("graphclass-db v1\n2\tx\tA_\t1\t0_2,1_1,3_1\n");      // non-integer id
    expect_rejected("graphclass-db v1\n13\t1\tA_\t1\t0_2,1_1,3_1\n");     // n out of range
    expect_rejected("graphclass-db v1\n2\t0\tA_\t1\t0_2,1_1,3_1\n");      // id not positive
    expect_rejected("graphclass-db v1\n2\t1\t!!\t1\t0_2,1_1,3_1\n");      // bad graph6
    expect_rejected("graphclass-db v1\n2\t1\tBg\t1\t0_2,1_1,3_1\n");      // graph6 n mismatch
    expect_rejected("graphclass-db v1\n2\t1\tA_\t0\t0_2,1_1,3_1\n");      // member_count 0
    expect_rejected("graphclass-db v1\n2\t1\tA_\t1\t0_2,1_1\n");          // sum rule broken
    expect_rejected("graphclass-db v1\n2\t1\tA_\t1\tnot_a_sig\n");        // bad signature
    expect_rejected("graphclass-db v1\n2\t1\tA_\t1\t0_2,1_1,3_1\n\n");    // blank line
    expect_rejected(good + "2\t1\tA_\t1\t0_2,1_1,3_1\n");                 // duplicate id
    // same signature under two ids: index rebuild refuses
    expect_rejected(good + "2\t2\tA_\t1\t0_2,1_1,3_1\n");
    // rows out of order
    expect_rejected("graphclass-db v1\n3\t2\tBg\t2\t0_3,1_4,4_1\n2\t1\tA_\t1\t0_2,1_1,3_1\n");
  }
}

TEST_CASE("shipped reference table", "[database][reference]") {
  const std::vector<ReferenceRow> rows = shipped_reference();

  SECTION("146 classes, ids 1..146, the published per-size counts") {
    REQUIRE(rows.size() == 146);
    std::set<int> ids;
    std::map<int, int> per_n;
    for (const ReferenceRow& row : rows) {
      ids.insert(row.class_id);
      ++per_n[row.n];
    }
    REQUIRE(ids.size() == 146);
    REQUIRE(*ids.begin() == 1);
    REQUIRE(*ids.rbegin() == 146);
    REQUIRE(per_n == std::map<int, int>{{2, 1}, {3, 1}, {4, 2}, {5, 4}, {6, 11}, {7, 26}, {8, 101}});
  }

  SECTION("signatures and compact quadruples are globally distinct") {
    std::set<std::string> sigs;
    std::set<std::string> compacts;
    for (const ReferenceRow& row : rows) {
      REQUIRE(sigs.insert(to_string(row.signature)).second);
      REQUIRE(compacts.insert(to_string(compact_invariant(row.signature))).second);
    }
  }

  SECTION("known rows") {
    REQUIRE(to_string(rows.at(0).signature) == "0_2,1_1,3_1");
    for (const ReferenceRow& row : rows) {
      if (row.class_id == 2) REQUIRE(to_string(row.signature) == "0_3,1_4,4_1");
      if (row.class_id == 46) REQUIRE(to_string(row.signature) == "0_128,1_127,129_1");
    }
  }

  SECTION("malformed reference text is rejected") {
    auto reject = [](const std::string& text) {
      REQUIRE_THROWS_AS(read_reference(text), std::exception);
    };
    reject("");                         // no rows
    reject("# only comments\n");
    reject("1\t2\n");                   // 2 fields
    reject("x\t2\t0_2,1_1,3_1\n");      // bad id
    reject("1\t1\t0_2,1_1,3_1\n");      // n out of range
    reject("1\t3\t0_2,1_1,3_1\n");      // sums don't reach 2^3
    reject("1\t2\t0_2,1_1,3_1\n1\t2\t0_2,1_1,3_1\n");  // duplicate id
    REQUIRE(read_reference("# c\n\n1\t2\t0_2,1_1,3_1\n").size() == 1);
  }
}
