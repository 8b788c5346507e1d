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

#ifndef GRAPHCLASS_INVARIANTS_HPP_
#define GRAPHCLASS_INVARIANTS_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphclass/graph.hpp"
#include "graphclass/stabilizer.hpp"

namespace graphclass {

using BigInt = boost::multiprecision::cpp_int;

/// A_w for every support bitmask w: how many stabilizer elements have support
/// exactly w. Dense by index; a zero entry means no element has that support.
struct SupportTally {
  int n = 0;
  std::vector<std::uint32_t> counts;  // size 2^n, indexed by support mask

  std::uint32_t at(std::uint16_t mask) const { return counts[mask]; }
};

inline SupportTally support_tally(const Graph& g) {
  SupportTally t;
  t.n = g.vertex_count();
  t.counts.assign(std::size_t(1) << t.n, 0);
  for (const PauliOperator& p : enumerate_stabilizer(g)) ++t.counts[support(p)];
  return t;
}

/// (A_0, ..., A_n): number of stabilizer elements of each weight.
struct WeightDistribution {
  int n = 0;
  std::vector<std::uint32_t> a;  // size n+1

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

inline WeightDistribution weight_distribution(const SupportTally& t) {
  WeightDistribution w;
  w.n = t.n;
  w.a.assign(std::size_t(t.n) + 1, 0);
  for (std::uint32_t mask = 0; mask < t.counts.size(); ++mask) {
    w.a[std::size_t(std::popcount(mask))] += t.counts[mask];
  }
  return w;
}

inline std::string to_string(const WeightDistribution& w) {
  std::string s;
  for (std::size_t d = 0; d < w.a.size(); ++d) {
    if (d) s += ',';
    s += std::to_string(w.a[d]);
  }
  return s;
}

/// The multiplicity signature {(A, M(A))}: for each value A attained by the
/// tally over all 2^n supports, the number M(A) of supports attaining it.
/// Supports with no stabilizer element count under value 0, as in the tables.
struct MultiplicitySignature {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // ascending by value

  friend bool operator==(const MultiplicitySignature&, const MultiplicitySignature&) = default;
  friend bool operator<(const MultiplicitySignature& a, const MultiplicitySignature& b) {
    return a.pairs < b.pairs;
  }
};

inline MultiplicitySignature multiplicity_signature(const SupportTally& t) {
  std::map<std::uint32_t, std::uint32_t> m;
  for (std::uint32_t c : t.counts) ++m[c];
  MultiplicitySignature s;
  s.pairs.assign(m.begin(), m.end());
  return s;
}

/// "0_3,1_4,4_1" notation, exactly as the class tables print it.
inline std::string to_string(const MultiplicitySignature& s) {
  std::string out;
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.pairs[i].first);
    out += '_';
    out += std::to_string(s.pairs[i].second);
  }
  return out;
}

inline MultiplicitySignature parse_signature(const std::string& text) {
  MultiplicitySignature s;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t us = text.find('_', pos);
    std::size_t comma = text.find(',', pos);
    if (us == std::string::npos || (comma != std::string::npos && us > comma)) {
      throw std::invalid_argument("parse_signature: expected value_multiplicity at '" +
                                  text.substr(pos) + "'");
    }
    if (comma != std::string::npos && comma + 1 == text.size()) {
      throw std::invalid_argument("parse_signature: trailing comma in '" + text + "'");
    }
    std::size_t end = (comma == std::string::npos) ? text.size() : comma;
    try {
      std::size_t used = 0;
      const std::string vs = text.substr(pos, us - pos);
      const std::string ms = text.substr(us + 1, end - us - 1);
      unsigned long value = std::stoul(vs, &used, 10);
      if (used != vs.size()) throw std::invalid_argument(vs);
      unsigned long mult = std::stoul(ms, &used, 10);
      if (used != ms.size() || ms.empty()) throw std::invalid_argument(ms);
      s.pairs.emplace_back(std::uint32_t(value), std::uint32_t(mult));
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_signature: bad pair in '" + text + "'");
    }
    pos = (comma == std::string::npos) ? text.size() : comma + 1;
  }
  if (s.pairs.empty()) throw std::invalid_argument("parse_signature: empty signature");
  for (std::size_t i = 1; i < s.pairs.size(); ++i) {
    if (s.pairs[i].first <= s.pairs[i - 1].first) {
      throw std::invalid_argument("parse_signature: values not strictly increasing in '" +
                                  text + "'");
    }
  }
  return s;
}

/// (M(0), M(1), M(3), M(4)) — the four multiplicities that suffice to tell
/// all classes apart; 0 where the signature has no such value.
struct CompactInvariant {
  std::uint32_t m0 = 0;
  std::uint32_t m1 = 0;
  std::uint32_t m3 = 0;
  std::uint32_t m4 = 0;

  friend constexpr auto operator<=>(const CompactInvariant&, const CompactInvariant&) = default;
};

inline CompactInvariant compact_invariant(const MultiplicitySignature& s) {
  CompactInvariant c;
  for (const auto& [value, mult] : s.pairs) {
    if (value == 0) c.m0 = mult;
    if (value == 1) c.m1 = mult;
    if (value == 3) c.m3 = mult;
    if (value == 4) c.m4 = mult;
  }
  return c;
}

inline std::string to_string(const CompactInvariant& c) {
  return "(" + std::to_string(c.m0) + "," + std::to_string(c.m1) + "," +
         std::to_string(c.m3) + "," + std::to_string(c.m4) + ")";
}

/// Support pattern for an r-tuple of stabilizer elements: required supports
/// of each element (singles) and of each pairwise product (pairs, ordered
/// (1,2), (1,3), (2,3)).
struct TupleSupportSpec {
  int r = 1;
  std::array<std::uint16_t, 3> singles{};
  std::array<std::uint16_t, 3> pairs{};
};

/// |T_{n,r}| — number of ordered r-tuples (s_1..s_r) of stabilizer elements
/// with supp(s_k) = singles[k] and supp(s_k s_l) = pairs[kl]. Tuples may
/// repeat an element. r = 1 reduces to the support tally.
inline std::uint64_t t_invariant(const Graph& g, const TupleSupportSpec& spec) {
  const int n = g.vertex_count();
  if (spec.r < 1 || spec.r > 3) throw std::invalid_argument("t_invariant: r must be 1..3");
  if (spec.r == 3 && n > 8) throw std::invalid_argument("t_invariant: r=3 limited to n <= 8");
  const int npairs = spec.r * (spec.r - 1) / 2;
  for (int k = 0; k < spec.r; ++k) {
    if (spec.singles[std::size_t(k)] >> n) {
      throw std::invalid_argument("t_invariant: single support outside qubit range");
    }
  }
  for (int k = 0; k < npairs; ++k) {
    if (spec.pairs[std::size_t(k)] >> n) {
      throw std::invalid_argument("t_invariant: pair support outside qubit range");
    }
  }

  const std::vector<PauliOperator> elems = enumerate_stabilizer(g);
  std::array<std::vector<const PauliOperator*>, 3> bucket;
  for (int k = 0; k < spec.r; ++k) {
    for (const PauliOperator& p : elems) {
      if (support(p) == spec.singles[std::size_t(k)]) bucket[std::size_t(k)].push_back(&p);
    }
  }
  auto prod_support = [](const PauliOperator& a, const PauliOperator& b) {
    return std::uint16_t((a.x_mask ^ b.x_mask) | (a.z_mask ^ b.z_mask));
  };

  std::uint64_t count = 0;
  if (spec.r == 1) {
    count = bucket[0].size();
  } else if (spec.r == 2) {
    for (const PauliOperator* a : bucket[0]) {
      for (const PauliOperator* b : bucket[1]) {
        if (prod_support(*a, *b) == spec.pairs[0]) ++count;
      }
    }
  } else {
    for (const PauliOperator* a : bucket[0]) {
      for (const PauliOperator* b : bucket[1]) {
        if (prod_support(*a, *b) != spec.pairs[0]) continue;
        for (const PauliOperator* c : bucket[2]) {
          if (prod_support(*a, *c) == spec.pairs[1] && prod_support(*b, *c) == spec.pairs[2]) {
            ++count;
          }
        }
      }
    }
  }
  return count;
}

inline BigInt binomial(const BigInt& n, std::uint64_t k) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: any i+1 consecutive integers contain a multiple
  }
  return r;
}

/// C'(m, k) = C(m+k-1, k): multisets of size k from m values.
inline BigInt multiset_coefficient(const BigInt& m, std::uint64_t k) {
  return binomial(m + BigInt(k) - 1, k);
}

/// Number of distinct support patterns for r-tuples: 2^n for r=1,
/// M(M + C(M,2)) with M = 2^n for r=2.
inline BigInt count_r_invariants(int n, int r) {
  if (n < 1 || n > 64) throw std::invalid_argument("count_r_invariants: n must be 1..64");
  const BigInt m = BigInt(1) << n;
  if (r == 1) return m;
  if (r == 2) return m * (m + m * (m - 1) / 2);
  throw std::invalid_argument("count_r_invariants: closed form known for r = 1 and 2 only");
}

/// Total pattern count over all tuple lengths:
/// M + sum_{r=2..n} C'(M,r) * C'(M, r(r-1)/2), M = 2^n.
inline BigInt count_total_invariants(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("count_total_invariants: n must be 1..16");
  const BigInt m = BigInt(1) << n;
  BigInt total = m;
  for (std::uint64_t r = 2; r <= std::uint64_t(n); ++r) {
    total += multiset_coefficient(m, r) * multiset_coefficient(m, r * (r - 1) / 2);
  }
  return total;
}

/// "2.18e36": round to the given number of significant decimal digits.
inline std::string format_scientific(const BigInt& value, int significant = 3) {
  if (value < 0 || significant < 1) {
    throw std::invalid_argument("format_scientific: non-negative value, significant >= 1");
  }
  std::string digits = value.str();
  int exponent = int(digits.size()) - 1;
  if (int(digits.size()) > significant) {
    const bool round_up = digits[std::size_t(significant)] >= '5';
    digits.resize(std::size_t(significant));
    if (round_up) {
      int i = significant - 1;
      while (i >= 0 && digits[std::size_t(i)] == '9') digits[std::size_t(i--)] = '0';
      if (i < 0) {
        digits.insert(digits.begin(), '1');
        digits.pop_back();
        ++exponent;
      } else {
        ++digits[std::size_t(i)];
      }
    }
  } else {
    digits.append(std::size_t(significant) - digits.size(), '0');
  }
  std::string out(1, digits[0]);
  if (significant > 1) out += "." + digits.substr(1);
  return out + "e" + std::to_string(exponent);
}

}  // namespace graphclass

#endif  // GRAPHCLASS_INVARIANTS_HPP_
