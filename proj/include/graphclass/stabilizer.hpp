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

#ifndef GRAPHCLASS_STABILIZER_HPP_
#define GRAPHCLASS_STABILIZER_HPP_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphclass/graph.hpp"

namespace graphclass {

/// n-qubit Pauli operator in binary symplectic form: i^phase_exp times, on
/// each qubit j, X^(x bit j) combined with Z^(z bit j); both bits set means Y.
/// Stabilizer elements of graph states always end up with phase_exp 0 or 2
/// (sign +1 or -1).
struct PauliOperator {
  int n = 0;
  std::uint16_t x_mask = 0;
  std::uint16_t z_mask = 0;
  std::uint8_t phase_exp = 0;  // exponent of i, mod 4

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;
};

inline PauliOperator identity_op(int n) { return PauliOperator{n, 0, 0, 0}; }

/// Qubits where the operator acts non-trivially, as a bitmask.
inline std::uint16_t support(const PauliOperator& p) { return p.x_mask | p.z_mask; }

inline int weight(const PauliOperator& p) { return std::popcount(support(p)); }

/// Exact Pauli product with phase tracking. Single-qubit convention:
/// X*Z = -iY, Z*X = +iY (the letter form w = i^{x&z} X^x Z^z makes the
/// bookkeeping below; moving Z past X costs -1 per anticommuting qubit).
inline PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  if (p.n != q.n) throw std::invalid_argument("multiply: operator lengths differ");
  PauliOperator r;
  r.n = p.n;
  r.x_mask = p.x_mask ^ q.x_mask;
  r.z_mask = p.z_mask ^ q.z_mask;
  int e = p.phase_exp + q.phase_exp;
  e += std::popcount(std::uint16_t(p.x_mask & p.z_mask));
  e += std::popcount(std::uint16_t(q.x_mask & q.z_mask));
  e += 2 * std::popcount(std::uint16_t(p.z_mask & q.x_mask));
  e -= std::popcount(std::uint16_t(r.x_mask & r.z_mask));
  r.phase_exp = std::uint8_t((e % 4 + 4) % 4);
  return r;
}

/// Letter string, qubit 1 leftmost: "XZ1", "-YXY", sign prefix from the
/// phase ("" / "i" / "-" / "-i").
inline std::string to_string(const PauliOperator& p) {
  static const char* kPrefix[4] = {"", "i", "-", "-i"};
  std::string s = kPrefix[p.phase_exp & 3];
  for (int j = 0; j < p.n; ++j) {
    const bool x = (p.x_mask >> j) & 1u;
    const bool z = (p.z_mask >> j) & 1u;
    s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : '1');
  }
  return s;
}

/// "{1,3}" for mask 0b101; "{}" for the empty support. 1-indexed qubits.
inline std::string support_to_string(std::uint16_t mask) {
  std::string s = "{";
  bool first = true;
  while (mask) {
    int v = std::countr_zero(mask);
    mask &= std::uint16_t(mask - 1);
    if (!first) s += ',';
    s += std::to_string(v + 1);
    first = false;
  }
  return s + "}";
}

/// The n stabilizer generators of a graph state: g_i = X on vertex i, Z on
/// each of its neighbors.
struct GeneratorSet {
  int n = 0;
  std::vector<PauliOperator> gens;
};

inline GeneratorSet generators(const Graph& g) {
  GeneratorSet gs;
  gs.n = g.vertex_count();
  gs.gens.reserve(std::size_t(gs.n));
  for (int i = 0; i < gs.n; ++i) {
    gs.gens.push_back(PauliOperator{gs.n, std::uint16_t(1u << i), g.neighborhood(i), 0});
  }
  return gs;
}

/// Product of the generators selected by bitmask a, ascending index. The
/// generators commute, so this fixes the (immaterial) order once and for all.
inline PauliOperator element(const GeneratorSet& gs, std::uint32_t a) {
  if (a >> gs.n) throw std::out_of_range("element: generator mask out of range");
  PauliOperator r = identity_op(gs.n);
  while (a) {
    r = multiply(r, gs.gens[std::size_t(std::countr_zero(a))]);
    a &= a - 1;
  }
  return r;
}

/// All 2^n stabilizer elements, indexed by generator mask a. One multiply per
/// element: elems[a] = g_{lowest bit} * elems[a with lowest bit cleared].
inline std::vector<PauliOperator> enumerate_stabilizer(const Graph& g) {
  const int n = g.vertex_count();
  const GeneratorSet gs = generators(g);
  std::vector<PauliOperator> elems(std::size_t(1) << n);
  elems[0] = identity_op(n);
  for (std::uint32_t a = 1; a < (1u << n); ++a) {
    elems[a] = multiply(gs.gens[std::size_t(std::countr_zero(a))], elems[a & (a - 1)]);
  }
  return elems;
}

}  // namespace graphclass

#endif  // GRAPHCLASS_STABILIZER_HPP_
