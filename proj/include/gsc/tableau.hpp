// Copyright 2026 The gsc developers
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

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gsc/gates.hpp"
#include "gsc/gf2.hpp"
#include "gsc/graph.hpp"

namespace gsc {

/// How Z measurements resolve when the outcome is not determined by the
/// state: always 0, or sampled from a seeded generator.
enum class OutcomeMode { ForcedZero, SeededRandom };

struct OutcomeContext {
  OutcomeMode mode = OutcomeMode::ForcedZero;
  std::mt19937_64 rng{0};
  std::vector<int> outcomes;  // recorded measurement results, in order

  static OutcomeContext forced_zero() { return OutcomeContext{}; }
  static OutcomeContext seeded(std::uint64_t seed) {
    OutcomeContext c;
    c.mode = OutcomeMode::SeededRandom;
    c.rng.seed(seed);
    return c;
  }
};

/// Stabilizer/destabilizer tableau over n qubits, all wires starting in |0>.
/// Signs are tracked exactly through the supported Clifford gates.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(std::size_t n);

  std::size_t n_qubits() const { return n_; }

  void apply_h(std::size_t q);
  void apply_phase(std::size_t q);  // S: X -> Y
  void apply_sqrt_x_dag(std::size_t q);
  void apply_x(std::size_t q);
  void apply_z(std::size_t q);
  void apply_cnot(std::size_t c, std::size_t t);
  void apply_cz(std::size_t a, std::size_t b);
  int measure_z(std::size_t q, OutcomeContext& ctx);
  void apply(const GateOp& g, OutcomeContext& ctx);

  // Stabilizer row access (rows n..2n-1 of the full tableau).
  bool stab_x(std::size_t row, std::size_t q) const { return x_[n_ + row].get(q); }
  bool stab_z(std::size_t row, std::size_t q) const { return z_[n_ + row].get(q); }
  bool stab_sign(std::size_t row) const { return r_[n_ + row]; }  // true = -1
  std::string stabilizer_string(std::size_t row) const;
  std::vector<std::string> stabilizer_strings() const;

  bool operator==(const StabilizerTableau&) const = default;

 private:
  void rowsum(std::size_t h, std::size_t i);
  std::size_t n_;
  std::vector<BitVector> x_;  // 2n+1 rows
  std::vector<BitVector> z_;
  std::vector<bool> r_;  // sign bits, true = -1
};

StabilizerTableau simulate(const GateCircuit& c, OutcomeContext& ctx);
StabilizerTableau simulate_forced_zero(const GateCircuit& c);

/// Tableau of the graph state |G>: H everywhere then CZ per edge.
StabilizerTableau graph_state_tableau(const Graph& g);

}  // namespace gsc
