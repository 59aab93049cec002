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
#include <map>
#include <string>

#include "gsc/gates.hpp"
#include "gsc/recipe.hpp"
#include "gsc/verifier.hpp"

namespace gsc {

struct CostReport {
  std::size_t two_qubit_count = 0;  // emitter-emitter gates
  std::map<std::size_t, std::size_t> per_emitter_depth;  // max span per slot
  std::size_t emitters_used = 0;
  std::size_t op_count = 0;
  std::string to_json_text() const;
};

/// Flattens a recipe into a Clifford circuit: activation Hadamards on first
/// use of each emitter span, the per-op gate expansions, and the final Z
/// corrections on photons computed by the verifier's sign-fixing pass.
GateCircuit transpile(const Recipe& r);

/// Gate-count metrics of a recipe. Emission CNOTs do not count.
CostReport cost_report(const Recipe& r);

/// Full pipeline check: transpile, simulate under the given outcome policy,
/// and compare the photonic state against the target graph state.
VerifyResult verify_recipe(const Recipe& r, OutcomeMode mode = OutcomeMode::ForcedZero,
                           std::uint64_t seed = 0);

/// Same check for an externally supplied circuit.
VerifyResult verify_circuit(const GateCircuit& c, const Graph& relabeled_target,
                            OutcomeMode mode = OutcomeMode::ForcedZero,
                            std::uint64_t seed = 0);

}  // namespace gsc
