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
#include <string>
#include <vector>

#include "gsc/graph.hpp"
#include "gsc/tableau.hpp"

namespace gsc {

struct VerifyResult {
  bool pass = false;
  /// Photons needing a Z to bring the stabilizer signs to all +1.
  std::vector<std::size_t> z_corrections;
  std::string diagnostic;
  std::vector<int> outcomes;  // measurement record of the simulation
  std::uint64_t seed = 0;     // outcome seed the simulation ran with

  std::string to_json_text() const;
};

/// Checks that the tableau (emitter wires first, then photon wires) carries
/// exactly the graph state of `target` on the photon wires: emitters must be
/// disentangled, every target generator X_i prod Z_j must lie in the photonic
/// stabilizer group, and the signs fixed by the returned Z corrections.
VerifyResult check_graph_state(const StabilizerTableau& t, const Graph& target,
                               std::size_t n_emitters);

/// Exact bipartite entanglement (in ebits) of |g> across the prefix cut,
/// computed by dense state-vector partial trace. Only for g.n <= 12.
std::size_t bipartite_entropy_oracle(const Graph& g, std::size_t n_inside);

/// Same quantity without rounding, for tolerance checks.
double bipartite_entropy_exact(const Graph& g, std::size_t n_inside);

}  // namespace gsc
