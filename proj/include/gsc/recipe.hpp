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

#include <cstddef>
#include <string>
#include <vector>

#include "gsc/graph.hpp"

namespace gsc {

/// Local-gate dressing of an emission: spine replacement (L), pendant leaf
/// (SS), neighborhood copy (S), or connected neighborhood copy (CS).
enum class EmissionMode { L, SS, S, CS };

enum class OpKind {
  EdgeToggle,        // toggle the edge between two emitters (one CZ)
  EToInside,         // toggle src's edges to tgt's neighborhood (one CZ)
  EToInsideConnect,  // same, plus toggling the src-tgt edge (still one CZ)
  Emit,              // emit a photon from an emitter in some mode
  Decouple,          // measure an emitter out and return it to the pool
  LocalClifford,     // explicit single-qubit gate on a node
};

enum class LocalGate { H, Phase, SqrtXDag, X, Z };

/// One elementary operation of a generation recipe. Emitters are referred to
/// by pool slot id, photons by emission index.
struct RecipeOp {
  OpKind kind = OpKind::EdgeToggle;
  std::size_t a = 0;  // EdgeToggle/EToInside*: first emitter (src); Emit: emitter;
                      // Decouple: emitter; LocalClifford: node
  std::size_t b = 0;  // EdgeToggle/EToInside*: second emitter (tgt); Emit: photon
  EmissionMode mode = EmissionMode::SS;
  LocalGate gate = LocalGate::H;
  std::size_t step = 0;  // photon index of the step this op belongs to

  static RecipeOp edge_toggle(std::size_t ea, std::size_t eb, std::size_t step);
  static RecipeOp e_to_inside(std::size_t src, std::size_t tgt, std::size_t step);
  static RecipeOp e_to_inside_connect(std::size_t src, std::size_t tgt, std::size_t step);
  static RecipeOp emit(std::size_t emitter, std::size_t photon, EmissionMode mode,
                       std::size_t step);
  static RecipeOp decouple(std::size_t emitter, std::size_t step);
  static RecipeOp local_clifford(std::size_t node, LocalGate gate, std::size_t step);

  bool is_two_emitter() const {
    return kind == OpKind::EdgeToggle || kind == OpKind::EToInside ||
           kind == OpKind::EToInsideConnect;
  }
  /// Emitter slots this op touches (photons are not wires here).
  std::vector<std::size_t> emitter_operands() const;
  bool touches_emitter(std::size_t e) const;
  bool operator==(const RecipeOp&) const = default;
  std::string to_string() const;
};

/// Ordered list of elementary operations that builds `target` (in original
/// labels) when photons are emitted in `order`.
struct Recipe {
  std::size_t n_photons = 0;
  std::size_t emitters_used = 0;
  Graph target;                    // original node labels
  std::vector<std::size_t> order;  // order[k] = original node emitted at step k
  std::vector<RecipeOp> ops;

  /// Target graph relabeled so that photon k is node k.
  Graph relabeled_target() const { return relabeled(target, order); }
  std::size_t two_qubit_count() const;
  bool operator==(const Recipe&) const = default;
};

std::string emission_mode_name(EmissionMode m);
EmissionMode emission_mode_from_name(const std::string& s);
std::string local_gate_name(LocalGate g);
LocalGate local_gate_from_name(const std::string& s);

std::string recipe_to_json_text(const Recipe& r);
Recipe recipe_from_json_text(const std::string& text);

}  // namespace gsc
