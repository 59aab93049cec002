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
#include <vector>

#include "gsc/graph.hpp"
#include "gsc/recipe.hpp"

namespace gsc {

/// Evolving emitter+photon graph during a generation run. Photons are nodes
/// 0..n_photons-1, emitter slot e is node n_photons + e. Emitter rows (the
/// future edges an active emitter is responsible for) are full-length photon
/// vectors whose past bits are kept zero.
struct PhysicalState {
  std::size_t n_photons = 0;
  std::size_t emitted = 0;
  Graph graph;
  std::vector<bool> active;
  std::vector<BitVector> emitter_row;
  std::vector<std::size_t> emitter_depth;  // emitter-emitter gates this span
  std::vector<std::size_t> pool;           // inactive slots, ascending
  std::size_t slots_used = 0;              // high-water mark of slots taken

  static PhysicalState initial(std::size_t n_photons, std::size_t emitter_capacity);

  std::size_t capacity() const { return active.size(); }
  std::size_t emitter_node(std::size_t e) const { return n_photons + e; }
  bool is_emitter_node(std::size_t node) const { return node >= n_photons; }
  std::size_t active_count() const;
  std::vector<std::size_t> active_emitters() const;

  /// Photons currently adjacent to emitter e.
  std::vector<std::size_t> photon_neighbors(std::size_t e) const;

  /// Takes the lowest inactive slot (the pool grows on demand).
  std::size_t activate();

  /// Graph over photon nodes only (prefix of the node order).
  Graph photonic_graph() const;
  bool all_emitters_isolated() const;
};

// Elementary operations. Each returns the evolved state; inputs are taken by
// value so callers keep value semantics while a generation run can move its
// own state through the chain.

/// Toggles the edge between two emitters. One emitter-emitter gate.
PhysicalState apply_edge_toggle(PhysicalState s, std::size_t ea, std::size_t eb);

/// Toggles src's edges to tgt's neighborhood (excluding src and tgt); the
/// src-tgt edge itself and tgt's neighborhood are unchanged. One gate. When
/// tgt has no neighbor besides src the toggle set is empty and the op is a
/// graph no-op (the generator never emits that form).
PhysicalState apply_e_to_inside(PhysicalState s, std::size_t src, std::size_t tgt);

/// e-to-inside plus a toggle of the src-tgt edge, still one gate.
PhysicalState apply_e_to_inside_connect(PhysicalState s, std::size_t src, std::size_t tgt);

/// Emits photon `photon` (must be the next one) from emitter e.
///   L:  the photon takes over e's neighborhood; e becomes its leaf.
///   SS: the photon becomes a leaf of e.
///   S:  the photon copies e's neighborhood; no photon-e edge.
///   CS: the photon copies e's neighborhood and links to e.
PhysicalState apply_emission(PhysicalState s, std::size_t e, std::size_t photon,
                             EmissionMode mode);

/// Isolates emitter e and returns it to the pool.
PhysicalState apply_decouple(PhysicalState s, std::size_t e);

PhysicalState apply_recipe_op(PhysicalState s, const RecipeOp& op);

/// Replays a recipe from scratch and returns the final state.
PhysicalState replay(const Recipe& r);

/// True iff the replayed photonic graph equals the relabeled target and all
/// emitters end isolated.
bool replays_to_target(const Recipe& r);

}  // namespace gsc
