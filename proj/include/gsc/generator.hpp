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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gsc/physical_state.hpp"
#include "gsc/recipe.hpp"

namespace gsc {

/// Which branch of the per-step analysis an emission falls under, keyed on
/// the rank effects of dropping the new photon's column and appending its
/// future row.
enum class StepCase { A, B1, B2i, B2ii, B2iii, C, D1, D2i, D2iia, D2iib, Isolated };

std::string step_case_name(StepCase c);

/// Decision record for one emission step.
struct StepClassification {
  std::size_t step = 0;
  StepCase case_id = StepCase::A;
  int column_effect = 0;
  int row_effect = 0;
  std::vector<std::size_t> j_set;  // emitters covering the photon's future row
  std::vector<std::size_t> k_set;  // emitters whose row starts at this photon
  std::vector<std::size_t> m_set;  // dependent-row emitter set (column drop)
  std::size_t chosen_emitter = 0;
  std::size_t active_after = 0;
  std::size_t rank_after = 0;  // biadjacency rank after the emission
};

/// Pluggable decision hooks. Defaults follow the shipped heuristics: pick the
/// shallowest candidate for emissions, the deepest for decoupling, keep the
/// emitter-row pivot order ascending, and never force extra emitters.
struct Strategy {
  /// Emitter choice for non-decoupling cases; candidates are sorted.
  std::function<std::size_t(const std::vector<std::size_t>&, const PhysicalState&)>
      choose_emitter;
  /// Emitter choice for decoupling cases.
  std::function<std::size_t(const std::vector<std::size_t>&, const PhysicalState&)>
      choose_decouple;
  /// Order in which active emitter rows feed the GF(2) solver.
  std::function<std::vector<std::size_t>(const PhysicalState&)> row_preference;
  /// When true (and budget remains), the next emission runs the new-emitter
  /// subroutine even if the existing emitters could handle it.
  std::function<bool(std::size_t, const PhysicalState&)> force_new_emitter;
  /// Hook for retargeting to a locally equivalent graph between steps.
  /// Identity by default; a non-identity return is rejected until a frame
  /// tracker accompanies it.
  std::function<Graph(const Graph&, std::size_t)> retarget;
  /// Reserved decision-tree horizon; 0 means the shipped greedy behavior.
  std::size_t lookahead_depth = 0;

  static Strategy defaults();
};

struct GeneratorOptions {
  Strategy strategy = Strategy::defaults();
  std::size_t extra_emitters = 0;
  bool check_invariants = false;  // assert step-wise structural conditions
  bool simplify = false;          // run the recipe simplifier on the output
  bool allow_isolated = false;    // permit isolated target nodes
  std::vector<StepClassification>* trace = nullptr;
};

/// Structural health report for an intermediate state: the tracked emitter
/// rows must span (and, minimally, form a basis of) the remaining biadjacency
/// row space, every photon's future row must equal the XOR of its adjacent
/// emitters' rows, and the emitted subgraph must match the target.
struct ConditionReport {
  bool emitter_rows_ok = false;
  bool row_expansion_ok = false;
  bool inside_match_ok = false;
  std::string detail;
  bool all() const { return emitter_rows_ok && row_expansion_ok && inside_match_ok; }
  std::string to_json_text() const;
};

/// Runs the structural checks against `target` (already relabeled so photon
/// k is node k) at the state's current emission count. The two-argument form
/// demands a basis (minimal mode); pass require_basis = false when extra
/// emitters make the tracked rows intentionally dependent.
ConditionReport check_conditions(const PhysicalState& s, const Graph& target);
ConditionReport check_conditions(const PhysicalState& s, const Graph& target,
                                 bool require_basis);

/// J/K/M helper sets for the next emission, from the tracked emitter rows.
struct StepSets {
  std::vector<std::size_t> j_set;
  std::vector<std::size_t> k_set;
  std::vector<std::size_t> m_set;
};
StepSets compute_sets(const PhysicalState& s, const Graph& target);

/// Case analysis for the next emission (no state change).
StepClassification classify_step(const PhysicalState& s, const Graph& target,
                                 const Strategy& strategy);

/// Builds a generation recipe: photons come out in `order`, the recipe
/// replays to the target exactly, and without extra emitters the pool size
/// meets the biadjacency rank bound with the active count matching the rank
/// at every step.
Recipe generate(const Graph& target, const std::vector<std::size_t>& order,
                const GeneratorOptions& opts = {});

/// Convenience strategy: force the new-emitter subroutine on every j-th
/// photon while the budget allows.
Strategy every_jth_extra(std::size_t j);

}  // namespace gsc
