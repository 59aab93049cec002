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

#include "gsc/recipe.hpp"

namespace gsc {

/// Dependency DAG of a recipe: one node per op, one edge per consecutive pair
/// of ops on the same emitter wire.
struct OpDag {
  std::size_t n_ops = 0;
  std::vector<std::vector<std::size_t>> successors;

  bool is_acyclic() const;
  /// A topological order (op indices); throws if a cycle exists.
  std::vector<std::size_t> topological_order() const;
};

OpDag build_dag(const Recipe& r);
OpDag build_dag(const std::vector<RecipeOp>& ops);

/// Whether a and b can swap across the given emitter wire. The rule is
/// read/write based: an op that rewrites an emitter's neighborhood cannot
/// cross one that depends on it. Emissions never reorder with each other
/// (photon indices are sequential).
bool commutes(const RecipeOp& a, const RecipeOp& b, std::size_t emitter);

struct SimplifyStats {
  std::size_t cancellations = 0;
  std::size_t merges = 0;
  std::vector<std::string> log;  // one line per applied rewrite
  std::size_t gates_removed() const { return 2 * cancellations + merges; }
};

/// Cancels paired two-emitter ops and merges complementary ones across steps,
/// moving candidates together only through table-allowed swaps. Cancellation
/// passes run to a fixpoint before merge passes. The output replays to the
/// same final graph with never more two-emitter gates.
Recipe simplify(const Recipe& r, SimplifyStats* stats = nullptr);

}  // namespace gsc
