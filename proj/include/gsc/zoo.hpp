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

namespace gsc {

/// A constructed benchmark graph together with its canonical emission order.
struct BuiltGraph {
  Graph graph;
  std::vector<std::size_t> order;
  std::string order_note;  // which convention the order follows
};

/// Rooted tree with branching vector b: level k nodes each have b[k] children.
BuiltGraph build_tree(const std::vector<std::size_t>& branching);

/// Face- and edge-centered cubic lattice of unit cells stacked along each
/// axis; every face node links the four surrounding edge nodes.
BuiltGraph build_rhg(std::size_t lx, std::size_t ly, std::size_t lz);

/// Repeater graph state: complete core on n/2 nodes, one leaf per core node.
/// Canonical order is leaf/core interleaved; a cores-first order is also used
/// by the benchmarks.
BuiltGraph build_rgs(std::size_t n);
std::vector<std::size_t> rgs_cores_first_order(std::size_t n);

/// 16-node generalized repeater graph: complete bipartite 4x4 core with one
/// leaf per core node. Reconstruction of a published layout; the original is
/// given only as a drawing.
BuiltGraph build_generalized_rgs(std::size_t n);

/// Parity-encoded six-ring: six blocks in a cycle, each block n legs of m
/// qubits (a leg is a leader plus m-1 pendant leaves), adjacent blocks joined
/// completely between leader sets. Block wiring is reconstructed from the
/// published drawing; see the note in the implementation.
BuiltGraph build_six_ring(std::size_t n, std::size_t m);

/// Path with pendant leaves: leaves[i] leaves on spine node i. Order emits
/// each spine node's leaves before the spine node itself.
BuiltGraph build_caterpillar(const std::vector<std::size_t>& leaves);

BuiltGraph build_path(std::size_t n);
BuiltGraph build_cycle(std::size_t n);
BuiltGraph build_complete(std::size_t n);
BuiltGraph build_star(std::size_t n);  // node 0 is the center, emitted first

/// Connected random graph: random spanning tree plus uniformly sampled extra
/// edges up to max(floor(p*n*(n-1)/2), n-1) total. Reproducible from seed.
Graph random_connected(std::size_t n, double p, std::uint64_t seed);

/// Depth-first order from root, children visited in ascending index order.
std::vector<std::size_t> dfs_order(const Graph& g, std::size_t root);

/// Parses "family:params" specs, e.g. "tree:3,3,3", "rhg:1,1,1", "rgs:12",
/// "sixring:2,1", "caterpillar:2,0,3", "random:30,0.1,7", "path:5",
/// "cycle:6", "complete:5", "star:7", "grgs:16".
BuiltGraph build_family(const std::string& spec);

}  // namespace gsc
