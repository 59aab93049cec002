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
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gsc/gf2.hpp"

namespace gsc {

/// Simple undirected graph: symmetric adjacency matrix with zero diagonal.
struct Graph {
  std::size_t n = 0;
  BitMatrix adj;

  Graph() = default;
  explicit Graph(std::size_t nodes) : n(nodes), adj(nodes, nodes) {}
  static Graph from_edges(std::size_t nodes,
                          const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  bool has_edge(std::size_t u, std::size_t v) const { return adj.get(u, v); }
  void set_edge(std::size_t u, std::size_t v, bool present);
  void add_edge(std::size_t u, std::size_t v) { set_edge(u, v, true); }
  void toggle_edge(std::size_t u, std::size_t v);

  const BitVector& neighbor_row(std::size_t v) const { return adj.row(v); }
  std::vector<std::size_t> neighbors(std::size_t v) const { return adj.row(v).set_bits(); }
  std::size_t degree(std::size_t v) const { return adj.row(v).count(); }
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  bool is_connected() const;
  std::vector<std::size_t> isolated_nodes() const;

  bool operator==(const Graph&) const = default;
};

/// Complements the subgraph induced by the neighborhood of k. Edges incident
/// to k itself are untouched; the diagonal stays zero.
Graph local_complement(const Graph& g, std::size_t k);

/// Rows are the first n_inside nodes, columns the remaining ones:
/// entry (i, j) = 1 iff edge (i, n_inside + j) exists.
BitMatrix biadjacency(const Graph& g, std::size_t n_inside);

struct RankEffects {
  int column_effect = 0;  // in {-1, 0}
  int row_effect = 0;     // in {0, +1}
};

/// Rank change of the prefix biadjacency when node n crosses the partition:
/// the column effect from deleting its column, then the row effect from
/// appending its row of future edges.
RankEffects rank_effects(const Graph& g, std::size_t n);

/// Subgraph on the listed nodes, compacted in the given order.
Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& nodes);

/// Relabels so that new node i is old node order[i].
Graph relabeled(const Graph& g, const std::vector<std::size_t>& order);

/// Max over all emission prefixes of the biadjacency rank, after relabeling
/// by the emission order. This is the emitter count floor for that order.
std::size_t min_emitters(const Graph& g, const std::vector<std::size_t>& order);

/// Per-prefix biadjacency ranks (index n holds rank of the n-photon prefix).
std::vector<std::size_t> prefix_ranks(const Graph& g);

bool is_permutation(const std::vector<std::size_t>& order, std::size_t n);

// Graph file formats shared by the CLI: edge-list text ("N" header line, then
// one "u v" pair per line) and JSON ({"n": int, "edges": [[u,v],...]}).
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const Graph& g);
Graph load_graph_file(const std::string& path);

}  // namespace gsc
