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

#include "gsc/graph.hpp"

#include <random>
#include <sstream>

#include "doctest.h"
#include "gsc/zoo.hpp"

using namespace gsc;

namespace {

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (double(rng() % 1000) / 1000.0 < p) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

}  // namespace

TEST_CASE("local complement on a path center closes the triangle") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Graph lc = local_complement(p3, 1);
  CHECK(lc.has_edge(0, 1));
  CHECK(lc.has_edge(1, 2));
  CHECK(lc.has_edge(0, 2));
  CHECK(lc.edge_count() == 3);
}

TEST_CASE("local complement at an isolated node is a no-op") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}});
  CHECK(local_complement(g, 3) == g);
}

TEST_CASE("local complement is an involution") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 2 + rng() % 10;
    Graph g = random_graph(n, 0.4, rng);
    std::size_t k = rng() % n;
    CHECK(local_complement(local_complement(g, k), k) == g);
  }
}

TEST_CASE("biadjacency worked examples") {
  // Five-node target whose two-photon prefix rows are (1,0,0) and (1,1,1).
  Graph g = Graph::from_edges(5, {{0, 2}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(biadjacency(g, 2) == BitMatrix::from_rows({{1, 0, 0}, {1, 1, 1}}));

  CHECK(biadjacency(g, 0).rows() == 0);

  Graph c4 = build_cycle(4).graph;
  CHECK(biadjacency(c4, 2) == BitMatrix::from_rows({{0, 1}, {1, 0}}));
}

TEST_CASE("biadjacency entries match the adjacency") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rng() % 12;
    Graph g = random_graph(n, 0.5, rng);
    std::size_t cut = rng() % (n + 1);
    BitMatrix b = biadjacency(g, cut);
    for (std::size_t i = 0; i < cut; ++i) {
      for (std::size_t j = 0; j < n - cut; ++j) {
        CHECK(b.get(i, j) == g.has_edge(i, cut + j));
      }
    }
  }
}

TEST_CASE("rank_effects worked examples") {
  Graph p3 = build_path(3).graph;
  RankEffects e = rank_effects(p3, 1);
  CHECK(e.column_effect == -1);
  CHECK(e.row_effect == 1);

  Graph star = build_star(6).graph;  // center first
  for (std::size_t n = 2; n + 1 < star.n; ++n) {
    RankEffects se = rank_effects(star, n);
    CHECK(se.column_effect == 0);
    CHECK(se.row_effect == 0);
  }

  Graph c4 = build_cycle(4).graph;
  RankEffects ce = rank_effects(c4, 1);
  CHECK(ce.column_effect == 0);
  CHECK(ce.row_effect == 1);
}

TEST_CASE("induced subgraph") {
  Graph tri = build_complete(3).graph;
  Graph edge = induced_subgraph(tri, {0, 2});
  CHECK(edge.n == 2);
  CHECK(edge.has_edge(0, 1));

  CHECK(induced_subgraph(tri, {}).n == 0);

  Graph c4 = build_cycle(4).graph;
  Graph path = induced_subgraph(c4, {0, 1, 2});
  CHECK(path.edge_count() == 2);
  CHECK(path.has_edge(0, 1));
  CHECK(path.has_edge(1, 2));
}

TEST_CASE("min_emitters worked examples") {
  Graph p7 = build_path(7).graph;
  CHECK(min_emitters(p7, build_path(7).order) == 1);

  auto tree = build_tree({3, 3, 3});
  CHECK(min_emitters(tree.graph, tree.order) == 3);

  auto k5 = build_complete(5);
  CHECK(min_emitters(k5.graph, k5.order) == 1);
}

TEST_CASE("prefix ranks match direct biadjacency ranks") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng() % 14;
    Graph g = random_graph(n, 0.35, rng);
    auto ranks = prefix_ranks(g);
    REQUIRE(ranks.size() == n);
    for (std::size_t cut = 0; cut < n; ++cut) {
      CHECK(ranks[cut] == rank(biadjacency(g, cut)));
    }
  }
}

TEST_CASE("biadjacency rank is invariant under local complementation") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 2 + rng() % 10;
    Graph g = random_graph(n, 0.4, rng);
    std::size_t k = rng() % n;
    Graph h = local_complement(g, k);
    for (std::size_t cut = 0; cut <= n; ++cut) {
      CHECK(rank(biadjacency(g, cut)) == rank(biadjacency(h, cut)));
    }
  }
}

TEST_CASE("leaf external neighborhood after local complementations") {
  // Attach a leaf to a parent and apply up to 20 complementations anywhere.
  // The pair keeps one of three shapes: the leaf's external neighborhood is
  // empty, it equals the parent's, or the roles have swapped and the
  // parent's is empty. (LC on the parent and then on the leaf swaps the
  // roles, so the invariant is symmetric in the pair.)
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t base = 2 + rng() % 8;
    Graph g = random_graph(base + 1, 0.4, rng);
    std::size_t leaf = base;
    std::size_t parent = rng() % base;
    // Make `leaf` an exact leaf of `parent`.
    for (std::size_t v : g.neighbors(leaf)) {
      g.set_edge(leaf, v, false);
    }
    g.add_edge(leaf, parent);

    std::size_t steps = rng() % 21;
    for (std::size_t s = 0; s < steps; ++s) {
      g = local_complement(g, rng() % g.n);
    }
    BitVector leaf_row = g.neighbor_row(leaf);
    BitVector parent_row = g.neighbor_row(parent);
    leaf_row.set(parent, false);
    leaf_row.set(leaf, false);
    parent_row.set(parent, false);
    parent_row.set(leaf, false);
    bool ok = leaf_row.is_zero() || leaf_row == parent_row || parent_row.is_zero();
    CHECK(ok);
  }
}

TEST_CASE("relabeled applies the emission order") {
  Graph g = Graph::from_edges(3, {{0, 2}});
  Graph r = relabeled(g, {2, 0, 1});
  CHECK(r.has_edge(0, 1));
  CHECK(r.edge_count() == 1);
}

TEST_CASE("edge list and json round trips") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  CHECK(read_edge_list(in) == g);

  CHECK(graph_from_json_text(graph_to_json_text(g)) == g);
}

TEST_CASE("connectivity and isolated node helpers") {
  Graph g = Graph::from_edges(4, {{0, 1}});
  CHECK_FALSE(g.is_connected());
  CHECK(g.isolated_nodes() == std::vector<std::size_t>{2, 3});
  CHECK(build_path(5).graph.is_connected());
}
