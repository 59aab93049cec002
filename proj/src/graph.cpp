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

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gsc {

Graph Graph::from_edges(std::size_t nodes,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g(nodes);
  for (auto [u, v] : edges) {
    g.add_edge(u, v);
  }
  return g;
}

void Graph::set_edge(std::size_t u, std::size_t v, bool present) {
  if (u >= n || v >= n) {
    throw std::invalid_argument("Graph::set_edge: node out of range");
  }
  if (u == v) {
    throw std::invalid_argument("Graph::set_edge: self-edge");
  }
  adj.set(u, v, present);
  adj.set(v, u, present);
}

void Graph::toggle_edge(std::size_t u, std::size_t v) { set_edge(u, v, !has_edge(u, v)); }

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += adj.row(i).count();
  }
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v : adj.row(u).set_bits()) {
      if (u < v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

bool Graph::is_connected() const {
  if (n <= 1) {
    return true;
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adj.row(u).set_bits()) {
      if (!seen[v]) {
        seen[v] = true;
        ++visited;
        stack.push_back(v);
      }
    }
  }
  return visited == n;
}

std::vector<std::size_t> Graph::isolated_nodes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj.row(i).is_zero()) {
      out.push_back(i);
    }
  }
  return out;
}

Graph local_complement(const Graph& g, std::size_t k) {
  if (k >= g.n) {
    throw std::invalid_argument("local_complement: node out of range");
  }
  Graph out = g;
  auto nbrs = g.neighbors(k);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      out.toggle_edge(nbrs[i], nbrs[j]);
    }
  }
  return out;
}

BitMatrix biadjacency(const Graph& g, std::size_t n_inside) {
  if (n_inside > g.n) {
    throw std::invalid_argument("biadjacency: n_inside out of range");
  }
  std::size_t cols = g.n - n_inside;
  BitMatrix b(n_inside, cols);
  for (std::size_t i = 0; i < n_inside; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (g.has_edge(i, n_inside + j)) {
        b.set(i, j, true);
      }
    }
  }
  return b;
}

RankEffects rank_effects(const Graph& g, std::size_t n) {
  if (n < 1 || n + 1 > g.n) {
    throw std::invalid_argument("rank_effects: need 1 <= n <= g.n - 1");
  }
  BitMatrix b = biadjacency(g, n);
  std::size_t r0 = rank(b);

  // b with its first column deleted.
  BitMatrix trimmed(n, g.n - n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j < g.n - n; ++j) {
      if (b.get(i, j)) {
        trimmed.set(i, j - 1, true);
      }
    }
  }
  std::size_t r1 = rank(trimmed);

  BitVector row_new(g.n - n - 1);
  for (std::size_t j = n + 1; j < g.n; ++j) {
    if (g.has_edge(n, j)) {
      row_new.set(j - n - 1, true);
    }
  }
  BitMatrix appended = trimmed;
  appended.append_row(row_new);
  std::size_t r2 = rank(appended);

  return RankEffects{static_cast<int>(r1) - static_cast<int>(r0),
                     static_cast<int>(r2) - static_cast<int>(r1)};
}

Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& nodes) {
  Graph out(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] >= g.n) {
      throw std::invalid_argument("induced_subgraph: node out of range");
    }
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (g.has_edge(nodes[i], nodes[j])) {
        out.add_edge(i, j);
      }
    }
  }
  return out;
}

Graph relabeled(const Graph& g, const std::vector<std::size_t>& order) {
  if (!is_permutation(order, g.n)) {
    throw std::invalid_argument("relabeled: order is not a permutation");
  }
  Graph out(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i + 1; j < g.n; ++j) {
      if (g.has_edge(order[i], order[j])) {
        out.add_edge(i, j);
      }
    }
  }
  return out;
}

bool is_permutation(const std::vector<std::size_t>& order, std::size_t n) {
  if (order.size() != n) {
    return false;
  }
  std::vector<bool> seen(n, false);
  for (std::size_t v : order) {
    if (v >= n || seen[v]) {
      return false;
    }
    seen[v] = true;
  }
  return true;
}

namespace {

// Re-echelonizes rows in place and returns their pivots.
void reechelonize(std::vector<BitVector>& basis) {
  std::vector<BitVector> rebuilt;
  std::vector<std::size_t> pivots;
  for (auto& v : basis) {
    for (std::size_t k = 0; k < rebuilt.size(); ++k) {
      if (v.get(pivots[k])) {
        v ^= rebuilt[k];
      }
    }
    auto p = v.first_set();
    if (p.has_value()) {
      pivots.push_back(*p);
      rebuilt.push_back(std::move(v));
    }
  }
  basis = std::move(rebuilt);
}

}  // namespace

std::vector<std::size_t> prefix_ranks(const Graph& g) {
  // Incremental echelon maintenance over full-length vectors whose past bits
  // are kept zero: moving the partition past node n-1 masks out its column
  // from every basis vector, then inserts node n-1's future row.
  std::vector<std::size_t> ranks(g.n, 0);
  std::vector<BitVector> basis;
  for (std::size_t n = 1; n < g.n; ++n) {
    for (auto& v : basis) {
      v.set(n - 1, false);
    }
    reechelonize(basis);

    BitVector row(g.n);
    for (std::size_t j = n; j < g.n; ++j) {
      if (g.has_edge(n - 1, j)) {
        row.set(j, true);
      }
    }
    for (const auto& v : basis) {
      if (row.get(*v.first_set())) {
        row ^= v;
      }
    }
    if (row.any()) {
      basis.push_back(std::move(row));
    }
    ranks[n] = basis.size();
  }
  return ranks;
}

std::size_t min_emitters(const Graph& g, const std::vector<std::size_t>& order) {
  Graph r = relabeled(g, order);
  std::size_t best = 0;
  for (std::size_t v : prefix_ranks(r)) {
    best = std::max(best, v);
  }
  return best;
}

Graph read_edge_list(std::istream& in) {
  std::size_t n = 0;
  if (!(in >> n)) {
    throw std::runtime_error("edge list: missing node count");
  }
  Graph g(n);
  std::size_t u, v;
  while (in >> u >> v) {
    if (u >= n || v >= n || u == v) {
      throw std::runtime_error("edge list: bad edge");
    }
    g.add_edge(u, v);
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n << "\n";
  for (auto [u, v] : g.edges()) {
    out << u << " " << v << "\n";
  }
}

Graph graph_from_json_text(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::size_t n = j.at("n").get<std::size_t>();
  Graph g(n);
  for (const auto& e : j.at("edges")) {
    g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  }
  return g;
}

std::string graph_to_json_text(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) {
    edges.push_back({u, v});
  }
  j["edges"] = edges;
  return j.dump();
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open graph file: " + path);
  }
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    std::stringstream ss;
    ss << in.rdbuf();
    return graph_from_json_text(ss.str());
  }
  return read_edge_list(in);
}

}  // namespace gsc
