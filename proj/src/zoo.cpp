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

#include "gsc/zoo.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gsc {

namespace {

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = i;
  }
  return order;
}

// Deterministic bounded draw; std::uniform_int_distribution is not
// implementation-stable, and frozen seeds appear in tests.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return rng() % bound; }

}  // namespace

BuiltGraph build_tree(const std::vector<std::size_t>& branching) {
  for (std::size_t b : branching) {
    if (b == 0) {
      throw std::invalid_argument("tree: branching factors must be positive");
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> level{0};
  std::size_t next = 1;
  for (std::size_t b : branching) {
    std::vector<std::size_t> next_level;
    for (std::size_t parent : level) {
      for (std::size_t c = 0; c < b; ++c) {
        edges.emplace_back(parent, next);
        next_level.push_back(next);
        ++next;
      }
    }
    level = std::move(next_level);
  }
  Graph g = Graph::from_edges(next, edges);
  return BuiltGraph{g, dfs_order(g, 0), "dfs-from-root"};
}

BuiltGraph build_rhg(std::size_t lx, std::size_t ly, std::size_t lz) {
  if (lx == 0 || ly == 0 || lz == 0) {
    throw std::invalid_argument("rhg: all extents must be positive");
  }
  // Doubled coordinates: qubits sit at points with exactly one odd component
  // (cube-edge centers) or exactly two (face centers); faces link the four
  // surrounding edge centers.
  struct Node {
    std::size_t x, y, z;
    int odd;
  };
  std::size_t mx = 2 * lx, my = 2 * ly, mz = 2 * lz;
  std::vector<Node> nodes;
  std::vector<std::vector<long>> id;  // flattened index -> node id (or -1)
  id.assign(mx + 1, std::vector<long>((my + 1) * (mz + 1), -1));
  auto flat = [&](std::size_t y, std::size_t z) { return y * (mz + 1) + z; };

  for (std::size_t x = 0; x <= mx; ++x) {
    for (std::size_t y = 0; y <= my; ++y) {
      for (std::size_t z = 0; z <= mz; ++z) {
        int odd = int(x & 1) + int(y & 1) + int(z & 1);
        if (odd == 1 || odd == 2) {
          nodes.push_back(Node{x, y, z, odd});
        }
      }
    }
  }
  // Raster order over unit cells, faces before edges within a cell.
  auto cell_of = [&](const Node& v) {
    std::size_t cx = std::min(v.x / 2, lx - 1);
    std::size_t cy = std::min(v.y / 2, ly - 1);
    std::size_t cz = std::min(v.z / 2, lz - 1);
    return (cx * ly + cy) * lz + cz;
  };
  std::stable_sort(nodes.begin(), nodes.end(), [&](const Node& a, const Node& b) {
    std::size_t ca = cell_of(a), cb = cell_of(b);
    if (ca != cb) {
      return ca < cb;
    }
    if (a.odd != b.odd) {
      return a.odd > b.odd;  // faces (2 odd) first
    }
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  });
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    id[nodes[i].x][flat(nodes[i].y, nodes[i].z)] = static_cast<long>(i);
  }
  Graph g(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& v = nodes[i];
    if (v.odd != 2) {
      continue;
    }
    const long dx[6] = {1, -1, 0, 0, 0, 0};
    const long dy[6] = {0, 0, 1, -1, 0, 0};
    const long dz[6] = {0, 0, 0, 0, 1, -1};
    for (int d = 0; d < 6; ++d) {
      long nx = static_cast<long>(v.x) + dx[d];
      long ny = static_cast<long>(v.y) + dy[d];
      long nz = static_cast<long>(v.z) + dz[d];
      if (nx < 0 || ny < 0 || nz < 0 || nx > static_cast<long>(mx) ||
          ny > static_cast<long>(my) || nz > static_cast<long>(mz)) {
        continue;
      }
      long j = id[nx][flat(ny, nz)];
      if (j >= 0 && nodes[j].odd == 1) {
        g.add_edge(i, static_cast<std::size_t>(j));
      }
    }
  }
  // Breadth-first from the first corner face: wavefront emission keeps the
  // active prefix rank at the published emitter counts, where plain raster
  // overshoots by one.
  std::vector<std::size_t> order;
  std::vector<bool> seen(g.n, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t u = queue[head];
    order.push_back(u);
    for (std::size_t v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return BuiltGraph{g, order, "bfs-wavefront"};
}

BuiltGraph build_rgs(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("rgs: size must be even and at least 4");
  }
  std::size_t k = n / 2;  // cores 0..k-1, leaf of core i is k+i
  Graph g(n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      g.add_edge(i, j);
    }
    g.add_edge(i, k + i);
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < k; ++i) {
    order.push_back(k + i);  // leaf first, then its core
    order.push_back(i);
  }
  return BuiltGraph{g, order, "leaf-core-interleaved"};
}

std::vector<std::size_t> rgs_cores_first_order(std::size_t n) {
  std::vector<std::size_t> order;
  std::size_t k = n / 2;
  for (std::size_t i = 0; i < k; ++i) {
    order.push_back(i);
  }
  for (std::size_t i = 0; i < k; ++i) {
    order.push_back(k + i);
  }
  return order;
}

BuiltGraph build_generalized_rgs(std::size_t n) {
  if (n != 16) {
    throw std::invalid_argument("grgs: only the 16-node instance is provided");
  }
  // Complete bipartite 4x4 core (nodes 0..7, sides {0..3} and {4..7}) with a
  // leaf on every core node. Best-effort reconstruction of the published
  // 16-node drawing.
  Graph g(16);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 4; b < 8; ++b) {
      g.add_edge(a, b);
    }
  }
  for (std::size_t i = 0; i < 8; ++i) {
    g.add_edge(i, 8 + i);
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < 8; ++i) {
    order.push_back(8 + i);
    order.push_back(i);
  }
  return BuiltGraph{g, order, "leaf-core-interleaved"};
}

BuiltGraph build_six_ring(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) {
    throw std::invalid_argument("sixring: parameters must be positive");
  }
  // Reconstruction note: the published state is given as a drawing. We use
  // the parity-code reading where each of the six ring positions is a block
  // of n legs (a leg is an m-qubit star: leader plus m-1 leaves) and adjacent
  // blocks are joined completely between leader sets. For m = 1 this is a
  // hexagonal necklace of complete bipartite joins.
  std::size_t block = n * m;
  Graph g(6 * block);
  auto leader = [&](std::size_t b, std::size_t leg) { return b * block + leg * m; };
  for (std::size_t b = 0; b < 6; ++b) {
    for (std::size_t leg = 0; leg < n; ++leg) {
      std::size_t lead = leader(b, leg);
      for (std::size_t q = 1; q < m; ++q) {
        g.add_edge(lead, lead + q);
      }
    }
  }
  for (std::size_t b = 0; b < 6; ++b) {
    std::size_t nb = (b + 1) % 6;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        g.add_edge(leader(b, i), leader(nb, j));
      }
    }
  }
  return BuiltGraph{g, identity_order(g.n), "ring-major"};
}

BuiltGraph build_caterpillar(const std::vector<std::size_t>& leaves) {
  std::size_t spine = leaves.size();
  if (spine == 0) {
    throw std::invalid_argument("caterpillar: need at least one spine node");
  }
  std::size_t total = spine;
  for (std::size_t c : leaves) {
    total += c;
  }
  Graph g(total);
  std::vector<std::size_t> order;
  std::size_t next_leaf = spine;
  for (std::size_t i = 0; i < spine; ++i) {
    if (i + 1 < spine) {
      g.add_edge(i, i + 1);
    }
    for (std::size_t c = 0; c < leaves[i]; ++c) {
      g.add_edge(i, next_leaf);
      order.push_back(next_leaf);
      ++next_leaf;
    }
    order.push_back(i);
  }
  return BuiltGraph{g, order, "leaves-before-spine"};
}

BuiltGraph build_path(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("path: need at least one node");
  }
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.add_edge(i, i + 1);
  }
  return BuiltGraph{g, identity_order(n), "natural"};
}

BuiltGraph build_cycle(std::size_t n) {
  if (n < 3) {
    throw std::invalid_argument("cycle: need at least three nodes");
  }
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
  }
  return BuiltGraph{g, identity_order(n), "natural"};
}

BuiltGraph build_complete(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("complete: need at least two nodes");
  }
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      g.add_edge(i, j);
    }
  }
  return BuiltGraph{g, identity_order(n), "natural"};
}

BuiltGraph build_star(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("star: need at least two nodes");
  }
  Graph g(n);
  for (std::size_t i = 1; i < n; ++i) {
    g.add_edge(0, i);
  }
  return BuiltGraph{g, identity_order(n), "center-first"};
}

Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("random_connected: need at least two nodes");
  }
  if (p <= 0.0 || p > 1.0) {
    throw std::invalid_argument("random_connected: p must be in (0, 1]");
  }
  std::mt19937_64 rng(seed);
  Graph g(n);
  if (n == 2) {
    g.add_edge(0, 1);
  } else {
    // Uniform random labeled tree via a random Pruefer sequence.
    std::vector<std::size_t> pruefer(n - 2);
    for (auto& v : pruefer) {
      v = draw(rng, n);
    }
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t v : pruefer) {
      ++degree[v];
    }
    std::vector<bool> used(n, false);
    for (std::size_t v : pruefer) {
      std::size_t leaf = 0;
      while (leaf < n && (degree[leaf] != 1 || used[leaf])) {
        ++leaf;
      }
      g.add_edge(leaf, v);
      used[leaf] = true;
      --degree[v];
      --degree[leaf];
    }
    std::size_t u = 0, w = 0;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (degree[i] == 1 && !used[i]) {
        if (first) {
          u = i;
          first = false;
        } else {
          w = i;
        }
      }
    }
    g.add_edge(u, w);
  }

  std::size_t expected = static_cast<std::size_t>(p * double(n) * double(n - 1) / 2.0);
  std::size_t target = std::max(expected, n - 1);
  std::size_t have = g.edge_count();
  while (have < target) {
    std::size_t u = draw(rng, n);
    std::size_t v = draw(rng, n);
    if (u != v && !g.has_edge(u, v)) {
      g.add_edge(u, v);
      ++have;
    }
  }
  return g;
}

std::vector<std::size_t> dfs_order(const Graph& g, std::size_t root) {
  if (root >= g.n) {
    throw std::invalid_argument("dfs_order: root out of range");
  }
  std::vector<std::size_t> order;
  std::vector<bool> seen(g.n, false);
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    if (seen[u]) {
      continue;
    }
    seen[u] = true;
    order.push_back(u);
    auto nbrs = g.neighbors(u);
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
      if (!seen[*it]) {
        stack.push_back(*it);
      }
    }
  }
  if (order.size() != g.n) {
    throw std::invalid_argument("dfs_order: graph is disconnected");
  }
  return order;
}

BuiltGraph build_family(const std::string& spec) {
  auto colon = spec.find(':');
  std::string family = spec.substr(0, colon);
  std::string params = colon == std::string::npos ? "" : spec.substr(colon + 1);
  std::vector<std::string> parts;
  {
    std::stringstream ss(params);
    std::string item;
    while (std::getline(ss, item, ',')) {
      parts.push_back(item);
    }
  }
  auto nums = [&]() {
    std::vector<std::size_t> out;
    for (const auto& s : parts) {
      out.push_back(std::stoull(s));
    }
    return out;
  };
  if (family == "tree") {
    return build_tree(nums());
  }
  if (family == "rhg") {
    auto v = nums();
    if (v.size() != 3) {
      throw std::invalid_argument("rhg: need three extents");
    }
    return build_rhg(v[0], v[1], v[2]);
  }
  if (family == "rgs") {
    auto v = nums();
    if (v.size() != 1) {
      throw std::invalid_argument("rgs: need one size");
    }
    return build_rgs(v[0]);
  }
  if (family == "grgs") {
    auto v = nums();
    if (v.size() != 1) {
      throw std::invalid_argument("grgs: need one size");
    }
    return build_generalized_rgs(v[0]);
  }
  if (family == "sixring") {
    auto v = nums();
    if (v.size() != 2) {
      throw std::invalid_argument("sixring: need two encoding parameters");
    }
    return build_six_ring(v[0], v[1]);
  }
  if (family == "caterpillar") {
    return build_caterpillar(nums());
  }
  if (family == "path") {
    return build_path(nums().at(0));
  }
  if (family == "cycle") {
    return build_cycle(nums().at(0));
  }
  if (family == "complete") {
    return build_complete(nums().at(0));
  }
  if (family == "star") {
    return build_star(nums().at(0));
  }
  if (family == "random") {
    if (parts.size() != 3) {
      throw std::invalid_argument("random: need n,p,seed");
    }
    std::size_t n = std::stoull(parts[0]);
    double p = std::stod(parts[1]);
    std::uint64_t seed = std::stoull(parts[2]);
    Graph g = random_connected(n, p, seed);
    return BuiltGraph{g, identity_order(n), "natural"};
  }
  throw std::invalid_argument("unknown graph family: " + family);
}

}  // namespace gsc
