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

#include "gsc/physical_state.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsc {

PhysicalState PhysicalState::initial(std::size_t n_photons, std::size_t emitter_capacity) {
  PhysicalState s;
  s.n_photons = n_photons;
  s.graph = Graph(n_photons + emitter_capacity);
  s.active.assign(emitter_capacity, false);
  s.emitter_row.assign(emitter_capacity, BitVector(n_photons));
  s.emitter_depth.assign(emitter_capacity, 0);
  for (std::size_t e = 0; e < emitter_capacity; ++e) {
    s.pool.push_back(e);
  }
  return s;
}

std::size_t PhysicalState::active_count() const {
  std::size_t c = 0;
  for (bool a : active) {
    c += a ? 1 : 0;
  }
  return c;
}

std::vector<std::size_t> PhysicalState::active_emitters() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < active.size(); ++e) {
    if (active[e]) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<std::size_t> PhysicalState::photon_neighbors(std::size_t e) const {
  std::vector<std::size_t> out;
  for (std::size_t v : graph.neighbors(emitter_node(e))) {
    if (v < n_photons) {
      out.push_back(v);
    }
  }
  return out;
}

std::size_t PhysicalState::activate() {
  std::size_t e;
  if (!pool.empty()) {
    e = pool.front();
    pool.erase(pool.begin());
  } else {
    // Grow: add one emitter slot.
    e = capacity();
    Graph bigger(graph.n + 1);
    for (auto [u, v] : graph.edges()) {
      bigger.add_edge(u, v);
    }
    graph = std::move(bigger);
    active.push_back(false);
    emitter_row.push_back(BitVector(n_photons));
    emitter_depth.push_back(0);
  }
  active[e] = true;
  emitter_depth[e] = 0;
  slots_used = std::max(slots_used, e + 1);
  return e;
}

Graph PhysicalState::photonic_graph() const {
  Graph out(n_photons);
  for (std::size_t u = 0; u < n_photons; ++u) {
    for (std::size_t v : graph.neighbors(u)) {
      if (v < n_photons && u < v) {
        out.add_edge(u, v);
      }
    }
  }
  return out;
}

bool PhysicalState::all_emitters_isolated() const {
  for (std::size_t e = 0; e < capacity(); ++e) {
    if (graph.degree(emitter_node(e)) != 0) {
      return false;
    }
  }
  return true;
}

namespace {

void require_emitters(const PhysicalState& s, std::size_t ea, std::size_t eb,
                      const char* what) {
  if (ea >= s.capacity() || eb >= s.capacity()) {
    throw std::invalid_argument(std::string(what) + ": emitter out of range");
  }
  if (ea == eb) {
    throw std::invalid_argument(std::string(what) + ": emitters must be distinct");
  }
}

}  // namespace

PhysicalState apply_edge_toggle(PhysicalState s, std::size_t ea, std::size_t eb) {
  require_emitters(s, ea, eb, "edge_toggle");
  s.graph.toggle_edge(s.emitter_node(ea), s.emitter_node(eb));
  ++s.emitter_depth[ea];
  ++s.emitter_depth[eb];
  return s;
}

PhysicalState apply_e_to_inside(PhysicalState s, std::size_t src, std::size_t tgt) {
  require_emitters(s, src, tgt, "e_to_inside");
  std::size_t sn = s.emitter_node(src);
  std::size_t tn = s.emitter_node(tgt);
  for (std::size_t v : s.graph.neighbors(tn)) {
    if (v != sn) {
      s.graph.toggle_edge(sn, v);
    }
  }
  ++s.emitter_depth[src];
  ++s.emitter_depth[tgt];
  return s;
}

PhysicalState apply_e_to_inside_connect(PhysicalState s, std::size_t src, std::size_t tgt) {
  require_emitters(s, src, tgt, "e_to_inside_connect");
  std::size_t sn = s.emitter_node(src);
  std::size_t tn = s.emitter_node(tgt);
  for (std::size_t v : s.graph.neighbors(tn)) {
    if (v != sn) {
      s.graph.toggle_edge(sn, v);
    }
  }
  s.graph.toggle_edge(sn, tn);
  ++s.emitter_depth[src];
  ++s.emitter_depth[tgt];
  return s;
}

PhysicalState apply_emission(PhysicalState s, std::size_t e, std::size_t photon,
                             EmissionMode mode) {
  if (e >= s.capacity()) {
    throw std::invalid_argument("emission: emitter out of range");
  }
  if (photon != s.emitted || photon >= s.n_photons) {
    throw std::invalid_argument("emission: photons must be emitted in order");
  }
  std::size_t en = s.emitter_node(e);
  auto nbrs = s.graph.neighbors(en);
  switch (mode) {
    case EmissionMode::L:
      for (std::size_t v : nbrs) {
        s.graph.set_edge(en, v, false);
        s.graph.set_edge(photon, v, true);
      }
      s.graph.set_edge(en, photon, true);
      break;
    case EmissionMode::SS:
      s.graph.set_edge(en, photon, true);
      break;
    case EmissionMode::S:
      for (std::size_t v : nbrs) {
        s.graph.set_edge(photon, v, true);
      }
      break;
    case EmissionMode::CS:
      for (std::size_t v : nbrs) {
        s.graph.set_edge(photon, v, true);
      }
      s.graph.set_edge(en, photon, true);
      break;
  }
  ++s.emitted;
  return s;
}

PhysicalState apply_decouple(PhysicalState s, std::size_t e) {
  if (e >= s.capacity()) {
    throw std::invalid_argument("decouple: emitter out of range");
  }
  std::size_t en = s.emitter_node(e);
  for (std::size_t v : s.graph.neighbors(en)) {
    s.graph.set_edge(en, v, false);
  }
  if (s.active[e]) {
    s.active[e] = false;
    s.emitter_row[e].clear();
    s.emitter_depth[e] = 0;
    s.pool.insert(std::lower_bound(s.pool.begin(), s.pool.end(), e), e);
  }
  return s;
}

PhysicalState apply_recipe_op(PhysicalState s, const RecipeOp& op) {
  switch (op.kind) {
    case OpKind::EdgeToggle:
      return apply_edge_toggle(std::move(s), op.a, op.b);
    case OpKind::EToInside:
      return apply_e_to_inside(std::move(s), op.a, op.b);
    case OpKind::EToInsideConnect:
      return apply_e_to_inside_connect(std::move(s), op.a, op.b);
    case OpKind::Emit:
      return apply_emission(std::move(s), op.a, op.b, op.mode);
    case OpKind::Decouple:
      return apply_decouple(std::move(s), op.a);
    case OpKind::LocalClifford:
      return s;  // no effect at the graph level
  }
  return s;
}

PhysicalState replay(const Recipe& r) {
  std::size_t cap = r.emitters_used;
  for (const auto& op : r.ops) {
    for (std::size_t e : op.emitter_operands()) {
      cap = std::max(cap, e + 1);
    }
  }
  PhysicalState s = PhysicalState::initial(r.n_photons, cap);
  for (const auto& op : r.ops) {
    // Activation is implicit: the first use of a pooled slot marks it active
    // so depth bookkeeping matches generation.
    for (std::size_t e : op.emitter_operands()) {
      if (e < s.capacity() && !s.active[e] && op.kind != OpKind::Decouple) {
        auto it = std::lower_bound(s.pool.begin(), s.pool.end(), e);
        if (it != s.pool.end() && *it == e) {
          s.pool.erase(it);
        }
        s.active[e] = true;
        s.slots_used = std::max(s.slots_used, e + 1);
      }
    }
    s = apply_recipe_op(std::move(s), op);
  }
  return s;
}

bool replays_to_target(const Recipe& r) {
  PhysicalState s = replay(r);
  if (s.emitted != r.n_photons) {
    return false;
  }
  if (!s.all_emitters_isolated()) {
    return false;
  }
  return s.photonic_graph() == r.relabeled_target();
}

}  // namespace gsc
