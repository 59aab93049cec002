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

#include "gsc/simplifier.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace gsc {

bool OpDag::is_acyclic() const {
  std::vector<std::size_t> indegree(n_ops, 0);
  for (const auto& succ : successors) {
    for (std::size_t v : succ) {
      ++indegree[v];
    }
  }
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < n_ops; ++i) {
    if (indegree[i] == 0) {
      queue.push_back(i);
    }
  }
  std::size_t seen = 0;
  while (!queue.empty()) {
    std::size_t u = queue.back();
    queue.pop_back();
    ++seen;
    for (std::size_t v : successors[u]) {
      if (--indegree[v] == 0) {
        queue.push_back(v);
      }
    }
  }
  return seen == n_ops;
}

std::vector<std::size_t> OpDag::topological_order() const {
  std::vector<std::size_t> indegree(n_ops, 0);
  for (const auto& succ : successors) {
    for (std::size_t v : succ) {
      ++indegree[v];
    }
  }
  std::vector<std::size_t> queue, order;
  for (std::size_t i = 0; i < n_ops; ++i) {
    if (indegree[i] == 0) {
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    std::size_t u = queue.back();
    queue.pop_back();
    order.push_back(u);
    for (std::size_t v : successors[u]) {
      if (--indegree[v] == 0) {
        queue.push_back(v);
      }
    }
  }
  if (order.size() != n_ops) {
    throw std::logic_error("OpDag: cycle detected");
  }
  return order;
}

OpDag build_dag(const std::vector<RecipeOp>& ops) {
  OpDag dag;
  dag.n_ops = ops.size();
  dag.successors.assign(ops.size(), {});
  std::size_t max_emitter = 0;
  for (const auto& op : ops) {
    for (std::size_t e : op.emitter_operands()) {
      max_emitter = std::max(max_emitter, e + 1);
    }
  }
  std::vector<long> last(max_emitter, -1);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t e : ops[i].emitter_operands()) {
      if (last[e] >= 0) {
        dag.successors[static_cast<std::size_t>(last[e])].push_back(i);
      }
      last[e] = static_cast<long>(i);
    }
  }
  return dag;
}

OpDag build_dag(const Recipe& r) { return build_dag(r.ops); }

namespace {

// Does the op's effect depend on this emitter's current neighborhood?
bool reads_neighborhood(const RecipeOp& op, std::size_t e) {
  switch (op.kind) {
    case OpKind::EToInside:
    case OpKind::EToInsideConnect:
      return op.b == e;
    case OpKind::Emit:
      return op.a == e &&
             (op.mode == EmissionMode::L || op.mode == EmissionMode::S ||
              op.mode == EmissionMode::CS);
    case OpKind::Decouple:
      return op.a == e;
    case OpKind::LocalClifford:
      return op.a == e;  // conservative
    case OpKind::EdgeToggle:
      return false;
  }
  return false;
}

// Does the op change this emitter's neighborhood?
bool writes_neighborhood(const RecipeOp& op, std::size_t e) {
  switch (op.kind) {
    case OpKind::EdgeToggle:
      return op.a == e || op.b == e;
    case OpKind::EToInside:
      return op.a == e;
    case OpKind::EToInsideConnect:
      return op.a == e || op.b == e;  // the src-tgt edge moves both
    case OpKind::Emit:
      return op.a == e && op.mode != EmissionMode::S;
    case OpKind::Decouple:
      return op.a == e;
    case OpKind::LocalClifford:
      return op.a == e;  // conservative
  }
  return false;
}

bool same_pair(const RecipeOp& a, const RecipeOp& b) {
  return (a.a == b.a && a.b == b.b) || (a.a == b.b && a.b == b.a);
}

bool same_orientation(const RecipeOp& a, const RecipeOp& b) {
  return a.a == b.a && a.b == b.b;
}

enum class RuleKind { None, Cancel, Merge };

struct RuleResult {
  RuleKind kind = RuleKind::None;
  std::optional<RecipeOp> replacement;
};

// Rewrite rules on one unordered emitter pair. Orientation matters whenever
// a neighborhood-directed op is involved.
RuleResult match_rule(const RecipeOp& a, const RecipeOp& b, bool cancels, bool merges) {
  RuleResult res;
  if (!a.is_two_emitter() || !b.is_two_emitter() || !same_pair(a, b)) {
    return res;
  }
  if (cancels) {
    bool cancel =
        (a.kind == OpKind::EdgeToggle && b.kind == OpKind::EdgeToggle) ||
        (a.kind == b.kind &&
         (a.kind == OpKind::EToInside || a.kind == OpKind::EToInsideConnect) &&
         same_orientation(a, b));
    if (cancel) {
      res.kind = RuleKind::Cancel;
      return res;
    }
  }
  if (!merges) {
    return res;
  }
  auto directed = [&](OpKind k) -> const RecipeOp* {
    if (a.kind == k) return &a;
    if (b.kind == k) return &b;
    return nullptr;
  };
  const RecipeOp* toggle = directed(OpKind::EdgeToggle);
  const RecipeOp* inside = directed(OpKind::EToInside);
  const RecipeOp* connect = directed(OpKind::EToInsideConnect);
  if (toggle && inside) {
    res.kind = RuleKind::Merge;
    res.replacement = RecipeOp::e_to_inside_connect(inside->a, inside->b, a.step);
    return res;
  }
  if (toggle && connect) {
    res.kind = RuleKind::Merge;
    res.replacement = RecipeOp::e_to_inside(connect->a, connect->b, a.step);
    return res;
  }
  if (inside && connect && same_orientation(*inside, *connect)) {
    res.kind = RuleKind::Merge;
    res.replacement = RecipeOp::edge_toggle(a.a, a.b, a.step);
    return res;
  }
  return res;
}

struct Rewriter {
  std::vector<RecipeOp> ops;
  SimplifyStats* stats;

  bool shares_wire(const RecipeOp& x, const RecipeOp& y) const {
    for (std::size_t e : x.emitter_operands()) {
      if (y.touches_emitter(e)) {
        return true;
      }
    }
    return false;
  }

  bool commutes_ops(const RecipeOp& x, const RecipeOp& y) const {
    for (std::size_t e : x.emitter_operands()) {
      if (y.touches_emitter(e) && !commutes(x, y, e)) {
        return false;
      }
    }
    return true;
  }

  // Index just before which alpha can be parked: the earliest op after alpha
  // that blocks it on either of its wires (capped at beta).
  std::size_t anchor_for(std::size_t ia, std::size_t ib) const {
    for (std::size_t i = ia + 1; i < ib; ++i) {
      if (shares_wire(ops[ia], ops[i]) && !commutes_ops(ops[ia], ops[i])) {
        return i;
      }
    }
    return ib;
  }

  bool beta_reaches(std::size_t anchor, std::size_t ib) const {
    for (std::size_t i = anchor; i < ib; ++i) {
      if (shares_wire(ops[ib], ops[i]) && !commutes_ops(ops[ib], ops[i])) {
        return false;
      }
    }
    return true;
  }

  bool try_rewrite(std::size_t ia, std::size_t ib, const RuleResult& rule) {
    std::size_t anchor = anchor_for(ia, ib);
    if (!beta_reaches(anchor, ib)) {
      return false;
    }
    if (stats != nullptr) {
      std::string line = rule.kind == RuleKind::Cancel ? "cancel " : "merge ";
      line += ops[ia].to_string() + " with " + ops[ib].to_string();
      if (rule.replacement.has_value()) {
        line += " -> " + rule.replacement->to_string();
      }
      stats->log.push_back(line);
      if (rule.kind == RuleKind::Cancel) {
        ++stats->cancellations;
      } else {
        ++stats->merges;
      }
    }
    ops.erase(ops.begin() + static_cast<long>(ib));
    ops.erase(ops.begin() + static_cast<long>(ia));
    if (rule.replacement.has_value()) {
      // ia < anchor <= ib, so after both erasures the anchor sits at -1.
      ops.insert(ops.begin() + static_cast<long>(anchor - 1), *rule.replacement);
    }
    if (!build_dag(ops).is_acyclic()) {
      throw std::logic_error("simplify: rewrite broke the operation order");
    }
    return true;
  }

  // One scan for emitter `e`: finds an alpha/beta pair on the same emitter
  // pair that matches a rule and can be brought together. Returns true if a
  // rewrite fired.
  bool scan_emitter(std::size_t e, bool cancels, bool merges) {
    for (std::size_t ia = 0; ia < ops.size(); ++ia) {
      const RecipeOp& alpha = ops[ia];
      if (!alpha.is_two_emitter() || std::min(alpha.a, alpha.b) != e) {
        continue;
      }
      for (std::size_t ib = ia + 1; ib < ops.size(); ++ib) {
        const RecipeOp& beta = ops[ib];
        if (!beta.is_two_emitter() || !same_pair(alpha, beta)) {
          continue;
        }
        RuleResult rule = match_rule(alpha, beta, cancels, merges);
        if (rule.kind == RuleKind::None) {
          continue;
        }
        if (try_rewrite(ia, ib, rule)) {
          return true;
        }
        // Blocked by commutation; a later partner may still reach.
      }
    }
    return false;
  }
};

}  // namespace

bool commutes(const RecipeOp& a, const RecipeOp& b, std::size_t emitter) {
  if (!a.touches_emitter(emitter) || !b.touches_emitter(emitter)) {
    throw std::invalid_argument("commutes: both ops must touch the emitter");
  }
  if (a.kind == OpKind::Emit && b.kind == OpKind::Emit) {
    return false;  // photon order is fixed
  }
  bool ra = reads_neighborhood(a, emitter);
  bool wa = writes_neighborhood(a, emitter);
  bool rb = reads_neighborhood(b, emitter);
  bool wb = writes_neighborhood(b, emitter);
  return !((ra && wb) || (wa && rb));
}

Recipe simplify(const Recipe& r, SimplifyStats* stats) {
  Rewriter rw{r.ops, stats};
  std::size_t max_emitter = 0;
  for (const auto& op : r.ops) {
    for (std::size_t e : op.emitter_operands()) {
      max_emitter = std::max(max_emitter, e + 1);
    }
  }
  bool outer_changed = true;
  while (outer_changed) {
    outer_changed = false;
    // All cancellations first (worth two gates each), then merges.
    for (int phase = 0; phase < 2; ++phase) {
      bool cancels = phase == 0;
      bool merges = phase == 1;
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t e = 0; e < max_emitter; ++e) {
          while (rw.scan_emitter(e, cancels, merges)) {
            changed = true;
            outer_changed = true;
          }
        }
      }
    }
  }
  Recipe out = r;
  out.ops = std::move(rw.ops);
  return out;
}

}  // namespace gsc
