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

#include "gsc/generator.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "gsc/simplifier.hpp"

namespace gsc {

std::string step_case_name(StepCase c) {
  switch (c) {
    case StepCase::A:
      return "A";
    case StepCase::B1:
      return "B1";
    case StepCase::B2i:
      return "B2i";
    case StepCase::B2ii:
      return "B2ii";
    case StepCase::B2iii:
      return "B2iii";
    case StepCase::C:
      return "C";
    case StepCase::D1:
      return "D1";
    case StepCase::D2i:
      return "D2i";
    case StepCase::D2iia:
      return "D2iia";
    case StepCase::D2iib:
      return "D2iib";
    case StepCase::Isolated:
      return "isolated";
  }
  return "?";
}

Strategy Strategy::defaults() {
  Strategy s;
  s.choose_emitter = [](const std::vector<std::size_t>& candidates, const PhysicalState& st) {
    // Shallowest first (fewest two-qubit gates so far), then lowest id.
    std::size_t best = candidates.front();
    for (std::size_t e : candidates) {
      if (st.emitter_depth[e] < st.emitter_depth[best]) {
        best = e;
      }
    }
    return best;
  };
  s.choose_decouple = [](const std::vector<std::size_t>& candidates, const PhysicalState& st) {
    // Deepest first, then lowest id: retire the noisiest emitter.
    std::size_t best = candidates.front();
    for (std::size_t e : candidates) {
      if (st.emitter_depth[e] > st.emitter_depth[best]) {
        best = e;
      }
    }
    return best;
  };
  s.row_preference = [](const PhysicalState& st) { return st.active_emitters(); };
  s.force_new_emitter = [](std::size_t, const PhysicalState&) { return false; };
  s.retarget = [](const Graph& g, std::size_t) { return g; };
  return s;
}

Strategy every_jth_extra(std::size_t j) {
  Strategy s = Strategy::defaults();
  if (j == 0) {
    throw std::invalid_argument("every_jth_extra: j must be positive");
  }
  s.force_new_emitter = [j](std::size_t step, const PhysicalState&) {
    return step % j == 0;
  };
  return s;
}

namespace {

// Future row of `node` in the relabeled target, restricted to photons > from.
BitVector future_row(const Graph& target, std::size_t node, std::size_t from) {
  BitVector row(target.n);
  for (std::size_t j = from + 1; j < target.n; ++j) {
    if (target.has_edge(node, j)) {
      row.set(j, true);
    }
  }
  return row;
}

// Row with only bit `n` set.
BitVector unit_row(std::size_t width, std::size_t n) { return BitVector::unit(width, n); }

// Maps RowBasis expression indices (insertion order) back to emitter ids.
std::vector<std::size_t> to_emitters(const std::vector<std::size_t>& idx,
                                     const std::vector<std::size_t>& order) {
  std::vector<std::size_t> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) {
    out.push_back(order[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  for (std::size_t x : a) {
    if (contains(b, x)) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<std::size_t> subtract(const std::vector<std::size_t>& a,
                                  const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  for (std::size_t x : a) {
    if (!contains(b, x)) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<std::size_t> sym_diff(const std::vector<std::size_t>& a,
                                  const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out = subtract(a, b);
  for (std::size_t x : subtract(b, a)) {
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Everything the per-step analysis needs, shared by classify_step and the
// generator loop so they cannot disagree.
struct StepAnalysis {
  StepClassification cls;
  std::vector<std::size_t> handoff;         // run e_to_inside(x -> e_i) first
  std::vector<std::size_t> connect_direct;  // emitters to edge-toggle with e_i
  EmissionMode mode = EmissionMode::L;
  bool new_emitter = false;
  bool decouple_after = false;
  bool reassign_row = false;  // chosen emitter takes the photon's future row
  bool sandwich = false;      // undo the K/J connections after emitting
};

std::size_t pick(const std::function<std::size_t(const std::vector<std::size_t>&,
                                                 const PhysicalState&)>& chooser,
                 const std::vector<std::size_t>& candidates, const PhysicalState& s,
                 const char* where) {
  if (candidates.empty()) {
    throw std::logic_error(std::string("step analysis: empty candidate set in case ") +
                           where);
  }
  std::size_t e = chooser(candidates, s);
  if (!contains(candidates, e)) {
    throw std::logic_error("strategy picked an emitter outside the candidate set");
  }
  return e;
}

StepAnalysis analyze_step(const PhysicalState& s, const Graph& target,
                          const Strategy& strategy, bool allow_force, std::size_t budget) {
  std::size_t n = s.emitted;
  StepAnalysis a;
  a.cls.step = n;

  const std::vector<std::size_t> pref = strategy.row_preference(s);
  BitVector r_new = future_row(target, n, n);

  // K: active emitters responsible for an edge onto photon n.
  for (std::size_t e : pref) {
    if (s.emitter_row[e].get(n)) {
      a.cls.k_set.push_back(e);
    }
  }
  std::sort(a.cls.k_set.begin(), a.cls.k_set.end());

  // Column effect: does some subset of tracked rows sum to exactly bit n?
  RowBasis full_rows(target.n);
  for (std::size_t e : pref) {
    full_rows.insert(s.emitter_row[e]);
  }
  auto m_expr = full_rows.express(unit_row(target.n, n));
  bool col_drop = m_expr.has_value();
  if (col_drop) {
    a.cls.m_set = to_emitters(*m_expr, pref);
  }

  // Row effect: is the future row already covered by the truncated rows?
  RowBasis trunc_rows(target.n);
  for (std::size_t e : pref) {
    BitVector t = s.emitter_row[e];
    t.set(n, false);
    trunc_rows.insert(t);
  }
  auto j_expr = trunc_rows.express(r_new);
  bool row_new = !j_expr.has_value();
  if (j_expr.has_value()) {
    a.cls.j_set = to_emitters(*j_expr, pref);
  }

  a.cls.column_effect = col_drop ? -1 : 0;
  a.cls.row_effect = row_new ? 1 : 0;

  bool isolated = a.cls.k_set.empty() && r_new.is_zero();
  if (isolated) {
    a.cls.case_id = StepCase::Isolated;
    a.mode = EmissionMode::SS;
    a.new_emitter = true;
    a.decouple_after = true;
    return a;
  }

  bool forced = allow_force && budget > 0 && !col_drop && !r_new.is_zero() &&
                strategy.force_new_emitter(n, s);

  if (!col_drop && (row_new || forced)) {
    a.cls.case_id = StepCase::A;
    a.new_emitter = true;
    a.reassign_row = true;  // the fresh emitter takes the new row
    a.mode = EmissionMode::L;
    return a;
  }
  if (!col_drop && !row_new) {
    if (r_new.is_zero()) {
      a.cls.case_id = StepCase::B1;
      a.cls.chosen_emitter = pick(strategy.choose_emitter, a.cls.k_set, s, "B1");
      a.mode = EmissionMode::S;
      a.sandwich = true;
      return a;
    }
    if (a.cls.k_set.empty()) {
      a.cls.case_id = StepCase::B2i;
      a.cls.chosen_emitter = pick(strategy.choose_emitter, a.cls.j_set, s, "B2i");
      a.handoff = subtract(a.cls.j_set, {a.cls.chosen_emitter});
      a.mode = EmissionMode::SS;
      a.reassign_row = true;
      return a;
    }
    auto kj = intersect(a.cls.k_set, a.cls.j_set);
    if (kj.empty()) {
      a.cls.case_id = StepCase::B2ii;
      a.cls.chosen_emitter = pick(strategy.choose_emitter, a.cls.k_set, s, "B2ii");
      a.connect_direct = a.cls.j_set;
      a.mode = EmissionMode::S;
      a.sandwich = true;
      return a;
    }
    a.cls.case_id = StepCase::B2iii;
    a.cls.chosen_emitter = pick(strategy.choose_emitter, kj, s, "B2iii");
    a.connect_direct = subtract(a.cls.j_set, {a.cls.chosen_emitter});
    a.mode = (kj.size() % 2 == 1) ? EmissionMode::CS : EmissionMode::S;
    a.sandwich = true;
    return a;
  }
  if (col_drop && row_new) {
    a.cls.case_id = StepCase::C;
    auto km = intersect(a.cls.k_set, a.cls.m_set);
    a.cls.chosen_emitter = pick(strategy.choose_emitter, km, s, "C");
    a.handoff = subtract(a.cls.m_set, {a.cls.chosen_emitter});
    a.mode = EmissionMode::L;
    a.reassign_row = true;
    return a;
  }
  // Column dropped, row covered: the chosen emitter retires after emitting.
  a.decouple_after = true;
  a.mode = EmissionMode::L;
  if (a.cls.m_set.size() == 1) {
    a.cls.case_id = StepCase::D1;
    a.cls.chosen_emitter = a.cls.m_set.front();
    a.connect_direct = a.cls.j_set;
    return a;
  }
  if (r_new.is_zero()) {
    a.cls.case_id = StepCase::D2i;
    a.cls.chosen_emitter = pick(strategy.choose_decouple, a.cls.m_set, s, "D2i");
    a.handoff = subtract(a.cls.m_set, {a.cls.chosen_emitter});
    return a;
  }
  auto mk = intersect(a.cls.m_set, a.cls.k_set);
  auto mk_minus_j = subtract(mk, a.cls.j_set);
  if (!mk_minus_j.empty()) {
    a.cls.case_id = StepCase::D2iia;
    a.cls.chosen_emitter = pick(strategy.choose_decouple, mk_minus_j, s, "D2iia");
    a.handoff = subtract(a.cls.m_set, {a.cls.chosen_emitter});
    a.connect_direct = a.cls.j_set;
    return a;
  }
  a.cls.case_id = StepCase::D2iib;
  a.cls.chosen_emitter = pick(strategy.choose_decouple, mk, s, "D2iib");
  a.handoff = subtract(a.cls.m_set, {a.cls.chosen_emitter});
  a.connect_direct = subtract(sym_diff(a.cls.j_set, a.cls.m_set), {a.cls.chosen_emitter});
  return a;
}

}  // namespace

StepSets compute_sets(const PhysicalState& s, const Graph& target) {
  StepAnalysis a = analyze_step(s, target, Strategy::defaults(), false, 0);
  return StepSets{a.cls.j_set, a.cls.k_set, a.cls.m_set};
}

StepClassification classify_step(const PhysicalState& s, const Graph& target,
                                 const Strategy& strategy) {
  if (s.emitted == 0 || s.emitted >= target.n) {
    throw std::invalid_argument("classify_step: needs 1 <= emitted <= n-1");
  }
  return analyze_step(s, target, strategy, false, 0).cls;
}

ConditionReport check_conditions(const PhysicalState& s, const Graph& target) {
  return check_conditions(s, target, true);
}

ConditionReport check_conditions(const PhysicalState& s, const Graph& target,
                                 bool require_basis) {
  ConditionReport rep;
  std::size_t n = s.emitted;
  auto actives = s.active_emitters();

  // Tracked rows must be nonzero and span the remaining biadjacency row
  // space; in minimal mode they must also be independent (a basis). Every
  // active emitter must touch some photon.
  RowBasis rows(target.n);
  bool independent = true;
  for (std::size_t e : actives) {
    if (s.emitter_row[e].is_zero()) {
      independent = false;
      rep.detail = "active emitter " + std::to_string(e) + " has an empty row";
      break;
    }
    if (!rows.insert(s.emitter_row[e]) && require_basis) {
      independent = false;
      rep.detail = "emitter rows are linearly dependent";
      break;
    }
  }
  bool spans = true;
  if (independent) {
    for (std::size_t i = 0; i < n && spans; ++i) {
      if (!rows.contains(future_row(target, i, n - 1))) {
        spans = false;
        rep.detail = "photon " + std::to_string(i) + "'s future row is outside the span";
      }
    }
    for (std::size_t e : actives) {
      if (s.photon_neighbors(e).empty()) {
        spans = false;
        rep.detail = "active emitter " + std::to_string(e) + " touches no photon";
        break;
      }
    }
  }
  rep.emitter_rows_ok = independent && spans;

  // Each emitted photon's future row must equal the XOR of the rows of the
  // emitters it touches.
  rep.row_expansion_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    BitVector sum(target.n);
    for (std::size_t v : s.graph.neighbors(i)) {
      if (s.is_emitter_node(v)) {
        sum ^= s.emitter_row[v - s.n_photons];
      }
    }
    if (!(sum == future_row(target, i, n - 1))) {
      rep.row_expansion_ok = false;
      if (rep.detail.empty()) {
        rep.detail = "photon " + std::to_string(i) + " disagrees with its row expansion";
      }
      break;
    }
  }

  // Emitted subgraph must equal the target's.
  std::vector<std::size_t> prefix(n);
  for (std::size_t i = 0; i < n; ++i) {
    prefix[i] = i;
  }
  rep.inside_match_ok = induced_subgraph(s.photonic_graph(), prefix) ==
                        induced_subgraph(target, prefix);
  if (!rep.inside_match_ok && rep.detail.empty()) {
    rep.detail = "emitted subgraph does not match the target";
  }
  return rep;
}

std::string ConditionReport::to_json_text() const {
  nlohmann::json j;
  j["emitter_rows_ok"] = emitter_rows_ok;
  j["row_expansion_ok"] = row_expansion_ok;
  j["inside_match_ok"] = inside_match_ok;
  j["pass"] = all();
  if (!detail.empty()) {
    j["detail"] = detail;
  }
  return j.dump(2);
}

namespace {

class GenerationRun {
 public:
  GenerationRun(const Graph& target, const std::vector<std::size_t>& order,
                const GeneratorOptions& opts)
      : opts_(opts), target_(relabeled(target, order)) {
    recipe_.n_photons = target.n;
    recipe_.target = target;
    recipe_.order = order;
    min_needed_ = min_emitters(target, order);
    std::size_t cap = std::max<std::size_t>(min_needed_ + opts.extra_emitters, 1);
    if (opts.allow_isolated) {
      ++cap;  // transient slot for isolated photons
    }
    state_ = PhysicalState::initial(target.n, cap);
  }

  Recipe run() {
    emit_first_photon();
    for (std::size_t n = 1; n < target_.n; ++n) {
      step(n);
    }
    sweep_exhausted_emitters(target_.n - 1);
    if (opts_.check_invariants && !state_.all_emitters_isolated()) {
      throw std::logic_error("generation ended with entangled emitters");
    }
    recipe_.emitters_used = state_.slots_used;
    return std::move(recipe_);
  }

 private:
  void push(const RecipeOp& op) {
    recipe_.ops.push_back(op);
    state_ = apply_recipe_op(std::move(state_), op);
  }

  void emit_first_photon() {
    BitVector row0 = future_row(target_, 0, 0);
    std::size_t e = state_.activate();
    push(RecipeOp::emit(e, 0, EmissionMode::SS, 0));
    if (row0.is_zero()) {
      // Isolated first node: cut the leaf edge again.
      require_isolated_allowed();
      push(RecipeOp::decouple(e, 0));
    } else {
      state_.emitter_row[e] = row0;
    }
    StepAnalysis base;
    base.cls.case_id = row0.is_zero() ? StepCase::Isolated : StepCase::A;
    after_step(base, e, 0);
  }

  void require_isolated_allowed() const {
    if (!opts_.allow_isolated) {
      throw std::invalid_argument(
          "target has an isolated node; rerun with isolated nodes enabled");
    }
  }

  void step(std::size_t n) {
    if (opts_.strategy.retarget) {
      Graph wanted = opts_.strategy.retarget(target_, n);
      if (!(wanted == target_)) {
        throw std::logic_error(
            "retarget hook returned a different graph; local-equivalence "
            "retargeting is an interface only in this build");
      }
    }
    std::size_t cap = min_needed_ + opts_.extra_emitters;
    std::size_t cur = state_.active_count();
    std::size_t budget = cur < cap ? cap - cur : 0;
    StepAnalysis a =
        analyze_step(state_, target_, opts_.strategy, opts_.extra_emitters > 0, budget);

    if (a.cls.case_id == StepCase::Isolated) {
      require_isolated_allowed();
      std::size_t e = state_.activate();
      push(RecipeOp::emit(e, n, EmissionMode::SS, n));
      push(RecipeOp::decouple(e, n));
      after_step(a, e, n);
      return;
    }

    std::size_t ei;
    if (a.new_emitter) {
      ei = state_.activate();
      a.cls.chosen_emitter = ei;
    } else {
      ei = a.cls.chosen_emitter;
    }

    // Hand the chosen emitter's duties over (dependent-row set, or the
    // covering set when the chosen emitter is being re-purposed).
    for (std::size_t x : a.handoff) {
      push(RecipeOp::e_to_inside(x, ei, n));
    }
    // Pick up the new photon's inside neighborhood.
    for (std::size_t k : a.cls.k_set) {
      if (k != ei) {
        push(RecipeOp::e_to_inside(ei, k, n));
      }
    }
    // Direct links for the photon's future-edge representatives.
    for (std::size_t j : a.connect_direct) {
      if (j != ei) {
        push(RecipeOp::edge_toggle(ei, j, n));
      }
    }

    push(RecipeOp::emit(ei, n, a.mode, n));

    if (a.sandwich) {
      for (std::size_t j : a.connect_direct) {
        if (j != ei) {
          push(RecipeOp::edge_toggle(ei, j, n));
        }
      }
      for (std::size_t k : a.cls.k_set) {
        if (k != ei) {
          push(RecipeOp::e_to_inside(ei, k, n));
        }
      }
    }

    // Row bookkeeping: drop the spent bit, then reassign if this step handed
    // the new row to an emitter.
    for (std::size_t e : state_.active_emitters()) {
      state_.emitter_row[e].set(n, false);
    }
    if (a.reassign_row) {
      state_.emitter_row[ei] = future_row(target_, n, n);
    }
    if (a.decouple_after) {
      push(RecipeOp::decouple(ei, n));
    }
    after_step(a, ei, n);
  }

  void after_step(StepAnalysis& a, std::size_t ei, std::size_t n) {
    sweep_exhausted_emitters(n);
    if (opts_.trace != nullptr) {
      a.cls.chosen_emitter = ei;
      a.cls.step = n;
      a.cls.active_after = state_.active_count();
      a.cls.rank_after = prefix_rank_at(n + 1);
      opts_.trace->push_back(a.cls);
    }
    if (opts_.check_invariants) {
      ConditionReport rep =
          check_conditions(state_, target_, opts_.extra_emitters == 0);
      if (!rep.all()) {
        throw std::logic_error("step " + std::to_string(n) +
                               " broke a structural invariant: " + rep.detail);
      }
      if (opts_.extra_emitters == 0 && !opts_.allow_isolated) {
        std::size_t expect = prefix_rank_at(n + 1);
        if (state_.active_count() != expect) {
          throw std::logic_error("active emitter count diverged from the rank bound");
        }
      }
    }
  }

  // Emitters whose remaining row is empty have nothing left to do.
  void sweep_exhausted_emitters(std::size_t n) {
    for (std::size_t e : state_.active_emitters()) {
      if (s_row_zero(e)) {
        push(RecipeOp::decouple(e, n));
      }
    }
  }

  bool s_row_zero(std::size_t e) const { return state_.emitter_row[e].is_zero(); }

  std::size_t prefix_rank_at(std::size_t n) {
    if (ranks_.empty()) {
      ranks_ = prefix_ranks(target_);
      ranks_.push_back(0);  // rank after all photons are out
    }
    return ranks_[n < ranks_.size() ? n : ranks_.size() - 1];
  }

  GeneratorOptions opts_;
  Graph target_;
  Recipe recipe_;
  PhysicalState state_;
  std::size_t min_needed_ = 0;
  std::vector<std::size_t> ranks_;
};

}  // namespace

Recipe generate(const Graph& target, const std::vector<std::size_t>& order,
                const GeneratorOptions& opts) {
  if (!is_permutation(order, target.n)) {
    throw std::invalid_argument("generate: order is not a permutation of the nodes");
  }
  if (target.n == 0) {
    throw std::invalid_argument("generate: empty target");
  }
  if (!opts.allow_isolated && !target.isolated_nodes().empty()) {
    throw std::invalid_argument(
        "target has isolated nodes; rerun with isolated nodes enabled");
  }
  GenerationRun run(target, order, opts);
  Recipe r = run.run();
  if (opts.simplify) {
    r = simplify(r);
  }
  return r;
}

}  // namespace gsc
