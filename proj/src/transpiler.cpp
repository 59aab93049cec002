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

#include "gsc/transpiler.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "gsc/physical_state.hpp"
#include "gsc/tableau.hpp"

namespace gsc {

namespace {

std::size_t emitter_capacity(const Recipe& r) {
  std::size_t cap = r.emitters_used;
  for (const auto& op : r.ops) {
    for (std::size_t e : op.emitter_operands()) {
      cap = std::max(cap, e + 1);
    }
  }
  return std::max<std::size_t>(cap, 1);
}

}  // namespace

GateCircuit transpile(const Recipe& r) {
  std::size_t cap = emitter_capacity(r);
  GateCircuit circuit;
  circuit.n_emitters = cap;
  circuit.n_photons = r.n_photons;

  PhysicalState state = PhysicalState::initial(r.n_photons, cap);
  std::vector<bool> needs_activation(cap, true);

  for (const auto& op : r.ops) {
    // A pooled or reset emitter wire sits in |0>; a Hadamard brings it into
    // the graph as an isolated node before its first gate.
    if (op.kind != OpKind::Decouple) {
      for (std::size_t e : op.emitter_operands()) {
        if (needs_activation[e]) {
          circuit.gates.push_back(GateOp{GateKind::H, e, 0});
          needs_activation[e] = false;
        }
      }
    }
    auto gates = gate_expansion(op, state, cap);
    circuit.gates.insert(circuit.gates.end(), gates.begin(), gates.end());
    if (op.kind == OpKind::Decouple) {
      needs_activation[op.a] = true;
    }
    state = apply_recipe_op(std::move(state), op);
  }

  // Sign-fixing pass: simulate what we have and append the Z corrections
  // that bring every stabilizer generator to +1.
  StabilizerTableau t = simulate_forced_zero(circuit);
  VerifyResult pre = check_graph_state(t, r.relabeled_target(), cap);
  if (!pre.pass) {
    throw std::runtime_error("transpile: recipe does not reach its target (" +
                             pre.diagnostic + ")");
  }
  for (std::size_t p : pre.z_corrections) {
    circuit.gates.push_back(GateOp{GateKind::Z, circuit.photon_wire(p), 0});
  }
  return circuit;
}

CostReport cost_report(const Recipe& r) {
  CostReport rep;
  rep.op_count = r.ops.size();
  std::size_t cap = emitter_capacity(r);
  std::vector<std::size_t> cur(cap, 0);
  std::vector<std::size_t> best(cap, 0);
  std::vector<bool> used(cap, false);
  for (const auto& op : r.ops) {
    if (op.is_two_emitter()) {
      ++rep.two_qubit_count;
      for (std::size_t e : op.emitter_operands()) {
        ++cur[e];
        best[e] = std::max(best[e], cur[e]);
        used[e] = true;
      }
    } else if (op.kind == OpKind::Decouple) {
      cur[op.a] = 0;
    } else if (op.kind == OpKind::Emit) {
      used[op.a] = true;
    }
  }
  for (std::size_t e = 0; e < cap; ++e) {
    if (used[e]) {
      rep.per_emitter_depth[e] = best[e];
    }
  }
  rep.emitters_used = r.emitters_used;
  if (rep.emitters_used == 0) {
    for (std::size_t e = 0; e < cap; ++e) {
      if (used[e]) {
        rep.emitters_used = e + 1;
      }
    }
  }
  return rep;
}

std::string CostReport::to_json_text() const {
  nlohmann::json j;
  j["two_qubit_count"] = two_qubit_count;
  j["emitters_used"] = emitters_used;
  j["op_count"] = op_count;
  nlohmann::json depth = nlohmann::json::object();
  for (const auto& [e, d] : per_emitter_depth) {
    depth["e" + std::to_string(e)] = d;
  }
  j["per_emitter_depth"] = depth;
  return j.dump(2);
}

VerifyResult verify_recipe(const Recipe& r, OutcomeMode mode, std::uint64_t seed) {
  GateCircuit c;
  try {
    c = transpile(r);
  } catch (const std::runtime_error& e) {
    VerifyResult res;
    res.diagnostic = e.what();
    return res;
  }
  return verify_circuit(c, r.relabeled_target(), mode, seed);
}

VerifyResult verify_circuit(const GateCircuit& c, const Graph& relabeled_target,
                            OutcomeMode mode, std::uint64_t seed) {
  OutcomeContext ctx =
      mode == OutcomeMode::ForcedZero ? OutcomeContext::forced_zero() : OutcomeContext::seeded(seed);
  StabilizerTableau t = simulate(c, ctx);
  VerifyResult res = check_graph_state(t, relabeled_target, c.n_emitters);
  res.outcomes = ctx.outcomes;
  res.seed = mode == OutcomeMode::ForcedZero ? 0 : seed;
  return res;
}

}  // namespace gsc
