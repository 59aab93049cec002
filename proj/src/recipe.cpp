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

#include "gsc/recipe.hpp"

#include <stdexcept>

#include "json.hpp"

namespace gsc {

RecipeOp RecipeOp::edge_toggle(std::size_t ea, std::size_t eb, std::size_t step) {
  return RecipeOp{OpKind::EdgeToggle, ea, eb, EmissionMode::SS, LocalGate::H, step};
}

RecipeOp RecipeOp::e_to_inside(std::size_t src, std::size_t tgt, std::size_t step) {
  return RecipeOp{OpKind::EToInside, src, tgt, EmissionMode::SS, LocalGate::H, step};
}

RecipeOp RecipeOp::e_to_inside_connect(std::size_t src, std::size_t tgt, std::size_t step) {
  return RecipeOp{OpKind::EToInsideConnect, src, tgt, EmissionMode::SS, LocalGate::H, step};
}

RecipeOp RecipeOp::emit(std::size_t emitter, std::size_t photon, EmissionMode mode,
                        std::size_t step) {
  return RecipeOp{OpKind::Emit, emitter, photon, mode, LocalGate::H, step};
}

RecipeOp RecipeOp::decouple(std::size_t emitter, std::size_t step) {
  return RecipeOp{OpKind::Decouple, emitter, 0, EmissionMode::SS, LocalGate::H, step};
}

RecipeOp RecipeOp::local_clifford(std::size_t node, LocalGate gate, std::size_t step) {
  return RecipeOp{OpKind::LocalClifford, node, 0, EmissionMode::SS, gate, step};
}

std::vector<std::size_t> RecipeOp::emitter_operands() const {
  switch (kind) {
    case OpKind::EdgeToggle:
    case OpKind::EToInside:
    case OpKind::EToInsideConnect:
      return {a, b};
    case OpKind::Emit:
    case OpKind::Decouple:
      return {a};
    case OpKind::LocalClifford:
      return {};
  }
  return {};
}

bool RecipeOp::touches_emitter(std::size_t e) const {
  for (std::size_t x : emitter_operands()) {
    if (x == e) {
      return true;
    }
  }
  return false;
}

std::string RecipeOp::to_string() const {
  switch (kind) {
    case OpKind::EdgeToggle:
      return "edge_toggle(e" + std::to_string(a) + ",e" + std::to_string(b) + ")";
    case OpKind::EToInside:
      return "e_to_inside(e" + std::to_string(a) + "->e" + std::to_string(b) + ")";
    case OpKind::EToInsideConnect:
      return "e_to_inside_connect(e" + std::to_string(a) + "->e" + std::to_string(b) + ")";
    case OpKind::Emit:
      return "emit(e" + std::to_string(a) + ",p" + std::to_string(b) + "," +
             emission_mode_name(mode) + ")";
    case OpKind::Decouple:
      return "decouple(e" + std::to_string(a) + ")";
    case OpKind::LocalClifford:
      return "local_clifford(" + std::to_string(a) + "," + local_gate_name(gate) + ")";
  }
  return "?";
}

std::size_t Recipe::two_qubit_count() const {
  std::size_t c = 0;
  for (const auto& op : ops) {
    if (op.is_two_emitter()) {
      ++c;
    }
  }
  return c;
}

std::string emission_mode_name(EmissionMode m) {
  switch (m) {
    case EmissionMode::L:
      return "L";
    case EmissionMode::SS:
      return "SS";
    case EmissionMode::S:
      return "S";
    case EmissionMode::CS:
      return "CS";
  }
  return "?";
}

EmissionMode emission_mode_from_name(const std::string& s) {
  if (s == "L") return EmissionMode::L;
  if (s == "SS") return EmissionMode::SS;
  if (s == "S") return EmissionMode::S;
  if (s == "CS") return EmissionMode::CS;
  throw std::invalid_argument("unknown emission mode: " + s);
}

std::string local_gate_name(LocalGate g) {
  switch (g) {
    case LocalGate::H:
      return "H";
    case LocalGate::Phase:
      return "P";
    case LocalGate::SqrtXDag:
      return "SXDG";
    case LocalGate::X:
      return "X";
    case LocalGate::Z:
      return "Z";
  }
  return "?";
}

LocalGate local_gate_from_name(const std::string& s) {
  if (s == "H") return LocalGate::H;
  if (s == "P") return LocalGate::Phase;
  if (s == "SXDG") return LocalGate::SqrtXDag;
  if (s == "X") return LocalGate::X;
  if (s == "Z") return LocalGate::Z;
  throw std::invalid_argument("unknown local gate: " + s);
}

namespace {

const char* op_name(OpKind k) {
  switch (k) {
    case OpKind::EdgeToggle:
      return "edge_toggle";
    case OpKind::EToInside:
      return "e_to_inside";
    case OpKind::EToInsideConnect:
      return "e_to_inside_connect";
    case OpKind::Emit:
      return "emit";
    case OpKind::Decouple:
      return "decouple";
    case OpKind::LocalClifford:
      return "local_clifford";
  }
  return "?";
}

OpKind op_from_name(const std::string& s) {
  if (s == "edge_toggle") return OpKind::EdgeToggle;
  if (s == "e_to_inside") return OpKind::EToInside;
  if (s == "e_to_inside_connect") return OpKind::EToInsideConnect;
  if (s == "emit") return OpKind::Emit;
  if (s == "decouple") return OpKind::Decouple;
  if (s == "local_clifford") return OpKind::LocalClifford;
  throw std::invalid_argument("unknown op: " + s);
}

}  // namespace

std::string recipe_to_json_text(const Recipe& r) {
  nlohmann::json j;
  j["version"] = 1;
  j["n_photons"] = r.n_photons;
  j["emitters_used"] = r.emitters_used;
  j["order"] = r.order;
  j["target"] = nlohmann::json::parse(graph_to_json_text(r.target));
  auto ops = nlohmann::json::array();
  for (const auto& op : r.ops) {
    nlohmann::json o;
    o["op"] = op_name(op.kind);
    switch (op.kind) {
      case OpKind::EdgeToggle:
      case OpKind::EToInside:
      case OpKind::EToInsideConnect:
      case OpKind::Emit:
        o["args"] = {op.a, op.b};
        break;
      case OpKind::Decouple:
      case OpKind::LocalClifford:
        o["args"] = {op.a};
        break;
    }
    if (op.kind == OpKind::Emit) {
      o["mode"] = emission_mode_name(op.mode);
    }
    if (op.kind == OpKind::LocalClifford) {
      o["gate"] = local_gate_name(op.gate);
    }
    o["step"] = op.step;
    ops.push_back(o);
  }
  j["ops"] = ops;
  return j.dump(2);
}

Recipe recipe_from_json_text(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Recipe r;
  r.n_photons = j.at("n_photons").get<std::size_t>();
  r.emitters_used = j.at("emitters_used").get<std::size_t>();
  r.order = j.at("order").get<std::vector<std::size_t>>();
  r.target = graph_from_json_text(j.at("target").dump());
  for (const auto& o : j.at("ops")) {
    RecipeOp op;
    op.kind = op_from_name(o.at("op").get<std::string>());
    auto args = o.at("args");
    op.a = args.at(0).get<std::size_t>();
    if (args.size() > 1) {
      op.b = args.at(1).get<std::size_t>();
    }
    if (o.contains("mode")) {
      op.mode = emission_mode_from_name(o.at("mode").get<std::string>());
    }
    if (o.contains("gate")) {
      op.gate = local_gate_from_name(o.at("gate").get<std::string>());
    }
    op.step = o.at("step").get<std::size_t>();
    r.ops.push_back(op);
  }
  return r;
}

}  // namespace gsc
