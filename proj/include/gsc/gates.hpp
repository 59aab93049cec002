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
#include <vector>

#include "gsc/physical_state.hpp"
#include "gsc/recipe.hpp"

namespace gsc {

enum class GateKind { H, Phase, SqrtXDag, X, Z, CZ, CNOT, MeasureZ };

/// One Clifford gate on circuit wires. Wires are laid out emitters first:
/// emitter e is wire e, photon p is wire n_emitters + p.
struct GateOp {
  GateKind kind = GateKind::H;
  std::size_t q0 = 0;
  std::size_t q1 = 0;  // CZ/CNOT only (CNOT: q0 control, q1 target)
  bool operator==(const GateOp&) const = default;
};

struct GateCircuit {
  std::size_t n_emitters = 0;
  std::size_t n_photons = 0;
  std::vector<GateOp> gates;

  std::size_t n_wires() const { return n_emitters + n_photons; }
  std::size_t photon_wire(std::size_t p) const { return n_emitters + p; }
  std::string wire_name(std::size_t w) const;
  bool operator==(const GateCircuit&) const = default;
};

std::string gate_name(GateKind k);

/// One gate per line ("H e0", "CZ e0 e1", "CNOT e0 p4", "MZ e0") under a
/// header line "qubits E=<M> P=<N>".
std::string circuit_to_text(const GateCircuit& c);
GateCircuit circuit_from_text(std::istream& in);
GateCircuit circuit_from_text(const std::string& text);

/// Clifford gates realizing one recipe op, given the state it acts on. Gates
/// are returned on circuit wires for a layout with `n_emitters` emitter
/// wires. Local complementations expand to a sqrt-X-dagger on the node and a
/// phase gate on each neighbor, with neighborhoods tracked through the
/// intermediate graphs of the expansion.
std::vector<GateOp> gate_expansion(const RecipeOp& op, const PhysicalState& before,
                                   std::size_t n_emitters);

}  // namespace gsc
