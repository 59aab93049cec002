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

#include "gsc/gates.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace gsc {

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::H:
      return "H";
    case GateKind::Phase:
      return "P";
    case GateKind::SqrtXDag:
      return "SXDG";
    case GateKind::X:
      return "X";
    case GateKind::Z:
      return "Z";
    case GateKind::CZ:
      return "CZ";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::MeasureZ:
      return "MZ";
  }
  return "?";
}

std::string GateCircuit::wire_name(std::size_t w) const {
  if (w < n_emitters) {
    return "e" + std::to_string(w);
  }
  return "p" + std::to_string(w - n_emitters);
}

std::string circuit_to_text(const GateCircuit& c) {
  std::ostringstream out;
  out << "qubits E=" << c.n_emitters << " P=" << c.n_photons << "\n";
  for (const auto& g : c.gates) {
    out << gate_name(g.kind) << " " << c.wire_name(g.q0);
    if (g.kind == GateKind::CZ || g.kind == GateKind::CNOT) {
      out << " " << c.wire_name(g.q1);
    }
    out << "\n";
  }
  return out.str();
}

namespace {

GateKind gate_from_name(const std::string& s) {
  if (s == "H") return GateKind::H;
  if (s == "P") return GateKind::Phase;
  if (s == "SXDG") return GateKind::SqrtXDag;
  if (s == "X") return GateKind::X;
  if (s == "Z") return GateKind::Z;
  if (s == "CZ") return GateKind::CZ;
  if (s == "CNOT") return GateKind::CNOT;
  if (s == "MZ") return GateKind::MeasureZ;
  throw std::runtime_error("unknown gate: " + s);
}

std::size_t parse_wire(const std::string& tok, const GateCircuit& c) {
  if (tok.empty() || (tok[0] != 'e' && tok[0] != 'p')) {
    throw std::runtime_error("bad wire name: " + tok);
  }
  std::size_t idx = std::stoull(tok.substr(1));
  if (tok[0] == 'e') {
    if (idx >= c.n_emitters) {
      throw std::runtime_error("emitter wire out of range: " + tok);
    }
    return idx;
  }
  if (idx >= c.n_photons) {
    throw std::runtime_error("photon wire out of range: " + tok);
  }
  return c.n_emitters + idx;
}

}  // namespace

GateCircuit circuit_from_text(std::istream& in) {
  GateCircuit c;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) {
      continue;
    }
    if (!have_header) {
      if (tok != "qubits") {
        throw std::runtime_error("circuit text must start with a qubits header");
      }
      std::string e, p;
      ls >> e >> p;
      if (e.rfind("E=", 0) != 0 || p.rfind("P=", 0) != 0) {
        throw std::runtime_error("bad qubits header");
      }
      c.n_emitters = std::stoull(e.substr(2));
      c.n_photons = std::stoull(p.substr(2));
      have_header = true;
      continue;
    }
    GateOp g;
    g.kind = gate_from_name(tok);
    std::string w0;
    ls >> w0;
    g.q0 = parse_wire(w0, c);
    if (g.kind == GateKind::CZ || g.kind == GateKind::CNOT) {
      std::string w1;
      ls >> w1;
      g.q1 = parse_wire(w1, c);
    }
    c.gates.push_back(g);
  }
  if (!have_header) {
    throw std::runtime_error("empty circuit text");
  }
  return c;
}

GateCircuit circuit_from_text(const std::string& text) {
  std::istringstream in(text);
  return circuit_from_text(in);
}

namespace {

// Expansion works on a scratch copy of the graph so every local
// complementation sees the neighborhood produced by the preceding pieces.
struct Expander {
  Graph g;
  std::size_t n_photons;
  std::size_t n_emitters;
  std::vector<GateOp> out;

  std::size_t wire(std::size_t node) const {
    if (node < n_photons) {
      return n_emitters + node;  // photon
    }
    return node - n_photons;  // emitter
  }

  void lc(std::size_t node) {
    out.push_back(GateOp{GateKind::SqrtXDag, wire(node), 0});
    for (std::size_t v : g.neighbors(node)) {
      out.push_back(GateOp{GateKind::Phase, wire(v), 0});
    }
    g = local_complement(g, node);
  }

  void cz(std::size_t a, std::size_t b) {
    out.push_back(GateOp{GateKind::CZ, wire(a), wire(b)});
    g.toggle_edge(a, b);
  }

  void leaf_emission(std::size_t e, std::size_t p) {
    // Emission CNOT followed by a Hadamard on the photon: the photon joins
    // the graph as a leaf of its emitter.
    out.push_back(GateOp{GateKind::CNOT, wire(e), wire(p)});
    out.push_back(GateOp{GateKind::H, wire(p)});
    g.set_edge(e, p, true);
  }
};

}  // namespace

std::vector<GateOp> gate_expansion(const RecipeOp& op, const PhysicalState& before,
                                   std::size_t n_emitters) {
  Expander ex{before.graph, before.n_photons, n_emitters, {}};
  auto enode = [&](std::size_t e) { return before.emitter_node(e); };

  switch (op.kind) {
    case OpKind::EdgeToggle: {
      ex.cz(enode(op.a), enode(op.b));
      break;
    }
    case OpKind::EToInside: {
      std::size_t src = enode(op.a);
      std::size_t tgt = enode(op.b);
      // Sandwich: LC on a neighbor of tgt, LC on tgt, CZ, LC on tgt, LC on
      // the same neighbor. A target with no neighbor besides src makes the
      // op a graph no-op, so nothing is emitted.
      std::size_t helper = before.graph.n;
      for (std::size_t v : ex.g.neighbors(tgt)) {
        if (v != src) {
          helper = v;
          break;
        }
      }
      if (helper != before.graph.n) {
        ex.lc(helper);
        ex.lc(tgt);
        ex.cz(src, tgt);
        ex.lc(tgt);
        ex.lc(helper);
      }
      break;
    }
    case OpKind::EToInsideConnect: {
      std::size_t src = enode(op.a);
      std::size_t tgt = enode(op.b);
      ex.lc(tgt);
      ex.cz(src, tgt);
      ex.lc(tgt);
      break;
    }
    case OpKind::Emit: {
      std::size_t e = enode(op.a);
      std::size_t p = op.b;
      switch (op.mode) {
        case EmissionMode::SS:
          ex.leaf_emission(e, p);
          break;
        case EmissionMode::L:
          ex.out.push_back(GateOp{GateKind::CNOT, ex.wire(e), ex.wire(p)});
          ex.out.push_back(GateOp{GateKind::H, ex.wire(e)});
          break;
        case EmissionMode::CS:
          ex.lc(e);
          ex.leaf_emission(e, p);
          ex.lc(e);
          break;
        case EmissionMode::S: {
          auto nbrs = ex.g.neighbors(e);
          if (nbrs.empty()) {
            throw std::logic_error(
                "gate_expansion: S-mode emission from an isolated emitter has no "
                "local realization");
          }
          std::size_t helper = nbrs.front();
          ex.lc(helper);
          ex.lc(e);
          ex.leaf_emission(e, p);
          ex.lc(e);
          ex.lc(helper);
          break;
        }
      }
      break;
    }
    case OpKind::Decouple: {
      ex.out.push_back(GateOp{GateKind::MeasureZ, ex.wire(enode(op.a)), 0});
      break;
    }
    case OpKind::LocalClifford: {
      GateKind k = GateKind::H;
      switch (op.gate) {
        case LocalGate::H:
          k = GateKind::H;
          break;
        case LocalGate::Phase:
          k = GateKind::Phase;
          break;
        case LocalGate::SqrtXDag:
          k = GateKind::SqrtXDag;
          break;
        case LocalGate::X:
          k = GateKind::X;
          break;
        case LocalGate::Z:
          k = GateKind::Z;
          break;
      }
      ex.out.push_back(GateOp{k, ex.wire(op.a), 0});
      break;
    }
  }
  return ex.out;
}

}  // namespace gsc
