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

#include "gsc/tableau.hpp"

#include <stdexcept>

namespace gsc {

StabilizerTableau::StabilizerTableau(std::size_t n)
    : n_(n),
      x_(2 * n + 1, BitVector(n)),
      z_(2 * n + 1, BitVector(n)),
      r_(2 * n + 1, false) {
  for (std::size_t i = 0; i < n; ++i) {
    x_[i].set(i, true);       // destabilizer X_i
    z_[n + i].set(i, true);   // stabilizer Z_i
  }
}

void StabilizerTableau::apply_h(std::size_t q) {
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    bool xq = x_[i].get(q);
    bool zq = z_[i].get(q);
    if (xq && zq) {
      r_[i] = !r_[i];
    }
    x_[i].set(q, zq);
    z_[i].set(q, xq);
  }
}

void StabilizerTableau::apply_phase(std::size_t q) {
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    bool xq = x_[i].get(q);
    bool zq = z_[i].get(q);
    if (xq && zq) {
      r_[i] = !r_[i];
    }
    z_[i].set(q, zq ^ xq);
  }
}

void StabilizerTableau::apply_sqrt_x_dag(std::size_t q) {
  // Exact action of sqrt(-iX): X -> X, Z -> -Y. Composed as H, S, H.
  apply_h(q);
  apply_phase(q);
  apply_h(q);
}

void StabilizerTableau::apply_x(std::size_t q) {
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    if (z_[i].get(q)) {
      r_[i] = !r_[i];
    }
  }
}

void StabilizerTableau::apply_z(std::size_t q) {
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    if (x_[i].get(q)) {
      r_[i] = !r_[i];
    }
  }
}

void StabilizerTableau::apply_cnot(std::size_t c, std::size_t t) {
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    bool xc = x_[i].get(c);
    bool zc = z_[i].get(c);
    bool xt = x_[i].get(t);
    bool zt = z_[i].get(t);
    if (xc && zt && (xt == zc)) {
      r_[i] = !r_[i];
    }
    x_[i].set(t, xt ^ xc);
    z_[i].set(c, zc ^ zt);
  }
}

void StabilizerTableau::apply_cz(std::size_t a, std::size_t b) {
  apply_h(b);
  apply_cnot(a, b);
  apply_h(b);
}

void StabilizerTableau::rowsum(std::size_t h, std::size_t i) {
  // Aaronson-Gottesman phase accumulation: g in {-1, 0, 1} per qubit,
  // summed mod 4 with the two sign bits. The total is even whenever row h
  // commutes with row i; destabilizer rows may not, and their phase is
  // never read.
  int acc = (r_[h] ? 2 : 0) + (r_[i] ? 2 : 0);
  for (std::size_t q = 0; q < n_; ++q) {
    int x1 = x_[i].get(q), z1 = z_[i].get(q);
    int x2 = x_[h].get(q), z2 = z_[h].get(q);
    if (x1 == 0 && z1 == 0) {
      continue;
    }
    if (x1 == 1 && z1 == 1) {
      acc += z2 - x2;
    } else if (x1 == 1) {
      acc += z2 * (2 * x2 - 1);
    } else {
      acc += x2 * (1 - 2 * z2);
    }
  }
  acc %= 4;
  if (acc < 0) {
    acc += 4;
  }
  if (h >= n_ && acc != 0 && acc != 2) {
    throw std::logic_error("rowsum: anticommuting stabilizer rows");
  }
  r_[h] = acc == 2 || acc == 3;
  x_[h] ^= x_[i];
  z_[h] ^= z_[i];
}

int StabilizerTableau::measure_z(std::size_t q, OutcomeContext& ctx) {
  std::size_t p = 2 * n_;
  for (std::size_t i = n_; i < 2 * n_; ++i) {
    if (x_[i].get(q)) {
      p = i;
      break;
    }
  }
  if (p < 2 * n_) {
    // Random outcome.
    int outcome = 0;
    if (ctx.mode == OutcomeMode::SeededRandom) {
      outcome = static_cast<int>(ctx.rng() & 1u);
    }
    for (std::size_t i = 0; i < 2 * n_; ++i) {
      if (i != p && x_[i].get(q)) {
        rowsum(i, p);
      }
    }
    x_[p - n_] = x_[p];
    z_[p - n_] = z_[p];
    r_[p - n_] = r_[p];
    x_[p].clear();
    z_[p].clear();
    z_[p].set(q, true);
    r_[p] = outcome == 1;
    ctx.outcomes.push_back(outcome);
    return outcome;
  }
  // Determined outcome: accumulate into the scratch row.
  x_[2 * n_].clear();
  z_[2 * n_].clear();
  r_[2 * n_] = false;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x_[i].get(q)) {
      rowsum(2 * n_, i + n_);
    }
  }
  int outcome = r_[2 * n_] ? 1 : 0;
  ctx.outcomes.push_back(outcome);
  return outcome;
}

void StabilizerTableau::apply(const GateOp& g, OutcomeContext& ctx) {
  switch (g.kind) {
    case GateKind::H:
      apply_h(g.q0);
      break;
    case GateKind::Phase:
      apply_phase(g.q0);
      break;
    case GateKind::SqrtXDag:
      apply_sqrt_x_dag(g.q0);
      break;
    case GateKind::X:
      apply_x(g.q0);
      break;
    case GateKind::Z:
      apply_z(g.q0);
      break;
    case GateKind::CZ:
      apply_cz(g.q0, g.q1);
      break;
    case GateKind::CNOT:
      apply_cnot(g.q0, g.q1);
      break;
    case GateKind::MeasureZ:
      measure_z(g.q0, ctx);
      break;
  }
}

std::string StabilizerTableau::stabilizer_string(std::size_t row) const {
  std::string s = stab_sign(row) ? "-" : "+";
  for (std::size_t q = 0; q < n_; ++q) {
    bool x = stab_x(row, q);
    bool z = stab_z(row, q);
    s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return s;
}

std::vector<std::string> StabilizerTableau::stabilizer_strings() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n_; ++i) {
    out.push_back(stabilizer_string(i));
  }
  return out;
}

StabilizerTableau simulate(const GateCircuit& c, OutcomeContext& ctx) {
  StabilizerTableau t(c.n_wires());
  for (const auto& g : c.gates) {
    if (g.q0 >= c.n_wires() || ((g.kind == GateKind::CZ || g.kind == GateKind::CNOT) &&
                                (g.q1 >= c.n_wires() || g.q1 == g.q0))) {
      throw std::invalid_argument("simulate: gate on unknown wire");
    }
    t.apply(g, ctx);
  }
  return t;
}

StabilizerTableau simulate_forced_zero(const GateCircuit& c) {
  OutcomeContext ctx;
  return simulate(c, ctx);
}

StabilizerTableau graph_state_tableau(const Graph& g) {
  StabilizerTableau t(g.n);
  OutcomeContext ctx;
  for (std::size_t i = 0; i < g.n; ++i) {
    t.apply_h(i);
  }
  for (auto [u, v] : g.edges()) {
    t.apply_cz(u, v);
  }
  return t;
}

}  // namespace gsc
