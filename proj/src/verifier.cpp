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

#include "gsc/verifier.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "json.hpp"

namespace gsc {

namespace {

// A Pauli row over w wires in symplectic form plus a quarter-phase. Products
// track the exact power of i so generator signs come out right.
struct PauliRow {
  BitVector x;
  BitVector z;
  int phase = 0;  // power of i mod 4; valid rows end with 0 or 2

  static PauliRow identity(std::size_t w) { return PauliRow{BitVector(w), BitVector(w), 0}; }

  void mul(const PauliRow& o) {
    // Accumulates the power of i arising per qubit in (this) * (o):
    // XY=iZ, YZ=iX, ZX=iY, and the reversed orders pick up -i.
    static const int tbl[4][4] = {
        // indexed by x + 2z: 0=I, 1=X, 2=Z, 3=Y
        {0, 0, 0, 0},
        {0, 0, -1, 1},   // X*I, X*X, X*Z=-iY, X*Y=iZ
        {0, 1, 0, -1},   // Z*X=iY, Z*Z, Z*Y=-iX
        {0, -1, 1, 0},   // Y*X=-iZ, Y*Z=iX, Y*Y
    };
    for (std::size_t q = 0; q < x.size(); ++q) {
      int a = int(x.get(q)) + 2 * int(z.get(q));
      int b = int(o.x.get(q)) + 2 * int(o.z.get(q));
      phase += tbl[a][b];
    }
    phase += o.phase;
    phase &= 3;
    x ^= o.x;
    z ^= o.z;
  }

  bool is_identity() const { return x.is_zero() && z.is_zero(); }
};

}  // namespace

VerifyResult check_graph_state(const StabilizerTableau& t, const Graph& target,
                               std::size_t n_emitters) {
  VerifyResult res;
  std::size_t w = t.n_qubits();
  std::size_t n_photons = target.n;
  if (w != n_emitters + n_photons) {
    res.diagnostic = "wire count mismatch";
    return res;
  }

  // Pull the stabilizer rows out with exact signs.
  std::vector<PauliRow> rows;
  rows.reserve(w);
  for (std::size_t i = 0; i < w; ++i) {
    PauliRow r = PauliRow::identity(w);
    for (std::size_t q = 0; q < w; ++q) {
      r.x.set(q, t.stab_x(i, q));
      r.z.set(q, t.stab_z(i, q));
    }
    r.phase = t.stab_sign(i) ? 2 : 0;
    rows.push_back(std::move(r));
  }

  // Eliminate emitter support: echelon over the emitter (x, z) columns
  // first, so rows without any emitter pivot generate the photon-only
  // subgroup.
  std::vector<PauliRow> basis;
  std::vector<std::size_t> pivots;  // symplectic column index
  auto column_bit = [&](const PauliRow& r, std::size_t col) {
    return col < w ? r.x.get(col) : r.z.get(col - w);
  };
  std::vector<std::size_t> emitter_cols;
  for (std::size_t e = 0; e < n_emitters; ++e) {
    emitter_cols.push_back(e);      // x part
    emitter_cols.push_back(w + e);  // z part
  }
  std::vector<PauliRow> photon_rows;
  for (auto& row : rows) {
    PauliRow cur = std::move(row);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (column_bit(cur, pivots[k])) {
        cur.mul(basis[k]);
      }
    }
    std::size_t pivot = 2 * w;
    for (std::size_t col : emitter_cols) {
      if (column_bit(cur, col)) {
        pivot = col;
        break;
      }
    }
    if (pivot != 2 * w) {
      pivots.push_back(pivot);
      basis.push_back(std::move(cur));
    } else if (!cur.is_identity()) {
      photon_rows.push_back(std::move(cur));
    }
  }

  // Photonic group: echelon with sign tracking over photon columns.
  std::vector<PauliRow> pbasis;
  std::vector<std::size_t> ppivots;
  for (auto& row : photon_rows) {
    PauliRow cur = std::move(row);
    for (std::size_t k = 0; k < pbasis.size(); ++k) {
      if (column_bit(cur, ppivots[k])) {
        cur.mul(pbasis[k]);
      }
    }
    std::size_t pivot = 2 * w;
    for (std::size_t p = 0; p < n_photons && pivot == 2 * w; ++p) {
      if (cur.x.get(n_emitters + p)) {
        pivot = n_emitters + p;
      }
    }
    for (std::size_t p = 0; p < n_photons && pivot == 2 * w; ++p) {
      if (cur.z.get(n_emitters + p)) {
        pivot = w + n_emitters + p;
      }
    }
    if (pivot != 2 * w) {
      ppivots.push_back(pivot);
      pbasis.push_back(std::move(cur));
    }
  }

  // An emitter-pivot row may still drag photon support that the photon-only
  // subgroup can clean off. If something survives the clean-up, that emitter
  // really is entangled with the photons.
  for (const auto& b : basis) {
    PauliRow cur = b;
    for (std::size_t k = 0; k < pbasis.size(); ++k) {
      if (column_bit(cur, ppivots[k])) {
        cur.mul(pbasis[k]);
      }
    }
    for (std::size_t p = 0; p < n_photons; ++p) {
      if (cur.x.get(n_emitters + p) || cur.z.get(n_emitters + p)) {
        res.diagnostic = "an emitter wire is still entangled with the photons";
        return res;
      }
    }
  }

  // Express every target generator X_i prod_j Z_j^(A_ij) over the photonic
  // basis; the leftover phase decides the Z correction on photon i.
  std::vector<std::size_t> corrections;
  for (std::size_t i = 0; i < n_photons; ++i) {
    PauliRow want = PauliRow::identity(w);
    want.x.set(n_emitters + i, true);
    for (std::size_t j : target.neighbors(i)) {
      want.z.set(n_emitters + j, true);
    }
    PauliRow cur = want;
    for (std::size_t k = 0; k < pbasis.size(); ++k) {
      if (column_bit(cur, ppivots[k])) {
        cur.mul(pbasis[k]);
      }
    }
    if (!(cur.x.is_zero() && cur.z.is_zero())) {
      res.diagnostic = "stabilizer group mismatch at photon " + std::to_string(i);
      return res;
    }
    // cur == want * element where element is the group member with want's
    // Pauli content, so element = i^phase * want and want^2 = I: phase 2
    // means the group holds -want and photon i needs a Z.
    int ph = cur.phase & 3;
    if (ph == 1 || ph == 3) {
      res.diagnostic = "imaginary phase at photon " + std::to_string(i);
      return res;
    }
    if (ph == 2) {
      corrections.push_back(i);
    }
  }

  res.pass = true;
  res.z_corrections = std::move(corrections);
  return res;
}

std::string VerifyResult::to_json_text() const {
  nlohmann::json j;
  j["pass"] = pass;
  auto corr = nlohmann::json::array();
  for (std::size_t p : z_corrections) {
    corr.push_back({{"gate", "Z"}, {"photon", p}});
  }
  j["corrections"] = corr;
  j["seed"] = seed;
  j["outcomes"] = outcomes;
  if (!diagnostic.empty()) {
    j["diagnostic"] = diagnostic;
  }
  return j.dump(2);
}

double bipartite_entropy_exact(const Graph& g, std::size_t n_inside) {
  if (g.n > 12) {
    throw std::invalid_argument("bipartite_entropy: dense oracle capped at 12 qubits");
  }
  if (n_inside > g.n) {
    throw std::invalid_argument("bipartite_entropy: bad partition");
  }
  std::size_t n = g.n;
  std::size_t dim = std::size_t(1) << n;
  // Graph-state amplitudes: 2^{-n/2} * (-1)^{#edges inside the bitstring}.
  Eigen::VectorXcd psi(dim);
  auto edges = g.edges();
  double norm = std::pow(2.0, -double(n) / 2.0);
  for (std::size_t s = 0; s < dim; ++s) {
    int sign = 0;
    for (auto [u, v] : edges) {
      sign ^= int(((s >> u) & 1) & ((s >> v) & 1));
    }
    psi(s) = sign ? -norm : norm;
  }
  // Trace out the larger side: entropies agree for a pure state. Kept qubits
  // are the prefix [0, n_inside) when that side is smaller, else the suffix.
  bool keep_prefix = n_inside <= n - n_inside;
  std::vector<std::size_t> kept, other;
  for (std::size_t q = 0; q < n; ++q) {
    if ((q < n_inside) == keep_prefix) {
      kept.push_back(q);
    } else {
      other.push_back(q);
    }
  }
  std::size_t da = std::size_t(1) << kept.size();
  std::size_t db = std::size_t(1) << other.size();
  auto index_of = [&](std::size_t a, std::size_t b) {
    std::size_t s = 0;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      s |= ((a >> k) & 1) << kept[k];
    }
    for (std::size_t k = 0; k < other.size(); ++k) {
      s |= ((b >> k) & 1) << other[k];
    }
    return s;
  };
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(da, da);
  for (std::size_t a1 = 0; a1 < da; ++a1) {
    for (std::size_t a2 = 0; a2 < da; ++a2) {
      std::complex<double> acc = 0.0;
      for (std::size_t b = 0; b < db; ++b) {
        acc += psi(index_of(a1, b)) * std::conj(psi(index_of(a2, b)));
      }
      rho(a1, a2) = acc;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    double lambda = solver.eigenvalues()(i);
    if (lambda > 1e-12) {
      entropy -= lambda * std::log2(lambda);
    }
  }
  return entropy;
}

std::size_t bipartite_entropy_oracle(const Graph& g, std::size_t n_inside) {
  double s = bipartite_entropy_exact(g, n_inside);
  double rounded = std::round(s);
  if (std::abs(s - rounded) > 1e-9) {
    throw std::logic_error("bipartite_entropy: non-integral graph-state entropy");
  }
  return static_cast<std::size_t>(rounded);
}

}  // namespace gsc
