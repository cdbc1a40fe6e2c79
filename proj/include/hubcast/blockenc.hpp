// Copyright 2026 The hubcast developers
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

#ifndef HUBCAST_BLOCKENC_HPP_
#define HUBCAST_BLOCKENC_HPP_

// Linear-combination-of-unitaries block encoding of the N-node W-sharing
// unitary, scaled by 1/√N.  Register layout, ancillas first (so the encoded
// block is the top-left corner of the dense circuit matrix):
//
//   sel   qubits [0, n)          selector holding the branch index s < N
//   cnt   qubits [n, 2n)         round counter k
//   flags qubits 2n, 2n+1        three-way comparison of s vs k
//   sys   qubits [2n+2, 2n+2+N)  the N system qubits
//
// with n = ⌈log2 N⌉.  The circuit is
//
//   D · [ P · Q_k · P† · (counter += 1) ]_{k=0…N−1} · D†
//
// where D prepares (1/√N)·Σ_{s<N}|s⟩ on sel, P compares sel against cnt into
// the flags, and Q_k applies to system qubit k: X if s = k, nothing if s < k,
// Z if s > k.  Each branch s therefore applies Z…ZXI…I (X at position s) —
// one term of the W-sharing unitary's defining Pauli sum — and undoing D
// interferes the branches into ⟨0|·|0⟩-block = (1/√N)·Σ_s Z^s X I^….
//
// Q_k uses two controlled gates: an X on sys_k that fires unless the "s<k"
// flag is set, then a Ry(−π) (= the matrix [[0,1],[−1,0]], i.e. Z·X) on
// sys_k that fires when the "s>k" flag is set, net effect (Z·X)·X = Z there.
// The final round's counter update is a plain X-reset from N−1 back to 0,
// keeping every ancilla clean.

#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "hubcast/circuits.hpp"
#include "hubcast/common.hpp"
#include "hubcast/protocols.hpp"
#include "hubcast/statevec.hpp"

namespace hubcast {

/// Checkable summary of one block encoding: the extracted ⟨0_anc|·|0_anc⟩
/// block's distance from the scaled target and its full singular spectrum
/// (expected flat at 1/√N, since the target is unitary).
struct BlockEncodingCertificate {
  int n_system = 0;
  int n_ancilla = 0;
  double subnormalization = 0.0;    // largest singular value of the block
  double max_block_deviation = 0.0; // vs (1/√N) × the W-sharing unitary
  std::vector<double> singular_values;
};

struct BlockEncodingResult {
  Circuit circuit;
  BlockEncodingCertificate certificate;
};

namespace detail {

/// Dense top-left 2^N × 2^N block of the circuit's unitary, computed by
/// streaming the 2^N relevant columns through the simulator (the full dense
/// matrix would be 4^(2n+2+N) entries — never materialized).
inline Matrix extract_zero_ancilla_block(const Circuit& c, int n_system) {
  const std::uint64_t block_dim = std::uint64_t{1} << n_system;
  Matrix block(block_dim, block_dim);
  for (std::uint64_t j = 0; j < block_dim; ++j) {
    // Ancillas sit above the system qubits, so |0_anc⟩|j⟩ is global index j.
    const auto out = apply_circuit(make_basis_state(c.num_qubits, j), c);
    for (std::uint64_t t = 0; t < block_dim; ++t) block.at(t, j) = out.amplitude(t);
  }
  return block;
}

inline std::vector<double> singular_values_of(const Matrix& m) {
  Eigen::MatrixXcd em(m.rows, m.cols);
  for (std::uint64_t r = 0; r < m.rows; ++r)
    for (std::uint64_t col = 0; col < m.cols; ++col) em(r, col) = m.at(r, col);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(em);
  std::vector<double> out(svd.singularValues().data(),
                          svd.singularValues().data() +
                              svd.singularValues().size());
  return out;
}

}  // namespace detail

/// Builds the block-encoding circuit for `n_end` nodes and certifies it.
/// Supported range 2…6: the register grows as 2⌈log2 N⌉ + 2 + N qubits and
/// verification streams 2^N full-register columns.
inline BlockEncodingResult lcu_block_encoding(int n_end) {
  if (n_end < 2 || n_end > 6)
    throw argument_error("block encoding supports 2 to 6 nodes");
  const int nn = n_end;
  const int n = detail::ceil_log2(nn);
  const int f1 = 2 * n, f2 = 2 * n + 1;
  const int sys0 = 2 * n + 2;
  const int total = sys0 + nn;

  Circuit c(total, "blockenc_w" + std::to_string(nn));
  c.registers = {{"sel", 0, n},
                 {"cnt", n, n},
                 {"flags", 2 * n, 2},
                 {"sys", sys0, nn}};

  const Circuit prep = uniform_prep_circuit(static_cast<std::uint64_t>(nn));
  const Circuit comparator = comparator_circuit(n);

  for (const auto& g : prep.ops) c.add(g);
  for (int k = 0; k < nn; ++k) {
    for (const auto& g : comparator.ops) c.add(g);
    c.add(GateOp::x(sys0 + k).controlled_on(f2, false));
    c.add(GateOp::ry(-std::acos(-1.0), sys0 + k).controlled_on(f1, true));
    for (auto it = comparator.ops.rbegin(); it != comparator.ops.rend(); ++it)
      c.add(it->inverse());
    if (k < nn - 1) {
      for (auto& g : increment_gates(n, n)) c.add(std::move(g));
    } else {
      // Counter holds N−1; return it to 0 bit by bit.
      for (int j = 0; j < n; ++j)
        if ((nn - 1) >> (n - 1 - j) & 1) c.add(GateOp::x(n + j));
    }
  }
  const Circuit unprep = adjoint_circuit(prep);
  for (const auto& g : unprep.ops) c.add(g);

  BlockEncodingResult res;
  res.certificate.n_system = nn;
  res.certificate.n_ancilla = sys0;

  const Matrix block = detail::extract_zero_ancilla_block(c, nn);
  const Matrix target =
      (1.0 / std::sqrt(static_cast<double>(nn))) * build_w_unitary(nn);
  res.certificate.max_block_deviation = max_abs_diff(block, target);
  res.certificate.singular_values = detail::singular_values_of(block);
  res.certificate.subnormalization =
      res.certificate.singular_values.empty()
          ? 0.0
          : res.certificate.singular_values.front();
  res.circuit = std::move(c);
  return res;
}

}  // namespace hubcast

#endif  // HUBCAST_BLOCKENC_HPP_
