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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hubcast/circuits.hpp"
#include "hubcast/statevec.hpp"

namespace hubcast {

// ----- target states ----------------------------------------------------------

/// W_n = (1/√n)(|10…0⟩ + |01…0⟩ + … + |0…01⟩).
inline Statevector make_w_state(int n) {
  if (n < 2) throw argument_error("W state needs at least 2 qubits");
  std::vector<cplx> a(std::uint64_t{1} << n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) a[qubit_mask(n, k)] = amp;
  return Statevector::from_amplitudes(n, std::move(a));
}

/// GHZ_n = (|0…0⟩ + |1…1⟩)/√2.
inline Statevector make_ghz_state(int n) {
  if (n < 2) throw argument_error("GHZ state needs at least 2 qubits");
  std::vector<cplx> a(std::uint64_t{1} << n);
  const double amp = 1.0 / std::sqrt(2.0);
  a[0] = amp;
  a[a.size() - 1] = amp;
  return Statevector::from_amplitudes(n, std::move(a));
}

// ----- the W central unitary ----------------------------------------------------

/// Sparse column s of the n-node W central unitary
///   U = (1/√n) Σ_{r=1}^{n} Z^{⊗(r−1)} ⊗ X ⊗ I^{⊗(n−r)}:
/// U|s⟩ has n entries, one per term — flip bit r−1 of s and pick up a sign
/// from the Z-parity of the bits above it.  Appends (index, value) pairs.
inline void w_unitary_column(
    int n, std::uint64_t s,
    std::vector<std::pair<std::uint64_t, double>>& out) {
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  int prefix_ones = 0;
  for (int q = 0; q < n; ++q) {  // q = r−1: X on qubit q, Z on qubits < q
    const double sign = (prefix_ones & 1) ? -1.0 : 1.0;
    out.emplace_back(s ^ qubit_mask(n, q), sign * amp);
    if (s & qubit_mask(n, q)) ++prefix_ones;
  }
}

/// Dense 2^n × 2^n matrix of the W central unitary (real and symmetric; an
/// involution).  Dense means 4^n entries — callers wanting structure checks
/// at larger n should use w_unitary_column instead.
inline Matrix build_w_unitary(int n) {
  if (n < 2) throw argument_error("W unitary needs n >= 2");
  if (n > 12) throw resource_error("dense W unitary limited to n <= 12");
  const std::uint64_t dim = std::uint64_t{1} << n;
  Matrix u(dim, dim);
  std::vector<std::pair<std::uint64_t, double>> col;
  for (std::uint64_t s = 0; s < dim; ++s) {
    col.clear();
    w_unitary_column(n, s, col);
    for (const auto& [i, v] : col) u.at(i, s) = v;
  }
  return u;
}

// ----- protocol descriptions ----------------------------------------------------

/// One-way allocation protocol as data: the central circuit, and the two
/// classical plans (messages and recoveries).  Recovery unitaries are keyed
/// by the per-node message α alone — locality of the recovery rule is
/// enforced structurally, not just tested.
struct AllocationProtocol {
  std::string kind;  // "w", "ghz" or "teleport"
  int n_end = 0;     // end nodes, one qubit each
  int n_central = 0; // measured central qubits (= message source bits)
  int central_memory_qubits = 0;
  Statevector target;
  std::vector<int> alphabet_sizes;  // per node; every value 1…size occurs
  std::string note;

  /// α_i for outcome `s_int` written into out[0…n_end); no allocation, hot
  /// path for full-outcome sweeps.
  std::function<void(std::uint64_t, int*)> alphas_raw;
  /// Recovery unitary for node i given its message α (1-based).
  std::function<Matrix(int, int)> recovery_for_alpha;
  /// Central circuit on n_central qubits (teleport: includes target prep).
  std::function<Circuit()> central_circuit_fn;

  std::vector<int> message_plan(const Outcome& s) const {
    check_outcome(s);
    std::vector<int> a(n_end);
    alphas_raw(s.as_integer, a.data());
    return a;
  }

  std::vector<Matrix> recovery_plan(const Outcome& s) const {
    const auto alphas = message_plan(s);
    std::vector<Matrix> out;
    out.reserve(alphas.size());
    for (int i = 0; i < n_end; ++i)
      out.push_back(recovery_for_alpha(i, alphas[i]));
    return out;
  }

  Circuit central_circuit() const { return central_circuit_fn(); }

 private:
  void check_outcome(const Outcome& s) const {
    if (static_cast<int>(s.bits.size()) != n_central)
      throw argument_error("outcome length does not match central register");
  }
};

namespace detail {

inline int ceil_log2(int v) {
  int bits = 0;
  while ((1 << bits) < v) ++bits;
  return bits;
}

/// Completes `first_column` (assumed normalized) to a unitary via
/// Gram-Schmidt against the standard basis; deterministic.
inline Matrix unitary_from_first_column(const std::vector<cplx>& first_column) {
  const std::size_t dim = first_column.size();
  std::vector<std::vector<cplx>> cols;
  cols.push_back(first_column);
  for (std::size_t j = 0; j < dim && cols.size() < dim; ++j) {
    std::vector<cplx> w(dim);
    w[j] = 1.0;
    for (const auto& c : cols) {
      cplx ip = 0.0;
      for (std::size_t i = 0; i < dim; ++i) ip += std::conj(c[i]) * w[i];
      for (std::size_t i = 0; i < dim; ++i) w[i] -= ip * c[i];
    }
    double nrm = 0.0;
    for (const auto& v : w) nrm += std::norm(v);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-6) continue;  // e_j is (nearly) in the span already
    for (auto& v : w) v /= nrm;
    cols.push_back(std::move(w));
  }
  if (cols.size() != dim)
    throw validation_error("unitary completion failed");
  Matrix u(dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) u.at(i, j) = cols[j][i];
  return u;
}

}  // namespace detail

// ----- the three protocols ------------------------------------------------------

/// W-state allocation: central unitary U_W, measured outcome s = s_1…s_n,
/// recoveries (XZ)^{s_1} ⊗ X^{s_2} ⊗ ⊗_{k≥3} Z^{κ_k}X^{s_k} with
/// κ_k = (s_2 + … + s_{k−1}) mod 2.  Message alphabet sizes are 2, 2, then 4
/// per node, so the classical cost is 2n−2 bits.
inline AllocationProtocol build_w_protocol(int n) {
  if (n < 2) throw argument_error("W protocol needs n >= 2");
  AllocationProtocol p;
  p.kind = "w";
  p.n_end = n;
  p.n_central = n;
  p.central_memory_qubits = n;
  p.target = make_w_state(n);
  p.alphabet_sizes.assign(n, 4);
  p.alphabet_sizes[0] = 2;
  p.alphabet_sizes[1] = 2;
  if (n == 2)
    p.note = "n=2 degenerate case: target is the Bell-like (|10>+|01>)/sqrt(2)";

  p.alphas_raw = [n](std::uint64_t s, int* out) {
    auto bit = [&](int k) -> int {  // s_k, 1-based node index
      return static_cast<int>((s >> (n - k)) & 1u);
    };
    out[0] = bit(1) + 1;
    out[1] = bit(2) + 1;
    int kappa = 0;
    for (int k = 3; k <= n; ++k) {
      kappa ^= bit(k - 1);  // accumulate s_2 … s_{k−1}
      out[k - 1] = 2 * kappa + bit(k) + 1;
    }
  };
  p.recovery_for_alpha = [](int node, int alpha) -> Matrix {
    if (node == 0) return alpha == 1 ? gates::i2() : gates::xz();
    if (node == 1) return alpha == 1 ? gates::i2() : gates::x();
    switch (alpha) {  // alpha − 1 = 2κ + s
      case 1: return gates::i2();
      case 2: return gates::x();
      case 3: return gates::z();
      case 4: return gates::zx();
    }
    throw argument_error("W recovery: alpha out of range");
  };
  p.central_circuit_fn = [n]() { return w_circuit_recursive(n); };
  return p;
}

/// GHZ allocation: central unitary (H ⊗ I^{⊗(n−1)})·C(X^{⊗(n−1)}), recovery
/// Z^{s_1} on node 1 and X^{s_k} elsewhere; n classical bits total.  The
/// verifier compares end states against U^T|s⟩ — this unitary is not
/// symmetric, so the transpose convention matters.
inline AllocationProtocol build_ghz_protocol(int n) {
  if (n < 2) throw argument_error("GHZ protocol needs n >= 2");
  AllocationProtocol p;
  p.kind = "ghz";
  p.n_end = n;
  p.n_central = n;
  p.central_memory_qubits = n;
  p.target = make_ghz_state(n);
  p.alphabet_sizes.assign(n, 2);

  p.alphas_raw = [n](std::uint64_t s, int* out) {
    for (int k = 1; k <= n; ++k)
      out[k - 1] = static_cast<int>((s >> (n - k)) & 1u) + 1;
  };
  p.recovery_for_alpha = [](int node, int alpha) -> Matrix {
    if (alpha == 1) return gates::i2();
    return node == 0 ? gates::z() : gates::x();
  };
  p.central_circuit_fn = [n]() { return ghz_circuit(n); };
  return p;
}

/// Teleportation baseline: the central system prepares `target` on n fresh
/// qubits and teleports qubit i through Bell pair (c_i, e_i).  The central
/// register is [c_1…c_n, p_1…p_n]; the outcome string therefore carries the
/// Bell-half bits b_i first and the prepared-qubit bits a_i second, and node
/// i recovers with X^{b_i}Z^{a_i}.  2n qubits of central memory, 2n bits.
inline AllocationProtocol build_teleport_protocol(int n,
                                                  const Statevector& target) {
  if (n < 1) throw argument_error("teleport protocol needs n >= 1");
  if (target.num_qubits() != n)
    throw argument_error("teleport target does not have n qubits");
  AllocationProtocol p;
  p.kind = "teleport";
  p.n_end = n;
  p.n_central = 2 * n;
  p.central_memory_qubits = 2 * n;
  p.target = target;
  p.alphabet_sizes.assign(n, 4);

  p.alphas_raw = [n](std::uint64_t s, int* out) {
    for (int i = 0; i < n; ++i) {
      const int b = static_cast<int>((s >> (2 * n - 1 - i)) & 1u);
      const int a = static_cast<int>((s >> (n - 1 - i)) & 1u);
      out[i] = 2 * a + b + 1;
    }
  };
  p.recovery_for_alpha = [](int, int alpha) -> Matrix {
    switch (alpha) {  // alpha − 1 = 2a + b, recovery X^b Z^a
      case 1: return gates::i2();
      case 2: return gates::x();
      case 3: return gates::z();
      case 4: return gates::xz();
    }
    throw argument_error("teleport recovery: alpha out of range");
  };
  p.central_circuit_fn = [n, target]() {
    if (n > 8)
      throw resource_error(
          "teleport central circuit materializes a dense prep unitary; "
          "n <= 8 only (outcome enumeration uses the measurement identity "
          "instead at larger n)");
    Circuit c(2 * n, "teleport_central_n" + std::to_string(n));
    c.registers = {{"bell_half", 0, n}, {"prep", n, n}};
    std::vector<int> prep_qubits(n);
    for (int i = 0; i < n; ++i) prep_qubits[i] = n + i;
    c.add(GateOp::unitary(
        detail::unitary_from_first_column(target.amplitudes()), prep_qubits));
    for (int i = 0; i < n; ++i) {
      c.add(GateOp::cx(n + i, i));  // prepared qubit controls the Bell half
      c.add(GateOp::h(n + i));
    }
    return c;
  };
  return p;
}

// ----- resource accounting -------------------------------------------------------

struct ResourceReport {
  std::string protocol;
  int n_end = 0;
  std::vector<int> bits_per_node;
  int total_bits = 0;
  int central_memory_qubits = 0;
  int end_memory_qubits = 0;
  // Filled by the execution verifier; negative = not measured yet.
  double min_fidelity_over_outcomes = -1.0;
  double max_prob_deviation = -1.0;
  std::string note;
};

/// Cost half of the report: per-node bit widths from a full scan of the
/// outcome space (⌈log2 max_s α_i(s)⌉), memory counts from the protocol.
/// Fidelity fields are left unset; the execution verifier fills them.
inline ResourceReport resource_report(const AllocationProtocol& p) {
  ResourceReport r;
  r.protocol = p.kind;
  r.n_end = p.n_end;
  r.central_memory_qubits = p.central_memory_qubits;
  r.end_memory_qubits = p.n_end;
  r.note = p.note;

  std::vector<int> max_alpha(p.n_end, 0);
  std::vector<int> buf(p.n_end);
  const std::uint64_t outcomes = std::uint64_t{1} << p.n_central;
  for (std::uint64_t s = 0; s < outcomes; ++s) {
    p.alphas_raw(s, buf.data());
    for (int i = 0; i < p.n_end; ++i)
      if (buf[i] > max_alpha[i]) max_alpha[i] = buf[i];
  }
  r.bits_per_node.resize(p.n_end);
  r.total_bits = 0;
  for (int i = 0; i < p.n_end; ++i) {
    r.bits_per_node[i] = detail::ceil_log2(max_alpha[i]);
    r.total_bits += r.bits_per_node[i];
  }
  return r;
}

}  // namespace hubcast
