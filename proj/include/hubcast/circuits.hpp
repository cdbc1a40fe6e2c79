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

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hubcast/statevec.hpp"

namespace hubcast {

/// Named slice of a circuit's qubit line-up (purely informational).
struct RegisterSpan {
  std::string name;
  int begin = 0;
  int count = 0;
};

/// Ordered gate list.  Ops apply left to right; the dense matrix of the
/// circuit is therefore ops.back() ∘ ... ∘ ops.front().
struct Circuit {
  int num_qubits = 0;
  std::string name;
  std::vector<GateOp> ops;
  std::vector<RegisterSpan> registers;

  Circuit() = default;
  Circuit(int n, std::string name_) : num_qubits(n), name(std::move(name_)) {}

  Circuit& add(GateOp g) {
    ops.push_back(std::move(g));
    return *this;
  }
};

inline void apply_circuit_inplace(std::vector<cplx>& amps, int n,
                                  const Circuit& c) {
  if (c.num_qubits > n)
    throw argument_error("circuit does not fit the register");
  for (const auto& g : c.ops) detail::apply_gate_inplace(amps, n, g);
}

inline Statevector apply_circuit(const Statevector& s, const Circuit& c) {
  std::vector<cplx> a = s.amplitudes();
  apply_circuit_inplace(a, s.num_qubits(), c);
  return Statevector::from_amplitudes(s.num_qubits(), std::move(a));
}

/// Adjoint circuit: ops reversed and individually inverted.
inline Circuit adjoint_circuit(const Circuit& c) {
  Circuit out(c.num_qubits, c.name.empty() ? "" : c.name + "_dag");
  out.registers = c.registers;
  for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it)
    out.add(it->inverse());
  return out;
}

/// Dense unitary of the whole circuit.  Column-by-column application, so the
/// cost is ops × 4^n; guarded at 14 qubits (the dense matrix itself is the
/// limit — bulk verification streams columns instead of calling this).
inline Matrix circuit_to_matrix(const Circuit& c) {
  if (c.num_qubits < 1) throw argument_error("circuit has no qubits");
  if (c.num_qubits > 14)
    throw resource_error("dense circuit matrix limited to 14 qubits");
  const std::uint64_t dim = std::uint64_t{1} << c.num_qubits;
  Matrix m(dim, dim);
  std::vector<cplx> col(dim);
  for (std::uint64_t j = 0; j < dim; ++j) {
    std::fill(col.begin(), col.end(), cplx{});
    col[j] = 1.0;
    apply_circuit_inplace(col, c.num_qubits, c);
    for (std::uint64_t i = 0; i < dim; ++i) m.at(i, j) = col[i];
  }
  return m;
}

/// max_ij |A_ij − e^{iθ}B_ij| with θ read off the largest entry of B.  That
/// choice of θ is optimal whenever A really is a phase multiple of B, which
/// is the only regime the equivalence tests care about.
inline double max_abs_diff_up_to_phase(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw argument_error("matrix diff: shape mismatch");
  std::size_t best = 0;
  double mag = -1.0;
  for (std::size_t i = 0; i < b.a.size(); ++i)
    if (std::abs(b.a[i]) > mag) {
      mag = std::abs(b.a[i]);
      best = i;
    }
  cplx phase = 1.0;
  if (mag > 1e-15 && std::abs(a.a[best]) > 1e-15)
    phase = (a.a[best] / b.a[best]) / std::abs(a.a[best] / b.a[best]);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.a.size(); ++i)
    worst = std::max(worst, std::abs(a.a[i] - phase * b.a[i]));
  return worst;
}

// ----- W state construction ---------------------------------------------------

/// Rotation parameter splitting one excitation across n slots: the top qubit
/// carries amplitude √(1/n) for "the excitation sits here" against
/// √((n−1)/n) for "it sits below".
inline double w_split_param(int n) {
  return std::sqrt((n - 1.0) / static_cast<double>(n));
}

namespace detail {

using ControlCtx = std::vector<std::pair<int, bool>>;

inline GateOp with_ctx(GateOp g, const ControlCtx& ctx) {
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
    g = g.controlled_on(it->first, it->second);
  return g;
}

/// Emits the n-qubit W block on `qs` under accumulated controls `ctx`:
///   n = 1  →  X
///   n ≥ 2  →  [block on qs[1:] controlled qs[0]=1] · R(√((n−1)/n)) on qs[0]
///             · [block on qs[1:] controlled qs[0]=0]
/// The sub-blocks commute with the analysis because the (n−1)-qubit block is
/// real, symmetric and unitary, hence an involution — that is what makes the
/// three-piece split exact rather than approximate.
inline void emit_w_block(Circuit& c, const std::vector<int>& qs,
                         const ControlCtx& ctx) {
  if (qs.size() == 1) {
    c.add(with_ctx(GateOp::x(qs[0]), ctx));
    return;
  }
  const int n = static_cast<int>(qs.size());
  const std::vector<int> rest(qs.begin() + 1, qs.end());
  ControlCtx on = ctx, off = ctx;
  on.emplace_back(qs[0], true);
  off.emplace_back(qs[0], false);
  emit_w_block(c, rest, on);
  c.add(with_ctx(GateOp::r(w_split_param(n), qs[0]), ctx));
  emit_w_block(c, rest, off);
}

}  // namespace detail

/// Recursive ladder preparing the n-node W unitary: 2^n − 1 gates, every one
/// an (anti-)controlled X or R rotation.  Its dense matrix coincides with the
/// defining superposition-of-Paulis unitary exactly (not merely up to phase).
inline Circuit w_circuit_recursive(int n) {
  if (n < 2) throw argument_error("W circuit needs at least 2 qubits");
  Circuit c(n, "w_recursive_n" + std::to_string(n));
  std::vector<int> qs(n);
  for (int i = 0; i < n; ++i) qs[i] = i;
  detail::emit_w_block(c, qs, {});
  return c;
}

/// The fixed 7-gate, 3-qubit ladder (4 doubly-controlled X, 2 singly
/// controlled R, 1 plain R), written out literally as an independent
/// cross-check of the recursive builder.
inline Circuit w_circuit_n3_ladder() {
  const double rhalf = std::sqrt(0.5);
  Circuit c(3, "w_ladder_n3");
  auto ccx = [](bool v0, bool v1) {
    return GateOp::x(2).controlled_on(1, v1).controlled_on(0, v0);
  };
  c.add(ccx(true, true));
  c.add(GateOp::r(rhalf, 1).controlled_on(0, true));
  c.add(ccx(true, false));
  c.add(GateOp::r(w_split_param(3), 0));
  c.add(ccx(false, true));
  c.add(GateOp::r(rhalf, 1).controlled_on(0, false));
  c.add(ccx(false, false));
  return c;
}

// ----- GHZ construction -------------------------------------------------------

/// Fan-out form of the GHZ central unitary: CX(q0→qk) for k = 1…n−1, then H
/// on q0.  Equal to (H⊗I^{n−1})·C(X^{⊗(n−1)}) gate for gate, since the CXs
/// share their control and commute.
inline Circuit ghz_circuit(int n) {
  if (n < 2) throw argument_error("GHZ circuit needs at least 2 qubits");
  Circuit c(n, "ghz_n" + std::to_string(n));
  for (int k = 1; k < n; ++k) c.add(GateOp::cx(0, k));
  c.add(GateOp::h(0));
  return c;
}

// ----- comparator -------------------------------------------------------------

/// Three-way comparator P on registers |a⟩|b⟩|f1 f2⟩ (flags last):
///   a = b → flags unchanged; a > b → f1 ^= 1; a < b → f2 ^= 1.
/// On the |00⟩ flag input this is exactly
///   |a⟩|b⟩(δ_{a=b}|00⟩ + δ_{a<b}|01⟩ + δ_{a>b}|10⟩).
/// Realized as a multiplexor: one multi-controlled X per ordered pair
/// (a,b), firing on disjoint subspaces, so the circuit is self-inverse and
/// needs no scratch qubits.  Gate count grows as 4^n_bits, which is fine for
/// the supported operand widths (≤ 4).
inline Circuit comparator_circuit(int n_bits) {
  if (n_bits < 1) throw argument_error("comparator needs at least 1 bit");
  if (n_bits > 6) throw resource_error("comparator limited to 6-bit operands");
  const int total = 2 * n_bits + 2;
  Circuit c(total, "comparator_" + std::to_string(n_bits) + "b");
  c.registers = {{"a", 0, n_bits},
                 {"b", n_bits, n_bits},
                 {"flags", 2 * n_bits, 2}};
  const int f1 = 2 * n_bits, f2 = 2 * n_bits + 1;
  const std::uint64_t vals = std::uint64_t{1} << n_bits;
  for (std::uint64_t a = 0; a < vals; ++a) {
    for (std::uint64_t b = 0; b < vals; ++b) {
      if (a == b) continue;
      GateOp g = GateOp::x(a > b ? f1 : f2);
      for (int j = 0; j < n_bits; ++j) {
        const bool abit = (a >> (n_bits - 1 - j)) & 1u;
        const bool bbit = (b >> (n_bits - 1 - j)) & 1u;
        g = g.controlled_on(n_bits + j, bbit);
        g = g.controlled_on(j, abit);
      }
      c.add(std::move(g));
    }
  }
  return c;
}

// ----- uniform superposition preparation ---------------------------------------

namespace detail {

/// Prepares (1/√m)·Σ_{v<m}|v⟩ on `qs` (all starting in |0⟩) under `ctx`.
inline void emit_uniform_prep(Circuit& c, const std::vector<int>& qs,
                              std::uint64_t m, const ControlCtx& ctx) {
  if (m == 1 || qs.empty()) return;
  const std::uint64_t full = std::uint64_t{1} << qs.size();
  if (m > full) throw argument_error("uniform prep: range exceeds register");
  if (m == full) {
    for (int q : qs) c.add(with_ctx(GateOp::h(q), ctx));
    return;
  }
  const std::vector<int> rest(qs.begin() + 1, qs.end());
  const std::uint64_t half = full >> 1;
  if (m <= half) {
    emit_uniform_prep(c, rest, m, ctx);  // top qubit stays |0⟩
    return;
  }
  // Split weight half/m vs (m−half)/m on the top qubit, then recurse.
  const double theta = 2.0 * std::acos(std::sqrt(double(half) / double(m)));
  c.add(with_ctx(GateOp::ry(theta, qs[0]), ctx));
  ControlCtx off = ctx, on = ctx;
  off.emplace_back(qs[0], false);
  on.emplace_back(qs[0], true);
  for (int q : rest) c.add(with_ctx(GateOp::h(q), off));
  emit_uniform_prep(c, rest, m - half, on);
}

}  // namespace detail

/// Exact preparation of the uniform superposition over {0,…,count−1} on
/// ⌈log2 count⌉ qubits (a network of controlled Ry and H gates).
inline Circuit uniform_prep_circuit(std::uint64_t count) {
  if (count < 2) throw argument_error("uniform prep needs count >= 2");
  int n = 0;
  while ((std::uint64_t{1} << n) < count) ++n;
  Circuit c(n, "uniform_prep_" + std::to_string(count));
  std::vector<int> qs(n);
  for (int i = 0; i < n; ++i) qs[i] = i;
  detail::emit_uniform_prep(c, qs, count, {});
  return c;
}

/// Reversible +1 (mod 2^width) on `width` counter qubits starting at
/// `begin`: a ripple of multi-controlled X gates, most significant target
/// first.
inline std::vector<GateOp> increment_gates(int begin, int width) {
  std::vector<GateOp> out;
  for (int j = 0; j < width; ++j) {
    GateOp g = GateOp::x(begin + j);
    for (int k = width - 1; k > j; --k) g = g.controlled_on(begin + k, true);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace hubcast
