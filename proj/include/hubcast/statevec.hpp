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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hubcast/common.hpp"
#include "hubcast/matrix.hpp"

namespace hubcast {

// Qubit convention: big-endian.  Qubit 0 is the leftmost tensor factor, i.e.
// the most significant bit of the amplitude index, so |q0 q1 q2⟩ = |110⟩ is
// amplitude index 6 of a 3-qubit register.

/// Bit mask selecting qubit `q` inside an `n`-qubit index.
inline std::uint64_t qubit_mask(int n, int q) {
  return std::uint64_t{1} << (n - 1 - q);
}

/// One classical measurement record: the bit string in measured-qubit order
/// (bits[0] is the first qubit passed to the measurement call) plus its value
/// read as a big-endian integer.
struct Outcome {
  std::vector<std::uint8_t> bits;
  std::uint64_t as_integer = 0;

  static Outcome from_integer(int num_bits, std::uint64_t value) {
    Outcome o;
    o.bits.resize(num_bits);
    for (int j = 0; j < num_bits; ++j)
      o.bits[j] = static_cast<std::uint8_t>((value >> (num_bits - 1 - j)) & 1u);
    o.as_integer = value;
    return o;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
  }
};

// ----- gate description ------------------------------------------------------

enum class GateKind { kI, kX, kY, kZ, kH, kRy, kR, kUnitary };

inline const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::kI: return "i";
    case GateKind::kX: return "x";
    case GateKind::kY: return "y";
    case GateKind::kZ: return "z";
    case GateKind::kH: return "h";
    case GateKind::kRy: return "ry";
    case GateKind::kR: return "r";
    case GateKind::kUnitary: return "u";
  }
  return "?";
}

/// A single (optionally controlled) gate.  `targets` lists the qubits the base
/// matrix acts on, in the matrix's own big-endian order; `controls[i]` must be
/// in state `control_values[i]` (true = |1⟩, false = |0⟩) for the gate to
/// fire.  Named kinds are always single-target; kUnitary carries an explicit
/// 2^k × 2^k payload.
struct GateOp {
  GateKind kind = GateKind::kI;
  double param = 0.0;
  Matrix payload;
  std::vector<int> targets;
  std::vector<int> controls;
  std::vector<bool> control_values;

  static GateOp i(int t) { return named(GateKind::kI, t); }
  static GateOp x(int t) { return named(GateKind::kX, t); }
  static GateOp y(int t) { return named(GateKind::kY, t); }
  static GateOp z(int t) { return named(GateKind::kZ, t); }
  static GateOp h(int t) { return named(GateKind::kH, t); }

  static GateOp ry(double theta, int t) {
    GateOp g = named(GateKind::kRy, t);
    g.param = theta;
    return g;
  }

  /// R(x) = Ry(2 arccos x)·Z — the self-inverse rotation used throughout the
  /// state construction circuits.
  static GateOp r(double x_, int t) {
    GateOp g = named(GateKind::kR, t);
    g.param = x_;
    return g;
  }

  static GateOp cx(int control, int target) {
    return x(target).controlled_on(control, true);
  }

  static GateOp unitary(Matrix u, std::vector<int> targets_) {
    GateOp g;
    g.kind = GateKind::kUnitary;
    g.payload = std::move(u);
    g.targets = std::move(targets_);
    return g;
  }

  /// Copy of this op with one more control prepended.
  GateOp controlled_on(int q, bool value) const {
    GateOp g = *this;
    g.controls.insert(g.controls.begin(), q);
    g.control_values.insert(g.control_values.begin(), value);
    return g;
  }

  /// The uncontrolled matrix this op applies on its target block.
  Matrix base_matrix() const {
    switch (kind) {
      case GateKind::kI: return gates::i2();
      case GateKind::kX: return gates::x();
      case GateKind::kY: return gates::y();
      case GateKind::kZ: return gates::z();
      case GateKind::kH: return gates::h();
      case GateKind::kRy: return gates::ry(param);
      case GateKind::kR: return gates::r(param);
      case GateKind::kUnitary: return payload;
    }
    throw argument_error("unknown gate kind");
  }

  GateOp inverse() const {
    GateOp g = *this;
    if (kind == GateKind::kRy) {
      g.param = -param;
    } else if (kind == GateKind::kUnitary) {
      g.payload = adjoint(payload);
    }
    // i, x, y, z, h and r are involutions.
    return g;
  }

 private:
  static GateOp named(GateKind k, int t) {
    GateOp g;
    g.kind = k;
    g.targets = {t};
    return g;
  }
};

// ----- statevector -----------------------------------------------------------

/// Pure state of `num_qubits` qubits.  Value type: every operation below
/// returns a fresh state, so instances can be shared across threads freely.
class Statevector {
 public:
  Statevector() = default;

  explicit Statevector(int num_qubits)
      : n_(check_qubits(num_qubits)),
        a_(std::uint64_t{1} << num_qubits) {
    a_[0] = 1.0;
  }

  static Statevector from_amplitudes(int num_qubits, std::vector<cplx> amps) {
    check_qubits(num_qubits);
    if (amps.size() != (std::uint64_t{1} << num_qubits))
      throw argument_error("amplitude vector has wrong dimension");
    Statevector s;
    s.n_ = num_qubits;
    s.a_ = std::move(amps);
    return s;
  }

  int num_qubits() const { return n_; }
  std::uint64_t dim() const { return a_.size(); }
  const std::vector<cplx>& amplitudes() const { return a_; }
  cplx amplitude(std::uint64_t idx) const { return a_.at(idx); }

  double norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
  }

 private:
  static int check_qubits(int n) {
    if (n < 1 || n > 30) throw argument_error("qubit count out of range");
    return n;
  }

  int n_ = 0;
  std::vector<cplx> a_;
};

/// |index⟩ on `num_qubits` qubits (big-endian index).
inline Statevector make_basis_state(int num_qubits, std::uint64_t index) {
  if (num_qubits < 1 || num_qubits > 30)
    throw argument_error("qubit count out of range");
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (index >= dim) throw argument_error("basis index out of range");
  std::vector<cplx> a(dim);
  a[index] = 1.0;
  return Statevector::from_amplitudes(num_qubits, std::move(a));
}

// ----- Bell pair layout ------------------------------------------------------

/// Placement of `k` Bell pairs inside a register: pair i lives on qubits
/// (central[i], end[i]).  Qubits mentioned by neither list start in |0⟩.
struct BellLayout {
  std::vector<int> central;
  std::vector<int> end;

  /// c_1..c_k then e_1..e_k.
  static BellLayout grouped(int k) {
    BellLayout l;
    for (int i = 0; i < k; ++i) l.central.push_back(i);
    for (int i = 0; i < k; ++i) l.end.push_back(k + i);
    return l;
  }

  /// c_1 e_1 c_2 e_2 ...
  static BellLayout interleaved(int k) {
    BellLayout l;
    for (int i = 0; i < k; ++i) {
      l.central.push_back(2 * i);
      l.end.push_back(2 * i + 1);
    }
    return l;
  }
};

/// Product of `n_pairs` Bell pairs (|00⟩+|11⟩)/√2 placed per `layout`, on a
/// register of `total_qubits` qubits (default: exactly the paired qubits).
inline Statevector make_bell_pairs(int n_pairs, const BellLayout& layout,
                                   int total_qubits = -1) {
  if (n_pairs < 1) throw argument_error("need at least one pair");
  if (total_qubits < 0) total_qubits = 2 * n_pairs;
  if (static_cast<int>(layout.central.size()) != n_pairs ||
      static_cast<int>(layout.end.size()) != n_pairs)
    throw argument_error("layout size does not match pair count");

  std::set<int> seen;
  auto check = [&](int q) {
    if (q < 0 || q >= total_qubits)
      throw argument_error("layout qubit index out of range");
    if (!seen.insert(q).second)
      throw argument_error("layout maps two roles to the same qubit");
  };
  for (int q : layout.central) check(q);
  for (int q : layout.end) check(q);

  const std::uint64_t dim = std::uint64_t{1} << total_qubits;
  std::vector<cplx> a(dim);
  const double amp = std::pow(2.0, -0.5 * n_pairs);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n_pairs); ++b) {
    std::uint64_t idx = 0;
    for (int i = 0; i < n_pairs; ++i) {
      if ((b >> i) & 1u) {
        idx |= qubit_mask(total_qubits, layout.central[i]);
        idx |= qubit_mask(total_qubits, layout.end[i]);
      }
    }
    a[idx] = amp;
  }
  return Statevector::from_amplitudes(total_qubits, std::move(a));
}

// ----- gate application ------------------------------------------------------

namespace detail {

inline void validate_gate(int n, const GateOp& g) {
  if (g.targets.empty()) throw argument_error("gate has no target");
  if (g.controls.size() != g.control_values.size())
    throw argument_error("control list and value list differ in length");
  std::set<int> seen;
  auto check = [&](int q) {
    if (q < 0 || q >= n) throw argument_error("gate qubit index out of range");
    if (!seen.insert(q).second)
      throw argument_error("gate qubit listed twice");
  };
  for (int q : g.targets) check(q);
  for (int q : g.controls) check(q);
  if (g.kind != GateKind::kUnitary && g.targets.size() != 1)
    throw argument_error("named gates are single-target");
  if (g.kind == GateKind::kUnitary) {
    const std::uint64_t want = std::uint64_t{1} << g.targets.size();
    if (g.payload.rows != want || g.payload.cols != want)
      throw argument_error("matrix payload does not match target count");
    if (!is_unitary(g.payload, kTightTol))
      throw validation_error("matrix payload is not unitary");
  }
}

/// In-place kernel.  Iterates base indices with all target bits clear; each
/// such index owns one 2^k block, so the update can gather and scatter without
/// a second buffer.
inline void apply_gate_inplace(std::vector<cplx>& a, int n, const GateOp& g) {
  validate_gate(n, g);
  const Matrix u = g.base_matrix();
  const int k = static_cast<int>(g.targets.size());
  const std::uint64_t block = std::uint64_t{1} << k;

  std::uint64_t tmask = 0, cmask = 0, cval = 0;
  for (int q : g.targets) tmask |= qubit_mask(n, q);
  for (std::size_t i = 0; i < g.controls.size(); ++i) {
    const std::uint64_t m = qubit_mask(n, g.controls[i]);
    cmask |= m;
    if (g.control_values[i]) cval |= m;
  }

  // spread[m] scatters local index m onto the target bit positions.
  std::vector<std::uint64_t> spread(block, 0);
  for (std::uint64_t m = 0; m < block; ++m)
    for (int j = 0; j < k; ++j)
      if ((m >> (k - 1 - j)) & 1u) spread[m] |= qubit_mask(n, g.targets[j]);

  std::vector<cplx> v(block);
  const std::uint64_t dim = a.size();
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & tmask) continue;
    if ((base & cmask) != cval) continue;
    for (std::uint64_t m = 0; m < block; ++m) v[m] = a[base | spread[m]];
    for (std::uint64_t l = 0; l < block; ++l) {
      cplx acc = 0.0;
      const cplx* row = &u.a[l * block];
      for (std::uint64_t m = 0; m < block; ++m) acc += row[m] * v[m];
      a[base | spread[l]] = acc;
    }
  }
}

}  // namespace detail

inline Statevector apply_gate(const Statevector& s, const GateOp& g) {
  std::vector<cplx> a = s.amplitudes();
  detail::apply_gate_inplace(a, s.num_qubits(), g);
  return Statevector::from_amplitudes(s.num_qubits(), std::move(a));
}

enum class Pauli { I, X, Y, Z };

/// Tensor product of single-qubit Paulis applied simultaneously; each qubit
/// may appear at most once.  Operator products such as X·Z on one qubit are
/// expressed as two successive calls (rightmost factor first).
inline Statevector apply_pauli_string(
    const Statevector& s, const std::vector<std::pair<int, Pauli>>& ops) {
  if (ops.empty()) throw argument_error("empty pauli string");
  std::set<int> seen;
  const int n = s.num_qubits();
  std::uint64_t flip = 0;  // X and Y flip the qubit's bit
  std::uint64_t phase_z = 0;  // Z and Y read the qubit's bit as a sign
  int y_count = 0;
  for (const auto& [q, p] : ops) {
    if (q < 0 || q >= n) throw argument_error("pauli qubit index out of range");
    if (!seen.insert(q).second)
      throw argument_error("pauli string lists a qubit twice");
    const std::uint64_t m = qubit_mask(n, q);
    switch (p) {
      case Pauli::I: break;
      case Pauli::X: flip |= m; break;
      case Pauli::Z: phase_z |= m; break;
      case Pauli::Y: flip |= m; phase_z |= m; ++y_count; break;
    }
  }
  // Y = i·X·Z on a basis state: flip the bit, sign from the *input* bit, and
  // one factor of i per Y (kept exact, not via pow).
  static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx y_phase = kIPow[y_count % 4];
  std::vector<cplx> out(s.dim());
  const auto& a = s.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    if (a[i] == cplx{}) continue;
    const int ones = std::popcount(i & phase_z);
    const cplx sign = (ones & 1) ? cplx{-1.0} : cplx{1.0};
    out[i ^ flip] = y_phase * sign * a[i];
  }
  return Statevector::from_amplitudes(n, std::move(out));
}

// ----- measurement -----------------------------------------------------------

struct MeasurementBranch {
  Outcome outcome;
  double probability = 0.0;
  Statevector post_state;  // full register, collapsed and renormalized
};

namespace detail {

inline std::vector<std::uint64_t> measured_masks(int n,
                                                 const std::vector<int>& qs) {
  if (qs.empty()) throw argument_error("no qubits selected for measurement");
  std::set<int> seen;
  std::vector<std::uint64_t> masks;
  for (int q : qs) {
    if (q < 0 || q >= n)
      throw argument_error("measured qubit index out of range");
    if (!seen.insert(q).second)
      throw argument_error("measured qubit listed twice");
    masks.push_back(qubit_mask(n, q));
  }
  return masks;
}

inline std::vector<double> outcome_probabilities(
    const Statevector& s, const std::vector<std::uint64_t>& masks) {
  const int m = static_cast<int>(masks.size());
  std::vector<double> probs(std::uint64_t{1} << m, 0.0);
  const auto& a = s.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    const double p = std::norm(a[i]);
    if (p == 0.0) continue;
    std::uint64_t o = 0;
    for (int j = 0; j < m; ++j)
      if (i & masks[j]) o |= std::uint64_t{1} << (m - 1 - j);
    probs[o] += p;
  }
  return probs;
}

inline Statevector collapse(const Statevector& s,
                            const std::vector<std::uint64_t>& masks,
                            std::uint64_t outcome, double prob) {
  const int m = static_cast<int>(masks.size());
  std::uint64_t omask = 0, oval = 0;
  for (int j = 0; j < m; ++j) {
    omask |= masks[j];
    if ((outcome >> (m - 1 - j)) & 1u) oval |= masks[j];
  }
  const double scale = 1.0 / std::sqrt(prob);
  std::vector<cplx> a(s.dim());
  const auto& in = s.amplitudes();
  for (std::uint64_t i = 0; i < in.size(); ++i)
    if ((i & omask) == oval) a[i] = in[i] * scale;
  return Statevector::from_amplitudes(s.num_qubits(), std::move(a));
}

}  // namespace detail

/// Computational measurement of `qubits`, enumerating every branch with
/// probability above kProbFloor, in ascending outcome order.  Memory scales
/// with (#branches × 2^n): intended for moderate registers; bulk pipelines
/// slice amplitudes directly instead.
inline std::vector<MeasurementBranch> measure_subset_all_outcomes(
    const Statevector& s, const std::vector<int>& qubits) {
  const auto masks = detail::measured_masks(s.num_qubits(), qubits);
  const auto probs = detail::outcome_probabilities(s, masks);
  std::vector<MeasurementBranch> out;
  for (std::uint64_t o = 0; o < probs.size(); ++o) {
    if (probs[o] <= kProbFloor) continue;
    MeasurementBranch b;
    b.outcome = Outcome::from_integer(static_cast<int>(qubits.size()), o);
    b.probability = probs[o];
    b.post_state = detail::collapse(s, masks, o, probs[o]);
    out.push_back(std::move(b));
  }
  return out;
}

/// One Born-rule draw.  All randomness comes from the seed: the uniform
/// variate is built from the top 53 bits of one mt19937_64 output, so results
/// are reproducible across platforms.
inline MeasurementBranch sample_measurement(const Statevector& s,
                                            const std::vector<int>& qubits,
                                            std::uint64_t seed) {
  const auto masks = detail::measured_masks(s.num_qubits(), qubits);
  const auto probs = detail::outcome_probabilities(s, masks);
  std::mt19937_64 gen(seed);
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  double acc = 0.0;
  std::uint64_t pick = probs.size() - 1;
  for (std::uint64_t o = 0; o < probs.size(); ++o) {
    acc += probs[o];
    if (u < acc) {
      pick = o;
      break;
    }
  }
  while (probs[pick] <= kProbFloor) --pick;  // guard against roundoff at u≈1
  MeasurementBranch b;
  b.outcome = Outcome::from_integer(static_cast<int>(qubits.size()), pick);
  b.probability = probs[pick];
  b.post_state = detail::collapse(s, masks, pick, probs[pick]);
  return b;
}

// ----- reduced states --------------------------------------------------------

/// Reduced density matrix on `keep.size()` qubits.
struct DensityBlock {
  int num_qubits = 0;
  Matrix rho;
};

/// Trace out everything except `keep`; keep[j] becomes qubit j of the block
/// (big-endian, like everything else).
inline DensityBlock partial_trace_keep(const Statevector& s,
                                       const std::vector<int>& keep) {
  const int n = s.num_qubits();
  const auto masks = detail::measured_masks(n, keep);  // same validation rules
  const int m = static_cast<int>(keep.size());
  const std::uint64_t dim_k = std::uint64_t{1} << m;
  const std::uint64_t dim_e = std::uint64_t{1} << (n - m);

  std::uint64_t keep_mask = 0;
  for (auto mk : masks) keep_mask |= mk;

  // Regroup amplitudes as tmp[env][kept].
  std::vector<cplx> tmp(dim_e * dim_k);
  const auto& a = s.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    std::uint64_t k_idx = 0;
    for (int j = 0; j < m; ++j)
      if (i & masks[j]) k_idx |= std::uint64_t{1} << (m - 1 - j);
    // Environment bits keep their relative order.
    std::uint64_t e_idx = 0, e_bit = 0;
    for (int q = n - 1; q >= 0; --q) {
      const std::uint64_t qm = qubit_mask(n, q);
      if (keep_mask & qm) continue;
      if (i & qm) e_idx |= std::uint64_t{1} << e_bit;
      ++e_bit;
    }
    tmp[e_idx * dim_k + k_idx] = a[i];
  }

  DensityBlock out;
  out.num_qubits = m;
  out.rho = Matrix(dim_k, dim_k);
  for (std::uint64_t e = 0; e < dim_e; ++e) {
    const cplx* col = &tmp[e * dim_k];
    for (std::uint64_t r = 0; r < dim_k; ++r) {
      if (col[r] == cplx{}) continue;
      for (std::uint64_t c = 0; c < dim_k; ++c)
        out.rho.at(r, c) += col[r] * std::conj(col[c]);
    }
  }
  return out;
}

// ----- comparison ------------------------------------------------------------

inline cplx inner_product(const Statevector& a, const Statevector& b) {
  if (a.num_qubits() != b.num_qubits())
    throw argument_error("inner product: dimension mismatch");
  cplx acc = 0.0;
  for (std::uint64_t i = 0; i < a.dim(); ++i)
    acc += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  return acc;
}

/// |⟨a|b⟩| — for normalized states this is the overlap magnitude used as the
/// fidelity figure throughout the verification pipeline.
inline double overlap_magnitude(const Statevector& a, const Statevector& b) {
  return std::abs(inner_product(a, b));
}

/// True iff max_j |a_j − e^{iθ} b_j| ≤ tol for the best single phase θ.
inline bool equal_up_to_global_phase(const Statevector& a,
                                     const Statevector& b,
                                     double tol = kTightTol) {
  if (a.num_qubits() != b.num_qubits())
    throw argument_error("state comparison: dimension mismatch");
  cplx ip = inner_product(b, a);
  if (std::abs(ip) < 1e-15) {
    // Orthogonal or zero overlap: align on the largest amplitude of b so the
    // entrywise test below still gets its best chance.
    std::uint64_t j = 0;
    double best = -1.0;
    for (std::uint64_t i = 0; i < b.dim(); ++i)
      if (std::abs(b.amplitudes()[i]) > best) {
        best = std::abs(b.amplitudes()[i]);
        j = i;
      }
    if (best < 1e-15) return a.norm() <= tol;
    ip = a.amplitudes()[j] * std::conj(b.amplitudes()[j]);
    if (std::abs(ip) < 1e-15) ip = 1.0;
  }
  const cplx phase = ip / std::abs(ip);
  double worst = 0.0;
  for (std::uint64_t i = 0; i < a.dim(); ++i)
    worst = std::max(worst,
                     std::abs(a.amplitudes()[i] - phase * b.amplitudes()[i]));
  return worst <= tol;
}

}  // namespace hubcast
