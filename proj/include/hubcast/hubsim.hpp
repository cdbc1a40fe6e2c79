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

#ifndef HUBCAST_HUBSIM_HPP_
#define HUBCAST_HUBSIM_HPP_

// End-to-end execution of allocation protocols over the hub topology: build
// the joint Bell-pair register, apply the central circuit, enumerate (or
// sample) measurement outcomes, dispatch the classical messages, apply the
// per-node recoveries and score the result against the target state.
//
// Two execution paths are provided:
//
//   kDirect    full joint-register simulation.  The joint state places the
//              central register in qubits [0, n_central) and the end nodes
//              after it, so each outcome's end-register block is one
//              contiguous slice of the amplitude vector.  Memory-bound:
//              total qubits capped at 20.
//
//   kIdentity  per-outcome analytic construction.  The post-measurement end
//              state of each protocol family has a closed form (a sparse
//              column of the sharing unitary for the W family, a two-term
//              superposition for GHZ, a Pauli frame on the target for
//              teleportation); this path builds those directly and scales to
//              the full supported size range.  The two paths are
//              cross-checked against each other in the test suite on every
//              size the direct path can reach.
//
// kAuto picks kDirect when the joint register is small enough and kIdentity
// beyond.  Verification sweeps parallelize across outcomes; the env var
// HUBCAST_THREADS caps the worker count.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hubcast/circuits.hpp"
#include "hubcast/common.hpp"
#include "hubcast/protocols.hpp"
#include "hubcast/statevec.hpp"

namespace hubcast {

// ----- topology ----------------------------------------------------------------

/// Which joint-register qubit plays which role: central_indices[i] and
/// end_indices[i] hold the two halves of Bell pair i.
struct HubTopology {
  int n = 0;
  std::vector<int> central_indices;
  std::vector<int> end_indices;
};

/// Standard layout: central halves first (qubits 0…n−1, so measurement
/// bitstrings read directly as s_1…s_n), end halves after them.
inline HubTopology hub_topology(int n) {
  if (n < 1) throw argument_error("topology needs at least one node");
  HubTopology t;
  t.n = n;
  for (int i = 0; i < n; ++i) {
    t.central_indices.push_back(i);
    t.end_indices.push_back(n + i);
  }
  return t;
}

// ----- run records ---------------------------------------------------------------

enum class ExecutionPath { kAuto, kDirect, kIdentity };

/// One classical message, central → end node.  The structure admits no other
/// direction: `node` is always the receiving end node.
struct Message {
  int node = 0;
  int alpha = 0;
  int bit_width = 0;
};

/// Everything that happened on one measurement branch.
struct RunTrace {
  Outcome outcome;
  double probability = 0.0;
  std::vector<Message> messages;
  std::vector<std::string> recovery_applied;  // per node: "I", "X", "Z", ...
  Statevector final_end_state;
  double fidelity_to_target = 0.0;
};

struct SampledRun {
  std::vector<RunTrace> traces;          // one per distinct sampled outcome
  std::map<std::uint64_t, int> histogram;  // outcome → shot count
  int shots = 0;
};

namespace detail {

inline constexpr int kAutoDirectQubits = 16;  // kAuto switches paths here
inline constexpr int kDirectMaxQubits = 20;   // hard cap for kDirect
inline constexpr int kDenseSweepQubits = 18;  // verifier: dense vs sparse

inline int resolve_threads(std::uint64_t outcomes) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("HUBCAST_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw)
      hw = static_cast<unsigned>(cap);
  }
  // Small sweeps stay serial: thread startup costs more than the work.
  if (outcomes < 2048) return 1;
  return static_cast<int>(std::min<std::uint64_t>(hw, outcomes / 1024));
}

inline std::string recovery_descriptor(const Matrix& m) {
  if (max_abs_diff(m, Matrix::identity(2)) < 1e-12) return "I";
  if (max_abs_diff(m, gates::x()) < 1e-12) return "X";
  if (max_abs_diff(m, gates::z()) < 1e-12) return "Z";
  if (max_abs_diff(m, gates::xz()) < 1e-12) return "XZ";
  if (max_abs_diff(m, gates::zx()) < 1e-12) return "ZX";
  return "U2";
}

/// 2×2 matrix with exactly one nonzero per column: |b⟩ → phase[b]·|b ⊕ flip⟩.
/// Every Pauli product is one of these; the sparse sweep relies on that.
struct Monomial {
  int flip = 0;
  cplx phase[2] = {cplx{1.0}, cplx{1.0}};
};

inline bool as_monomial(const Matrix& m, Monomial& out) {
  const double tol = 1e-12;
  const bool diag = std::abs(m.at(1, 0)) < tol && std::abs(m.at(0, 1)) < tol;
  const bool anti = std::abs(m.at(0, 0)) < tol && std::abs(m.at(1, 1)) < tol;
  if (diag == anti) return false;
  out.flip = anti ? 1 : 0;
  out.phase[0] = anti ? m.at(1, 0) : m.at(0, 0);
  out.phase[1] = anti ? m.at(0, 1) : m.at(1, 1);
  return true;
}

/// Sparse (index, value) list of the analytic post-measurement end state for
/// outcome `s`, *before* recovery.  Exact for the W and GHZ families; the
/// teleport family's end state is a Pauli frame on the target, which the
/// caller folds into the per-node recovery monomials instead (its sparse
/// source is the target itself).
inline void identity_column(const AllocationProtocol& p, std::uint64_t s,
                            std::vector<std::pair<std::uint64_t, cplx>>& out) {
  out.clear();
  const int n = p.n_end;
  if (p.kind == "w") {
    std::vector<std::pair<std::uint64_t, double>> col;
    w_unitary_column(n, s, col);
    for (const auto& [idx, v] : col) out.emplace_back(idx, cplx{v});
  } else if (p.kind == "ghz") {
    const double amp = 1.0 / std::sqrt(2.0);
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    const std::uint64_t rest_mask = half - 1;
    const bool s1 = (s & half) != 0;
    out.emplace_back(s & rest_mask, cplx{amp});
    out.emplace_back(half | (~s & rest_mask), cplx{s1 ? -amp : amp});
  } else {
    throw argument_error("no analytic column for protocol " + p.kind);
  }
}

/// Per-node Pauli frame of the teleport end state for outcome s: node i holds
/// X^{b_i} Z^{a_i} |target_i⟩ with b from the Bell-half bit and a from the
/// prep bit.
inline Matrix teleport_frame(int b, int a) {
  Matrix m = Matrix::identity(2);
  if (a) m = m * gates::z();
  if (b) m = gates::x() * m;
  return m;
}

/// Precomputed per-(node, α) recovery data for the sweep loops.
struct RecoveryTable {
  std::vector<std::vector<Matrix>> mats;       // [node][α−1]
  std::vector<std::vector<Monomial>> monos;    // same shape; valid if all_monomial
  std::vector<std::vector<std::string>> names; // descriptors
  bool all_monomial = true;
};

/// For W/GHZ the table holds the recovery alone; for teleport it holds
/// recovery·frame so the sparse sweep can act on the bare target.
inline RecoveryTable build_recovery_table(const AllocationProtocol& p,
                                          bool fold_teleport_frame) {
  RecoveryTable t;
  t.mats.resize(p.n_end);
  t.monos.resize(p.n_end);
  t.names.resize(p.n_end);
  for (int i = 0; i < p.n_end; ++i) {
    for (int alpha = 1; alpha <= p.alphabet_sizes[i]; ++alpha) {
      Matrix m = p.recovery_for_alpha(i, alpha);
      if (!is_unitary(m, kTightTol))
        throw validation_error("recovery for node " + std::to_string(i) +
                               " is not unitary");
      t.names[i].push_back(recovery_descriptor(m));
      if (p.kind == "teleport" && fold_teleport_frame) {
        const int b = (alpha - 1) & 1, a = (alpha - 1) >> 1;
        m = m * teleport_frame(b, a);
      }
      Monomial mono;
      if (as_monomial(m, mono)) {
        t.monos[i].push_back(mono);
      } else {
        t.monos[i].emplace_back();
        t.all_monomial = false;
      }
      t.mats[i].push_back(std::move(m));
    }
  }
  return t;
}

/// Nonzero amplitudes of a state, for sparse sweeps.
inline std::vector<std::pair<std::uint64_t, cplx>> support_of(
    const Statevector& s) {
  std::vector<std::pair<std::uint64_t, cplx>> out;
  for (std::uint64_t i = 0; i < s.dim(); ++i)
    if (std::abs(s.amplitude(i)) > 1e-15) out.emplace_back(i, s.amplitude(i));
  return out;
}

/// ⟨target| (⊗_i monomial_i) |src⟩ and ‖src‖², in one pass over src.
inline std::pair<cplx, double> monomial_overlap(
    const Statevector& target, int n,
    const std::vector<std::pair<std::uint64_t, cplx>>& src,
    const std::vector<const Monomial*>& mono) {
  std::uint64_t flip = 0;
  for (int i = 0; i < n; ++i)
    if (mono[i]->flip) flip |= qubit_mask(n, i);
  cplx acc = 0.0;
  double norm2 = 0.0;
  for (const auto& [j, v] : src) {
    norm2 += std::norm(v);
    const cplx tgt = target.amplitude(j ^ flip);
    if (tgt == cplx{}) continue;
    cplx phase = 1.0;
    for (int i = 0; i < n; ++i)
      phase *= mono[i]->phase[(j >> (n - 1 - i)) & 1];
    acc += std::conj(tgt) * phase * v;
  }
  return {acc, norm2};
}

/// Builds the joint register (Bell pairs plus any unpaired central prep
/// qubits in |0⟩) and runs the central circuit over it.
inline std::vector<cplx> build_joint_after_central(const AllocationProtocol& p) {
  const int total = p.n_central + p.n_end;
  BellLayout layout;
  const HubTopology topo = hub_topology(p.n_end);
  layout.central = topo.central_indices;           // Bell halves c_i
  layout.end.resize(p.n_end);
  for (int i = 0; i < p.n_end; ++i) layout.end[i] = p.n_central + i;
  Statevector joint = make_bell_pairs(p.n_end, layout, total);
  std::vector<cplx> amps = joint.amplitudes();
  const Circuit central = p.central_circuit();
  if (central.num_qubits != p.n_central)
    throw validation_error("central circuit width mismatch");
  apply_circuit_inplace(amps, total, central);
  return amps;
}

}  // namespace detail

// ----- outcome streaming ---------------------------------------------------------

/// Calls `f(outcome, probability, pre_recovery_end_state)` for every outcome
/// with probability above the branch floor, in ascending outcome order.  The
/// end state handed to `f` is normalized and has not had recoveries applied.
template <typename F>
void for_each_outcome(const AllocationProtocol& p, ExecutionPath path, F&& f) {
  const int total = p.n_central + p.n_end;
  if (path == ExecutionPath::kAuto)
    path = total <= detail::kAutoDirectQubits ? ExecutionPath::kDirect
                                              : ExecutionPath::kIdentity;
  const std::uint64_t outcomes = std::uint64_t{1} << p.n_central;
  const std::uint64_t end_dim = std::uint64_t{1} << p.n_end;

  if (path == ExecutionPath::kDirect) {
    if (total > detail::kDirectMaxQubits)
      throw resource_error(
          "joint register too large for direct simulation; use the identity "
          "path");
    const std::vector<cplx> amps = detail::build_joint_after_central(p);
    for (std::uint64_t s = 0; s < outcomes; ++s) {
      double prob = 0.0;
      const cplx* slice = amps.data() + s * end_dim;
      for (std::uint64_t e = 0; e < end_dim; ++e) prob += std::norm(slice[e]);
      if (prob <= kProbFloor) continue;
      const double scale = 1.0 / std::sqrt(prob);
      std::vector<cplx> state(end_dim);
      for (std::uint64_t e = 0; e < end_dim; ++e) state[e] = slice[e] * scale;
      f(Outcome::from_integer(p.n_central, s), prob,
        Statevector::from_amplitudes(p.n_end, std::move(state)));
    }
    return;
  }

  // Identity path: per-outcome closed forms.
  if (p.kind == "teleport") {
    std::vector<int> alphas(p.n_end);
    for (std::uint64_t s = 0; s < outcomes; ++s) {
      p.alphas_raw(s, alphas.data());
      std::vector<cplx> state = p.target.amplitudes();
      for (int i = 0; i < p.n_end; ++i) {
        const int b = (alphas[i] - 1) & 1, a = (alphas[i] - 1) >> 1;
        if (a)
          detail::apply_gate_inplace(state, p.n_end, GateOp::z(i));
        if (b)
          detail::apply_gate_inplace(state, p.n_end, GateOp::x(i));
      }
      f(Outcome::from_integer(p.n_central, s),
        1.0 / static_cast<double>(outcomes),
        Statevector::from_amplitudes(p.n_end, std::move(state)));
    }
    return;
  }

  std::vector<std::pair<std::uint64_t, cplx>> col;
  for (std::uint64_t s = 0; s < outcomes; ++s) {
    detail::identity_column(p, s, col);
    std::vector<cplx> state(end_dim);
    double norm2 = 0.0;
    for (const auto& [idx, v] : col) {
      state[idx] += v;
      norm2 += std::norm(v);
    }
    f(Outcome::from_integer(p.n_central, s),
      norm2 / static_cast<double>(outcomes),
      Statevector::from_amplitudes(p.n_end, std::move(state)));
  }
}

// ----- full-trace execution ------------------------------------------------------

/// One trace per nonzero-probability outcome: messages, recovery names, the
/// recovered end state and its fidelity (overlap magnitude with the target).
inline std::vector<RunTrace> run_all_outcomes(
    const AllocationProtocol& p, ExecutionPath path = ExecutionPath::kAuto) {
  if (p.n_central + p.n_end > 24)
    throw resource_error("outcome enumeration capped at 24 joint qubits");
  const detail::RecoveryTable table =
      detail::build_recovery_table(p, /*fold_teleport_frame=*/false);
  const auto report = resource_report(p);

  std::vector<RunTrace> traces;
  std::vector<int> alphas(p.n_end);
  for_each_outcome(p, path, [&](const Outcome& o, double prob,
                                Statevector pre_state) {
    RunTrace t;
    t.outcome = o;
    t.probability = prob;
    p.alphas_raw(o.as_integer, alphas.data());
    std::vector<cplx> amps = pre_state.amplitudes();
    for (int i = 0; i < p.n_end; ++i) {
      t.messages.push_back({i, alphas[i], report.bits_per_node[i]});
      t.recovery_applied.push_back(table.names[i][alphas[i] - 1]);
      detail::apply_gate_inplace(
          amps, p.n_end,
          GateOp::unitary(table.mats[i][alphas[i] - 1], {i}));
    }
    t.final_end_state = Statevector::from_amplitudes(p.n_end, std::move(amps));
    t.fidelity_to_target =
        std::min(overlap_magnitude(p.target, t.final_end_state), 1.0);
    traces.push_back(std::move(t));
  });
  return traces;
}

// ----- sampled execution ---------------------------------------------------------

/// Draws `shots` outcomes from the true branch distribution with one seeded
/// generator, then materializes a single trace per distinct outcome.
inline SampledRun run_sampled(const AllocationProtocol& p, int shots,
                              std::uint64_t seed) {
  if (shots < 1) throw argument_error("shots must be at least 1");
  const std::uint64_t outcomes = std::uint64_t{1} << p.n_central;

  // Branch CDF from the streaming enumerator (true simulated probabilities
  // on the direct path, analytic ones beyond its reach).
  std::vector<double> cdf(outcomes, 0.0);
  for_each_outcome(p, ExecutionPath::kAuto,
                   [&](const Outcome& o, double prob, const Statevector&) {
                     cdf[o.as_integer] = prob;
                   });
  double acc = 0.0;
  for (auto& c : cdf) {
    acc += c;
    c = acc;
  }

  SampledRun run;
  run.shots = shots;
  std::mt19937_64 gen(seed);
  for (int k = 0; k < shots; ++k) {
    const double u = (gen() >> 11) * 0x1.0p-53 * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::uint64_t pick =
        static_cast<std::uint64_t>(std::distance(cdf.begin(), it));
    if (pick >= outcomes) pick = outcomes - 1;
    ++run.histogram[pick];
  }

  // One full trace per distinct outcome, reusing the exhaustive machinery on
  // a filtered callback.
  const detail::RecoveryTable table =
      detail::build_recovery_table(p, /*fold_teleport_frame=*/false);
  const auto report = resource_report(p);
  std::vector<int> alphas(p.n_end);
  for_each_outcome(p, ExecutionPath::kAuto, [&](const Outcome& o, double prob,
                                                Statevector pre_state) {
    if (run.histogram.find(o.as_integer) == run.histogram.end()) return;
    RunTrace t;
    t.outcome = o;
    t.probability = prob;
    p.alphas_raw(o.as_integer, alphas.data());
    std::vector<cplx> amps = pre_state.amplitudes();
    for (int i = 0; i < p.n_end; ++i) {
      t.messages.push_back({i, alphas[i], report.bits_per_node[i]});
      t.recovery_applied.push_back(table.names[i][alphas[i] - 1]);
      detail::apply_gate_inplace(
          amps, p.n_end, GateOp::unitary(table.mats[i][alphas[i] - 1], {i}));
    }
    t.final_end_state = Statevector::from_amplitudes(p.n_end, std::move(amps));
    t.fidelity_to_target =
        std::min(overlap_magnitude(p.target, t.final_end_state), 1.0);
    run.traces.push_back(std::move(t));
  });
  return run;
}

// ----- exactness verification ----------------------------------------------------

/// Full-outcome sweep filling the fidelity half of the resource report:
/// min_fidelity_over_outcomes and the largest deviation of any branch
/// probability from the uniform value 2^{−n_central}.  Parallelizes across
/// outcomes (capped by HUBCAST_THREADS); result is order-independent.
inline ResourceReport verify_exactness(
    const AllocationProtocol& p, ExecutionPath path = ExecutionPath::kAuto) {
  ResourceReport r = resource_report(p);
  const int total = p.n_central + p.n_end;
  if (path == ExecutionPath::kAuto)
    path = total <= detail::kAutoDirectQubits ? ExecutionPath::kDirect
                                              : ExecutionPath::kIdentity;
  const std::uint64_t outcomes = std::uint64_t{1} << p.n_central;
  const double uniform = 1.0 / static_cast<double>(outcomes);

  const bool sparse_sweep =
      path == ExecutionPath::kIdentity && total > detail::kDenseSweepQubits;
  const detail::RecoveryTable table =
      detail::build_recovery_table(p, /*fold_teleport_frame=*/sparse_sweep);
  if (sparse_sweep && !table.all_monomial)
    throw resource_error(
        "sweep too large for non-Pauli recoveries; reduce n");

  std::vector<cplx> joint;
  if (path == ExecutionPath::kDirect) {
    if (total > detail::kDirectMaxQubits)
      throw resource_error(
          "joint register too large for direct verification");
    joint = detail::build_joint_after_central(p);
  }

  // Teleport's sparse sweep acts on the bare target (the Pauli frame is
  // folded into the recovery table).
  std::vector<std::pair<std::uint64_t, cplx>> teleport_src;
  if (sparse_sweep && p.kind == "teleport")
    teleport_src = detail::support_of(p.target);

  struct Accum {
    double min_fid = 2.0;
    double max_dev = 0.0;
    double prob_sum = 0.0;
  };
  const int n_threads = detail::resolve_threads(outcomes);
  std::vector<Accum> acc(n_threads);

  auto worker = [&](int tid, std::uint64_t begin, std::uint64_t end) {
    Accum& a = acc[tid];
    std::vector<int> alphas(p.n_end);
    std::vector<const detail::Monomial*> monos(p.n_end);
    std::vector<std::pair<std::uint64_t, cplx>> col;
    const std::uint64_t end_dim = std::uint64_t{1} << p.n_end;
    std::vector<cplx> state;

    for (std::uint64_t s = begin; s < end; ++s) {
      p.alphas_raw(s, alphas.data());
      double prob = 0.0, fid = 0.0;

      if (sparse_sweep) {
        for (int i = 0; i < p.n_end; ++i)
          monos[i] = &table.monos[i][alphas[i] - 1];
        const auto* src = &teleport_src;
        if (p.kind != "teleport") {
          detail::identity_column(p, s, col);
          src = &col;
        }
        const auto [overlap, norm2] =
            detail::monomial_overlap(p.target, p.n_end, *src, monos);
        prob = norm2 * uniform;
        fid = norm2 > 0.0 ? std::abs(overlap) / std::sqrt(norm2) : 0.0;
      } else if (path == ExecutionPath::kDirect) {
        const cplx* slice = joint.data() + s * end_dim;
        for (std::uint64_t e = 0; e < end_dim; ++e)
          prob += std::norm(slice[e]);
        if (prob <= kProbFloor) continue;
        state.assign(slice, slice + end_dim);
        const double scale = 1.0 / std::sqrt(prob);
        for (auto& v : state) v *= scale;
        for (int i = 0; i < p.n_end; ++i)
          detail::apply_gate_inplace(
              state, p.n_end, GateOp::unitary(table.mats[i][alphas[i] - 1], {i}));
        cplx ip = 0.0;
        for (std::uint64_t e = 0; e < end_dim; ++e)
          ip += std::conj(p.target.amplitude(e)) * state[e];
        fid = std::abs(ip);
      } else {  // dense identity path
        if (p.kind == "teleport") {
          state = p.target.amplitudes();
          for (int i = 0; i < p.n_end; ++i) {
            const int b = (alphas[i] - 1) & 1, a_ = (alphas[i] - 1) >> 1;
            if (a_) detail::apply_gate_inplace(state, p.n_end, GateOp::z(i));
            if (b) detail::apply_gate_inplace(state, p.n_end, GateOp::x(i));
          }
          prob = uniform;
        } else {
          detail::identity_column(p, s, col);
          state.assign(end_dim, cplx{});
          double norm2 = 0.0;
          for (const auto& [idx, v] : col) {
            state[idx] += v;
            norm2 += std::norm(v);
          }
          prob = norm2 * uniform;
        }
        for (int i = 0; i < p.n_end; ++i)
          detail::apply_gate_inplace(
              state, p.n_end, GateOp::unitary(table.mats[i][alphas[i] - 1], {i}));
        cplx ip = 0.0;
        for (std::uint64_t e = 0; e < end_dim; ++e)
          ip += std::conj(p.target.amplitude(e)) * state[e];
        fid = std::abs(ip);
      }

      a.prob_sum += prob;
      a.max_dev = std::max(a.max_dev, std::abs(prob - uniform));
      a.min_fid = std::min(a.min_fid, std::min(fid, 1.0));
    }
  };

  if (n_threads == 1) {
    worker(0, 0, outcomes);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (outcomes + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t)
      pool.emplace_back(worker, t, t * chunk,
                        std::min(outcomes, (t + 1) * chunk));
    for (auto& th : pool) th.join();
  }

  Accum all;
  all.min_fid = 2.0;
  for (const auto& a : acc) {
    all.min_fid = std::min(all.min_fid, a.min_fid);
    all.max_dev = std::max(all.max_dev, a.max_dev);
    all.prob_sum += a.prob_sum;
  }
  r.min_fidelity_over_outcomes = all.min_fid > 1.5 ? 0.0 : all.min_fid;
  r.max_prob_deviation =
      std::max(all.max_dev, std::abs(all.prob_sum - 1.0));
  if (!r.note.empty()) r.note += "; ";
  r.note += path == ExecutionPath::kDirect
                ? "direct joint simulation"
                : "analytic per-outcome states";
  return r;
}

// ----- resource comparison -------------------------------------------------------

/// Table I shape: one verified report per protocol family at size n — the
/// two hub protocols plus the teleportation baseline against each target.
inline std::vector<ResourceReport> compare_resources(int n) {
  if (n < 2 || n > 12) throw argument_error("comparison supports 2 <= n <= 12");
  std::vector<ResourceReport> rows;
  rows.push_back(verify_exactness(build_w_protocol(n)));
  rows.push_back(verify_exactness(build_ghz_protocol(n)));
  {
    auto r = verify_exactness(build_teleport_protocol(n, make_w_state(n)));
    r.protocol = "teleport(w)";
    rows.push_back(std::move(r));
  }
  {
    auto r = verify_exactness(build_teleport_protocol(n, make_ghz_state(n)));
    r.protocol = "teleport(ghz)";
    rows.push_back(std::move(r));
  }
  return rows;
}

// ----- negative-control fixture ---------------------------------------------------

/// Copy of `p` with node `node`'s recovery deliberately wrong (an extra X
/// composed on top).  Lets tests and the CLI demonstrate that the exactness
/// check can fail.
inline AllocationProtocol corrupt_recovery(AllocationProtocol p, int node) {
  if (node < 0 || node >= p.n_end)
    throw argument_error("corrupt node index out of range");
  auto inner = p.recovery_for_alpha;
  p.recovery_for_alpha = [inner, node](int i, int alpha) -> Matrix {
    Matrix m = inner(i, alpha);
    if (i == node) m = gates::x() * m;
    return m;
  };
  if (!p.note.empty()) p.note += "; ";
  p.note += "recovery corrupted on node " + std::to_string(node);
  return p;
}

}  // namespace hubcast

#endif  // HUBCAST_HUBSIM_HPP_
