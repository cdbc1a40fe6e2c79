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

// Acceptance gate: ten checks, one line each, nonzero exit if any fails.
// argv[1] (optional) is the path to the command-line binary, exercised by
// check 10's exit-code legs.  Tolerances are pinned here on purpose; they
// are the contract, not implementation details.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "hubcast/blockenc.hpp"
#include "hubcast/circuits.hpp"
#include "hubcast/hubsim.hpp"
#include "hubcast/protocols.hpp"
#include "hubcast/statevec.hpp"

namespace {

using namespace hubcast;

constexpr double kFidTol = 1e-10;    // fidelity shortfall allowed
constexpr double kProbTol = 1e-10;   // outcome-law deviation allowed
constexpr double kCircTol = 1e-9;    // circuit / block / Gram deviation
constexpr double kExactTol = 1e-12;  // "analytic" identities
constexpr double kCorruptCeiling = 0.999;

int g_failures = 0;

void report(int idx, bool ok, const std::string& what) {
  std::printf("[%2d] %s  %s\n", idx, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

int run_command(const std::string& binary, const std::string& args) {
  const std::string cmd = "\"" + binary + "\" " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

// --- 1, 2: exactness sweeps -------------------------------------------------

void check_exactness(int idx, const std::string& family) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  double worst_fid = 1.0;
  for (int n = 2; n <= 12; ++n) {
    const AllocationProtocol p =
        family == "w" ? build_w_protocol(n) : build_ghz_protocol(n);
    const ResourceReport r = verify_exactness(p);
    worst_fid = std::min(worst_fid, r.min_fidelity_over_outcomes);
    ok = ok && r.min_fidelity_over_outcomes >= 1.0 - kFidTol;

    std::vector<int> want_bits(n, family == "w" ? 2 : 1);
    if (family == "w") want_bits[0] = want_bits[1] = 1;
    const int want_total = family == "w" ? 2 * n - 2 : n;
    ok = ok && r.bits_per_node == want_bits && r.total_bits == want_total;

    if (n <= 8) {  // the analytic branch states must agree with brute force
      const ResourceReport d = verify_exactness(p, ExecutionPath::kDirect);
      worst_fid = std::min(worst_fid, d.min_fidelity_over_outcomes);
      ok = ok && d.min_fidelity_over_outcomes >= 1.0 - kFidTol;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  ok = ok && secs < 60.0;
  std::ostringstream what;
  what << (family == "w" ? "W" : "GHZ")
       << " exactness, n = 2..12 every outcome: min fidelity "
       << std::setprecision(15) << worst_fid << ", bit counts exact, "
       << std::setprecision(3) << secs << " s";
  report(idx, ok, what.str());
}

// --- 3: uniform outcome law ---------------------------------------------------

void check_outcome_law() {
  bool ok = true;
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n)
    for (const bool w : {true, false}) {
      const AllocationProtocol p =
          w ? build_w_protocol(n) : build_ghz_protocol(n);
      const ResourceReport r = verify_exactness(p, ExecutionPath::kDirect);
      worst = std::max(worst, r.max_prob_deviation);
      ok = ok && r.max_prob_deviation < kProbTol;
    }
  std::ostringstream what;
  what << "uniform outcome law (direct simulation, n <= 8): max |p - 2^-n| = "
       << std::setprecision(3) << worst;
  report(3, ok, what.str());
}

// --- 4: resource table ----------------------------------------------------------

void check_resource_table() {
  bool ok = true;
  for (const int n : {3, 5, 8}) {
    for (const ResourceReport& r : compare_resources(n)) {
      const bool hub = r.protocol == "w" || r.protocol == "ghz";
      const int want_bits = r.protocol == "w"     ? 2 * n - 2
                            : r.protocol == "ghz" ? n
                                                  : 2 * n;
      ok = ok && r.total_bits == want_bits;
      ok = ok && r.central_memory_qubits == (hub ? n : 2 * n);
      ok = ok && r.end_memory_qubits == n;
    }
  }
  report(4, ok,
         "resource table, n = 3, 5, 8: bits (2n-2 | n | 2n) and central "
         "memory (n | n | 2n), exact integers");
}

// --- 5: circuit equivalence -----------------------------------------------------

void check_circuits() {
  bool ok = true;
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n)
    worst = std::max(worst,
                     max_abs_diff_up_to_phase(
                         circuit_to_matrix(w_circuit_recursive(n)),
                         build_w_unitary(n)));
  worst = std::max(worst, max_abs_diff_up_to_phase(
                              circuit_to_matrix(w_circuit_n3_ladder()),
                              build_w_unitary(3)));
  ok = ok && worst < kCircTol;

  // Fan-out columns against the defining two-branch form.
  double ghz_worst = 0.0;
  for (int n = 2; n <= 12; ++n) {
    const Circuit c = ghz_circuit(n);
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    const double amp = 1.0 / std::sqrt(2.0);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      const Statevector out = apply_circuit(make_basis_state(n, s), c);
      const bool s1 = (s & half) != 0;
      const std::uint64_t rest = (s1 ? ~s : s) & (half - 1);
      for (std::uint64_t i = 0; i < out.dim(); ++i) {
        cplx want{};
        if (i == rest) want = amp;
        if (i == (half | rest)) want = s1 ? -amp : amp;
        ghz_worst = std::max(ghz_worst, std::abs(out.amplitude(i) - want));
      }
    }
  }
  ok = ok && ghz_worst < kCircTol;

  std::ostringstream what;
  what << "circuit equivalence: recursive n <= 10 and 7-gate ladder within "
       << std::setprecision(3) << worst << "; fan-out columns n <= 12 within "
       << ghz_worst;
  report(5, ok, what.str());
}

// --- 6: the single-qubit recovery identity table --------------------------------

void check_identity_table() {
  bool ok = true;
  double worst = 0.0;
  const auto basis = [](int b) {
    Matrix v(2, 1);
    v.at(b, 0) = 1.0;
    return v;
  };
  const auto diff = [&](const Matrix& got, const Matrix& want) {
    worst = std::max(worst, max_abs_diff(got, want));
  };
  for (int s = 0; s <= 1; ++s) {
    const Matrix xz_s = s ? gates::xz() : Matrix::identity(2);
    const Matrix x_s = s ? gates::x() : Matrix::identity(2);
    const cplx sign = s ? -1.0 : 1.0;
    diff(xz_s * gates::x() * basis(s), basis(1));
    diff(xz_s * gates::z() * basis(s), basis(0));
    diff(x_s * basis(s), basis(0));
    diff(x_s * gates::x() * basis(s), basis(1));
    diff(x_s * gates::z() * basis(s), sign * basis(0));
  }
  ok = worst <= kExactTol;
  std::ostringstream what;
  what << "recovery identity table, both bit values: max deviation "
       << std::setprecision(3) << worst;
  report(6, ok, what.str());
}

// --- 7: reduced single-qubit states ----------------------------------------------

void check_reduced_states() {
  bool ok = true;
  double worst = 0.0;
  for (int n = 3; n <= 8; ++n) {
    const Statevector w = make_w_state(n);
    for (int q = 0; q < n; ++q) {
      const Matrix rho = partial_trace_keep(w, {q}).rho;
      Matrix want(2, 2);
      want.at(0, 0) = (n - 1) / static_cast<double>(n);
      want.at(1, 1) = 1.0 / n;
      worst = std::max(worst, max_abs_diff(rho, want));
    }
  }
  // One half of a Bell pair is maximally mixed.
  Statevector bell = make_basis_state(2, 0);
  bell = apply_gate(bell, GateOp::h(0));
  bell = apply_gate(bell, GateOp::cx(0, 1));
  const Matrix rho = partial_trace_keep(bell, {0}).rho;
  worst = std::max(worst, max_abs_diff(rho, 0.5 * Matrix::identity(2)));
  ok = worst < kFidTol;
  std::ostringstream what;
  what << "reduced states: every kept qubit of the shared family is "
          "diag((n-1)/n, 1/n), Bell half is I/2; max deviation "
       << std::setprecision(3) << worst;
  report(7, ok, what.str());
}

// --- 8: block-encoding certificate -----------------------------------------------

void check_block_encoding() {
  bool ok = true;
  double worst_dev = 0.0, worst_sv = 0.0;
  for (const int n : {2, 3, 4}) {
    const BlockEncodingResult res = lcu_block_encoding(n);
    worst_dev = std::max(worst_dev, res.certificate.max_block_deviation);
    const double want = 1.0 / std::sqrt(static_cast<double>(n));
    for (double sv : res.certificate.singular_values)
      worst_sv = std::max(worst_sv, std::abs(sv - want));
  }
  ok = worst_dev < kCircTol && worst_sv < kCircTol;

  // Comparator truth table, exhaustive, operands restored, flags clean.
  bool cmp_ok = true;
  for (int w = 1; w <= 4 && cmp_ok; ++w) {
    const Circuit c = comparator_circuit(w);
    const int total = 2 * w + 2;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << w); ++a)
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << w); ++b) {
        const std::uint64_t in = (a << (w + 2)) | (b << 2);
        const Statevector out = apply_circuit(make_basis_state(total, in), c);
        const std::uint64_t flags = a > b ? 2 : (a < b ? 1 : 0);
        cmp_ok = cmp_ok &&
                 std::abs(out.amplitude(in | flags) - cplx{1.0}) < kExactTol;
      }
  }
  ok = ok && cmp_ok;
  std::ostringstream what;
  what << "block encoding, n = 2, 3, 4: corner block within " << std::setprecision(3)
       << worst_dev << " of the scaled target, singular values within "
       << worst_sv << "; comparator exhaustive to width 4 "
       << (cmp_ok ? "clean" : "DIRTY");
  report(8, ok, what.str());
}

// --- 9: orthonormal branch states -------------------------------------------------

void check_gram() {
  bool ok = true;
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n)
    for (const bool w : {true, false}) {
      const Matrix u =
          w ? build_w_unitary(n) : circuit_to_matrix(ghz_circuit(n));
      const Matrix v = transpose(u);  // columns are the branch states
      const Matrix gram = adjoint(v) * v;
      worst = std::max(
          worst, max_abs_diff(gram, Matrix::identity(std::uint64_t{1} << n)));
    }
  ok = worst < kCircTol;
  std::ostringstream what;
  what << "branch-state Gram matrices are the identity (n <= 6, both "
          "families): max deviation "
       << std::setprecision(3) << worst;
  report(9, ok, what.str());
}

// --- 10: negative controls ---------------------------------------------------------

void check_negative_controls(const std::string& binary) {
  bool ok = true;
  double highest_corrupt_fid = 0.0;
  for (const bool w : {true, false})
    for (int node = 0; node < 3; ++node) {
      const AllocationProtocol p = corrupt_recovery(
          w ? build_w_protocol(3) : build_ghz_protocol(3), node);
      const double fid = verify_exactness(p).min_fidelity_over_outcomes;
      highest_corrupt_fid = std::max(highest_corrupt_fid, fid);
      ok = ok && fid < kCorruptCeiling;
    }

  std::string cli = "skipped (no binary path given)";
  if (!binary.empty()) {
    bool cli_ok = run_command(binary, "verify --state w --n 3") == 0;
    for (int node = 0; node < 3; ++node)
      cli_ok = cli_ok &&
               run_command(binary, "verify --state w --n 3 --corrupt-node " +
                                       std::to_string(node)) == 1;
    cli_ok = cli_ok && run_command(binary, "verify --n 1") == 2;
    ok = ok && cli_ok;
    cli = cli_ok ? "exit codes 0/1/2 as contracted" : "exit-code contract BROKEN";
  }
  std::ostringstream what;
  what << "negative controls: every single-node corruption drops min fidelity "
          "to at most "
       << std::setprecision(6) << highest_corrupt_fid << "; verify command "
       << cli;
  report(10, ok, what.str());
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  check_exactness(1, "w");
  check_exactness(2, "ghz");
  check_outcome_law();
  check_resource_table();
  check_circuits();
  check_identity_table();
  check_reduced_states();
  check_block_encoding();
  check_gram();
  check_negative_controls(binary);
  if (g_failures == 0) {
    std::printf("all 10 acceptance checks passed\n");
    return 0;
  }
  std::printf("%d acceptance check(s) FAILED\n", g_failures);
  return 1;
}
