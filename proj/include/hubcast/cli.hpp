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

#ifndef HUBCAST_CLI_HPP_
#define HUBCAST_CLI_HPP_

// Command implementations behind the `hubcast` binary.  Each cmd_* function
// takes a plain argument struct and an output stream and returns a process
// exit code, so the whole surface is drivable from tests without spawning a
// process.  Exit codes: 0 = all checks passed, 1 = a check failed,
// 2 = usage error.
//
// Structured output is a single JSON document (`--json` prints it, `--out`
// writes it) with a fixed schema_version, suitable for golden-file pinning.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hubcast/blockenc.hpp"
#include "hubcast/circuits.hpp"
#include "hubcast/common.hpp"
#include "hubcast/gatelist.hpp"
#include "hubcast/hubsim.hpp"
#include "hubcast/protocols.hpp"

namespace hubcast::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kSchemaVersion = "hubcast-report-1";

struct VerifyArgs {
  std::string state = "w";  // "w" or "ghz"
  int n = 3;
  int corrupt_node = -1;  // ≥ 0: sabotage that node's recovery (negative test)
  std::string out;
  bool json = false;
};

struct CompareArgs {
  int n = 5;
  std::string out;
  bool json = false;
};

struct RunArgs {
  std::string state = "w";
  int n = 3;
  int shots = 1;
  std::uint64_t seed = 0;
  std::string out;
  bool json = false;
};

struct CircuitArgs {
  std::string state = "w";
  int n = 3;
  std::string variant;  // direct | recursive | ladder3 | ghz; empty = default
  std::string format = "gatelist-v1";
  std::string out;
  bool json = false;
};

struct BlockencArgs {
  int n = 3;
  std::string out;
  bool json = false;
};

namespace detail {

using nlohmann::json;

class PhaseTimer {
 public:
  PhaseTimer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Assembles the self-describing report envelope.
inline json report_document(const std::string& command, json parameters,
                            json results, double total_ms) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["parameters"] = std::move(parameters);
  doc["results"] = std::move(results);
  doc["timings_ms"] = {{"total", total_ms}};
  return doc;
}

/// Emits the document per the output flags; returns false when the file
/// could not be written.
inline bool emit_report(const json& doc, const std::string& out_path,
                        bool as_json, std::ostream& os,
                        const std::string& human_text) {
  if (as_json)
    os << doc.dump(2) << "\n";
  else
    os << human_text;
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) return false;
    f << doc.dump(2) << "\n";
  }
  return true;
}

inline json report_json(const ResourceReport& r) {
  return json{{"protocol", r.protocol},
              {"n", r.n_end},
              {"bits_per_node", r.bits_per_node},
              {"total_bits", r.total_bits},
              {"central_memory_qubits", r.central_memory_qubits},
              {"end_memory_qubits", r.end_memory_qubits},
              {"min_fidelity", r.min_fidelity_over_outcomes},
              {"max_prob_deviation", r.max_prob_deviation},
              {"note", r.note}};
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

inline AllocationProtocol protocol_for(const std::string& state, int n) {
  if (state == "w") return build_w_protocol(n);
  if (state == "ghz") return build_ghz_protocol(n);
  throw argument_error("unknown state family: " + state);
}

}  // namespace detail

// ----- verify --------------------------------------------------------------------

inline int cmd_verify(const VerifyArgs& a, std::ostream& os) {
  if (a.state != "w" && a.state != "ghz") {
    os << "error: --state must be w or ghz\n";
    return kExitUsage;
  }
  if (a.n < 2 || a.n > 12) {
    os << "error: --n must be between 2 and 12\n";
    return kExitUsage;
  }
  if (a.corrupt_node >= a.n) {
    os << "error: --corrupt-node must be below --n\n";
    return kExitUsage;
  }

  detail::PhaseTimer timer;
  AllocationProtocol p = detail::protocol_for(a.state, a.n);
  if (a.corrupt_node >= 0) p = corrupt_recovery(std::move(p), a.corrupt_node);
  const ResourceReport r = verify_exactness(p);

  const int expected_bits = a.state == "w" ? 2 * a.n - 2 : a.n;
  const bool pass = r.min_fidelity_over_outcomes >= 1.0 - 1e-10 &&
                    r.total_bits == expected_bits;

  detail::json results = detail::report_json(r);
  results["expected_total_bits"] = expected_bits;
  results["pass"] = pass;
  const detail::json doc = detail::report_document(
      "verify",
      {{"state", a.state}, {"n", a.n}, {"corrupt_node", a.corrupt_node}},
      results, timer.elapsed_ms());

  std::ostringstream human;
  human << "protocol        " << r.protocol << "\n"
        << "nodes           " << r.n_end << "\n"
        << "bits per node   " << detail::join_ints(r.bits_per_node) << "\n"
        << "total bits      " << r.total_bits << " (expected " << expected_bits
        << ")\n"
        << "central memory  " << r.central_memory_qubits << " qubits\n"
        << "end memory      " << r.end_memory_qubits << " qubits\n"
        << std::setprecision(15) << "min fidelity    "
        << r.min_fidelity_over_outcomes << "\n"
        << std::setprecision(3) << "max prob dev    " << r.max_prob_deviation
        << "\n";
  if (!r.note.empty()) human << "note            " << r.note << "\n";
  human << "result          " << (pass ? "PASS" : "FAIL") << "\n";

  if (!detail::emit_report(doc, a.out, a.json, os, human.str())) {
    os << "error: cannot write " << a.out << "\n";
    return kExitUsage;
  }
  return pass ? kExitPass : kExitCheckFailed;
}

// ----- compare -------------------------------------------------------------------

inline int cmd_compare(const CompareArgs& a, std::ostream& os) {
  if (a.n < 2 || a.n > 12) {
    os << "error: --n must be between 2 and 12\n";
    return kExitUsage;
  }

  detail::PhaseTimer timer;
  const std::vector<ResourceReport> rows = compare_resources(a.n);

  bool pass = true;
  for (const auto& r : rows) {
    const bool hub = r.protocol == "w" || r.protocol == "ghz";
    const int want_bits = r.protocol == "w"     ? 2 * a.n - 2
                          : r.protocol == "ghz" ? a.n
                                                : 2 * a.n;
    const int want_mem = hub ? a.n : 2 * a.n;
    pass = pass && r.total_bits == want_bits &&
           r.central_memory_qubits == want_mem &&
           r.min_fidelity_over_outcomes >= 1.0 - 1e-10;
  }

  detail::json results;
  results["rows"] = detail::json::array();
  for (const auto& r : rows) results["rows"].push_back(detail::report_json(r));
  results["pass"] = pass;
  const detail::json doc = detail::report_document(
      "compare", {{"n", a.n}}, results, timer.elapsed_ms());

  std::ostringstream human;
  human << "resource comparison, n = " << a.n << "\n";
  human << std::left << std::setw(15) << "protocol" << std::setw(12)
        << "total bits" << std::setw(16) << "central qubits"
        << "min fidelity\n";
  for (const auto& r : rows)
    human << std::left << std::setw(15) << r.protocol << std::setw(12)
          << r.total_bits << std::setw(16) << r.central_memory_qubits
          << std::setprecision(15) << r.min_fidelity_over_outcomes << "\n";
  human << "result " << (pass ? "PASS" : "FAIL") << "\n";

  if (!detail::emit_report(doc, a.out, a.json, os, human.str())) {
    os << "error: cannot write " << a.out << "\n";
    return kExitUsage;
  }
  return pass ? kExitPass : kExitCheckFailed;
}

// ----- run -----------------------------------------------------------------------

inline int cmd_run(const RunArgs& a, std::ostream& os) {
  if (a.state != "w" && a.state != "ghz") {
    os << "error: --state must be w or ghz\n";
    return kExitUsage;
  }
  if (a.n < 2 || a.n > 12) {
    os << "error: --n must be between 2 and 12\n";
    return kExitUsage;
  }
  if (a.shots < 1) {
    os << "error: --shots must be at least 1\n";
    return kExitUsage;
  }

  detail::PhaseTimer timer;
  const AllocationProtocol p = detail::protocol_for(a.state, a.n);
  const SampledRun run = run_sampled(p, a.shots, a.seed);

  detail::json histogram = detail::json::object();
  for (const auto& [outcome, count] : run.histogram)
    histogram[Outcome::from_integer(p.n_central, outcome).to_string()] = count;

  detail::json traces = detail::json::array();
  for (const auto& t : run.traces) {
    detail::json msgs = detail::json::array();
    for (const auto& m : t.messages)
      msgs.push_back(
          {{"node", m.node}, {"alpha", m.alpha}, {"bits", m.bit_width}});
    traces.push_back({{"outcome", t.outcome.to_string()},
                      {"probability", t.probability},
                      {"messages", std::move(msgs)},
                      {"recovery", t.recovery_applied},
                      {"fidelity", t.fidelity_to_target}});
  }
  const detail::json doc = detail::report_document(
      "run",
      {{"state", a.state}, {"n", a.n}, {"shots", a.shots}, {"seed", a.seed}},
      {{"histogram", std::move(histogram)}, {"traces", std::move(traces)}},
      timer.elapsed_ms());

  std::ostringstream human;
  human << "sampled " << a.shots << " shot(s), seed " << a.seed << "\n";
  for (const auto& [outcome, count] : run.histogram)
    human << "  s=" << Outcome::from_integer(p.n_central, outcome).to_string()
          << "  count " << std::setw(7) << count << "  freq "
          << std::setprecision(5)
          << count / static_cast<double>(a.shots) << "\n";
  for (const auto& t : run.traces) {
    human << "trace s=" << t.outcome.to_string() << "  fidelity "
          << std::setprecision(12) << t.fidelity_to_target << "\n";
    for (std::size_t i = 0; i < t.messages.size(); ++i)
      human << "  node " << t.messages[i].node << ": alpha "
            << t.messages[i].alpha << " (" << t.messages[i].bit_width
            << " bit) -> " << t.recovery_applied[i] << "\n";
  }

  if (!detail::emit_report(doc, a.out, a.json, os, human.str())) {
    os << "error: cannot write " << a.out << "\n";
    return kExitUsage;
  }
  return kExitPass;
}

// ----- circuit -------------------------------------------------------------------

inline int cmd_circuit(const CircuitArgs& a, std::ostream& os) {
  if (a.format != "gatelist-v1") {
    os << "error: --format must be gatelist-v1\n";
    return kExitUsage;
  }
  std::string variant = a.variant;
  if (variant.empty()) variant = a.state == "ghz" ? "ghz" : "recursive";

  Circuit c;
  double max_dev = 0.0;
  if (a.state == "w" && variant == "recursive") {
    if (a.n < 2 || a.n > 10) {
      os << "error: recursive variant supports 2 <= n <= 10\n";
      return kExitUsage;
    }
    c = w_circuit_recursive(a.n);
  } else if (a.state == "w" && variant == "direct") {
    if (a.n < 2 || a.n > 8) {
      os << "error: direct variant supports 2 <= n <= 8\n";
      return kExitUsage;
    }
    c = Circuit(a.n, "w_direct_n" + std::to_string(a.n));
    std::vector<int> all(a.n);
    for (int i = 0; i < a.n; ++i) all[i] = i;
    c.add(GateOp::unitary(build_w_unitary(a.n), all));
  } else if (a.state == "w" && variant == "ladder3") {
    if (a.n != 3) {
      os << "error: ladder3 is a fixed 3-node construction\n";
      return kExitUsage;
    }
    c = w_circuit_n3_ladder();
  } else if (a.state == "ghz" && variant == "ghz") {
    if (a.n < 2 || a.n > 12) {
      os << "error: --n must be between 2 and 12\n";
      return kExitUsage;
    }
    c = ghz_circuit(a.n);
  } else {
    os << "error: unsupported state/variant combination\n";
    return kExitUsage;
  }

  detail::PhaseTimer timer;
  // Equivalence gate before anything is written.
  if (a.state == "w") {
    max_dev = max_abs_diff_up_to_phase(circuit_to_matrix(c),
                                       build_w_unitary(a.n));
  } else {
    // Stream the fan-out columns against their two-term closed form.
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << a.n); ++s) {
      const auto out = apply_circuit(make_basis_state(a.n, s), c);
      const std::uint64_t half = std::uint64_t{1} << (a.n - 1);
      const bool s1 = (s & half) != 0;
      const std::uint64_t rest = (s1 ? ~s : s) & (half - 1);
      const double amp = 1.0 / std::sqrt(2.0);
      for (std::uint64_t i = 0; i < out.dim(); ++i) {
        cplx want{};
        if (i == rest) want = amp;
        if (i == (half | rest)) want = s1 ? -amp : amp;
        max_dev = std::max(max_dev, std::abs(out.amplitude(i) - want));
      }
    }
  }
  const bool pass = max_dev < 1e-9;

  const std::string text = export_circuit(c, a.format);
  detail::json results = {{"name", c.name},
                          {"qubits", c.num_qubits},
                          {"ops", c.ops.size()},
                          {"max_deviation", max_dev},
                          {"pass", pass}};

  std::ostringstream human;
  if (pass && !a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) {
      os << "error: cannot write " << a.out << "\n";
      return kExitUsage;
    }
    f << text;
    human << "wrote " << a.out << " (" << c.ops.size() << " ops, max deviation "
          << std::setprecision(3) << max_dev << ")\n";
    results["out"] = a.out;
  } else if (pass) {
    human << text;
  } else {
    human << "equivalence check failed: max deviation "
          << std::setprecision(6) << max_dev << "\n";
  }

  const detail::json doc = detail::report_document(
      "circuit",
      {{"state", a.state}, {"n", a.n}, {"variant", variant},
       {"format", a.format}},
      results, timer.elapsed_ms());
  if (a.json)
    os << doc.dump(2) << "\n";
  else
    os << human.str();
  return pass ? kExitPass : kExitCheckFailed;
}

// ----- blockenc ------------------------------------------------------------------

inline int cmd_blockenc(const BlockencArgs& a, std::ostream& os) {
  if (a.n < 2 || a.n > 6) {
    os << "error: --n must be between 2 and 6\n";
    return kExitUsage;
  }

  detail::PhaseTimer timer;
  const BlockEncodingResult res = lcu_block_encoding(a.n);
  const auto& cert = res.certificate;

  const double want = 1.0 / std::sqrt(static_cast<double>(a.n));
  bool sv_ok = true;
  for (double sv : cert.singular_values)
    sv_ok = sv_ok && std::abs(sv - want) < 1e-9;
  const bool pass = cert.max_block_deviation < 1e-9 && sv_ok;

  const detail::json doc = detail::report_document(
      "blockenc", {{"n", a.n}},
      {{"n_system", cert.n_system},
       {"n_ancilla", cert.n_ancilla},
       {"circuit_qubits", res.circuit.num_qubits},
       {"circuit_ops", res.circuit.ops.size()},
       {"subnormalization", cert.subnormalization},
       {"expected_subnormalization", want},
       {"max_block_deviation", cert.max_block_deviation},
       {"singular_values", cert.singular_values},
       {"pass", pass}},
      timer.elapsed_ms());

  std::ostringstream human;
  human << "block encoding, " << a.n << " nodes\n"
        << "system qubits    " << cert.n_system << "\n"
        << "ancilla qubits   " << cert.n_ancilla << "\n"
        << "circuit ops      " << res.circuit.ops.size() << "\n"
        << std::setprecision(12) << "subnormalization " << cert.subnormalization
        << " (expected " << want << ")\n"
        << std::setprecision(3) << "max block dev    "
        << cert.max_block_deviation << "\n"
        << "singular values  " << (sv_ok ? "all 1/sqrt(n) within 1e-9" : "OFF")
        << "\n"
        << "result           " << (pass ? "PASS" : "FAIL") << "\n";

  if (!detail::emit_report(doc, a.out, a.json, os, human.str())) {
    os << "error: cannot write " << a.out << "\n";
    return kExitUsage;
  }
  return pass ? kExitPass : kExitCheckFailed;
}

}  // namespace hubcast::cli

#endif  // HUBCAST_CLI_HPP_
