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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "hubcast/hubsim.hpp"
#include "test_util.hpp"

using namespace hubcast;

TEST_CASE("hub topology layout") {
  const auto t = hub_topology(4);
  CHECK(t.central_indices == std::vector<int>{0, 1, 2, 3});
  CHECK(t.end_indices == std::vector<int>{4, 5, 6, 7});
  CHECK_THROWS_AS(hub_topology(0), argument_error);
}

TEST_CASE("W protocol runs exactly on every branch") {
  const auto traces = run_all_outcomes(build_w_protocol(3));
  REQUIRE(traces.size() == 8);
  const auto w3 = make_w_state(3);
  double total_prob = 0.0;
  for (const auto& t : traces) {
    CHECK(std::abs(t.probability - 0.125) < 1e-12);
    CHECK(t.fidelity_to_target >= 1.0 - 1e-10);
    CHECK(equal_up_to_global_phase(t.final_end_state, w3, 1e-9));
    total_prob += t.probability;

    // One-way structure: exactly one message per end node, addressed to it.
    REQUIRE(t.messages.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(t.messages[i].node == i);
    CHECK(t.messages[0].bit_width == 1);
    CHECK(t.messages[1].bit_width == 1);
    CHECK(t.messages[2].bit_width == 2);
  }
  CHECK(std::abs(total_prob - 1.0) < 1e-10);

  // Outcomes arrive in ascending order; s = 110 is trace 6.
  const auto& t6 = traces[6];
  CHECK(t6.outcome.as_integer == 6);
  CHECK(t6.recovery_applied == std::vector<std::string>{"XZ", "X", "Z"});
  CHECK(t6.messages[2].alpha == 3);
}

TEST_CASE("GHZ protocol runs exactly on every branch") {
  const auto traces = run_all_outcomes(build_ghz_protocol(4));
  REQUIRE(traces.size() == 16);
  const auto g4 = make_ghz_state(4);
  for (const auto& t : traces) {
    CHECK(std::abs(t.probability - 1.0 / 16.0) < 1e-12);
    CHECK(t.fidelity_to_target >= 1.0 - 1e-10);
    CHECK(equal_up_to_global_phase(t.final_end_state, g4, 1e-9));
  }
}

TEST_CASE("teleport baseline runs exactly on every branch") {
  SECTION("entangled two-qubit target") {
    const auto target = make_bell_pairs(1, BellLayout::grouped(1));
    const auto traces = run_all_outcomes(build_teleport_protocol(2, target));
    REQUIRE(traces.size() == 16);
    for (const auto& t : traces) {
      CHECK(std::abs(t.probability - 1.0 / 16.0) < 1e-12);
      CHECK(t.fidelity_to_target >= 1.0 - 1e-10);
    }
  }
  SECTION("single qubit |+>") {
    const auto plus = apply_gate(make_basis_state(1, 0), GateOp::h(0));
    const auto traces = run_all_outcomes(build_teleport_protocol(1, plus));
    REQUIRE(traces.size() == 4);
    for (const auto& t : traces) {
      CHECK(t.fidelity_to_target >= 1.0 - 1e-10);
      CHECK(equal_up_to_global_phase(t.final_end_state, plus, 1e-9));
    }
  }
}

TEST_CASE("direct and analytic paths agree branch by branch") {
  auto cross_check = [](const AllocationProtocol& p) {
    std::vector<Statevector> direct_states;
    std::vector<double> direct_probs;
    for_each_outcome(p, ExecutionPath::kDirect,
                     [&](const Outcome&, double prob, Statevector s) {
                       direct_states.push_back(std::move(s));
                       direct_probs.push_back(prob);
                     });
    std::size_t k = 0;
    for_each_outcome(p, ExecutionPath::kIdentity,
                     [&](const Outcome&, double prob, Statevector s) {
                       REQUIRE(k < direct_states.size());
                       CHECK(std::abs(prob - direct_probs[k]) < 1e-12);
                       CHECK(equal_up_to_global_phase(s, direct_states[k],
                                                      1e-10));
                       ++k;
                     });
    CHECK(k == direct_states.size());
  };
  for (int n = 2; n <= 6; ++n) {
    cross_check(build_w_protocol(n));
    cross_check(build_ghz_protocol(n));
  }
  cross_check(build_teleport_protocol(2, make_w_state(2)));
  cross_check(build_teleport_protocol(3, make_w_state(3)));
  cross_check(build_teleport_protocol(3, make_ghz_state(3)));
}

TEST_CASE("verify_exactness fills the report") {
  SECTION("documented W and GHZ rows at n=8") {
    const auto w = verify_exactness(build_w_protocol(8));
    CHECK(w.min_fidelity_over_outcomes >= 1.0 - 1e-10);
    CHECK(w.total_bits == 14);
    CHECK(w.max_prob_deviation < 1e-10);

    const auto g = verify_exactness(build_ghz_protocol(8));
    CHECK(g.min_fidelity_over_outcomes >= 1.0 - 1e-10);
    CHECK(g.total_bits == 8);
  }
  SECTION("each execution path separately") {
    for (auto path : {ExecutionPath::kDirect, ExecutionPath::kIdentity}) {
      const auto r = verify_exactness(build_w_protocol(5), path);
      CHECK(r.min_fidelity_over_outcomes >= 1.0 - 1e-10);
      CHECK(r.max_prob_deviation < 1e-10);
    }
  }
  SECTION("analytic path reaches sizes the joint register cannot") {
    const auto r = verify_exactness(build_w_protocol(11));  // sparse sweep
    CHECK(r.min_fidelity_over_outcomes >= 1.0 - 1e-10);
    CHECK(r.total_bits == 20);
    CHECK_THROWS_AS(verify_exactness(build_w_protocol(11),
                                     ExecutionPath::kDirect),
                    resource_error);
  }
  SECTION("teleport rows, both sweep flavors") {
    const auto small = verify_exactness(
        build_teleport_protocol(4, make_w_state(4)));
    CHECK(small.min_fidelity_over_outcomes >= 1.0 - 1e-10);
    CHECK(small.total_bits == 8);

    const auto big = verify_exactness(
        build_teleport_protocol(8, make_ghz_state(8)));  // sparse sweep
    CHECK(big.min_fidelity_over_outcomes >= 1.0 - 1e-10);
    CHECK(big.total_bits == 16);
  }
}

TEST_CASE("corrupted recoveries are caught") {
  for (int node = 0; node < 3; ++node) {
    const auto p = corrupt_recovery(build_w_protocol(3), node);
    const auto r = verify_exactness(p);
    CHECK(r.min_fidelity_over_outcomes < 0.999);
  }
  const auto g = verify_exactness(corrupt_recovery(build_ghz_protocol(3), 1));
  CHECK(g.min_fidelity_over_outcomes < 0.999);
  const auto t = verify_exactness(
      corrupt_recovery(build_teleport_protocol(2, make_w_state(2)), 0));
  CHECK(t.min_fidelity_over_outcomes < 0.999);
  // The corruption also shows up on the sparse analytic sweep.
  const auto big = verify_exactness(corrupt_recovery(build_w_protocol(11), 5));
  CHECK(big.min_fidelity_over_outcomes < 0.999);

  CHECK_THROWS_AS(corrupt_recovery(build_w_protocol(3), 3), argument_error);
}

TEST_CASE("resource comparison table") {
  SECTION("n=5 row values") {
    const auto rows = compare_resources(5);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].protocol == "w");
    CHECK(rows[0].total_bits == 8);
    CHECK(rows[0].central_memory_qubits == 5);
    CHECK(rows[1].protocol == "ghz");
    CHECK(rows[1].total_bits == 5);
    CHECK(rows[1].central_memory_qubits == 5);
    CHECK(rows[2].protocol == "teleport(w)");
    CHECK(rows[2].total_bits == 10);
    CHECK(rows[2].central_memory_qubits == 10);
    CHECK(rows[3].protocol == "teleport(ghz)");
    for (const auto& r : rows)
      CHECK(r.min_fidelity_over_outcomes >= 1.0 - 1e-10);
  }
  SECTION("n=3 and the degenerate n=2") {
    CHECK(compare_resources(3)[0].total_bits == 4);
    const auto rows2 = compare_resources(2);
    CHECK(rows2[0].total_bits == 2);
    CHECK(rows2[0].central_memory_qubits == 2);
    CHECK_FALSE(rows2[0].note.empty());  // extension flag
  }
  SECTION("cost lower bound") {
    for (int n = 2; n <= 8; ++n)
      for (const auto& r : compare_resources(n)) CHECK(r.total_bits >= n);
  }
  CHECK_THROWS_AS(compare_resources(1), argument_error);
  CHECK_THROWS_AS(compare_resources(13), argument_error);
}

TEST_CASE("pre-recovery branch states form an orthonormal family") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& p : {build_w_protocol(n), build_ghz_protocol(n)}) {
      std::vector<Statevector> states;
      for_each_outcome(p, ExecutionPath::kDirect,
                       [&](const Outcome&, double, Statevector s) {
                         states.push_back(std::move(s));
                       });
      REQUIRE(states.size() == std::size_t{1} << n);
      for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i; j < states.size(); ++j) {
          const cplx ip = inner_product(states[i], states[j]);
          const double want = i == j ? 1.0 : 0.0;
          CHECK(std::abs(ip - cplx{want}) < 1e-9);
        }
    }
  }
}

TEST_CASE("sampling") {
  const auto p = build_w_protocol(3);
  SECTION("seeded runs are reproducible") {
    const auto a = run_sampled(p, 500, 99);
    const auto b = run_sampled(p, 500, 99);
    CHECK(a.histogram == b.histogram);
    REQUIRE(a.traces.size() == b.traces.size());
  }
  SECTION("single shot yields a single trace") {
    const auto one = run_sampled(p, 1, 7);
    CHECK(one.traces.size() == 1);
    int total = 0;
    for (const auto& [outcome, count] : one.histogram) total += count;
    CHECK(total == 1);
  }
  SECTION("empirical frequencies approach the Born values") {
    const int shots = 80000;
    const auto run = run_sampled(p, shots, 4242);
    int total = 0;
    for (const auto& [outcome, count] : run.histogram) {
      CHECK(std::abs(count / double(shots) - 0.125) < 0.01);
      total += count;
    }
    CHECK(total == shots);
    for (const auto& t : run.traces)
      CHECK(t.fidelity_to_target >= 1.0 - 1e-10);
  }
  CHECK_THROWS_AS(run_sampled(p, 0, 1), argument_error);
}

TEST_CASE("oversized enumerations are refused") {
  CHECK_THROWS_AS(run_all_outcomes(build_teleport_protocol(9, make_w_state(9))),
                  resource_error);
}
