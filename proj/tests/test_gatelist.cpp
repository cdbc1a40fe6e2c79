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
#include <sstream>

#include "hubcast/gatelist.hpp"
#include "hubcast/protocols.hpp"

using namespace hubcast;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) out.push_back(l);
  return out;
}

void check_roundtrip(const Circuit& c) {
  const Circuit back = parse_circuit(export_circuit(c, "gatelist-v1"));
  REQUIRE(back.num_qubits == c.num_qubits);
  REQUIRE(back.ops.size() == c.ops.size());
  CHECK(max_abs_diff(circuit_to_matrix(back), circuit_to_matrix(c)) < 1e-15);
}

}  // namespace

TEST_CASE("export writes the documented plain-gate lines") {
  Circuit c;
  c.num_qubits = 2;
  c.add(GateOp::h(0));
  c.add(GateOp::ry(std::acos(-1.0) / 2.0, 1));
  const auto ls = lines_of(export_circuit(c, "gatelist-v1"));
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "# gatelist-v1");
  CHECK(ls[1] == "qubits 2");
  CHECK(ls[2] == "h q0");
  CHECK(ls[3] == "ry(1.5707963267948966) q1");
}

TEST_CASE("export writes name header and control prefixes") {
  Circuit c;
  c.num_qubits = 3;
  c.name = "demo";
  c.add(GateOp::cx(0, 1));
  c.add(GateOp::x(2).controlled_on(1, false).controlled_on(0, true));
  const auto ls = lines_of(export_circuit(c, "gatelist-v1"));
  REQUIRE(ls.size() == 5);
  CHECK(ls[1] == "name demo");
  CHECK(ls[2] == "qubits 3");
  CHECK(ls[3] == "cx q0,q1");
  CHECK(ls[4] == "cox q0,q1,q2");
}

TEST_CASE("unsupported format name is rejected") {
  Circuit c;
  c.num_qubits = 1;
  CHECK_THROWS_AS(export_circuit(c, "gatelist-v2"), argument_error);
  CHECK_THROWS_AS(export_circuit(c, "qasm"), argument_error);
}

TEST_CASE("parse understands comments, blank lines and mixed controls") {
  const std::string text =
      "# gatelist-v1\n"
      "\n"
      "name scratch  # trailing comment\n"
      "qubits 3\n"
      "cox q0,q1,q2   # fires when q0=1 and q1=0\n";
  const Circuit c = parse_circuit(text);
  CHECK(c.name == "scratch");
  REQUIRE(c.ops.size() == 1);

  // |100>: q0=1, q1=0 -> target flips to give |101>.
  auto s = apply_circuit(make_basis_state(3, 4), c);
  CHECK(s.amplitude(5) == cplx{1.0});
  // |110>: open control fails -> unchanged.
  s = apply_circuit(make_basis_state(3, 6), c);
  CHECK(s.amplitude(6) == cplx{1.0});
}

TEST_CASE("generated circuits survive a text round-trip") {
  check_roundtrip(ghz_circuit(3));
  check_roundtrip(w_circuit_recursive(3));
  check_roundtrip(w_circuit_recursive(4));
  check_roundtrip(w_circuit_n3_ladder());
  check_roundtrip(comparator_circuit(2));
  check_roundtrip(uniform_prep_circuit(5));

  Circuit with_payload;
  with_payload.num_qubits = 3;
  with_payload.add(GateOp::ry(0.12345678901234567, 0));
  with_payload.add(
      GateOp::unitary(build_w_unitary(2), {1, 2}).controlled_on(0, false));
  check_roundtrip(with_payload);
}

TEST_CASE("parameter text preserves doubles exactly") {
  Circuit c;
  c.num_qubits = 1;
  const double theta = 2.0 * std::acos(std::sqrt(2.0 / 3.0));
  c.add(GateOp::ry(theta, 0));
  const Circuit back = parse_circuit(export_circuit(c, "gatelist-v1"));
  CHECK(back.ops[0].param == theta);  // bitwise equality, not approximate
}

TEST_CASE("parse rejects malformed input with line numbers") {
  CHECK_THROWS_AS(parse_circuit("h q0\n"), validation_error);  // no header
  CHECK_THROWS_AS(parse_circuit("qubits 0\n"), validation_error);
  CHECK_THROWS_AS(parse_circuit("qubits two\n"), validation_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nfoo q0\n"), validation_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nh\n"), validation_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nh q7\n"), validation_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nh q0,q1\n"), validation_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\ncx q0,q0\n"), validation_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nry q0\n"), validation_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nry(0.5,0.5) q0\n"),
                  validation_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nry(half) q0\n"), validation_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nh 0\n"), validation_error);
  CHECK_THROWS_AS(parse_circuit("qubits 1\nu(1,0,0,0,0,0,2,0) q0\n"),
                  validation_error);  // non-unitary payload
  CHECK_THROWS_AS(parse_circuit("qubits 1\nu(1,0) q0\n"), validation_error);
  CHECK_NOTHROW(parse_circuit("qubits 1\n"));  // header-only file is valid
}

TEST_CASE("empty op list round-trips") {
  Circuit c;
  c.num_qubits = 4;
  c.name = "empty";
  const Circuit back = parse_circuit(export_circuit(c, "gatelist-v1"));
  CHECK(back.num_qubits == 4);
  CHECK(back.ops.empty());
  CHECK(back.name == "empty");
}
