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

#ifndef HUBCAST_GATELIST_HPP_
#define HUBCAST_GATELIST_HPP_

// Text serialization of circuits: the `gatelist-v1` format.
//
//   # gatelist-v1            <- first line, identifies the format
//   name ghz_n3              <- optional; circuit display name
//   qubits 3                 <- required before the first op
//   h q0
//   cx q0,q1                 <- 'c' prefix: filled (|1>) control on q0
//   ox q0,q2                 <- 'o' prefix: open (|0>) control on q0
//   ry(1.5707963267948966) q1
//   u(0,0,1,0,1,0,0,0) q0    <- dense payload, row-major re,im pairs
//
// One op per line.  The gate token is `[co]*base` where each prefix letter
// adds one control (in order) bound to the leading qubits of the list; the
// remaining qubits are the base matrix's targets.  Base names are the
// lowercase kind names (i, x, y, z, h, ry, r, u); ry/r carry one parameter,
// u carries 2·4^k parameters for a k-qubit payload.  Parameters are printed
// with 17 significant digits so doubles round-trip exactly.  `#` starts a
// comment anywhere on a line; blank lines are ignored.  Register spans are
// layout metadata, not semantics, and are not serialized: round-trip fidelity
// is defined by matrix equality.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "hubcast/circuits.hpp"
#include "hubcast/common.hpp"
#include "hubcast/statevec.hpp"

namespace hubcast {

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string gate_token(const GateOp& g) {
  std::string tok;
  for (bool v : g.control_values) tok += v ? 'c' : 'o';
  tok += gate_kind_name(g.kind);
  if (g.kind == GateKind::kRy || g.kind == GateKind::kR) {
    tok += '(' + format_double(g.param) + ')';
  } else if (g.kind == GateKind::kUnitary) {
    tok += '(';
    bool first = true;
    for (const cplx& e : g.payload.a) {
      if (!first) tok += ',';
      first = false;
      tok += format_double(e.real()) + ',' + format_double(e.imag());
    }
    tok += ')';
  }
  return tok;
}

}  // namespace detail

/// Renders `c` as gatelist-v1 text.  The only supported format name is
/// "gatelist-v1"; anything else is an argument error.
inline std::string export_circuit(const Circuit& c, const std::string& format) {
  if (format != "gatelist-v1")
    throw argument_error("unsupported circuit format: " + format);
  std::ostringstream out;
  out << "# gatelist-v1\n";
  if (!c.name.empty()) out << "name " << c.name << "\n";
  out << "qubits " << c.num_qubits << "\n";
  for (const GateOp& g : c.ops) {
    out << detail::gate_token(g) << ' ';
    bool first = true;
    for (int q : g.controls) {
      if (!first) out << ',';
      first = false;
      out << 'q' << q;
    }
    for (int q : g.targets) {
      if (!first) out << ',';
      first = false;
      out << 'q' << q;
    }
    out << '\n';
  }
  return out.str();
}

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::vector<double> parse_params(const std::string& body,
                                        std::size_t line_no) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t next = body.find(',', pos);
    if (next == std::string::npos) next = body.size();
    const std::string piece = trim(body.substr(pos, next - pos));
    char* end = nullptr;
    const double v = std::strtod(piece.c_str(), &end);
    if (piece.empty() || end != piece.c_str() + piece.size())
      throw validation_error("line " + std::to_string(line_no) +
                             ": bad numeric parameter '" + piece + "'");
    out.push_back(v);
    pos = next + 1;
  }
  return out;
}

}  // namespace detail

/// Parses gatelist-v1 text back into a Circuit.  Accepts comments and blank
/// lines; rejects malformed ops, unknown gate names, out-of-range qubits and
/// non-unitary payloads with a validation error naming the offending line.
inline Circuit parse_circuit(const std::string& text) {
  Circuit c;
  bool have_qubits = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = detail::trim(raw);
    if (line.empty()) continue;

    auto fail = [&](const std::string& why) -> validation_error {
      return validation_error("line " + std::to_string(line_no) + ": " + why);
    };

    if (line.rfind("name ", 0) == 0) {
      c.name = detail::trim(line.substr(5));
      continue;
    }
    if (line.rfind("qubits ", 0) == 0) {
      const std::string num = detail::trim(line.substr(7));
      char* end = nullptr;
      const long n = std::strtol(num.c_str(), &end, 10);
      if (num.empty() || end != num.c_str() + num.size() || n < 1 || n > 30)
        throw fail("bad qubit count '" + num + "'");
      c.num_qubits = static_cast<int>(n);
      have_qubits = true;
      continue;
    }

    // Op line: `<token> q<i>(,q<j>)*`.
    if (!have_qubits) throw fail("op before qubits header");
    const std::size_t sp = line.find(' ');
    if (sp == std::string::npos) throw fail("missing qubit list");
    std::string tok = detail::trim(line.substr(0, sp));
    const std::string qlist = detail::trim(line.substr(sp + 1));

    std::vector<double> params;
    const std::size_t paren = tok.find('(');
    if (paren != std::string::npos) {
      if (tok.back() != ')') throw fail("unterminated parameter list");
      params = detail::parse_params(
          tok.substr(paren + 1, tok.size() - paren - 2), line_no);
      tok.erase(paren);
    }

    std::size_t n_controls = 0;
    while (n_controls < tok.size() &&
           (tok[n_controls] == 'c' || tok[n_controls] == 'o'))
      ++n_controls;
    const std::string base = tok.substr(n_controls);

    std::vector<int> qubits;
    std::size_t pos = 0;
    while (pos < qlist.size()) {
      std::size_t next = qlist.find(',', pos);
      if (next == std::string::npos) next = qlist.size();
      const std::string piece = detail::trim(qlist.substr(pos, next - pos));
      if (piece.size() < 2 || piece[0] != 'q')
        throw fail("bad qubit reference '" + piece + "'");
      char* end = nullptr;
      const long q = std::strtol(piece.c_str() + 1, &end, 10);
      if (end != piece.c_str() + piece.size() || q < 0)
        throw fail("bad qubit reference '" + piece + "'");
      qubits.push_back(static_cast<int>(q));
      pos = next + 1;
    }
    if (qubits.size() <= n_controls) throw fail("no target qubits");

    GateOp g;
    if (base == "i" || base == "x" || base == "y" || base == "z" ||
        base == "h") {
      if (!params.empty()) throw fail("gate '" + base + "' takes no parameter");
      const int t = qubits.back();
      g = base == "i"   ? GateOp::i(t)
          : base == "x" ? GateOp::x(t)
          : base == "y" ? GateOp::y(t)
          : base == "z" ? GateOp::z(t)
                        : GateOp::h(t);
    } else if (base == "ry" || base == "r") {
      if (params.size() != 1)
        throw fail("gate '" + base + "' takes exactly one parameter");
      g = base == "ry" ? GateOp::ry(params[0], qubits.back())
                       : GateOp::r(params[0], qubits.back());
    } else if (base == "u") {
      const std::size_t n_targets = qubits.size() - n_controls;
      const std::uint64_t dim = std::uint64_t{1} << n_targets;
      if (params.size() != 2 * dim * dim)
        throw fail("matrix payload has wrong entry count");
      Matrix m(dim, dim);
      for (std::uint64_t k = 0; k < dim * dim; ++k)
        m.a[k] = cplx{params[2 * k], params[2 * k + 1]};
      g = GateOp::unitary(std::move(m),
                          std::vector<int>(qubits.begin() + n_controls,
                                           qubits.end()));
    } else {
      throw fail("unknown gate '" + base + "'");
    }

    if (base != "u" && qubits.size() != n_controls + 1)
      throw fail("gate '" + base + "' takes exactly one target");
    for (std::size_t k = 0; k < n_controls; ++k)
      g = g.controlled_on(qubits[n_controls - 1 - k], tok[n_controls - 1 - k] == 'c');

    try {
      detail::validate_gate(c.num_qubits, g);
    } catch (const argument_error& e) {
      throw fail(e.what());
    }
    c.ops.push_back(std::move(g));
  }
  if (!have_qubits) throw validation_error("missing qubits header");
  return c;
}

}  // namespace hubcast

#endif  // HUBCAST_GATELIST_HPP_
