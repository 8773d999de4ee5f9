// Copyright 2026 The qblock Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Engine-agnostic circuits, the QPE benchmark builder and the inverse QFT.
 */
#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_set>
#include <vector>

#include "dense_state.hpp"
#include "errors.hpp"
#include "gates.hpp"

namespace qblock {

enum class GateKind { H, X, P, U };

/**
 * @brief One circuit step: a 2x2 gate on `target`, conditioned on `controls`.
 *
 * The matrix is kept in double precision and narrowed when a run starts, so
 * one Circuit drives either precision.
 */
struct GateOp {
    GateKind kind{GateKind::U};
    double theta{0.0}; ///< only meaningful for GateKind::P
    Gate2x2<double> u{};
    Qubit target{0};
    std::vector<Qubit> controls{};

    static GateOp h(Qubit t) { return {GateKind::H, 0.0, hadamard(), t, {}}; }
    static GateOp x(Qubit t) { return {GateKind::X, 0.0, pauli_x(), t, {}}; }
    static GateOp p(double theta, Qubit t, std::vector<Qubit> controls = {}) {
        return {GateKind::P, theta, phase(theta), t, std::move(controls)};
    }
    static GateOp custom(const Gate2x2<double> &u, Qubit t,
                         std::vector<Qubit> controls = {}) {
        if (!u.is_unitary()) {
            throw InvalidArgument("GateOp: matrix is not unitary");
        }
        return {GateKind::U, 0.0, u, t, std::move(controls)};
    }

    [[nodiscard]] GateOp adjoint() const {
        GateOp out = *this;
        if (kind == GateKind::P) {
            out.theta = -theta;
            out.u = phase(-theta);
        } else {
            out.u = u.adjoint();
        }
        return out;
    }
};

/// Ordered gate list over a fixed number of logical qubits.
class Circuit {
  public:
    explicit Circuit(unsigned n) : n_(n) {
        if (n < 1) {
            throw InvalidArgument("Circuit: needs at least one qubit");
        }
    }

    /// Appends an op; every index must be < n and the target not a control.
    Circuit &add(GateOp op) {
        detail::control_mask(n_, op.target, op.controls);
        ops_.push_back(std::move(op));
        return *this;
    }

    Circuit &append(const std::vector<GateOp> &ops) {
        for (const auto &op : ops) {
            add(op);
        }
        return *this;
    }

    [[nodiscard]] unsigned num_qubits() const noexcept { return n_; }
    [[nodiscard]] const std::vector<GateOp> &ops() const noexcept { return ops_; }
    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }

  private:
    unsigned n_;
    std::vector<GateOp> ops_;
};

/// Reversed sequence of adjoint gates.
inline std::vector<GateOp> adjoint(const std::vector<GateOp> &ops) {
    std::vector<GateOp> out;
    out.reserve(ops.size());
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        out.push_back(it->adjoint());
    }
    return out;
}

/**
 * @brief Inverse QFT over `qubits`, without the final register reversal.
 *
 * qubits[k] is expected to carry the phase x / 2^(k+1) (the first entry gets
 * the highest controlled power in QPE). The schedule processes qubits[0]
 * first: phase corrections from every already decoded qubit, then H. After it
 * runs qubits[k] holds bit k of x, i.e. qubits[0] is the least significant.
 */
inline std::vector<GateOp> inverse_qft(const std::vector<Qubit> &qubits) {
    std::unordered_set<Qubit> seen;
    for (const Qubit q : qubits) {
        if (!seen.insert(q).second) {
            throw InvalidArgument("inverse_qft: duplicate qubit " +
                                  std::to_string(q));
        }
    }
    std::vector<GateOp> ops;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            const double angle = -std::numbers::pi / double(std::uint64_t{1} << (k - j));
            ops.push_back(GateOp::p(angle, qubits[k], {qubits[j]}));
        }
        ops.push_back(GateOp::h(qubits[k]));
    }
    return ops;
}

/// Forward QFT matching inverse_qft's conventions.
inline std::vector<GateOp> qft(const std::vector<Qubit> &qubits) {
    return adjoint(inverse_qft(qubits));
}

/**
 * @brief Quantum phase estimation of U = P(2*pi*2^-n) on n counting qubits.
 *
 * Layout: counting qubits 0..n-1 (qubit 0 is the top wire, controlling
 * U^(2^(n-1))), eigenstate qubit n prepared in |1> with X. The estimated phase
 * is 2^-n, so the counting register ends in value 1: qubit 0 set, the rest
 * clear. See counting_bitstring().
 */
inline Circuit qpe_circuit(unsigned n) {
    if (n < 1 || n > 62) {
        throw InvalidArgument("qpe_circuit: counting qubits must be in [1, 62]");
    }
    Circuit c(n + 1);
    const Qubit eigen = n;
    c.add(GateOp::x(eigen));
    for (Qubit k = 0; k < n; ++k) {
        c.add(GateOp::h(k));
    }
    const double theta = 2.0 * std::numbers::pi / double(std::uint64_t{1} << n);
    for (Qubit k = 0; k < n; ++k) {
        const std::uint64_t power = std::uint64_t{1} << (n - 1 - k);
        GateOp op = GateOp::p(theta * double(power), eigen, {k});
        op.u = phase_power(theta, power);
        c.add(std::move(op));
    }
    std::vector<Qubit> counting(n);
    for (Qubit k = 0; k < n; ++k) {
        counting[k] = k;
    }
    c.append(inverse_qft(counting));
    return c;
}

/// Value of the n-qubit counting register (qubit k has weight 2^k).
inline std::uint64_t counting_value(std::uint64_t index, unsigned n) {
    return index & ((std::uint64_t{1} << n) - 1);
}

/// Counting register as a bitstring, most significant bit first.
inline std::string counting_bitstring(std::uint64_t index, unsigned n) {
    std::string s(n, '0');
    for (unsigned k = 0; k < n; ++k) {
        if ((index >> k) & 1u) {
            s[n - 1 - k] = '1';
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Text dump
//
//   QUBITS <n>
//   GATE <name> <target> [controls...] [params...]
//
// H and X take no parameters, P takes theta, U takes the eight reals
// re/im of u11 u12 u21 u22. Blank lines and '#' comments are ignored.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string format_real(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

inline double parse_real(std::string_view tok, std::size_t line) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw InvalidArgument("circuit dump line " + std::to_string(line) +
                              ": bad number '" + std::string(tok) + "'");
    }
    return v;
}

inline Qubit parse_qubit(std::string_view tok, std::size_t line) {
    Qubit v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw InvalidArgument("circuit dump line " + std::to_string(line) +
                              ": bad qubit index '" + std::string(tok) + "'");
    }
    return v;
}

} // namespace detail

inline void write_circuit(std::ostream &os, const Circuit &c) {
    os << "QUBITS " << c.num_qubits() << '\n';
    for (const auto &op : c.ops()) {
        static constexpr const char *names[] = {"H", "X", "P", "U"};
        os << "GATE " << names[static_cast<int>(op.kind)] << ' ' << op.target;
        for (const Qubit q : op.controls) {
            os << ' ' << q;
        }
        if (op.kind == GateKind::P) {
            os << ' ' << detail::format_real(op.theta);
        } else if (op.kind == GateKind::U) {
            for (const auto &z : {op.u.u11, op.u.u12, op.u.u21, op.u.u22}) {
                os << ' ' << detail::format_real(z.real()) << ' '
                   << detail::format_real(z.imag());
            }
        }
        os << '\n';
    }
}

inline Circuit read_circuit(std::istream &is) {
    std::string line;
    std::size_t lineno = 0;
    std::vector<GateOp> ops;
    unsigned n = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) {
            tok.push_back(std::move(t));
        }
        if (tok.empty()) {
            continue;
        }
        if (tok[0] == "QUBITS" && tok.size() == 2 && n == 0) {
            n = detail::parse_qubit(tok[1], lineno);
            continue;
        }
        if (tok[0] != "GATE" || tok.size() < 3) {
            throw InvalidArgument("circuit dump line " + std::to_string(lineno) +
                                  ": expected 'GATE name target ...'");
        }
        const std::string &name = tok[1];
        std::size_t nparams = 0;
        if (name == "P") {
            nparams = 1;
        } else if (name == "U") {
            nparams = 8;
        } else if (name != "H" && name != "X") {
            throw InvalidArgument("circuit dump line " + std::to_string(lineno) +
                                  ": unknown gate '" + name + "'");
        }
        if (tok.size() < 3 + nparams) {
            throw InvalidArgument("circuit dump line " + std::to_string(lineno) +
                                  ": missing parameters for " + name);
        }
        const Qubit target = detail::parse_qubit(tok[2], lineno);
        std::vector<Qubit> controls;
        for (std::size_t i = 3; i < tok.size() - nparams; ++i) {
            controls.push_back(detail::parse_qubit(tok[i], lineno));
        }
        std::vector<double> params;
        for (std::size_t i = tok.size() - nparams; i < tok.size(); ++i) {
            params.push_back(detail::parse_real(tok[i], lineno));
        }
        GateOp op;
        if (name == "H") {
            op = GateOp::h(target);
        } else if (name == "X") {
            op = GateOp::x(target);
        } else if (name == "P") {
            op = GateOp::p(params[0], target);
        } else {
            op = GateOp::custom({{params[0], params[1]},
                                 {params[2], params[3]},
                                 {params[4], params[5]},
                                 {params[6], params[7]}},
                                target);
        }
        op.controls = std::move(controls);
        ops.push_back(std::move(op));
    }
    if (n == 0) {
        throw InvalidArgument("circuit dump: missing 'QUBITS n' header");
    }
    Circuit c(n);
    c.append(ops);
    return c;
}

} // namespace qblock
