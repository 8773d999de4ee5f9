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
 * Drives a Circuit through either engine and collects the readout.
 */
#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "blocked_state.hpp"
#include "circuit.hpp"
#include "dense_state.hpp"
#include "readout.hpp"

namespace qblock {

enum class EngineKind { Dense, Blocked };

struct EngineConfig {
    EngineKind kind{EngineKind::Dense};
    unsigned local{0}; ///< block size exponent l, blocked engine only

    static EngineConfig dense() { return {EngineKind::Dense, 0}; }
    static EngineConfig blocked(unsigned l) { return {EngineKind::Blocked, l}; }
};

struct RunOptions {
    /// Materialize all 2^n probabilities when n <= max_probability_qubits.
    bool full_probabilities = true;
    std::size_t top_k = 1;
    unsigned max_qubits = default_max_qubits;
    RecencyPolicy recency = RecencyPolicy::TargetOnly;
};

template <std::floating_point Real> struct RunResult {
    std::vector<Real> probabilities; ///< logical order; empty when not requested
    std::vector<Peak> top;           ///< most probable logical basis states
    Metrics metrics;
    double norm{0.0};
};

/**
 * Runs `c` from |0...0>. The wall time covers allocation, every gate and the
 * readout.
 */
template <std::floating_point Real = double>
RunResult<Real> run(const Circuit &c, EngineConfig engine,
                    const RunOptions &opts = {}) {
    using clock = std::chrono::steady_clock;
    const unsigned n = c.num_qubits();
    const bool full = opts.full_probabilities && n <= max_probability_qubits;

    RunResult<Real> out;
    const auto start = clock::now();
    if (engine.kind == EngineKind::Dense) {
        auto s = DenseState<Real>::init_zero(n, opts.max_qubits);
        for (const auto &op : c.ops()) {
            s.apply_controlled(op.u.cast<Real>(), op.target, op.controls);
        }
        if (full) {
            out.probabilities = s.probabilities();
        }
        out.top = s.top_k(opts.top_k);
        out.norm = s.norm();
        out.metrics.gate_count = c.size();
    } else {
        BlockedState<Real> s(n, engine.local,
                             {opts.recency, opts.max_qubits});
        for (const auto &op : c.ops()) {
            s.enqueue(op.u.cast<Real>(), op.target, op.controls);
        }
        if (full) {
            out.probabilities = s.logical_probabilities();
        }
        out.top = s.logical_top_k(opts.top_k);
        out.norm = s.norm();
        out.metrics = s.metrics();
    }
    const std::chrono::duration<double> elapsed = clock::now() - start;
    out.metrics.wall_time = elapsed.count();
    return out;
}

} // namespace qblock
