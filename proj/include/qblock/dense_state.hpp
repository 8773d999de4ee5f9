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
 * Baseline state-vector engine: one flat array of 2^n amplitudes, every gate
 * is a full pass with the stride-2^t pair loop.
 */
#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "detail/kernels.hpp"
#include "errors.hpp"
#include "gates.hpp"
#include "readout.hpp"

namespace qblock {

using Qubit = std::uint32_t;

/// Default cap on register width for freshly allocated states.
inline constexpr unsigned default_max_qubits = 30;

namespace detail {

/// Validates a (target, controls) pair against an n-qubit register and
/// returns the control bitmask.
inline std::uint64_t control_mask(unsigned n, Qubit target,
                                  std::span<const Qubit> controls) {
    if (target >= n) {
        throw IndexError("target qubit " + std::to_string(target) +
                         " out of range for " + std::to_string(n) + " qubits");
    }
    std::uint64_t mask = 0;
    for (const Qubit c : controls) {
        if (c >= n) {
            throw IndexError("control qubit " + std::to_string(c) +
                             " out of range for " + std::to_string(n) +
                             " qubits");
        }
        if (c == target) {
            throw InvalidArgument("control qubit " + std::to_string(c) +
                                  " equals the target");
        }
        mask |= std::uint64_t{1} << c;
    }
    return mask;
}

} // namespace detail

/**
 * @brief Dense n-qubit state vector. Qubit 0 is the least significant bit of
 * the amplitude index.
 *
 * @tparam Real Floating point precision of the amplitudes.
 */
template <std::floating_point Real = double> class DenseState {
  public:
    using complex_type = Complex<Real>;

    /// |0...0> on n qubits; 1 <= n <= max_qubits.
    static DenseState init_zero(unsigned n,
                                unsigned max_qubits = default_max_qubits) {
        if (n < 1 || n > max_qubits || n >= 64) {
            throw CapacityError("init_zero: " + std::to_string(n) +
                                " qubits outside [1, " +
                                std::to_string(max_qubits) + "]");
        }
        std::vector<complex_type> amps(std::size_t{1} << n);
        amps[0] = complex_type{1};
        return DenseState(n, std::move(amps));
    }

    /// Adopts an existing amplitude array; its length must be 2^n, n >= 1.
    static DenseState from_amplitudes(std::vector<complex_type> amps) {
        if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
            throw InvalidArgument(
                "from_amplitudes: length must be a power of two >= 2");
        }
        const auto n = static_cast<unsigned>(std::countr_zero(amps.size()));
        return DenseState(n, std::move(amps));
    }

    [[nodiscard]] unsigned num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const complex_type> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<complex_type> amplitudes() noexcept {
        return amps_;
    }

    void apply_gate(const Gate2x2<Real> &u, Qubit target) {
        apply_controlled(u, target, {});
    }

    /// Applies u to `target` on the subspace where every control bit is 1.
    void apply_controlled(const Gate2x2<Real> &u, Qubit target,
                          std::span<const Qubit> controls) {
        const auto mask = detail::control_mask(n_, target, controls);
        detail::apply_pair_update<Real>(amps_, u, target, mask);
    }

    [[nodiscard]] double norm() const {
        return std::sqrt(detail::squared_norm<Real>(amps_));
    }

    /// |amp_i|^2 for every basis state. Refused above 24 qubits.
    [[nodiscard]] std::vector<Real> probabilities() const {
        if (n_ > max_probability_qubits) {
            throw CapacityError("probabilities: " + std::to_string(n_) +
                                " qubits exceeds the full-readout limit; use "
                                "top_k");
        }
        std::vector<Real> p(amps_.size());
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            p[i] = std::norm(amps_[i]);
        }
        return p;
    }

    /// The k most probable basis states, without materializing all of them.
    [[nodiscard]] std::vector<Peak> top_k(std::size_t k) const {
        TopK acc(k);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            acc.offer(static_cast<double>(std::norm(amps_[i])),
                      [i] { return i; });
        }
        return acc.sorted();
    }

  private:
    DenseState(unsigned n, std::vector<complex_type> amps)
        : n_(n), amps_(std::move(amps)) {}

    unsigned n_;
    std::vector<complex_type> amps_;
};

} // namespace qblock
