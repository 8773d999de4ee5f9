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
 * Cache-blocked state-vector engine.
 *
 * The 2^n amplitudes are viewed as 2^(n-l) contiguous blocks of 2^l. Physical
 * slots below l are local: a gate on one of them only pairs amplitudes inside
 * a block. Gates whose target is local are queued and later applied block by
 * block, so each block stays cache resident while the whole batch runs over
 * it. A gate whose target sits in a global slot first flushes the queue, then
 * a physical SWAP moves the target into the least recently used local slot.
 * Global controls never move data; they select which blocks a queued gate
 * touches through the block index.
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

#include "dense_state.hpp"
#include "detail/kernels.hpp"
#include "errors.hpp"
#include "gates.hpp"
#include "qubit_map.hpp"
#include "readout.hpp"

namespace qblock {

/// Which local slots an enqueued gate refreshes in the LRU order.
enum class RecencyPolicy {
    TargetOnly,        ///< only the target slot (default)
    TargetAndControls, ///< target and its local control slots
};

struct BlockedOptions {
    RecencyPolicy recency = RecencyPolicy::TargetOnly;
    unsigned max_qubits = default_max_qubits;
};

/// Counters accumulated by an engine over one run.
struct Metrics {
    std::uint64_t swap_count{0};
    std::uint64_t flush_count{0};
    std::uint64_t gate_count{0};
    double wall_time{0.0}; ///< seconds; filled in by the runner

    bool operator==(const Metrics &) const = default;
};

/// A queued gate resolved to physical positions.
template <std::floating_point Real> struct PendingGate {
    Gate2x2<Real> u;
    unsigned target{0};                    ///< local physical slot
    std::uint64_t local_control_mask{0};   ///< bits over local slots
    std::uint64_t global_control_mask{0};  ///< bit (g - l) for global slot g
};

template <std::floating_point Real = double> class BlockedState {
  public:
    using complex_type = Complex<Real>;

    /// |0...0> on n qubits split into blocks of 2^l amplitudes.
    BlockedState(unsigned n, unsigned l, BlockedOptions opts = {})
        : n_(n), l_(l), map_(checked_local(n, l, opts.max_qubits), l),
          options_(opts) {
        amps_.resize(std::size_t{1} << n);
        amps_[0] = complex_type{1};
    }

    /// Adopts amplitudes given in logical order (the map starts as identity).
    static BlockedState from_amplitudes(std::vector<complex_type> amps,
                                        unsigned l, BlockedOptions opts = {}) {
        if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
            throw InvalidArgument(
                "from_amplitudes: length must be a power of two >= 2");
        }
        const auto n = static_cast<unsigned>(std::countr_zero(amps.size()));
        BlockedState s(n, l, opts);
        s.amps_ = std::move(amps);
        return s;
    }

    [[nodiscard]] unsigned num_qubits() const noexcept { return n_; }
    [[nodiscard]] unsigned num_local() const noexcept { return l_; }
    [[nodiscard]] std::size_t block_size() const noexcept {
        return std::size_t{1} << l_;
    }
    [[nodiscard]] std::size_t num_blocks() const noexcept {
        return std::size_t{1} << (n_ - l_);
    }
    [[nodiscard]] const QubitMap &map() const noexcept { return map_; }
    [[nodiscard]] const Metrics &metrics() const noexcept { return metrics_; }
    [[nodiscard]] std::span<const PendingGate<Real>> pending() const noexcept {
        return pending_;
    }
    /// Raw amplitudes in physical order. Pending gates are not applied.
    [[nodiscard]] std::span<const complex_type> physical_amplitudes() const noexcept {
        return amps_;
    }

    /**
     * Queues u on logical `target`, conditioned on logical `controls`.
     * Only the target decides whether a SWAP is needed.
     */
    void enqueue(const Gate2x2<Real> &u, Qubit target,
                 std::span<const Qubit> controls = {}) {
        detail::control_mask(n_, target, controls);

        if (!map_.is_local_slot(map_.physical(target))) {
            flush();
            ensure_local(target);
        }

        // Resolved after any SWAP above, which may have moved a control.
        PendingGate<Real> g{u, map_.physical(target), 0, 0};
        for (const Qubit c : controls) {
            const unsigned slot = map_.physical(c);
            if (map_.is_local_slot(slot)) {
                g.local_control_mask |= std::uint64_t{1} << slot;
                if (options_.recency == RecencyPolicy::TargetAndControls) {
                    map_.touch(slot);
                }
            } else {
                g.global_control_mask |= std::uint64_t{1} << (slot - l_);
            }
        }
        map_.touch(g.target);
        pending_.push_back(g);
        ++metrics_.gate_count;
    }

    /// Applies every queued gate, one block at a time, in enqueue order.
    void flush() {
        if (pending_.empty()) {
            return;
        }
        const std::size_t bsize = block_size();
        const std::size_t nblocks = num_blocks();
        for (std::size_t b = 0; b < nblocks; ++b) {
            std::span<complex_type> block(amps_.data() + b * bsize, bsize);
            for (const auto &g : pending_) {
                if ((b & g.global_control_mask) != g.global_control_mask) {
                    continue;
                }
                detail::apply_pair_update<Real>(block, g.u, g.target,
                                                g.local_control_mask);
            }
        }
        pending_.clear();
        ++metrics_.flush_count;
    }

    /**
     * Moves a logical qubit that lives in a global slot into the least
     * recently used local slot. The queue must be empty.
     */
    void ensure_local(Qubit target) {
        if (target >= n_) {
            throw IndexError("ensure_local: qubit " + std::to_string(target) +
                             " out of range");
        }
        if (!pending_.empty()) {
            throw InvariantError("ensure_local: pending gates must be flushed");
        }
        const unsigned g = map_.physical(target);
        if (map_.is_local_slot(g)) {
            throw InvariantError("ensure_local: qubit " +
                                 std::to_string(target) + " is already local");
        }
        const unsigned p = map_.least_recent();
        swap_physical(p, g);
        map_.exchange(p, g);
        map_.touch(p);
        ++metrics_.swap_count;
    }

    /**
     * Exchanges bit positions p and g of the amplitude index (the SWAP
     * unitary on those slots). Touches neither the map nor the counters.
     */
    void swap_physical(unsigned p, unsigned g) {
        if (p >= n_ || g >= n_) {
            throw IndexError("swap_physical: slot out of range");
        }
        if (p == g) {
            throw InvalidArgument("swap_physical: slots must differ");
        }
        const std::size_t lo = std::size_t{1} << std::min(p, g);
        const std::size_t hi = std::size_t{1} << std::max(p, g);
        const std::size_t bp = std::size_t{1} << p;
        const std::size_t bg = std::size_t{1} << g;
        complex_type *const a = amps_.data();
        for (std::size_t outer = 0; outer < amps_.size(); outer += 2 * hi) {
            for (std::size_t mid = outer; mid < outer + hi; mid += 2 * lo) {
                for (std::size_t i = mid; i < mid + lo; ++i) {
                    std::swap(a[i | bp], a[i | bg]);
                }
            }
        }
    }

    /// Flushes, then returns P[j] for every logical basis state j.
    [[nodiscard]] std::vector<Real> logical_probabilities() {
        if (n_ > max_probability_qubits) {
            throw CapacityError("logical_probabilities: " + std::to_string(n_) +
                                " qubits exceeds the full-readout limit");
        }
        flush();
        std::vector<Real> p(amps_.size());
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            p[map_.to_logical_index(i)] = std::norm(amps_[i]);
        }
        return p;
    }

    /// Flushes, then returns amplitudes indexed by logical basis state.
    [[nodiscard]] std::vector<complex_type> logical_amplitudes() {
        if (n_ > max_probability_qubits) {
            throw CapacityError("logical_amplitudes: " + std::to_string(n_) +
                                " qubits exceeds the full-readout limit");
        }
        flush();
        std::vector<complex_type> out(amps_.size());
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            out[map_.to_logical_index(i)] = amps_[i];
        }
        return out;
    }

    /// Flushes, then returns the k most probable logical basis states.
    [[nodiscard]] std::vector<Peak> logical_top_k(std::size_t k) {
        flush();
        TopK acc(k);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            acc.offer(static_cast<double>(std::norm(amps_[i])),
                      [&] { return map_.to_logical_index(i); });
        }
        return acc.sorted();
    }

    /// Norm of the stored amplitudes (pending gates are norm preserving).
    [[nodiscard]] double norm() const {
        return std::sqrt(detail::squared_norm<Real>(amps_));
    }

  private:
    static unsigned checked_local(unsigned n, unsigned l, unsigned max_qubits) {
        if (n < 1 || n > max_qubits || n >= 64) {
            throw CapacityError("BlockedState: " + std::to_string(n) +
                                " qubits outside [1, " +
                                std::to_string(max_qubits) + "]");
        }
        if (l < 1 || l > n) {
            throw InvalidArgument("BlockedState: local count " +
                                  std::to_string(l) + " outside [1, " +
                                  std::to_string(n) + "]");
        }
        return n;
    }

    unsigned n_;
    unsigned l_;
    std::vector<complex_type> amps_;
    QubitMap map_;
    std::vector<PendingGate<Real>> pending_;
    Metrics metrics_;
    BlockedOptions options_;
};

/// Convenience factory mirroring DenseState::init_zero.
template <std::floating_point Real = double>
BlockedState<Real> init_blocked(unsigned n, unsigned l,
                                BlockedOptions opts = {}) {
    return BlockedState<Real>(n, l, opts);
}

} // namespace qblock
