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
 * Logical-to-physical qubit placement for the blocked engine.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace qblock {

/**
 * @brief Bijection between logical qubits and physical bit positions of the
 * amplitude index, plus a least-to-most-recently-used ordering of the local
 * slots [0, l).
 */
class QubitMap {
  public:
    QubitMap(unsigned n, unsigned l) : n_(n), l_(l) {
        if (l < 1 || l > n) {
            throw InvalidArgument("QubitMap: local count " + std::to_string(l) +
                                  " outside [1, " + std::to_string(n) + "]");
        }
        log2phys_.resize(n);
        phys2log_.resize(n);
        for (unsigned q = 0; q < n; ++q) {
            log2phys_[q] = q;
            phys2log_[q] = q;
        }
        lru_.resize(l);
        for (unsigned s = 0; s < l; ++s) {
            lru_[s] = s;
        }
    }

    [[nodiscard]] unsigned num_qubits() const noexcept { return n_; }
    [[nodiscard]] unsigned num_local() const noexcept { return l_; }

    [[nodiscard]] unsigned physical(unsigned logical) const {
        return log2phys_.at(logical);
    }
    [[nodiscard]] unsigned logical(unsigned physical) const {
        return phys2log_.at(physical);
    }
    [[nodiscard]] bool is_local_slot(unsigned slot) const noexcept {
        return slot < l_;
    }

    /// Local slots, least recently used first.
    [[nodiscard]] std::span<const unsigned> lru() const noexcept { return lru_; }
    [[nodiscard]] unsigned least_recent() const noexcept { return lru_.front(); }

    /// Marks a local slot most recently used.
    void touch(unsigned slot) {
        auto it = std::find(lru_.begin(), lru_.end(), slot);
        if (it == lru_.end()) {
            throw InvariantError("QubitMap::touch: slot " +
                                 std::to_string(slot) + " is not local");
        }
        std::rotate(it, it + 1, lru_.end());
    }

    /// The logical qubits living at physical slots a and b trade places.
    void exchange(unsigned a, unsigned b) {
        const unsigned qa = phys2log_.at(a);
        const unsigned qb = phys2log_.at(b);
        std::swap(phys2log_[a], phys2log_[b]);
        log2phys_[qa] = b;
        log2phys_[qb] = a;
    }

    /// Physical amplitude index holding logical basis state `index`.
    [[nodiscard]] std::uint64_t to_physical_index(std::uint64_t index) const {
        std::uint64_t out = 0;
        for (unsigned q = 0; q < n_; ++q) {
            out |= ((index >> q) & 1u) << log2phys_[q];
        }
        return out;
    }

    /// Logical basis state stored at physical amplitude index `index`.
    [[nodiscard]] std::uint64_t to_logical_index(std::uint64_t index) const {
        std::uint64_t out = 0;
        for (unsigned s = 0; s < n_; ++s) {
            out |= ((index >> s) & 1u) << phys2log_[s];
        }
        return out;
    }

    [[nodiscard]] bool is_bijection() const {
        for (unsigned q = 0; q < n_; ++q) {
            if (log2phys_[q] >= n_ || phys2log_[log2phys_[q]] != q) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] bool is_identity() const {
        for (unsigned q = 0; q < n_; ++q) {
            if (log2phys_[q] != q) {
                return false;
            }
        }
        return true;
    }

  private:
    unsigned n_;
    unsigned l_;
    std::vector<unsigned> log2phys_;
    std::vector<unsigned> phys2log_;
    std::vector<unsigned> lru_;
};

} // namespace qblock
