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
 * Bounded-memory readout helpers shared by both engines.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace qblock {

/// Largest register that materializes a full probability array.
inline constexpr unsigned max_probability_qubits = 24;

/// One basis state and its probability.
struct Peak {
    std::uint64_t index{0};
    double probability{0.0};

    bool operator==(const Peak &) const = default;
};

/**
 * Keeps the k most probable entries seen so far. Ties keep the smaller index.
 * `offer` takes the probability first and resolves the index lazily, so a
 * caller that must permute indices only pays for candidates that can enter.
 */
class TopK {
  public:
    explicit TopK(std::size_t k) : k_(k) { heap_.reserve(k); }

    template <class IndexFn> void offer(double p, IndexFn &&index_of) {
        if (k_ == 0) {
            return;
        }
        if (heap_.size() == k_ && p <= heap_.front().probability) {
            return;
        }
        Peak candidate{static_cast<std::uint64_t>(index_of()), p};
        if (heap_.size() < k_) {
            heap_.push_back(candidate);
            std::push_heap(heap_.begin(), heap_.end(), worse);
            return;
        }
        std::pop_heap(heap_.begin(), heap_.end(), worse);
        heap_.back() = candidate;
        std::push_heap(heap_.begin(), heap_.end(), worse);
    }

    /// Entries sorted by decreasing probability, then increasing index.
    [[nodiscard]] std::vector<Peak> sorted() const {
        auto out = heap_;
        std::sort(out.begin(), out.end(), [](const Peak &a, const Peak &b) {
            return a.probability != b.probability ? a.probability > b.probability
                                                  : a.index < b.index;
        });
        return out;
    }

  private:
    // Min-heap on probability: front() is the weakest kept entry.
    static bool worse(const Peak &a, const Peak &b) {
        return a.probability != b.probability ? a.probability > b.probability
                                              : a.index < b.index;
    }

    std::size_t k_;
    std::vector<Peak> heap_;
};

} // namespace qblock
