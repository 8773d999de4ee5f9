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
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "../gates.hpp"

namespace qblock::detail {

/**
 * Single-qubit update over a contiguous run of amplitudes whose length is a
 * power of two. Pairs (j, j + 2^target) are visited with the outer stride
 * 2^(target+1) and inner range 2^target. A pair is updated only if every bit
 * of `ctrl_mask` is set in its |0> index j. Diagonal gates skip the
 * off-diagonal products.
 *
 * Both engines call this: the dense engine over the whole vector, the blocked
 * engine over one block at a time.
 */
// Plain complex product; std::complex's operator* carries an Annex G NaN
// recovery path that blocks vectorization.
template <std::floating_point Real>
inline Complex<Real> cmul(Complex<Real> x, Complex<Real> y) noexcept {
    return {x.real() * y.real() - x.imag() * y.imag(),
            x.real() * y.imag() + x.imag() * y.real()};
}

template <bool Diagonal, std::floating_point Real>
inline void pair_loop(Complex<Real> *data, std::size_t size,
                      const Gate2x2<Real> &u, unsigned target,
                      std::uint64_t ctrl_mask) noexcept {
    const std::size_t half = std::size_t{1} << target;
    const std::size_t stride = half << 1;
    const std::uint64_t low_mask = ctrl_mask & (half - 1);
    const std::uint64_t high_mask = ctrl_mask & ~std::uint64_t(stride - 1);
    const Complex<Real> u11 = u.u11, u12 = u.u12, u21 = u.u21, u22 = u.u22;

    for (std::size_t i = 0; i < size; i += stride) {
        if ((i & high_mask) != high_mask) {
            continue;
        }
        Complex<Real> *const lo = data + i;
        Complex<Real> *const hi = data + i + half;
        // k walks the offsets in [0, half) that contain every bit of low_mask.
        for (std::size_t k = low_mask; k < half; k = (k + 1) | low_mask) {
            if constexpr (Diagonal) {
                lo[k] = cmul(u11, lo[k]);
                hi[k] = cmul(u22, hi[k]);
            } else {
                const Complex<Real> a = lo[k];
                const Complex<Real> b = hi[k];
                lo[k] = cmul(u11, a) + cmul(u12, b);
                hi[k] = cmul(u21, a) + cmul(u22, b);
            }
        }
    }
}

template <std::floating_point Real>
inline void apply_pair_update(std::span<Complex<Real>> amps,
                              const Gate2x2<Real> &u, unsigned target,
                              std::uint64_t ctrl_mask) noexcept {
    if (u.u12 == Complex<Real>{} && u.u21 == Complex<Real>{}) {
        pair_loop<true>(amps.data(), amps.size(), u, target, ctrl_mask);
    } else {
        pair_loop<false>(amps.data(), amps.size(), u, target, ctrl_mask);
    }
}

/// Sum of |a|^2, accumulated in double regardless of storage precision.
template <std::floating_point Real>
inline double squared_norm(std::span<const Complex<Real>> amps) noexcept {
    double acc = 0.0;
    for (const auto &a : amps) {
        acc += static_cast<double>(std::norm(a));
    }
    return acc;
}

} // namespace qblock::detail
