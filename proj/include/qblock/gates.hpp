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
 * 2x2 single-qubit gate matrices and the gate set used by the QPE benchmark.
 *
 * All gates are templated over the floating point type of the simulation
 * (`float` or `double`). Angles are always taken in double precision and
 * rounded once when the matrix entries are formed.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <numbers>

#include "errors.hpp"

namespace qblock {

/// Precision-dependent tolerances.
template <std::floating_point Real> struct Tolerance;

template <> struct Tolerance<double> {
    static constexpr double unitarity = 1e-12;
    static constexpr double norm = 1e-10;
};

template <> struct Tolerance<float> {
    static constexpr double unitarity = 1e-5;
    static constexpr double norm = 1e-4;
};

template <std::floating_point Real> using Complex = std::complex<Real>;

/**
 * @brief Row-major 2x2 complex matrix acting on one qubit.
 *
 * Instances produced by the factory functions below are unitary by
 * construction; `Gate2x2::checked` validates arbitrary user matrices.
 */
template <std::floating_point Real = double> struct Gate2x2 {
    Complex<Real> u11{1};
    Complex<Real> u12{0};
    Complex<Real> u21{0};
    Complex<Real> u22{1};

    /// Builds a gate and throws InvalidArgument unless it is unitary.
    static Gate2x2 checked(Complex<Real> a, Complex<Real> b, Complex<Real> c,
                           Complex<Real> d) {
        Gate2x2 g{a, b, c, d};
        if (!g.is_unitary()) {
            throw InvalidArgument("Gate2x2: matrix is not unitary");
        }
        return g;
    }

    /// Largest element-wise deviation of U*U^dagger from the identity.
    [[nodiscard]] double unitarity_error() const {
        const auto p = (*this) * adjoint();
        const double e = std::max({std::abs(p.u11 - Complex<Real>{1}),
                                   std::abs(p.u12), std::abs(p.u21),
                                   std::abs(p.u22 - Complex<Real>{1})});
        return e;
    }

    [[nodiscard]] bool is_unitary(double tol = Tolerance<Real>::unitarity) const {
        return std::isfinite(unitarity_error()) && unitarity_error() <= tol;
    }

    [[nodiscard]] Gate2x2 adjoint() const {
        return {std::conj(u11), std::conj(u21), std::conj(u12), std::conj(u22)};
    }

    /// Matrix product (this * rhs).
    [[nodiscard]] Gate2x2 operator*(const Gate2x2 &rhs) const {
        return {u11 * rhs.u11 + u12 * rhs.u21, u11 * rhs.u12 + u12 * rhs.u22,
                u21 * rhs.u11 + u22 * rhs.u21, u21 * rhs.u12 + u22 * rhs.u22};
    }

    /// Max element-wise distance to another gate.
    [[nodiscard]] double distance(const Gate2x2 &o) const {
        return std::max({std::abs(u11 - o.u11), std::abs(u12 - o.u12),
                         std::abs(u21 - o.u21), std::abs(u22 - o.u22)});
    }

    template <std::floating_point Other>
    [[nodiscard]] Gate2x2<Other> cast() const {
        return {Complex<Other>(u11), Complex<Other>(u12), Complex<Other>(u21),
                Complex<Other>(u22)};
    }

    bool operator==(const Gate2x2 &) const = default;
};

template <std::floating_point Real = double> Gate2x2<Real> identity() {
    return {};
}

template <std::floating_point Real = double> Gate2x2<Real> hadamard() {
    const Real s = static_cast<Real>((1.0 / std::numbers::sqrt2));
    return {Complex<Real>{s}, Complex<Real>{s}, Complex<Real>{s},
            Complex<Real>{-s}};
}

template <std::floating_point Real = double> Gate2x2<Real> pauli_x() {
    return {Complex<Real>{0}, Complex<Real>{1}, Complex<Real>{1},
            Complex<Real>{0}};
}

/// diag(1, e^{i theta}).
template <std::floating_point Real = double> Gate2x2<Real> phase(double theta) {
    if (!std::isfinite(theta)) {
        throw InvalidArgument("phase: angle must be finite");
    }
    return {Complex<Real>{1}, Complex<Real>{0}, Complex<Real>{0},
            Complex<Real>(static_cast<Real>(std::cos(theta)),
                          static_cast<Real>(std::sin(theta)))};
}

/**
 * @brief a-th power of phase(theta), evaluated directly as phase(theta * a).
 *
 * For theta = 2*pi*2^-n and a a power of two the product theta * a is exact,
 * so the controlled powers in QPE carry no accumulated rounding.
 */
template <std::floating_point Real = double>
Gate2x2<Real> phase_power(double theta, std::uint64_t a) {
    return phase<Real>(theta * static_cast<double>(a));
}

} // namespace qblock
