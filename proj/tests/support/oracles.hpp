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
 * Brute-force references for the test suites. These share nothing with the
 * engines except the gate matrices: operators are built as explicit
 * 2^n x 2^n matrices from Kronecker products, and SWAP counts are replayed
 * from the text dump without touching amplitudes.
 */
#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <qblock/errors.hpp>
#include <qblock/gates.hpp>

namespace qblock::oracle {

using cplx = std::complex<double>;
using Vector = std::vector<cplx>;

inline constexpr unsigned max_operator_qubits = 10;

/// Row-major dense square matrix.
struct DenseOperator {
    std::size_t dim{0};
    std::vector<cplx> entries;

    explicit DenseOperator(std::size_t d) : dim(d), entries(d * d) {}

    cplx &operator()(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
    cplx operator()(std::size_t r, std::size_t c) const {
        return entries[r * dim + c];
    }

    static DenseOperator identity(std::size_t d) {
        DenseOperator m(d);
        for (std::size_t i = 0; i < d; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static DenseOperator from(const Gate2x2<double> &u) {
        DenseOperator m(2);
        m(0, 0) = u.u11;
        m(0, 1) = u.u12;
        m(1, 0) = u.u21;
        m(1, 1) = u.u22;
        return m;
    }

    [[nodiscard]] Vector apply(const Vector &v) const {
        if (v.size() != dim) {
            throw std::invalid_argument("DenseOperator::apply: size mismatch");
        }
        Vector out(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            cplx acc = 0.0;
            const cplx *row = &entries[r * dim];
            for (std::size_t c = 0; c < dim; ++c) {
                acc += row[c] * v[c];
            }
            out[r] = acc;
        }
        return out;
    }

    [[nodiscard]] DenseOperator operator*(const DenseOperator &b) const {
        DenseOperator m(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t k = 0; k < dim; ++k) {
                const cplx a = (*this)(r, k);
                if (a == cplx{}) {
                    continue;
                }
                for (std::size_t c = 0; c < dim; ++c) {
                    m(r, c) += a * b(k, c);
                }
            }
        }
        return m;
    }

    [[nodiscard]] DenseOperator operator+(const DenseOperator &b) const {
        DenseOperator m(dim);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            m.entries[i] = entries[i] + b.entries[i];
        }
        return m;
    }

    [[nodiscard]] DenseOperator operator-(const DenseOperator &b) const {
        DenseOperator m(dim);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            m.entries[i] = entries[i] - b.entries[i];
        }
        return m;
    }

    [[nodiscard]] double max_distance(const DenseOperator &b) const {
        double d = 0.0;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            d = std::max(d, std::abs(entries[i] - b.entries[i]));
        }
        return d;
    }

    [[nodiscard]] double unitarity_error() const {
        double e = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                cplx acc = 0.0;
                for (std::size_t k = 0; k < dim; ++k) {
                    acc += (*this)(r, k) * std::conj((*this)(c, k));
                }
                e = std::max(e, std::abs(acc - (r == c ? 1.0 : 0.0)));
            }
        }
        return e;
    }
};

/// Kronecker product a (x) b; b occupies the low-order index bits.
inline DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    DenseOperator m(a.dim * b.dim);
    for (std::size_t ar = 0; ar < a.dim; ++ar) {
        for (std::size_t ac = 0; ac < a.dim; ++ac) {
            const cplx s = a(ar, ac);
            if (s == cplx{}) {
                continue;
            }
            for (std::size_t br = 0; br < b.dim; ++br) {
                for (std::size_t bc = 0; bc < b.dim; ++bc) {
                    m(ar * b.dim + br, ac * b.dim + bc) = s * b(br, bc);
                }
            }
        }
    }
    return m;
}

/// Entry (r, c) of factors[n-1] (x) ... (x) factors[0]: the product over
/// qubits q of factors[q](bit q of r, bit q of c).
inline cplx kron_entry(const std::vector<DenseOperator> &factors, std::size_t r,
                       std::size_t c) {
    cplx acc = 1.0;
    for (std::size_t q = 0; q < factors.size() && acc != cplx{}; ++q) {
        acc *= factors[q]((r >> q) & 1u, (c >> q) & 1u);
    }
    return acc;
}

/// Kronecker product of one 2x2 factor per qubit; factors[q] acts on qubit q.
inline DenseOperator kron_chain(const std::vector<DenseOperator> &factors) {
    if (factors.empty() || factors.size() > max_operator_qubits) {
        throw CapacityError("kron_chain: qubit count outside [1, 10]");
    }
    DenseOperator m(std::size_t{1} << factors.size());
    for (std::size_t r = 0; r < m.dim; ++r) {
        for (std::size_t c = 0; c < m.dim; ++c) {
            m(r, c) = kron_entry(factors, r, c);
        }
    }
    return m;
}

/// I (x) ... (x) U (x) ... (x) I with U on qubit t (qubit 0 = LSB).
inline DenseOperator kron_embed(const Gate2x2<double> &u, unsigned t,
                                unsigned n) {
    if (n < 1 || n > max_operator_qubits) {
        throw CapacityError("kron_embed: n must be in [1, 10]");
    }
    if (t >= n) {
        throw IndexError("kron_embed: target out of range");
    }
    std::vector<DenseOperator> f(n, DenseOperator::identity(2));
    f[t] = DenseOperator::from(u);
    return kron_chain(f);
}

/**
 * Controlled gate as  P (x) U_t + (I - P) (x) I_t, where P projects every
 * control onto |1>.
 */
inline DenseOperator controlled_embed(const Gate2x2<double> &u, unsigned t,
                                      const std::vector<unsigned> &controls,
                                      unsigned n) {
    if (n < 1 || n > max_operator_qubits) {
        throw CapacityError("controlled_embed: n must be in [1, 10]");
    }
    DenseOperator one(2);
    one(1, 1) = 1.0;
    std::vector<DenseOperator> with_u(n, DenseOperator::identity(2));
    std::vector<DenseOperator> projector(n, DenseOperator::identity(2));
    for (unsigned c : controls) {
        with_u[c] = one;
        projector[c] = one;
    }
    with_u[t] = DenseOperator::from(u);
    DenseOperator m(std::size_t{1} << n);
    for (std::size_t r = 0; r < m.dim; ++r) {
        for (std::size_t c = 0; c < m.dim; ++c) {
            m(r, c) = kron_entry(with_u, r, c) + (r == c ? 1.0 : 0.0) -
                      kron_entry(projector, r, c);
        }
    }
    return m;
}

/**
 * SWAP count implied by the blocked engine's scheduling rules for the circuit
 * in `dump` (text format, QUBITS header + GATE lines):
 *  - physical slots [0, l) are local; the map starts as the identity and the
 *    LRU order as 0, 1, ..., l-1 (least recent first);
 *  - a gate whose target sits in a global slot swaps it with the least
 *    recently used local slot, which then becomes most recent;
 *  - the target's slot becomes most recent after every gate;
 *  - controls never trigger a SWAP and never refresh recency.
 */
inline std::uint64_t schedule_replay(std::istream &dump, unsigned l) {
    unsigned n = 0;
    std::vector<unsigned> targets;
    std::string line;
    while (std::getline(dump, line)) {
        std::istringstream ls(line.substr(0, line.find('#')));
        std::string head;
        if (!(ls >> head)) {
            continue;
        }
        if (head == "QUBITS") {
            ls >> n;
        } else if (head == "GATE") {
            std::string name;
            unsigned target = 0;
            ls >> name >> target;
            targets.push_back(target);
        }
    }
    if (l < 1 || l > n) {
        throw std::invalid_argument("schedule_replay: l outside [1, n]");
    }

    std::vector<unsigned> where(n);   // logical -> physical
    std::vector<unsigned> who(n);     // physical -> logical
    for (unsigned q = 0; q < n; ++q) {
        where[q] = who[q] = q;
    }
    std::vector<unsigned> recency;    // front = least recently used
    for (unsigned s = 0; s < l; ++s) {
        recency.push_back(s);
    }
    auto refresh = [&](unsigned slot) {
        recency.erase(std::find(recency.begin(), recency.end(), slot));
        recency.push_back(slot);
    };

    std::uint64_t swaps = 0;
    for (unsigned t : targets) {
        unsigned slot = where[t];
        if (slot >= l) {
            const unsigned victim = recency.front();
            const unsigned evicted = who[victim];
            who[victim] = t;
            who[slot] = evicted;
            where[t] = victim;
            where[evicted] = slot;
            slot = victim;
            ++swaps;
        }
        refresh(slot);
    }
    return swaps;
}

inline std::uint64_t schedule_replay(const std::string &dump, unsigned l) {
    std::istringstream is(dump);
    return schedule_replay(is, l);
}

} // namespace qblock::oracle
