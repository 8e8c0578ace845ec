// Copyright 2026 The pmdqc Authors
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
#pragma once

// Independent dense oracles shared by the unit tests. Nothing here calls the
// library's tensor, partial_trace, multiply or to_matrix.

#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "pmdqc/linalg.hpp"
#include "pmdqc/pauli.hpp"

namespace pmdqc::testing {

inline constexpr std::uint64_t kSeed = 20260517;

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
    return std::mt19937_64(kSeed + salt);
}

inline ComplexMatrix kron_oracle(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t r = a.rows() * b.rows();
    const std::size_t c = a.cols() * b.cols();
    ComplexMatrix out(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
        }
    }
    return out;
}

inline ComplexMatrix pauli_1q(char c) {
    const Complex i(0.0, 1.0);
    switch (c) {
    case 'X':
        return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case 'Y':
        return ComplexMatrix{{0.0, -i}, {i, 0.0}};
    case 'Z':
        return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}};
    default:
        return ComplexMatrix::identity(2);
    }
}

/// Dense matrix of a label like "ZX" (qubit 0 leftmost), times a coefficient.
inline ComplexMatrix dense_pauli(const std::string &label, Complex coeff = 1.0) {
    ComplexMatrix m = ComplexMatrix::identity(1);
    for (char c : label) {
        m = kron_oracle(m, pauli_1q(c));
    }
    return m * coeff;
}

/// Trace out the second factor of a (da*db)-dimensional matrix by direct sums.
inline ComplexMatrix trace_second_oracle(const ComplexMatrix &m, std::size_t da,
                                         std::size_t db) {
    ComplexMatrix out(da, da);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            for (std::size_t k = 0; k < db; ++k) {
                out(i, j) += m(i * db + k, j * db + k);
            }
        }
    }
    return out;
}

inline ComplexMatrix trace_first_oracle(const ComplexMatrix &m, std::size_t da,
                                        std::size_t db) {
    ComplexMatrix out(db, db);
    for (std::size_t i = 0; i < db; ++i) {
        for (std::size_t j = 0; j < db; ++j) {
            for (std::size_t k = 0; k < da; ++k) {
                out(i, j) += m(k * db + i, k * db + j);
            }
        }
    }
    return out;
}

inline double commutator_norm(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a * b - b * a).frobenius_norm();
}

/// exp(-i h t) by scaling and squaring a truncated Taylor series.
inline ComplexMatrix taylor_expm(const ComplexMatrix &h, double t) {
    const double norm = h.frobenius_norm() * std::abs(t);
    int squarings = 0;
    while (norm / std::pow(2.0, squarings) > 0.25) {
        ++squarings;
    }
    const Complex scale(0.0, -t / std::pow(2.0, squarings));
    const ComplexMatrix a = h * scale;
    ComplexMatrix term = ComplexMatrix::identity(h.rows());
    ComplexMatrix sum = term;
    for (int k = 1; k <= 30; ++k) {
        term = term * a * Complex(1.0 / k, 0.0);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = sum * sum;
    }
    return sum;
}

inline std::string random_pauli_label(std::size_t n, std::mt19937_64 &rng) {
    static constexpr std::array<char, 4> kChars{'1', 'X', 'Y', 'Z'};
    std::uniform_int_distribution<int> pick(0, 3);
    std::string s;
    for (std::size_t j = 0; j < n; ++j) {
        s.push_back(kChars[pick(rng)]);
    }
    return s;
}

} // namespace pmdqc::testing
