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
#include "pmdqc/random.hpp"

#include <cmath>

#include "pmdqc/errors.hpp"

namespace pmdqc {

namespace {

ComplexMatrix ginibre(std::size_t rows, std::size_t cols,
                      std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(r, c) = {re, im};
        }
    }
    return g;
}

// Modified Gram-Schmidt on the columns; returns a matrix with orthonormal
// columns spanning the same space.
ComplexMatrix orthonormal_columns(ComplexMatrix a) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            Complex dot{};
            for (std::size_t r = 0; r < a.rows(); ++r) {
                dot += std::conj(a(r, prev)) * a(r, c);
            }
            for (std::size_t r = 0; r < a.rows(); ++r) {
                a(r, c) -= dot * a(r, prev);
            }
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            norm += std::norm(a(r, c));
        }
        norm = std::sqrt(norm);
        if (norm < 1e-12) {
            throw NumericalError("random matrix was numerically rank "
                                 "deficient");
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            a(r, c) /= norm;
        }
    }
    return a;
}

} // namespace

UnitaryMatrix random_unitary(std::size_t dim, std::mt19937_64 &rng) {
    return UnitaryMatrix(orthonormal_columns(ginibre(dim, dim, rng)));
}

DensityMatrix random_density_matrix(std::size_t dim, std::mt19937_64 &rng) {
    const ComplexMatrix g = ginibre(dim, dim, rng);
    ComplexMatrix m = g * g.adjoint();
    m *= 1.0 / m.trace().real();
    // Exact Hermitian symmetrisation removes rounding asymmetry.
    ComplexMatrix h = (m + m.adjoint()) * 0.5;
    return DensityMatrix(std::move(h));
}

std::vector<ComplexMatrix> random_kraus_set(std::size_t dim, std::size_t count,
                                            std::mt19937_64 &rng) {
    if (count == 0) {
        throw InvalidArgument("random_kraus_set: need at least one operator");
    }
    const ComplexMatrix v =
        orthonormal_columns(ginibre(dim * count, dim, rng));
    std::vector<ComplexMatrix> ops;
    ops.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        ComplexMatrix a(dim, dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                a(r, c) = v(k * dim + r, c);
            }
        }
        ops.push_back(std::move(a));
    }
    return ops;
}

} // namespace pmdqc
