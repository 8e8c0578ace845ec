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

/// @file
/// Dense complex linear algebra for small (at most 4-qubit) systems.
///
/// Basis ordering: subsystem 0 is the leftmost tensor factor and the most
/// significant digit of the basis index.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pmdqc {

using Complex = std::complex<double>;

/// Tolerance for algebraic identities (products, traces, Hermiticity).
inline constexpr double kAlgebraicTol = 1e-10;
/// Tolerance for results that go through an eigendecomposition.
inline constexpr double kSpectralTol = 1e-8;
/// Largest Hilbert-space dimension handled by the state/operator types.
inline constexpr std::size_t kMaxDim = 16;

class ComplexMatrix {
  public:
    /// Zero matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Row-major entries; size must equal rows * cols.
    ComplexMatrix(std::size_t rows, std::size_t cols,
                  std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return data_;
    }

    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] Complex trace() const;
    [[nodiscard]] double frobenius_norm() const;
    /// Largest elementwise |a - b|; dimensions must agree.
    [[nodiscard]] double max_abs_diff(const ComplexMatrix &other) const;
    [[nodiscard]] bool approx_equal(const ComplexMatrix &other,
                                    double tol = kAlgebraicTol) const;
    [[nodiscard]] bool is_hermitian(double tol = kAlgebraicTol) const;
    [[nodiscard]] bool is_unitary(double tol = kAlgebraicTol) const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) {
        return a *= s;
    }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
        return a *= s;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &a,
                                   const ComplexMatrix &b);

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

class UnitaryMatrix;

/// Hermitian, unit-trace, positive-semidefinite matrix of dimension <= 16.
class DensityMatrix {
  public:
    /// Validates all invariants; throws InvalidArgument otherwise.
    explicit DensityMatrix(ComplexMatrix m, double tol = kAlgebraicTol);

    static DensityMatrix maximally_mixed(std::size_t dim);
    /// |psi><psi| for a normalised state vector.
    static DensityMatrix pure(std::span<const Complex> psi,
                              double tol = kAlgebraicTol);

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dim() const noexcept { return m_.rows(); }

  private:
    struct Trusted {};
    DensityMatrix(Trusted, ComplexMatrix m) : m_(std::move(m)) {}

    friend DensityMatrix tensor(const DensityMatrix &, const DensityMatrix &);
    friend DensityMatrix apply_unitary(const DensityMatrix &,
                                       const UnitaryMatrix &);
    friend DensityMatrix apply_kraus(const DensityMatrix &,
                                     std::span<const ComplexMatrix>, double);

    ComplexMatrix m_;
};

/// Square matrix with U U^dagger = 1.
class UnitaryMatrix {
  public:
    explicit UnitaryMatrix(ComplexMatrix m, double tol = kAlgebraicTol);

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dim() const noexcept { return m_.rows(); }

  private:
    struct Trusted {};
    UnitaryMatrix(Trusted, ComplexMatrix m) : m_(std::move(m)) {}

    friend UnitaryMatrix expm_hermitian(const ComplexMatrix &, double,
                                        double);

    ComplexMatrix m_;
};

/// Kronecker product.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);
DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);

/// Reduced matrix over the subsystems listed in `keep` (kept in ascending
/// subsystem order). An empty `keep` returns the 1x1 scalar trace.
ComplexMatrix partial_trace(const ComplexMatrix &m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Re tr(rho * obs). Throws InvalidArgument for a non-Hermitian observable
/// and NumericalError if the imaginary residue exceeds `tol`.
double expectation(const DensityMatrix &rho, const ComplexMatrix &obs,
                   double tol = kAlgebraicTol);

DensityMatrix apply_unitary(const DensityMatrix &rho, const UnitaryMatrix &u);

/// sum_k A_k (.) A_k^dagger
bool is_complete_kraus_set(std::span<const ComplexMatrix> ops,
                           double tol = kAlgebraicTol);

/// Operator-sum channel. The set must satisfy sum A^dagger A = 1.
DensityMatrix apply_kraus(const DensityMatrix &rho,
                          std::span<const ComplexMatrix> ops,
                          double tol = kAlgebraicTol);

/// Eigenpairs of a Hermitian matrix, eigenvalues ascending; eigenvectors
/// are the columns of `vectors`.
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Cyclic Jacobi diagonalisation.
HermitianEigen eigh(const ComplexMatrix &h, double tol = kAlgebraicTol);

/// exp(-i h t) through the eigendecomposition of h.
UnitaryMatrix expm_hermitian(const ComplexMatrix &h, double t,
                             double tol = kAlgebraicTol);

/// Solves a x = b by Gaussian elimination with partial pivoting.
std::vector<Complex> solve(ComplexMatrix a, std::vector<Complex> b);

} // namespace pmdqc
