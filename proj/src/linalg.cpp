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
#include "pmdqc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "pmdqc/errors.hpp"

namespace pmdqc {

namespace {

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b,
                        const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidArgument(std::string(what) + ": dimension mismatch (" +
                              std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " vs " +
                              std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()) + ")");
    }
}

double max_abs_diff_from_identity(const ComplexMatrix &m) {
    double worst = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Complex target = (r == c) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(m(r, c) - target));
        }
    }
    return worst;
}

// Light check used for outputs of trace- and Hermiticity-preserving maps.
void check_state_shape(const ComplexMatrix &m) {
    if (!m.is_square() || m.rows() == 0 || m.rows() > kMaxDim) {
        throw InvalidArgument("density matrix must be square with dimension "
                              "in [1, 16], got " +
                              std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()));
    }
}

} // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw InvalidArgument("matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw InvalidArgument("matrix dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
        throw InvalidArgument("matrix entry count " +
                              std::to_string(data_.size()) +
                              " does not match " + std::to_string(rows) +
                              "x" + std::to_string(cols));
    }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) {
        throw InvalidArgument("matrix dimensions must be positive");
    }
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw InvalidArgument("ragged matrix initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw InvalidArgument("trace of a non-square matrix");
    }
    Complex t{};
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto &z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    require_same_shape(*this, other, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    }
    return worst;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix &other,
                                 double tol) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        return false;
    }
    return max_abs_diff(other) <= tol;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
    if (!is_square()) {
        return false;
    }
    return max_abs_diff_from_identity(*this * adjoint()) <= tol;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_shape(*this, rhs, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += rhs.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    require_same_shape(*this, rhs, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= rhs.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw InvalidArgument("matrix product: inner dimensions " +
                              std::to_string(a.cols()) + " and " +
                              std::to_string(b.rows()) + " differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// DensityMatrix / UnitaryMatrix

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
    check_state_shape(m_);
    if (!m_.is_hermitian(tol)) {
        throw InvalidArgument("density matrix is not Hermitian");
    }
    const Complex tr = m_.trace();
    if (std::abs(tr - 1.0) > tol) {
        throw InvalidArgument("density matrix trace is " +
                              std::to_string(tr.real()) + ", expected 1");
    }
    const auto spectrum = eigh(m_, tol);
    if (spectrum.values.front() < -tol) {
        throw InvalidArgument("density matrix has negative eigenvalue " +
                              std::to_string(spectrum.values.front()));
    }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    ComplexMatrix m = ComplexMatrix::identity(dim);
    check_state_shape(m);
    m *= 1.0 / static_cast<double>(dim);
    return DensityMatrix(Trusted{}, std::move(m));
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> psi, double tol) {
    double norm2 = 0.0;
    for (const auto &a : psi) {
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > tol) {
        throw InvalidArgument("state vector is not normalised (norm^2 = " +
                              std::to_string(norm2) + ")");
    }
    ComplexMatrix m(psi.size(), psi.size());
    check_state_shape(m);
    for (std::size_t r = 0; r < psi.size(); ++r) {
        for (std::size_t c = 0; c < psi.size(); ++c) {
            m(r, c) = psi[r] * std::conj(psi[c]);
        }
    }
    return DensityMatrix(Trusted{}, std::move(m));
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
    if (!m_.is_square()) {
        throw InvalidArgument("unitary must be square");
    }
    if (!m_.is_unitary(tol)) {
        throw InvalidArgument("matrix is not unitary within tolerance");
    }
}

// ---------------------------------------------------------------------------
// Operations

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    ComplexMatrix m = tensor(a.matrix(), b.matrix());
    check_state_shape(m);
    return DensityMatrix(DensityMatrix::Trusted{}, std::move(m));
}

ComplexMatrix partial_trace(const ComplexMatrix &m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
    if (!m.is_square()) {
        throw InvalidArgument("partial_trace: matrix must be square");
    }
    if (dims.empty()) {
        throw InvalidArgument("partial_trace: no subsystem dimensions given");
    }
    std::size_t total = 1;
    for (const auto d : dims) {
        if (d == 0) {
            throw InvalidArgument("partial_trace: zero subsystem dimension");
        }
        total *= d;
    }
    if (total != m.rows()) {
        throw InvalidArgument("partial_trace: subsystem dimensions multiply "
                              "to " +
                              std::to_string(total) + ", matrix is " +
                              std::to_string(m.rows()));
    }
    std::vector<bool> kept(dims.size(), false);
    for (const auto k : keep) {
        if (k >= dims.size()) {
            throw InvalidArgument("partial_trace: subsystem index " +
                                  std::to_string(k) + " out of range");
        }
        if (kept[k]) {
            throw InvalidArgument("partial_trace: subsystem " +
                                  std::to_string(k) + " listed twice");
        }
        kept[k] = true;
    }

    // Split every basis index into (kept part, traced part).
    std::vector<std::size_t> kept_index(total);
    std::vector<std::size_t> traced_index(total);
    std::size_t kept_dim = 1;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        if (kept[s]) {
            kept_dim *= dims[s];
        }
    }
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        std::size_t k_idx = 0;
        std::size_t k_stride = 1;
        std::size_t t_idx = 0;
        std::size_t t_stride = 1;
        for (std::size_t s = dims.size(); s-- > 0;) {
            const std::size_t digit = rest % dims[s];
            rest /= dims[s];
            if (kept[s]) {
                k_idx += digit * k_stride;
                k_stride *= dims[s];
            } else {
                t_idx += digit * t_stride;
                t_stride *= dims[s];
            }
        }
        kept_index[idx] = k_idx;
        traced_index[idx] = t_idx;
    }

    ComplexMatrix out(kept_dim, kept_dim);
    for (std::size_t r = 0; r < total; ++r) {
        for (std::size_t c = 0; c < total; ++c) {
            if (traced_index[r] == traced_index[c]) {
                out(kept_index[r], kept_index[c]) += m(r, c);
            }
        }
    }
    return out;
}

double expectation(const DensityMatrix &rho, const ComplexMatrix &obs,
                   double tol) {
    const ComplexMatrix &m = rho.matrix();
    if (obs.rows() != m.rows() || obs.cols() != m.cols()) {
        throw InvalidArgument("expectation: observable dimension " +
                              std::to_string(obs.rows()) +
                              " does not match state dimension " +
                              std::to_string(m.rows()));
    }
    if (!obs.is_hermitian(tol)) {
        throw InvalidArgument("expectation: observable is not Hermitian");
    }
    Complex acc{};
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            acc += m(i, j) * obs(j, i);
        }
    }
    if (std::abs(acc.imag()) > tol) {
        throw NumericalError("expectation: imaginary residue " +
                             std::to_string(acc.imag()) +
                             " exceeds tolerance");
    }
    return acc.real();
}

DensityMatrix apply_unitary(const DensityMatrix &rho, const UnitaryMatrix &u) {
    if (u.dim() != rho.dim()) {
        throw InvalidArgument("apply_unitary: unitary dimension " +
                              std::to_string(u.dim()) +
                              " does not match state dimension " +
                              std::to_string(rho.dim()));
    }
    return DensityMatrix(DensityMatrix::Trusted{},
                         u.matrix() * rho.matrix() * u.matrix().adjoint());
}

bool is_complete_kraus_set(std::span<const ComplexMatrix> ops, double tol) {
    if (ops.empty()) {
        return false;
    }
    const std::size_t d = ops.front().cols();
    ComplexMatrix sum(d, d);
    for (const auto &a : ops) {
        if (a.rows() != d || a.cols() != d) {
            return false;
        }
        sum += a.adjoint() * a;
    }
    return max_abs_diff_from_identity(sum) <= tol;
}

DensityMatrix apply_kraus(const DensityMatrix &rho,
                          std::span<const ComplexMatrix> ops, double tol) {
    if (ops.empty()) {
        throw InvalidArgument("apply_kraus: empty Kraus set");
    }
    for (const auto &a : ops) {
        if (a.rows() != rho.dim() || a.cols() != rho.dim()) {
            throw InvalidArgument("apply_kraus: Kraus operator dimension "
                                  "does not match state dimension " +
                                  std::to_string(rho.dim()));
        }
    }
    if (!is_complete_kraus_set(ops, tol)) {
        throw InvalidArgument(
            "apply_kraus: Kraus set is not complete (sum A^dagger A != 1)");
    }
    ComplexMatrix out(rho.dim(), rho.dim());
    for (const auto &a : ops) {
        out += a * rho.matrix() * a.adjoint();
    }
    return DensityMatrix(DensityMatrix::Trusted{}, std::move(out));
}

HermitianEigen eigh(const ComplexMatrix &h, double tol) {
    if (!h.is_hermitian(tol)) {
        throw InvalidArgument("eigh: matrix is not Hermitian");
    }
    const std::size_t n = h.rows();
    ComplexMatrix a = h;
    ComplexMatrix v = ComplexMatrix::identity(n);

    auto off_diagonal = [&] {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (r != c) {
                    s += std::norm(a(r, c));
                }
            }
        }
        return s;
    };

    const double scale = std::max(h.frobenius_norm(), 1e-300);
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (std::sqrt(off_diagonal()) <= 1e-15 * scale) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= 1e-300) {
                    continue;
                }
                // Phase-align the pivot, then apply a real Jacobi rotation:
                // G = diag(e^{i phi}, 1) * [[c, s], [-s, c]] on rows/cols p,q.
                const Complex phase = apq / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex g_pp = phase * c;
                const Complex g_pq = phase * s;
                const Complex g_qp = -s;
                const Complex g_qq = c;

                // a <- a G
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * g_pp + akq * g_qp;
                    a(k, q) = akp * g_pq + akq * g_qq;
                }
                // a <- G^dagger a
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
                    a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                // v <- v G
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * g_pp + vkq * g_qp;
                    v(k, q) = vkp * g_pq + vkq * g_qq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) {
                         return a(i, i).real() < a(j, j).real();
                     });
    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

UnitaryMatrix expm_hermitian(const ComplexMatrix &h, double t, double tol) {
    if (!h.is_hermitian(tol)) {
        throw InvalidArgument("expm_hermitian: generator is not Hermitian");
    }
    const std::size_t n = h.rows();
    if (t == 0.0) {
        return UnitaryMatrix(UnitaryMatrix::Trusted{},
                             ComplexMatrix::identity(n));
    }
    const auto eig = eigh(h, tol);
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex phase = std::polar(1.0, -eig.values[k] * t);
        for (std::size_t r = 0; r < n; ++r) {
            const Complex vr = eig.vectors(r, k) * phase;
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += vr * std::conj(eig.vectors(c, k));
            }
        }
    }
    return UnitaryMatrix(UnitaryMatrix::Trusted{}, std::move(out));
}

std::vector<Complex> solve(ComplexMatrix a, std::vector<Complex> b) {
    const std::size_t n = a.rows();
    if (!a.is_square() || b.size() != n) {
        throw InvalidArgument("solve: system must be square with matching "
                              "right-hand side");
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) {
                pivot = r;
            }
        }
        if (std::abs(a(pivot, col)) < 1e-300) {
            throw NumericalError("solve: matrix is singular");
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
            }
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = a(r, col) / a(col, col);
            if (f == Complex{}) {
                continue;
            }
            for (std::size_t c = col; c < n; ++c) {
                a(r, c) -= f * a(col, c);
            }
            b[r] -= f * b[col];
        }
    }
    std::vector<Complex> x(n);
    for (std::size_t r = n; r-- > 0;) {
        Complex acc = b[r];
        for (std::size_t c = r + 1; c < n; ++c) {
            acc -= a(r, c) * x[c];
        }
        x[r] = acc / a(r, r);
    }
    return x;
}

} // namespace pmdqc
