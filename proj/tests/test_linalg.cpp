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
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "pmdqc/errors.hpp"
#include "pmdqc/linalg.hpp"
#include "pmdqc/random.hpp"
#include "test_util.hpp"

using namespace pmdqc;
using namespace pmdqc::testing;

namespace {

DensityMatrix ket_density(std::vector<Complex> psi) { return DensityMatrix::pure(psi); }

} // namespace

TEST_CASE("matrix construction validates shape") {
    CHECK_THROWS_AS(ComplexMatrix(0, 2), InvalidArgument);
    CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), InvalidArgument);
    CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), InvalidArgument);
    const ComplexMatrix m{{1.0, 2.0}, {3.0, 4.0}};
    CHECK(m(1, 0) == Complex(3.0));
    CHECK(m.trace() == Complex(5.0));
    CHECK_THROWS_AS((void)m.max_abs_diff(ComplexMatrix(3, 3)), InvalidArgument);
}

TEST_CASE("tensor of identities and Z with X") {
    CHECK(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2))
              .approx_equal(ComplexMatrix::identity(4)));
    const ComplexMatrix zx = tensor(pauli_1q('Z'), pauli_1q('X'));
    const ComplexMatrix expected{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}};
    CHECK(zx.approx_equal(expected, 0.0));
}

TEST_CASE("tensor matches the index-arithmetic oracle and is associative") {
    auto rng = make_rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_density_matrix(2, rng).matrix();
        const auto b = random_unitary(4, rng).matrix();
        CHECK(tensor(a, b).max_abs_diff(kron_oracle(a, b)) == 0.0);
    }
    const auto z = pauli_1q('Z'), x = pauli_1q('X'), y = pauli_1q('Y');
    CHECK(tensor(tensor(z, x), y).approx_equal(kron_oracle(z, kron_oracle(x, y))));
    CHECK(tensor(tensor(z, x), y).approx_equal(tensor(z, tensor(x, y))));
}

TEST_CASE("partial trace") {
    const double h = 1.0 / std::sqrt(2.0);
    const auto bell = ket_density({h, 0.0, 0.0, h});
    const std::vector<std::size_t> dims{2, 2};
    const std::vector<std::size_t> first{0};
    const std::vector<std::size_t> second{1};
    CHECK(partial_trace(bell.matrix(), dims, first)
              .approx_equal(ComplexMatrix::identity(2) * Complex(0.5)));

    auto rng = make_rng(2);
    SUBCASE("product state factorises") {
        const auto a = random_density_matrix(2, rng).matrix() * Complex(3.0);
        const auto b = random_density_matrix(4, rng).matrix() * Complex(0.5);
        const std::vector<std::size_t> d{2, 4};
        const auto ab = tensor(a, b);
        CHECK(partial_trace(ab, d, first).approx_equal(a * b.trace()));
        CHECK(partial_trace(ab, d, second).approx_equal(b * a.trace()));
    }
    SUBCASE("three qubits against direct summation") {
        const auto rho = random_density_matrix(8, rng).matrix();
        const std::vector<std::size_t> d{2, 2, 2};
        const std::vector<std::size_t> keep01{0, 1};
        const std::vector<std::size_t> keep12{1, 2};
        const std::vector<std::size_t> none{};
        CHECK(partial_trace(rho, d, keep01).approx_equal(trace_second_oracle(rho, 4, 2)));
        CHECK(partial_trace(rho, d, keep12).approx_equal(trace_first_oracle(rho, 2, 4)));
        const auto scalar = partial_trace(rho, d, none);
        CHECK(scalar.rows() == 1);
        CHECK(std::abs(scalar(0, 0) - rho.trace()) < 1e-12);
        const std::vector<std::size_t> keep0{0};
        CHECK(std::abs(partial_trace(rho, d, keep0).trace() - rho.trace()) < 1e-12);
    }
    SUBCASE("errors") {
        const std::vector<std::size_t> bad_dims{2, 3};
        CHECK_THROWS_AS(partial_trace(bell.matrix(), bad_dims, first), InvalidArgument);
        const std::vector<std::size_t> dup{0, 0};
        CHECK_THROWS_AS(partial_trace(bell.matrix(), dims, dup), InvalidArgument);
        const std::vector<std::size_t> out_of_range{2};
        CHECK_THROWS_AS(partial_trace(bell.matrix(), dims, out_of_range), InvalidArgument);
    }
}

TEST_CASE("expectation") {
    const auto zz = dense_pauli("ZZ");
    CHECK(expectation(DensityMatrix::maximally_mixed(4), zz) == doctest::Approx(0.0));
    CHECK(expectation(ket_density({1.0, 0.0, 0.0, 0.0}), zz) == doctest::Approx(1.0));
    auto rng = make_rng(3);
    const auto c3 = dense_pauli("ZZ") * dense_pauli("XX") * dense_pauli("YY");
    for (int trial = 0; trial < 25; ++trial) {
        CHECK(expectation(random_density_matrix(4, rng), c3) ==
              doctest::Approx(-1.0).epsilon(1e-12));
    }
    const ComplexMatrix not_hermitian{{0.0, 1.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(expectation(DensityMatrix::maximally_mixed(2), not_hermitian),
                    InvalidArgument);
    CHECK_THROWS_AS(expectation(DensityMatrix::maximally_mixed(2), zz), InvalidArgument);
}

TEST_CASE("density matrix validation") {
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}}), InvalidArgument);
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{1.5, 0.0}, {0.0, -0.5}}), InvalidArgument);
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{0.5, 1.0}, {0.0, 0.5}}), InvalidArgument);
    CHECK_THROWS_AS(DensityMatrix::maximally_mixed(32), InvalidArgument);
    CHECK_NOTHROW(DensityMatrix(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}));

    auto rng = make_rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto rho = random_density_matrix(8, rng);
        CHECK(rho.matrix().is_hermitian());
        CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-10);
        CHECK(eigh(rho.matrix()).values.front() > -1e-10);
    }
}

TEST_CASE("apply_unitary") {
    const auto x = UnitaryMatrix(pauli_1q('X'));
    const auto zero = ket_density({1.0, 0.0});
    CHECK(apply_unitary(zero, x).matrix().approx_equal(ket_density({0.0, 1.0}).matrix()));
    auto rng = make_rng(5);
    const auto rho = random_density_matrix(4, rng);
    CHECK(apply_unitary(rho, UnitaryMatrix(ComplexMatrix::identity(4)))
              .matrix()
              .approx_equal(rho.matrix()));
    const auto mixed = DensityMatrix::maximally_mixed(4);
    CHECK(apply_unitary(mixed, random_unitary(4, rng)).matrix().approx_equal(mixed.matrix()));
    const auto u = random_unitary(4, rng);
    const auto out = apply_unitary(rho, u);
    const auto before = eigh(rho.matrix()).values;
    const auto after = eigh(out.matrix()).values;
    for (std::size_t k = 0; k < before.size(); ++k) {
        CHECK(after[k] == doctest::Approx(before[k]).epsilon(1e-8));
    }
    CHECK_THROWS_AS(apply_unitary(zero, u), InvalidArgument);
    CHECK_THROWS_AS(UnitaryMatrix(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}), InvalidArgument);
}

TEST_CASE("apply_kraus") {
    auto rng = make_rng(6);
    const auto rho = random_density_matrix(2, rng);
    const std::vector<ComplexMatrix> id{ComplexMatrix::identity(2)};
    CHECK(apply_kraus(rho, id).matrix().approx_equal(rho.matrix()));

    const std::vector<ComplexMatrix> full_dephasing{
        ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}, ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}};
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(apply_kraus(ket_density({h, h}), full_dephasing)
              .matrix()
              .approx_equal(ComplexMatrix::identity(2) * Complex(0.5)));

    for (int trial = 0; trial < 100; ++trial) {
        const auto ops = random_kraus_set(4, 1 + trial % 4, rng);
        REQUIRE(is_complete_kraus_set(ops));
        const auto out = apply_kraus(random_density_matrix(4, rng), ops);
        CHECK(std::abs(out.matrix().trace() - 1.0) < 1e-10);
        CHECK(out.matrix().is_hermitian());
    }
    const std::vector<ComplexMatrix> incomplete{ComplexMatrix{{1.0, 0.0}, {0.0, 0.5}}};
    CHECK_FALSE(is_complete_kraus_set(incomplete));
    CHECK_THROWS_AS(apply_kraus(rho, incomplete), InvalidArgument);
}

TEST_CASE("eigh reconstructs random Hermitian matrices") {
    auto rng = make_rng(7);
    std::normal_distribution<double> g;
    for (std::size_t dim : {1u, 2u, 5u, 8u, 16u}) {
        ComplexMatrix a(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                a(i, j) = Complex(g(rng), g(rng));
            }
        }
        const ComplexMatrix h = a + a.adjoint();
        const auto eig = eigh(h);
        CHECK(eig.vectors.is_unitary(1e-10));
        std::vector<Complex> vals(eig.values.begin(), eig.values.end());
        const auto rebuilt = eig.vectors * ComplexMatrix::diagonal(vals) * eig.vectors.adjoint();
        CHECK(rebuilt.max_abs_diff(h) < 1e-10);
        for (std::size_t k = 1; k < dim; ++k) {
            CHECK(eig.values[k - 1] <= eig.values[k]);
        }
    }
    CHECK_THROWS_AS(eigh(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), InvalidArgument);
}

TEST_CASE("expm_hermitian") {
    auto rng = make_rng(8);
    const auto h = random_density_matrix(4, rng).matrix() * Complex(7.0);
    CHECK(expm_hermitian(h, 0.0).matrix().approx_equal(ComplexMatrix::identity(4), 0.0));

    const auto x = pauli_1q('X');
    const auto u = expm_hermitian(x * Complex(std::numbers::pi / 2.0), 1.0);
    CHECK(u.matrix().approx_equal(x * Complex(0.0, -1.0), 1e-12));

    const auto u1 = expm_hermitian(h, 0.3).matrix();
    const auto u2 = expm_hermitian(h, 0.45).matrix();
    CHECK((u1 * u2).approx_equal(expm_hermitian(h, 0.75).matrix(), 1e-10));
    CHECK(u1.approx_equal(taylor_expm(h, 0.3), 1e-10));
    CHECK((u1 * u1.adjoint()).approx_equal(ComplexMatrix::identity(4), 1e-8));
    CHECK_THROWS_AS(expm_hermitian(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}, 1.0),
                    InvalidArgument);
}

TEST_CASE("solve") {
    const ComplexMatrix a{{2.0, 1.0}, {1.0, 3.0}};
    const auto x = solve(a, {3.0, 5.0});
    CHECK(std::abs(x[0] - Complex(0.8)) < 1e-12);
    CHECK(std::abs(x[1] - Complex(1.4)) < 1e-12);
    CHECK_THROWS_AS(solve(ComplexMatrix{{1.0, 2.0}, {2.0, 4.0}}, {1.0, 1.0}), NumericalError);
}
