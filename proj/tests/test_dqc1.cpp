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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "pmdqc/dqc1.hpp"
#include "pmdqc/errors.hpp"
#include "pmdqc/noise.hpp"
#include "pmdqc/random.hpp"
#include "test_util.hpp"

using namespace pmdqc;
using namespace pmdqc::testing;

namespace {

std::vector<PauliString> parse_all(std::initializer_list<const char *> labels) {
    std::vector<PauliString> out;
    for (const char *l : labels) {
        out.push_back(parse_pauli(l));
    }
    return out;
}

/// Up to `count` random pairwise-commuting Hermitian strings on n qubits.
std::vector<std::string> random_commuting_set(std::size_t n, std::size_t count,
                                              std::mt19937_64 &rng) {
    std::vector<std::string> set;
    while (set.size() < count) {
        const std::string cand = random_pauli_label(n, rng);
        const bool ok = std::all_of(set.begin(), set.end(), [&](const std::string &s) {
            return commutator_norm(dense_pauli(s), dense_pauli(cand)) < 1e-12;
        });
        if (ok) {
            set.push_back(cand);
        }
    }
    return set;
}

/// Amplitude damping conjugated by a Hadamard: relaxes towards |+>.
std::vector<ComplexMatrix> damping_towards_plus(double gamma) {
    const double s = 1.0 / std::sqrt(2.0);
    const ComplexMatrix h{{s, s}, {s, -s}};
    const ComplexMatrix a0{{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}};
    const ComplexMatrix a1{{0.0, std::sqrt(gamma)}, {0.0, 0.0}};
    return {h * a0 * h, h * a1 * h};
}

} // namespace

TEST_CASE("probe_state") {
    const double h = 0.5;
    CHECK(probe_state({1.0}).matrix().approx_equal(ComplexMatrix{{h, h}, {h, h}}));
    CHECK(probe_state({0.0}).matrix().approx_equal(ComplexMatrix{{h, 0.0}, {0.0, h}}));
    CHECK(probe_state({0.5}).matrix().approx_equal(ComplexMatrix{{0.5, 0.25}, {0.25, 0.5}}));
    CHECK_THROWS_AS(probe_state({1.5}), InvalidArgument);
    CHECK_THROWS_AS(probe_state({-0.1}), InvalidArgument);
}

TEST_CASE("controlled_observable") {
    CHECK(controlled_observable(parse_pauli("11"))
              .matrix()
              .approx_equal(ComplexMatrix::identity(8), 0.0));
    const std::vector<Complex> cz{1, 1, 1, -1};
    CHECK(controlled_observable(parse_pauli("Z"))
              .matrix()
              .approx_equal(ComplexMatrix::diagonal(cz), 0.0));

    // Block construction 1 (x) P+ + Z (x) P- with P = (1 +- S)/2.
    const auto oracle = [](const std::string &label, double sign) {
        const auto s = dense_pauli(label) * Complex(sign);
        const auto id = ComplexMatrix::identity(s.rows());
        const auto p_plus = (id + s) * Complex(0.5);
        const auto p_minus = (id - s) * Complex(0.5);
        return kron_oracle(pauli_1q('1'), p_plus) + kron_oracle(pauli_1q('Z'), p_minus);
    };
    const std::vector<Complex> czz{1, 1, 1, 1, 1, -1, -1, 1};
    CHECK(controlled_observable(parse_pauli("ZZ"))
              .matrix()
              .approx_equal(ComplexMatrix::diagonal(czz), 0.0));
    auto rng = make_rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const std::string label = random_pauli_label(1 + trial % 3, rng);
        const double sign = trial % 2 == 0 ? 1.0 : -1.0;
        const auto u = controlled_observable(parse_pauli(sign > 0 ? label : "-" + label))
                           .matrix();
        CHECK(u.approx_equal(oracle(label, sign), 1e-12));
        CHECK(u.is_hermitian());
        CHECK((u * u).approx_equal(ComplexMatrix::identity(u.rows()), 1e-12));
    }
    CHECK_THROWS_AS(controlled_observable(parse_pauli("iX")), InvalidArgument);
}

TEST_CASE("experiment validation") {
    const auto mixed = DensityMatrix::maximally_mixed(4);
    CHECK_THROWS_AS(CorrelationExperiment(mixed, parse_all({"Z1", "X1"}), {1.0}),
                    InvalidArgument);
    CHECK_THROWS_AS(CorrelationExperiment(mixed, parse_all({"ZZZ"}), {1.0}),
                    InvalidArgument);
    CHECK_THROWS_AS(CorrelationExperiment(mixed, parse_all({"iZZ"}), {1.0}),
                    InvalidArgument);
    CHECK_THROWS_AS(CorrelationExperiment(mixed, parse_all({"ZZ"}), {2.0}),
                    InvalidArgument);
    CHECK_THROWS_AS(CorrelationExperiment(DensityMatrix::maximally_mixed(16),
                                          parse_all({"ZZZZ"}), {1.0}),
                    InvalidArgument);
}

TEST_CASE("measure_correlation on the square's lines") {
    const auto mixed = DensityMatrix::maximally_mixed(4);
    CHECK(measure_correlation(CorrelationExperiment(mixed, parse_all({"Z1", "1Z", "ZZ"}),
                                                    {1.0})) == doctest::Approx(1.0));
    CHECK(measure_correlation(CorrelationExperiment(mixed, parse_all({"ZZ", "XX", "YY"}),
                                                    {1.0})) == doctest::Approx(-1.0));
    auto rng = make_rng(32);
    const auto rho = random_density_matrix(4, rng);
    CHECK(measure_correlation(CorrelationExperiment(rho, parse_all({"ZZ", "XX", "YY"}),
                                                    {0.3})) == doctest::Approx(-0.3));
    CHECK(measure_correlation(CorrelationExperiment(rho, parse_all({"ZX"}), {0.0})) ==
          doctest::Approx(0.0));
}

TEST_CASE("protocol identity and ordering invariance") {
    auto rng = make_rng(33);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const std::size_t count = 2 + trial % 2;
        auto labels = random_commuting_set(n, count, rng);
        const auto rho = random_density_matrix(std::size_t{1} << n, rng);
        const double eps = unif(rng);

        ComplexMatrix prod = ComplexMatrix::identity(rho.dim());
        for (const auto &l : labels) {
            prod = prod * dense_pauli(l);
        }
        const double oracle = eps * (rho.matrix() * prod).trace().real();

        std::sort(labels.begin(), labels.end());
        do {
            std::vector<PauliString> obs;
            for (const auto &l : labels) {
                obs.push_back(parse_pauli(l));
            }
            const double got = measure_correlation(CorrelationExperiment(rho, obs, {eps}));
            CHECK(std::abs(got - oracle) < 1e-10);
        } while (std::next_permutation(labels.begin(), labels.end()));
    }
}

TEST_CASE("outcome_probabilities") {
    // |00> is the +1 eigenstate of ZZ.
    const std::vector<Complex> ket00{1.0, 0.0, 0.0, 0.0};
    const auto eigen = DensityMatrix::pure(ket00);
    const auto ideal = outcome_probabilities(CorrelationExperiment(eigen, parse_all({"ZZ"}), {1.0}));
    CHECK(ideal.p_plus == doctest::Approx(1.0));
    CHECK(ideal.p_minus == doctest::Approx(0.0).epsilon(1e-12));

    const auto mixed = outcome_probabilities(CorrelationExperiment(
        DensityMatrix::maximally_mixed(4), parse_all({"XZ"}), {1.0}));
    CHECK(mixed.p_plus == doctest::Approx(0.5));
    CHECK(mixed.p_minus == doctest::Approx(0.5));

    const auto weak = outcome_probabilities(CorrelationExperiment(eigen, parse_all({"ZZ"}), {0.4}));
    CHECK(weak.p_plus == doctest::Approx(0.7));
    CHECK(weak.p_minus == doctest::Approx(0.3));

    auto rng = make_rng(34);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const auto label = random_pauli_label(2, rng);
        const CorrelationExperiment exp(random_density_matrix(4, rng),
                                        {parse_pauli(label)}, {unif(rng)});
        const auto pr = outcome_probabilities(exp);
        CHECK(pr.p_plus >= -1e-12);
        CHECK(pr.p_minus >= -1e-12);
        CHECK(pr.p_plus + pr.p_minus == doctest::Approx(1.0));
        CHECK(pr.p_plus - pr.p_minus == doctest::Approx(measure_correlation(exp)));
    }
    CHECK_THROWS_AS(outcome_probabilities(CorrelationExperiment(
                        eigen, parse_all({"ZZ", "XX"}), {1.0})),
                    InvalidArgument);
}

TEST_CASE("run_experiment_suite") {
    const auto ideal = run_experiment_suite({1.0});
    const std::array<double, 6> terms{1, 1, 1, 1, 1, -1};
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(std::abs(ideal.lines[k].corrected_correlation - terms[k]) < 1e-10);
        CHECK(ideal.lines[k].line == kAllLines[k]);
    }
    CHECK(std::abs(ideal.beta - 6.0) < 1e-10);

    for (double eps : {0.05, 0.25, 0.6, 1.0}) {
        const auto r = run_experiment_suite({eps});
        CHECK(std::abs(r.beta - 6.0) < 1e-10);
        CHECK(r.lines[5].raw_correlation == doctest::Approx(-eps));
        const auto raw = run_experiment_suite({eps}, std::nullopt, false);
        CHECK_FALSE(raw.epsilon_corrected);
        CHECK(raw.beta == doctest::Approx(6.0 * eps));
        CHECK(raw.lines[0].corrected_correlation == raw.lines[0].raw_correlation);
    }

    const auto dead = run_experiment_suite({1.0}, NoiseModel(1.0, 1e-300));
    CHECK(std::abs(dead.beta) < 1e-10);
    CHECK(run_experiment_suite({1.0}, NoiseModel(0.0, 5.0)).beta == doctest::Approx(6.0));
    CHECK_THROWS_AS(run_experiment_suite({0.0}), InvalidArgument);
    CHECK(run_experiment_suite({0.0}, std::nullopt, false).beta == 0.0);
}

TEST_CASE("noisy circuit matches a hand-rolled dense simulation") {
    const double eta = 0.3;
    const auto kraus = three_fold_channel(eta);
    const GateNoise noise{kraus, 3};
    auto rng = make_rng(35);
    const auto rho = random_density_matrix(4, rng);
    const auto obs = parse_all({"ZX", "XZ", "YY"});
    const CorrelationExperiment exp(rho, obs, {0.8});

    ComplexMatrix state = kron_oracle(probe_state({0.8}).matrix(), rho.matrix());
    for (const auto &s : obs) {
        const auto u = controlled_observable(s).matrix();
        state = u * state * u.adjoint();
        ComplexMatrix next(8, 8);
        for (const auto &a : kraus) {
            next += a * state * a.adjoint();
        }
        state = next;
    }
    const auto readout = kron_oracle(pauli_1q('X'), ComplexMatrix::identity(4));
    const double oracle = (state * readout).trace().real();
    CHECK(measure_correlation(exp, &noise) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("suite CSV layout") {
    std::ostringstream os;
    write_suite_csv(os, run_experiment_suite({1.0}));
    const std::string csv = os.str();
    CHECK(csv.rfind("line,raw_correlation,epsilon,corrected_correlation,sign,contribution\n", 0) == 0);
    CHECK(csv.find("c3,-1,1,-1,-1,1\n") != std::string::npos);
    CHECK(csv.find("beta,,,,,6\n") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
}

TEST_CASE("unital equivalence") {
    auto rng = make_rng(36);
    const std::vector<ComplexMatrix> identity{ComplexMatrix::identity(2)};
    const auto id_report = unital_equivalence_check(identity, {0.3}, 5, rng);
    CHECK(id_report.equivalent);
    CHECK(id_report.trials.size() == 5);

    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<ComplexMatrix> unitary{random_unitary(2, rng).matrix()};
        const auto r = unital_equivalence_check(unitary, {0.7}, 4, rng);
        CHECK(r.unitality_defect < 1e-12);
        CHECK(r.max_discrepancy < 1e-10);
        CHECK(r.equivalent);
    }
    const auto dephasing = dephasing_kraus(0.4);
    CHECK(unital_equivalence_check(dephasing, {0.5}, 4, rng).equivalent);

    // Discrepancy of the |+>-relaxing channel is (1 - eps) * gamma / 2.
    const auto bad = damping_towards_plus(0.6);
    const auto r = unital_equivalence_check(bad, {0.5}, 3, rng);
    CHECK_FALSE(r.equivalent);
    CHECK(r.unitality_defect > 0.1);
    CHECK(r.trials[0].discrepancy == doctest::Approx(0.5 * 0.6 / 2.0));
    for (const auto &t : r.trials) {
        CHECK(t.discrepancy == doctest::Approx(0.15));
    }

    const std::vector<ComplexMatrix> incomplete{ComplexMatrix{{1.0, 0.0}, {0.0, 0.5}}};
    CHECK_THROWS_AS(unital_equivalence_check(incomplete, {0.5}, 1, rng), InvalidArgument);
    CHECK_THROWS_AS(unital_equivalence_check(identity, {0.5}, 0, rng), InvalidArgument);
    const std::vector<ComplexMatrix> two_qubit{ComplexMatrix::identity(4)};
    CHECK_THROWS_AS(unital_equivalence_check(two_qubit, {0.5}, 1, rng), InvalidArgument);
}
