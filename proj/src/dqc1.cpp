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
#include "pmdqc/dqc1.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "pmdqc/errors.hpp"
#include "pmdqc/kernels.hpp"
#include "pmdqc/random.hpp"

namespace pmdqc {

namespace {

const ComplexMatrix &plus_projector() {
    static const ComplexMatrix p{{0.5, 0.5}, {0.5, 0.5}};
    return p;
}

const ComplexMatrix &pauli_x() {
    static const ComplexMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    return x;
}

// Number of channel uses following gate k of m when `total` are spread
// evenly.
std::size_t uses_after_gate(std::size_t k, std::size_t m, std::size_t total) {
    return (total * (k + 1)) / m - (total * k) / m;
}

} // namespace

void validate(const ProbeSpec &p) {
    if (!(p.epsilon >= 0.0 && p.epsilon <= 1.0)) {
        throw InvalidArgument("epsilon must lie in [0, 1], got " +
                              std::to_string(p.epsilon));
    }
}

DensityMatrix probe_state(const ProbeSpec &p) {
    validate(p);
    const double e = p.epsilon;
    ComplexMatrix m = ComplexMatrix::identity(2) * (0.5 * (1.0 - e));
    m += plus_projector() * e;
    return DensityMatrix(std::move(m));
}

UnitaryMatrix controlled_observable(const PauliString &s) {
    if (!s.is_hermitian()) {
        throw InvalidArgument("controlled_observable: observable '" +
                              format_pauli(s) +
                              "' has phase +-i and is not Hermitian");
    }
    const ComplexMatrix block = to_matrix(s);
    const std::size_t d = block.rows();
    ComplexMatrix u(2 * d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        u(i, i) = 1.0;
    }
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            u(d + r, d + c) = block(r, c);
        }
    }
    return UnitaryMatrix(std::move(u));
}

CorrelationExperiment::CorrelationExperiment(DensityMatrix system_state,
                                             std::vector<PauliString> observables,
                                             ProbeSpec probe)
    : rho_(std::move(system_state)), obs_(std::move(observables)),
      probe_(probe) {
    validate(probe_);
    if (2 * rho_.dim() > kMaxDim) {
        throw InvalidArgument("system dimension " + std::to_string(rho_.dim()) +
                              " leaves no room for the probe qubit");
    }
    for (std::size_t i = 0; i < obs_.size(); ++i) {
        const auto &s = obs_[i];
        if ((std::size_t{1} << s.size()) != rho_.dim()) {
            throw InvalidArgument("observable '" + format_pauli(s) +
                                  "' does not match system dimension " +
                                  std::to_string(rho_.dim()));
        }
        if (!s.is_hermitian()) {
            throw InvalidArgument("observable '" + format_pauli(s) +
                                  "' is not Hermitian");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!commutes(obs_[j], s)) {
                throw InvalidArgument("observables '" + format_pauli(obs_[j]) +
                                      "' and '" + format_pauli(s) +
                                      "' do not commute");
            }
        }
    }
}

DensityMatrix run_circuit(const CorrelationExperiment &exp,
                          const GateNoise *noise) {
    DensityMatrix state = tensor(probe_state(exp.probe()), exp.system_state());
    const auto &obs = exp.observables();
    auto add_noise = [&](std::size_t uses) {
        for (std::size_t u = 0; u < uses; ++u) {
            state = apply_kraus(state, noise->kraus);
        }
    };
    for (std::size_t k = 0; k < obs.size(); ++k) {
        state = apply_unitary(state, controlled_observable(obs[k]));
        if (noise != nullptr) {
            add_noise(uses_after_gate(k, obs.size(), noise->applications));
        }
    }
    if (noise != nullptr && obs.empty()) {
        add_noise(noise->applications);
    }
    return state;
}

double measure_correlation(const CorrelationExperiment &exp,
                           const GateNoise *noise, double tol) {
    const DensityMatrix final_state = run_circuit(exp, noise);
    const ComplexMatrix readout = tensor(
        pauli_x(), ComplexMatrix::identity(exp.system_state().dim()));
    return expectation(final_state, readout, tol);
}

OutcomeProbabilities outcome_probabilities(const CorrelationExperiment &exp,
                                           double tol) {
    if (exp.observables().size() != 1) {
        throw InvalidArgument("outcome_probabilities expects a single "
                              "observable, got " +
                              std::to_string(exp.observables().size()));
    }
    const DensityMatrix final_state = run_circuit(exp);
    const ComplexMatrix id = ComplexMatrix::identity(exp.system_state().dim());
    const ComplexMatrix minus_projector =
        ComplexMatrix::identity(2) - plus_projector();
    return {expectation(final_state, tensor(plus_projector(), id), tol),
            expectation(final_state, tensor(minus_projector, id), tol)};
}

SuiteResult run_experiment_suite(const ProbeSpec &p,
                                 const std::optional<NoiseModel> &noise,
                                 bool epsilon_correction, double tol) {
    validate(p);
    if (epsilon_correction && p.epsilon == 0.0) {
        throw InvalidArgument("epsilon correction requires epsilon > 0 "
                              "(cannot divide by zero)");
    }
    const PMSquare sq = pm_square();
    std::optional<GateNoise> gate_noise;
    if (noise) {
        gate_noise = GateNoise{three_fold_channel(noise->eta()),
                               noise->gates_per_experiment()};
    }
    const DensityMatrix system = DensityMatrix::maximally_mixed(4);

    const auto raw = kernels::map_indexed<double>(
        kAllLines.size(),
        [&](std::size_t k) {
            const auto cells = line_cells(kAllLines[k]);
            std::vector<PauliString> obs;
            for (const auto &cell : cells) {
                obs.push_back(sq.at(cell[0], cell[1]));
            }
            const CorrelationExperiment exp(system, std::move(obs), p);
            return measure_correlation(
                exp, gate_noise ? &*gate_noise : nullptr, tol);
        },
        Execution::parallel);

    SuiteResult result{{}, 0.0, epsilon_correction};
    for (std::size_t k = 0; k < kAllLines.size(); ++k) {
        const double corrected = epsilon_correction ? raw[k] / p.epsilon : raw[k];
        const int sign = sq.line_signs[k];
        result.lines[k] = LineResult{kAllLines[k], raw[k], p.epsilon,
                                     corrected, sign, sign * corrected};
        result.beta += sign * corrected;
    }
    return result;
}

void write_suite_csv(std::ostream &os, const SuiteResult &result) {
    const auto old_precision = os.precision(17);
    os << "line,raw_correlation,epsilon,corrected_correlation,sign,"
          "contribution\n";
    for (const auto &l : result.lines) {
        os << to_string(l.line) << ',' << l.raw_correlation << ','
           << l.epsilon << ',' << l.corrected_correlation << ',' << l.sign
           << ',' << l.contribution << '\n';
    }
    os << "beta,,,,," << result.beta << '\n';
    os.precision(old_precision);
}

UnitalReport unital_equivalence_check(std::span<const ComplexMatrix> kraus,
                                      const ProbeSpec &p, std::size_t trials,
                                      std::mt19937_64 &rng, double tol) {
    validate(p);
    if (trials == 0) {
        throw InvalidArgument("unital_equivalence_check needs at least one "
                              "trial");
    }
    for (const auto &a : kraus) {
        if (a.rows() != 2 || a.cols() != 2) {
            throw InvalidArgument("unital_equivalence_check expects a "
                                  "single-qubit channel");
        }
    }
    if (!is_complete_kraus_set(kraus, tol)) {
        throw InvalidArgument("unital_equivalence_check: Kraus set is not "
                              "trace preserving");
    }
    const double e = p.epsilon;
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);

    UnitalReport report{};
    report.unitality_defect = apply_kraus(mixed, kraus, tol)
                                  .matrix()
                                  .max_abs_diff(mixed.matrix());

    for (std::size_t t = 0; t < trials; ++t) {
        const DensityMatrix rho_a =
            t == 0 ? DensityMatrix(plus_projector())
                   : random_density_matrix(2, rng);
        const DensityMatrix out_a = apply_kraus(rho_a, kraus, tol);
        const double p_eff =
            0.5 * (1.0 - e) + e * expectation(out_a, plus_projector(), tol);

        ComplexMatrix blend = mixed.matrix() * (1.0 - e);
        blend += rho_a.matrix() * e;
        const DensityMatrix out_mixed =
            apply_kraus(DensityMatrix(std::move(blend)), kraus, tol);
        const double p_mix = expectation(out_mixed, plus_projector(), tol);

        const double d = std::abs(p_eff - p_mix);
        report.max_discrepancy = std::max(report.max_discrepancy, d);
        report.trials.push_back({rho_a.matrix(), p_eff, p_mix, d});
    }
    report.equivalent = report.max_discrepancy <= tol;
    return report;
}

} // namespace pmdqc
