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
/// Per-gate computational-basis dephasing and the beta-versus-t/T2 sweep.
///
/// Single-qubit dephasing uses the complete Kraus pair
///   A0 = diag(1, sqrt(1 - eta)),  A1 = diag(0, sqrt(eta)),
/// with eta = 1 - exp(-t / T2).

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "pmdqc/kernels.hpp"
#include "pmdqc/linalg.hpp"

namespace pmdqc {

struct ProbeSpec;
struct SuiteResult;

/// eta = 1 - exp(-t/T2). Requires t >= 0 and T2 > 0.
double dephasing_eta(double t_ms, double t2_ms);

std::array<ComplexMatrix, 2> dephasing_kraus(double eta);

/// Lambda^{(x) n}: 2^n tensor-product Kraus operators on n qubits.
std::vector<ComplexMatrix> n_fold_dephasing(double eta, std::size_t n);
std::vector<ComplexMatrix> three_fold_channel(double eta);

class NoiseModel {
  public:
    /// pulse length t and dephasing time T2 in ms; gates_per_experiment is the
    /// number of channel applications in each of the six experiments.
    NoiseModel(double pulse_length_ms, double dephasing_time_ms,
               std::size_t gates_per_experiment = 3);

    [[nodiscard]] double pulse_length_ms() const noexcept { return t_; }
    [[nodiscard]] double dephasing_time_ms() const noexcept { return t2_; }
    [[nodiscard]] std::size_t gates_per_experiment() const noexcept {
        return gates_;
    }
    [[nodiscard]] double ratio() const noexcept { return t_ / t2_; }
    [[nodiscard]] double eta() const { return dephasing_eta(t_, t2_); }

  private:
    double t_;
    double t2_;
    std::size_t gates_;
};

/// Epsilon-corrected beta of the six-experiment suite under `model`.
double noisy_suite_beta(const NoiseModel &model, const ProbeSpec &probe);

struct SweepPoint {
    double ratio;
    double eta;
    std::array<double, 6> terms; ///< corrected correlations, r1..c3
    double beta;
};

struct SweepSeries {
    std::vector<SweepPoint> points;
};

/// Evaluates the suite at T2 = t / ratio for every ratio. Ratios must be
/// positive and strictly increasing.
SweepSeries beta_sweep(double t_ms, std::span<const double> ratios,
                       const ProbeSpec &probe, std::size_t gates = 3,
                       Execution exec = Execution::parallel);

/// 50 log-spaced ratios in [0.01, 2].
std::vector<double> default_sweep_ratios();

/// Header: ratio_t_over_T2,eta,beta_r1,...,beta_c3,beta_total
void write_sweep_csv(std::ostream &os, const SweepSeries &series);

} // namespace pmdqc
