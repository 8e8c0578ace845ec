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
/// Probe-qubit (one clean qubit) estimation of correlations between
/// commuting +-1 observables.
///
/// The probe is tensor factor 0. It starts in
///   rho_eps = (1 - eps) 1/2 + eps |+><+|,
/// each observable S is applied as U_S = |0><0| (x) 1 + |1><1| (x) S, and the
/// probe is read out in the X basis, giving <X (x) 1> = eps tr(rho prod S).

#include <array>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "pmdqc/linalg.hpp"
#include "pmdqc/mermin_peres.hpp"
#include "pmdqc/noise.hpp"
#include "pmdqc/pauli.hpp"

namespace pmdqc {

struct ProbeSpec {
    /// Probe polarisation, equivalently measurement efficiency, in [0, 1].
    double epsilon = 1.0;
};

void validate(const ProbeSpec &p);

/// (1 - eps) 1/2 + eps |+><+|
DensityMatrix probe_state(const ProbeSpec &p);

/// |0><0| (x) 1_d + |1><1| (x) S. Requires a Hermitian (+-1 phase) string.
UnitaryMatrix controlled_observable(const PauliString &s);

/// Kraus channel applied after controlled gates. `applications` channel
/// uses are spread as evenly as possible over the gates of one experiment
/// (gate k is followed by floor(a(k+1)/m) - floor(a k/m) uses).
struct GateNoise {
    std::vector<ComplexMatrix> kraus;
    std::size_t applications;
};

class CorrelationExperiment {
  public:
    /// Throws InvalidArgument if the observables do not pairwise commute,
    /// are not Hermitian, or do not match the state's dimension.
    CorrelationExperiment(DensityMatrix system_state,
                          std::vector<PauliString> observables,
                          ProbeSpec probe);

    [[nodiscard]] const DensityMatrix &system_state() const { return rho_; }
    [[nodiscard]] const std::vector<PauliString> &observables() const {
        return obs_;
    }
    [[nodiscard]] const ProbeSpec &probe() const { return probe_; }

  private:
    DensityMatrix rho_;
    std::vector<PauliString> obs_;
    ProbeSpec probe_;
};

/// Joint probe+system state after the controlled gates (and noise, if any).
DensityMatrix run_circuit(const CorrelationExperiment &exp,
                          const GateNoise *noise = nullptr);

/// <X (x) 1_d> on the final state.
double measure_correlation(const CorrelationExperiment &exp,
                           const GateNoise *noise = nullptr,
                           double tol = kAlgebraicTol);

struct OutcomeProbabilities {
    double p_plus;
    double p_minus;
};

/// X-basis outcome probabilities of the probe for a single observable.
OutcomeProbabilities outcome_probabilities(const CorrelationExperiment &exp,
                                           double tol = kAlgebraicTol);

struct LineResult {
    Line line;
    double raw_correlation;
    double epsilon;
    double corrected_correlation;
    int sign;
    double contribution;
};

struct SuiteResult {
    std::array<LineResult, 6> lines;
    double beta;
    bool epsilon_corrected;
};

/// The six experiments for the lines of pm_square() on a maximally mixed
/// two-qubit system. With `epsilon_correction` each raw value is divided by
/// epsilon (fair sampling); epsilon = 0 then throws InvalidArgument.
SuiteResult run_experiment_suite(const ProbeSpec &p,
                                 const std::optional<NoiseModel> &noise = {},
                                 bool epsilon_correction = true,
                                 double tol = kAlgebraicTol);

/// Header: line,raw_correlation,epsilon,corrected_correlation,sign,contribution
/// followed by one row per line and a final `beta` row.
void write_suite_csv(std::ostream &os, const SuiteResult &result);

struct UnitalTrial {
    /// Probe input state rho_a fed to the map in this trial.
    ComplexMatrix probe_input;
    /// p(+1) from an eps-efficient X readout of Lambda(rho_a).
    double p_plus_efficient;
    /// p(+1) from a faithful X readout of Lambda((1-eps) 1/2 + eps rho_a).
    double p_plus_mixed;
    double discrepancy;
};

struct UnitalReport {
    /// || Lambda(1/2) - 1/2 ||_max
    double unitality_defect;
    std::vector<UnitalTrial> trials;
    double max_discrepancy;
    bool equivalent;
};

/// Compares eps-efficient readout with readout of a partially mixed probe
/// for a single-qubit channel. Trial 0 uses rho_a = |+><+|; later trials draw
/// random probe states from `rng`. Throws InvalidArgument for an incomplete
/// Kraus set.
UnitalReport unital_equivalence_check(std::span<const ComplexMatrix> kraus,
                                      const ProbeSpec &p, std::size_t trials,
                                      std::mt19937_64 &rng,
                                      double tol = kAlgebraicTol);

} // namespace pmdqc
