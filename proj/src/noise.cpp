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
#include "pmdqc/noise.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "pmdqc/dqc1.hpp"
#include "pmdqc/errors.hpp"

namespace pmdqc {

double dephasing_eta(double t_ms, double t2_ms) {
    if (!(t2_ms > 0.0)) {
        throw InvalidArgument("dephasing time T2 must be positive, got " +
                              std::to_string(t2_ms));
    }
    if (!(t_ms >= 0.0)) {
        throw InvalidArgument("pulse length t must be non-negative, got " +
                              std::to_string(t_ms));
    }
    return -std::expm1(-t_ms / t2_ms);
}

std::array<ComplexMatrix, 2> dephasing_kraus(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw InvalidArgument("dephasing strength eta must lie in [0, 1], got " +
                              std::to_string(eta));
    }
    return {ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - eta)}},
            ComplexMatrix{{0.0, 0.0}, {0.0, std::sqrt(eta)}}};
}

std::vector<ComplexMatrix> n_fold_dephasing(double eta, std::size_t n) {
    if (n == 0 || (std::size_t{1} << n) > kMaxDim) {
        throw InvalidArgument("n_fold_dephasing: qubit count must be in "
                              "[1, 4]");
    }
    const auto single = dephasing_kraus(eta);
    std::vector<ComplexMatrix> ops{ComplexMatrix::identity(1)};
    for (std::size_t q = 0; q < n; ++q) {
        std::vector<ComplexMatrix> next;
        next.reserve(ops.size() * 2);
        for (const auto &op : ops) {
            for (const auto &a : single) {
                next.push_back(tensor(op, a));
            }
        }
        ops = std::move(next);
    }
    return ops;
}

std::vector<ComplexMatrix> three_fold_channel(double eta) {
    return n_fold_dephasing(eta, 3);
}

NoiseModel::NoiseModel(double pulse_length_ms, double dephasing_time_ms,
                       std::size_t gates_per_experiment)
    : t_(pulse_length_ms), t2_(dephasing_time_ms),
      gates_(gates_per_experiment) {
    if (!(t_ >= 0.0) || !std::isfinite(t_)) {
        throw InvalidArgument("pulse length t must be finite and "
                              "non-negative");
    }
    if (!(t2_ > 0.0)) {
        throw InvalidArgument("dephasing time T2 must be positive");
    }
    if (gates_ == 0) {
        throw InvalidArgument("gates_per_experiment must be at least 1");
    }
}

double noisy_suite_beta(const NoiseModel &model, const ProbeSpec &probe) {
    return run_experiment_suite(probe, model, true).beta;
}

SweepSeries beta_sweep(double t_ms, std::span<const double> ratios,
                       const ProbeSpec &probe, std::size_t gates,
                       Execution exec) {
    if (!(t_ms > 0.0) || !std::isfinite(t_ms)) {
        throw InvalidArgument("sweep pulse length t must be positive");
    }
    if (ratios.empty()) {
        throw InvalidArgument("sweep needs at least one ratio");
    }
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (!(ratios[i] > 0.0) || !std::isfinite(ratios[i])) {
            throw InvalidArgument("sweep ratios must be positive and finite, "
                                  "got " +
                                  std::to_string(ratios[i]));
        }
        if (i > 0 && !(ratios[i] > ratios[i - 1])) {
            throw InvalidArgument("sweep ratios must be strictly increasing");
        }
    }
    validate(probe);
    if (probe.epsilon == 0.0) {
        throw InvalidArgument("sweep requires epsilon > 0");
    }
    if (gates == 0) {
        throw InvalidArgument("gates_per_experiment must be at least 1");
    }

    auto points = kernels::map_indexed<SweepPoint>(
        ratios.size(),
        [&](std::size_t i) {
            const NoiseModel model(t_ms, t_ms / ratios[i], gates);
            const SuiteResult r = run_experiment_suite(probe, model, true);
            SweepPoint pt{ratios[i], model.eta(), {}, r.beta};
            for (std::size_t k = 0; k < 6; ++k) {
                pt.terms[k] = r.lines[k].corrected_correlation;
            }
            return pt;
        },
        exec);
    return SweepSeries{std::move(points)};
}

std::vector<double> default_sweep_ratios() {
    constexpr std::size_t kCount = 50;
    constexpr double kLo = 0.01;
    constexpr double kHi = 2.0;
    std::vector<double> r(kCount);
    for (std::size_t i = 0; i < kCount; ++i) {
        r[i] = kLo * std::pow(kHi / kLo, static_cast<double>(i) /
                                             static_cast<double>(kCount - 1));
    }
    r.back() = kHi;
    return r;
}

void write_sweep_csv(std::ostream &os, const SweepSeries &series) {
    const auto old_precision = os.precision(17);
    os << "ratio_t_over_T2,eta,beta_r1,beta_r2,beta_r3,beta_c1,beta_c2,"
          "beta_c3,beta_total\n";
    for (const auto &p : series.points) {
        os << p.ratio << ',' << p.eta;
        for (const double v : p.terms) {
            os << ',' << v;
        }
        os << ',' << p.beta << '\n';
    }
    os.precision(old_precision);
}

} // namespace pmdqc
