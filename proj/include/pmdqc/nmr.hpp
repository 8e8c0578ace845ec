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
/// Solid-state NMR model of a small coupled spin system: internal
/// Hamiltonian, free evolution, T2*-damped free-induction decay and its
/// spectrum.
///
/// Units: shifts and couplings in kHz, times in ms. The Hamiltonian is
///   H = sum_i pi w_i Z_i
///     + sum_{i<j} pi D_ij (2 Z_i Z_j - X_i X_j - Y_i Y_j)
///     + sum_{i<j} (pi/2) J_ij (Z_i Z_j + X_i X_j + Y_i Y_j)
/// in rad/ms, so a single spin with shift w precesses at w kHz. The FID is
/// detected with sum_i (X_i + i Y_i), which puts a spin with positive shift
/// at positive frequency.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pmdqc/kernels.hpp"
#include "pmdqc/linalg.hpp"

namespace pmdqc {

struct MolecularHamiltonianParams {
    std::size_t n_spins = 0;
    std::vector<double> omega;   ///< chemical shifts, kHz
    std::vector<double> dipolar; ///< D_ij, kHz, pairs in pair_index order
    std::vector<double> scalar;  ///< J_ij, kHz, pairs in pair_index order
    std::vector<std::string> labels;
};

/// Position of the pair (i, j), i < j, in the row-major upper triangle.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);
std::size_t pair_count(std::size_t n);

/// Throws InvalidArgument on inconsistent lengths or more than 4 spins.
void validate(const MolecularHamiltonianParams &p);

/// The triply labelled malonic-acid table (C1, C2, Cm).
MolecularHamiltonianParams malonic_acid();

/// key=value format (see data/malonic_acid.params). Errors carry the line
/// number.
MolecularHamiltonianParams parse_params(std::string_view text);
MolecularHamiltonianParams load_params(const std::filesystem::path &path);
std::string format_params(const MolecularHamiltonianParams &p);

ComplexMatrix build_hamiltonian(const MolecularHamiltonianParams &p);

/// Single-spin operator `pauli` (one of 'X', 'Y', 'Z') on spin i of n.
ComplexMatrix spin_operator(char pauli, std::size_t i, std::size_t n);

/// sum_i (X_i + i Y_i)
ComplexMatrix transverse_detection(std::size_t n);

/// (1 + (1/n) sum_i X_i) / 2^n: uniform transverse deviation.
DensityMatrix transverse_state(std::size_t n);

/// exp(-i h t) rho exp(+i h t)
DensityMatrix free_evolution(const DensityMatrix &rho, const ComplexMatrix &h,
                             double t_ms);

struct FidTrace {
    double dwell_ms;
    std::vector<Complex> samples;
    double t2_star_ms;
};

/// Sample k = exp(-k dwell / T2*) tr(rho(k dwell) detection), evaluated
/// exactly from one eigendecomposition of h.
FidTrace simulate_fid(const DensityMatrix &rho0, const ComplexMatrix &h,
                      const ComplexMatrix &detection, double dwell_ms,
                      std::size_t n_samples, double t2_star_ms,
                      Execution exec = Execution::parallel);

/// Same, detected with transverse_detection.
FidTrace simulate_fid(const DensityMatrix &rho0, const ComplexMatrix &h,
                      double dwell_ms, std::size_t n_samples,
                      double t2_star_ms, Execution exec = Execution::parallel);

struct Spectrum {
    std::vector<double> frequency_khz; ///< ascending, spacing 1/(n dwell)
    std::vector<Complex> amplitude;
};

/// Unnormalised DFT of the samples, reordered so frequency runs from
/// -floor(n/2)/(n dwell) upwards.
Spectrum spectrum(const FidTrace &fid, Execution exec = Execution::parallel);

/// Header: frequency_khz,real,imag,magnitude
void write_spectrum_csv(std::ostream &os, const Spectrum &s);

/// One allowed transition: frequency (E_b - E_a) / 2pi and amplitude
/// <a|rho0|b><b|detection|a> in the eigenbasis of h.
struct TransitionLine {
    double frequency_khz;
    Complex amplitude;
};

/// Transitions with |amplitude| above `min_amplitude`, ascending frequency.
/// Degenerate frequencies (within 1e-9 kHz) are merged.
std::vector<TransitionLine> transition_lines(const DensityMatrix &rho0,
                                             const ComplexMatrix &h,
                                             const ComplexMatrix &detection,
                                             double min_amplitude = 1e-12);

struct Peak {
    double frequency_khz;
    double height;
};

/// Local maxima of the absorption (real) spectrum above
/// `relative_threshold` times the largest value, with parabolic
/// interpolation between bins. The first FID point is halved before the
/// transform to remove the constant baseline offset of a sampled decay.
std::vector<Peak> find_peaks(const FidTrace &fid, double relative_threshold,
                             Execution exec = Execution::parallel);

struct AcquisitionSettings {
    std::size_t samples = 4096;
    double dwell_ms = 1.0 / 32.0; ///< +-16 kHz spectral window
    double t2_star_ms = 2.0;
};

struct ClusterCenter {
    std::string label;
    double shift_khz;  ///< nominal chemical shift of the spin
    double center_khz; ///< measured multiplet center
    std::size_t lines; ///< peaks used
};

/// Multiplet center per spin: the spin-selective spectrum (start in X_i,
/// detect X_i + i Y_i) is peak-picked, line amplitudes at the picked
/// frequencies are solved by linear least squares against the known
/// T2*-damped line shape, and the amplitude-weighted mean frequency is
/// returned.
std::vector<ClusterCenter> cluster_centers(const MolecularHamiltonianParams &p,
                                           const AcquisitionSettings &acq = {},
                                           double relative_threshold = 1e-4,
                                           Execution exec = Execution::parallel);

} // namespace pmdqc
