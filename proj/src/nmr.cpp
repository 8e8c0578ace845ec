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
#include "pmdqc/nmr.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "pmdqc/errors.hpp"

namespace pmdqc {

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix single_pauli(char pauli) {
    switch (pauli) {
    case 'X':
        return {{0.0, 1.0}, {1.0, 0.0}};
    case 'Y':
        return {{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}};
    case 'Z':
        return {{1.0, 0.0}, {0.0, -1.0}};
    default:
        throw InvalidArgument(std::string("spin_operator: unknown Pauli '") +
                              pauli + "'");
    }
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

InvalidArgument line_error(std::size_t line, const std::string &msg) {
    return InvalidArgument("params line " + std::to_string(line) + ": " + msg);
}

double to_double(const std::string &text, std::size_t line) {
    double v = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} ||
        ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw line_error(line, "invalid number '" + text + "'");
    }
    return v;
}

std::size_t to_index(std::string_view text, std::size_t line) {
    std::size_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} ||
        ptr != text.data() + text.size()) {
        throw line_error(line, "invalid index '" + std::string(text) + "'");
    }
    return v;
}

std::vector<Complex> shifted_order(const std::vector<Complex> &bins) {
    const std::size_t n = bins.size();
    const std::size_t half = n / 2;
    std::vector<Complex> out(n);
    for (std::size_t m = 0; m < n; ++m) {
        out[m] = bins[(m + n - half) % n];
    }
    return out;
}

void validate_acquisition(double dwell_ms, std::size_t n_samples,
                          double t2_star_ms) {
    if (!(dwell_ms > 0.0)) {
        throw InvalidArgument("dwell time must be positive");
    }
    if (!(t2_star_ms > 0.0)) {
        throw InvalidArgument("T2* must be positive");
    }
    if (n_samples < 2) {
        throw InvalidArgument("FID needs at least 2 samples");
    }
}

} // namespace

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
    if (!(i < j && j < n)) {
        throw InvalidArgument("pair_index: need i < j < n");
    }
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

void validate(const MolecularHamiltonianParams &p) {
    if (p.n_spins == 0 || p.n_spins > 4) {
        throw InvalidArgument("n_spins must be in [1, 4], got " +
                              std::to_string(p.n_spins));
    }
    const std::size_t pairs = pair_count(p.n_spins);
    if (p.omega.size() != p.n_spins) {
        throw InvalidArgument("expected " + std::to_string(p.n_spins) +
                              " chemical shifts, got " +
                              std::to_string(p.omega.size()));
    }
    if (p.dipolar.size() != pairs || p.scalar.size() != pairs) {
        throw InvalidArgument("expected " + std::to_string(pairs) +
                              " dipolar and scalar couplings");
    }
    if (!p.labels.empty() && p.labels.size() != p.n_spins) {
        throw InvalidArgument("expected " + std::to_string(p.n_spins) +
                              " labels, got " +
                              std::to_string(p.labels.size()));
    }
    auto finite = [](const std::vector<double> &v) {
        return std::all_of(v.begin(), v.end(),
                           [](double x) { return std::isfinite(x); });
    };
    if (!finite(p.omega) || !finite(p.dipolar) || !finite(p.scalar)) {
        throw InvalidArgument("Hamiltonian parameters must be finite");
    }
}

MolecularHamiltonianParams malonic_acid() {
    return {3,
            {6.380, -1.533, -5.650},
            {0.297, 0.780, 1.050},
            {-0.025, 0.071, 0.042},
            {"C1", "C2", "Cm"}};
}

MolecularHamiltonianParams parse_params(std::string_view text) {
    struct Entry {
        std::string value;
        std::size_t line;
    };
    std::map<std::string, Entry> entries;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string line = trim(raw);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw line_error(line_no, "expected key=value");
        }
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty()) {
            throw line_error(line_no, "empty key");
        }
        if (entries.contains(key)) {
            throw line_error(line_no, "duplicate key '" + key + "'");
        }
        entries.emplace(std::move(key), Entry{std::move(value), line_no});
    }

    const auto n_it = entries.find("n_spins");
    if (n_it == entries.end()) {
        throw InvalidArgument("params: missing n_spins");
    }
    const std::size_t n = to_index(n_it->second.value, n_it->second.line);
    if (n == 0 || n > 4) {
        throw line_error(n_it->second.line, "n_spins must be in [1, 4]");
    }

    MolecularHamiltonianParams p;
    p.n_spins = n;
    p.omega.assign(n, 0.0);
    p.dipolar.assign(pair_count(n), 0.0);
    p.scalar.assign(pair_count(n), 0.0);
    std::vector<bool> have_omega(n, false);

    for (const auto &[key, entry] : entries) {
        if (key == "n_spins") {
            continue;
        }
        if (key == "labels") {
            std::istringstream ls(entry.value);
            std::string label;
            while (std::getline(ls, label, ',')) {
                label = trim(label);
                if (label.empty()) {
                    throw line_error(entry.line, "empty label");
                }
                p.labels.push_back(label);
            }
            if (p.labels.size() != n) {
                throw line_error(entry.line,
                                 "expected " + std::to_string(n) +
                                     " labels, got " +
                                     std::to_string(p.labels.size()));
            }
            continue;
        }
        if (key.starts_with("omega_")) {
            const std::size_t i =
                to_index(std::string_view(key).substr(6), entry.line);
            if (i == 0 || i > n) {
                throw line_error(entry.line,
                                 "spin index out of range in '" + key + "'");
            }
            p.omega[i - 1] = to_double(entry.value, entry.line);
            have_omega[i - 1] = true;
            continue;
        }
        if (key.starts_with("D_") || key.starts_with("J_")) {
            const std::string_view rest = std::string_view(key).substr(2);
            const auto us = rest.find('_');
            if (us == std::string_view::npos) {
                throw line_error(entry.line, "coupling key '" + key +
                                                 "' must look like D_i_j");
            }
            const std::size_t i = to_index(rest.substr(0, us), entry.line);
            const std::size_t j = to_index(rest.substr(us + 1), entry.line);
            if (!(i >= 1 && i < j && j <= n)) {
                throw line_error(entry.line, "coupling '" + key +
                                                 "' needs 1 <= i < j <= n");
            }
            auto &target = key[0] == 'D' ? p.dipolar : p.scalar;
            target[pair_index(i - 1, j - 1, n)] =
                to_double(entry.value, entry.line);
            continue;
        }
        throw line_error(entry.line, "unknown key '" + key + "'");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!have_omega[i]) {
            throw InvalidArgument("params: missing omega_" +
                                  std::to_string(i + 1));
        }
    }
    if (p.labels.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            p.labels.push_back("S" + std::to_string(i + 1));
        }
    }
    validate(p);
    return p;
}

MolecularHamiltonianParams load_params(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot read params file '" + path.string() +
                              "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_params(buf.str());
    } catch (const InvalidArgument &e) {
        throw InvalidArgument(path.string() + ": " + e.what());
    }
}

std::string format_params(const MolecularHamiltonianParams &p) {
    validate(p);
    std::ostringstream os;
    os.precision(17);
    os << "n_spins=" << p.n_spins << '\n';
    if (!p.labels.empty()) {
        os << "labels=";
        for (std::size_t i = 0; i < p.labels.size(); ++i) {
            os << (i ? "," : "") << p.labels[i];
        }
        os << '\n';
    }
    for (std::size_t i = 0; i < p.n_spins; ++i) {
        os << "omega_" << i + 1 << '=' << p.omega[i] << '\n';
    }
    for (const char kind : {'D', 'J'}) {
        const auto &v = kind == 'D' ? p.dipolar : p.scalar;
        for (std::size_t i = 0; i < p.n_spins; ++i) {
            for (std::size_t j = i + 1; j < p.n_spins; ++j) {
                os << kind << '_' << i + 1 << '_' << j + 1 << '='
                   << v[pair_index(i, j, p.n_spins)] << '\n';
            }
        }
    }
    return os.str();
}

ComplexMatrix spin_operator(char pauli, std::size_t i, std::size_t n) {
    if (i >= n) {
        throw InvalidArgument("spin_operator: spin index out of range");
    }
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (std::size_t k = 0; k < n; ++k) {
        out = tensor(out, k == i ? single_pauli(pauli)
                                 : ComplexMatrix::identity(2));
    }
    return out;
}

ComplexMatrix build_hamiltonian(const MolecularHamiltonianParams &p) {
    validate(p);
    const std::size_t n = p.n_spins;
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix h(dim, dim);
    for (std::size_t i = 0; i < n; ++i) {
        h += spin_operator('Z', i, n) * (kPi * p.omega[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const ComplexMatrix zz =
                spin_operator('Z', i, n) * spin_operator('Z', j, n);
            const ComplexMatrix xx =
                spin_operator('X', i, n) * spin_operator('X', j, n);
            const ComplexMatrix yy =
                spin_operator('Y', i, n) * spin_operator('Y', j, n);
            const std::size_t k = pair_index(i, j, n);
            h += (zz * 2.0 - xx - yy) * (kPi * p.dipolar[k]);
            h += (zz + xx + yy) * (0.5 * kPi * p.scalar[k]);
        }
    }
    return h;
}

ComplexMatrix transverse_detection(std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix out(dim, dim);
    for (std::size_t i = 0; i < n; ++i) {
        out += spin_operator('X', i, n);
        out += spin_operator('Y', i, n) * Complex{0.0, 1.0};
    }
    return out;
}

DensityMatrix transverse_state(std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix m = ComplexMatrix::identity(dim);
    for (std::size_t i = 0; i < n; ++i) {
        m += spin_operator('X', i, n) * (1.0 / static_cast<double>(n));
    }
    m *= 1.0 / static_cast<double>(dim);
    return DensityMatrix(std::move(m));
}

DensityMatrix free_evolution(const DensityMatrix &rho, const ComplexMatrix &h,
                             double t_ms) {
    if (h.rows() != rho.dim() || h.cols() != rho.dim()) {
        throw InvalidArgument("free_evolution: Hamiltonian dimension does "
                              "not match the state");
    }
    return apply_unitary(rho, expm_hermitian(h, t_ms));
}

std::vector<TransitionLine> transition_lines(const DensityMatrix &rho0,
                                             const ComplexMatrix &h,
                                             const ComplexMatrix &detection,
                                             double min_amplitude) {
    const std::size_t d = rho0.dim();
    if (h.rows() != d || h.cols() != d || detection.rows() != d ||
        detection.cols() != d) {
        throw InvalidArgument("transition_lines: operator dimensions do not "
                              "match the state");
    }
    const auto eig = eigh(h);
    const ComplexMatrix vdag = eig.vectors.adjoint();
    const ComplexMatrix r = vdag * rho0.matrix() * eig.vectors;
    const ComplexMatrix o = vdag * detection * eig.vectors;

    std::vector<TransitionLine> raw;
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            const Complex amp = r(a, b) * o(b, a);
            raw.push_back({(eig.values[b] - eig.values[a]) / (2.0 * kPi), amp});
        }
    }
    std::sort(raw.begin(), raw.end(), [](const auto &x, const auto &y) {
        return x.frequency_khz < y.frequency_khz;
    });
    std::vector<TransitionLine> merged;
    for (const auto &l : raw) {
        if (!merged.empty() &&
            std::abs(l.frequency_khz - merged.back().frequency_khz) < 1e-9) {
            merged.back().amplitude += l.amplitude;
        } else {
            merged.push_back(l);
        }
    }
    std::erase_if(merged, [&](const TransitionLine &l) {
        return std::abs(l.amplitude) <= min_amplitude;
    });
    return merged;
}

FidTrace simulate_fid(const DensityMatrix &rho0, const ComplexMatrix &h,
                      const ComplexMatrix &detection, double dwell_ms,
                      std::size_t n_samples, double t2_star_ms,
                      Execution exec) {
    validate_acquisition(dwell_ms, n_samples, t2_star_ms);
    const auto lines = transition_lines(rho0, h, detection, 0.0);
    std::vector<kernels::Oscillator> modes;
    modes.reserve(lines.size());
    for (const auto &l : lines) {
        modes.push_back({2.0 * kPi * l.frequency_khz, l.amplitude});
    }
    return FidTrace{dwell_ms,
                    kernels::damped_oscillator_sum(modes, dwell_ms, n_samples,
                                                   t2_star_ms, exec),
                    t2_star_ms};
}

FidTrace simulate_fid(const DensityMatrix &rho0, const ComplexMatrix &h,
                      double dwell_ms, std::size_t n_samples,
                      double t2_star_ms, Execution exec) {
    const std::size_t d = rho0.dim();
    std::size_t n = 0;
    while ((std::size_t{1} << n) < d) {
        ++n;
    }
    if ((std::size_t{1} << n) != d) {
        throw InvalidArgument("simulate_fid: state dimension is not a power "
                              "of two");
    }
    return simulate_fid(rho0, h, transverse_detection(n), dwell_ms, n_samples,
                        t2_star_ms, exec);
}

Spectrum spectrum(const FidTrace &fid, Execution exec) {
    validate_acquisition(fid.dwell_ms, fid.samples.size(), fid.t2_star_ms);
    const std::size_t n = fid.samples.size();
    Spectrum s;
    s.amplitude = shifted_order(kernels::dft(fid.samples, exec));
    s.frequency_khz.resize(n);
    const double spacing = 1.0 / (static_cast<double>(n) * fid.dwell_ms);
    const auto half = static_cast<long long>(n / 2);
    for (std::size_t m = 0; m < n; ++m) {
        s.frequency_khz[m] =
            static_cast<double>(static_cast<long long>(m) - half) * spacing;
    }
    return s;
}

void write_spectrum_csv(std::ostream &os, const Spectrum &s) {
    const auto old_precision = os.precision(17);
    os << "frequency_khz,real,imag,magnitude\n";
    for (std::size_t m = 0; m < s.amplitude.size(); ++m) {
        const Complex a = s.amplitude[m];
        os << s.frequency_khz[m] << ',' << a.real() << ',' << a.imag() << ','
           << std::abs(a) << '\n';
    }
    os.precision(old_precision);
}

std::vector<Peak> find_peaks(const FidTrace &fid, double relative_threshold,
                             Execution exec) {
    FidTrace corrected = fid;
    corrected.samples[0] *= 0.5;
    const Spectrum s = spectrum(corrected, exec);
    const std::size_t n = s.amplitude.size();
    std::vector<double> re(n);
    double top = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        re[m] = s.amplitude[m].real();
        top = std::max(top, re[m]);
    }
    std::vector<Peak> peaks;
    if (top <= 0.0 || n < 3) {
        return peaks;
    }
    const double spacing = s.frequency_khz[1] - s.frequency_khz[0];
    const double floor = relative_threshold * top;
    for (std::size_t m = 1; m + 1 < n; ++m) {
        const double y0 = re[m - 1];
        const double y1 = re[m];
        const double y2 = re[m + 1];
        if (!(y1 > y0 && y1 >= y2 && y1 > floor)) {
            continue;
        }
        const double curvature = y0 - 2.0 * y1 + y2;
        double offset = 0.0;
        double height = y1;
        if (curvature < 0.0) {
            offset = 0.5 * (y0 - y2) / curvature;
            height = y1 - 0.25 * (y0 - y2) * offset;
        }
        peaks.push_back({s.frequency_khz[m] + offset * spacing, height});
    }
    return peaks;
}

std::vector<ClusterCenter> cluster_centers(const MolecularHamiltonianParams &p,
                                           const AcquisitionSettings &acq,
                                           double relative_threshold,
                                           Execution exec) {
    validate(p);
    validate_acquisition(acq.dwell_ms, acq.samples, acq.t2_star_ms);
    const std::size_t n = p.n_spins;
    const std::size_t dim = std::size_t{1} << n;
    const ComplexMatrix h = build_hamiltonian(p);

    std::vector<ClusterCenter> out;
    for (std::size_t i = 0; i < n; ++i) {
        ComplexMatrix start = ComplexMatrix::identity(dim);
        start += spin_operator('X', i, n);
        start *= 1.0 / static_cast<double>(dim);
        const ComplexMatrix detect =
            spin_operator('X', i, n) +
            spin_operator('Y', i, n) * Complex{0.0, 1.0};
        const FidTrace fid =
            simulate_fid(DensityMatrix(std::move(start)), h, detect,
                         acq.dwell_ms, acq.samples, acq.t2_star_ms, exec);
        const auto peaks = find_peaks(fid, relative_threshold, exec);
        const std::string label =
            p.labels.empty() ? "S" + std::to_string(i + 1) : p.labels[i];
        if (peaks.empty()) {
            throw NumericalError("no spectral lines found for spin " + label);
        }

        // Line amplitudes by time-domain least squares against damped
        // exponentials at the picked frequencies.
        const std::size_t m = peaks.size();
        std::vector<Complex> step(m);
        for (std::size_t l = 0; l < m; ++l) {
            step[l] = std::exp(Complex{-acq.dwell_ms / acq.t2_star_ms,
                                       2.0 * kPi * peaks[l].frequency_khz *
                                           acq.dwell_ms});
        }
        ComplexMatrix gram(m, m);
        std::vector<Complex> rhs(m);
        std::vector<Complex> basis(m, Complex{1.0, 0.0});
        for (std::size_t k = 0; k < fid.samples.size(); ++k) {
            for (std::size_t a = 0; a < m; ++a) {
                rhs[a] += std::conj(basis[a]) * fid.samples[k];
                for (std::size_t b = 0; b < m; ++b) {
                    gram(a, b) += std::conj(basis[a]) * basis[b];
                }
            }
            for (std::size_t a = 0; a < m; ++a) {
                basis[a] *= step[a];
            }
        }
        const auto amps = solve(std::move(gram), std::move(rhs));
        double weight = 0.0;
        double moment = 0.0;
        for (std::size_t l = 0; l < m; ++l) {
            weight += amps[l].real();
            moment += amps[l].real() * peaks[l].frequency_khz;
        }
        if (std::abs(weight) < 1e-300) {
            throw NumericalError("vanishing total line intensity for spin " +
                                 label);
        }
        out.push_back({label, p.omega[i], moment / weight, m});
    }
    return out;
}

} // namespace pmdqc
