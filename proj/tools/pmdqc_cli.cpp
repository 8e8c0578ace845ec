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
// pmdqc: command-line front end.
//
//   pmdqc verify   [--square FILE]
//   pmdqc beta     [--epsilon E] [--t MS --t2 MS --gates N] [--no-epsilon-correction]
//   pmdqc nchv     [--square FILE]
//   pmdqc dqc1     [--epsilon E] [--t MS --t2 MS --gates N] [--out FILE]
//   pmdqc sweep    [--t MS] [--ratios SPEC] [--gates N] [--epsilon E] [--out FILE]
//   pmdqc spectrum [--params FILE] [--samples N] [--dwell MS] [--t2star MS] [--out FILE]
//
// Exit status: 0 success, 1 invalid input, 2 numerical-integrity failure.

#include <CLI11.hpp>
#include <fmt/core.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "pmdqc/dqc1.hpp"
#include "pmdqc/errors.hpp"
#include "pmdqc/grid.hpp"
#include "pmdqc/mermin_peres.hpp"
#include "pmdqc/nmr.hpp"
#include "pmdqc/noise.hpp"

namespace {

using namespace pmdqc;

struct RunConfig {
    double epsilon = 1.0;
    double t_ms = 1.5;
    std::optional<double> t2_ms;
    std::size_t gates = 3;
    std::string ratios = "0.01:2:50log";
    std::string params_file;
    std::string square_file;
    std::string output;
    double tolerance = kAlgebraicTol;
    bool no_epsilon_correction = false;
    std::size_t samples = 4096;
    double dwell_ms = 1.0 / 32.0;
    double t2_star_ms = 2.0;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot read file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PMSquare load_square(const RunConfig &cfg) {
    if (cfg.square_file.empty()) {
        return pm_square();
    }
    try {
        return parse_square(read_file(cfg.square_file));
    } catch (const InvalidArgument &e) {
        throw InvalidArgument("--square " + cfg.square_file + ": " + e.what());
    }
}

// CSV to --out or stdout; the summary goes to stderr when CSV uses stdout.
class Sinks {
  public:
    explicit Sinks(const std::string &path) {
        if (!path.empty()) {
            file_.open(path, std::ios::out | std::ios::trunc);
            if (!file_) {
                throw InvalidArgument("--out: cannot write '" + path + "'");
            }
        }
    }
    std::ostream &csv() { return file_.is_open() ? file_ : std::cout; }
    std::FILE *summary() const { return file_.is_open() ? stdout : stderr; }

  private:
    std::ofstream file_;
};

std::optional<NoiseModel> noise_from(const RunConfig &cfg) {
    if (!cfg.t2_ms) {
        return std::nullopt;
    }
    return NoiseModel(cfg.t_ms, *cfg.t2_ms, cfg.gates);
}

int cmd_verify(const RunConfig &cfg) {
    const PMSquare sq = load_square(cfg);
    const auto report = verify_square(sq);
    fmt::print("square:\n");
    for (const auto &row : sq.grid) {
        fmt::print("  {:>4} {:>4} {:>4}\n", format_pauli(row[0]),
                   format_pauli(row[1]), format_pauli(row[2]));
    }
    bool dense_ok = true;
    for (const auto &l : report.lines) {
        const auto cells = line_cells(l.line);
        // Cross-check the symbolic product against dense matrices.
        ComplexMatrix dense = to_matrix(sq.at(cells[0][0], cells[0][1])) *
                              to_matrix(sq.at(cells[1][0], cells[1][1])) *
                              to_matrix(sq.at(cells[2][0], cells[2][1]));
        const bool agrees =
            dense.approx_equal(to_matrix(l.product), cfg.tolerance);
        dense_ok = dense_ok && agrees;
        fmt::print("  {}: {} {} {}  commute=[{},{},{}]  product={:>4}  "
                   "expected={:>2}  {}{}\n",
                   to_string(l.line),
                   format_pauli(sq.at(cells[0][0], cells[0][1])),
                   format_pauli(sq.at(cells[1][0], cells[1][1])),
                   format_pauli(sq.at(cells[2][0], cells[2][1])),
                   l.commutes[0] ? "y" : "n", l.commutes[1] ? "y" : "n",
                   l.commutes[2] ? "y" : "n", format_pauli(l.product),
                   l.expected_sign > 0 ? "+1"
                                       : (l.expected_sign < 0 ? "-1" : "--"),
                   (l.all_commute() && l.product_ok) ? "ok" : "FAIL",
                   agrees ? "" : " (dense mismatch)");
    }
    if (!dense_ok) {
        throw NumericalError("symbolic and dense line products disagree");
    }
    const bool pass = report.passed();
    fmt::print("{}\n", pass ? "PASS" : "FAIL");
    return pass ? 0 : 1;
}

void print_suite(std::FILE *out, const SuiteResult &r) {
    for (const auto &l : r.lines) {
        fmt::print(out, "  {}: raw = {:+.6f}  corrected = {:+.6f}  sign = {:+d}"
                        "  contribution = {:+.6f}\n",
                   to_string(l.line), l.raw_correlation,
                   l.corrected_correlation, l.sign, l.contribution);
    }
    fmt::print(out, "beta = {:.6f}\n", r.beta);
}

int cmd_beta(const RunConfig &cfg) {
    const auto noise = noise_from(cfg);
    const SuiteResult r = run_experiment_suite(
        ProbeSpec{cfg.epsilon}, noise, !cfg.no_epsilon_correction, cfg.tolerance);
    fmt::print("epsilon = {:.6f}{}\n", cfg.epsilon,
               r.epsilon_corrected ? " (fair-sampling corrected)" : " (raw)");
    if (noise) {
        fmt::print("noise: t = {:.6f} ms, T2 = {:.6f} ms, eta = {:.6f}, "
                   "gates = {}\n",
                   noise->pulse_length_ms(), noise->dephasing_time_ms(),
                   noise->eta(), noise->gates_per_experiment());
    }
    print_suite(stdout, r);
    fmt::print("noncontextual bound = 4\n");
    return 0;
}

int cmd_nchv(const RunConfig &cfg) {
    const PMSquare sq = load_square(cfg);
    const NchvMax best = nchv_max(sq);
    fmt::print("nchv_max = {:.0f}\n", best.value);
    fmt::print("maximising assignment (index {}):\n", best.argmax.index());
    for (std::size_t r = 0; r < 3; ++r) {
        fmt::print("  {:+d} {:+d} {:+d}\n", best.argmax.at(r, 0),
                   best.argmax.at(r, 1), best.argmax.at(r, 2));
    }
    const auto cb = classical_beta(best.argmax, sq);
    fmt::print("line values:");
    for (std::size_t k = 0; k < 6; ++k) {
        fmt::print(" {}={:+d}", to_string(kAllLines[k]), cb.line_values[k]);
    }
    fmt::print("\n");
    return 0;
}

int cmd_dqc1(const RunConfig &cfg) {
    const SuiteResult r =
        run_experiment_suite(ProbeSpec{cfg.epsilon}, noise_from(cfg),
                             !cfg.no_epsilon_correction, cfg.tolerance);
    Sinks sinks(cfg.output);
    write_suite_csv(sinks.csv(), r);
    sinks.csv().flush();
    fmt::print(sinks.summary(), "beta = {:.6f}\n", r.beta);
    return 0;
}

int cmd_sweep(const RunConfig &cfg) {
    std::vector<double> ratios;
    try {
        ratios = parse_grid_spec(cfg.ratios);
    } catch (const InvalidArgument &e) {
        throw InvalidArgument(std::string("--ratios: ") + e.what());
    }
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (!(ratios[i] > 0.0)) {
            throw InvalidArgument("--ratios: every ratio t/T2 must be positive");
        }
        if (i > 0 && !(ratios[i] > ratios[i - 1])) {
            throw InvalidArgument("--ratios: ratios must be strictly increasing");
        }
    }
    if (cfg.epsilon == 0.0) {
        throw InvalidArgument("--epsilon: sweep needs epsilon > 0");
    }
    const SweepSeries series =
        beta_sweep(cfg.t_ms, ratios, ProbeSpec{cfg.epsilon}, cfg.gates);
    Sinks sinks(cfg.output);
    write_sweep_csv(sinks.csv(), series);
    sinks.csv().flush();

    fmt::print(sinks.summary(),
               "{} points: beta = {:.6f} at t/T2 = {:.6f}, {:.6f} at t/T2 = "
               "{:.6f}\n",
               series.points.size(), series.points.front().beta,
               series.points.front().ratio, series.points.back().beta,
               series.points.back().ratio);
    struct Marker {
        double ratio;
        double reference;
    };
    for (const Marker m : {Marker{0.05, 5.3}, Marker{0.75, 1.1}}) {
        for (const auto &p : series.points) {
            if (std::abs(p.ratio - m.ratio) <= 1e-9 * m.ratio) {
                fmt::print(sinks.summary(),
                           "t/T2 = {:.6f}: beta = {:.6f} (reference {:.1f})\n",
                           p.ratio, p.beta, m.reference);
            }
        }
    }
    return 0;
}

int cmd_spectrum(const RunConfig &cfg) {
    MolecularHamiltonianParams params = malonic_acid();
    if (!cfg.params_file.empty()) {
        try {
            params = load_params(cfg.params_file);
        } catch (const InvalidArgument &e) {
            throw InvalidArgument(std::string("--params: ") + e.what());
        }
    }
    const AcquisitionSettings acq{cfg.samples, cfg.dwell_ms, cfg.t2_star_ms};
    const ComplexMatrix h = build_hamiltonian(params);
    const FidTrace fid =
        simulate_fid(transverse_state(params.n_spins), h, acq.dwell_ms,
                     acq.samples, acq.t2_star_ms);
    const Spectrum s = spectrum(fid);
    Sinks sinks(cfg.output);
    write_spectrum_csv(sinks.csv(), s);
    sinks.csv().flush();

    fmt::print(sinks.summary(), "bin width = {:.6f} kHz\n",
               s.frequency_khz[1] - s.frequency_khz[0]);
    for (const auto &c : cluster_centers(params, acq)) {
        fmt::print(sinks.summary(),
                   "{}: cluster center = {:.6f} kHz (shift {:.6f} kHz, {} "
                   "lines)\n",
                   c.label, c.center_khz, c.shift_khz, c.lines);
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Peres-Mermin contextuality with one clean qubit"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_epsilon = [&](CLI::App *sub) {
        sub->add_option("--epsilon", cfg.epsilon, "probe polarisation in [0,1]")
            ->check(CLI::Range(0.0, 1.0));
        sub->add_flag("--no-epsilon-correction", cfg.no_epsilon_correction,
                      "report raw probe values instead of dividing by epsilon");
        sub->add_option("--tolerance", cfg.tolerance, "numerical tolerance")
            ->check(CLI::PositiveNumber);
    };
    auto add_noise = [&](CLI::App *sub) {
        sub->add_option("--t", cfg.t_ms, "pulse length (ms)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--t2", cfg.t2_ms, "dephasing time T2 (ms)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--gates", cfg.gates,
                        "dephasing applications per experiment")
            ->check(CLI::PositiveNumber);
    };

    auto *verify = app.add_subcommand("verify", "check the square's structure");
    verify->add_option("--square", cfg.square_file, "square text file");
    verify->add_option("--tolerance", cfg.tolerance, "numerical tolerance")
        ->check(CLI::PositiveNumber);

    auto *beta = app.add_subcommand("beta", "six-term quantum value of beta");
    add_epsilon(beta);
    add_noise(beta);

    auto *nchv = app.add_subcommand("nchv", "noncontextual maximum of beta");
    nchv->add_option("--square", cfg.square_file, "square text file");

    auto *dqc1 = app.add_subcommand("dqc1", "probe-qubit suite as CSV");
    add_epsilon(dqc1);
    add_noise(dqc1);
    dqc1->add_option("--out", cfg.output, "CSV output path");

    auto *sweep = app.add_subcommand("sweep", "beta versus t/T2 as CSV");
    sweep->add_option("--t", cfg.t_ms, "pulse length (ms)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--ratios", cfg.ratios,
                      "grid: start:stop:count[log] or a,b,c");
    sweep->add_option("--gates", cfg.gates,
                      "dephasing applications per experiment")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--epsilon", cfg.epsilon, "probe polarisation in (0,1]")
        ->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--out", cfg.output, "CSV output path");

    auto *spec = app.add_subcommand("spectrum", "simulated NMR spectrum as CSV");
    spec->add_option("--params", cfg.params_file, "Hamiltonian parameter file");
    spec->add_option("--samples", cfg.samples, "FID length (power of two)")
        ->check(CLI::Validator(
            [](std::string &v) -> std::string {
                const auto n = std::stoull(v);
                if (n < 2 || (n & (n - 1)) != 0) {
                    return "must be a power of two >= 2";
                }
                return {};
            },
            "POW2"));
    spec->add_option("--dwell", cfg.dwell_ms, "dwell time (ms)")
        ->check(CLI::PositiveNumber);
    spec->add_option("--t2star", cfg.t2_star_ms, "line-broadening T2* (ms)")
        ->check(CLI::PositiveNumber);
    spec->add_option("--out", cfg.output, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*verify) {
            return cmd_verify(cfg);
        }
        if (*beta) {
            return cmd_beta(cfg);
        }
        if (*nchv) {
            return cmd_nchv(cfg);
        }
        if (*dqc1) {
            return cmd_dqc1(cfg);
        }
        if (*sweep) {
            return cmd_sweep(cfg);
        }
        if (*spec) {
            return cmd_spectrum(cfg);
        }
    } catch (const InvalidArgument &e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    } catch (const NumericalError &e) {
        fmt::print(stderr, "numerical error: {}\n", e.what());
        return 2;
    } catch (const std::exception &e) {
        fmt::print(stderr, "internal error: {}\n", e.what());
        return 2;
    }
    return 1;
}
