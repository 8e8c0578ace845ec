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
#include "pmdqc/kernels.hpp"

#include <cmath>
#include <numbers>

#include "pmdqc/errors.hpp"

namespace pmdqc::kernels {

namespace {

std::vector<Complex> twiddles(std::size_t n) {
    std::vector<Complex> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(j) /
                             static_cast<double>(n);
        w[j] = {std::cos(angle), std::sin(angle)};
    }
    return w;
}

Complex dft_bin(std::span<const Complex> x, const std::vector<Complex> &w,
                std::size_t k) {
    const std::size_t n = x.size();
    Complex acc{};
    std::size_t phase = 0;
    for (std::size_t j = 0; j < n; ++j) {
        acc += x[j] * w[phase];
        phase += k;
        if (phase >= n) {
            phase -= n;
        }
    }
    return acc;
}

Complex oscillator_sample(std::span<const Oscillator> modes, double t,
                          double decay_time) {
    Complex acc{};
    for (const auto &m : modes) {
        acc += m.amplitude * std::polar(1.0, m.angular_frequency * t);
    }
    if (decay_time > 0.0) {
        acc *= std::exp(-t / decay_time);
    }
    return acc;
}

} // namespace

std::vector<Complex> dft(std::span<const Complex> samples, Execution exec) {
    const std::size_t n = samples.size();
    std::vector<Complex> out(n);
    if (n == 0) {
        return out;
    }
    const auto w = twiddles(n);
    if (exec == Execution::serial) {
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = dft_bin(samples, w, k);
        }
        return out;
    }
    const auto nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < nn; ++k) {
        out[static_cast<std::size_t>(k)] =
            dft_bin(samples, w, static_cast<std::size_t>(k));
    }
    return out;
}

std::vector<Complex> damped_oscillator_sum(std::span<const Oscillator> modes,
                                           double dt, std::size_t count,
                                           double decay_time, Execution exec) {
    std::vector<Complex> out(count);
    if (exec == Execution::serial) {
        for (std::size_t k = 0; k < count; ++k) {
            out[k] = oscillator_sample(modes, static_cast<double>(k) * dt,
                                       decay_time);
        }
        return out;
    }
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = oscillator_sample(
            modes, static_cast<double>(k) * dt, decay_time);
    }
    return out;
}

ArgMax argmax_first(std::size_t count,
                    const std::function<double(std::size_t)> &score,
                    Execution exec) {
    if (count == 0) {
        throw InvalidArgument("argmax_first: empty range");
    }
    ArgMax best{-INFINITY, 0};
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < count; ++i) {
            const double v = score(i);
            if (v > best.value) {
                best = {v, i};
            }
        }
        return best;
    }
    const auto n = static_cast<long long>(count);
#pragma omp parallel
    {
        ArgMax local{-INFINITY, 0};
#pragma omp for schedule(static) nowait
        for (long long i = 0; i < n; ++i) {
            const double v = score(static_cast<std::size_t>(i));
            if (v > local.value) {
                local = {v, static_cast<std::size_t>(i)};
            }
        }
#pragma omp critical(pmdqc_argmax_merge)
        {
            if (local.value > best.value ||
                (local.value == best.value && local.index < best.index)) {
                best = local;
            }
        }
    }
    return best;
}

} // namespace pmdqc::kernels
