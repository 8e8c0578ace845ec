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
/// Data-parallel inner loops. Every kernel has a serial reference path that
/// the OpenMP path is tested against; both produce identical results up to
/// floating-point summation order (and bit-identical where noted).

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pmdqc/linalg.hpp"

namespace pmdqc {

enum class Execution { serial, parallel };

namespace kernels {

/// Unnormalised forward DFT: X_k = sum_j x_j exp(-2 pi i j k / n).
/// Bit-identical between execution modes.
std::vector<Complex> dft(std::span<const Complex> samples,
                         Execution exec = Execution::parallel);

/// One term of a sum of rotating exponentials.
struct Oscillator {
    double angular_frequency; ///< rad per unit time
    Complex amplitude;
};

/// s_k = exp(-k dt / decay_time) * sum_m a_m exp(i w_m k dt), k < count.
/// A non-positive `decay_time` disables the envelope.
/// Bit-identical between execution modes.
std::vector<Complex> damped_oscillator_sum(std::span<const Oscillator> modes,
                                           double dt, std::size_t count,
                                           double decay_time,
                                           Execution exec = Execution::parallel);

struct ArgMax {
    double value;
    std::size_t index;
};

/// Maximum of score(i) over i < count; ties go to the lowest index
/// regardless of how the range is partitioned across threads.
ArgMax argmax_first(std::size_t count,
                    const std::function<double(std::size_t)> &score,
                    Execution exec = Execution::parallel);

/// out[i] = fn(i), evaluated concurrently in parallel mode. The first
/// exception (by index) thrown by fn is rethrown on the calling thread.
template <class T, class Fn>
std::vector<T> map_indexed(std::size_t count, Fn &&fn, Execution exec) {
    std::vector<std::optional<T>> slots(count);
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < count; ++i) {
            slots[i].emplace(fn(i));
        }
    } else {
        std::vector<std::exception_ptr> errors(count);
        const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < n; ++i) {
            const auto k = static_cast<std::size_t>(i);
            try {
                slots[k].emplace(fn(k));
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
        for (const auto &e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }
    std::vector<T> out;
    out.reserve(count);
    for (auto &s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

} // namespace kernels
} // namespace pmdqc
