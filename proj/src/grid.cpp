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
#include "pmdqc/grid.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "pmdqc/errors.hpp"

namespace pmdqc {

namespace {

double parse_number(std::string_view text, std::string_view spec) {
    double value = 0.0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last ||
        !std::isfinite(value)) {
        throw InvalidArgument("grid spec '" + std::string(spec) +
                              "': invalid number '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

std::vector<double> parse_grid_spec(std::string_view spec) {
    if (spec.empty()) {
        throw InvalidArgument("grid spec is empty");
    }
    if (spec.find(':') == std::string_view::npos) {
        std::vector<double> values;
        for (const auto part : split(spec, ',')) {
            values.push_back(parse_number(part, spec));
        }
        return values;
    }

    const auto parts = split(spec, ':');
    if (parts.size() != 3) {
        throw InvalidArgument("grid spec '" + std::string(spec) +
                              "': expected start:stop:count[log]");
    }
    const double start = parse_number(parts[0], spec);
    const double stop = parse_number(parts[1], spec);
    std::string_view count_text = parts[2];
    const bool log = count_text.ends_with("log");
    if (log) {
        count_text.remove_suffix(3);
    }
    std::size_t count = 0;
    const auto [ptr, ec] = std::from_chars(
        count_text.data(), count_text.data() + count_text.size(), count);
    if (count_text.empty() || ec != std::errc{} ||
        ptr != count_text.data() + count_text.size() || count == 0) {
        throw InvalidArgument("grid spec '" + std::string(spec) +
                              "': count must be a positive integer");
    }
    if (log && !(start > 0.0 && stop > 0.0)) {
        throw InvalidArgument("grid spec '" + std::string(spec) +
                              "': log spacing needs positive endpoints");
    }
    std::vector<double> values(count);
    if (count == 1) {
        values[0] = start;
        return values;
    }
    for (std::size_t i = 0; i < count; ++i) {
        const double f =
            static_cast<double>(i) / static_cast<double>(count - 1);
        values[i] = log ? start * std::pow(stop / start, f)
                        : start + (stop - start) * f;
    }
    values.back() = stop;
    return values;
}

} // namespace pmdqc
