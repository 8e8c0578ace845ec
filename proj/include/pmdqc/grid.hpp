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

#include <string_view>
#include <vector>

namespace pmdqc {

/// Parses a grid of real values:
///   "start:stop:count"     linearly spaced, endpoints included
///   "start:stop:countlog"  logarithmically spaced (start, stop > 0)
///   "a,b,c" or "a"         explicit list
/// Throws InvalidArgument on malformed input.
std::vector<double> parse_grid_spec(std::string_view spec);

} // namespace pmdqc
