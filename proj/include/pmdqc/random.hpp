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
/// Seeded random states, unitaries and channels for property checks.

#include <random>
#include <vector>

#include "pmdqc/linalg.hpp"

namespace pmdqc {

/// Haar-random unitary (QR of a complex Ginibre matrix, phases fixed).
UnitaryMatrix random_unitary(std::size_t dim, std::mt19937_64 &rng);

/// Full-rank random state G G^dagger / tr(G G^dagger).
DensityMatrix random_density_matrix(std::size_t dim, std::mt19937_64 &rng);

/// Random complete Kraus set of `count` operators, built from the blocks of
/// a random isometry C^dim -> C^(dim*count).
std::vector<ComplexMatrix> random_kraus_set(std::size_t dim, std::size_t count,
                                            std::mt19937_64 &rng);

} // namespace pmdqc
