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
/// The 3x3 Peres-Mermin square, its line structure, and the quantum and
/// noncontextual values of the signed line-correlation sum
///
///   beta = <r1> + <r2> + <r3> + <c1> + <c2> - <c3>.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmdqc/kernels.hpp"
#include "pmdqc/linalg.hpp"
#include "pmdqc/pauli.hpp"

namespace pmdqc {

enum class Line : std::uint8_t { r1, r2, r3, c1, c2, c3 };

inline constexpr std::array<Line, 6> kAllLines{Line::r1, Line::r2, Line::r3,
                                               Line::c1, Line::c2, Line::c3};

std::string_view to_string(Line line);
Line parse_line(std::string_view name);

/// Grid positions (row, col) of the three cells on a line.
std::array<std::array<std::size_t, 2>, 3> line_cells(Line line);

struct PMSquare {
    std::array<std::array<PauliString, 3>, 3> grid;
    /// One entry per line in kAllLines order. +1/-1 is the line's weight in
    /// beta and its expected product sign; 0 drops the line from beta
    /// (and from the product check).
    std::array<int, 6> line_signs;

    [[nodiscard]] const PauliString &at(std::size_t row, std::size_t col) const {
        return grid[row][col];
    }
    [[nodiscard]] int sign(Line line) const {
        return line_signs[static_cast<std::size_t>(line)];
    }
    [[nodiscard]] std::size_t qubits() const { return grid[0][0].size(); }
};

/// [[Z1, 1Z, ZZ], [1X, X1, XX], [ZX, XZ, YY]] with signs (+,+,+,+,+,-).
PMSquare pm_square();

/// Throws InvalidArgument for inconsistent qubit counts or signs outside
/// {-1, 0, +1}.
void validate_square(const PMSquare &sq);

struct LineReport {
    Line line;
    /// Pairwise commutation of the cells (0,1), (0,2), (1,2).
    std::array<bool, 3> commutes;
    PauliString product;
    int expected_sign;
    /// product == expected_sign * identity (always true for a dropped line).
    bool product_ok;

    [[nodiscard]] bool all_commute() const {
        return commutes[0] && commutes[1] && commutes[2];
    }
};

struct VerificationReport {
    std::array<LineReport, 6> lines;

    [[nodiscard]] bool passed() const;
};

VerificationReport verify_square(const PMSquare &sq);

/// Product of the three cells of a line, in grid order.
PauliString line_product(const PMSquare &sq, Line line);

/// Sum over lines of sign * tr(rho * line_product).
double beta_quantum(const PMSquare &sq, const DensityMatrix &rho,
                    double tol = kAlgebraicTol);
double beta_quantum(const DensityMatrix &rho, double tol = kAlgebraicTol);

/// A +-1 outcome for each of the nine cells, row-major.
class ValueAssignment {
  public:
    /// Throws InvalidArgument unless there are exactly nine +-1 values.
    explicit ValueAssignment(std::span<const int> values);

    /// Bit k of `index` set means cell k (row-major) takes -1.
    static ValueAssignment from_index(std::uint32_t index);

    [[nodiscard]] int at(std::size_t row, std::size_t col) const {
        return values_[row * 3 + col];
    }
    [[nodiscard]] const std::array<int, 9> &values() const { return values_; }
    [[nodiscard]] std::uint32_t index() const;

    friend bool operator==(const ValueAssignment &,
                           const ValueAssignment &) = default;

  private:
    ValueAssignment() = default;
    std::array<int, 9> values_{};
};

struct ClassicalBeta {
    double beta;
    /// Product of the three assigned values per line, kAllLines order.
    std::array<int, 6> line_values;
};

ClassicalBeta classical_beta(const ValueAssignment &assignment,
                             const PMSquare &sq);

struct NchvMax {
    double value;
    ValueAssignment argmax;
};

/// Exhaustive maximum of classical_beta over all 512 assignments. Ties are
/// resolved towards the lowest assignment index.
NchvMax nchv_max(const PMSquare &sq, Execution exec = Execution::parallel);

/// Three rows of three Pauli tokens, then a line of six signs (+, -, 0).
std::string format_square(const PMSquare &sq);
/// Inverse of format_square. Blank lines and '#' comments are skipped.
/// Errors name the offending line.
PMSquare parse_square(std::string_view text);

} // namespace pmdqc
