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
#include "pmdqc/mermin_peres.hpp"

#include <sstream>
#include <string>

#include "pmdqc/errors.hpp"

namespace pmdqc {

std::string_view to_string(Line line) {
    switch (line) {
    case Line::r1:
        return "r1";
    case Line::r2:
        return "r2";
    case Line::r3:
        return "r3";
    case Line::c1:
        return "c1";
    case Line::c2:
        return "c2";
    case Line::c3:
        return "c3";
    }
    return "?";
}

Line parse_line(std::string_view name) {
    for (const auto line : kAllLines) {
        if (to_string(line) == name) {
            return line;
        }
    }
    throw InvalidArgument("unknown line '" + std::string(name) +
                          "' (expected r1..r3 or c1..c3)");
}

std::array<std::array<std::size_t, 2>, 3> line_cells(Line line) {
    const auto k = static_cast<std::size_t>(line);
    if (k < 3) {
        return {{{k, 0}, {k, 1}, {k, 2}}};
    }
    const std::size_t col = k - 3;
    return {{{0, col}, {1, col}, {2, col}}};
}

PMSquare pm_square() {
    return PMSquare{
        {{{parse_pauli("Z1"), parse_pauli("1Z"), parse_pauli("ZZ")},
          {parse_pauli("1X"), parse_pauli("X1"), parse_pauli("XX")},
          {parse_pauli("ZX"), parse_pauli("XZ"), parse_pauli("YY")}}},
        {+1, +1, +1, +1, +1, -1}};
}

void validate_square(const PMSquare &sq) {
    const std::size_t n = sq.qubits();
    for (const auto &row : sq.grid) {
        for (const auto &cell : row) {
            if (cell.size() != n) {
                throw InvalidArgument("square cells act on different qubit "
                                      "counts");
            }
        }
    }
    for (const int s : sq.line_signs) {
        if (s != -1 && s != 0 && s != 1) {
            throw InvalidArgument("line signs must be -1, 0 or +1");
        }
    }
}

PauliString line_product(const PMSquare &sq, Line line) {
    const auto cells = line_cells(line);
    PauliString p = sq.at(cells[0][0], cells[0][1]);
    p = p * sq.at(cells[1][0], cells[1][1]);
    return p * sq.at(cells[2][0], cells[2][1]);
}

bool VerificationReport::passed() const {
    for (const auto &l : lines) {
        if (!l.all_commute() || !l.product_ok) {
            return false;
        }
    }
    return true;
}

namespace {

LineReport line_report(const PMSquare &sq, Line line) {
    const auto cells = line_cells(line);
    const auto &a = sq.at(cells[0][0], cells[0][1]);
    const auto &b = sq.at(cells[1][0], cells[1][1]);
    const auto &c = sq.at(cells[2][0], cells[2][1]);
    const PauliString product = line_product(sq, line);
    const int sign = sq.sign(line);
    bool ok = true;
    if (sign != 0) {
        const Phase expected = sign > 0 ? Phase::plus_one : Phase::minus_one;
        ok = product.is_identity_up_to_phase() && product.phase() == expected;
    }
    return LineReport{line,
                      {commutes(a, b), commutes(a, c), commutes(b, c)},
                      product,
                      sign,
                      ok};
}

} // namespace

VerificationReport verify_square(const PMSquare &sq) {
    validate_square(sq);
    return VerificationReport{{
        line_report(sq, Line::r1), line_report(sq, Line::r2),
        line_report(sq, Line::r3), line_report(sq, Line::c1),
        line_report(sq, Line::c2), line_report(sq, Line::c3)}};
}

double beta_quantum(const PMSquare &sq, const DensityMatrix &rho, double tol) {
    validate_square(sq);
    if (rho.dim() != (std::size_t{1} << sq.qubits())) {
        throw InvalidArgument("beta_quantum: state dimension " +
                              std::to_string(rho.dim()) +
                              " does not match the square's " +
                              std::to_string(sq.qubits()) + " qubits");
    }
    double beta = 0.0;
    for (const auto line : kAllLines) {
        const int sign = sq.sign(line);
        if (sign == 0) {
            continue;
        }
        const PauliString product = line_product(sq, line);
        if (!product.is_hermitian()) {
            throw InvalidArgument("beta_quantum: line " +
                                  std::string(to_string(line)) +
                                  " has a non-Hermitian product");
        }
        beta += sign * expectation(rho, to_matrix(product), tol);
    }
    return beta;
}

double beta_quantum(const DensityMatrix &rho, double tol) {
    return beta_quantum(pm_square(), rho, tol);
}

ValueAssignment::ValueAssignment(std::span<const int> values) {
    if (values.size() != 9) {
        throw InvalidArgument("value assignment needs 9 entries, got " +
                              std::to_string(values.size()));
    }
    for (std::size_t k = 0; k < 9; ++k) {
        if (values[k] != 1 && values[k] != -1) {
            throw InvalidArgument("value assignment entry " +
                                  std::to_string(k) + " is not +-1");
        }
        values_[k] = values[k];
    }
}

ValueAssignment ValueAssignment::from_index(std::uint32_t index) {
    if (index >= 512) {
        throw InvalidArgument("assignment index must be below 512");
    }
    ValueAssignment a;
    for (std::size_t k = 0; k < 9; ++k) {
        a.values_[k] = ((index >> k) & 1U) ? -1 : 1;
    }
    return a;
}

std::uint32_t ValueAssignment::index() const {
    std::uint32_t idx = 0;
    for (std::size_t k = 0; k < 9; ++k) {
        if (values_[k] < 0) {
            idx |= std::uint32_t{1} << k;
        }
    }
    return idx;
}

ClassicalBeta classical_beta(const ValueAssignment &assignment,
                             const PMSquare &sq) {
    ClassicalBeta out{0.0, {}};
    for (std::size_t k = 0; k < kAllLines.size(); ++k) {
        const auto cells = line_cells(kAllLines[k]);
        int v = 1;
        for (const auto &cell : cells) {
            v *= assignment.at(cell[0], cell[1]);
        }
        out.line_values[k] = v;
        out.beta += sq.line_signs[k] * v;
    }
    return out;
}

NchvMax nchv_max(const PMSquare &sq, Execution exec) {
    validate_square(sq);
    const auto best = kernels::argmax_first(
        512,
        [&sq](std::size_t i) {
            return classical_beta(
                       ValueAssignment::from_index(static_cast<std::uint32_t>(i)),
                       sq)
                .beta;
        },
        exec);
    return {best.value,
            ValueAssignment::from_index(static_cast<std::uint32_t>(best.index))};
}

std::string format_square(const PMSquare &sq) {
    std::ostringstream os;
    for (const auto &row : sq.grid) {
        os << format_pauli(row[0]) << ' ' << format_pauli(row[1]) << ' '
           << format_pauli(row[2]) << '\n';
    }
    for (std::size_t k = 0; k < 6; ++k) {
        const int s = sq.line_signs[k];
        os << (s > 0 ? "+" : (s < 0 ? "-" : "0")) << (k < 5 ? " " : "\n");
    }
    return os.str();
}

PMSquare parse_square(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream tokens(raw);
        std::vector<std::string> row;
        for (std::string t; tokens >> t;) {
            row.push_back(t);
        }
        if (row.empty()) {
            continue;
        }
        rows.push_back(std::move(row));
        line_numbers.push_back(line_no);
    }
    if (rows.size() != 4) {
        throw InvalidArgument("square text needs 3 rows of observables and 1 "
                              "line of signs, found " +
                              std::to_string(rows.size()) + " non-empty lines");
    }
    auto fail = [&](std::size_t r, const std::string &msg) {
        return InvalidArgument("square line " + std::to_string(line_numbers[r]) +
                               ": " + msg);
    };
    PMSquare sq{{{{PauliString(1), PauliString(1), PauliString(1)},
                  {PauliString(1), PauliString(1), PauliString(1)},
                  {PauliString(1), PauliString(1), PauliString(1)}}},
                {}};
    for (std::size_t r = 0; r < 3; ++r) {
        if (rows[r].size() != 3) {
            throw fail(r, "expected 3 observables, found " +
                              std::to_string(rows[r].size()));
        }
        for (std::size_t c = 0; c < 3; ++c) {
            try {
                sq.grid[r][c] = parse_pauli(rows[r][c]);
            } catch (const ParseError &e) {
                throw fail(r, e.what());
            }
        }
    }
    if (rows[3].size() != 6) {
        throw fail(3, "expected 6 line signs, found " +
                          std::to_string(rows[3].size()));
    }
    for (std::size_t k = 0; k < 6; ++k) {
        const auto &tok = rows[3][k];
        if (tok == "+" || tok == "+1" || tok == "1") {
            sq.line_signs[k] = 1;
        } else if (tok == "-" || tok == "-1") {
            sq.line_signs[k] = -1;
        } else if (tok == "0") {
            sq.line_signs[k] = 0;
        } else {
            throw fail(3, "invalid sign '" + tok + "'");
        }
    }
    try {
        validate_square(sq);
    } catch (const InvalidArgument &e) {
        throw InvalidArgument(std::string("square: ") + e.what());
    }
    return sq;
}

} // namespace pmdqc
