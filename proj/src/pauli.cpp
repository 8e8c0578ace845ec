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
#include "pmdqc/pauli.hpp"

#include <bit>
#include <string>

#include "pmdqc/errors.hpp"

namespace pmdqc {

namespace {

constexpr unsigned phase_exponent(Phase p) { return static_cast<unsigned>(p); }

constexpr Phase phase_from_exponent(int k) {
    return static_cast<Phase>(((k % 4) + 4) % 4);
}

// Exponent g with s1 * s2 = i^g * s3 for single-qubit Paulis in (x, z) form.
int product_exponent(unsigned x1, unsigned z1, unsigned x2, unsigned z2) {
    const int xi = static_cast<int>(x2);
    const int zi = static_cast<int>(z2);
    if (x1 == 0 && z1 == 0) {
        return 0;
    }
    if (x1 == 1 && z1 == 1) { // Y
        return zi - xi;
    }
    if (x1 == 1) { // X
        return zi * (2 * xi - 1);
    }
    return xi * (1 - 2 * zi); // Z
}

void require_same_length(const PauliString &a, const PauliString &b,
                         const char *what) {
    if (a.size() != b.size()) {
        throw InvalidArgument(std::string(what) + ": Pauli strings have " +
                              std::to_string(a.size()) + " and " +
                              std::to_string(b.size()) + " qubits");
    }
}

} // namespace

Phase operator*(Phase a, Phase b) {
    return phase_from_exponent(
        static_cast<int>(phase_exponent(a) + phase_exponent(b)));
}

Complex to_complex(Phase p) {
    switch (p) {
    case Phase::plus_one:
        return {1.0, 0.0};
    case Phase::plus_i:
        return {0.0, 1.0};
    case Phase::minus_one:
        return {-1.0, 0.0};
    case Phase::minus_i:
        return {0.0, -1.0};
    }
    return {1.0, 0.0};
}

PauliString::PauliString(std::size_t n) : PauliString(n, 0, 0) {}

PauliString::PauliString(std::size_t n, std::uint32_t x_bits,
                         std::uint32_t z_bits, Phase phase)
    : n_(n), x_(x_bits), z_(z_bits), phase_(phase) {
    if (n == 0 || n > kMaxQubits) {
        throw InvalidArgument("Pauli string length must be in [1, 32], got " +
                              std::to_string(n));
    }
    const std::uint32_t mask =
        n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
    if ((x_bits & ~mask) != 0 || (z_bits & ~mask) != 0) {
        throw InvalidArgument("Pauli string bits set beyond qubit count");
    }
}

char PauliString::qubit(std::size_t j) const {
    if (j >= n_) {
        throw InvalidArgument("qubit index out of range");
    }
    const bool x = (x_ >> j) & 1U;
    const bool z = (z_ >> j) & 1U;
    if (x && z) {
        return 'Y';
    }
    if (x) {
        return 'X';
    }
    return z ? 'Z' : '1';
}

bool PauliString::is_hermitian() const noexcept {
    return phase_ == Phase::plus_one || phase_ == Phase::minus_one;
}

bool PauliString::is_identity_up_to_phase() const noexcept {
    return x_ == 0 && z_ == 0;
}

PauliString PauliString::with_phase(Phase p) const {
    return PauliString(n_, x_, z_, p);
}

PauliString parse_pauli(std::string_view text) {
    std::size_t pos = 0;
    int sign_exponent = 0;
    if (text.starts_with("+")) {
        pos = 1;
    } else if (text.starts_with("-")) {
        sign_exponent = 2;
        pos = 1;
    } else if (text.starts_with("−")) {
        sign_exponent = 2;
        pos = 3;
    }
    if (pos < text.size() && text[pos] == 'i') {
        sign_exponent += 1;
        ++pos;
    }
    if (pos == text.size()) {
        throw ParseError("Pauli string '" + std::string(text) +
                             "' has no operator characters",
                         pos + 1);
    }
    const std::size_t n = text.size() - pos;
    if (n > PauliString::kMaxQubits) {
        throw ParseError("Pauli string longer than 32 qubits", pos + 1);
    }
    std::uint32_t x = 0;
    std::uint32_t z = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const char c = text[pos + j];
        const std::uint32_t bit = std::uint32_t{1} << j;
        switch (c) {
        case '1':
            break;
        case 'X':
            x |= bit;
            break;
        case 'Z':
            z |= bit;
            break;
        case 'Y':
            x |= bit;
            z |= bit;
            break;
        default:
            throw ParseError("invalid Pauli character '" + std::string(1, c) +
                                 "' in '" + std::string(text) + "'",
                             pos + j + 1);
        }
    }
    return PauliString(n, x, z, phase_from_exponent(sign_exponent));
}

std::string format_pauli(const PauliString &p) {
    std::string out;
    switch (p.phase()) {
    case Phase::plus_one:
        break;
    case Phase::plus_i:
        out = "i";
        break;
    case Phase::minus_one:
        out = "-";
        break;
    case Phase::minus_i:
        out = "-i";
        break;
    }
    for (std::size_t j = 0; j < p.size(); ++j) {
        out.push_back(p.qubit(j));
    }
    return out;
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    require_same_length(a, b, "multiply");
    int k = static_cast<int>(phase_exponent(a.phase()) +
                             phase_exponent(b.phase()));
    for (std::size_t j = 0; j < a.size(); ++j) {
        k += product_exponent((a.x_bits() >> j) & 1U, (a.z_bits() >> j) & 1U,
                              (b.x_bits() >> j) & 1U, (b.z_bits() >> j) & 1U);
    }
    return PauliString(a.size(), a.x_bits() ^ b.x_bits(),
                       a.z_bits() ^ b.z_bits(), phase_from_exponent(k));
}

PauliString operator*(const PauliString &a, const PauliString &b) {
    return multiply(a, b);
}

bool commutes(const PauliString &a, const PauliString &b) {
    require_same_length(a, b, "commutes");
    const std::uint32_t anti =
        (a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits());
    return std::popcount(anti) % 2 == 0;
}

ComplexMatrix to_matrix(const PauliString &p) {
    const std::size_t n = p.size();
    if (n > 4) {
        throw InvalidArgument("to_matrix: dense realisation is limited to 4 "
                              "qubits, got " +
                              std::to_string(n));
    }
    const std::size_t dim = std::size_t{1} << n;
    // Qubit j is bit (n-1-j) of the basis index.
    std::size_t flip = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if ((p.x_bits() >> j) & 1U) {
            flip |= std::size_t{1} << (n - 1 - j);
        }
    }
    const Complex global = to_complex(p.phase());
    ComplexMatrix m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const std::size_t row = col ^ flip;
        Complex v = global;
        for (std::size_t j = 0; j < n; ++j) {
            const unsigned in_bit = (col >> (n - 1 - j)) & 1U;
            switch (p.qubit(j)) {
            case 'Z':
                if (in_bit) {
                    v = -v;
                }
                break;
            case 'Y': // Y|0> = i|1>, Y|1> = -i|0>
                v *= in_bit ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
                break;
            default:
                break;
            }
        }
        m(row, col) = v;
    }
    return m;
}

} // namespace pmdqc
