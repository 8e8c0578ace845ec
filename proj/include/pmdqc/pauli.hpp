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
/// n-qubit Pauli strings with exact phase tracking.
///
/// A string is `phase * s_0 (x) s_1 (x) ... (x) s_{n-1}` with each s_j one of
/// the Hermitian Paulis {1, X, Y, Z} and phase a fourth root of unity.
/// Internally s_j is encoded symplectically as (x_j, z_j) with
/// 1 = (0,0), X = (1,0), Z = (0,1), Y = (1,1); Y itself is the standard
/// Hermitian [[0,-i],[i,0]] (= i X Z), so `phase` is exactly the coefficient
/// in front of the tensor product.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "pmdqc/linalg.hpp"

namespace pmdqc {

/// Fourth roots of unity, stored as the exponent k in i^k.
enum class Phase : std::uint8_t { plus_one = 0, plus_i = 1, minus_one = 2, minus_i = 3 };

Phase operator*(Phase a, Phase b);
Complex to_complex(Phase p);

class PauliString {
  public:
    static constexpr std::size_t kMaxQubits = 32;

    /// Identity string on n qubits.
    explicit PauliString(std::size_t n);
    /// Bit j of x_bits/z_bits refers to qubit j (qubit 0 = leftmost factor).
    PauliString(std::size_t n, std::uint32_t x_bits, std::uint32_t z_bits,
                Phase phase = Phase::plus_one);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::uint32_t x_bits() const noexcept { return x_; }
    [[nodiscard]] std::uint32_t z_bits() const noexcept { return z_; }
    [[nodiscard]] Phase phase() const noexcept { return phase_; }

    /// One of '1', 'X', 'Y', 'Z'.
    [[nodiscard]] char qubit(std::size_t j) const;
    /// True when the phase is +-1, i.e. the operator is Hermitian.
    [[nodiscard]] bool is_hermitian() const noexcept;
    /// True when every factor is the identity (any phase).
    [[nodiscard]] bool is_identity_up_to_phase() const noexcept;
    [[nodiscard]] PauliString with_phase(Phase p) const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    std::size_t n_;
    std::uint32_t x_;
    std::uint32_t z_;
    Phase phase_;
};

/// Text form: optional prefix in {"+", "-", "i", "+i", "-i"} (the Unicode
/// minus U+2212 is accepted for "-") followed by characters from {1,X,Y,Z}.
/// Throws ParseError carrying the 1-based position of the offending byte.
PauliString parse_pauli(std::string_view text);

/// Canonical text form; the prefix is omitted for phase +1.
std::string format_pauli(const PauliString &p);

/// Exact group product a * b. Throws InvalidArgument on length mismatch.
PauliString multiply(const PauliString &a, const PauliString &b);
PauliString operator*(const PauliString &a, const PauliString &b);

/// Symplectic commutation test.
bool commutes(const PauliString &a, const PauliString &b);

/// Dense 2^n x 2^n realisation including the phase. Limited to 4 qubits.
ComplexMatrix to_matrix(const PauliString &p);

} // namespace pmdqc
