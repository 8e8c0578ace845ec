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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmdqc {

/// Caller supplied something outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A result failed a numerical sanity check (e.g. a real quantity came out
/// with an imaginary residue above tolerance).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Text input could not be parsed. `position()` is 1-based.
class ParseError : public InvalidArgument {
  public:
    ParseError(const std::string &what, std::size_t position)
        : InvalidArgument(what + " (at position " + std::to_string(position) +
                          ")"),
          position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

} // namespace pmdqc
