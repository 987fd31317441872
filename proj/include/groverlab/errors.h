// Copyright 2026 The groverlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GROVERLAB_ERRORS_H
#define GROVERLAB_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace groverlab {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A register or state would exceed the configured qubit (or block) cap.
class CapacityError : public Error {
   public:
    using Error::Error;
};

/// An argument lies outside the domain of the operation: an index out of
/// range, duplicate qubits, a dimension that is not a power of two.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Structurally well-formed input that violates a semantic requirement, e.g. a
/// block that is not unitary or a round that touches the index register.
class ValidationError : public Error {
   public:
    using Error::Error;
};

class IoError : public Error {
   public:
    using Error::Error;
};

/// Circuit text that does not match the grammar. `line()` is 1-based.
class ParseError : public Error {
   public:
    ParseError(std::size_t line, const std::string &message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {
    }
    std::size_t line() const {
        return line_;
    }

   private:
    std::size_t line_;
};

}  // namespace groverlab

#endif
