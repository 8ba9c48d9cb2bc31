// Copyright 2026 The ah Authors
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

#ifndef AH_ERROR_HPP
#define AH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ah {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    InfiniteField,
    InvalidPrime,
    ZeroPolynomial,
    BothZero,
    ContextMismatch,
    NotInSubalgebra,
    NotDivisible,
    ZeroDenominator,
    CharZero,
    NotImplemented,
    ZeroElement,
    NotNormal,
    Unverifiable,
    ConstantH,
    InvalidPair,
    WrongH,
    CharZeroKappa,
    PDividesK,
    NotInCentralizer,
    InvalidArgument,
    SyntaxError,
    MixedGenerators,
    WrongGenerator,
    NegativeExponent,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every module. The kind is stable and machine-readable;
/// the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by from_weyl; carries the first y-degree whose coefficient is not
/// divisible by the matching power of h.
class NotInSubalgebraError : public Error {
public:
    explicit NotInSubalgebraError(int index)
        : Error(ErrorKind::NotInSubalgebra,
                "coefficient of y^" + std::to_string(index) + " is not divisible by h^" +
                    std::to_string(index)),
          index_(index) {}

    int index() const noexcept { return index_; }

private:
    int index_;
};

/// Raised by the expression parser with a byte offset into the source text.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t position, const std::string& what)
        : Error(kind, what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace ah

#endif  // AH_ERROR_HPP
