// Copyright 2026 The Matchkit Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace matchkit {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

struct IndexError : Error {
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

struct NotCharacterMatrix : Error {
    explicit NotCharacterMatrix(const std::string& msg) : Error(msg) {}
};

struct ZeroMatrix : Error {
    explicit ZeroMatrix(const std::string& msg) : Error(msg) {}
};

struct NotReducible : Error {
    explicit NotReducible(const std::string& msg) : Error(msg) {}
};

struct SingularInput : Error {
    explicit SingularInput(const std::string& msg) : Error(msg) {}
};

// Fires only if an algebraic inverse of a character matrix fails the
// membership oracle; a firing is a reportable counterexample.
struct TheoremViolation : Error {
    explicit TheoremViolation(const std::string& msg) : Error(msg) {}
};

struct InvalidPlacement : Error {
    explicit InvalidPlacement(const std::string& msg) : Error(msg) {}
};

struct UnsupportedTag : Error {
    explicit UnsupportedTag(const std::string& msg) : Error(msg) {}
};

struct OddOrMixedScatteredGate : Error {
    explicit OddOrMixedScatteredGate(const std::string& msg) : Error(msg) {}
};

struct InteriorParityViolation : Error {
    explicit InteriorParityViolation(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace matchkit
