// Copyright 2026 The tqc developers
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

#include <stdexcept>
#include <string>

namespace tqc {

/** Base class for all errors thrown by this library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/** Input matrix fails the unitarity (or unit-determinant) check. */
class NotUnitaryError : public Error {
 public:
  explicit NotUnitaryError(const std::string &msg) : Error(msg) {}
};

/** A 4x4 gate has no tensor-product factorisation within tolerance. */
class NotAProductError : public Error {
 public:
  explicit NotAProductError(const std::string &msg) : Error(msg) {}
};

/** The internal eigen-split could not reach tolerance. */
class NumericalFailureError : public Error {
 public:
  explicit NumericalFailureError(const std::string &msg) : Error(msg) {}
};

/** A two-CNOT synthesis was requested for parameters with h_z != 0. */
class HzNotZeroError : public Error {
 public:
  explicit HzNotZeroError(const std::string &msg) : Error(msg) {}
};

/** A class-specific synthesis routine received the wrong gate class. */
class WrongClassError : public Error {
 public:
  explicit WrongClassError(const std::string &msg) : Error(msg) {}
};

/** The post-synthesis self-check exceeded the requested tolerance. */
class VerificationFailedError : public Error {
 public:
  explicit VerificationFailedError(const std::string &msg) : Error(msg) {}
};

/** Unrecognised gate name passed to the named-gate library. */
class UnknownGateError : public Error {
 public:
  explicit UnknownGateError(const std::string &msg) : Error(msg) {}
};

/** A named gate was given the wrong number of arguments. */
class BadArityError : public Error {
 public:
  explicit BadArityError(const std::string &msg) : Error(msg) {}
};

/** Malformed serialized matrix or circuit. */
class ParseError : public Error {
 public:
  explicit ParseError(const std::string &msg) : Error(msg) {}
};

}  // namespace tqc
