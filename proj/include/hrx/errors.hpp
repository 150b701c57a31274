// Copyright 2026 The hadamard-rx Authors
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

namespace hrx {

/// Argument outside the domain of an operation (index range, non power-of-two
/// length, voltage outside the model's validity range, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Beamsplitter parameters violate R + T = 1 or are out of [0, 1].
class InvalidSpecError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Optical output carries no energy, so there is nothing to decode.
class NoSignalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A receiver output did not identify exactly one codeword.
class DecodeFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A current model was evaluated outside the operating region it describes.
class ModeError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class CalibrationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Gate drive never crosses the plateau voltage, so the device never turns on.
class NoTurnOnError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace hrx
