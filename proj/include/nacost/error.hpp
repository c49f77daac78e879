// Copyright 2026 The nacost Authors
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

namespace nacost {

/// Base class for every error raised by the library. The CLI maps these to
/// exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed quantity text or scenario syntax.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value carries the wrong physical dimension for where it is used.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of a model formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Unknown catalog name.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent or incomplete model configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace nacost
