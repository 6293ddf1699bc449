// Copyright 2026 The wvg Authors
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

namespace wvg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Game construction rejected (bad quota, duplicate names, too many players).
class InvalidGame : public Error {
 public:
  using Error::Error;
};

class InvalidCoalition : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured player cap.
class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

/// The dynamic-programming table does not fit the memory budget.
class EngineInfeasible : public Error {
 public:
  using Error::Error;
};

/// Two engines disagreed on the same game.
class EngineMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateGame : public Error {
 public:
  using Error::Error;
};

/// The graph-restricted game needs a weighted majority base (2q > total weight).
class NonMajorityBase : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class InvalidElection : public Error {
 public:
  using Error::Error;
};

class NoQualifyingParty : public Error {
 public:
  using Error::Error;
};

class PluralityTie : public Error {
 public:
  using Error::Error;
};

class UnknownScenario : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. The message carries the location (line/column or field path).
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& what)
      : Error(location.empty() ? what : location + ": " + what), location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

}  // namespace wvg
