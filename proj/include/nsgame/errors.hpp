// Copyright 2026 The nsgame Authors
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

#ifndef NSGAME_ERRORS_HPP_
#define NSGAME_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsgame {

// Root of every error this library throws on bad input or a failed game
// query. Programming errors (violated preconditions on internal handles)
// surface as std::invalid_argument / std::out_of_range instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected)
      : Error("parse error at offset " + std::to_string(offset) +
              ": expected " + expected),
        offset_(offset),
        expected_(std::move(expected)) {}

  // 0-based offset in characters (UTF-8 code points) into the input.
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

// Anything wrong with a valuation: unknown letters, malformed files,
// atoms the formula needs but the valuation lacks.
class ValuationError : public Error {
 public:
  using Error::Error;
};

class UnboundAtom : public ValuationError {
 public:
  explicit UnboundAtom(std::string name)
      : ValuationError("atom '" + name + "' has no value"),
        name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class AlienValue : public ValuationError {
 public:
  using ValuationError::ValuationError;
};

// Illegal moves handed to the game engine.
class RuleError : public Error {
 public:
  using Error::Error;
};

class NotYourTurn : public RuleError {
 public:
  using RuleError::RuleError;
};

class MissingChoice : public RuleError {
 public:
  using RuleError::RuleError;
};

class TerminalPosition : public RuleError {
 public:
  using RuleError::RuleError;
};

class NonTerminal : public RuleError {
 public:
  using RuleError::RuleError;
};

// No unique dominant winner. Never expected for a well-formed logic; the
// verification harness records it as a counterexample.
class Indeterminate : public Error {
 public:
  using Error::Error;
};

class NoWinningStrategy : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t cap)
      : Error("strategy space of " + std::to_string(required) +
              " profiles exceeds the cap of " + std::to_string(cap)),
        required_(required),
        cap_(cap) {}
  std::uint64_t required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

}  // namespace nsgame

#endif  // NSGAME_ERRORS_HPP_
