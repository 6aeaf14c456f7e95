//  Copyright 2026 The umpcheck Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef UMP_ERROR_HPP_
#define UMP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ump {

/// Bad input: unknown names, malformed structures, precondition violations.
/// Axiom failures detected by the validators are reported as values, not
/// thrown, except where an operation requires a valid structure.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text-level error with a 1-based source position.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message)
      : InputError("line " + std::to_string(line) + ": " + message),
        line_(line),
        column_(column),
        message_(std::move(message)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Raised when an internal consistency check fails. Reaching one of these
/// means the engine has a bug, never that the input is bad.
class EngineError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Identifiers: non-empty runs of [A-Za-z0-9_].
bool is_identifier(std::string_view s) noexcept;

/// Throws InputError naming `what` when `s` is not an identifier.
void require_identifier(std::string_view s, std::string_view what);

}  // namespace ump

#endif  // UMP_ERROR_HPP_
