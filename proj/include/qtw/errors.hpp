/*
   Copyright 2026 the quasitwist authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QTW_ERRORS_HPP
#define QTW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qtw {

/// Caller error: arguments outside an operation's domain (wrong field,
/// incompatible rings, infeasible basis kind, ...).
class DomainError : public std::domain_error {
   public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Internal consistency failure: a checked identity that must hold for
/// correct inputs did not (signals a bug, never a user error).
class InvariantViolation : public std::logic_error {
   public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// An enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
   public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Text input could not be parsed; carries line/column.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, int line, int col)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          line(line),
          col(col) {}
    int line;
    int col;
};

}  // namespace qtw

#endif
