/*
   Copyright 2026 The rrcode authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace rrcode {

/// Library error carrying a stable machine-readable code ("NotPrime",
/// "DivisionByZero", ...). The CLI maps these to exit status 1.
class Error : public std::runtime_error {
   public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

   private:
    std::string code_;
};

/// Syntactically invalid jobspec input. CLI exit status 2.
class ParseError : public Error {
   public:
    ParseError(int line, const std::string& message)
        : Error("ParseError", "line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const noexcept { return line_; }

   private:
    int line_;
};

/// Well-formed jobspec text whose content is invalid (e.g. a divisor point
/// that is not on the curve). CLI exit status 1.
class SemanticError : public Error {
   public:
    SemanticError(int line, const std::string& message)
        : Error("SemanticError", "line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const noexcept { return line_; }

   private:
    int line_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace rrcode
