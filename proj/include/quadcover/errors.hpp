/*
   Copyright 2026 The quadcover authors

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

#ifndef QUADCOVER_ERRORS_HPP
#define QUADCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quadcover {

/// Base error: carries a stable machine-readable code plus a location hint.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, std::string location = {})
        : std::runtime_error(message), code_(std::move(code)), location_(std::move(location)) {}

    const std::string& code() const { return code_; }
    const std::string& location() const { return location_; }

private:
    std::string code_;
    std::string location_;
};

/// Malformed input (bad JSON, bad numeral, unknown field). CLI exit code 1.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Valid input that violates a mathematical precondition. CLI exit code 2.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Cooperative cancellation (long-running symmetric computations).
class Cancelled : public Error {
public:
    Cancelled() : Error("cancelled", "operation cancelled by caller") {}
};

/// Three-valued answer for questions that are not decidable over every ring.
enum class Decision { Yes, No, Undecided };

inline const char* to_cstring(Decision d) {
    switch (d) {
        case Decision::Yes: return "yes";
        case Decision::No: return "no";
        default: return "undecided";
    }
}

}  // namespace quadcover

#endif  // QUADCOVER_ERRORS_HPP
