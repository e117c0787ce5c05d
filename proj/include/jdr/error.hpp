/*
   Copyright 2026 The jdr Authors

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

#ifndef JDR_ERROR_HPP
#define JDR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace jdr {

enum class ErrorKind {
    Parse,
    Validation,
    NotInvertible,
    DimensionMismatch,
    AllZero,
    TooLarge,
    UnsupportedDegree,
    PoleAtSample,
    Domain,
    NotAnnihilated,
};

constexpr std::string_view error_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::PoleAtSample: return "PoleAtSample";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::NotAnnihilated: return "NotAnnihilated";
    }
    return "Error";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

} // namespace jdr

#endif // JDR_ERROR_HPP
