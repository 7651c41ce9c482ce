#pragma once

#include <stdexcept>
#include <string>

namespace wshift {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPsdError : public Error { using Error::Error; };
class ZeroPolynomialError : public Error { using Error::Error; };
class NonPositiveError : public Error { using Error::Error; };
class IndexOutOfRangeError : public Error { using Error::Error; };
class TailUndefinedError : public Error { using Error::Error; };
class DegenerateSupportError : public Error { using Error::Error; };
class NotProbabilityError : public Error { using Error::Error; };
class AboveThresholdError : public Error { using Error::Error; };
class UnsupportedDensityError : public Error { using Error::Error; };
class InvalidFamilyError : public Error { using Error::Error; };
class UnsupportedFamilyError : public Error { using Error::Error; };

/// Malformed config or number text. `where` names the field path or line.
class ParseError : public Error {
public:
    ParseError(const std::string& where, const std::string& what)
        : Error(where.empty() ? what : where + ": " + what), where_(where), detail_(what) {}

    const std::string& where() const noexcept { return where_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string where_;
    std::string detail_;
};

} // namespace wshift
