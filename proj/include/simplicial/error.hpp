#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simplicial {

enum class ErrorKind {
    kMalformedInput,
    kParse,
    kEncoding,
    kEmptyInput,
    kOverflow,
    kNotASimplex,
    kParameter,
    kPrecondition,
    kLabel,
    kInfeasible,
    kLookup,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this type. The kind lets callers
// (the CLI in particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

// Parse failures carry the 1-based line number of the offending line.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& message)
        : Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace simplicial
