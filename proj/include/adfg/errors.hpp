#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adfg {

/// Malformed input: CSV shape, unparseable timestamps, broken model JSON.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(what), line_(line) {}

    /// 1-based line in the offending input, 0 when not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that violates a precondition of the requested
/// operation (cyclic event log, duplicated labels fed to a unique-label
/// merge, unmapped activity in a rename).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace adfg
