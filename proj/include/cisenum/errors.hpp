#ifndef CISENUM_ERRORS_HPP
#define CISENUM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cisenum {

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Structurally invalid input: self-loop, out-of-range vertex id, bad recipe,
/// unknown algorithm name.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The solution dictionary grew past its configured cap.
class DictionaryCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Instance too large for the brute-force oracle.
class OracleCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cisenum

#endif  // CISENUM_ERRORS_HPP
