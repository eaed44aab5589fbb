#ifndef PCLIE_ERRORS_HPP
#define PCLIE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pclie {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax or schema error in textual input. `offset` is a byte position into
// the input when known, npos otherwise.
class ParseError : public Error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit ParseError(const std::string& msg, std::size_t offset = npos)
        : Error(offset == npos ? msg : msg + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// An operation was asked about degrees beyond the generated relation degree.
class DegreeBoundError : public Error {
public:
    using Error::Error;
};

// A computation exceeded a configured resource guard (polynomial term count,
// oracle matrix size).
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// Global cap on the number of stored terms in any one polynomial.
// Exceeding it raises ResourceLimitError. The CLI seeds this from the
// PCLIE_MAX_TERMS environment variable.
std::size_t max_polynomial_terms() noexcept;
void set_max_polynomial_terms(std::size_t limit) noexcept;

}  // namespace pclie

#endif
