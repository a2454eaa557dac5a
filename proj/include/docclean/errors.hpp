#ifndef DOCCLEAN_ERRORS_HPP
#define DOCCLEAN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace docclean {

/// Caller violated a precondition: out-of-bounds coordinate, mismatched
/// dimensions, empty window.
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A user-supplied parameter is outside its valid domain (odd matrix size,
/// negative K, density outside [0, 1], ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed image stream. `offset()` is the byte position where parsing
/// stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& detail, std::size_t offset)
        : std::runtime_error(detail + " (at byte " + std::to_string(offset) + ")"),
          detail_(detail), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& detail() const noexcept { return detail_; }

    /// Same error, prefixed with the name of the stream it came from.
    ParseError with_source(const std::string& source) const {
        return ParseError(source + ": " + detail_, offset_);
    }

private:
    std::string detail_;
    std::size_t offset_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace docclean

#endif // DOCCLEAN_ERRORS_HPP
