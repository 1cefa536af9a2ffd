#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regpump {

/// A malformed regular expression. Carries the 0-based offending position.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position), detail_(message) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

/// A configured resource cap (state count, frontier size) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace regpump
