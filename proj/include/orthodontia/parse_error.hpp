#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orthodontia {

/// Malformed textual input; `position` is the 0-based offset of the offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace orthodontia
