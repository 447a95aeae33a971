#pragma once

#include <stdexcept>
#include <string>

namespace dualab {

/// Input document could not be parsed. Carries a 1-based position.
struct ParseError : std::runtime_error {
    int line = 0;
    int col = 0;
    ParseError(std::string msg, int line_, int col_)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + std::move(msg)),
          line(line_),
          col(col_) {}
};

/// A computation could not be certified inside the requested bounds
/// (window too narrow, weight bound too small, tower not stabilized).
struct BoundError : std::runtime_error {
    explicit BoundError(const std::string& msg) : std::runtime_error("bound error: " + msg) {}
};

/// A chain complex whose differential does not square to zero.
struct MalformedComplex : std::logic_error {
    explicit MalformedComplex(const std::string& msg)
        : std::logic_error("malformed complex: " + msg) {}
};

}  // namespace dualab
