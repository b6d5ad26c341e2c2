#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace setgame {

// Malformed input text. `pos` is the 0-based byte offset of the offending
// character in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}

    std::size_t pos() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

// Violated precondition or an infeasible request: rank beyond an enumeration
// cap, a code outside the representable bit range, a stage over the node cap.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace setgame
