// errors.hpp — exception taxonomy shared by the library and the CLI.
//
// invalid_argument (std)  rejected input: malformed indices, mismatched n, ...
// parse_error             element-grammar syntax errors, with byte position
// internal_error          invariant breaches inside the library (never the
//                         caller's fault); the CLI maps these to exit code 3

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qk {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace qk
