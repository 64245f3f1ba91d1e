#pragma once

#include <stdexcept>
#include <string>

namespace sntrank {

// Raised when an operation is asked to exceed its configured size cap
// (automorphism search, monomorphism search, solver vertex cap, ...).
struct limit_error : std::runtime_error {
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the text/JSON graph parsers; carries a 1-based line number
// when one is known (0 otherwise).
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, int line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what
                                         : what),
          line(line_no) {}
    int line;
};

}  // namespace sntrank
