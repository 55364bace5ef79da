#pragma once

#include "exactmath/mpoly.hpp"

#include <stdexcept>
#include <string>

namespace cli {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos)
    {
    }
};

// Grammar:
//   expr   := term (("+" | "-") term)*
//   term   := unary ("*" unary)*
//   unary  := ("-" | "+") unary | power
//   power  := atom ("^" integer)?
//   atom   := integer ("/" integer)? | variable | "(" expr ")"
// Variables: x y z X Y W t s. No implicit multiplication.
exactmath::MPoly parse_poly(const std::string& text);

// Printed form that parse_poly reads back to the same polynomial.
std::string print_poly(const exactmath::MPoly& p);

} // namespace cli
