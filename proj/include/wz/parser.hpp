#pragma once

#include "wz/term.hpp"

#include <string>

namespace wz {

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// A Pochhammer index or exponent was not integer linear in n and k.
struct NonLinearIndex : ParseError {
    using ParseError::ParseError;
};

// Parses the textual form of a hypergeometric term, the same syntax
// HyperTerm::str() prints. Whitespace insensitive.
//
//   expr    := factor (("*" | "/") factor)*
//   factor  := atom ("^" (sint | "(" linear ")"))?
//   atom    := "poch(" rational "," linear ")"
//            | rational
//            | "(" polynomial ")"
//            | "(" expr ")"
//   linear  := integer linear expression in n and k
//
// A rational base with a parenthesized linear exponent is a geometric
// factor: "(-1)^(n)", "2^(2*k)". Polynomial atoms become prefactors:
// "(4*n+1)*(-1)^(n)*poch(1/2,n)^3/poch(1,n)^3".
HyperTerm parse_term(const std::string& text);

}  // namespace wz
