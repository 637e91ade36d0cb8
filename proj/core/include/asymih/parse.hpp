// Recursive-descent parser for polynomial expressions.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := var | number | 'i' | '(' expr ')'
//   number := int ('/' posint)?
//
// Whitespace is insignificant. The leading sign of an expr is accepted so
// that printed polynomials parse back.
#pragma once

#include "asymih/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace asymih {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), message_(what), position_(position) {}
    std::size_t position() const { return position_; }
    /// The message without the position suffix.
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t position_;
};

Poly parse_poly(std::string_view text, const std::vector<std::string>& vars);

/// Parses a Gaussian-rational constant written in the polynomial grammar.
GaussRat parse_constant(std::string_view text);

}  // namespace asymih
