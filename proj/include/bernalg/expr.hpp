#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "bernalg/bfrak.hpp"

namespace bernalg {

/// Syntax error at a byte offset of the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses an element of the ring written with
///   rationals, T, B, B(bT), e^T, e^{aT}, d[...], d^k[...],
///   ( ), ^, *, juxtaposition, / by a constant, unary -, + and -.
/// Precedence from tight to loose: ^, unary -, * and /, + and -.
/// Negative exponents are accepted on single atoms only (T, B(bT), e^{aT}).
/// Products are reduced with product_reduce, d[...] uses the exact derivative.
BElement parse_element(std::string_view text);

/// "message\n  text\n  ^" with the caret under the error position.
std::string format_parse_error(std::string_view text, const ParseError& e);

}  // namespace bernalg
