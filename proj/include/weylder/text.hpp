#pragma once

#include <optional>
#include <string>

#include "weylder/weyl.hpp"

namespace weylder {

struct ParseError : DomainError {
  ParseError(size_t pos, const std::string& msg)
      : DomainError("parse", "at position " + std::to_string(pos) + ": " + msg), position(pos) {}
  size_t position;
};

// Expressions over x, y (and yhat = y*h when h is given): integers, + - * ^, parentheses,
// and division by nonzero constants. Products are evaluated in A_1, so "y*x" is x*y + 1.
WeylElement parse_weyl(const std::string& text, const Field& F,
                       const std::optional<Poly>& h = std::nullopt);
Poly parse_poly(const std::string& text, const Field& F);

// increasing x-degree, e.g. "1 - 2*x + x^3"
std::string to_string(const Poly& f, const std::string& var = "x");
// increasing y-degree, e.g. "5 + 2*x*y + (1 + x^2)*y^3"
std::string to_string(const WeylElement& a);

}  // namespace weylder
