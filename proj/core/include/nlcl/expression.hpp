#pragma once

#include <functional>
#include <string>

namespace nlcl {

/**
 * Parse a small arithmetic expression over x into an evaluator.
 * Grammar: numbers, x, pi, + - * / ^, parentheses, unary minus, and the
 * functions sin, cos, abs, step (step(x) = 1 for x >= 0, else 0).
 * Throws ConfigError on malformed input.
 */
std::function<double(double)> parse_expression(const std::string& text);

} // namespace nlcl
