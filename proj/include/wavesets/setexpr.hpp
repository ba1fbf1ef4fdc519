#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "wavesets/extended.hpp"

namespace wavesets {

/// Malformed set literal. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column, std::string token);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  int line_;
  int column_;
  std::string token_;
};

// Grammar (whitespace-insensitive):
//   set   := term ("|" term)*
//   term  := ["2^" int "*"] atom ["+" shift]
//   atom  := box | "(" set ")" | "empty" | "tail(" int ";" point ";" int ";" set ")"
//   box   := "[" pirat "," pirat ")"                      (line)
//          | "[" pirat "," pirat ")" "x" "[" pirat "," pirat ")"   (plane)
//   point, shift := pirat (line) | "(" pirat "," pirat ")" (plane)
//   pirat := ["-"] (int ["/" int] "pi" | "pi" | "0")
ExtSet parse_set(std::string_view text);
ExtBoxSet parse_box_set(std::string_view text);
PiRational parse_pirat(std::string_view text);

std::string format_set(const ExtSet& s);
std::string format_set(const ExtBoxSet& s);
std::string format_region(const IntervalSet& s);
std::string format_region(const BoxSet& s);

}  // namespace wavesets
