#pragma once

#include "cohomog/action_spec.hpp"

namespace cohomog {

struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line, int col)
      : std::runtime_error(std::move(msg) + " at line " +
                           std::to_string(line) + ", column " +
                           std::to_string(col)),
        line(line),
        col(col) {}
  int line, col;
};

// Parses the textual action-spec format (see docs/formats.md). Throws
// ParseError with a 1-based position on malformed input.
ActionSpec parse_spec(const std::string& text);
ActionSpec parse_spec_file(const std::string& path);

}  // namespace cohomog
