#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cablecone/knot_complex.hpp"

namespace cablecone {

class CfkParseError : public std::runtime_error {
 public:
  CfkParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class CfkValidationError : public std::runtime_error {
 public:
  explicit CfkValidationError(std::vector<Violation> v);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Grammar, one statement per line:
//   gen <name> <gr_u> <gr_v>
//   arrow <from> <to> <a> <b>        (term U^a V^b <to> in d<from>)
// '#' starts a comment; blank lines are ignored.
KnotComplex parse_cfk(std::string_view text);
std::string format_cfk(const KnotComplex& c);

}  // namespace cablecone
