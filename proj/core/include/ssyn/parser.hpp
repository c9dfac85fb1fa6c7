#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ssyn/model.hpp"

namespace ssyn {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error("line " + std::to_string(line) + ":" + std::to_string(col) + ": " +
                             msg),
          line(line),
          col(col) {}
    int line;
    int col;
};

struct ParsedModel {
    HybridAutomaton automaton;
    std::optional<SpecSet> spec;
};

// Parses the textual model format (see the grammar in the README).
// All numeric literals are converted exactly to rationals; decimal
// literals like 0.5 become 1/2. Throws ParseError with source position
// on syntax errors, unknown variables or locations, non-linear
// expressions, empty flows, and updates that leave a primed variable
// unconstrained.
ParsedModel parse_model(const std::string& text);

// Renders a model back to parseable text. Re-parsing yields a
// semantically equal automaton (jumps are emitted as a single update
// conjunction with a trivial guard).
std::string print_model(const HybridAutomaton& h, const std::optional<SpecSet>& spec);

std::string region_to_text(const Region& r);
std::string constraint_to_text(const LinearConstraint& c, const VarSpace& space);

}  // namespace ssyn
