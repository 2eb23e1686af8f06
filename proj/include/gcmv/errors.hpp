#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gcmv {

/// Shape mismatch between operands (non-square det, rank mismatch, ...).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A point label fell outside the configuration it was used against.
struct LabelError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Expression text failed to parse. `position` is a 0-based byte offset.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// A builder detected an incidence pattern other than the one it constructs.
/// `offending` lists the unexpected (or missing) dependent subsets.
struct DegeneracyError : std::runtime_error {
    DegeneracyError(const std::string& what, std::vector<std::vector<int>> offending = {})
        : std::runtime_error(what), offending(std::move(offending)) {}
    std::vector<std::vector<int>> offending;
};

/// A bounded randomized or scheduled search ran out of budget.
struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gcmv
