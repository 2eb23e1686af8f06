#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gcmv {

/// Plücker coordinate [l1...lr] with strictly increasing labels.
struct Bracket {
    std::vector<int> labels;

    [[nodiscard]] int rank() const { return static_cast<int>(labels.size()); }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Bracket&, const Bracket&) = default;
    friend auto operator<=>(const Bracket& a, const Bracket& b) {
        return a.labels <=> b.labels;
    }
};

/// Sorts an arbitrary label tuple into a bracket, tracking the permutation
/// sign. Returns nullopt when a label repeats (the bracket is zero).
/// Throws LabelError on labels < 1.
std::optional<std::pair<int, Bracket>> normalize_bracket(int rank, std::span<const int> raw);

} // namespace gcmv
