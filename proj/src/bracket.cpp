#include "gcmv/bracket.hpp"

#include "gcmv/errors.hpp"
#include "gcmv/subsets.hpp"

namespace gcmv {

std::string Bracket::str() const {
    bool wide = false;
    for (int l : labels) wide |= l > 9;
    std::string s = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (wide && i > 0) s += ' ';
        s += std::to_string(labels[i]);
    }
    return s + "]";
}

std::optional<std::pair<int, Bracket>> normalize_bracket(int rank, std::span<const int> raw) {
    if (static_cast<int>(raw.size()) != rank)
        throw DimensionError("normalize_bracket: expected " + std::to_string(rank) + " labels");
    std::vector<int> labels(raw.begin(), raw.end());
    for (int l : labels)
        if (l < 1) throw LabelError("bracket label " + std::to_string(l) + " < 1");
    int sign = sort_with_sign(labels);
    if (sign == 0) return std::nullopt;
    return std::make_pair(sign, Bracket{std::move(labels)});
}

} // namespace gcmv
