#pragma once

#include <memory>
#include <string>

namespace gcmv {

/// Immutable meet/join expression tree over positive point labels.
class GcExpression {
public:
    enum class Kind { atom, join, meet };

    static GcExpression atom(int label);
    static GcExpression join(GcExpression left, GcExpression right);
    static GcExpression meet(GcExpression left, GcExpression right);

    [[nodiscard]] Kind kind() const;
    [[nodiscard]] int label() const;        // atom only
    [[nodiscard]] GcExpression left() const;  // join/meet only
    [[nodiscard]] GcExpression right() const;

    /// Canonical text that parses back to the same tree.
    [[nodiscard]] std::string str() const;

private:
    struct Node;
    explicit GcExpression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Grammar: single digits are atoms ('#' introduces a multi-digit atom, e.g.
/// "#12"); juxtaposition and 'v' are joins (left-associative); '^' is a meet;
/// parentheses group. Mixing 'v' and '^' at one level without parentheses is
/// rejected. Throws ParseError with the offending position.
GcExpression parse_expression(const std::string& text);

} // namespace gcmv
