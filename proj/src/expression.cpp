#include "gcmv/expression.hpp"

#include "gcmv/errors.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace gcmv {

struct GcExpression::Node {
    Kind kind;
    int label = 0;
    std::shared_ptr<const Node> left, right;
};

GcExpression GcExpression::atom(int label) {
    if (label < 1) throw LabelError("atom label must be positive");
    auto n = std::make_shared<Node>();
    n->kind = Kind::atom;
    n->label = label;
    return GcExpression(std::move(n));
}

GcExpression GcExpression::join(GcExpression left, GcExpression right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::join;
    n->left = std::move(left.node_);
    n->right = std::move(right.node_);
    return GcExpression(std::move(n));
}

GcExpression GcExpression::meet(GcExpression left, GcExpression right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::meet;
    n->left = std::move(left.node_);
    n->right = std::move(right.node_);
    return GcExpression(std::move(n));
}

GcExpression::Kind GcExpression::kind() const { return node_->kind; }

int GcExpression::label() const {
    if (node_->kind != Kind::atom) throw std::logic_error("label() on non-atom");
    return node_->label;
}

GcExpression GcExpression::left() const {
    if (node_->kind == Kind::atom) throw std::logic_error("left() on atom");
    return GcExpression(node_->left);
}

GcExpression GcExpression::right() const {
    if (node_->kind == Kind::atom) throw std::logic_error("right() on atom");
    return GcExpression(node_->right);
}

std::string GcExpression::str() const {
    switch (kind()) {
        case Kind::atom:
            return label() <= 9 ? std::to_string(label()) : "#" + std::to_string(label());
        case Kind::join:
        case Kind::meet: {
            auto wrap = [](const GcExpression& e) {
                std::string s = e.str();
                return e.kind() == Kind::atom ? s : "(" + s + ")";
            };
            const char* op = kind() == Kind::join ? "v" : "^";
            return wrap(left()) + op + wrap(right());
        }
    }
    return {};
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    GcExpression parse() {
        GcExpression e = parse_level();
        skip_ws();
        if (pos_ < text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[nodiscard]] int peek() {
        skip_ws();
        return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
    }

    // expr := term (('v'|'^') term)*  -- one operator kind per level
    GcExpression parse_level() {
        std::size_t level_start = pos_;
        GcExpression acc = parse_term();
        int op_seen = 0; // 0 none, 'v' or '^'
        while (true) {
            int c = peek();
            if (c != 'v' && c != '^') break;
            if (op_seen != 0 && op_seen != c)
                throw ParseError("ambiguous mix of '^' and 'v'; parenthesize (level starts here)",
                                 level_start);
            op_seen = c;
            ++pos_;
            GcExpression rhs = parse_term();
            acc = c == 'v' ? GcExpression::join(std::move(acc), std::move(rhs))
                           : GcExpression::meet(std::move(acc), std::move(rhs));
        }
        return acc;
    }

    // term := factor+  -- juxtaposition is join
    GcExpression parse_term() {
        GcExpression acc = parse_factor();
        while (true) {
            int c = peek();
            if (c == '(' || c == '#' || (std::isdigit(c) && c != '0'))
                acc = GcExpression::join(std::move(acc), parse_factor());
            else
                break;
        }
        return acc;
    }

    GcExpression parse_factor() {
        int c = peek();
        if (c == -1) throw ParseError("unexpected end of expression", pos_);
        if (c == '(') {
            ++pos_;
            GcExpression e = parse_level();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (c == '#') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError("expected digits after '#'", pos_);
            int label = std::stoi(text_.substr(start, pos_ - start));
            if (label < 1) throw ParseError("atom label must be positive", start);
            return GcExpression::atom(label);
        }
        if (std::isdigit(c)) {
            if (c == '0') throw ParseError("'0' is not a point label", pos_);
            ++pos_;
            return GcExpression::atom(c - '0');
        }
        throw ParseError(std::string("unexpected '") + static_cast<char>(c) + "'", pos_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

GcExpression parse_expression(const std::string& text) { return Parser(text).parse(); }

} // namespace gcmv
