#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "dop4/jet.hpp"

namespace dop4 {

/// Immutable expression tree over x, y, real literals, + - * / ^, unary
/// minus, exp/log/sin/cos/sqrt, and the constants pi and e. Evaluation
/// happens over the jet ring, so all derivatives of the defined function
/// come out of a single pass.
class Expression {
public:
    Expression() = default;

    /// Parse with standard precedence: ^ (right-assoc) > unary - > * / > + -.
    /// Throws parse_error with the byte offset of the offending token.
    static Expression parse(std::string_view text);

    static Expression literal(double v);
    static Expression zero() { return literal(0.0); }

    bool empty() const { return !root_; }

    /// The order-m jet of the defined function at p.
    Jet eval(Point p, int order) const;
    double value(Point p) const { return eval(p, 0).value(); }

    /// Replace x and y by the given expressions.
    Expression substituted(const Expression& x_repl, const Expression& y_repl) const;

    /// Deterministic round-trippable rendering.
    std::string str() const;

    struct Node;

private:
    explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

} // namespace dop4
