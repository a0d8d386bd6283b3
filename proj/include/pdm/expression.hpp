#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace pdm {

// Closed-form expressions in one variable x.
//
// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' unary)?          (right associative, -x^2 = -(x^2))
//   primary := number | 'x' | 'pi' | func '(' expr ')' | '(' expr ')'
//   func    := exp | log | sqrt | sin | cos | tan | sinh | cosh | tanh
class Expression {
public:
    struct Node;

    static Expression parse(std::string_view text);
    static Expression constant(double value);

    double operator()(double x) const;
    Expression derivative() const;
    std::string str() const;

private:
    explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

} // namespace pdm
