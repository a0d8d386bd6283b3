#include "pdm/expression.hpp"

#include "pdm/errors.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace pdm {

enum class Kind { constant, variable, neg, add, sub, mul, div, pow, call };
enum class Func { exp, log, sqrt, sin, cos, tan, sinh, cosh, tanh };

struct Expression::Node {
    Kind kind;
    double value = 0.0;
    Func func = Func::exp;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

struct FuncName {
    const char* name;
    Func func;
};

constexpr FuncName kFunctions[] = {
    {"exp", Func::exp},   {"log", Func::log},   {"sqrt", Func::sqrt},
    {"sin", Func::sin},   {"cos", Func::cos},   {"tan", Func::tan},
    {"sinh", Func::sinh}, {"cosh", Func::cosh}, {"tanh", Func::tanh},
};

const char* func_name(Func f) {
    for (const auto& entry : kFunctions)
        if (entry.func == f) return entry.name;
    return "?";
}

NodePtr make_const(double v) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = Kind::constant;
    n->value = v;
    return n;
}

NodePtr make_var() {
    auto n = std::make_shared<Expression::Node>();
    n->kind = Kind::variable;
    return n;
}

bool is_const(const NodePtr& n, double v) { return n->kind == Kind::constant && n->value == v; }
bool is_const(const NodePtr& n) { return n->kind == Kind::constant; }

double apply(Func f, double v) {
    switch (f) {
    case Func::exp: return std::exp(v);
    case Func::log: return std::log(v);
    case Func::sqrt: return std::sqrt(v);
    case Func::sin: return std::sin(v);
    case Func::cos: return std::cos(v);
    case Func::tan: return std::tan(v);
    case Func::sinh: return std::sinh(v);
    case Func::cosh: return std::cosh(v);
    case Func::tanh: return std::tanh(v);
    }
    return 0.0;
}

double eval(const Expression::Node& n, double x);

NodePtr make_binary(Kind k, NodePtr a, NodePtr b) {
    // light constant folding keeps derivative trees small
    if (is_const(a) && is_const(b)) {
        Expression::Node tmp{k, 0.0, Func::exp, a, b};
        return make_const(eval(tmp, 0.0));
    }
    switch (k) {
    case Kind::add:
        if (is_const(a, 0.0)) return b;
        if (is_const(b, 0.0)) return a;
        break;
    case Kind::sub:
        if (is_const(b, 0.0)) return a;
        break;
    case Kind::mul:
        if (is_const(a, 0.0) || is_const(b, 0.0)) return make_const(0.0);
        if (is_const(a, 1.0)) return b;
        if (is_const(b, 1.0)) return a;
        break;
    case Kind::div:
        if (is_const(a, 0.0)) return make_const(0.0);
        if (is_const(b, 1.0)) return a;
        break;
    case Kind::pow:
        if (is_const(b, 1.0)) return a;
        if (is_const(b, 0.0)) return make_const(1.0);
        break;
    default: break;
    }
    auto n = std::make_shared<Expression::Node>();
    n->kind = k;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

NodePtr make_neg(NodePtr a) {
    if (is_const(a)) return make_const(-a->value);
    if (a->kind == Kind::neg) return a->lhs;
    auto n = std::make_shared<Expression::Node>();
    n->kind = Kind::neg;
    n->lhs = std::move(a);
    return n;
}

NodePtr make_call(Func f, NodePtr a) {
    if (is_const(a)) return make_const(apply(f, a->value));
    auto n = std::make_shared<Expression::Node>();
    n->kind = Kind::call;
    n->func = f;
    n->lhs = std::move(a);
    return n;
}

NodePtr add(NodePtr a, NodePtr b) { return make_binary(Kind::add, std::move(a), std::move(b)); }
NodePtr sub(NodePtr a, NodePtr b) { return make_binary(Kind::sub, std::move(a), std::move(b)); }
NodePtr mul(NodePtr a, NodePtr b) { return make_binary(Kind::mul, std::move(a), std::move(b)); }
NodePtr div(NodePtr a, NodePtr b) { return make_binary(Kind::div, std::move(a), std::move(b)); }
NodePtr pow(NodePtr a, NodePtr b) { return make_binary(Kind::pow, std::move(a), std::move(b)); }

double eval(const Expression::Node& n, double x) {
    switch (n.kind) {
    case Kind::constant: return n.value;
    case Kind::variable: return x;
    case Kind::neg: return -eval(*n.lhs, x);
    case Kind::add: return eval(*n.lhs, x) + eval(*n.rhs, x);
    case Kind::sub: return eval(*n.lhs, x) - eval(*n.rhs, x);
    case Kind::mul: return eval(*n.lhs, x) * eval(*n.rhs, x);
    case Kind::div: return eval(*n.lhs, x) / eval(*n.rhs, x);
    case Kind::pow: return std::pow(eval(*n.lhs, x), eval(*n.rhs, x));
    case Kind::call: return apply(n.func, eval(*n.lhs, x));
    }
    return 0.0;
}

NodePtr diff(const NodePtr& n) {
    switch (n->kind) {
    case Kind::constant: return make_const(0.0);
    case Kind::variable: return make_const(1.0);
    case Kind::neg: return make_neg(diff(n->lhs));
    case Kind::add: return add(diff(n->lhs), diff(n->rhs));
    case Kind::sub: return sub(diff(n->lhs), diff(n->rhs));
    case Kind::mul:
        return add(mul(diff(n->lhs), n->rhs), mul(n->lhs, diff(n->rhs)));
    case Kind::div:
        return div(sub(mul(diff(n->lhs), n->rhs), mul(n->lhs, diff(n->rhs))),
                   mul(n->rhs, n->rhs));
    case Kind::pow: {
        const auto& u = n->lhs;
        const auto& v = n->rhs;
        if (is_const(v)) {
            return mul(mul(v, pow(u, make_const(v->value - 1.0))), diff(u));
        }
        // d(u^v) = u^v (v' log u + v u'/u)
        return mul(n, add(mul(diff(v), make_call(Func::log, u)), div(mul(v, diff(u)), u)));
    }
    case Kind::call: {
        const auto& u = n->lhs;
        NodePtr outer;
        switch (n->func) {
        case Func::exp: outer = n; break;
        case Func::log: outer = div(make_const(1.0), u); break;
        case Func::sqrt: outer = div(make_const(0.5), n); break;
        case Func::sin: outer = make_call(Func::cos, u); break;
        case Func::cos: outer = make_neg(make_call(Func::sin, u)); break;
        case Func::tan: {
            auto c = make_call(Func::cos, u);
            outer = div(make_const(1.0), mul(c, c));
            break;
        }
        case Func::sinh: outer = make_call(Func::cosh, u); break;
        case Func::cosh: outer = make_call(Func::sinh, u); break;
        case Func::tanh: {
            auto c = make_call(Func::cosh, u);
            outer = div(make_const(1.0), mul(c, c));
            break;
        }
        }
        return mul(outer, diff(u));
    }
    }
    return make_const(0.0);
}

void print(const Expression::Node& n, std::ostringstream& out) {
    switch (n.kind) {
    case Kind::constant: out << n.value; return;
    case Kind::variable: out << 'x'; return;
    case Kind::neg: out << "(-"; print(*n.lhs, out); out << ')'; return;
    case Kind::call: out << func_name(n.func) << '('; print(*n.lhs, out); out << ')'; return;
    default: break;
    }
    const char op = n.kind == Kind::add ? '+' : n.kind == Kind::sub ? '-'
                  : n.kind == Kind::mul ? '*' : n.kind == Kind::div ? '/' : '^';
    out << '(';
    print(*n.lhs, out);
    out << op;
    print(*n.rhs, out);
    out << ')';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        auto root = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return root;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("expression: " + msg, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        auto lhs = term();
        for (;;) {
            if (accept('+')) lhs = add(lhs, term());
            else if (accept('-')) lhs = sub(lhs, term());
            else return lhs;
        }
    }

    NodePtr term() {
        auto lhs = unary();
        for (;;) {
            if (accept('*')) lhs = mul(lhs, unary());
            else if (accept('/')) lhs = div(lhs, unary());
            else return lhs;
        }
    }

    NodePtr unary() {
        if (accept('-')) return make_neg(unary());
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        auto base = primary();
        if (accept('^')) return pow(base, unary());
        return base;
    }

    NodePtr primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        if (accept('(')) {
            auto inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    NodePtr number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                pos_ = look;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
        }
        const std::string token(text_.substr(start, pos_ - start));
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) {
            pos_ = start;
            fail("malformed number '" + token + "'");
        }
        return make_const(v);
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "x") return make_var();
        if (name == "pi") return make_const(std::numbers::pi);
        for (const auto& entry : kFunctions) {
            if (name == entry.name) {
                if (!accept('(')) fail("expected '(' after " + std::string(name));
                auto arg = expr();
                if (!accept(')')) fail("expected ')'");
                return make_call(entry.func, arg);
            }
        }
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
    }
};

} // namespace

Expression Expression::parse(std::string_view text) { return Expression(Parser(text).parse()); }

Expression Expression::constant(double value) { return Expression(make_const(value)); }

double Expression::operator()(double x) const { return eval(*root_, x); }

Expression Expression::derivative() const { return Expression(diff(root_)); }

std::string Expression::str() const {
    std::ostringstream out;
    out.precision(17);
    print(*root_, out);
    return out.str();
}

} // namespace pdm
