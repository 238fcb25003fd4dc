#include "dop4/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace dop4 {

namespace {
const double kPi = 3.14159265358979323846;
const double kE = 2.71828182845904523536;
} // namespace

struct Expression::Node {
    enum class Kind { number, var_x, var_y, add, sub, mul, div, pow, neg, call };
    enum class Fn { exp, log, sin, cos, sqrt };

    Kind kind;
    double value = 0.0;           // number
    Fn fn = Fn::exp;              // call
    std::shared_ptr<const Node> a, b;

    static std::shared_ptr<const Node> num(double v) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::number;
        n->value = v;
        return n;
    }
    static std::shared_ptr<const Node> make(Kind k, std::shared_ptr<const Node> a,
                                            std::shared_ptr<const Node> b = nullptr) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }
    static std::shared_ptr<const Node> call(Fn f, std::shared_ptr<const Node> arg) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::call;
        n->fn = f;
        n->a = std::move(arg);
        return n;
    }
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

struct Token {
    enum class Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    std::size_t offset;
    double value = 0.0;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::size_t off = pos_;
        if (pos_ >= s_.size()) return {Token::Kind::end, off};
        char c = s_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::Kind::plus, off};
            case '-': ++pos_; return {Token::Kind::minus, off};
            case '*': ++pos_; return {Token::Kind::star, off};
            case '/': ++pos_; return {Token::Kind::slash, off};
            case '^': ++pos_; return {Token::Kind::caret, off};
            case '(': ++pos_; return {Token::Kind::lparen, off};
            case ')': ++pos_; return {Token::Kind::rparen, off};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s_.data() + pos_;
            char* end = nullptr;
            double v = std::strtod(begin, &end);
            if (end == begin) throw parse_error(off, "malformed number");
            pos_ += static_cast<std::size_t>(end - begin);
            Token t{Token::Kind::number, off};
            t.value = v;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            Token t{Token::Kind::ident, off};
            t.text = std::string(s_.substr(start, pos_ - start));
            return t;
        }
        throw parse_error(off, std::string("unexpected character '") + c + "'");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view s) : lex_(s) { advance(); }

    NodePtr parse() {
        NodePtr e = sum();
        if (tok_.kind != Token::Kind::end)
            throw parse_error(tok_.offset, "trailing input after expression", "end of input");
        return e;
    }

private:
    Lexer lex_;
    Token tok_;

    void advance() { tok_ = lex_.next(); }

    NodePtr sum() {
        NodePtr e = term();
        while (tok_.kind == Token::Kind::plus || tok_.kind == Token::Kind::minus) {
            auto k = tok_.kind == Token::Kind::plus ? Node::Kind::add : Node::Kind::sub;
            advance();
            e = Node::make(k, e, term());
        }
        return e;
    }

    NodePtr term() {
        NodePtr e = unary();
        while (tok_.kind == Token::Kind::star || tok_.kind == Token::Kind::slash) {
            auto k = tok_.kind == Token::Kind::star ? Node::Kind::mul : Node::Kind::div;
            advance();
            e = Node::make(k, e, unary());
        }
        return e;
    }

    NodePtr unary() {
        if (tok_.kind == Token::Kind::minus) {
            advance();
            return Node::make(Node::Kind::neg, unary());
        }
        if (tok_.kind == Token::Kind::plus) {
            advance();
            return unary();
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (tok_.kind == Token::Kind::caret) {
            advance();
            // right-associative; exponent admits a leading sign
            return Node::make(Node::Kind::pow, base, unary());
        }
        return base;
    }

    NodePtr atom() {
        switch (tok_.kind) {
            case Token::Kind::number: {
                double v = tok_.value;
                advance();
                return Node::num(v);
            }
            case Token::Kind::lparen: {
                advance();
                NodePtr e = sum();
                if (tok_.kind != Token::Kind::rparen)
                    throw parse_error(tok_.offset, "missing closing parenthesis", ")");
                advance();
                return e;
            }
            case Token::Kind::ident: {
                std::string name = tok_.text;
                std::size_t off = tok_.offset;
                advance();
                if (name == "x") return Node::make(Node::Kind::var_x, nullptr);
                if (name == "y") return Node::make(Node::Kind::var_y, nullptr);
                if (name == "pi") return Node::num(kPi);
                if (name == "e") return Node::num(kE);
                Node::Fn fn;
                if (name == "exp") fn = Node::Fn::exp;
                else if (name == "log") fn = Node::Fn::log;
                else if (name == "sin") fn = Node::Fn::sin;
                else if (name == "cos") fn = Node::Fn::cos;
                else if (name == "sqrt") fn = Node::Fn::sqrt;
                else throw parse_error(off, "unknown identifier '" + name + "'");
                if (tok_.kind != Token::Kind::lparen)
                    throw parse_error(tok_.offset, "expected '(' after function name", "(");
                advance();
                NodePtr arg = sum();
                if (tok_.kind != Token::Kind::rparen)
                    throw parse_error(tok_.offset, "missing closing parenthesis", ")");
                advance();
                return Node::call(fn, arg);
            }
            default:
                throw parse_error(tok_.offset, "expected a value", "number, variable, or (");
        }
    }
};

Jet eval_node(const Node& n, Point p, int order) {
    using K = Node::Kind;
    switch (n.kind) {
        case K::number: return Jet::constant(n.value, order, p);
        case K::var_x: return Jet::variable_x(order, p);
        case K::var_y: return Jet::variable_y(order, p);
        case K::add: return eval_node(*n.a, p, order) + eval_node(*n.b, p, order);
        case K::sub: return eval_node(*n.a, p, order) - eval_node(*n.b, p, order);
        case K::mul: return eval_node(*n.a, p, order) * eval_node(*n.b, p, order);
        case K::div: return div(eval_node(*n.a, p, order), eval_node(*n.b, p, order));
        case K::neg: return -eval_node(*n.a, p, order);
        case K::pow: {
            Jet base = eval_node(*n.a, p, order);
            // integer literal exponents (possibly negated) use repeated
            // multiplication; anything else goes through exp(b*log a)
            const Node* e = n.b.get();
            double sign = 1.0;
            while (e->kind == K::neg) {
                sign = -sign;
                e = e->a.get();
            }
            if (e->kind == K::number) {
                double v = sign * e->value;
                double ip;
                if (std::modf(v, &ip) == 0.0 && std::abs(ip) < 64)
                    return pow(base, static_cast<int>(ip));
            }
            Jet ex = eval_node(*n.b, p, order);
            if (base.value() <= 0.0)
                throw math_error(errc::domain_error,
                                 "non-integer exponent requires a positive base");
            return exp(log(base) * ex);
        }
        case K::call: {
            Jet a = eval_node(*n.a, p, order);
            switch (n.fn) {
                case Node::Fn::exp: return exp(a);
                case Node::Fn::log: return log(a);
                case Node::Fn::sin: return sin(a);
                case Node::Fn::cos: return cos(a);
                case Node::Fn::sqrt: return sqrt(a);
            }
            break;
        }
    }
    throw math_error(errc::domain_error, "malformed expression node");
}

NodePtr subst_node(const NodePtr& n, const NodePtr& rx, const NodePtr& ry) {
    using K = Node::Kind;
    switch (n->kind) {
        case K::number: return n;
        case K::var_x: return rx;
        case K::var_y: return ry;
        case K::neg: return Node::make(K::neg, subst_node(n->a, rx, ry));
        case K::call: return Node::call(n->fn, subst_node(n->a, rx, ry));
        default:
            return Node::make(n->kind, subst_node(n->a, rx, ry), subst_node(n->b, rx, ry));
    }
}

void render(const Node& n, std::ostream& os) {
    using K = Node::Kind;
    auto paren = [&](const Node& c) {
        os << '(';
        render(c, os);
        os << ')';
    };
    switch (n.kind) {
        case K::number: {
            std::ostringstream tmp;
            tmp.precision(17);
            tmp << n.value;
            os << tmp.str();
            break;
        }
        case K::var_x: os << 'x'; break;
        case K::var_y: os << 'y'; break;
        case K::add: paren(*n.a); os << " + "; paren(*n.b); break;
        case K::sub: paren(*n.a); os << " - "; paren(*n.b); break;
        case K::mul: paren(*n.a); os << " * "; paren(*n.b); break;
        case K::div: paren(*n.a); os << " / "; paren(*n.b); break;
        case K::pow: paren(*n.a); os << '^'; paren(*n.b); break;
        case K::neg: os << "-"; paren(*n.a); break;
        case K::call:
            switch (n.fn) {
                case Node::Fn::exp: os << "exp"; break;
                case Node::Fn::log: os << "log"; break;
                case Node::Fn::sin: os << "sin"; break;
                case Node::Fn::cos: os << "cos"; break;
                case Node::Fn::sqrt: os << "sqrt"; break;
            }
            paren(*n.a);
            break;
    }
}

} // namespace

Expression Expression::parse(std::string_view text) {
    Parser p(text);
    return Expression(p.parse());
}

Expression Expression::literal(double v) { return Expression(Node::num(v)); }

Jet Expression::eval(Point p, int order) const {
    if (!root_) throw math_error(errc::domain_error, "evaluating an empty expression");
    return eval_node(*root_, p, order);
}

Expression Expression::substituted(const Expression& x_repl, const Expression& y_repl) const {
    if (!root_ || !x_repl.root_ || !y_repl.root_)
        throw math_error(errc::domain_error, "substitution with an empty expression");
    return Expression(subst_node(root_, x_repl.root_, y_repl.root_));
}

std::string Expression::str() const {
    if (!root_) return "0";
    std::ostringstream os;
    render(*root_, os);
    return os.str();
}

} // namespace dop4
