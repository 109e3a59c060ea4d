#include "nlcl/expression.hpp"

#include <cctype>
#include <cmath>
#include <memory>
#include <numbers>

#include "nlcl/errors.hpp"

namespace nlcl {

namespace {

struct Node {
    virtual ~Node() = default;
    virtual double eval(double x) const = 0;
};
using NodePtr = std::unique_ptr<Node>;

struct Num : Node {
    double v;
    explicit Num(double v_) : v(v_) {}
    double eval(double) const override { return v; }
};

struct Var : Node {
    double eval(double x) const override { return x; }
};

struct Unary : Node {
    NodePtr arg;
    double (*fn)(double);
    Unary(NodePtr a, double (*f)(double)) : arg(std::move(a)), fn(f) {}
    double eval(double x) const override { return fn(arg->eval(x)); }
};

struct Binary : Node {
    NodePtr lhs, rhs;
    char op;
    Binary(NodePtr l, NodePtr r, char o) : lhs(std::move(l)), rhs(std::move(r)), op(o) {}
    double eval(double x) const override {
        double a = lhs->eval(x);
        double b = rhs->eval(x);
        switch (op) {
            case '+': return a + b;
            case '-': return a - b;
            case '*': return a * b;
            case '/': return a / b;
            case '^': return std::pow(a, b);
        }
        return 0.0;
    }
};

double step_fn(double x) { return x >= 0.0 ? 1.0 : 0.0; }
double neg_fn(double x) { return -x; }

class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("trailing input");
        return e;
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw ConfigError("expression error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (eat('+'))
                lhs = std::make_unique<Binary>(std::move(lhs), term(), '+');
            else if (eat('-'))
                lhs = std::make_unique<Binary>(std::move(lhs), term(), '-');
            else
                return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        for (;;) {
            if (eat('*'))
                lhs = std::make_unique<Binary>(std::move(lhs), factor(), '*');
            else if (eat('/'))
                lhs = std::make_unique<Binary>(std::move(lhs), factor(), '/');
            else
                return lhs;
        }
    }

    // unary minus binds weaker than '^' so -x^2 means -(x^2)
    NodePtr factor() {
        if (eat('-'))
            return std::make_unique<Unary>(factor(), neg_fn);
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (eat('^')) // right-associative; rhs admits a leading minus
            return std::make_unique<Binary>(std::move(base), factor(), '^');
        return base;
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!eat(')'))
                fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t len = 0;
            double v = std::stod(s_.substr(pos_), &len);
            pos_ += len;
            return std::make_unique<Num>(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   std::isalnum(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == "x")
                return std::make_unique<Var>();
            if (name == "pi")
                return std::make_unique<Num>(std::numbers::pi);
            double (*fn)(double) = nullptr;
            if (name == "sin")
                fn = std::sin;
            else if (name == "cos")
                fn = std::cos;
            else if (name == "abs")
                fn = std::fabs;
            else if (name == "step")
                fn = step_fn;
            else
                fail("unknown identifier '" + name + "'");
            if (!eat('('))
                fail("expected '(' after function name");
            NodePtr arg = expr();
            if (!eat(')'))
                fail("expected ')'");
            return std::make_unique<Unary>(std::move(arg), fn);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

std::function<double(double)> parse_expression(const std::string& text) {
    Parser parser(text);
    std::shared_ptr<Node> root{parser.parse().release()};
    return [root](double x) { return root->eval(x); };
}

} // namespace nlcl
