#include "bne/oracles/formula.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bne {

struct Formula::Node {
    enum Kind { Number, Variable, Unary, Binary, Call } kind;
    double value = 0.0;
    std::string name;
    char op = 0;
    std::vector<std::shared_ptr<const Node>> args;

    double eval(const std::map<std::string, double>& vars) const {
        switch (kind) {
            case Number: return value;
            case Variable: {
                auto it = vars.find(name);
                if (it == vars.end()) throw std::invalid_argument("formula: unbound variable '" + name + "'");
                return it->second;
            }
            case Unary: return -args[0]->eval(vars);
            case Binary: {
                const double a = args[0]->eval(vars), b = args[1]->eval(vars);
                switch (op) {
                    case '+': return a + b;
                    case '-': return a - b;
                    case '*': return a * b;
                    case '/': return a / b;
                    case '^': return std::pow(a, b);
                }
                break;
            }
            case Call: {
                std::vector<double> x;
                for (const auto& a : args) x.push_back(a->eval(vars));
                if (name == "log" && x.size() == 1) return std::log(x[0]);
                if (name == "exp" && x.size() == 1) return std::exp(x[0]);
                if (name == "sqrt" && x.size() == 1) return std::sqrt(x[0]);
                if (name == "abs" && x.size() == 1) return std::abs(x[0]);
                if (name == "min" && x.size() == 2) return std::min(x[0], x[1]);
                if (name == "max" && x.size() == 2) return std::max(x[0], x[1]);
                if (name == "pow" && x.size() == 2) return std::pow(x[0], x[1]);
                throw std::invalid_argument("formula: unknown function '" + name + "' with " +
                                            std::to_string(x.size()) + " arguments");
            }
        }
        throw std::logic_error("formula: bad node");
    }
};

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        NodePtr n = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("formula '" + s_ + "' at column " + std::to_string(pos_ + 1) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    static NodePtr make(Formula::Node n) { return std::make_shared<const Formula::Node>(std::move(n)); }
    static NodePtr binary(char op, NodePtr a, NodePtr b) {
        Formula::Node n{Formula::Node::Binary};
        n.op = op;
        n.args = {std::move(a), std::move(b)};
        return make(std::move(n));
    }

    NodePtr expr() {
        NodePtr n = term();
        for (;;) {
            if (accept('+')) n = binary('+', n, term());
            else if (accept('-')) n = binary('-', n, term());
            else return n;
        }
    }
    NodePtr term() {
        NodePtr n = unary();
        for (;;) {
            if (accept('*')) n = binary('*', n, unary());
            else if (accept('/')) n = binary('/', n, unary());
            else return n;
        }
    }
    NodePtr unary() {
        if (accept('-')) {
            Formula::Node n{Formula::Node::Unary};
            n.args = {unary()};
            return make(std::move(n));
        }
        if (accept('+')) return unary();
        NodePtr base = primary();
        if (accept('^')) return binary('^', base, unary());
        return base;
    }
    NodePtr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (accept('(')) {
            NodePtr n = expr();
            if (!accept(')')) fail("expected ')'");
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t used = 0;
            double x = 0.0;
            try {
                x = std::stod(s_.substr(pos_), &used);
            } catch (const std::exception&) {
                fail("bad number");
            }
            pos_ += used;
            Formula::Node n{Formula::Node::Number};
            n.value = x;
            return make(std::move(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (accept('(')) {
                Formula::Node n{Formula::Node::Call};
                n.name = name;
                if (!accept(')')) {
                    do n.args.push_back(expr());
                    while (accept(','));
                    if (!accept(')')) fail("expected ')' after arguments");
                }
                const std::size_t want = name == "min" || name == "max" || name == "pow" ? 2 : 1;
                const bool known = want == 2 || name == "log" || name == "exp" || name == "sqrt" || name == "abs";
                if (!known) fail("unknown function '" + name + "'");
                if (n.args.size() != want) fail(name + " takes " + std::to_string(want) + " argument(s)");
                return make(std::move(n));
            }
            if (name == "pi" || name == "e") {
                Formula::Node n{Formula::Node::Number};
                n.value = name == "pi" ? std::numbers::pi : std::numbers::e;
                return make(std::move(n));
            }
            Formula::Node n{Formula::Node::Variable};
            n.name = name;
            return make(std::move(n));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula::Formula(const std::string& text) : text_(text), root_(Parser(text_).parse()) {}
Formula::~Formula() = default;
Formula::Formula(Formula&&) noexcept = default;
Formula& Formula::operator=(Formula&&) noexcept = default;
Formula::Formula(const Formula&) = default;
Formula& Formula::operator=(const Formula&) = default;

double Formula::evaluate(const std::map<std::string, double>& vars) const { return root_->eval(vars); }

}  // namespace bne
