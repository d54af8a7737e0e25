#pragma once

#include <map>
#include <memory>
#include <string>

namespace bne {

// Arithmetic expression over named variables: + - * / ^, parentheses, unary minus, numbers,
// constants pi and e, and the functions log, exp, sqrt, abs, min, max, pow.
class Formula {
public:
    explicit Formula(const std::string& text);
    ~Formula();
    Formula(Formula&&) noexcept;
    Formula& operator=(Formula&&) noexcept;
    Formula(const Formula&);
    Formula& operator=(const Formula&);

    double evaluate(const std::map<std::string, double>& vars) const;
    const std::string& text() const { return text_; }

    struct Node;

private:
    std::string text_;
    std::shared_ptr<const Node> root_;
};

}  // namespace bne
