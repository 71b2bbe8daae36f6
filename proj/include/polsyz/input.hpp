#ifndef POLSYZ_INPUT_HPP
#define POLSYZ_INPUT_HPP

#include <stdexcept>

#include "polsyz/poly.hpp"

namespace polsyz {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line_, int col_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ": " + what),
          line(line_), col(col_) {}
};

struct InputDoc {
    std::vector<std::string> vars;
    std::vector<Poly> forms;
    std::vector<std::string> form_texts; // echo of the source expressions
};

// header "vars: x y ...", then one polynomial expression per line; '#'
// starts a comment.  Grammar: + - * ^ with positive integer exponents,
// integer and a/b literals, parentheses; no implicit multiplication.
InputDoc parse_input(const std::string& text);

// a single expression against a fixed variable list (line number only used
// for error positions)
Poly parse_expression(const std::string& text, const std::vector<std::string>& vars,
                      int lineno = 1);

std::string render_input(const InputDoc& doc);

} // namespace polsyz

#endif
