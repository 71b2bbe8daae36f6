#include "polsyz/input.hpp"

#include <cctype>
#include <sstream>

namespace polsyz {

namespace {

struct Lexer {
    const std::string& s;
    int lineno;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    int col() const { return static_cast<int>(pos) + 1; }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(lineno, col(), what); }
};

struct ExprParser {
    Lexer lx;
    const std::vector<std::string>& vars;
    int nv;

    ExprParser(const std::string& text, const std::vector<std::string>& vars_, int lineno)
        : lx{text, lineno}, vars(vars_), nv(static_cast<int>(vars_.size())) {}

    mpz_class integer() {
        std::string digits;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
            digits += lx.s[lx.pos++];
        return mpz_class(digits);
    }

    Poly number() {
        mpz_class num = integer();
        if (lx.peek() == '/') {
            ++lx.pos;
            if (!std::isdigit(static_cast<unsigned char>(lx.peek())))
                lx.fail("expected denominator digits after '/'");
            mpz_class den = integer();
            if (den == 0) lx.fail("zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return Poly::constant(nv, q);
        }
        return Poly::constant(nv, mpq_class(num));
    }

    Poly atom() {
        char c = lx.peek();
        if (c == '(') {
            ++lx.pos;
            Poly e = expr();
            if (lx.peek() != ')') lx.fail("expected ')'");
            ++lx.pos;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int start_col = lx.col();
            std::string name;
            while (lx.pos < lx.s.size() &&
                   (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
                name += lx.s[lx.pos++];
            for (int i = 0; i < nv; ++i)
                if (vars[static_cast<size_t>(i)] == name) return Poly::variable(nv, i);
            throw ParseError(lx.lineno, start_col, "undeclared variable '" + name + "'");
        }
        if (c == '\0') lx.fail("unexpected end of expression");
        lx.fail(std::string("unexpected character '") + c + "'");
    }

    Poly factor() {
        if (lx.peek() == '-') {
            ++lx.pos;
            return -factor();
        }
        Poly base = atom();
        if (lx.peek() == '^') {
            ++lx.pos;
            if (!std::isdigit(static_cast<unsigned char>(lx.peek())))
                lx.fail("exponent must be a positive integer");
            mpz_class e = integer();
            if (e <= 0 || !e.fits_sint_p()) lx.fail("exponent must be a positive integer");
            int k = static_cast<int>(e.get_si());
            Poly p = Poly::constant(nv, 1);
            for (int i = 0; i < k; ++i) p *= base;
            return p;
        }
        return base;
    }

    Poly term() {
        Poly p = factor();
        while (lx.peek() == '*') {
            ++lx.pos;
            p *= factor();
        }
        return p;
    }

    Poly expr() {
        Poly p = term();
        for (;;) {
            char c = lx.peek();
            if (c == '+') {
                ++lx.pos;
                p += term();
            } else if (c == '-') {
                ++lx.pos;
                p -= term();
            } else {
                return p;
            }
        }
    }

    Poly parse() {
        Poly p = expr();
        if (!lx.eof()) lx.fail("trailing input after expression");
        return p;
    }
};

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Poly parse_expression(const std::string& text, const std::vector<std::string>& vars,
                      int lineno) {
    return ExprParser(text, vars, lineno).parse();
}

InputDoc parse_input(const std::string& text) {
    InputDoc doc;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_vars = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        if (!have_vars) {
            std::istringstream hs(line);
            std::string kw;
            hs >> kw;
            if (kw != "vars:")
                throw ParseError(lineno, 1, "expected a 'vars: <name> ...' header line");
            std::string name;
            while (hs >> name) {
                for (char c : name)
                    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                        throw ParseError(lineno, 1, "bad variable name '" + name + "'");
                if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
                    throw ParseError(lineno, 1, "bad variable name '" + name + "'");
                for (const auto& v : doc.vars)
                    if (v == name)
                        throw ParseError(lineno, 1, "duplicate variable '" + name + "'");
                doc.vars.push_back(name);
            }
            if (doc.vars.empty()) throw ParseError(lineno, 1, "no variables declared");
            have_vars = true;
            continue;
        }
        Poly f = parse_expression(line, doc.vars, lineno);
        if (f.is_zero()) throw ParseError(lineno, 1, "zero polynomial among the forms");
        doc.forms.push_back(std::move(f));
        std::string trimmed = line;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        size_t lead = 0;
        while (lead < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[lead])))
            ++lead;
        doc.form_texts.push_back(trimmed.substr(lead));
    }
    if (!have_vars) throw ParseError(lineno, 1, "empty input");
    if (doc.forms.empty()) throw ParseError(lineno, 1, "no forms given");
    return doc;
}

std::string render_input(const InputDoc& doc) {
    std::ostringstream os;
    os << "vars:";
    for (const auto& v : doc.vars) os << " " << v;
    os << "\n";
    for (const auto& f : doc.forms) os << f.str(doc.vars) << "\n";
    return os.str();
}

} // namespace polsyz
