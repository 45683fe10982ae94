#include "pvgauge/parse.hpp"

#include <cctype>
#include <climits>
#include <optional>
#include <set>

namespace pvg {

namespace {

enum class Tok { integer, ident, symbol, newline, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, depth = 0;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        i += k;
        col += k;
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n')
                advance(1);
            continue;
        }
        if (c == '\n') {
            if (depth == 0 && (out.empty() || out.back().kind != Tok::newline))
                out.push_back({Tok::newline, "\n", line, col});
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        std::size_t start_col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            if (j < src.size() && (src[j] == '.' || src[j] == 'e' || src[j] == 'E'))
                throw SyntaxError("floating-point literals are not supported", line, col + (j - i));
            out.push_back({Tok::integer, src.substr(i, j - i), line, start_col});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({Tok::ident, src.substr(i, j - i), line, start_col});
            advance(j - i);
            continue;
        }
        static const std::string symbols = "+-*/^()[],=";
        if (symbols.find(c) == std::string::npos)
            throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
        if (c == '(' || c == '[')
            ++depth;
        if ((c == ')' || c == ']') && depth > 0)
            --depth;
        out.push_back({Tok::symbol, std::string(1, c), line, start_col});
        advance(1);
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
    bool at_symbol(const char* s) const { return peek().kind == Tok::symbol && peek().text == s; }
    bool at_ident(const char* s) const { return peek().kind == Tok::ident && peek().text == s; }
    bool at_end() const { return peek().kind == Tok::end; }
    bool at_newline() const { return peek().kind == Tok::newline; }

    [[noreturn]] void fail(const std::string& what, const Token& t) const {
        throw SyntaxError(what, t.line, t.column);
    }
    [[noreturn]] void fail(const std::string& what) const { fail(what, peek()); }

    void expect_symbol(const char* s) {
        if (!at_symbol(s))
            fail(std::string("expected '") + s + "'" + found());
        next();
    }

    std::string found() const {
        switch (peek().kind) {
        case Tok::end:
            return " but found end of input";
        case Tok::newline:
            return " but found end of line";
        default:
            return " but found '" + peek().text + "'";
        }
    }

    Token expect_ident() {
        if (peek().kind != Tok::ident)
            fail("expected a name" + found());
        return next();
    }

    long expect_integer() {
        if (peek().kind != Tok::integer)
            fail("expected an integer" + found());
        Token t = next();
        Int v(t.text);
        if (!v.fits_slong_p())
            fail("integer out of range", t);
        return v.get_si();
    }

    void skip_newlines() {
        while (at_newline())
            next();
    }

    void end_statement() {
        if (at_end())
            return;
        if (!at_newline())
            fail("expected end of line" + found());
        skip_newlines();
    }

    // Ring hooks: V(long), identifiers through resolve, division through divide.
    template <class V, class Resolve, class Divide>
    V expr(Resolve& resolve, Divide& divide) {
        V v = term<V>(resolve, divide);
        while (at_symbol("+") || at_symbol("-")) {
            bool minus = next().text == "-";
            V rhs = term<V>(resolve, divide);
            v = minus ? v - rhs : v + rhs;
        }
        return v;
    }

    template <class V, class Resolve, class Divide>
    V term(Resolve& resolve, Divide& divide) {
        V v = unary<V>(resolve, divide);
        while (at_symbol("*") || at_symbol("/")) {
            Token op = next();
            V rhs = unary<V>(resolve, divide);
            v = op.text == "*" ? v * rhs : divide(v, rhs, op);
        }
        return v;
    }

    template <class V, class Resolve, class Divide>
    V unary(Resolve& resolve, Divide& divide) {
        if (at_symbol("-")) {
            next();
            return -unary<V>(resolve, divide);
        }
        if (at_symbol("+")) {
            next();
            return unary<V>(resolve, divide);
        }
        return power<V>(resolve, divide);
    }

    template <class V, class Resolve, class Divide>
    V power(Resolve& resolve, Divide& divide) {
        V base = atom<V>(resolve, divide);
        if (!at_symbol("^"))
            return base;
        Token op = next();
        bool paren = at_symbol("(");
        if (paren)
            next();
        bool negative = false;
        if (at_symbol("-") || at_symbol("+"))
            negative = next().text == "-";
        long e = expect_integer();
        if (paren)
            expect_symbol(")");
        if (negative)
            e = -e;
        try {
            return base.pow(e);
        } catch (const DivisionByZero&) {
            fail("negative power of a non-invertible value", op);
        }
    }

    template <class V, class Resolve, class Divide>
    V atom(Resolve& resolve, Divide& divide) {
        if (peek().kind == Tok::integer) {
            Token t = next();
            return V(Rat(Int(t.text)));
        }
        if (peek().kind == Tok::ident)
            return resolve(next());
        if (at_symbol("(")) {
            next();
            V v = expr<V>(resolve, divide);
            expect_symbol(")");
            return v;
        }
        fail("expected a number, a name or '('" + found());
    }

    RatFn ratfn() {
        auto resolve = [this](const Token& t) -> RatFn {
            if (t.text != "x")
                fail("unknown name '" + t.text + "' in an expression over x", t);
            return RatFn::x();
        };
        auto divide = [this](const RatFn& a, const RatFn& b, const Token& op) -> RatFn {
            if (b.is_zero())
                fail("division by zero", op);
            return a / b;
        };
        return expr<RatFn>(resolve, divide);
    }

    ParamPoly param_expr(const std::vector<Param>& params) {
        auto resolve = [&](const Token& t) -> ParamPoly {
            for (const auto& p : params)
                if (p.name == t.text)
                    return ParamPoly::param(p);
            fail("undeclared parameter '" + t.text + "'", t);
        };
        auto divide = [this](const ParamPoly& a, const ParamPoly& b, const Token& op) -> ParamPoly {
            if (!b.is_unit())
                fail("division by a non-invertible parameter expression", op);
            return a * b.inverse();
        };
        return expr<ParamPoly>(resolve, divide);
    }

    Rat rational() {
        Token at = peek();
        RatFn r = ratfn();
        if (!r.is_constant())
            fail("expected a rational number", at);
        return r.constant_value();
    }

    // x - b for the point b
    Rat point() {
        Token at = peek();
        RatFn r = ratfn();
        if (!r.is_polynomial() || r.num().degree() != 1 || r.num().lead() != 1)
            fail("expected x - b with rational b", at);
        return -r.num().coeff(0);
    }

    MatRF matrix() {
        Token open = peek();
        expect_symbol("[");
        std::vector<std::vector<RatFn>> rows;
        for (;;) {
            Token row_tok = peek();
            expect_symbol("[");
            std::vector<RatFn> row;
            for (;;) {
                row.push_back(ratfn());
                if (at_symbol(",")) {
                    next();
                    continue;
                }
                expect_symbol("]");
                break;
            }
            if (!rows.empty() && row.size() != rows.front().size())
                throw InconsistentRowLength("row " + std::to_string(rows.size() + 1) + " at line " +
                                            std::to_string(row_tok.line) + " has " + std::to_string(row.size()) +
                                            " entries, expected " + std::to_string(rows.front().size()));
            rows.push_back(std::move(row));
            if (at_symbol(",")) {
                next();
                continue;
            }
            expect_symbol("]");
            break;
        }
        if (rows.size() != rows.front().size())
            throw InputError("matrix at line " + std::to_string(open.line) + " is not square");
        MatRF m(rows.size(), rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows.size(); ++j)
                m(i, j) = rows[i][j];
        return m;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

const std::set<std::string> kKeywords{"x", "param", "gen"};

} // namespace

RatFn parse_ratfn(const std::string& text) {
    Parser p(text);
    p.skip_newlines();
    RatFn r = p.ratfn();
    p.skip_newlines();
    if (!p.at_end())
        p.fail("unexpected trailing input");
    return r;
}

MatRF parse_matrix(const std::string& text) {
    Parser p(text);
    p.skip_newlines();
    MatRF m = p.matrix();
    p.skip_newlines();
    if (!p.at_end())
        p.fail("unexpected trailing input");
    return m;
}

bool InputDocument::has(const std::string& name) const {
    for (const auto& [n, m] : matrices)
        if (n == name)
            return true;
    return false;
}

const MatRF& InputDocument::matrix(const std::string& name) const {
    for (const auto& [n, m] : matrices)
        if (n == name)
            return m;
    throw InputError("input does not declare the matrix " + name);
}

InputDocument parse_document(const std::string& text) {
    Parser p(text);
    InputDocument doc;
    std::set<std::string> names;
    auto declare = [&](const Token& t) {
        if (kKeywords.count(t.text))
            p.fail("'" + t.text + "' is reserved", t);
        if (!names.insert(t.text).second)
            throw InputError("duplicate name " + t.text + " at line " + std::to_string(t.line));
    };
    p.skip_newlines();
    while (!p.at_end()) {
        if (p.at_ident("param")) {
            p.next();
            Token name = p.expect_ident();
            declare(name);
            if (p.at_ident("cyclotomic")) {
                p.next();
                long m = p.expect_integer();
                if (m <= 0 || m > 10000)
                    p.fail("cyclotomic order must be between 1 and 10000");
                doc.params.push_back(Param::cyclotomic(name.text, static_cast<unsigned>(m)));
            } else if (p.at_ident("unit")) {
                p.next();
                doc.params.push_back(Param::unit(name.text));
            } else {
                if (p.at_ident("free"))
                    p.next();
                doc.params.push_back(Param::free(name.text));
            }
        } else if (p.at_ident("gen")) {
            p.next();
            Token name = p.expect_ident();
            declare(name);
            std::vector<PowerAction> pw;
            std::vector<ExpAction> ex;
            std::vector<LogAction> lg;
            while (!p.at_newline() && !p.at_end()) {
                if (p.at_ident("log")) {
                    p.next();
                    Rat b = p.point();
                    if (!p.at_ident("shift"))
                        p.fail("expected 'shift'" + p.found());
                    p.next();
                    lg.push_back({b, p.param_expr(doc.params)});
                } else if (p.at_ident("pow")) {
                    p.next();
                    Rat a = p.point();
                    Rat e = p.rational();
                    if (!p.at_ident("mul"))
                        p.fail("expected 'mul'" + p.found());
                    p.next();
                    pw.push_back({a, e, p.param_expr(doc.params)});
                } else if (p.at_ident("exp")) {
                    p.next();
                    RatFn r = p.ratfn();
                    if (!p.at_ident("mul"))
                        p.fail("expected 'mul'" + p.found());
                    p.next();
                    ex.push_back({r, p.param_expr(doc.params)});
                } else {
                    p.fail("expected 'log', 'pow' or 'exp'" + p.found());
                }
            }
            doc.gens.emplace_back(name.text, std::move(pw), std::move(ex), std::move(lg));
        } else {
            Token name = p.expect_ident();
            declare(name);
            p.expect_symbol("=");
            doc.matrices.emplace_back(name.text, p.matrix());
        }
        p.end_statement();
    }
    return doc;
}

DegreeBounds parse_bounds(const std::string& text) {
    Parser p(text);
    DegreeBounds b;
    b.provenance = BoundProvenance::user_supplied;
    bool have_degree = false;
    p.skip_newlines();
    while (!p.at_end()) {
        Token kw = p.expect_ident();
        if (kw.text == "pole") {
            Token at = p.peek();
            RatFn f = p.ratfn();
            if (!f.is_polynomial() || f.num().degree() < 1)
                p.fail("expected a nonconstant polynomial", at);
            Poly factor = f.num().monic();
            if (gcd(factor, factor.derivative()).degree() > 0)
                p.fail("pole factor must be squarefree", at);
            long k = p.expect_integer();
            if (k < 0 || k > INT_MAX)
                p.fail("pole order out of range");
            b.pole_orders.push_back({factor, static_cast<unsigned>(k)});
        } else if (kw.text == "numerator_degree") {
            long n = p.expect_integer();
            if (n < 0 || n > INT_MAX)
                p.fail("numerator degree out of range");
            b.numerator_degree = static_cast<unsigned>(n);
            have_degree = true;
        } else {
            p.fail("expected 'pole' or 'numerator_degree'", kw);
        }
        p.end_statement();
    }
    if (!have_degree)
        throw InputError("bounds file lacks a numerator_degree line");
    return b;
}

} // namespace pvg
