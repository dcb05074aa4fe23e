#include "hnp/sysio.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace hnp {

namespace {

struct Token {
    enum class Kind { Ident, Int, Plus, Minus, Star, Caret, Slash, LParen, RParen, Newline, End };
    Kind kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_spaces();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::Kind::End, "", line, col};
        char c = text_[pos_];
        if (c == '\n') {
            advance();
            return {Token::Kind::Newline, "\n", line, col};
        }
        if (c == '#') {  // comment to end of line
            while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            return next();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                s += text_[pos_], advance();
            return {Token::Kind::Ident, s, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                s += text_[pos_], advance();
            return {Token::Kind::Int, s, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Token::Kind::Plus, "+", line, col};
            case '-': return {Token::Kind::Minus, "-", line, col};
            case '*': return {Token::Kind::Star, "*", line, col};
            case '^': return {Token::Kind::Caret, "^", line, col};
            case '/': return {Token::Kind::Slash, "/", line, col};
            case '(': return {Token::Kind::LParen, "(", line, col};
            case ')': return {Token::Kind::RParen, ")", line, col};
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    void skip_spaces() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\r'))
            advance();
    }
    void advance() {
        if (text_[pos_] == '\n') ++line_, col_ = 1;
        else ++col_;
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { shift(); }

    ParsedSystem parse() {
        ParsedSystem sys;
        skip_newlines();
        expect_keyword("params");
        while (tok_.kind == Token::Kind::Ident) {
            declare(sys.param_names, tok_.text, true);
            shift();
        }
        expect(Token::Kind::Newline, "newline after params header");
        skip_newlines();
        expect_keyword("vars");
        if (tok_.kind != Token::Kind::Ident)
            throw ParseError("at least one variable required", tok_.line, tok_.col);
        while (tok_.kind == Token::Kind::Ident) {
            declare(sys.var_names, tok_.text, false);
            shift();
        }
        if (tok_.kind != Token::Kind::End)
            expect(Token::Kind::Newline, "newline after vars header");
        sys.m = static_cast<unsigned>(sys.param_names.size());
        sys.n = static_cast<unsigned>(sys.var_names.size());
        m_ = sys.m;

        skip_newlines();
        while (tok_.kind != Token::Kind::End) {
            expect_keyword("eq");
            sys.polys.push_back(parse_expr());
            if (tok_.kind != Token::Kind::End)
                expect(Token::Kind::Newline, "newline after equation");
            skip_newlines();
        }
        if (sys.polys.empty())
            throw ParseError("missing section: at least one 'eq' line required", tok_.line,
                             tok_.col);
        return sys;
    }

    // single expression in an existing namespace
    Polynomial<Rational> parse_single(const std::map<std::string, unsigned>& names) {
        indices_ = names;
        skip_newlines();
        Polynomial<Rational> p = parse_expr();
        skip_newlines();
        if (tok_.kind != Token::Kind::End)
            throw ParseError("trailing input after expression", tok_.line, tok_.col);
        return p;
    }

private:
    void shift() { tok_ = lexer_.next(); }
    void skip_newlines() {
        while (tok_.kind == Token::Kind::Newline) shift();
    }
    void expect(Token::Kind k, const std::string& what) {
        if (tok_.kind != k) throw ParseError("expected " + what, tok_.line, tok_.col);
        shift();
    }
    void expect_keyword(const std::string& kw) {
        if (tok_.kind != Token::Kind::Ident || tok_.text != kw)
            throw ParseError("missing section: expected '" + kw + "'", tok_.line, tok_.col);
        shift();
    }
    void declare(std::vector<std::string>& into, const std::string& name, bool param) {
        if (indices_.count(name))
            throw ParseError("identifier '" + name + "' declared twice", tok_.line, tok_.col);
        unsigned idx = static_cast<unsigned>(indices_.size());
        indices_[name] = idx;
        (void)param;
        into.push_back(name);
    }

    Polynomial<Rational> parse_expr() {
        bool negate = false;
        if (tok_.kind == Token::Kind::Minus) {
            negate = true;
            shift();
        } else if (tok_.kind == Token::Kind::Plus) {
            shift();
        }
        Polynomial<Rational> acc = parse_term();
        if (negate) acc = -acc;
        while (tok_.kind == Token::Kind::Plus || tok_.kind == Token::Kind::Minus) {
            bool minus = tok_.kind == Token::Kind::Minus;
            shift();
            Polynomial<Rational> t = parse_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial<Rational> parse_term() {
        Polynomial<Rational> acc = parse_factor();
        while (tok_.kind == Token::Kind::Star) {
            shift();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial<Rational> parse_factor() {
        Polynomial<Rational> base = parse_base();
        if (tok_.kind == Token::Kind::Caret) {
            shift();
            if (tok_.kind != Token::Kind::Int)
                throw ParseError("exponent must be a non-negative integer", tok_.line, tok_.col);
            Integer e(tok_.text);
            shift();
            // single terms with unit coefficient take huge exponents without
            // expansion (binary-encoded powers are legal input)
            if (base.term_count() == 1) {
                auto [mo, c] = base.leading_term_canonical();
                if (c == 1 || c == -1) {
                    Monomial r;
                    for (const auto& [v, ex] : mo.exps) r = r * Monomial::var(v, ex * e);
                    Rational rc = (c == -1 && e % 2 != 0) ? Rational(-1) : Rational(1);
                    return Polynomial<Rational>::term(r, rc);
                }
            }
            return base.pow(e);
        }
        return base;
    }

    Polynomial<Rational> parse_base() {
        if (tok_.kind == Token::Kind::Ident) {
            auto it = indices_.find(tok_.text);
            if (it == indices_.end())
                throw ParseError("undeclared identifier '" + tok_.text + "'", tok_.line,
                                 tok_.col);
            shift();
            return Polynomial<Rational>::variable(it->second);
        }
        if (tok_.kind == Token::Kind::Int) {
            Integer num(tok_.text);
            shift();
            if (tok_.kind == Token::Kind::Slash) {  // rational literal p/q
                shift();
                if (tok_.kind != Token::Kind::Int)
                    throw ParseError("expected integer denominator", tok_.line, tok_.col);
                Integer den(tok_.text);
                if (den == 0) throw ParseError("zero denominator", tok_.line, tok_.col);
                shift();
                return Polynomial<Rational>(make_rational(num, den));
            }
            return Polynomial<Rational>(Rational(num));
        }
        if (tok_.kind == Token::Kind::LParen) {
            shift();
            Polynomial<Rational> e = parse_expr();
            expect(Token::Kind::RParen, "')'");
            return e;
        }
        throw ParseError("expected identifier, integer or '('", tok_.line, tok_.col);
    }

    Lexer lexer_;
    Token tok_{};
    std::map<std::string, unsigned> indices_;
    unsigned m_ = 0;
};

}  // namespace

ParsedSystem parse_system(const std::string& text) { return Parser(text).parse(); }

PolynomialSystem load_system(const std::string& text) {
    ParsedSystem parsed = parse_system(text);
    PolynomialSystem sys;
    sys.m = parsed.m;
    sys.n = parsed.n;
    sys.param_names = parsed.param_names;
    sys.var_names = parsed.var_names;
    for (const auto& p : parsed.polys) sys.polys.push_back(clear_rational_denominators(p));
    return sys;
}

PolynomialSystem load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_system(buf.str());
}

std::string render_polynomial(const Polynomial<Integer>& p, const PolynomialSystem& s) {
    return p.to_string([&](unsigned i) { return s.name_of(i); });
}

std::string render_system(const PolynomialSystem& s) {
    std::ostringstream out;
    out << "params";
    for (unsigned i = 0; i < s.m; ++i) out << " " << s.name_of(i);
    out << "\nvars";
    for (unsigned i = 0; i < s.n; ++i) out << " " << s.name_of(s.m + i);
    out << "\n";
    for (const auto& p : s.polys) out << "eq " << render_polynomial(p, s) << "\n";
    return out.str();
}

Polynomial<Integer> parse_polynomial(const std::string& expr, const PolynomialSystem& s) {
    std::map<std::string, unsigned> names;
    for (unsigned i = 0; i < s.m + s.n; ++i) names[s.name_of(i)] = i;
    Parser parser(expr);
    Polynomial<Rational> p = parser.parse_single(names);
    Integer scale;
    Polynomial<Integer> z = clear_rational_denominators(p, &scale);
    if (scale != 1) throw std::runtime_error("expected integer coefficients in '" + expr + "'");
    return z;
}

}  // namespace hnp
