#include "dfsing/parse.hpp"

#include <cctype>
#include <sstream>

namespace dfsing {

namespace {

struct Token {
    enum class Kind { Number, Var, Partial, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    Integer value; // Number
    int index = 0; // Var / Partial, 0-based
    int line = 1, col = 1;
};

class Lexer {
  public:
    Lexer(const std::string& text, int line0 = 1) : text_(text), line_(line0) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= text_.size()) {
            t.kind = Token::Kind::End;
            return t;
        }
        char c = text_[pos_];
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) advance();
            t.kind = Token::Kind::Number;
            t.value = Integer(text_.substr(start, pos_ - start));
            return t;
        }
        if (c == 'x' || c == 'd') {
            advance();
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) advance();
            if (start == pos_) throw ParseError("variable needs an index", t.line, t.col);
            std::string digits = text_.substr(start, pos_ - start);
            if (digits.size() > 6) throw ParseError("variable index out of range", t.line, t.col);
            int idx = std::stoi(digits);
            if (idx < 1) throw ParseError("variable index must be >= 1", t.line, t.col);
            t.kind = c == 'x' ? Token::Kind::Var : Token::Kind::Partial;
            t.index = idx - 1;
            return t;
        }
        advance();
        switch (c) {
            case '+': t.kind = Token::Kind::Plus; return t;
            case '-': t.kind = Token::Kind::Minus; return t;
            case '*': t.kind = Token::Kind::Star; return t;
            case '/': t.kind = Token::Kind::Slash; return t;
            case '^': t.kind = Token::Kind::Caret; return t;
            case '(': t.kind = Token::Kind::LParen; return t;
            case ')': t.kind = Token::Kind::RParen; return t;
            default: throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.col);
        }
    }

  private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) advance();
    }
    const std::string& text_;
    size_t pos_ = 0;
    int line_, col_ = 1;
};

class Parser {
  public:
    Parser(const std::string& text, int nvars, int line0 = 1)
        : lex_(text, line0), nvars_(nvars) {
        cur_ = lex_.next();
    }

    OreOperator parse() {
        OreOperator e = expr();
        expect(Token::Kind::End, "end of expression");
        return e;
    }

  private:
    Lexer lex_;
    int nvars_;
    Token cur_;

    void bump() { cur_ = lex_.next(); }
    void expect(Token::Kind k, const char* what) {
        if (cur_.kind != k) throw ParseError(std::string("expected ") + what, cur_.line, cur_.col);
    }

    OreOperator expr() {
        bool neg = false;
        if (cur_.kind == Token::Kind::Minus) {
            neg = true;
            bump();
        } else if (cur_.kind == Token::Kind::Plus) {
            bump();
        }
        OreOperator acc = term();
        if (neg) acc = -acc;
        while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
            bool minus = cur_.kind == Token::Kind::Minus;
            bump();
            OreOperator t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    OreOperator term() {
        OreOperator acc = factor();
        while (cur_.kind == Token::Kind::Star || cur_.kind == Token::Kind::Slash) {
            bool div = cur_.kind == Token::Kind::Slash;
            Token op = cur_;
            bump();
            OreOperator f = factor();
            if (div) {
                if (f.order() != 0)
                    throw ParseError("division by a non-constant", op.line, op.col);
                RatFunc c = f.coeff(ExpVec(nvars_, 0));
                if (!c.is_polynomial() || !c.as_polynomial().is_constant() ||
                    c.as_polynomial().is_zero())
                    throw ParseError("division needs a nonzero constant", op.line, op.col);
                acc = acc * (RatFunc::constant(nvars_, 1) / c);
            } else {
                acc = acc * f;
            }
        }
        return acc;
    }

    OreOperator factor() {
        OreOperator a = atom();
        if (cur_.kind == Token::Kind::Caret) {
            Token op = cur_;
            bump();
            expect(Token::Kind::Number, "exponent");
            if (!cur_.value.fits_sint_p())
                throw ParseError("exponent too large", op.line, op.col);
            int e = (int)cur_.value.get_si();
            bump();
            a = a.pow(e);
        }
        return a;
    }

    OreOperator atom() {
        switch (cur_.kind) {
            case Token::Kind::Number: {
                OreOperator c = OreOperator::coeff_op(RatFunc::constant(nvars_, Rational(cur_.value)));
                bump();
                return c;
            }
            case Token::Kind::Var: {
                if (cur_.index >= nvars_)
                    throw ParseError("variable index exceeds n", cur_.line, cur_.col);
                OreOperator v =
                    OreOperator::coeff_op(RatFunc(MultiPoly::variable(nvars_, cur_.index)));
                bump();
                return v;
            }
            case Token::Kind::Partial: {
                if (cur_.index >= nvars_)
                    throw ParseError("partial index exceeds n", cur_.line, cur_.col);
                OreOperator p = OreOperator::partial(nvars_, cur_.index);
                bump();
                return p;
            }
            case Token::Kind::LParen: {
                bump();
                OreOperator e = expr();
                expect(Token::Kind::RParen, "')'");
                bump();
                return e;
            }
            default:
                throw ParseError("expected a number, variable, partial, or '('", cur_.line, cur_.col);
        }
    }
};

} // namespace

OreOperator parse_operator(const std::string& text, int nvars) {
    return Parser(text, nvars).parse();
}

MultiPoly parse_polynomial(const std::string& text, int nvars) {
    OreOperator p = parse_operator(text, nvars);
    if (p.is_zero()) return MultiPoly(nvars);
    if (p.order() != 0) throw ParseError("expected a polynomial, found partials", 1, 1);
    return p.coeff(ExpVec(nvars, 0)).as_polynomial();
}

Rational parse_rational(const std::string& text) {
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    };
    skip();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
    }
    skip();
    size_t start = pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (start == pos) throw ParseError("expected a rational number", 1, (int)pos + 1);
    Integer num(text.substr(start, pos - start));
    Integer den(1);
    skip();
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip();
        start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (start == pos) throw ParseError("expected a denominator", 1, (int)pos + 1);
        den = Integer(text.substr(start, pos - start));
    }
    skip();
    if (pos != text.size()) throw ParseError("trailing characters after number", 1, (int)pos + 1);
    if (neg) num = -num;
    return make_rational(num, den);
}

std::vector<Rational> parse_rational_vector(const std::string& text, int nvars) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(parse_rational(item));
    if ((int)out.size() != nvars)
        throw ParseError("expected " + std::to_string(nvars) + " components", 1, 1);
    return out;
}

std::vector<std::vector<Rational>> parse_point_list(const std::string& text, int nvars) {
    std::vector<std::vector<Rational>> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ';')) out.push_back(parse_rational_vector(item, nvars));
    return out;
}

SystemFile parse_system(const std::string& text) {
    SystemFile sys;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool have_n = false;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (!have_n) {
            if (line.rfind("n=", 0) != 0)
                throw ParseError("first line must be n=<int>", lineno, 1);
            try {
                sys.nvars = std::stoi(line.substr(2));
            } catch (const std::exception&) {
                throw ParseError("malformed variable count", lineno, 1);
            }
            if (sys.nvars < 1 || sys.nvars > 16)
                throw ParseError("n must be between 1 and 16", lineno, 1);
            have_n = true;
            continue;
        }
        OreOperator op = Parser(line, sys.nvars, lineno).parse();
        if (op.is_zero()) throw ParseError("zero operator", lineno, 1);
        sys.generators.push_back(std::move(op));
    }
    if (!have_n) throw ParseError("missing n=<int> header", lineno ? lineno : 1, 1);
    if (sys.generators.empty()) throw ParseError("no generators", lineno, 1);
    return sys;
}

std::string print_system(const SystemFile& s) {
    std::ostringstream os;
    os << "n=" << s.nvars << "\n";
    for (const auto& g : s.generators) os << g.str() << "\n";
    return os.str();
}

} // namespace dfsing
