#include "paramdyn/poly_text.hpp"

#include <cctype>

#include "paramdyn/errors.hpp"

namespace paramdyn {

namespace {

struct Lexer {
    enum class Tok { Num, T, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

    explicit Lexer(const std::string& s) : src(s) { advance(); }

    Tok tok = Tok::End;
    Rat num;

    void advance() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos >= src.size()) {
            tok = Tok::End;
            return;
        }
        char c = src[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            // a '/' directly binding two integer literals is one rational
            std::size_t save = pos;
            if (pos < src.size() && src[pos] == '/') {
                std::size_t q = pos + 1;
                while (q < src.size() && std::isspace(static_cast<unsigned char>(src[q]))) ++q;
                if (q < src.size() && std::isdigit(static_cast<unsigned char>(src[q]))) {
                    pos = q;
                    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
                        ++pos;
                    std::string lit = src.substr(start, pos - start);
                    lit.erase(std::remove_if(lit.begin(), lit.end(),
                                             [](unsigned char ch) { return std::isspace(ch); }),
                              lit.end());
                    num = rat_from_string(lit);
                    tok = Tok::Num;
                    return;
                }
                pos = save;
            }
            num = rat_from_string(src.substr(start, pos - start));
            tok = Tok::Num;
            return;
        }
        ++pos;
        switch (c) {
            case 't': tok = Tok::T; return;
            case '+': tok = Tok::Plus; return;
            case '-': tok = Tok::Minus; return;
            case '*': tok = Tok::Star; return;
            case '/': tok = Tok::Slash; return;
            case '^': tok = Tok::Caret; return;
            case '(': tok = Tok::LParen; return;
            case ')': tok = Tok::RParen; return;
            default: throw ParseError(std::string("unexpected character '") + c + "' in polynomial");
        }
    }

    const std::string& src;
    std::size_t pos = 0;
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex(s) {}

    Poly parse() {
        Poly p = expr();
        if (lex.tok != Lexer::Tok::End) throw ParseError("trailing input in polynomial");
        return p;
    }

private:
    Lexer lex;

    Poly expr() {
        bool neg = false;
        if (lex.tok == Lexer::Tok::Plus || lex.tok == Lexer::Tok::Minus) {
            neg = lex.tok == Lexer::Tok::Minus;
            lex.advance();
        }
        Poly acc = term();
        if (neg) acc = -acc;
        while (lex.tok == Lexer::Tok::Plus || lex.tok == Lexer::Tok::Minus) {
            bool sub = lex.tok == Lexer::Tok::Minus;
            lex.advance();
            Poly rhs = term();
            acc = sub ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    bool starts_factor() const {
        return lex.tok == Lexer::Tok::Num || lex.tok == Lexer::Tok::T ||
               lex.tok == Lexer::Tok::LParen;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (lex.tok == Lexer::Tok::Star) {
                lex.advance();
                acc = acc * factor();
            } else if (lex.tok == Lexer::Tok::Slash) {
                lex.advance();
                if (lex.tok != Lexer::Tok::Num)
                    throw ParseError("'/' divides by a rational constant only");
                if (lex.num == 0) throw ParseError("division by zero");
                acc = (Rat(1) / lex.num) * acc;
                lex.advance();
            } else if (starts_factor()) {
                acc = acc * factor();  // implicit multiplication: "2t", "t(t-1)"
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        if (lex.tok == Lexer::Tok::Caret) {
            lex.advance();
            if (lex.tok != Lexer::Tok::Num || lex.num.get_den() != 1 || lex.num < 0)
                throw ParseError("'^' needs a nonnegative integer exponent");
            long e = lex.num.get_num().get_si();
            if (e > 512) throw ParseError("exponent too large");
            lex.advance();
            return poly_pow(base, static_cast<int>(e));
        }
        return base;
    }

    Poly atom() {
        switch (lex.tok) {
            case Lexer::Tok::Num: {
                Poly p = Poly::constant(lex.num);
                lex.advance();
                return p;
            }
            case Lexer::Tok::T:
                lex.advance();
                return Poly::variable();
            case Lexer::Tok::LParen: {
                lex.advance();
                Poly p = expr();
                if (lex.tok != Lexer::Tok::RParen) throw ParseError("missing ')'");
                lex.advance();
                return p;
            }
            default:
                throw ParseError("expected a number, 't', or '('");
        }
    }
};

}  // namespace

Poly parse_poly_text(const std::string& text) { return Parser(text).parse(); }

ProjPointK parse_point_spec(const std::string& text) {
    std::string s = text;
    // trim
    auto issp = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && issp(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && issp(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw ParseError("empty point spec");
    if (s == "inf" || s == "oo") return ProjPointK::infinity();

    std::size_t colon = s.find(':');
    if (colon == std::string::npos) return reduce_point(parse_poly_text(s), Poly::constant(Rat(1)));
    Poly a = parse_poly_text(s.substr(0, colon));
    Poly b = parse_poly_text(s.substr(colon + 1));
    if (a.is_zero() && b.is_zero()) throw ParseError("point (0 : 0) is not projective");
    return reduce_point(a, b);
}

}  // namespace paramdyn
