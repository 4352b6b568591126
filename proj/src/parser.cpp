#include "weyl/parser.hpp"

#include <algorithm>
#include <cctype>

namespace weyl {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    size_t pos; // 1-based
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        size_t pos = i_ + 1;
        if (i_ >= s_.size()) return {Token::Kind::End, "", pos};
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (i_ < s_.size() && s_[i_] == '/') {
                size_t save = i_++;
                if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                        ++i_;
                } else {
                    i_ = save; // lone slash is not part of a literal
                }
            }
            return {Token::Kind::Number, s_.substr(start, i_ - start), pos};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++i_;
            return {Token::Kind::Ident, std::string(1, c), pos};
        }
        ++i_;
        switch (c) {
            case '+': return {Token::Kind::Plus, "+", pos};
            case '-': return {Token::Kind::Minus, "-", pos};
            case '*': return {Token::Kind::Star, "*", pos};
            case '^': return {Token::Kind::Caret, "^", pos};
            case '(': return {Token::Kind::LParen, "(", pos};
            case ')': return {Token::Kind::RParen, ")", pos};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

private:
    const std::string& s_;
    size_t i_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s), tok_(lex_.next()) {}

    WeylOp run() {
        WeylOp p = expr();
        expect(Token::Kind::End, "trailing input");
        return p;
    }

private:
    void advance() { tok_ = lex_.next(); }
    void expect(Token::Kind k, const char* what) {
        if (tok_.kind != k) throw ParseError(what, tok_.pos);
    }

    WeylOp expr() {
        WeylOp acc = term();
        while (tok_.kind == Token::Kind::Plus || tok_.kind == Token::Kind::Minus) {
            bool minus = tok_.kind == Token::Kind::Minus;
            advance();
            WeylOp rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    WeylOp term() {
        WeylOp acc = factor();
        while (tok_.kind == Token::Kind::Star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    WeylOp factor() {
        WeylOp base = atom();
        if (tok_.kind != Token::Kind::Caret) return base;
        advance();
        if (tok_.kind == Token::Kind::Minus)
            throw ParseError("exponent must be a nonnegative integer", tok_.pos);
        expect(Token::Kind::Number, "exponent must be a literal integer");
        if (tok_.text.find('/') != std::string::npos)
            throw ParseError("exponent must be an integer", tok_.pos);
        unsigned long e;
        try {
            e = std::stoul(tok_.text);
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", tok_.pos);
        }
        advance();
        return base.pow(e);
    }

    WeylOp atom() {
        Token t = tok_;
        switch (t.kind) {
            case Token::Kind::Number:
                advance();
                return WeylOp(rational_parse(t.text));
            case Token::Kind::Ident:
                advance();
                if (t.text == "x") return WeylOp::x();
                if (t.text == "D") return WeylOp::d();
                if (t.text == "a") return WeylOp::parameter();
                throw ParseError("unknown symbol '" + t.text + "'", t.pos);
            case Token::Kind::LParen: {
                advance();
                WeylOp inner = expr();
                expect(Token::Kind::RParen, "expected ')'");
                advance();
                return inner;
            }
            case Token::Kind::Minus:
                advance();
                return -factor();
            default:
                throw ParseError("expected a value", t.pos);
        }
    }

    Lexer lex_;
    Token tok_;
};

std::string power_str(const char* var, long e) {
    if (e == 0) return "";
    std::string s = var;
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

std::string monomial_str(const std::string& xpart, const std::string& dpart) {
    if (xpart.empty()) return dpart;
    if (dpart.empty()) return xpart;
    return xpart + "*" + dpart;
}

/// Shared term appender with rational sign folding; parameter-dependent
/// coefficients are parenthesised instead.
void append_term(std::string& out, const ParamPoly& c, const std::string& mon) {
    bool first = out.empty();
    if (c.is_rational()) {
        Rational r = c.as_rational();
        bool neg = r < 0;
        Rational mag = neg ? Rational(-r) : r;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (mon.empty())
            out += rational_str(mag);
        else if (mag == 1)
            out += mon;
        else
            out += rational_str(mag) + "*" + mon;
    } else {
        std::string cs = c.str("a");
        // a lone positive parameter term needs no parentheses
        bool bare = mon.empty() && cs.find(' ') == std::string::npos && cs[0] != '-';
        out += first ? "" : " + ";
        if (bare) {
            out += cs;
        } else {
            out += "(" + cs + ")";
            if (!mon.empty()) out += "*" + mon;
        }
    }
}

} // namespace

WeylOp parse_operator(const std::string& text) { return Parser(text).run(); }

std::string render_operator(const WeylOp& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, ParamPoly>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
        return std::pair(l.first.j, l.first.i) > std::pair(r.first.j, r.first.i);
    });
    std::string out;
    for (const auto& [mon, c] : terms)
        append_term(out, c, monomial_str(power_str("x", mon.i), power_str("D", mon.j)));
    return out;
}

std::string render_bipoly(const BiPoly& f, bool uppercase) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Monomial, ParamPoly>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
        return std::pair(l.first.j, l.first.i) > std::pair(r.first.j, r.first.i);
    });
    std::string out;
    for (const auto& [mon, c] : terms)
        append_term(out, c,
                    monomial_str(power_str(uppercase ? "X" : "x", mon.i),
                                 power_str(uppercase ? "Y" : "y", mon.j)));
    return out;
}

std::string render_xseries(const XSeries& u) {
    std::string out;
    for (long k = 0; k < u.trunc(); ++k) {
        const ParamPoly& c = u.coeff(k);
        if (c.is_zero()) continue;
        append_term(out, c, power_str("x", k));
    }
    return out.empty() ? "0" : out;
}

std::string render_psido(const PsiDO& a) {
    std::string out;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        const auto& [j, u] = *it;
        if (u.is_zero()) continue;
        std::string mon =
            j >= 0 ? power_str("D", j) : "Dinv^" + std::to_string(-j);
        if (u.is_constant()) {
            append_term(out, u.coeff(0), mon);
            continue;
        }
        bool first = out.empty();
        out += first ? "" : " + ";
        out += "(" + render_xseries(u) + ")";
        if (!mon.empty()) out += "*" + mon;
    }
    return out.empty() ? "0" : out;
}

} // namespace weyl
