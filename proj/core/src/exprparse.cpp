#include "qna/catalog.hpp"
#include "qna/errors.hpp"

#include <cctype>
#include <sstream>

namespace qna {

namespace {

struct Token {
    enum Kind { Int, Q, Gen, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    BigInt value;  // Int
    int gen = 0;   // Gen (1-based)
    int pos = 0;   // 1-based column for diagnostics
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        tok_.pos = static_cast<int>(i_) + 1;
        if (i_ >= s_.size()) {
            tok_.kind = Token::End;
            return;
        }
        const char c = s_[i_];
        switch (c) {
        case '+': tok_.kind = Token::Plus; ++i_; return;
        case '-': tok_.kind = Token::Minus; ++i_; return;
        case '*': tok_.kind = Token::Star; ++i_; return;
        case '/': tok_.kind = Token::Slash; ++i_; return;
        case '^': tok_.kind = Token::Caret; ++i_; return;
        case '(': tok_.kind = Token::LParen; ++i_; return;
        case ')': tok_.kind = Token::RParen; ++i_; return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_.kind = Token::Int;
            tok_.value = BigInt(s_.substr(i_, j - i_));
            i_ = j;
            return;
        }
        if (c == 'q') {
            tok_.kind = Token::Q;
            ++i_;
            return;
        }
        if (c == 'x') {
            std::size_t j = i_ + 1;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            if (j == i_ + 1)
                throw ParseError("expected generator index after 'x'", 1, tok_.pos);
            tok_.kind = Token::Gen;
            tok_.gen = std::stoi(s_.substr(i_ + 1, j - i_ - 1));
            i_ = j;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", 1, tok_.pos);
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
};

class PolyParser {
public:
    PolyParser(const std::string& text, int n) : lex_(text), n_(n) {}

    NFPoly parse() {
        NFPoly p = parse_poly();
        if (lex_.peek().kind != Token::End)
            throw ParseError("trailing input in expression", 1, lex_.peek().pos);
        return p;
    }

private:
    // One multiplicative chain: scalar coefficient plus an ascending
    // generator monomial.
    struct TermVal {
        RatQ coeff{1};
        Expo expo;
        int last_gen = 0;
    };

    NFPoly parse_poly() {
        NFPoly acc;
        bool neg = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            neg = true;
        }
        acc = acc + parse_term(neg);
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            const bool minus = lex_.take().kind == Token::Minus;
            acc = acc + parse_term(minus);
        }
        return acc;
    }

    static bool starts_atom(Token::Kind k) {
        return k == Token::Int || k == Token::Q || k == Token::Gen || k == Token::LParen;
    }

    NFPoly parse_term(bool negated) {
        TermVal t;
        t.expo.assign(static_cast<std::size_t>(n_), 0);
        parse_factor_into(t, /*dividing=*/false);
        for (;;) {
            const Token::Kind k = lex_.peek().kind;
            if (k == Token::Star) {
                lex_.take();
                parse_factor_into(t, false);
            } else if (k == Token::Slash) {
                lex_.take();
                parse_factor_into(t, true);
            } else if (starts_atom(k)) {
                parse_factor_into(t, false);
            } else {
                break;
            }
        }
        if (negated) t.coeff = -t.coeff;
        return NFPoly::monomial(std::move(t.expo), t.coeff);
    }

    void parse_factor_into(TermVal& t, bool dividing) {
        const Token atom = lex_.take();
        long power = 1;
        if (lex_.peek().kind == Token::Caret) {
            lex_.take();
            bool pneg = false;
            if (lex_.peek().kind == Token::Minus) {
                lex_.take();
                pneg = true;
            }
            const Token p = lex_.take();
            if (p.kind != Token::Int)
                throw ParseError("expected integer exponent after '^'", 1, p.pos);
            power = static_cast<long>(p.value);
            if (pneg) power = -power;
        }
        switch (atom.kind) {
        case Token::Int: {
            RatQ v = RatQ(ZPoly(atom.value)).pow(power);
            t.coeff = dividing ? t.coeff / v : t.coeff * v;
            return;
        }
        case Token::Q: {
            RatQ v = RatQ::q_power(power);
            t.coeff = dividing ? t.coeff / v : t.coeff * v;
            return;
        }
        case Token::LParen: {
            NFPoly inner = parse_poly();
            const Token close = lex_.take();
            if (close.kind != Token::RParen)
                throw ParseError("expected ')'", 1, close.pos);
            if (inner.max_support_index() != 0)
                throw ParseError("parenthesized subexpressions must be scalar", 1, atom.pos);
            RatQ v = inner.is_zero() ? RatQ(0) : inner.terms().begin()->second;
            if (power != 1) v = v.pow(power);
            t.coeff = dividing ? t.coeff / v : t.coeff * v;
            return;
        }
        case Token::Gen: {
            if (dividing)
                throw ParseError("cannot divide by a generator", 1, atom.pos);
            if (atom.gen < 1 || atom.gen > n_)
                throw ParseError("generator x" + std::to_string(atom.gen) + " out of range (n = " +
                                     std::to_string(n_) + ")",
                                 1, atom.pos);
            if (power < 0)
                throw ParseError("generator powers must be nonnegative", 1, atom.pos);
            if (atom.gen <= t.last_gen)
                throw ParseError("generators must appear in strictly increasing order "
                                 "(normal form)",
                                 1, atom.pos);
            t.expo[static_cast<std::size_t>(atom.gen - 1)] = power;
            t.last_gen = atom.gen;
            return;
        }
        default:
            throw ParseError("expected a number, q, generator or '('", 1, atom.pos);
        }
    }

    Lexer lex_;
    int n_;
};

} // namespace

NFPoly parse_poly_expr(const std::string& text, int n) {
    return PolyParser(text, n).parse();
}

RatQ parse_ratq(const std::string& text) {
    NFPoly p = PolyParser(text, 0).parse();
    if (p.is_zero()) return RatQ(0);
    return p.terms().begin()->second;
}

std::string poly_expr_string(const NFPoly& f) { return f.to_string(); }

} // namespace qna
