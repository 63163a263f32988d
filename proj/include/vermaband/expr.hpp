#pragma once

// Operator expression language for the CLI:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := scalar | atom
//   scalar := rational | rational 'i' | '(' scalar ('+'|'-') scalar ')'
//   atom   := 'D' | 'F' | 'I' | 'L' '(' int ')' | 'P' '(' nat ')'
//           | 'adj' '(' expr ')' | 'com' '(' expr ',' expr ')' | '(' expr ')'
//
// '*' is operator composition, scalars commute with everything, and the
// Unicode minus sign is accepted as an alias for '-'.  Scalar +/- scalar is
// folded at parse time so the printed form of a Gaussian literal reparses
// to the same tree.

#include "vermaband/conformal.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace vermaband {

struct ParseError : std::runtime_error {
    ParseError(size_t pos, const std::string& expected)
        : std::runtime_error("syntax error at position " + std::to_string(pos) + ": expected " +
                             expected),
          position(pos),
          expected_tokens(expected) {}
    size_t position;  // 1-based byte offset
    std::string expected_tokens;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { scalar, atom_d, atom_f, atom_i, atom_l, atom_p, adj, com, add, sub, mul };

    Kind kind;
    GaussianRational value;  // scalar
    long long index = 0;     // atom_l / atom_p
    ExprPtr a, b;

    static ExprPtr scalar(GaussianRational v) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::scalar;
        e->value = std::move(v);
        return e;
    }
    static ExprPtr atom(Kind k, long long index = 0) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->index = index;
        return e;
    }
    static ExprPtr unary(Kind k, ExprPtr x) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->a = std::move(x);
        return e;
    }
    static ExprPtr binary(Kind k, ExprPtr x, ExprPtr y) {
        // fold scalar +/- scalar so compound Gaussian literals stay one node
        if ((k == Kind::add || k == Kind::sub) && x->kind == Kind::scalar &&
            y->kind == Kind::scalar) {
            return scalar(k == Kind::add ? x->value + y->value : x->value - y->value);
        }
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->a = std::move(x);
        e->b = std::move(y);
        return e;
    }

    friend bool operator==(const Expr& l, const Expr& r) {
        if (l.kind != r.kind || l.index != r.index || !(l.value == r.value)) return false;
        auto eq = [](const ExprPtr& p, const ExprPtr& q) {
            if (!p && !q) return true;
            if (!p || !q) return false;
            return *p == *q;
        };
        return eq(l.a, r.a) && eq(l.b, r.b);
    }
};

namespace detail {

enum class TokKind { number, imag_unit, word, plus, minus, star, lparen, rparen, comma, end };

struct Token {
    TokKind kind;
    size_t pos;  // 1-based byte offset
    std::string text;
    Rational number;
};

inline std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    auto push = [&](TokKind k, size_t pos, std::string text = {}) {
        out.push_back({k, pos + 1, std::move(text), Rational(0)});
    };
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        // U+2212 MINUS SIGN as '-' alias
        if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < s.size() &&
            static_cast<unsigned char>(s[i + 1]) == 0x88 &&
            static_cast<unsigned char>(s[i + 2]) == 0x92) {
            push(TokKind::minus, i);
            i += 3;
            continue;
        }
        if (c == '+') { push(TokKind::plus, i); ++i; continue; }
        if (c == '-') { push(TokKind::minus, i); ++i; continue; }
        if (c == '*') { push(TokKind::star, i); ++i; continue; }
        if (c == '(') { push(TokKind::lparen, i); ++i; continue; }
        if (c == ')') { push(TokKind::rparen, i); ++i; continue; }
        if (c == ',') { push(TokKind::comma, i); ++i; continue; }
        if (c >= '0' && c <= '9') {
            size_t start = i;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
            std::string num = s.substr(start, i - start);
            std::string den = "1";
            if (i < s.size() && s[i] == '/') {
                ++i;
                if (i >= s.size() || s[i] < '0' || s[i] > '9')
                    throw ParseError(i + 1, "digits after '/'");
                size_t dstart = i;
                while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
                den = s.substr(dstart, i - dstart);
            }
            Token t{TokKind::number, start + 1, s.substr(start, i - start), Rational(Int(num), Int(den))};
            out.push_back(std::move(t));
            continue;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
            size_t start = i;
            while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') || (s[i] >= 'A' && s[i] <= 'Z')))
                ++i;
            std::string word = s.substr(start, i - start);
            if (word == "i")
                out.push_back({TokKind::imag_unit, start + 1, word, Rational(0)});
            else
                out.push_back({TokKind::word, start + 1, word, Rational(0)});
            continue;
        }
        throw ParseError(i + 1, "a token ('" + std::string(1, c) + "' is not recognized)");
    }
    out.push_back({TokKind::end, s.size() + 1, "", Rational(0)});
    return out;
}

class Parser {
public:
    explicit Parser(std::string text) : toks_(lex(text)) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        expect(TokKind::end, "end of input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    bool accept(TokKind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(TokKind k, const std::string& what) {
        if (!accept(k)) throw ParseError(peek().pos, what);
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            if (accept(TokKind::plus))
                e = Expr::binary(Expr::Kind::add, e, term());
            else if (accept(TokKind::minus))
                e = Expr::binary(Expr::Kind::sub, e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (accept(TokKind::star)) e = Expr::binary(Expr::Kind::mul, e, factor());
        return e;
    }

    ExprPtr factor() {
        const Token& t = peek();
        if (t.kind == TokKind::number) {
            advance();
            Rational v = t.number;
            if (accept(TokKind::imag_unit)) return Expr::scalar(GaussianRational(Rational(0), v));
            return Expr::scalar(GaussianRational(v));
        }
        if (t.kind == TokKind::word) {
            advance();
            if (t.text == "D") return Expr::atom(Expr::Kind::atom_d);
            if (t.text == "F") return Expr::atom(Expr::Kind::atom_f);
            if (t.text == "I") return Expr::atom(Expr::Kind::atom_i);
            if (t.text == "L") {
                expect(TokKind::lparen, "'('");
                bool neg = accept(TokKind::minus);
                if (peek().kind != TokKind::number || denominator(peek().number) != 1)
                    throw ParseError(peek().pos, "integer");
                long long k = numerator(advance().number).convert_to<long long>();
                expect(TokKind::rparen, "')'");
                return Expr::atom(Expr::Kind::atom_l, neg ? -k : k);
            }
            if (t.text == "P") {
                expect(TokKind::lparen, "'('");
                if (peek().kind != TokKind::number || denominator(peek().number) != 1)
                    throw ParseError(peek().pos, "nonnegative integer");
                long long k = numerator(advance().number).convert_to<long long>();
                expect(TokKind::rparen, "')'");
                return Expr::atom(Expr::Kind::atom_p, k);
            }
            if (t.text == "adj") {
                expect(TokKind::lparen, "'('");
                ExprPtr e = expr();
                expect(TokKind::rparen, "')'");
                return Expr::unary(Expr::Kind::adj, std::move(e));
            }
            if (t.text == "com") {
                expect(TokKind::lparen, "'('");
                ExprPtr x = expr();
                expect(TokKind::comma, "','");
                ExprPtr y = expr();
                expect(TokKind::rparen, "')'");
                return Expr::binary(Expr::Kind::com, std::move(x), std::move(y));
            }
            throw ParseError(t.pos, "one of D, F, I, L, P, adj, com ('" + t.text + "' is unknown)");
        }
        if (t.kind == TokKind::lparen) {
            advance();
            ExprPtr e = expr();
            expect(TokKind::rparen, "')'");
            return e;
        }
        throw ParseError(t.pos, "a scalar, an operator atom or '('");
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expr(const std::string& text) { return detail::Parser(text).parse(); }

namespace detail {

inline std::string print_scalar(const GaussianRational& v) {
    if (v.im() == 0) {
        if (v.re() >= 0) return to_string(v.re());
        return "(0 - " + to_string(Rational(-v.re())) + ")";
    }
    if (v.re() == 0) {
        if (v.im() > 0) return to_string(v.im()) + "i";
        return "(0 - " + to_string(Rational(-v.im())) + "i)";
    }
    std::string re = print_scalar(GaussianRational(v.re()));
    std::string im = to_string(v.im() > 0 ? v.im() : Rational(-v.im())) + "i";
    return "(" + re + (v.im() > 0 ? " + " : " - ") + im + ")";
}

inline std::string print_node(const Expr& e, int parent_bind);

// binding strength: 0 = additive context, 1 = multiplicative left, 2 = any operand
inline std::string maybe_paren(const Expr& e, bool need) {
    std::string s = print_node(e, 0);
    return need ? "(" + s + ")" : s;
}

inline std::string print_node(const Expr& e, int parent_bind) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::scalar: return print_scalar(e.value);
        case K::atom_d: return "D";
        case K::atom_f: return "F";
        case K::atom_i: return "I";
        case K::atom_l: return "L(" + std::to_string(e.index) + ")";
        case K::atom_p: return "P(" + std::to_string(e.index) + ")";
        case K::adj: return "adj(" + print_node(*e.a, 0) + ")";
        case K::com: return "com(" + print_node(*e.a, 0) + "," + print_node(*e.b, 0) + ")";
        case K::add:
        case K::sub: {
            bool self_paren = parent_bind >= 1;
            bool right_paren = e.b->kind == K::add || e.b->kind == K::sub;
            std::string s = print_node(*e.a, 0) + (e.kind == K::add ? " + " : " - ") +
                            maybe_paren(*e.b, right_paren);
            return self_paren ? "(" + s + ")" : s;
        }
        case K::mul: {
            bool self_paren = parent_bind >= 2;
            bool right_paren = e.b->kind == K::mul;
            std::string s = print_node(*e.a, 1) + " * " + (right_paren ? "(" : "") +
                            print_node(*e.b, 1) + (right_paren ? ")" : "");
            return self_paren ? "(" + s + ")" : s;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

inline std::string print_expr(const ExprPtr& e) { return detail::print_node(*e, 0); }

// scalars evaluate to multiples of the identity, so ordinary band-operator
// algebra realizes "scalars commute with everything"
inline BandOperator eval_expr(const ExprPtr& e, const Weight& w) {
    using K = Expr::Kind;
    switch (e->kind) {
        case K::scalar: return e->value * BandOperator::identity(w);
        case K::atom_d: return gen_D(w);
        case K::atom_f: return gen_F(w);
        case K::atom_i: return BandOperator::identity(w);
        case K::atom_l: return gen_L(e->index, w);
        case K::atom_p: return BandOperator::projector(w, e->index);
        case K::adj: return eval_expr(e->a, w).adjoint();
        case K::com: return commutator(eval_expr(e->a, w), eval_expr(e->b, w));
        case K::add: return eval_expr(e->a, w) + eval_expr(e->b, w);
        case K::sub: return eval_expr(e->a, w) - eval_expr(e->b, w);
        case K::mul: return eval_expr(e->a, w) * eval_expr(e->b, w);
    }
    throw std::logic_error("unreachable");
}

}  // namespace vermaband
