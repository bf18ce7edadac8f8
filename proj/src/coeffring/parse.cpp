#include "pleth/coeffring/parse.hpp"

#include <cctype>
#include <vector>

namespace pleth {

namespace {

struct Token {
    enum Kind { Int, Var, Q, Op, End } kind;
    std::string text;
    int var = 0;
    size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '#') {
            while (i < s.size() && s[i] != '\n') ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Int, std::string(s.substr(i, j - i)), 0, i});
            i = j;
        } else if (c == 't') {
            size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i + 1) throw ParseError("variable 't' needs an index at position " + std::to_string(i));
            int idx = std::stoi(std::string(s.substr(i + 1, j - i - 1)));
            if (idx < 1 || idx > kMaxVars)
                throw ParseError("variable index out of range at position " + std::to_string(i));
            out.push_back({Token::Var, std::string(s.substr(i, j - i)), idx - 1, i});
            i = j;
        } else if (c == 'q') {
            out.push_back({Token::Q, "q", 0, i});
            ++i;
        } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
            out.push_back({Token::Op, std::string(1, c), 0, i});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' at position " + std::to_string(i));
        }
    }
    out.push_back({Token::End, "", 0, s.size()});
    return out;
}

struct RatFunRing {
    int nvars;
    RatFun integer(const std::string& digits) const { return RatFun(Rational::parse(digits)); }
    RatFun var(int v) const { return RatFun::variable(nvars, v); }
    RatFun q() const { throw ParseError("'q' is not allowed in a rational function"); }
    RatFun div(const RatFun& a, const RatFun& b) const {
        if (b.is_zero()) throw ParseError("division by zero");
        return a / b;
    }
    RatFun pow(const RatFun& a, int k) const {
        if (k < 0 && a.is_zero()) throw ParseError("division by zero");
        return a.pow(k);
    }
};

struct SeriesRing {
    int nvars;
    int order;
    QSeries integer(const std::string& digits) const {
        return QSeries::constant(order, RatFun(Rational::parse(digits)));
    }
    QSeries var(int v) const { return QSeries::constant(order, RatFun::variable(nvars, v)); }
    QSeries q() const { return QSeries::q_power(order, 1); }
    QSeries div(const QSeries& a, const QSeries& b) const {
        if (b[0].is_zero()) throw ParseError("divisor has zero constant term in q");
        return a * b.inverse();
    }
    QSeries pow(const QSeries& a, int k) const {
        QSeries base = a;
        if (k < 0) {
            if (a[0].is_zero()) throw ParseError("negative power of a series without constant term");
            base = a.inverse();
            k = -k;
        }
        QSeries r = QSeries::constant(order, RatFun(1));
        for (int i = 0; i < k; ++i) r = r * base;
        return r;
    }
};

template <typename Ring>
class Parser {
public:
    using Value = decltype(std::declval<Ring>().var(0));
    Parser(const std::vector<Token>& toks, const Ring& ring) : toks_(toks), ring_(ring) {}

    Value parse_all() {
        Value v = expr();
        if (peek().kind != Token::End) fail("unexpected token '" + peek().text + "'");
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool is_op(char c) const { return peek().kind == Token::Op && peek().text[0] == c; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(peek().pos));
    }
    void expect(char c) {
        if (!is_op(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Value expr() {
        Value v = term();
        while (is_op('+') || is_op('-')) {
            bool plus = is_op('+');
            ++pos_;
            Value r = term();
            v = plus ? v + r : v - r;
        }
        return v;
    }

    Value term() {
        Value v = unary();
        while (is_op('*') || is_op('/')) {
            bool mul = is_op('*');
            ++pos_;
            Value r = unary();
            v = mul ? v * r : ring_.div(v, r);
        }
        return v;
    }

    Value unary() {
        if (is_op('-')) {
            ++pos_;
            return -unary();
        }
        if (is_op('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    int exponent() {
        bool paren = false;
        if (is_op('(')) {
            paren = true;
            ++pos_;
        }
        int sign = 1;
        if (is_op('-')) {
            sign = -1;
            ++pos_;
        } else if (is_op('+')) {
            ++pos_;
        }
        if (peek().kind != Token::Int) fail("expected integer exponent");
        if (peek().text.size() > 6) fail("exponent too large");
        int k = sign * std::stoi(peek().text);
        ++pos_;
        if (paren) expect(')');
        return k;
    }

    Value power() {
        Value base = atom();
        if (is_op('^')) {
            ++pos_;
            return ring_.pow(base, exponent());
        }
        return base;
    }

    Value atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Int: ++pos_; return ring_.integer(t.text);
            case Token::Var: ++pos_; return ring_.var(t.var);
            case Token::Q: ++pos_; return ring_.q();
            case Token::Op:
                if (t.text[0] == '(') {
                    ++pos_;
                    Value v = expr();
                    expect(')');
                    return v;
                }
                fail("unexpected operator '" + t.text + "'");
            case Token::End: fail("unexpected end of input");
        }
        fail("unreachable");
    }

    const std::vector<Token>& toks_;
    const Ring& ring_;
    size_t pos_ = 0;
};

int resolve_nvars(const std::vector<Token>& toks, int nvars) {
    int used = 0;
    for (const auto& t : toks)
        if (t.kind == Token::Var) used = std::max(used, t.var + 1);
    if (nvars < 0) return used;
    if (used > nvars) throw ParseError("variable t" + std::to_string(used) + " exceeds declared count");
    return nvars;
}

}  // namespace

RatFun parse_ratfun(std::string_view text, int nvars) {
    auto toks = tokenize(text);
    RatFunRing ring{resolve_nvars(toks, nvars)};
    return Parser<RatFunRing>(toks, ring).parse_all();
}

QSeries parse_series(std::string_view text, int order, int nvars) {
    if (order < 0) throw ParseError("negative truncation order");
    auto toks = tokenize(text);
    SeriesRing ring{resolve_nvars(toks, nvars), order};
    return Parser<SeriesRing>(toks, ring).parse_all();
}

}  // namespace pleth
