#include "qk/element_io.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include <json.hpp>

#include "qk/errors.hpp"

namespace qk {

namespace {

enum class Tok { Integer, ZVar, Q1, Q2, Index, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    long long value = 0; // Integer value or z subscript
    int i = 0, j = 0;    // Index entries
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token out = current_;
        advance();
        return out;
    }

    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, current_.pos); }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_;

    long long lex_integer() {
        std::size_t start = pos_;
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000'000'000'000'000LL)
                throw parse_error("integer literal too large", start);
            ++pos_;
        }
        return value;
    }

    long long lex_signed_integer() {
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected integer", pos_);
        long long value = lex_integer();
        return negative ? -value : value;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void advance() {
        skip_ws();
        current_.pos = pos_;
        if (pos_ >= text_.size()) {
            current_.kind = Tok::End;
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            current_.kind = Tok::Integer;
            current_.value = lex_integer();
            return;
        }
        switch (c) {
            case '+': current_.kind = Tok::Plus; ++pos_; return;
            case '-': current_.kind = Tok::Minus; ++pos_; return;
            case '*': current_.kind = Tok::Star; ++pos_; return;
            case '^': current_.kind = Tok::Caret; ++pos_; return;
            case '(': current_.kind = Tok::LParen; ++pos_; return;
            case ')': current_.kind = Tok::RParen; ++pos_; return;
            default: break;
        }
        if (c == 'z' || c == 'q') {
            std::size_t start = pos_;
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw parse_error("expected variable subscript", start);
            long long sub = lex_integer();
            if (c == 'z') {
                current_.kind = Tok::ZVar;
                current_.value = sub;
            } else if (sub == 1) {
                current_.kind = Tok::Q1;
            } else if (sub == 2) {
                current_.kind = Tok::Q2;
            } else {
                throw parse_error("quantum parameter must be q1 or q2", start);
            }
            return;
        }
        if (c == 'O' || c == '[') {
            std::size_t start = pos_;
            if (c == 'O') {
                ++pos_;
                if (pos_ >= text_.size() || text_[pos_] != '[')
                    throw parse_error("expected '[' after O", pos_);
            }
            ++pos_; // '['
            skip_ws();
            long long i = lex_signed_integer();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ',')
                throw parse_error("expected ',' in index literal", pos_);
            ++pos_;
            skip_ws();
            long long j = lex_signed_integer();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ']')
                throw parse_error("expected ']' in index literal", pos_);
            ++pos_;
            current_.kind = Tok::Index;
            current_.i = static_cast<int>(i);
            current_.j = static_cast<int>(j);
            current_.pos = start;
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }
};

class ElementParser {
public:
    ElementParser(const std::string& text, int n) : lex_(text), n_(n) {
        if (n < 3) throw std::invalid_argument("rank parameter must be at least 3");
    }

    QkElement parse() {
        QkElement out(n_);
        bool negative = consume_sign(true);
        parse_term(out, negative);
        while (lex_.peek().kind != Tok::End) {
            negative = consume_sign(false);
            parse_term(out, negative);
        }
        return out;
    }

    TildeIndex parse_bare_index() {
        if (lex_.peek().kind != Tok::Index) lex_.fail("expected index literal");
        Token t = lex_.take();
        TildeIndex w = make_index(t);
        if (lex_.peek().kind != Tok::End) lex_.fail("trailing input after index literal");
        return w;
    }

private:
    Lexer lex_;
    int n_;
    int paren_depth_ = 0;

    bool consume_sign(bool leading) {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            return true;
        }
        if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
            return false;
        }
        if (!leading) lex_.fail("expected '+' or '-' between terms");
        return false;
    }

    TildeIndex make_index(const Token& t) {
        if ((t.i - t.j) % n_ == 0)
            throw parse_error("index entries congruent mod n", t.pos);
        return {t.i, t.j, n_};
    }

    bool starts_scalar_atom(Tok k) const {
        return k == Tok::Integer || k == Tok::ZVar || k == Tok::LParen;
    }

    long long parse_exponent() {
        lex_.take(); // '^'
        bool negative = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negative = true;
        }
        if (lex_.peek().kind != Tok::Integer) lex_.fail("expected exponent");
        long long e = lex_.take().value;
        return negative ? -e : e;
    }

    // Scalar coefficient expressions: + - * ^ and parentheses over integers
    // and the z variables.
    Laurent parse_scalar_expr() {
        bool negative = consume_sign(true);
        Laurent out = parse_scalar_product();
        if (negative) out = -out;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            Laurent rhs = parse_scalar_product();
            out = minus ? out - rhs : out + rhs;
        }
        return out;
    }

    Laurent parse_scalar_product() {
        Laurent out = parse_scalar_power();
        while (true) {
            if (lex_.peek().kind == Tok::Star) {
                lex_.take();
                out = out * parse_scalar_power();
            } else if (starts_scalar_atom(lex_.peek().kind)) {
                out = out * parse_scalar_power();
            } else {
                return out;
            }
        }
    }

    Laurent parse_scalar_power() {
        Laurent base = parse_scalar_atom();
        if (lex_.peek().kind != Tok::Caret) return base;
        std::size_t pos = lex_.peek().pos;
        long long e = parse_exponent();
        if (e > 60 || e < -60) throw parse_error("exponent out of supported range", pos);
        if (e < 0) {
            // Only single Laurent monomials with unit coefficient invert.
            if (!base.is_single_term() || !(base.terms()[0].second == BigInt(1)))
                throw parse_error("negative power of a non-monomial", pos);
            Monomial inv(base.vars());
            for (int r = 1; r <= base.vars(); ++r)
                inv.set_exponent(r, -base.terms()[0].first.exponent(r));
            base = Laurent::monomial(inv, BigInt(1));
            e = -e;
        }
        Laurent out = Laurent::constant(n_ - 1, BigInt(1));
        for (long long k = 0; k < e; ++k) out = out * base;
        return out;
    }

    Laurent parse_scalar_atom() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::Integer)
            return Laurent::constant(n_ - 1, BigInt(lex_.take().value));
        if (t.kind == Tok::ZVar) {
            Token v = lex_.take();
            if (v.value < 1 || v.value >= n_)
                throw parse_error("variable subscript out of 1..n-1", v.pos);
            return Laurent::variable(n_ - 1, static_cast<int>(v.value));
        }
        if (t.kind == Tok::LParen) {
            if (++paren_depth_ > 64) lex_.fail("coefficient nesting too deep");
            lex_.take();
            Laurent inner = parse_scalar_expr();
            if (lex_.peek().kind != Tok::RParen) lex_.fail("expected ')'");
            lex_.take();
            --paren_depth_;
            return inner;
        }
        lex_.fail("expected coefficient");
    }

    void parse_term(QkElement& out, bool negative) {
        Laurent coeff = Laurent::constant(n_ - 1, BigInt(1));
        Degree shift{0, 0};
        std::optional<TildeIndex> index;

        bool expect_factor = true;
        while (expect_factor) {
            const Token& t = lex_.peek();
            if (starts_scalar_atom(t.kind)) {
                coeff = coeff * parse_scalar_power();
            } else if (t.kind == Tok::Q1 || t.kind == Tok::Q2) {
                bool is_q1 = t.kind == Tok::Q1;
                lex_.take();
                long long e = 1;
                if (lex_.peek().kind == Tok::Caret) e = parse_exponent();
                (is_q1 ? shift.d1 : shift.d2) += static_cast<int>(e);
            } else if (t.kind == Tok::Index) {
                if (index) lex_.fail("more than one index literal in a term");
                Token tok = lex_.take();
                index = make_index(tok);
            } else {
                lex_.fail("expected a term factor");
            }
            if (lex_.peek().kind == Tok::Star) {
                lex_.take();
                continue;
            }
            expect_factor = lex_.peek().kind != Tok::Plus && lex_.peek().kind != Tok::Minus &&
                            lex_.peek().kind != Tok::End;
        }
        if (!index) lex_.fail("term is missing an index literal O[i,j]");
        if (negative) coeff = -coeff;
        out.add(q_shift(*index, shift), coeff);
    }
};

std::string q_prefix(Degree d) {
    std::string out;
    auto piece = [&](const char* name, int e) {
        if (e == 0) return;
        out += name;
        if (e != 1) out += "^" + std::to_string(e);
        out += "*";
    };
    piece("q1", d.d1);
    piece("q2", d.d2);
    return out;
}

} // namespace

QkElement parse_element(const std::string& text, int n) {
    return ElementParser(text, n).parse();
}

TildeIndex parse_index(const std::string& text, int n) {
    return ElementParser(text, n).parse_bare_index();
}

std::string print_element(const QkElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : e.terms()) {
        std::string coeff;
        bool negative = false;
        if (c.is_single_term()) {
            negative = c.terms()[0].second.signum() < 0;
            Laurent abs = negative ? -c : c;
            if (!abs.is_one()) coeff = abs.str() + "*";
        } else {
            coeff = "(" + c.str() + ")*";
        }
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        out += coeff + q_prefix(key.degree()) + "O[" + std::to_string(key.bi) + "," +
               std::to_string(key.bj) + "]";
    }
    return out;
}

std::string element_json(const QkElement& e) {
    nlohmann::ordered_json root;
    root["n"] = e.n();
    root["terms"] = nlohmann::ordered_json::array();
    for (const auto& [key, c] : e.terms()) {
        nlohmann::ordered_json term;
        term["i"] = key.bi + e.n() * key.d1;
        term["j"] = key.bj - e.n() * key.d2;
        term["bar"] = {key.bi, key.bj};
        term["degree"] = {key.d1, key.d2};
        term["coeff"] = nlohmann::ordered_json::array();
        for (const auto& [m, v] : c.terms()) {
            nlohmann::ordered_json mono;
            mono["exp"] = nlohmann::ordered_json::array();
            for (int r = 1; r <= c.vars(); ++r) mono["exp"].push_back(m.exponent(r));
            mono["c"] = v.to_decimal();
            term["coeff"].push_back(mono);
        }
        root["terms"].push_back(term);
    }
    return root.dump();
}

} // namespace qk
