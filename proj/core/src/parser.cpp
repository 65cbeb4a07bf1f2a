#include "flagchern/parser.hpp"

#include <cctype>
#include <string>

#include "flagchern/errors.hpp"

namespace flagchern {
namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SymPolyExpr run() {
        SymPolyExpr e = expr();
        skip_ws();
        if (pos_ < text_.size()) throw ParseError(pos_, "unexpected trailing input");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // expr := ['+'|'-'] term (('+'|'-') term)*
    SymPolyExpr expr() {
        SymPolyExpr sum;
        bool negate = false;
        if (eat('-')) {
            negate = true;
        } else {
            eat('+');
        }
        sum = term();
        if (negate) sum = SymPolyExpr() - sum;
        for (;;) {
            if (eat('+')) {
                sum += term();
            } else if (eat('-')) {
                sum -= term();
            } else {
                return sum;
            }
        }
    }

    // term := factor ('*' factor)*
    SymPolyExpr term() {
        SymPolyExpr product = factor();
        while (eat('*')) product = product * factor();
        return product;
    }

    // factor := number | generator ('^' posint)? | '(' expr ')'
    SymPolyExpr factor() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            SymPolyExpr inner = expr();
            if (!eat(')')) throw ParseError(pos_, "expected ')'");
            return inner;
        }
        if (c == 'e' || c == 'p') {
            const std::size_t gen_pos = pos_;
            ++pos_;
            unsigned index = posint("generator index");
            if (index == 0) throw ZeroGeneratorIndex(gen_pos, "generator indices start at 1");
            SymPolyExpr g = SymPolyExpr::generator(
                c == 'e' ? GenKind::Elementary : GenKind::PowerSum, index);
            if (eat('^')) {
                unsigned exp = posint("exponent");
                if (exp == 0) throw ParseError(pos_, "exponent must be >= 1");
                g = g.pow(exp);
            }
            return g;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer();
            if (eat('/')) {
                const std::size_t den_pos = pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                    throw ParseError(den_pos, "expected denominator");
                }
                Integer den = integer();
                if (den == 0) throw ParseError(den_pos, "zero denominator");
                return SymPolyExpr::constant(make_rational(num, den));
            }
            return SymPolyExpr::constant(Rational(num));
        }
        throw ParseError(pos_, "expected number, generator, or '('");
    }

    // Digit run as an arbitrary-precision integer.
    Integer integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) throw ParseError(start, "expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    // Digit run that must fit in unsigned (indices and exponents are small).
    unsigned posint(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        unsigned long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (value > 1'000'000) throw ParseError(start, std::string(what) + " out of range");
            ++pos_;
        }
        if (pos_ == start) throw ParseError(start, std::string("expected ") + what);
        return static_cast<unsigned>(value);
    }
};

}  // namespace

SymPolyExpr parse_expr(std::string_view text) { return Parser(text).run(); }

}  // namespace flagchern
