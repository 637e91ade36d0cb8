#include "asymih/parse.hpp"

#include <algorithm>
#include <cctype>

namespace asymih {
namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        Poly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            Integer e = digits();
            if (!e.fits_uint_p() || e > 10000) {
                pos_ = start;
                fail("exponent too large");
            }
            return b.pow(static_cast<unsigned>(e.get_ui()));
        }
        return b;
    }

    Integer digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a natural number");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Poly base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = digits();
            Rational q(num);
            std::size_t save = pos_;
            if (accept('/')) {
                skip_ws();
                std::size_t den_pos = pos_;
                Integer den = digits();
                if (sgn(den) == 0) {
                    pos_ = den_pos;
                    fail("zero denominator");
                }
                q = Rational(num, den);
                q.canonicalize();
            } else {
                pos_ = save;
            }
            return Poly::constant(vars_, GaussRat(q));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string name(text_.substr(start, pos_ - start));
            if (name == "i") return Poly::constant(vars_, GaussRat::i());
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Poly::variable(vars_, name);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
    return Parser(text, vars).parse();
}

GaussRat parse_constant(std::string_view text) {
    Poly p = parse_poly(text, {});
    return p.constant_term();
}

}  // namespace asymih
