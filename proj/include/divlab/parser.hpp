#pragma once

#include "divlab/domain.hpp"

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace divlab {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, std::string expected)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": expected " +
                             expected),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

namespace detail {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const std::string& what) {
        if (!accept(c)) throw ParseError(pos_, what);
    }
    std::size_t pos() {
        skip_ws();
        return pos_;
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(start, "a digit");
        return text_.substr(start, pos_ - start);
    }

    BigInt integer() {
        skip_ws();
        bool neg = accept('-');
        if (!neg) accept('+');
        BigInt v(digits());
        return neg ? -v : v;
    }

    Rational rational() {
        BigInt num = integer();
        if (accept('/')) {
            std::size_t dpos = pos();
            BigInt den(digits());
            if (den == 0) throw ParseError(dpos, "a nonzero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    std::uint32_t index() {
        std::size_t start = pos();
        BigInt v(digits());
        if (v < 1 || v > 1000000000) throw ParseError(start, "an index in [1, 10^9]");
        return static_cast<std::uint32_t>(v);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

// exponent := '^' ( '(' rational ')' | integer ), defaulting to 1
inline Rational parse_exponent(Cursor& c) {
    if (!c.accept('^')) return Rational(1);
    if (c.accept('(')) {
        Rational e = c.rational();
        c.expect(')', "')' closing the exponent");
        return e;
    }
    return Rational(c.integer());
}

// monomial := factor ('*' factor)*   factor := '0' | '1' | X|Y|Z|U|T[i] exponent?
// Returns false when a literal 0 annihilated the monomial.
inline bool parse_monomial(Cursor& c, ExpVec& out) {
    Rational x = 0, y = 0, z = 0, u = 0;
    ExpVec::DevMap dev;
    bool zero = false;
    std::size_t start = c.pos();
    do {
        std::size_t fpos = c.pos();
        char head = c.peek();
        if (head == '0' && c.accept('0')) {
            zero = true;
        } else if (head == '1' && c.accept('1')) {
            // multiplicative identity contributes nothing
        } else if (c.accept('X')) {
            x += parse_exponent(c);
        } else if (c.accept('Y')) {
            y += parse_exponent(c);
        } else if (c.accept('Z')) {
            z += parse_exponent(c);
        } else if (c.accept('U')) {
            u += parse_exponent(c);
        } else if (c.accept('T')) {
            c.expect('[', "'[' after T");
            std::uint32_t i = c.index();
            c.expect(']', "']' after the index");
            dev[i] += parse_exponent(c);
        } else {
            throw ParseError(fpos, "a factor (0, 1, X, Y, Z, U or T[i])");
        }
    } while (c.accept('*'));
    if (zero) return false;
    try {
        out = ExpVec::make(x, y, z, u, dev);
    } catch (const std::invalid_argument& e) {
        throw ParseError(start, std::string("a valid monomial (") + e.what() + ")");
    }
    return true;
}

inline AlgElem parse_alg(Cursor& c) {
    std::vector<ExpVec> monos;
    do {
        ExpVec m;
        if (parse_monomial(c, m)) monos.push_back(m);
    } while (c.accept('+'));
    return AlgElem::from_monomials(std::move(monos));
}

// quadint := int | int? sign int 'i5' | int 'i5'
inline QuadInt parse_quadint(Cursor& c) {
    BigInt first = c.integer();
    if (c.accept('i')) {
        c.expect('5', "'5' after i");
        return {0, first};
    }
    char sign = c.peek();
    if (sign != '+' && sign != '-') return {first, 0};
    c.accept(sign);
    BigInt b(c.digits());
    c.expect('i', "'i5' after the second coefficient");
    c.expect('5', "'5' after i");
    return {first, sign == '-' ? -b : b};
}

// simple := rational ['r2']
inline QuadRat parse_quadrat_simple(Cursor& c) {
    Rational v = c.rational();
    if (c.accept('r')) {
        c.expect('2', "'2' after r");
        return QuadRat{0, v};
    }
    return QuadRat{v};
}

// quadrat := simple (('+'|'-') simple)*
inline QuadRat parse_quadrat(Cursor& c) {
    QuadRat acc = parse_quadrat_simple(c);
    for (;;) {
        if (c.accept('+')) {
            acc = acc + parse_quadrat_simple(c);
        } else if (c.peek() == '-') {
            // leave the sign for the next simple's integer parse
            acc = acc + parse_quadrat_simple(c);
        } else {
            return acc;
        }
    }
}

// kpoly := term (('+'|'-') term)*   term := coeff ['*' xpart] | xpart
// coeff := '(' quadrat ')' | simple    xpart := 'x' ['^' uint]
inline KPoly parse_kpoly(Cursor& c) {
    auto xpart = [&](const QuadRat& coeff) {
        int k = 1;
        if (c.accept('^')) {
            std::size_t ppos = c.pos();
            BigInt v(c.digits());
            if (v < 0 || v > 64) throw ParseError(ppos, "a degree in [0, 64]");
            k = static_cast<int>(v);
        }
        std::vector<QuadRat> cs(static_cast<std::size_t>(k) + 1, QuadRat{0});
        cs.back() = coeff;
        return KPoly::from_coeffs(cs);
    };
    auto term = [&]() -> KPoly {
        if (c.accept('x')) return xpart(QuadRat{1});
        QuadRat coeff;
        if (c.accept('(')) {
            coeff = parse_quadrat(c);
            c.expect(')', "')' closing the coefficient");
        } else {
            coeff = parse_quadrat_simple(c);
        }
        if (c.accept('*')) {
            std::size_t xpos = c.pos();
            if (!c.accept('x')) throw ParseError(xpos, "'x' after '*'");
            return xpart(coeff);
        }
        return KPoly::constant(coeff);
    };
    KPoly acc = term();
    for (;;) {
        if (c.accept('+')) {
            acc = acc + term();
        } else if (c.peek() == '-') {
            acc = acc + term();  // the sign travels with the coefficient
        } else {
            return acc;
        }
    }
}

}  // namespace detail

/// Parses the canonical element syntax of the given domain.  Inverse of
/// print_expr.  Throws ParseError with position and expectation on failure.
inline DomainElem parse_expr(const std::string& text, DomainId id) {
    detail::Cursor c(text);
    DomainElem out = [&] {
        switch (id) {
            case DomainId::R0: return DomainElem::r0(detail::parse_alg(c));
            case DomainId::R: {
                AlgElem f = detail::parse_alg(c);
                for (const auto& m : f.monomials()) {
                    auto q = in_QR(m);
                    if (!q.in_Q())
                        throw ParseError(0, "an element of the subring (" + q.explanation + ")");
                }
                return DomainElem::r(f);
            }
            case DomainId::Z: return DomainElem::z(c.integer());
            case DomainId::Z5: return DomainElem::z5(detail::parse_quadint(c));
            case DomainId::DK: {
                std::size_t start = c.pos();
                auto e = DKElem::make(detail::parse_kpoly(c));
                if (!e)
                    throw ParseError(start, "a polynomial whose constant term is a rational integer");
                return DomainElem::dk(*e);
            }
        }
        throw std::logic_error("unhandled domain");
    }();
    if (!c.at_end()) throw ParseError(c.pos(), "end of input");
    return out;
}

inline std::string print_expr(const DomainElem& e) { return to_string(e); }

}  // namespace divlab
