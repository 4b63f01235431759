#pragma once

#include "divlab/rational.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace divlab {

/// Element a + b*sqrt(-5) of the quadratic integer ring Z[sqrt(-5)].
/// Norm form a^2 + 5*b^2; units are exactly +1 and -1.
struct QuadInt {
    BigInt a{0}, b{0};

    QuadInt() = default;
    QuadInt(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}

    BigInt norm() const { return a * a + 5 * b * b; }
    QuadInt conj() const { return {a, -b}; }
    bool is_zero() const { return a == 0 && b == 0; }
    bool is_unit() const { return b == 0 && (a == 1 || a == -1); }

    friend QuadInt operator+(const QuadInt& x, const QuadInt& y) { return {x.a + y.a, x.b + y.b}; }
    friend QuadInt operator-(const QuadInt& x, const QuadInt& y) { return {x.a - y.a, x.b - y.b}; }
    friend QuadInt operator-(const QuadInt& x) { return {-x.a, -x.b}; }
    friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
        return {x.a * y.a - 5 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const QuadInt& x, const QuadInt& y) = default;
};

/// Quotient x/d when d divides x in Z[sqrt(-5)], else nullopt.  d != 0.
/// Uses x * conj(d) / norm(d): both rational coordinates must be integral.
inline std::optional<QuadInt> quadint_divides(const QuadInt& d, const QuadInt& x) {
    if (d.is_zero()) throw std::invalid_argument("quadint_divides: division by zero");
    QuadInt num = x * d.conj();
    BigInt n = d.norm();
    if (num.a % n != 0 || num.b % n != 0) return std::nullopt;
    return QuadInt{num.a / n, num.b / n};
}

/// All divisors of a nonzero element, one representative per associate pair
/// {d, -d}, sorted by (norm, a, b).  Found by solving a'^2 + 5 b'^2 = m for
/// every divisor m of norm(a) and keeping actual divisors.
inline std::vector<QuadInt> quadint_divisors(const QuadInt& v) {
    if (v.is_zero()) throw std::invalid_argument("quadint_divisors: zero input");
    std::vector<QuadInt> out;
    for (const BigInt& m : detail::divisors(v.norm())) {
        for (BigInt b = 0; 5 * b * b <= m; ++b) {
            BigInt a2 = m - 5 * b * b;
            auto a = exact_sqrt(a2);
            if (!a) continue;
            std::vector<QuadInt> cands;
            if (*a == 0 && b == 0)
                continue;
            else if (b == 0)
                cands.push_back(QuadInt{*a, 0});
            else if (*a == 0)
                cands.push_back(QuadInt{0, b});
            else {
                cands.push_back(QuadInt{*a, b});
                cands.push_back(QuadInt{*a, -b});
            }
            for (const auto& c : cands)
                if (quadint_divides(c, v)) out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end(), [](const QuadInt& x, const QuadInt& y) {
        return std::tuple(x.norm(), x.a, x.b) < std::tuple(y.norm(), y.a, y.b);
    });
    return out;
}

inline std::string to_string(const QuadInt& v) {
    if (v.b == 0) return v.a.str();
    if (v.a == 0) return v.b.str() + "i5";
    return v.a.str() + (v.b > 0 ? "+" : "-") + BigInt(abs(v.b)).str() + "i5";
}

/// Element p + q*sqrt(2) of the real quadratic field Q(sqrt(2)).
struct QuadRat {
    Rational p{0}, q{0};

    QuadRat() = default;
    QuadRat(Rational p_, Rational q_ = 0) : p(std::move(p_)), q(std::move(q_)) {}
    QuadRat(int n) : p(n) {}

    bool is_zero() const { return p == 0 && q == 0; }
    bool is_rational() const { return q == 0; }
    Rational norm() const { return p * p - 2 * q * q; }  // nonzero unless p=q=0
    QuadRat conj() const { return {p, -q}; }

    friend QuadRat operator+(const QuadRat& x, const QuadRat& y) { return {x.p + y.p, x.q + y.q}; }
    friend QuadRat operator-(const QuadRat& x, const QuadRat& y) { return {x.p - y.p, x.q - y.q}; }
    friend QuadRat operator-(const QuadRat& x) { return {-x.p, -x.q}; }
    friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
        return {x.p * y.p + 2 * x.q * y.q, x.p * y.q + x.q * y.p};
    }
    friend bool operator==(const QuadRat& x, const QuadRat& y) = default;

    QuadRat inverse() const {
        if (is_zero()) throw std::invalid_argument("QuadRat: inverse of zero");
        Rational n = norm();  // p^2 - 2q^2 = 0 with rationals forces p = q = 0
        return {p / n, -q / n};
    }
    friend QuadRat operator/(const QuadRat& x, const QuadRat& y) { return x * y.inverse(); }
};

/// Exact square root in Q(sqrt(2)) if one exists.  (s + t*sqrt(2))^2 has
/// sqrt(2)-coordinate 2st, so a rational square stems from s=0 or t=0; in
/// the mixed case solve s^2 + 2t^2 = p, 2st = q exactly.
inline std::optional<QuadRat> sqrt_in_K(const QuadRat& d) {
    if (d.is_zero()) return QuadRat{};
    if (d.q == 0) {
        if (auto s = exact_sqrt(d.p)) return QuadRat{*s, 0};
        if (auto t = exact_sqrt(d.p / 2)) return QuadRat{0, *t};
        return std::nullopt;
    }
    auto r = exact_sqrt(d.norm());
    if (!r) return std::nullopt;
    for (int sign : {1, -1}) {
        Rational s2 = (d.p + *r * sign) / 2;
        auto s = exact_sqrt(s2);
        if (!s || *s == 0) continue;
        QuadRat root{*s, d.q / (2 * *s)};
        if (root * root == d) return root;
    }
    return std::nullopt;
}

inline std::string to_string(const QuadRat& v) {
    if (v.q == 0) return to_string(v.p);
    std::string qpart = to_string(abs(v.q)) + "r2";
    if (v.p == 0) return (v.q < 0 ? "-" : "") + qpart;
    return to_string(v.p) + (v.q < 0 ? "-" : "+") + qpart;
}

}  // namespace divlab
