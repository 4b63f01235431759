#pragma once

#include "divlab/quadratic.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace divlab {

namespace detail {

// --- dense univariate polynomials over Q, ascending coefficients ---------

using QPoly = std::vector<Rational>;  // empty vector encodes the zero poly

inline void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int qp_degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    qp_trim(r);
    return r;
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

inline QPoly qp_scale(const QPoly& a, const Rational& c) {
    if (c == 0) return {};
    QPoly r = a;
    for (auto& v : r) v *= c;
    return r;
}

inline Rational qp_eval(const QPoly& p, const Rational& s) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * s + *it;
    return acc;
}

/// All rational roots, found by the rational root theorem on the
/// denominator-cleared, content-free integer polynomial.
inline std::vector<Rational> rational_roots(const QPoly& poly) {
    if (poly.empty()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    std::size_t k = 0;
    while (poly[k] == 0) ++k;
    if (k > 0) roots.push_back(0);
    QPoly p(poly.begin() + k, poly.end());
    if (qp_degree(p) == 0) return roots;
    BigInt L = 1;
    for (const auto& c : p) L = L / gcd(L, denominator(c)) * denominator(c);
    std::vector<BigInt> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = numerator(p[i]) * (L / denominator(p[i]));
    BigInt content = 0;
    for (const auto& v : c) content = gcd(content, v);
    for (auto& v : c) v /= content;
    // p(1) and p(-1): a root n/d in lowest terms forces (n - d) | p(1) and
    // (n + d) | p(-1), which screens out almost every divisor pair.
    BigInt at_one = 0, at_minus_one = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        at_one += c[i];
        at_minus_one += (i % 2 == 0) ? c[i] : -c[i];
    }
    // Homogeneous integer Horner: p(n/d) * d^deg.
    auto eval_scaled = [&](const BigInt& n, const BigInt& d) {
        BigInt acc = c.back(), dp = 1;
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            dp *= d;
            acc = acc * n + c[i] * dp;
        }
        return acc;
    };
    for (const BigInt& num : divisors(c.front())) {
        for (const BigInt& den : divisors(c.back())) {
            if (gcd(num, den) != 1) continue;
            for (int sign : {1, -1}) {
                BigInt n = sign > 0 ? num : BigInt(-num);
                if (at_one != 0 && n != den && at_one % (n - den) != 0) continue;
                if (at_minus_one != 0 && n != -den && at_minus_one % (n + den) != 0) continue;
                if (eval_scaled(n, den) == 0) roots.push_back(Rational(n, den));
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// --- bivariate layer: Q[s][t], used to split f(s + t*sqrt(2)) -------------

using Biv = std::vector<QPoly>;  // index = power of t, entries in Q[s]

inline void biv_trim(Biv& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

inline Biv biv_add(const Biv& a, const Biv& b) {
    Biv r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        QPoly s;
        if (i < a.size()) s = a[i];
        if (i < b.size()) s = qp_add(s, b[i]);
        r[i] = std::move(s);
    }
    biv_trim(r);
    return r;
}

inline Biv biv_mul(const Biv& a, const Biv& b) {
    if (a.empty() || b.empty()) return {};
    Biv r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = qp_add(r[i + j], qp_mul(a[i], b[j]));
    biv_trim(r);
    return r;
}

inline Biv biv_scale2(const Biv& a) {
    Biv r = a;
    for (auto& q : r) q = qp_scale(q, 2);
    return r;
}

/// Value A + sqrt(2)*B with A, B in Q[s][t].
struct SplitVal {
    Biv rat, irr;

    friend SplitVal operator+(const SplitVal& x, const SplitVal& y) {
        return {biv_add(x.rat, y.rat), biv_add(x.irr, y.irr)};
    }
    friend SplitVal operator*(const SplitVal& x, const SplitVal& y) {
        return {biv_add(biv_mul(x.rat, y.rat), biv_scale2(biv_mul(x.irr, y.irr))),
                biv_add(biv_mul(x.rat, y.irr), biv_mul(x.irr, y.rat))};
    }
};

/// Determinant of a small matrix over Q[s] by cofactor expansion.
inline QPoly qp_det(const std::vector<std::vector<QPoly>>& m, std::vector<bool>& used,
                    std::size_t col) {
    const std::size_t n = m.size();
    if (col == n) return QPoly{Rational(1)};
    QPoly acc;
    int parity = 0;
    for (std::size_t r = 0; r < n; ++r) {
        if (used[r]) continue;
        if (!m[r][col].empty()) {
            used[r] = true;
            QPoly minor = qp_det(m, used, col + 1);
            used[r] = false;
            QPoly term = qp_mul(m[r][col], minor);
            if (parity % 2) term = qp_scale(term, -1);
            acc = qp_add(acc, term);
        }
        ++parity;
    }
    return acc;
}

/// Sylvester resultant with respect to t of two polynomials in Q[s][t],
/// both of positive degree in t.
inline QPoly resultant_t(const Biv& A, const Biv& B) {
    const std::size_t m = A.size() - 1, n = B.size() - 1;
    if (m == 0 || n == 0) throw std::invalid_argument("resultant_t: degree in t must be positive");
    const std::size_t size = m + n;
    std::vector<std::vector<QPoly>> mat(size, std::vector<QPoly>(size));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) mat[i][i + j] = A[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) mat[n + i][i + j] = B[n - j];
    std::vector<bool> used(size, false);
    return qp_det(mat, used, 0);
}

}  // namespace detail

/// Polynomial over K = Q(sqrt(2)), dense ascending coefficients.
class KPoly {
public:
    KPoly() = default;  // zero

    static KPoly from_coeffs(std::vector<QuadRat> c) {
        KPoly f;
        f.c_ = std::move(c);
        f.trim();
        return f;
    }
    static KPoly constant(QuadRat v) { return from_coeffs({std::move(v)}); }
    static KPoly x() { return from_coeffs({QuadRat{0}, QuadRat{1}}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_unit() const { return degree() == 0; }  // K[x] units are nonzero constants

    QuadRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : QuadRat{}; }
    const QuadRat& lc() const {
        if (c_.empty()) throw std::invalid_argument("lc of zero polynomial");
        return c_.back();
    }
    /// Order at zero: index of the lowest nonzero coefficient.
    std::size_t ord() const {
        if (c_.empty()) throw std::invalid_argument("ord of zero polynomial");
        std::size_t k = 0;
        while (c_[k].is_zero()) ++k;
        return k;
    }

    QuadRat eval(const QuadRat& v) const {
        QuadRat acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    friend KPoly operator+(const KPoly& a, const KPoly& b) {
        std::vector<QuadRat> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return from_coeffs(std::move(r));
    }
    friend KPoly operator-(const KPoly& a, const KPoly& b) {
        std::vector<QuadRat> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return from_coeffs(std::move(r));
    }
    friend KPoly operator*(const KPoly& a, const KPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<QuadRat> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return from_coeffs(std::move(r));
    }
    friend KPoly operator*(const QuadRat& c, const KPoly& a) {
        std::vector<QuadRat> r = a.c_;
        for (auto& v : r) v = c * v;
        return from_coeffs(std::move(r));
    }
    friend bool operator==(const KPoly& a, const KPoly& b) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<QuadRat> c_;
};

/// Euclidean division in K[x]: returns (quotient, remainder) with
/// deg(remainder) < deg(f).  f must be nonzero.
inline std::pair<KPoly, KPoly> kpoly_divmod(const KPoly& g, const KPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("kpoly_divmod: division by zero");
    KPoly q, r = g;
    QuadRat inv_lc = f.lc().inverse();
    while (!r.is_zero() && r.degree() >= f.degree()) {
        std::size_t shift = r.degree() - f.degree();
        QuadRat factor = r.lc() * inv_lc;
        std::vector<QuadRat> term(shift + 1);
        term[shift] = factor;
        KPoly t = KPoly::from_coeffs(std::move(term));
        q = q + t;
        r = r - t * f;
    }
    return {q, r};
}

inline KPoly kpoly_monic(const KPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("kpoly_monic: zero polynomial");
    return f.lc().inverse() * f;
}

/// All roots of f in K = Q(sqrt(2)), exact.  Supported for 1 <= deg <= 3.
/// Degrees one and two are solved in closed form; for cubics the candidate
/// abscissae come from eliminating t in the rational/irrational coordinate
/// split of f(s + t*sqrt(2)), and every candidate is verified by evaluation.
inline std::vector<QuadRat> roots_in_K(const KPoly& f) {
    const int n = f.degree();
    if (n < 1 || n > 3) throw std::invalid_argument("roots_in_K: degree must be 1, 2 or 3");
    if (n == 1) return {QuadRat{} - f.coeff(0) / f.coeff(1)};
    if (n == 2) {
        QuadRat a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
        auto s = sqrt_in_K(b * b - QuadRat{4} * a * c);
        if (!s) return {};
        QuadRat inv2a = (QuadRat{2} * a).inverse();
        std::vector<QuadRat> roots{(*s - b) * inv2a, (QuadRat{} - *s - b) * inv2a};
        if (roots[0] == roots[1]) roots.pop_back();
        return roots;
    }
    KPoly m = kpoly_monic(f);
    // Split m(s + t*sqrt(2)) = P(s,t) + sqrt(2) * Q(s,t) over Q[s][t].
    detail::SplitVal xi{{detail::QPoly{Rational(0), Rational(1)}}, {{}, detail::QPoly{Rational(1)}}};
    detail::SplitVal acc;
    for (int k = 3; k >= 0; --k) {
        QuadRat ck = m.coeff(k);
        detail::SplitVal constant;
        if (ck.p != 0) constant.rat = {detail::QPoly{ck.p}};
        if (ck.q != 0) constant.irr = {detail::QPoly{ck.q}};
        acc = acc * xi + constant;
    }
    // A root s0 + t0*sqrt(2) is a common rational zero of P and Q, so s0 is
    // a root of the resultant (or of a leading t-coefficient degenerating).
    detail::QPoly res = detail::resultant_t(acc.rat, acc.irr);
    std::vector<Rational> s_cands;
    if (res.empty()) throw std::logic_error("roots_in_K: vanishing resultant");
    for (const Rational& s0 : detail::rational_roots(res)) s_cands.push_back(s0);
    for (const detail::Biv* side : {&acc.rat, &acc.irr}) {
        const detail::QPoly& top = side->back();
        if (detail::qp_degree(top) >= 1)
            for (const Rational& s0 : detail::rational_roots(top)) s_cands.push_back(s0);
    }
    std::sort(s_cands.begin(), s_cands.end());
    s_cands.erase(std::unique(s_cands.begin(), s_cands.end()), s_cands.end());
    std::vector<QuadRat> roots;
    for (const Rational& s0 : s_cands) {
        for (const detail::Biv* side : {&acc.rat, &acc.irr}) {
            detail::QPoly spec;
            for (std::size_t j = side->size(); j-- > 0;) {
                spec.push_back(detail::qp_eval((*side)[j], s0));
            }
            std::reverse(spec.begin(), spec.end());
            detail::qp_trim(spec);
            if (spec.empty()) continue;
            for (const Rational& t0 : detail::rational_roots(spec)) {
                QuadRat cand{s0, t0};
                if (m.eval(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
            break;  // one nonzero specialization determines the t candidates
        }
    }
    return roots;
}

/// Irreducibility over K for 1 <= deg <= 3: any factorization of such a
/// polynomial has a linear part, so this reduces to root existence.
inline bool kpoly_irreducible_deg_le3(const KPoly& f) {
    const int n = f.degree();
    if (n < 1 || n > 3) throw std::invalid_argument("irreducibility test limited to degree 1..3");
    if (n == 1) return true;
    return roots_in_K(f).empty();
}

struct NeedOracle {
    std::string reason;
};

/// A monic prime (irreducible) factor of f in K[x].  Complete for
/// deg f <= 3; higher degrees may factor without K-roots, so the caller
/// must supply a factor through kpoly_verify_oracle_factor.
inline std::variant<KPoly, NeedOracle> kpoly_prime_factor(const KPoly& f) {
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("kpoly_prime_factor: input must be a nonunit");
    if (n == 1) return kpoly_monic(f);
    if (n > 3) return NeedOracle{"no complete factorization above degree 3"};
    auto roots = roots_in_K(f);
    if (roots.empty()) return kpoly_monic(f);  // no linear factor => irreducible at deg 2..3
    return KPoly::from_coeffs({QuadRat{} - roots.front(), QuadRat{1}});
}

/// Checks a caller-supplied factor: must be a nonunit exact divisor, and for
/// degrees up to three is additionally verified irreducible.  Returns the
/// monic normalization on success.
inline std::optional<KPoly> kpoly_verify_oracle_factor(const KPoly& f, const KPoly& cand) {
    if (cand.degree() < 1) return std::nullopt;
    if (!kpoly_divmod(f, cand).second.is_zero()) return std::nullopt;
    if (cand.degree() <= 3 && !kpoly_irreducible_deg_le3(cand)) return std::nullopt;
    return kpoly_monic(cand);
}

inline std::string to_string(const KPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= f.degree(); ++k) {
        QuadRat c = f.coeff(k);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += c.q == 0 ? to_string(c.p) : "(" + to_string(c) + ")";
            continue;
        }
        std::string xpow = k == 1 ? "x" : "x^" + std::to_string(k);
        if (c == QuadRat{1})
            out += xpow;
        else if (c.q == 0)
            out += to_string(c.p) + "*" + xpow;
        else
            out += "(" + to_string(c) + ")*" + xpow;
    }
    return out;
}

}  // namespace divlab
