#pragma once

#include "divlab/exponents.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace divlab {

/// Element of the monoid algebra F2[P]: a finite set of exponent vectors,
/// kept sorted ascending in the fixed total order.  Addition is symmetric
/// difference (characteristic two).  R0 is the whole algebra; the subring R
/// consists of elements whose monomials all lie in Q (see in_QR).
class AlgElem {
public:
    AlgElem() = default;  // zero

    static AlgElem zero() { return {}; }
    static AlgElem one() { return monomial(ExpVec{}); }
    static AlgElem monomial(ExpVec m) {
        AlgElem f;
        f.monos_.push_back(std::move(m));
        return f;
    }
    /// Sum of the given monomials; duplicates cancel in pairs (mod 2).
    static AlgElem from_monomials(std::vector<ExpVec> ms) {
        std::sort(ms.begin(), ms.end());
        AlgElem f;
        for (auto& m : ms) {
            if (!f.monos_.empty() && f.monos_.back() == m)
                f.monos_.pop_back();
            else
                f.monos_.push_back(std::move(m));
        }
        return f;
    }

    const std::vector<ExpVec>& monomials() const { return monos_; }
    bool is_zero() const { return monos_.empty(); }
    bool is_one() const { return monos_.size() == 1 && monos_[0].is_zero(); }
    bool is_monomial() const { return monos_.size() == 1; }
    std::size_t term_count() const { return monos_.size(); }

    /// Largest monomial in the term order; element must be nonzero.
    const ExpVec& leading() const {
        if (monos_.empty()) throw std::invalid_argument("leading term of zero");
        return monos_.back();
    }

    friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.monos_ == b.monos_; }

    friend AlgElem operator+(const AlgElem& a, const AlgElem& b) {
        AlgElem r;
        std::size_t i = 0, j = 0;
        while (i < a.monos_.size() && j < b.monos_.size()) {
            auto c = compare(a.monos_[i], b.monos_[j]);
            if (c < 0)
                r.monos_.push_back(a.monos_[i++]);
            else if (c > 0)
                r.monos_.push_back(b.monos_[j++]);
            else {
                ++i;
                ++j;
            }
        }
        r.monos_.insert(r.monos_.end(), a.monos_.begin() + i, a.monos_.end());
        r.monos_.insert(r.monos_.end(), b.monos_.begin() + j, b.monos_.end());
        return r;
    }

    friend AlgElem operator*(const AlgElem& a, const AlgElem& b) {
        std::vector<ExpVec> products;
        products.reserve(a.monos_.size() * b.monos_.size());
        for (const auto& ma : a.monos_)
            for (const auto& mb : b.monos_) products.push_back(add(ma, mb));
        return from_monomials(std::move(products));
    }

private:
    std::vector<ExpVec> monos_;
};

inline AlgElem mul(const AlgElem& a, const AlgElem& b) { return a * b; }

/// Exact division in F2[P] by leading-term cancellation.  Returns g/f when f
/// divides g, nullopt otherwise.  f must be nonzero.  The quotient, when it
/// exists, is unique (the algebra is a domain), and the routine re-multiplies
/// as a self-check.
inline std::optional<AlgElem> exact_div(const AlgElem& g, const AlgElem& f) {
    if (f.is_zero()) throw std::invalid_argument("exact_div: division by zero");
    std::vector<ExpVec> quotient;
    AlgElem rem = g;
    while (!rem.is_zero()) {
        auto d = sub(rem.leading(), f.leading());
        if (!d) return std::nullopt;
        rem = rem + AlgElem::monomial(*d) * f;  // char 2: subtraction is addition
        quotient.push_back(std::move(*d));
    }
    AlgElem q = AlgElem::from_monomials(std::move(quotient));
    if (!(q * f == g)) throw std::logic_error("exact_div: verification failed");
    return q;
}

/// True iff every monomial lies in Q, i.e. the element belongs to R.
inline bool in_R(const AlgElem& f) {
    for (const auto& m : f.monomials())
        if (!in_Q(m)) return false;
    return true;
}

/// Split along the ideal decomposition of R0: monomials with x+y+z > 0
/// versus pure-T monomials (x+y+z = 0).
struct RSplit {
    AlgElem ideal_part;  // monomials with positive X/Y/Z content
    AlgElem pure_t_part; // the rest
};

inline RSplit split_R0(const AlgElem& f) {
    std::vector<ExpVec> ip, tp;
    for (const auto& m : f.monomials())
        (m.xyz_sum() > 0 ? ip : tp).push_back(m);
    return {AlgElem::from_monomials(std::move(ip)), AlgElem::from_monomials(std::move(tp))};
}

enum class ClaimVerdict {
    NotApplicable,  // f*g is not in R
    FirstInR,
    SecondInR,
    BothInR,
    Violation  // f*g in R but neither factor is: would contradict the product rule
};

/// Product-membership dichotomy for R inside R0: whenever f*g lands in R,
/// at least one of the factors must already lie in R.
inline ClaimVerdict claim_check(const AlgElem& f, const AlgElem& g) {
    if (!in_R(f * g)) return ClaimVerdict::NotApplicable;
    bool fi = in_R(f), gi = in_R(g);
    if (fi && gi) return ClaimVerdict::BothInR;
    if (fi) return ClaimVerdict::FirstInR;
    if (gi) return ClaimVerdict::SecondInR;
    return ClaimVerdict::Violation;
}

/// Frobenius square root: in characteristic two, squaring is additive, so
/// every element has the exact square root obtained by halving exponents.
inline AlgElem sqrt(const AlgElem& f) {
    std::vector<ExpVec> halves;
    halves.reserve(f.term_count());
    for (const auto& m : f.monomials()) halves.push_back(scalar_div(m, 2));
    return AlgElem::from_monomials(std::move(halves));
}

/// Writes f as h*h with h = sqrt(f), witnessing that no element of R is
/// irreducible (R is antimatter).  Requires f in R; returns nullopt for 0
/// and 1, which are not products of nonunits.
inline std::optional<std::pair<AlgElem, AlgElem>> antimatter_factor(const AlgElem& f) {
    if (!in_R(f)) throw std::invalid_argument("antimatter_factor: element not in R");
    if (f.is_zero() || f.is_one()) return std::nullopt;
    AlgElem h = sqrt(f);
    if (!in_R(h)) throw std::logic_error("antimatter_factor: root left R");
    if (!(h * h == f)) throw std::logic_error("antimatter_factor: square check failed");
    return std::make_pair(h, h);
}

/// For monomials of R (exponents in Q), a common divisor within R exists
/// exactly when it can be taken nontrivial; this reports whether the only
/// common divisor is a unit.  All inputs must lie in Q.
inline bool monomial_common_divisor_trivial(const std::vector<ExpVec>& ms) {
    if (ms.empty()) throw std::invalid_argument("common divisor of empty set");
    ExpVec m = ms[0];
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (!in_Q(ms[i])) throw std::invalid_argument("monomial outside Q");
        m = min(m, ms[i]);
    }
    // Any common divisor d in Q satisfies d <= m componentwise; a nontrivial
    // one exists iff m has positive X/Y/Z content (half of it stays in Q).
    return m.xyz_sum() == 0;
}

enum class MCDKind { Maximal, NotMaximal, NotCommonDivisor };

struct MCDVerdict {
    MCDKind kind;
    std::optional<ExpVec> larger;  // strictly larger common divisor when NotMaximal
    std::string note;
};

/// Decides whether the monomial d is a maximal common divisor of the
/// monomials a and b inside R.  Divisors of monomials are monomials, so the
/// check reduces to exponent arithmetic: d divides both iff a-d and b-d stay
/// in Q; d is maximal iff min(a-d, b-d) has no X/Y/Z content (a pure-T
/// nonzero surplus cannot be absorbed by any element of Q).
inline MCDVerdict mcd_verify(const ExpVec& d, const ExpVec& a, const ExpVec& b) {
    for (const ExpVec* v : {&d, &a, &b})
        if (!in_Q(*v)) throw std::invalid_argument("mcd_verify: monomial outside Q");
    auto qa = sub(a, d);
    if (!qa || !in_Q(*qa)) return {MCDKind::NotCommonDivisor, std::nullopt, "d does not divide a in R"};
    auto qb = sub(b, d);
    if (!qb || !in_Q(*qb)) return {MCDKind::NotCommonDivisor, std::nullopt, "d does not divide b in R"};
    ExpVec m = min(*qa, *qb);
    if (m.xyz_sum() == 0)
        return {MCDKind::Maximal, std::nullopt,
                "remaining common surplus is pure-T, absorbed by no element of Q"};
    // Half of one positive X/Y/Z coordinate of the surplus still divides both.
    ExpVec step = m.x() > 0   ? ExpVec::X(m.x() / 2)
                  : m.y() > 0 ? ExpVec::Y(m.y() / 2)
                              : ExpVec::Z(m.z() / 2);
    return {MCDKind::NotMaximal, add(d, step), "common surplus has X/Y/Z content"};
}

// Named monomials of the running counterexample family.  s_y and s_z admit,
// for every index i, the maximal common divisor b_i with cofactors Y*T[i]
// and Z*T[i]; no two b_i are associates, so {s_y, s_z} has infinitely many
// maximal common divisors and s_y has infinitely many pairwise non-associate
// divisors.
inline ExpVec sy_exp() { return ExpVec::make(1, 1, 0, 1); }
inline ExpVec sz_exp() { return ExpVec::make(1, 0, 1, 1); }
inline ExpVec b_exp(std::uint32_t i) { return ExpVec::make(1, 0, 0, 1, {{i, -1}}); }
inline ExpVec yt_exp(std::uint32_t i) { return ExpVec::make(0, 1, 0, 0, {{i, 1}}); }
inline ExpVec zt_exp(std::uint32_t i) { return ExpVec::make(0, 0, 1, 0, {{i, 1}}); }

inline std::string to_string(const AlgElem& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.monomials().rbegin(); it != f.monomials().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += to_string(*it);
    }
    return out;
}

}  // namespace divlab
