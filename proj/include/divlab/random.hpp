#pragma once

#include "divlab/domain.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace divlab {

/// Deterministic seeded source; every fuzz driver threads one of these so
/// runs are reproducible from the seed alone.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(eng_);
    }
    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
    bool coin() { return below(2) == 1; }
    bool chance(unsigned num, unsigned den) { return below(den) < num; }

private:
    std::mt19937_64 eng_;
};

// Sampling follows the shared profile: term counts <= 5, denominators <= 6,
// at most 4 deviating T indices, exponent magnitudes <= 4.

inline Rational random_positive_exponent(Rng& rng) {
    long den = rng.range(1, 6);
    return Rational(rng.range(1, 4 * den), den);
}

inline Rational random_nonneg_exponent(Rng& rng) {
    return rng.chance(1, 3) ? Rational(0) : random_positive_exponent(rng);
}

/// Monomial of the full exponent monoid P; may be pure-T or trivial.
inline ExpVec random_p_monomial(Rng& rng) {
    auto coord = [&] { return rng.coin() ? Rational(0) : random_positive_exponent(rng); };
    Rational x = coord(), y = coord(), z = coord();
    Rational u = rng.coin() ? Rational(0) : random_positive_exponent(rng);
    ExpVec::DevMap dev;
    for (std::uint64_t j = rng.below(5); j > 0; --j) {
        auto i = static_cast<std::uint32_t>(rng.range(1, 6));
        Rational t = random_nonneg_exponent(rng);  // desired T[i] exponent
        dev[i] = t - u;
    }
    return ExpVec::make(x, y, z, u, std::move(dev));
}

/// Monomial of Q (the exponents allowed in R).
inline ExpVec random_q_monomial(Rng& rng) {
    for (;;) {
        ExpVec m = random_p_monomial(rng);
        if (in_Q(m)) return m;
    }
}

inline ExpVec random_q_nonunit_monomial(Rng& rng) {
    for (;;) {
        ExpVec m = random_q_monomial(rng);
        if (!m.is_zero()) return m;
    }
}

/// Pure-T monomial: x = y = z = 0 (may be the trivial monomial).
inline ExpVec random_pure_t_monomial(Rng& rng) {
    Rational u = rng.coin() ? Rational(0) : random_positive_exponent(rng);
    ExpVec::DevMap dev;
    for (std::uint64_t j = rng.below(4); j > 0; --j) {
        auto i = static_cast<std::uint32_t>(rng.range(1, 6));
        dev[i] = random_nonneg_exponent(rng) - u;
    }
    return ExpVec::make(0, 0, 0, u, std::move(dev));
}

inline AlgElem random_r0_elem(Rng& rng, std::size_t max_terms = 5) {
    std::vector<ExpVec> ms;
    for (std::uint64_t k = rng.below(max_terms + 1); k > 0; --k)
        ms.push_back(random_p_monomial(rng));
    return AlgElem::from_monomials(std::move(ms));
}

inline AlgElem random_r0_nonzero(Rng& rng, std::size_t max_terms = 5) {
    for (;;) {
        AlgElem f = random_r0_elem(rng, max_terms);
        if (!f.is_zero()) return f;
    }
}

inline AlgElem random_r_elem(Rng& rng, std::size_t max_terms = 5) {
    std::vector<ExpVec> ms;
    for (std::uint64_t k = rng.below(max_terms + 1); k > 0; --k)
        ms.push_back(random_q_monomial(rng));
    return AlgElem::from_monomials(std::move(ms));
}

inline AlgElem random_r_nonunit(Rng& rng, std::size_t max_terms = 5) {
    for (;;) {
        AlgElem f = random_r_elem(rng, max_terms);
        if (!f.is_zero() && !f.is_one()) return f;
    }
}

/// Element of the ideal part of R0: every monomial has X/Y/Z content.
inline AlgElem random_ideal_elem(Rng& rng, std::size_t max_terms = 4) {
    std::vector<ExpVec> ms;
    for (std::uint64_t k = rng.below(max_terms + 1); k > 0; --k) {
        for (;;) {
            ExpVec m = random_q_monomial(rng);
            if (m.xyz_sum() > 0) {
                ms.push_back(std::move(m));
                break;
            }
        }
    }
    return AlgElem::from_monomials(std::move(ms));
}

/// Element supported on pure-T monomials (possibly 0 or 1).
inline AlgElem random_pure_t_elem(Rng& rng, std::size_t max_terms = 3) {
    std::vector<ExpVec> ms;
    for (std::uint64_t k = rng.below(max_terms + 1); k > 0; --k)
        ms.push_back(random_pure_t_monomial(rng));
    return AlgElem::from_monomials(std::move(ms));
}

/// Pair (f, g) with f*g in R guaranteed by construction: the pure-T parts
/// are drawn from the shapes (0, anything), (anything, 0), (1, 1), which is
/// exhaustive for products landing in R.
inline std::pair<AlgElem, AlgElem> random_claim_pair(Rng& rng) {
    AlgElem f = random_ideal_elem(rng), g = random_ideal_elem(rng);
    switch (rng.below(3)) {
        case 0: g = g + random_pure_t_elem(rng); break;
        case 1: f = f + random_pure_t_elem(rng); break;
        default:
            f = f + AlgElem::one();
            g = g + AlgElem::one();
            break;
    }
    return {std::move(f), std::move(g)};
}

inline BigInt random_int(Rng& rng, long lo, long hi) { return BigInt(rng.range(lo, hi)); }

inline QuadInt random_quadint(Rng& rng) {
    return QuadInt{BigInt(rng.range(-9, 9)), BigInt(rng.range(-3, 3))};
}

inline QuadInt random_quadint_nonzero(Rng& rng) {
    for (;;) {
        QuadInt v = random_quadint(rng);
        if (!v.is_zero()) return v;
    }
}

inline QuadInt random_quadint_nonunit(Rng& rng) {
    for (;;) {
        QuadInt v = random_quadint_nonzero(rng);
        if (!v.is_unit()) return v;
    }
}

inline Rational random_small_rational(Rng& rng) {
    long den = rng.range(1, 4);
    return Rational(rng.range(-8, 8), den);
}

inline QuadRat random_quadrat(Rng& rng) {
    Rational p = rng.chance(1, 3) ? Rational(0) : random_small_rational(rng);
    Rational q = rng.chance(1, 2) ? Rational(0) : random_small_rational(rng);
    return QuadRat{std::move(p), std::move(q)};
}

inline QuadRat random_quadrat_nonzero(Rng& rng) {
    for (;;) {
        QuadRat v = random_quadrat(rng);
        if (!v.is_zero()) return v;
    }
}

inline KPoly random_kpoly(Rng& rng, int max_deg) {
    std::vector<QuadRat> c(static_cast<std::size_t>(rng.range(0, max_deg)) + 1);
    for (auto& v : c) v = random_quadrat(rng);
    return KPoly::from_coeffs(std::move(c));
}

inline KPoly random_kpoly_nonzero(Rng& rng, int max_deg) {
    for (;;) {
        KPoly f = random_kpoly(rng, max_deg);
        if (!f.is_zero()) return f;
    }
}

inline DKElem random_dk_elem(Rng& rng, int max_deg, long const_lo = -6, long const_hi = 6) {
    KPoly tail = random_kpoly(rng, max_deg);
    KPoly body = tail - KPoly::constant(tail.coeff(0));  // zero out the constant slot
    return *DKElem::make(body + KPoly::constant(QuadRat{Rational(rng.range(const_lo, const_hi))}));
}

inline DKElem random_dk_nonzero(Rng& rng, int max_deg) {
    for (;;) {
        DKElem f = random_dk_elem(rng, max_deg);
        if (!f.is_zero()) return f;
    }
}

inline DKElem random_dk_nonunit(Rng& rng, int max_deg) {
    for (;;) {
        DKElem f = random_dk_elem(rng, max_deg);
        if (!f.is_zero() && !f.is_unit()) return f;
    }
}

/// Instance for the composite-domain prime-like fuzz: a triple (r, b, c)
/// with r | b*c built in, targeted at one of the three proof cases, with
/// half of the instances splitting r's factors across b and c.
struct DkTriple {
    DKElem r, b, c;
    ProofCase target;
};

inline DkTriple random_dk_triple(Rng& rng) {
    KPoly x = KPoly::x();
    DKElem r1 = DKElem::from_int(2), r2 = DKElem::from_int(1);
    ProofCase target = ProofCase::OrdPositive;
    switch (rng.below(3)) {
        case 0: {
            target = ProofCase::OrdPositive;
            r1 = *DKElem::make(x);
            r2 = random_dk_nonzero(rng, 2);
            break;
        }
        case 1: {
            target = ProofCase::ConstantPrime;
            static const long primes[] = {2, 3, 5};
            r1 = DKElem::from_int(primes[rng.below(3)]);
            do {
                r2 = random_dk_elem(rng, 3, -3, 3);
            } while (r2.constant_term() == 0);
            break;
        }
        default: {
            target = ProofCase::PolyPrime;
            // Both parts carry constant term +-1; the linear one often has
            // an irrational coefficient so the cubic root search is hit.
            r1 = *DKElem::make(KPoly::constant(QuadRat{Rational(rng.coin() ? 1 : -1)}) +
                               x * KPoly::constant(random_quadrat_nonzero(rng)));
            r2 = *DKElem::make(KPoly::constant(QuadRat{Rational(rng.coin() ? 1 : -1)}) +
                               x * KPoly::constant(random_quadrat(rng)) +
                               x * x * KPoly::constant(random_quadrat(rng)));
            break;
        }
    }
    DKElem r = r1 * r2;
    DKElem b = r, c = r;
    if (rng.coin()) {
        b = r * random_dk_nonzero(rng, 3 - r.poly().degree());  // r divides b outright
        c = random_dk_nonunit(rng, 3);
    } else {
        b = r1 * random_dk_nonzero(rng, 3 - r1.poly().degree());  // factors split across b and c
        c = r2 * random_dk_nonzero(rng, 3 - r2.poly().degree());
    }
    if (b.is_unit()) b = b * DKElem::from_int(2);  // keeps r1 | b
    if (c.is_unit()) c = c * DKElem::from_int(2);
    return {std::move(r), std::move(b), std::move(c), target};
}

}  // namespace divlab
