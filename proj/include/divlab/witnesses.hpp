#pragma once

#include "divlab/predicates.hpp"
#include "divlab/random.hpp"
#include "divlab/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace divlab {

/// Size bound for the indexed families b_i, g_i.
struct FamilyParams {
    std::uint32_t n;
    explicit FamilyParams(std::uint64_t n_) {
        if (n_ < 1 || n_ > 1000000) throw std::invalid_argument("family size must be in [1, 10^6]");
        n = static_cast<std::uint32_t>(n_);
    }
};

constexpr std::uint64_t kDefaultSeed = 4025;

namespace detail {

class ReportBuilder {
public:
    ReportBuilder(std::string name, std::string claim) {
        rep_.name = std::move(name);
        rep_.claim = std::move(claim);
    }
    void input(std::string s) { rep_.inputs.push_back(std::move(s)); }
    void check(std::string name, bool ok, std::string note = "") {
        rep_.details.push_back({std::move(name), ok, std::move(note)});
    }
    WitnessReport finish() {
        rep_.reproduced = true;
        for (const auto& c : rep_.details) rep_.reproduced = rep_.reproduced && c.passed;
        rep_.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
                .count();
        return rep_;
    }

private:
    WitnessReport rep_;
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// The pair {s_y, s_z} in R admits the maximal common divisor b_i for every
/// index i, and distinct indices give non-associate divisors (the unit group
/// is trivial), so no finite list of maximal common divisors is complete.
inline WitnessReport witness_mcd_infinite(FamilyParams params) {
    detail::ReportBuilder rb(
        "mcd-infinite",
        "{s_y, s_z} in R has at least n pairwise non-associate maximal common divisors b_i");
    ExpVec sy = sy_exp(), sz = sz_exp();
    rb.input("s_y = " + to_string(sy));
    rb.input("s_z = " + to_string(sz));
    rb.input("n = " + std::to_string(params.n));
    bool all_maximal = true, identities = true, supports = true;
    for (std::uint32_t i = 1; i <= params.n; ++i) {
        ExpVec b = b_exp(i);
        all_maximal = all_maximal && mcd_verify(b, sy, sz).kind == MCDKind::Maximal;
        identities = identities && add(b, yt_exp(i)) == sy && add(b, zt_exp(i)) == sz;
        // each b_i deviates exactly at index i, so i -> b_i is injective
        supports = supports && b.deviations().size() == 1 && b.deviations().count(i) == 1;
    }
    rb.check("every b_i is a maximal common divisor", all_maximal,
             std::to_string(params.n) + " indices certified");
    rb.check("cofactor identities b_i * (Y T_i) = s_y and b_i * (Z T_i) = s_z", identities);
    rb.check("b_i pairwise distinct, hence non-associate", supports,
             "deviation supports are the singletons {i}");
    return rb.finish();
}

/// f = s_y + s_z*x in R[x] is divisible by the irreducible g_i = YT_i +
/// ZT_i*x for every i (f = b_i * g_i), and the g_i are pairwise
/// non-associate: one element with arbitrarily many irreducible divisors.
inline WitnessReport witness_idf_fails(FamilyParams params) {
    detail::ReportBuilder rb(
        "idf-fails",
        "f = s_y + s_z*x over R has at least n pairwise non-associate irreducible divisors g_i, "
        "so finiteness of irreducible divisors fails in R[x]");
    AlgElem sy = AlgElem::monomial(sy_exp()), sz = AlgElem::monomial(sz_exp());
    rb.input("f = (" + to_string(sy) + ") + (" + to_string(sz) + ")*x");
    rb.input("n = " + std::to_string(params.n));
    bool products = true, irreducible = true, supports = true;
    for (std::uint32_t i = 1; i <= params.n; ++i) {
        AlgElem b = AlgElem::monomial(b_exp(i));
        AlgElem yt = AlgElem::monomial(yt_exp(i)), zt = AlgElem::monomial(zt_exp(i));
        products = products && b * yt == sy && b * zt == sz;  // b_i * g_i = f coefficientwise
        // degree-one polynomial with only-unit common coefficient divisors:
        // any factorization has a constant part dividing both coefficients
        irreducible = irreducible && monomial_common_divisor_trivial({yt_exp(i), zt_exp(i)});
        supports = supports && yt_exp(i).deviations().count(i) == 1;
    }
    rb.check("f = b_i * g_i exactly, for every i", products,
             std::to_string(params.n) + " products re-multiplied");
    rb.check("each g_i = (Y T_i) + (Z T_i)*x is irreducible", irreducible,
             "degree one and the coefficients have no common nonunit divisor");
    rb.check("g_i pairwise distinct, hence non-associate", supports,
             "coefficient supports differ across indices");
    return rb.finish();
}

/// Every nonzero nonunit of R factors as the square of its exponent-halved
/// root, which is again a nonunit of R: R has no irreducible elements.
inline WitnessReport witness_antimatter_idf(std::size_t trials = 10000,
                                            std::uint64_t seed = kDefaultSeed) {
    detail::ReportBuilder rb(
        "antimatter-idf",
        "every nonzero nonunit f of R factors as sqrt(f)^2 with sqrt(f) a nonunit of R, "
        "so R has no irreducibles and is trivially IDF");
    rb.input("trials = " + std::to_string(trials));
    rb.input("seed = " + std::to_string(seed));

    auto x_half = antimatter_factor(AlgElem::monomial(ExpVec::X(1)));
    rb.check("X factors as (X^(1/2))^2",
             x_half && x_half->first == AlgElem::monomial(ExpVec::X(Rational(1, 2))));
    AlgElem s = AlgElem::monomial(sy_exp()) + AlgElem::monomial(sz_exp());
    auto s_fac = antimatter_factor(s);
    rb.check("s_y + s_z factors through its exponent-halved root",
             s_fac && s_fac->first * s_fac->second == s);

    Rng rng(seed);
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        AlgElem f = random_r_nonunit(rng);
        auto fac = antimatter_factor(f);
        bool ok = fac.has_value() && fac->first * fac->second == f && !fac->first.is_one() &&
                  !fac->first.is_zero() && in_R(fac->first);
        if (!ok) ++failures;
    }
    rb.check("fuzzed nonunits all factor into two equal nonunits", failures == 0,
             std::to_string(trials) + " trials, " + std::to_string(failures) + " failures");
    return rb.finish();
}

/// Fuzzes pairs f, g of R0 elements whose product lies in R by construction
/// and confirms the dichotomy: one factor already lies in R.
inline WitnessReport witness_claim_fuzz(std::size_t trials = 10000,
                                        std::uint64_t seed = kDefaultSeed) {
    detail::ReportBuilder rb(
        "claim-fuzz",
        "for f, g in R0 with f*g in R, at least one of f, g lies in R");
    rb.input("trials = " + std::to_string(trials));
    rb.input("seed = " + std::to_string(seed));
    Rng rng(seed);
    std::size_t violations = 0, inapplicable = 0, first = 0, second = 0, both = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        auto [f, g] = random_claim_pair(rng);
        switch (claim_check(f, g)) {
            case ClaimVerdict::Violation: ++violations; break;
            case ClaimVerdict::NotApplicable: ++inapplicable; break;
            case ClaimVerdict::FirstInR: ++first; break;
            case ClaimVerdict::SecondInR: ++second; break;
            case ClaimVerdict::BothInR: ++both; break;
        }
    }
    rb.check("zero violations", violations == 0,
             "first=" + std::to_string(first) + " second=" + std::to_string(second) +
                 " both=" + std::to_string(both) + " violations=" + std::to_string(violations));
    rb.check("generator kept every product inside R", inapplicable == 0,
             std::to_string(inapplicable) + " pairs fell outside the precondition");
    return rb.finish();
}

/// The control domain Z[sqrt(-5)]: a pair of primitive linear polynomials
/// whose product is not primitive, falsifying the content product rule.
inline WitnessReport witness_gauss_fails_z5() {
    detail::ReportBuilder rb(
        "gauss-fails-z5",
        "in Z[sqrt(-5)], (2 + (1+sqrt(-5))x) * (2 + (1-sqrt(-5))x) maps primitive factors to a "
        "non-primitive product");
    auto D = domain_handle(DomainId::Z5);
    std::vector<DomainElem> f{DomainElem::z5({2, 0}), DomainElem::z5({1, 1})};
    std::vector<DomainElem> g{DomainElem::z5({2, 0}), DomainElem::z5({1, -1})};
    rb.input("f = 2+1i5 x + 2 (coefficients [2, 1+1i5])");
    rb.input("g = coefficients [2, 1-1i5]");
    auto rep = gauss_product_check(D, f, g);
    rb.check("f primitive", rep.f_primitive == Truth::Yes);
    rb.check("g primitive", rep.g_primitive == Truth::Yes);
    std::vector<DomainElem> expect{DomainElem::z5({4, 0}), DomainElem::z5({4, 0}),
                                   DomainElem::z5({6, 0})};
    rb.check("product coefficients are [4, 4, 6]", rep.product_coeffs == expect);
    rb.check("product is not primitive", rep.product_primitive == Truth::No,
             rep.witness_divisor ? "common divisor " + to_string(*rep.witness_divisor) : "");
    return rb.finish();
}

/// The gcd implication fails in Z[sqrt(-5)] at (2, 1+sqrt(-5), 1-sqrt(-5)).
inline WitnessReport witness_aq_z5() {
    detail::ReportBuilder rb(
        "aq-z5",
        "in Z[sqrt(-5)], 2 is coprime to 1+sqrt(-5) and to 1-sqrt(-5) yet shares the divisor 2 "
        "with their product 6");
    auto D = domain_handle(DomainId::Z5);
    DomainElem r = DomainElem::z5({2, 0}), s = DomainElem::z5({1, 1}), t = DomainElem::z5({1, -1});
    rb.input("r = 2, s = 1+1i5, t = 1-1i5");
    auto rep = aq_triple_check(D, r, s, t);
    rb.check("r coprime to s", rep.r_s.verdict == Truth::Yes);
    rb.check("r coprime to t", rep.r_t.verdict == Truth::Yes);
    rb.check("r shares a nonunit divisor with s*t", rep.r_st.verdict == Truth::No,
             rep.r_st.witness ? "witness " + to_string(*rep.r_st.witness) : "");
    rb.check("implication verdict is a violation", rep.holds == Truth::No);
    return rb.finish();
}

/// The three proof cases of the composite-domain prime-like search on their
/// canonical inputs, plus the unit-factor rejection.
inline WitnessReport witness_prime_like_cases() {
    detail::ReportBuilder rb(
        "prime-like-cases",
        "the constructive prime-like search in Z + x*K[x] lands in each of its three cases and "
        "returns verified witnesses");
    KPoly x = KPoly::x();
    auto root2x = *DKElem::make(x * KPoly::constant(QuadRat{0, 1}));
    auto one_plus_x = *DKElem::make(KPoly::constant(QuadRat{1}) + x);
    rb.input("case inputs: (sqrt(2)x, sqrt(2)x, 1+x); (4+x, 4+x, 1+x); (1+sqrt(2)x, (1+sqrt(2)x)(1+x), 1+x)");

    auto c1 = prime_like_witness(root2x, root2x, one_plus_x);
    {
        bool ok = std::holds_alternative<PrimeLikeWitness>(c1);
        if (ok) {
            const auto& w = std::get<PrimeLikeWitness>(c1);
            ok = w.case_used == ProofCase::OrdPositive && w.side == DivSide::DividesB &&
                 w.divisor == DKElem::from_int(2);
        }
        rb.check("ord r >= 1: divisor 2 divides r and b", ok);
    }

    auto four_plus_x = *DKElem::make(KPoly::constant(QuadRat{4}) + x);
    auto c2 = prime_like_witness(four_plus_x, four_plus_x, one_plus_x);
    {
        bool ok = std::holds_alternative<PrimeLikeWitness>(c2);
        if (ok) {
            const auto& w = std::get<PrimeLikeWitness>(c2);
            ok = w.case_used == ProofCase::ConstantPrime && w.side == DivSide::DividesB &&
                 w.divisor == DKElem::from_int(2);
        }
        rb.check("|r(0)| >= 2: the prime 2 of r(0) divides r and b", ok);
    }

    auto one_plus_root2x = *DKElem::make(KPoly::constant(QuadRat{1}) + x * KPoly::constant(QuadRat{0, 1}));
    auto rejected = prime_like_witness(one_plus_root2x, one_plus_root2x * one_plus_x,
                                       DKElem::from_int(1));
    rb.check("unit third factor is rejected",
             std::holds_alternative<PrimeLikeError>(rejected) &&
                 std::get<PrimeLikeError>(rejected).kind == PrimeLikeError::Kind::PreconditionFailed);

    auto c3 = prime_like_witness(one_plus_root2x, one_plus_root2x * one_plus_x, one_plus_x);
    {
        bool ok = std::holds_alternative<PrimeLikeWitness>(c3);
        if (ok) {
            const auto& w = std::get<PrimeLikeWitness>(c3);
            ok = w.case_used == ProofCase::PolyPrime && w.side == DivSide::DividesB &&
                 w.divisor == one_plus_root2x;
        }
        rb.check("r(0) = 1: the normalized K[x]-prime 1+sqrt(2)x divides r and b", ok);
    }
    return rb.finish();
}

inline WitnessReport witness_x_not_primal() { return x_not_primal_check(); }

// ---------------------------------------------------------------------------
// Fuzz drivers.  Each returns a WitnessReport so the CLI and the acceptance
// suite share one code path.

/// Acceptance driver for the composite domain: fuzzed (r, b, c) with
/// r | b*c built in always produce verified witnesses, covering all cases.
inline WitnessReport fuzz_dk_prime_like(std::size_t trials = 1000,
                                        std::uint64_t seed = kDefaultSeed) {
    detail::ReportBuilder rb(
        "fuzz-dk-prime-like",
        "fuzzed divisibility instances in Z + x*K[x] always admit a prime-like witness, "
        "through all three proof cases");
    rb.input("trials = " + std::to_string(trials));
    rb.input("seed = " + std::to_string(seed));
    Rng rng(seed);
    std::size_t ord_cnt = 0, const_cnt = 0, poly_cnt = 0, failures = 0, premise_failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        DkTriple inst = random_dk_triple(rng);
        if (!dk_divides(inst.r, inst.b * inst.c)) {
            ++premise_failures;
            continue;
        }
        auto res = prime_like_witness(inst.r, inst.b, inst.c);
        if (!std::holds_alternative<PrimeLikeWitness>(res)) {
            ++failures;
            continue;
        }
        const auto& w = std::get<PrimeLikeWitness>(res);
        const DKElem& side = w.side == DivSide::DividesB ? inst.b : inst.c;
        bool verified = !w.divisor.is_unit() && dk_divides(w.divisor, inst.r).has_value() &&
                        dk_divides(w.divisor, side).has_value() &&
                        w.divisor * w.r_quotient == inst.r && w.divisor * w.side_quotient == side;
        if (!verified) {
            ++failures;
            continue;
        }
        switch (w.case_used) {
            case ProofCase::OrdPositive: ++ord_cnt; break;
            case ProofCase::ConstantPrime: ++const_cnt; break;
            case ProofCase::PolyPrime: ++poly_cnt; break;
        }
    }
    rb.check("generator satisfied r | b*c in every trial", premise_failures == 0);
    rb.check("all trials produced verified witnesses", failures == 0,
             std::to_string(failures) + " failures");
    rb.check("each proof case exercised at least 10 times",
             ord_cnt >= 10 && const_cnt >= 10 && poly_cnt >= 10,
             "ord=" + std::to_string(ord_cnt) + " constant=" + std::to_string(const_cnt) +
                 " poly=" + std::to_string(poly_cnt));
    return rb.finish();
}

/// Primal decompositions in Z, cross-checked against brute force over the
/// divisors of p.
inline WitnessReport fuzz_primal_z(std::size_t trials = 1000, std::uint64_t seed = kDefaultSeed) {
    detail::ReportBuilder rb(
        "fuzz-primal-z",
        "fuzzed p | a*b in Z always decompose as p = d*d'*u with d | a, d' | b, u = +-1, "
        "matching a brute-force split search");
    rb.input("trials = " + std::to_string(trials));
    rb.input("seed = " + std::to_string(seed));
    Rng rng(seed);
    auto D = domain_handle(DomainId::Z);
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        BigInt p = BigInt(rng.range(2, 10000)) * (rng.coin() ? 1 : -1);
        auto ds = detail::divisors(p);
        BigInt d = ds[rng.below(ds.size())];
        BigInt a = d * rng.range(1, 20) * (rng.coin() ? 1 : -1);
        BigInt b = (abs(p) / d) * rng.range(1, 20) * (rng.coin() ? 1 : -1);
        auto out = primal_decompose(D, DomainElem::z(p), DomainElem::z(a), DomainElem::z(b));
        bool ok = out.kind == PrimalOutcome::Kind::Decomposed;
        if (ok) {
            const auto& parts = *out.parts;
            ok = mul(mul(parts.r_part, parts.s_part), parts.unit_slack) == DomainElem::z(p) &&
                 divides(parts.r_part, DomainElem::z(a)).has_value() &&
                 divides(parts.s_part, DomainElem::z(b)).has_value() &&
                 parts.unit_slack.is_unit();
        }
        bool oracle = false;  // some divisor split of |p| lands on (a, b)
        for (const BigInt& u : ds)
            oracle = oracle || (a % u == 0 && b % (abs(p) / u) == 0);
        if (!(ok && oracle)) ++failures;
    }
    rb.check("all trials decomposed and matched the oracle", failures == 0,
             std::to_string(trials) + " trials, " + std::to_string(failures) + " failures");
    return rb.finish();
}

/// Primal decompositions for monomials of R0: the chain of exponent minima
/// must reproduce the generating split exactly and leave unit slack.
inline WitnessReport fuzz_primal_r0(std::size_t trials = 1000, std::uint64_t seed = kDefaultSeed) {
    detail::ReportBuilder rb(
        "fuzz-primal-r0",
        "fuzzed monomial instances p | a*b in R0 always decompose through exponent minima "
        "with unit slack");
    rb.input("trials = " + std::to_string(trials));
    rb.input("seed = " + std::to_string(seed));
    Rng rng(seed);
    auto D = domain_handle(DomainId::R0);
    std::size_t failures = 0;
    auto split_coord = [&](const Rational& v) {
        return v * rng.below(5) / 4;  // a point of [0, v] with denominator <= 4v's
    };
    for (std::size_t t = 0; t < trials; ++t) {
        ExpVec p = random_p_monomial(rng);
        if (p.is_zero()) p = ExpVec::X(1);
        // split each coordinate of p between the two sides
        Rational ux = split_coord(p.x()), uy = split_coord(p.y()), uz = split_coord(p.z());
        Rational uu = split_coord(p.u());
        ExpVec::DevMap dev;
        for (const auto& [i, e] : p.deviations()) {
            Rational t_val = split_coord(p.u() + e);
            dev[i] = t_val - uu;
        }
        ExpVec d1 = ExpVec::make(ux, uy, uz, uu, dev);
        ExpVec d2 = *sub(p, d1);
        ExpVec a = add(d1, random_p_monomial(rng));
        ExpVec b = add(d2, random_p_monomial(rng));
        auto out = primal_decompose(D, DomainElem::r0(AlgElem::monomial(p)),
                                    DomainElem::r0(AlgElem::monomial(a)),
                                    DomainElem::r0(AlgElem::monomial(b)));
        bool ok = out.kind == PrimalOutcome::Kind::Decomposed;
        if (ok) {
            const auto& parts = *out.parts;
            ExpVec rp = parts.r_part.alg().leading(), sp = parts.s_part.alg().leading();
            ok = parts.unit_slack.is_unit() && add(rp, sp) == p && sub(a, rp).has_value() &&
                 sub(b, sp).has_value() && rp == min(p, a);  // oracle: the minimum is the mcd
        }
        if (!ok) ++failures;
    }
    rb.check("all trials decomposed with unit slack and minimum-certified parts", failures == 0,
             std::to_string(trials) + " trials, " + std::to_string(failures) + " failures");
    return rb.finish();
}

/// Kernel soundness: exact division against the multiply-back oracle, exact
/// rejection against the monomial-level oracle, and square-root round trips.
inline WitnessReport fuzz_kernel(std::size_t trials = 10000, std::uint64_t seed = kDefaultSeed) {
    detail::ReportBuilder rb(
        "fuzz-kernel",
        "exact division in F2[P] agrees with multiplication, rejects non-multiples, and the "
        "exponent-halving square root round-trips");
    rb.input("trials = " + std::to_string(trials));
    rb.input("seed = " + std::to_string(seed));
    Rng rng(seed);
    std::size_t mult_failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        AlgElem f = random_r0_nonzero(rng), h = random_r0_nonzero(rng);
        auto q = exact_div(f * h, f);
        if (!q || !(*q == h)) ++mult_failures;
    }
    rb.check("quotients of built products recover the cofactor", mult_failures == 0,
             std::to_string(trials) + " products divided");

    std::size_t rejects = 0, reject_failures = 0, attempts = 0;
    while (rejects < trials && attempts < trials * 40) {
        ++attempts;
        ExpVec m = random_p_monomial(rng);
        if (m.is_zero()) continue;
        AlgElem f = AlgElem::monomial(m);
        AlgElem g = random_r0_nonzero(rng);
        bool divisible = true;  // monomial-level oracle for a monomial divisor
        for (const auto& w : g.monomials()) divisible = divisible && sub(w, m).has_value();
        auto q = exact_div(g, f);
        if (divisible) {
            if (!q || !(*q * f == g)) ++reject_failures;
            continue;
        }
        ++rejects;
        if (q) ++reject_failures;
    }
    rb.check("non-multiples are rejected exactly per the monomial oracle",
             reject_failures == 0 && rejects == trials,
             std::to_string(rejects) + " rejections confirmed");

    std::size_t sqrt_failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        AlgElem f = random_r0_elem(rng);
        if (!(sqrt(f) * sqrt(f) == f) || !(sqrt(f * f) == f)) ++sqrt_failures;
    }
    rb.check("square roots round-trip", sqrt_failures == 0, std::to_string(trials) + " elements");
    return rb.finish();
}

/// Control in Z: products of primitive polynomials stay primitive.
inline WitnessReport fuzz_gauss_z(std::size_t trials = 1000, std::uint64_t seed = kDefaultSeed) {
    detail::ReportBuilder rb("fuzz-gauss-z",
                             "in Z the product of primitive polynomials is primitive");
    rb.input("trials = " + std::to_string(trials));
    rb.input("seed = " + std::to_string(seed));
    Rng rng(seed);
    auto D = domain_handle(DomainId::Z);
    auto primitive_list = [&] {
        for (;;) {
            std::vector<DomainElem> cs;
            BigInt g = 0;
            for (long k = rng.range(2, 4); k > 0; --k) {
                BigInt v = random_int(rng, -20, 20);
                g = gcd(g, v);
                cs.push_back(DomainElem::z(v));
            }
            if (g == 1) return cs;
        }
    };
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        auto rep = gauss_product_check(D, primitive_list(), primitive_list());
        if (rep.product_primitive != Truth::Yes) ++failures;
    }
    rb.check("every product primitive", failures == 0, std::to_string(trials) + " pairs");
    return rb.finish();
}

/// Prime-like witnesses always exist in Z for fuzzed p | r*s.
inline WitnessReport fuzz_prime_like_z(std::size_t trials = 1000,
                                       std::uint64_t seed = kDefaultSeed) {
    detail::ReportBuilder rb("fuzz-prime-like-z",
                             "in Z every instance p | r*s admits a prime-like witness");
    rb.input("trials = " + std::to_string(trials));
    rb.input("seed = " + std::to_string(seed));
    Rng rng(seed);
    auto D = domain_handle(DomainId::Z);
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        BigInt p = BigInt(rng.range(2, 10000)) * (rng.coin() ? 1 : -1);
        auto ds = detail::divisors(p);
        BigInt d = ds[rng.below(ds.size())];
        DomainElem r = DomainElem::z(d * rng.range(1, 30) * (rng.coin() ? 1 : -1));
        DomainElem s = DomainElem::z((abs(p) / d) * rng.range(1, 30) * (rng.coin() ? 1 : -1));
        auto res = prime_like_check(D, DomainElem::z(p), r, s);
        if (res.kind != PrimeLikeCheckResult::Kind::Witness) ++failures;
    }
    rb.check("witness found in every trial", failures == 0, std::to_string(trials) + " instances");
    return rb.finish();
}

/// Prime-like witnesses always exist for monomials of R (instance-level
/// sanity of the product rule there).
inline WitnessReport fuzz_prime_like_r(std::size_t trials = 1000,
                                       std::uint64_t seed = kDefaultSeed) {
    detail::ReportBuilder rb("fuzz-prime-like-r",
                             "for monomials of R every instance p | r*s admits a prime-like witness");
    rb.input("trials = " + std::to_string(trials));
    rb.input("seed = " + std::to_string(seed));
    Rng rng(seed);
    auto D = domain_handle(DomainId::R);
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        ExpVec p = random_q_nonunit_monomial(rng);
        ExpVec d1 = scalar_div(p, 2);
        if (rng.coin()) d1 = scalar_div(d1, 2);
        ExpVec d2 = *sub(p, d1);
        ExpVec r = add(d1, random_q_monomial(rng)), s = add(d2, random_q_monomial(rng));
        auto res = prime_like_check(D, DomainElem::r(AlgElem::monomial(p)),
                                    DomainElem::r(AlgElem::monomial(r)),
                                    DomainElem::r(AlgElem::monomial(s)));
        bool ok = res.kind == PrimeLikeCheckResult::Kind::Witness && res.divisor &&
                  !res.divisor->is_unit();
        if (!ok) ++failures;
    }
    rb.check("witness found in every trial", failures == 0, std::to_string(trials) + " instances");
    return rb.finish();
}

// ---------------------------------------------------------------------------
// Registry used by the CLI.

struct RunOptions {
    std::uint64_t n = 100;
    std::size_t trials = 0;  // 0 = per-driver default
    std::uint64_t seed = kDefaultSeed;
};

inline std::vector<std::string> witness_names() {
    return {"mcd-infinite",  "idf-fails", "antimatter-idf",   "claim-fuzz",
            "gauss-fails-z5", "aq-z5",     "prime-like-cases", "x-not-primal"};
}

inline std::optional<WitnessReport> run_witness(const std::string& name, const RunOptions& opt) {
    auto trials = [&](std::size_t dflt) { return opt.trials ? opt.trials : dflt; };
    if (name == "mcd-infinite") return witness_mcd_infinite(FamilyParams(opt.n));
    if (name == "idf-fails") return witness_idf_fails(FamilyParams(opt.n));
    if (name == "antimatter-idf") return witness_antimatter_idf(trials(10000), opt.seed);
    if (name == "claim-fuzz") return witness_claim_fuzz(trials(10000), opt.seed);
    if (name == "gauss-fails-z5") return witness_gauss_fails_z5();
    if (name == "aq-z5") return witness_aq_z5();
    if (name == "prime-like-cases") return witness_prime_like_cases();
    if (name == "x-not-primal") return witness_x_not_primal();
    return std::nullopt;
}

inline std::vector<std::string> fuzz_names() {
    return {"claim",    "antimatter", "kernel",       "dk-prime-like",
            "primal-z", "primal-r0",  "gauss-z",      "prime-like-z",
            "prime-like-r"};
}

inline std::optional<WitnessReport> run_fuzz(const std::string& property, const RunOptions& opt) {
    auto trials = [&](std::size_t dflt) { return opt.trials ? opt.trials : dflt; };
    if (property == "claim") return witness_claim_fuzz(trials(10000), opt.seed);
    if (property == "antimatter") return witness_antimatter_idf(trials(10000), opt.seed);
    if (property == "kernel") return fuzz_kernel(trials(10000), opt.seed);
    if (property == "dk-prime-like") return fuzz_dk_prime_like(trials(1000), opt.seed);
    if (property == "primal-z") return fuzz_primal_z(trials(1000), opt.seed);
    if (property == "primal-r0") return fuzz_primal_r0(trials(1000), opt.seed);
    if (property == "gauss-z") return fuzz_gauss_z(trials(1000), opt.seed);
    if (property == "prime-like-z") return fuzz_prime_like_z(trials(1000), opt.seed);
    if (property == "prime-like-r") return fuzz_prime_like_r(trials(1000), opt.seed);
    return std::nullopt;
}

}  // namespace divlab
