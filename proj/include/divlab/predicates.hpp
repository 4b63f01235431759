#pragma once

#include "divlab/domain.hpp"

#include <optional>
#include <string>
#include <vector>

namespace divlab {

/// Three-valued verdict: predicates never silently guess, they answer
/// Unknown when no decision procedure applies.
enum class Truth { Yes, No, Unknown };

inline std::string to_string(Truth t) {
    switch (t) {
        case Truth::Yes: return "yes";
        case Truth::No: return "no";
        case Truth::Unknown: return "unknown";
    }
    return "?";
}

/// Nonempty list of nonzero coefficients, all from one domain.  Zero
/// coefficients are dropped on construction (they constrain no divisor).
class ContentList {
public:
    static ContentList make(std::vector<DomainElem> coeffs) {
        std::vector<DomainElem> kept;
        for (auto& c : coeffs) {
            if (!kept.empty() && kept.front().id() != c.id())
                throw std::invalid_argument("ContentList: mixed domains");
            if (!c.is_zero()) kept.push_back(std::move(c));
        }
        if (kept.empty()) throw std::invalid_argument("ContentList: no nonzero coefficients");
        ContentList cl;
        cl.coeffs_ = std::move(kept);
        return cl;
    }
    const std::vector<DomainElem>& coeffs() const { return coeffs_; }

private:
    ContentList() = default;
    std::vector<DomainElem> coeffs_;
};

namespace detail {

inline bool all_monomials(const std::vector<DomainElem>& es) {
    for (const auto& e : es)
        if (!e.alg().is_monomial()) return false;
    return true;
}

/// Half of one positive X/Y/Z coordinate: a nonunit element of Q below m.
inline ExpVec half_xyz(const ExpVec& m) {
    return m.x() > 0 ? ExpVec::X(m.x() / 2) : m.y() > 0 ? ExpVec::Y(m.y() / 2)
                                                        : ExpVec::Z(m.z() / 2);
}

}  // namespace detail

struct CoprimeResult {
    Truth verdict;
    std::optional<DomainElem> witness;  // common nonunit divisor when verdict is No
};

/// Do a and b share a nonunit divisor?  Decidable in Z (gcd), Z[sqrt(-5)]
/// (divisor enumeration) and for monomials of R0/R (exponent minima).
inline CoprimeResult coprime_check(const DomainHandle& D, const DomainElem& a,
                                   const DomainElem& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("coprime_check: zero input");
    switch (D.id) {
        case DomainId::Z: {
            BigInt g = gcd(a.integer(), b.integer());
            if (g == 1) return {Truth::Yes, std::nullopt};
            return {Truth::No, DomainElem::z(g)};
        }
        case DomainId::Z5: {
            for (const auto& d : quadint_divisors(a.quad())) {
                if (d.is_unit()) continue;
                if (quadint_divides(d, b.quad())) return {Truth::No, DomainElem::z5(d)};
            }
            return {Truth::Yes, std::nullopt};
        }
        case DomainId::R0: {
            if (!detail::all_monomials({a, b})) return {Truth::Unknown, std::nullopt};
            ExpVec m = min(a.alg().leading(), b.alg().leading());
            if (m.is_zero()) return {Truth::Yes, std::nullopt};
            return {Truth::No, DomainElem::r0(AlgElem::monomial(m))};
        }
        case DomainId::R: {
            if (!detail::all_monomials({a, b})) return {Truth::Unknown, std::nullopt};
            ExpVec m = min(a.alg().leading(), b.alg().leading());
            // A common divisor lies below m and in Q, so it needs X/Y/Z
            // content from m; conversely half a positive coordinate works.
            if (m.xyz_sum() == 0) return {Truth::Yes, std::nullopt};
            return {Truth::No, DomainElem::r(AlgElem::monomial(detail::half_xyz(m)))};
        }
        case DomainId::DK: return {Truth::Unknown, std::nullopt};
    }
    throw std::logic_error("coprime_check: bad domain");
}

struct PrimitivityResult {
    Truth verdict;
    std::optional<DomainElem> common_divisor;  // nonunit divisor of all coefficients
    std::string note;
};

/// Is the coefficient list primitive (no common nonunit divisor)?
inline PrimitivityResult is_primitive(const DomainHandle& D, const ContentList& content) {
    const auto& cs = content.coeffs();
    for (const auto& c : cs)
        if (c.id() != D.id) throw std::invalid_argument("is_primitive: wrong domain");
    switch (D.id) {
        case DomainId::Z: {
            BigInt g = 0;
            for (const auto& c : cs) g = gcd(g, c.integer());
            if (g == 1) return {Truth::Yes, std::nullopt, "gcd of coefficients is 1"};
            return {Truth::No, DomainElem::z(g), "gcd of coefficients"};
        }
        case DomainId::Z5: {
            // Divisors of the first coefficient are finitely enumerable;
            // test each against the rest.
            for (const auto& d : quadint_divisors(cs.front().quad())) {
                if (d.is_unit()) continue;
                bool common = true;
                for (const auto& c : cs) common = common && quadint_divides(d, c.quad()).has_value();
                if (common) return {Truth::No, DomainElem::z5(d), "common divisor found"};
            }
            return {Truth::Yes, std::nullopt, "no nonunit divisor of the first coefficient is common"};
        }
        case DomainId::R0: {
            if (!detail::all_monomials(cs))
                return {Truth::Unknown, std::nullopt, "decision procedure covers monomials only"};
            ExpVec m = cs.front().alg().leading();
            for (const auto& c : cs) m = min(m, c.alg().leading());
            if (m.is_zero()) return {Truth::Yes, std::nullopt, "exponent minimum is zero"};
            return {Truth::No, DomainElem::r0(AlgElem::monomial(m)), "exponent minimum"};
        }
        case DomainId::R: {
            if (!detail::all_monomials(cs))
                return {Truth::Unknown, std::nullopt, "decision procedure covers monomials only"};
            ExpVec m = cs.front().alg().leading();
            for (const auto& c : cs) m = min(m, c.alg().leading());
            if (m.xyz_sum() == 0)
                return {Truth::Yes, std::nullopt,
                        "exponent minimum has no X/Y/Z content, so only units divide all"};
            return {Truth::No, DomainElem::r(AlgElem::monomial(detail::half_xyz(m))),
                    "half a shared X/Y/Z coordinate divides every coefficient"};
        }
        case DomainId::DK:
            return {Truth::Unknown, std::nullopt, "no primitivity procedure for this domain"};
    }
    throw std::logic_error("is_primitive: bad domain");
}

struct GaussReport {
    Truth f_primitive = Truth::Unknown;
    Truth g_primitive = Truth::Unknown;
    Truth product_primitive = Truth::Unknown;
    std::vector<DomainElem> product_coeffs;
    std::optional<DomainElem> witness_divisor;  // divides every product coefficient
};

inline DomainElem domain_zero(DomainId id) {
    switch (id) {
        case DomainId::R0: return DomainElem::r0(AlgElem::zero());
        case DomainId::R: return DomainElem::r(AlgElem::zero());
        case DomainId::Z: return DomainElem::z(0);
        case DomainId::Z5: return DomainElem::z5(QuadInt{});
        case DomainId::DK: return DomainElem::dk(DKElem::from_int(0));
    }
    throw std::logic_error("domain_zero: bad id");
}

inline DomainElem domain_one(DomainId id) {
    switch (id) {
        case DomainId::R0: return DomainElem::r0(AlgElem::one());
        case DomainId::R: return DomainElem::r(AlgElem::one());
        case DomainId::Z: return DomainElem::z(1);
        case DomainId::Z5: return DomainElem::z5(QuadInt{1, 0});
        case DomainId::DK: return DomainElem::dk(DKElem::from_int(1));
    }
    throw std::logic_error("domain_one: bad id");
}

/// Multiplies the coefficient lists of two primitive polynomials and tests
/// whether primitivity survives.  A No on the product, with its witness
/// divisor, falsifies the content product rule for the domain; inputs that
/// are definitely non-primitive are rejected.
inline GaussReport gauss_product_check(const DomainHandle& D, const std::vector<DomainElem>& f,
                                       const std::vector<DomainElem>& g) {
    GaussReport rep;
    auto fc = ContentList::make(f);
    auto gc = ContentList::make(g);
    auto fp = is_primitive(D, fc);
    auto gp = is_primitive(D, gc);
    rep.f_primitive = fp.verdict;
    rep.g_primitive = gp.verdict;
    if (fp.verdict == Truth::No || gp.verdict == Truth::No)
        throw std::invalid_argument("gauss_product_check: input polynomial is not primitive");
    rep.product_coeffs.assign(f.size() + g.size() - 1, domain_zero(D.id));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            rep.product_coeffs[i + j] = add(rep.product_coeffs[i + j], mul(f[i], g[j]));
    auto pp = is_primitive(D, ContentList::make(rep.product_coeffs));
    rep.product_primitive = pp.verdict;
    rep.witness_divisor = pp.common_divisor;
    return rep;
}

struct AQReport {
    CoprimeResult r_s, r_t, r_st;
    Truth holds = Truth::Unknown;  // (r coprime s and r coprime t) => r coprime st
    std::optional<DomainElem> st;
};

/// The gcd implication gcd(r,s) = gcd(r,t) = 1 => gcd(r,st) = 1, checked on
/// one triple.  A No (with the common divisor of r and st as witness) shows
/// the implication fails in the domain.
inline AQReport aq_triple_check(const DomainHandle& D, const DomainElem& r, const DomainElem& s,
                                const DomainElem& t) {
    AQReport rep;
    rep.st = mul(s, t);
    rep.r_s = coprime_check(D, r, s);
    rep.r_t = coprime_check(D, r, t);
    rep.r_st = coprime_check(D, r, *rep.st);
    if (rep.r_s.verdict == Truth::No || rep.r_t.verdict == Truth::No) {
        rep.holds = Truth::Yes;  // hypothesis fails, implication is vacuous
        return rep;
    }
    if (rep.r_s.verdict == Truth::Unknown || rep.r_t.verdict == Truth::Unknown) {
        rep.holds = Truth::Unknown;
        return rep;
    }
    rep.holds = rep.r_st.verdict == Truth::Yes   ? Truth::Yes
                : rep.r_st.verdict == Truth::No ? Truth::No
                                                : Truth::Unknown;
    return rep;
}

struct PrimeLikeCheckResult {
    enum class Kind { Witness, NoWitness, Unknown };
    Kind kind;
    std::optional<DomainElem> divisor;     // nonunit divisor of p
    std::optional<DivSide> side;           // which of r, s it divides
    std::optional<ProofCase> dk_case;      // populated for the composite domain
    std::optional<DomainElem> p_quotient;  // p / divisor
    std::optional<DomainElem> side_quotient;
    std::string note;
};

/// Constructive test of the prime-like property at one instance p | r*s:
/// find a nonunit divisor of p dividing r or s.  NoWitness at some instance
/// shows p is not prime-like (and with p | r*s, p coprime to r and to s, it
/// also falsifies the gcd implication at (p, r, s)).
inline PrimeLikeCheckResult prime_like_check(const DomainHandle& D, const DomainElem& p,
                                             const DomainElem& r, const DomainElem& s,
                                             const std::optional<KPoly>& oracle = std::nullopt) {
    if (p.is_zero() || p.is_unit())
        throw std::invalid_argument("prime_like_check: p must be a nonzero nonunit");
    if (r.is_zero() || s.is_zero())
        throw std::invalid_argument("prime_like_check: zero factor");
    if (!divides(p, mul(r, s)))
        throw std::invalid_argument("prime_like_check: p does not divide r*s");

    auto witness = [&](DomainElem d, DivSide side) {
        PrimeLikeCheckResult out{PrimeLikeCheckResult::Kind::Witness, d, side, std::nullopt,
                                 std::nullopt, std::nullopt, ""};
        out.p_quotient = divides(d, p);
        out.side_quotient = divides(d, side == DivSide::DividesB ? r : s);
        if (!out.p_quotient || !out.side_quotient)
            throw std::logic_error("prime_like_check: witness verification failed");
        return out;
    };

    switch (D.id) {
        case DomainId::Z: {
            for (const auto& [q, e] : detail::factorize(p.integer())) {
                DomainElem d = DomainElem::z(q);
                if (divides(d, r)) return witness(d, DivSide::DividesB);
                if (divides(d, s)) return witness(d, DivSide::DividesC);
            }
            return {PrimeLikeCheckResult::Kind::NoWitness, std::nullopt, std::nullopt,
                    std::nullopt, std::nullopt, std::nullopt,
                    "no prime of p divides either factor"};
        }
        case DomainId::Z5: {
            for (const auto& d : quadint_divisors(p.quad())) {
                if (d.is_unit()) continue;
                DomainElem dd = DomainElem::z5(d);
                if (divides(dd, r)) return witness(dd, DivSide::DividesB);
                if (divides(dd, s)) return witness(dd, DivSide::DividesC);
            }
            return {PrimeLikeCheckResult::Kind::NoWitness, std::nullopt, std::nullopt,
                    std::nullopt, std::nullopt, std::nullopt,
                    "every nonunit divisor of p divides neither factor"};
        }
        case DomainId::R0: {
            if (!detail::all_monomials({p, r, s}))
                return {PrimeLikeCheckResult::Kind::Unknown, std::nullopt, std::nullopt,
                        std::nullopt, std::nullopt, std::nullopt,
                        "procedure covers monomials only"};
            ExpVec m = min(p.alg().leading(), r.alg().leading());
            if (!m.is_zero()) return witness(DomainElem::r0(AlgElem::monomial(m)), DivSide::DividesB);
            m = min(p.alg().leading(), s.alg().leading());
            if (!m.is_zero()) return witness(DomainElem::r0(AlgElem::monomial(m)), DivSide::DividesC);
            return {PrimeLikeCheckResult::Kind::NoWitness, std::nullopt, std::nullopt,
                    std::nullopt, std::nullopt, std::nullopt,
                    "p shares no exponent content with either factor"};
        }
        case DomainId::R: {
            if (!detail::all_monomials({p, r, s}))
                return {PrimeLikeCheckResult::Kind::Unknown, std::nullopt, std::nullopt,
                        std::nullopt, std::nullopt, std::nullopt,
                        "procedure covers monomials only"};
            ExpVec m = min(p.alg().leading(), r.alg().leading());
            if (m.xyz_sum() > 0)
                return witness(DomainElem::r(AlgElem::monomial(detail::half_xyz(m))),
                               DivSide::DividesB);
            m = min(p.alg().leading(), s.alg().leading());
            if (m.xyz_sum() > 0)
                return witness(DomainElem::r(AlgElem::monomial(detail::half_xyz(m))),
                               DivSide::DividesC);
            return {PrimeLikeCheckResult::Kind::NoWitness, std::nullopt, std::nullopt,
                    std::nullopt, std::nullopt, std::nullopt,
                    "p shares no X/Y/Z content with either factor"};
        }
        case DomainId::DK: {
            auto res = prime_like_witness(p.dkelem(), r.dkelem(), s.dkelem(), oracle);
            if (std::holds_alternative<PrimeLikeError>(res)) {
                const auto& err = std::get<PrimeLikeError>(res);
                if (err.kind == PrimeLikeError::Kind::OracleNeeded)
                    return {PrimeLikeCheckResult::Kind::Unknown, std::nullopt, std::nullopt,
                            std::nullopt, std::nullopt, std::nullopt, err.detail};
                throw std::invalid_argument("prime_like_check: " + err.detail);
            }
            const auto& w = std::get<PrimeLikeWitness>(res);
            PrimeLikeCheckResult out{PrimeLikeCheckResult::Kind::Witness,
                                     DomainElem::dk(w.divisor),
                                     w.side,
                                     w.case_used,
                                     DomainElem::dk(w.r_quotient),
                                     DomainElem::dk(w.side_quotient),
                                     ""};
            return out;
        }
    }
    throw std::logic_error("prime_like_check: bad domain");
}

struct PrimalDecomposition {
    DomainElem r_part;     // divides a
    DomainElem s_part;     // divides b
    DomainElem unit_slack; // p = r_part * s_part * unit_slack
};

struct PrimalOutcome {
    enum class Kind { Decomposed, NotPrimal, Unknown };
    Kind kind;
    std::optional<PrimalDecomposition> parts;
    std::string note;
};

/// Splits p along p | a*b as p = d*d'*u with d | a, d' | b, u a unit, by the
/// chain d = mcd(p, a), d' = mcd(p/d, b).  Constructive where maximal common
/// divisors are (gcds in Z; exponent minima for R0 monomials; for R
/// monomials only when the candidate minimum certifies itself).
inline PrimalOutcome primal_decompose(const DomainHandle& D, const DomainElem& p,
                                      const DomainElem& a, const DomainElem& b) {
    if (p.is_zero()) throw std::invalid_argument("primal_decompose: p must be nonzero");
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("primal_decompose: zero factor");
    if (!divides(p, mul(a, b)))
        throw std::invalid_argument("primal_decompose: p does not divide a*b");

    auto deliver = [&](DomainElem d, DomainElem d2, DomainElem u) -> PrimalOutcome {
        if (!u.is_unit()) return {PrimalOutcome::Kind::NotPrimal, std::nullopt,
                                  "chain leaves nonunit slack " + to_string(u)};
        if (!(mul(mul(d, d2), u) == p) || !divides(d, a) || !divides(d2, b))
            throw std::logic_error("primal_decompose: verification failed");
        return {PrimalOutcome::Kind::Decomposed, PrimalDecomposition{d, d2, u}, ""};
    };

    switch (D.id) {
        case DomainId::Z: {
            BigInt d = gcd(p.integer(), a.integer());
            BigInt p1 = p.integer() / d;
            BigInt d2 = gcd(p1, b.integer());
            return deliver(DomainElem::z(d), DomainElem::z(d2), DomainElem::z(p1 / d2));
        }
        case DomainId::R0: {
            if (!detail::all_monomials({p, a, b}))
                return {PrimalOutcome::Kind::Unknown, std::nullopt,
                        "procedure covers monomials only"};
            ExpVec ep = p.alg().leading();
            ExpVec d = min(ep, a.alg().leading());
            ExpVec p1 = *sub(ep, d);
            ExpVec d2 = min(p1, b.alg().leading());
            ExpVec u = *sub(p1, d2);
            return deliver(DomainElem::r0(AlgElem::monomial(d)),
                           DomainElem::r0(AlgElem::monomial(d2)),
                           DomainElem::r0(AlgElem::monomial(u)));
        }
        case DomainId::R: {
            if (!detail::all_monomials({p, a, b}))
                return {PrimalOutcome::Kind::Unknown, std::nullopt,
                        "procedure covers monomials only"};
            ExpVec ep = p.alg().leading(), ea = a.alg().leading(), eb = b.alg().leading();
            // The exponent minimum is the top common lower bound; it is a
            // maximal common divisor precisely when it and both cofactors
            // stay in Q.  Otherwise no certificate is produced.
            ExpVec d = min(ep, ea);
            if (!in_Q(d) || !in_Q(*sub(ep, d)) || !in_Q(*sub(ea, d)))
                return {PrimalOutcome::Kind::Unknown, std::nullopt,
                        "no certified maximal common divisor for (p, a)"};
            ExpVec p1 = *sub(ep, d);
            ExpVec d2 = min(p1, eb);
            if (!in_Q(d2) || !in_Q(*sub(p1, d2)) || !in_Q(*sub(eb, d2)))
                return {PrimalOutcome::Kind::Unknown, std::nullopt,
                        "no certified maximal common divisor for (p/d, b)"};
            ExpVec u = *sub(p1, d2);
            return deliver(DomainElem::r(AlgElem::monomial(d)),
                           DomainElem::r(AlgElem::monomial(d2)),
                           DomainElem::r(AlgElem::monomial(u)));
        }
        case DomainId::Z5:
        case DomainId::DK:
            return {PrimalOutcome::Kind::Unknown, std::nullopt,
                    "no maximal-common-divisor procedure for this domain"};
    }
    throw std::logic_error("primal_decompose: bad domain");
}

}  // namespace divlab
