#pragma once

#include "divlab/kpoly.hpp"
#include "divlab/report.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace divlab {

/// Element of the composite domain Z + x*K[x] with K = Q(sqrt(2)):
/// polynomials over K whose constant coefficient is a rational integer.
/// Units are +1 and -1 (a unit must be a unit of K[x], hence a constant,
/// hence an invertible integer).
class DKElem {
public:
    static std::optional<DKElem> make(KPoly f) {
        QuadRat c0 = f.coeff(0);
        if (c0.q != 0 || !is_integer(c0.p)) return std::nullopt;
        return DKElem(std::move(f));
    }
    static DKElem from_int(BigInt n) { return DKElem(KPoly::constant(QuadRat{Rational(n)})); }

    const KPoly& poly() const { return p_; }
    BigInt constant_term() const { return numerator(p_.coeff(0).p); }
    bool is_zero() const { return p_.is_zero(); }
    bool is_unit() const {
        return p_.degree() == 0 && (constant_term() == 1 || constant_term() == -1);
    }

    friend DKElem operator+(const DKElem& a, const DKElem& b) { return DKElem(a.p_ + b.p_); }
    friend DKElem operator-(const DKElem& a, const DKElem& b) { return DKElem(a.p_ - b.p_); }
    friend DKElem operator*(const DKElem& a, const DKElem& b) { return DKElem(a.p_ * b.p_); }
    friend bool operator==(const DKElem& a, const DKElem& b) = default;

private:
    explicit DKElem(KPoly p) : p_(std::move(p)) {}
    KPoly p_;
};

inline std::optional<DKElem> dk_member(const KPoly& f) { return DKElem::make(f); }

inline std::string to_string(const DKElem& f) { return to_string(f.poly()); }

/// Quotient g/f when f divides g inside Z + x*K[x], else nullopt.  Division
/// happens in K[x]; the quotient must then have an integral constant term.
inline std::optional<DKElem> dk_divides(const DKElem& f, const DKElem& g) {
    if (f.is_zero()) throw std::invalid_argument("dk_divides: division by zero");
    auto [q, r] = kpoly_divmod(g.poly(), f.poly());
    if (!r.is_zero()) return std::nullopt;
    return DKElem::make(q);
}

/// Order at zero (index of the lowest nonzero coefficient); input nonzero.
inline std::size_t dk_ord(const DKElem& f) { return f.poly().ord(); }

enum class DivSide { DividesB, DividesC };

enum class ProofCase {
    OrdPositive,     // r(0) = 0: the integer 2 divides r and the factor of positive order
    ConstantPrime,   // |r(0)| >= 2: a prime of r(0) divides r and one constant term
    PolyPrime        // r(0) = +-1: a normalized prime of K[x] divides r and one factor
};

struct PrimeLikeWitness {
    DKElem divisor;        // nonunit divisor of r
    DivSide side;
    ProofCase case_used;
    DKElem r_quotient;     // r / divisor
    DKElem side_quotient;  // b / divisor or c / divisor
};

struct PrimeLikeError {
    enum class Kind { PreconditionFailed, OracleNeeded, OracleInvalid };
    Kind kind;
    std::string detail;
};

namespace detail {
/// Smallest prime of |n| (>= 2) preferring one that divides m, so the
/// witness can point at a definite side.
inline BigInt prime_of_preferring(const BigInt& n, const BigInt& m) {
    auto factors = factorize(n);
    for (const auto& [p, e] : factors)
        if (m % p == 0) return p;
    return factors.begin()->first;
}
}  // namespace detail

/// Constructive form of the prime-divisor property for r | b*c in
/// Z + x*K[x]: produces a nonunit divisor of r dividing b or c.  The case
/// split follows the order and constant term of r; when r(0) = +-1 and
/// deg r > 3 a prime factor of r in K[x] must be supplied as oracle.
/// Every returned witness is re-verified through dk_divides.
inline std::variant<PrimeLikeWitness, PrimeLikeError> prime_like_witness(
    const DKElem& r, const DKElem& b, const DKElem& c,
    const std::optional<KPoly>& oracle = std::nullopt) {
    using Err = PrimeLikeError;
    if (r.is_zero() || r.is_unit())
        return Err{Err::Kind::PreconditionFailed, "r must be a nonzero nonunit"};
    if (b.is_zero() || b.is_unit())
        return Err{Err::Kind::PreconditionFailed, "b must be a nonzero nonunit"};
    if (c.is_zero() || c.is_unit())
        return Err{Err::Kind::PreconditionFailed, "c must be a nonzero nonunit"};
    if (!dk_divides(r, b * c))
        return Err{Err::Kind::PreconditionFailed, "r does not divide b*c"};

    auto finish = [&](DKElem d, DivSide side, ProofCase pc) -> std::variant<PrimeLikeWitness, Err> {
        auto rq = dk_divides(d, r);
        auto sq = dk_divides(d, side == DivSide::DividesB ? b : c);
        if (!rq || !sq || d.is_unit() || d.is_zero())
            throw std::logic_error("prime_like_witness: verification failed");
        return PrimeLikeWitness{std::move(d), side, pc, std::move(*rq), std::move(*sq)};
    };

    if (dk_ord(r) >= 1) {
        // ord(b) + ord(c) >= ord(r) >= 1, so one factor vanishes at 0; both
        // it and r are divisible by 2 (halved coefficients keep the zero
        // constant term integral).
        DivSide side = b.poly().coeff(0).is_zero() ? DivSide::DividesB : DivSide::DividesC;
        return finish(DKElem::from_int(2), side, ProofCase::OrdPositive);
    }

    BigInt r0 = r.constant_term();
    if (r0 != 1 && r0 != -1) {
        // r(0) divides b(0)*c(0) in Z, so any prime of r(0) divides one of
        // the constant terms, and that prime divides the whole factor.
        BigInt p = detail::prime_of_preferring(r0, b.constant_term());
        DivSide side = b.constant_term() % p == 0 ? DivSide::DividesB : DivSide::DividesC;
        return finish(DKElem::from_int(p), side, ProofCase::ConstantPrime);
    }

    // r(0) = +-1: pick a K[x]-prime factor of r; rescaled to constant term 1
    // it lies in the domain, and it divides whichever of b, c it divides in
    // K[x] (the quotient inherits that factor's integer constant term).
    KPoly rn = QuadRat{Rational(r0)} * r.poly();  // constant term 1, same divisor set
    KPoly prime;
    if (oracle) {
        auto verified = kpoly_verify_oracle_factor(rn, *oracle);
        if (!verified) return Err{Err::Kind::OracleInvalid, "oracle is not a nonunit factor"};
        prime = *verified;
    } else {
        auto found = kpoly_prime_factor(rn);
        if (std::holds_alternative<NeedOracle>(found))
            return Err{Err::Kind::OracleNeeded, std::get<NeedOracle>(found).reason};
        prime = std::get<KPoly>(found);
    }
    QuadRat p0 = prime.eval(QuadRat{});
    if (p0.is_zero()) throw std::logic_error("prime_like_witness: factor vanishes at 0");
    KPoly scaled = p0.inverse() * prime;  // constant term 1: a domain element
    auto d = DKElem::make(scaled);
    if (!d) throw std::logic_error("prime_like_witness: scaled factor left the domain");
    if (dk_divides(*d, b)) return finish(*d, DivSide::DividesB, ProofCase::PolyPrime);
    if (dk_divides(*d, c)) return finish(*d, DivSide::DividesC, ProofCase::PolyPrime);
    return Err{Err::Kind::OracleInvalid, "supplied factor divides neither b nor c"};
}

/// x divides the product (sqrt(2)*x) * ((sqrt(2)/2)*x) = x^2 yet no
/// factorization of x splits across the two factors: every splitting is
/// x = d * ((1/d)*x) with d a nonzero integer, and the linear part divides
/// neither sqrt(2)*x nor (sqrt(2)/2)*x because the would-be quotients
/// d*sqrt(2) and d*sqrt(2)/2 have a nonzero sqrt(2)-coordinate, hence are
/// never integers.  So x is not primal: no splitting of x tracks the two
/// factors of the product it divides.
inline WitnessReport x_not_primal_check() {
    auto t0 = std::chrono::steady_clock::now();
    WitnessReport rep;
    rep.name = "x-not-primal";
    rep.claim = "in Z + x*K[x], x divides (sqrt(2)*x)*((sqrt(2)/2)*x) but no factorization "
                "x = u*v has u dividing the first factor and v the second";
    auto X = *DKElem::make(KPoly::x());
    auto A = *DKElem::make(KPoly::from_coeffs({QuadRat{}, QuadRat{0, 1}}));               // sqrt(2)*x
    auto B = *DKElem::make(KPoly::from_coeffs({QuadRat{}, QuadRat{0, Rational(1, 2)}}));  // (sqrt(2)/2)*x
    rep.inputs = {to_string(X), to_string(A), to_string(B)};

    auto record = [&](std::string name, bool ok, std::string note) {
        rep.details.push_back({std::move(name), ok, std::move(note)});
    };

    auto prod = A * B;
    auto q = dk_divides(X, prod);
    record("x divides the product", q.has_value(), q ? "quotient " + to_string(*q) : "no quotient");
    record("product equals x^2", prod == X * X, to_string(prod));
    record("x itself divides neither factor",
           !dk_divides(X, A).has_value() && !dk_divides(X, B).has_value(),
           "quotients sqrt(2) and sqrt(2)/2 are not integers");

    // Parametric discharge: in x = d * ((1/d)*x), pairing d with the first
    // factor forces (1/d)*x to divide (sqrt(2)/2)*x, and the other pairing
    // forces (1/d)*x to divide sqrt(2)*x; both quotients are integer
    // multiples of an element with nonzero sqrt(2)-coordinate.
    QuadRat root2{0, 1}, half_root2{0, Rational(1, 2)};
    record("d*sqrt(2) and d*sqrt(2)/2 are irrational for every integer d != 0",
           root2.q != 0 && half_root2.q != 0,
           "sqrt(2)-coordinate of the quotient is d or d/2, never zero");
    bool samples = true;
    for (int d : {1, -1, 2, -2, 3, 5, 7}) {
        DKElem lin = *DKElem::make(KPoly::constant(QuadRat{Rational(1) / d}) * KPoly::x());
        samples = samples && !dk_divides(lin, A).has_value() && !dk_divides(lin, B).has_value();
    }
    record("sampled cofactors (1/d)*x divide neither factor", samples,
           "checked d in {1,-1,2,-2,3,5,7}");

    rep.reproduced = true;
    for (const auto& c : rep.details) rep.reproduced = rep.reproduced && c.passed;
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace divlab
