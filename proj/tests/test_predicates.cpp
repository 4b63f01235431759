#include <catch2/catch_amalgamated.hpp>

#include "divlab/predicates.hpp"
#include "divlab/random.hpp"

using namespace divlab;

namespace {

using V = ExpVec;

DomainElem m0(const V& m) { return DomainElem::r0(AlgElem::monomial(m)); }
DomainElem mr(const V& m) { return DomainElem::r(AlgElem::monomial(m)); }
DomainElem zi(long n) { return DomainElem::z(BigInt(n)); }
DomainElem q5(long a, long b) { return DomainElem::z5(QuadInt{BigInt(a), BigInt(b)}); }

DomainElem dke(std::vector<QuadRat> c) {
    auto e = DKElem::make(KPoly::from_coeffs(std::move(c)));
    REQUIRE(e.has_value());
    return DomainElem::dk(*e);
}

const DomainHandle R0 = domain_handle(DomainId::R0);
const DomainHandle R = domain_handle(DomainId::R);
const DomainHandle Z = domain_handle(DomainId::Z);
const DomainHandle Z5 = domain_handle(DomainId::Z5);
const DomainHandle DK = domain_handle(DomainId::DK);

const V sy = V::make(1, 1, 0, 1);
const V sz = V::make(1, 0, 1, 1);
const V b1 = V::make(1, 0, 0, 1, {{1, -1}});
const V yt1 = V::make(0, 1, 0, 0, {{1, 1}});
const V zt1 = V::make(0, 0, 1, 0, {{1, 1}});
const V yt2 = V::make(0, 1, 0, 0, {{2, 1}});
const V zt2 = V::make(0, 0, 1, 0, {{2, 1}});

}  // namespace

TEST_CASE("capability flags per domain") {
    CHECK(Z.caps.has_gcd);
    CHECK(Z.caps.has_divisor_enumeration);
    CHECK(R0.caps.has_gcd);
    CHECK(R0.caps.has_mcd_verify);
    CHECK(R0.caps.units_trivial);
    CHECK_FALSE(R.caps.has_gcd);
    CHECK(R.caps.has_mcd_verify);
    CHECK(Z5.caps.has_divisor_enumeration);
    CHECK_FALSE(Z5.caps.has_gcd);
    CHECK_FALSE(DK.caps.has_gcd);
    CHECK_FALSE(DK.caps.has_divisor_enumeration);
}

TEST_CASE("coprimality per domain") {
    CHECK(coprime_check(Z, zi(4), zi(9)).verdict == Truth::Yes);
    auto c1 = coprime_check(Z, zi(4), zi(6));
    CHECK(c1.verdict == Truth::No);
    CHECK(*c1.witness == zi(2));

    CHECK(coprime_check(Z5, q5(2, 0), q5(1, 1)).verdict == Truth::Yes);
    auto c2 = coprime_check(Z5, q5(2, 0), q5(4, 2));
    CHECK(c2.verdict == Truth::No);
    CHECK(*c2.witness == q5(2, 0));

    CHECK(coprime_check(R0, m0(V::X(1)), m0(V::Y(1))).verdict == Truth::Yes);
    auto c3 = coprime_check(R0, m0(V::make(1, 1, 0, 0)), m0(V::make(1, 0, 1, 0)));
    CHECK(c3.verdict == Truth::No);
    CHECK(*c3.witness == m0(V::X(1)));

    // In the subring a common divisor must carry X/Y/Z content.
    CHECK(coprime_check(R, mr(yt1), mr(zt1)).verdict == Truth::Yes);
    auto c4 = coprime_check(R, mr(sy), mr(sz));
    CHECK(c4.verdict == Truth::No);
    CHECK(*c4.witness == mr(V::X(Rational(1, 2))));
    CHECK(divides(*c4.witness, mr(sy)).has_value());
    CHECK(divides(*c4.witness, mr(sz)).has_value());

    DomainElem sum = DomainElem::r0(AlgElem::monomial(V::X(1)) + AlgElem::monomial(V::Y(1)));
    CHECK(coprime_check(R0, sum, m0(V::X(1))).verdict == Truth::Unknown);
    CHECK(coprime_check(DK, dke({QuadRat{2}}), dke({QuadRat{3}})).verdict == Truth::Unknown);

    CHECK_THROWS_AS(coprime_check(Z, zi(0), zi(3)), std::invalid_argument);
}

TEST_CASE("content lists drop zeros and reject degenerate input") {
    auto cl = ContentList::make({zi(0), zi(5), zi(7)});
    CHECK(cl.coeffs().size() == 2);
    CHECK_THROWS_AS(ContentList::make({zi(0), zi(0)}), std::invalid_argument);
    CHECK_THROWS_AS(ContentList::make({zi(1), q5(1, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(is_primitive(Z, ContentList::make({q5(2, 0)})), std::invalid_argument);
}

TEST_CASE("primitivity verdicts") {
    // The only common lower bound of {Y*T[1], Z*T[1]} in the subring is a unit.
    CHECK(is_primitive(R, ContentList::make({mr(yt1), mr(zt1)})).verdict == Truth::Yes);
    // In the full monoid algebra the shared T[1] factor is a real divisor.
    auto amb = is_primitive(R0, ContentList::make({m0(yt1), m0(zt1)}));
    CHECK(amb.verdict == Truth::No);
    CHECK(*amb.common_divisor == m0(V::T(1, 1)));

    CHECK(is_primitive(Z5, ContentList::make({q5(2, 0), q5(1, 1)})).verdict == Truth::Yes);
    auto p46 = is_primitive(Z5, ContentList::make({q5(4, 0), q5(4, 0), q5(6, 0)}));
    CHECK(p46.verdict == Truth::No);
    CHECK(*p46.common_divisor == q5(2, 0));

    CHECK(is_primitive(Z, ContentList::make({zi(6), zi(10), zi(15)})).verdict == Truth::Yes);
    auto zg = is_primitive(Z, ContentList::make({zi(4), zi(6)}));
    CHECK(zg.verdict == Truth::No);
    CHECK(*zg.common_divisor == zi(2));

    DomainElem sum = DomainElem::r(AlgElem::monomial(sy) + AlgElem::monomial(sz));
    CHECK(is_primitive(R, ContentList::make({sum})).verdict == Truth::Unknown);
    CHECK(is_primitive(DK, ContentList::make({dke({QuadRat{2}})})).verdict == Truth::Unknown);
}

TEST_CASE("primitivity is monotone under extending the list") {
    Rng rng(5150);
    for (int i = 0; i < 200; ++i) {
        std::vector<DomainElem> zs;
        for (std::size_t k = rng.range(1, 3); k-- > 0;)
            zs.push_back(zi(static_cast<long>(random_int(rng, 1, 200).convert_to<long long>())));
        Truth before = is_primitive(Z, ContentList::make(zs)).verdict;
        zs.push_back(zi(static_cast<long>(random_int(rng, 1, 200).convert_to<long long>())));
        Truth after = is_primitive(Z, ContentList::make(zs)).verdict;
        if (before == Truth::Yes) CHECK(after == Truth::Yes);

        std::vector<DomainElem> ms;
        for (std::size_t k = rng.range(1, 3); k-- > 0;)
            ms.push_back(m0(random_p_monomial(rng)));
        Truth b2 = is_primitive(R0, ContentList::make(ms)).verdict;
        ms.push_back(m0(random_p_monomial(rng)));
        Truth a2 = is_primitive(R0, ContentList::make(ms)).verdict;
        if (b2 == Truth::Yes) CHECK(a2 == Truth::Yes);
    }
}

TEST_CASE("content product rule fails over Z[sqrt(-5)]") {
    auto rep = gauss_product_check(Z5, {q5(2, 0), q5(1, 1)}, {q5(2, 0), q5(1, -1)});
    CHECK(rep.f_primitive == Truth::Yes);
    CHECK(rep.g_primitive == Truth::Yes);
    REQUIRE(rep.product_coeffs.size() == 3);
    CHECK(rep.product_coeffs[0] == q5(4, 0));
    CHECK(rep.product_coeffs[1] == q5(4, 0));
    CHECK(rep.product_coeffs[2] == q5(6, 0));
    CHECK(rep.product_primitive == Truth::No);
    REQUIRE(rep.witness_divisor.has_value());
    CHECK(*rep.witness_divisor == q5(2, 0));
    for (const auto& c : rep.product_coeffs)
        CHECK(divides(*rep.witness_divisor, c).has_value());
}

TEST_CASE("content product rule holds over Z") {
    auto rep = gauss_product_check(Z, {zi(2), zi(3)}, {zi(3), zi(2)});
    CHECK(rep.product_primitive == Truth::Yes);
    REQUIRE(rep.product_coeffs.size() == 3);
    CHECK(rep.product_coeffs[0] == zi(6));
    CHECK(rep.product_coeffs[1] == zi(13));
    CHECK(rep.product_coeffs[2] == zi(6));

    CHECK_THROWS_AS(gauss_product_check(Z, {zi(2), zi(4)}, {zi(3), zi(2)}),
                    std::invalid_argument);
}

TEST_CASE("content product rule on subring witness pair") {
    // (YT1 + ZT1 x)(YT2 + ZT2 x): the middle coefficient cancels mod 2, the
    // two survivors share only T content, so the product stays primitive.
    auto rep = gauss_product_check(R, {mr(yt1), mr(zt1)}, {mr(yt2), mr(zt2)});
    CHECK(rep.f_primitive == Truth::Yes);
    CHECK(rep.g_primitive == Truth::Yes);
    REQUIRE(rep.product_coeffs.size() == 3);
    CHECK(rep.product_coeffs[1].is_zero());
    CHECK(rep.product_primitive == Truth::Yes);
    CHECK_FALSE(rep.witness_divisor.has_value());
}

TEST_CASE("content product rule never fails over Z on random primitive pairs") {
    Rng rng(31337);
    auto primitive_list = [&](std::size_t n) {
        std::vector<DomainElem> out;
        for (;;) {
            out.clear();
            BigInt g = 0;
            for (std::size_t i = 0; i < n; ++i) {
                BigInt v = random_int(rng, -20, 20);
                g = gcd(g, v);
                out.push_back(DomainElem::z(v));
            }
            if (g == 1) return out;
        }
    };
    for (int i = 0; i < 1000; ++i) {
        auto f = primitive_list(rng.range(2, 4));
        auto g = primitive_list(rng.range(2, 4));
        auto rep = gauss_product_check(Z, f, g);
        CHECK(rep.product_primitive == Truth::Yes);
    }
}

TEST_CASE("gcd implication triples") {
    auto viol = aq_triple_check(Z5, q5(2, 0), q5(1, 1), q5(1, -1));
    CHECK(viol.r_s.verdict == Truth::Yes);
    CHECK(viol.r_t.verdict == Truth::Yes);
    CHECK(viol.r_st.verdict == Truth::No);
    CHECK(viol.holds == Truth::No);
    CHECK(*viol.st == q5(6, 0));
    CHECK(*viol.r_st.witness == q5(2, 0));

    CHECK(aq_triple_check(R, mr(V::X(1)), mr(V::Y(1)), mr(V::Z(1))).holds == Truth::Yes);
    CHECK(aq_triple_check(Z, zi(4), zi(3), zi(5)).holds == Truth::Yes);

    // Failed hypothesis makes the implication vacuously true.
    auto vac = aq_triple_check(Z, zi(4), zi(6), zi(9));
    CHECK(vac.r_s.verdict == Truth::No);
    CHECK(vac.holds == Truth::Yes);

    CHECK(aq_triple_check(DK, dke({QuadRat{2}}), dke({QuadRat{3}}), dke({QuadRat{5}})).holds ==
          Truth::Unknown);
}

TEST_CASE("shared-divisor search per domain") {
    auto no = prime_like_check(Z5, q5(2, 0), q5(1, 1), q5(1, -1));
    CHECK(no.kind == PrimeLikeCheckResult::Kind::NoWitness);
    CHECK_FALSE(no.divisor.has_value());

    auto wz = prime_like_check(Z, zi(6), zi(4), zi(9));
    REQUIRE(wz.kind == PrimeLikeCheckResult::Kind::Witness);
    CHECK(*wz.divisor == zi(2));
    CHECK(*wz.side == DivSide::DividesB);
    CHECK(*wz.p_quotient == zi(3));
    CHECK(*wz.side_quotient == zi(2));

    auto w0 = prime_like_check(R0, m0(V::make(1, 1, 0, 0)), m0(V::X(1)), m0(V::Y(1)));
    REQUIRE(w0.kind == PrimeLikeCheckResult::Kind::Witness);
    CHECK(*w0.divisor == m0(V::X(1)));
    CHECK(*w0.side == DivSide::DividesB);

    DomainElem p = mr(V::X(1));
    DomainElem r = mr(V::make(Rational(1, 2), 1, 0, 0));
    DomainElem s = mr(V::make(Rational(1, 2), 0, 1, 0));
    auto wr = prime_like_check(R, p, r, s);
    REQUIRE(wr.kind == PrimeLikeCheckResult::Kind::Witness);
    CHECK(*wr.side == DivSide::DividesB);
    CHECK_FALSE(wr.divisor->is_unit());
    CHECK(mul(*wr.divisor, *wr.p_quotient) == p);
    CHECK(mul(*wr.divisor, *wr.side_quotient) == r);
    // The half-coordinate X^(1/2) is itself a valid certificate for this
    // instance; any verified divisor is accepted, not one canonical answer.
    CHECK(divides(mr(V::X(Rational(1, 2))), p).has_value());
    CHECK(divides(mr(V::X(Rational(1, 2))), r).has_value());

    CHECK_THROWS_AS(prime_like_check(Z, zi(1), zi(4), zi(9)), std::invalid_argument);
    CHECK_THROWS_AS(prime_like_check(Z, zi(5), zi(2), zi(3)), std::invalid_argument);
    CHECK_THROWS_AS(prime_like_check(Z, zi(6), zi(0), zi(6)), std::invalid_argument);
}

TEST_CASE("shared-divisor search drives the polynomial procedure") {
    DomainElem p = dke({QuadRat{1}, QuadRat{0}, QuadRat{0}, QuadRat{0}, QuadRat{1}});  // 1+x^4
    DomainElem s = dke({QuadRat{1}, QuadRat{1}});
    DomainElem r = mul(p, s);

    auto unknown = prime_like_check(DK, p, r, s);
    CHECK(unknown.kind == PrimeLikeCheckResult::Kind::Unknown);

    QuadRat r2{Rational(0), Rational(1)};
    KPoly factor = KPoly::from_coeffs({QuadRat{1}, -r2, QuadRat{1}});
    auto w = prime_like_check(DK, p, r, s, factor);
    REQUIRE(w.kind == PrimeLikeCheckResult::Kind::Witness);
    REQUIRE(w.dk_case.has_value());
    CHECK(*w.dk_case == ProofCase::PolyPrime);
    CHECK(mul(*w.divisor, *w.p_quotient) == p);
    CHECK(mul(*w.divisor, *w.side_quotient) == r);

    KPoly bad = KPoly::from_coeffs({QuadRat{1}, QuadRat{1}});
    CHECK_THROWS_AS(prime_like_check(DK, p, r, s, bad), std::invalid_argument);
}

TEST_CASE("primal decomposition in Z with exhaustive cross-check") {
    auto out = primal_decompose(Z, zi(6), zi(4), zi(9));
    REQUIRE(out.kind == PrimalOutcome::Kind::Decomposed);
    CHECK(out.parts->r_part == zi(2));
    CHECK(out.parts->s_part == zi(3));
    CHECK(out.parts->unit_slack == zi(1));

    // Brute force over all positive factorizations of 6 agrees that a
    // splitting exists and that (2, 3) is one of them.
    std::vector<std::pair<BigInt, BigInt>> valid;
    for (const BigInt& d : detail::divisors(BigInt(6))) {
        BigInt d2 = 6 / d;
        if (4 % d == 0 && 9 % d2 == 0) valid.emplace_back(d, d2);
    }
    CHECK(std::find(valid.begin(), valid.end(),
                    std::pair<BigInt, BigInt>(BigInt(2), BigInt(3))) != valid.end());
    CHECK(std::find(valid.begin(), valid.end(),
                    std::pair<BigInt, BigInt>(out.parts->r_part.integer(),
                                              out.parts->s_part.integer())) != valid.end());

    auto triv = primal_decompose(Z, zi(7919), zi(7919), zi(1));
    REQUIRE(triv.kind == PrimalOutcome::Kind::Decomposed);
    CHECK(triv.parts->r_part == zi(7919));
    CHECK(triv.parts->s_part == zi(1));
    CHECK(triv.parts->unit_slack == zi(1));
}

TEST_CASE("primal decomposition on monomials") {
    auto out = primal_decompose(R0, m0(V::make(1, 1, 0, 0)), m0(V::make(1, 0, 1, 0)),
                                m0(V::make(0, 2, 1, 0)));
    REQUIRE(out.kind == PrimalOutcome::Kind::Decomposed);
    CHECK(out.parts->r_part == m0(V::X(1)));
    CHECK(out.parts->s_part == m0(V::Y(1)));
    CHECK(out.parts->unit_slack.is_unit());

    // In the subring the same chain works when every intermediate quantity
    // certifies its membership.
    auto rs = primal_decompose(R, mr(sy), mr(b1), mr(yt1));
    REQUIRE(rs.kind == PrimalOutcome::Kind::Decomposed);
    CHECK(rs.parts->r_part == mr(b1));
    CHECK(rs.parts->s_part == mr(yt1));
    CHECK(rs.parts->unit_slack.is_unit());

    // min(X*T1, Y*T1) = T1 falls outside the subring: no certificate.
    auto u1 = primal_decompose(R, mr(V::make(1, 0, 0, 0, {{1, 1}})),
                               mr(V::make(0, 1, 0, 0, {{1, 1}})), mr(V::X(1)));
    CHECK(u1.kind == PrimalOutcome::Kind::Unknown);
    CHECK(u1.note.find("(p, a)") != std::string::npos);

    // Second step: b / mcd(p/d, b) = U is outside the subring.
    auto u2 = primal_decompose(R, mr(V::make(1, 1, 0, 0)), mr(V::Y(2)), mr(V::make(1, 0, 0, 1)));
    CHECK(u2.kind == PrimalOutcome::Kind::Unknown);
    CHECK(u2.note.find("(p/d, b)") != std::string::npos);

    DomainElem sum = DomainElem::r0(AlgElem::monomial(V::X(1)) + AlgElem::monomial(V::Y(1)));
    CHECK(primal_decompose(R0, sum, sum, m0(V::X(1))).kind == PrimalOutcome::Kind::Unknown);

    CHECK(primal_decompose(Z5, q5(2, 0), q5(2, 0), q5(3, 0)).kind == PrimalOutcome::Kind::Unknown);
    CHECK(primal_decompose(DK, dke({QuadRat{2}}), dke({QuadRat{2}}), dke({QuadRat{3}})).kind ==
          PrimalOutcome::Kind::Unknown);

    CHECK_THROWS_AS(primal_decompose(Z, zi(0), zi(2), zi(3)), std::invalid_argument);
    CHECK_THROWS_AS(primal_decompose(Z, zi(6), zi(0), zi(3)), std::invalid_argument);
    CHECK_THROWS_AS(primal_decompose(Z, zi(6), zi(2), zi(5)), std::invalid_argument);
}

TEST_CASE("primal decompositions re-verify on random instances") {
    Rng rng(2718);
    for (int i = 0; i < 300; ++i) {
        BigInt u = random_int(rng, 2, 60), v = random_int(rng, 2, 60);
        BigInt a = u * random_int(rng, 1, 30), b = v * random_int(rng, 1, 30);
        auto out = primal_decompose(Z, DomainElem::z(u * v), DomainElem::z(a), DomainElem::z(b));
        REQUIRE(out.kind == PrimalOutcome::Kind::Decomposed);
        CHECK(mul(mul(out.parts->r_part, out.parts->s_part), out.parts->unit_slack) ==
              DomainElem::z(u * v));
        CHECK(divides(out.parts->r_part, DomainElem::z(a)).has_value());
        CHECK(divides(out.parts->s_part, DomainElem::z(b)).has_value());
    }
    for (int i = 0; i < 300; ++i) {
        V m1 = random_p_monomial(rng), m2 = random_p_monomial(rng);
        DomainElem p = m0(add(m1, m2));
        DomainElem a = m0(add(m1, random_p_monomial(rng)));
        DomainElem b = m0(add(m2, random_p_monomial(rng)));
        auto out = primal_decompose(R0, p, a, b);
        REQUIRE(out.kind == PrimalOutcome::Kind::Decomposed);
        CHECK(mul(mul(out.parts->r_part, out.parts->s_part), out.parts->unit_slack) == p);
        CHECK(divides(out.parts->r_part, a).has_value());
        CHECK(divides(out.parts->s_part, b).has_value());
    }
}

TEST_CASE("missing shared divisor always surfaces as a gcd-implication violation") {
    Rng rng(1618);
    int no_witness_seen = 0;
    auto probe = [&](const QuadInt& p, const QuadInt& r, const QuadInt& s) {
        auto res = prime_like_check(Z5, DomainElem::z5(p), DomainElem::z5(r), DomainElem::z5(s));
        if (res.kind != PrimeLikeCheckResult::Kind::NoWitness) return;
        ++no_witness_seen;
        auto aq = aq_triple_check(Z5, DomainElem::z5(p), DomainElem::z5(r), DomainElem::z5(s));
        CHECK(aq.holds == Truth::No);
    };
    probe(QuadInt{2, 0}, QuadInt{1, 1}, QuadInt{1, -1});
    for (int i = 0; i < 40; ++i) {
        QuadInt p = random_quadint_nonunit(rng);
        QuadInt t = p * random_quadint_nonzero(rng);
        for (const auto& r : quadint_divisors(t)) {
            auto s = quadint_divides(r, t);
            REQUIRE(s.has_value());
            if (s->is_zero() || r.is_zero()) continue;
            probe(p, r, *s);
        }
    }
    CHECK(no_witness_seen > 0);
}

TEST_CASE("gcd-friendly domains always produce a shared divisor") {
    Rng rng(14142);
    for (int i = 0; i < 1000; ++i) {
        BigInt u = random_int(rng, 2, 100), v = random_int(rng, 2, 100);
        DomainElem r = DomainElem::z(u * random_int(rng, 1, 50));
        DomainElem s = DomainElem::z(v * random_int(rng, 1, 50));
        auto res = prime_like_check(Z, DomainElem::z(u * v), r, s);
        CHECK(res.kind == PrimeLikeCheckResult::Kind::Witness);
    }
    for (int i = 0; i < 1000; ++i) {
        V m1 = random_q_nonunit_monomial(rng), m2 = random_q_monomial(rng);
        DomainElem p = mr(add(m1, m2));
        DomainElem r = mr(add(m1, random_q_monomial(rng)));
        DomainElem s = mr(add(m2, random_q_monomial(rng)));
        auto res = prime_like_check(R, p, r, s);
        CHECK(res.kind == PrimeLikeCheckResult::Kind::Witness);
    }
    for (int i = 0; i < 200; ++i) {
        DkTriple t = random_dk_triple(rng);
        auto res = prime_like_check(DK, DomainElem::dk(t.r), DomainElem::dk(t.b),
                                    DomainElem::dk(t.c));
        REQUIRE(res.kind == PrimeLikeCheckResult::Kind::Witness);
        REQUIRE(res.dk_case.has_value());
        CHECK(*res.dk_case == t.target);
    }
}
