#include <divlab/exponents.hpp>
#include <divlab/random.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace divlab;

namespace {
ExpVec b1() { return ExpVec::make(1, 0, 0, 1, {{1, -1}}); }
ExpVec sy() { return ExpVec::make(1, 1, 0, 1); }
ExpVec sz() { return ExpVec::make(1, 0, 1, 1); }
ExpVec yt1() { return ExpVec::make(0, 1, 0, 0, {{1, 1}}); }
}  // namespace

TEST_CASE("construction validates and canonicalizes") {
    CHECK_THROWS_AS(ExpVec::make(-1, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(ExpVec::make(0, 0, 0, 0, {{1, -1}}), std::invalid_argument);  // T exp -1
    CHECK_THROWS_AS(ExpVec::make(0, 0, 0, Rational(1, 2), {{1, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(ExpVec::make(0, 0, 0, 0, {{0, 1}}), std::invalid_argument);  // index 0
    CHECK_THROWS_AS(ExpVec::make(0, 0, 0, -1), std::invalid_argument);

    // zero deviations are dropped, so structural equality is semantic
    CHECK(ExpVec::make(1, 0, 0, 0, {{3, 0}}) == ExpVec::X(1));
    CHECK(ExpVec::make(0, 0, 0, 1, {{1, -1}}).deviations().size() == 1);
}

TEST_CASE("t exponent is tail plus deviation") {
    ExpVec a = ExpVec::make(0, 0, 0, 2, {{3, -1}});
    CHECK(a.t_exponent(3) == 1);
    CHECK(a.t_exponent(5) == 2);
    CHECK(b1().t_exponent(1) == 0);
    CHECK(b1().t_exponent(7) == 1);
}

TEST_CASE("add merges componentwise") {
    CHECK(add(ExpVec::X(1), ExpVec::Y(1)) == ExpVec::make(1, 1, 0, 0));
    // deviation -1 against an isolated T cancels back into the bulk
    CHECK(add(ExpVec::make(0, 0, 0, 1, {{1, -1}}), ExpVec::T(1, 1)) == ExpVec::U(1));
    CHECK(add(b1(), yt1()) == sy());
}

TEST_CASE("sub is exact componentwise difference or nothing") {
    CHECK(sub(sy(), b1()) == yt1());
    CHECK(sub(ExpVec::X(1), ExpVec::X(1)) == ExpVec::make(0, 0, 0, 0));
    CHECK_FALSE(sub(ExpVec::X(1), ExpVec::Y(1)).has_value());
    // tail below a deviation: u-u fine but T exponent would go negative
    CHECK_FALSE(sub(ExpVec::U(1), ExpVec::make(0, 0, 0, 1, {{2, 1}})).has_value());
}

TEST_CASE("min is the componentwise lattice meet") {
    CHECK(min(sy(), sz()) == ExpVec::make(1, 0, 0, 1));
    ExpVec l = *sub(sy(), b1()), r = *sub(sz(), b1());
    ExpVec m = min(l, r);
    CHECK(m == ExpVec::T(1, 1));
    // coordinatewise oracle at every touched coordinate
    CHECK(m.x() == std::min(l.x(), r.x()));
    CHECK(m.y() == std::min(l.y(), r.y()));
    CHECK(m.z() == std::min(l.z(), r.z()));
    CHECK(m.u() == std::min(l.u(), r.u()));
    CHECK(m.t_exponent(1) == std::min(l.t_exponent(1), r.t_exponent(1)));
    CHECK(min(sy(), sy()) == sy());
}

TEST_CASE("subring membership verdicts") {
    CHECK(in_QR(ExpVec::X(Rational(1, 2))).verdict == QVerdict::InQPureXYZ);
    CHECK(in_QR(ExpVec::T(1, 1)).verdict == QVerdict::NotInQPureT);
    CHECK(in_QR(b1()).verdict == QVerdict::InQMixed);
    CHECK(in_QR(ExpVec::make(0, 0, 0, 0)).in_Q());  // unit
    CHECK(in_QR(ExpVec::U(1)).verdict == QVerdict::NotInQPureT);
}

TEST_CASE("scalar division") {
    CHECK(scalar_div(ExpVec::X(1), 2) == ExpVec::X(Rational(1, 2)));
    CHECK(scalar_div(sy(), 2) == ExpVec::make(Rational(1, 2), Rational(1, 2), 0, Rational(1, 2)));
    CHECK(scalar_div(ExpVec::make(0, 0, 0, 0), 7) == ExpVec::make(0, 0, 0, 0));
}

TEST_CASE("printing") {
    ExpVec a = ExpVec::make(Rational(3, 2), 1, 0, 2, {{5, Rational(1, 3)}});
    CHECK(to_string(a) == "X^(3/2)*Y*U^2*T[5]^(1/3)");
    CHECK(to_string(ExpVec::make(0, 0, 0, 0)) == "1");
    CHECK(to_string(b1()) == "X*U*T[1]^(-1)");
}

TEST_CASE("cancellativity on random samples") {
    Rng rng(91);
    for (int t = 0; t < 500; ++t) {
        ExpVec a = random_p_monomial(rng), b = random_p_monomial(rng);
        auto back = sub(add(a, b), b);
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
}

TEST_CASE("min behaves as an order-theoretic gcd") {
    Rng rng(92);
    for (int t = 0; t < 500; ++t) {
        ExpVec a = random_p_monomial(rng), b = random_p_monomial(rng);
        ExpVec m = min(a, b);
        CHECK(sub(a, m).has_value());
        CHECK(sub(b, m).has_value());
        // anything below both is below the min
        ExpVec c = min(random_p_monomial(rng), m);
        if (sub(a, c) && sub(b, c)) CHECK(sub(m, c).has_value());
    }
}

TEST_CASE("the monomials of R are closed under add and halving") {
    Rng rng(93);
    for (int t = 0; t < 500; ++t) {
        ExpVec a = random_q_monomial(rng), b = random_q_monomial(rng);
        CHECK(in_Q(add(a, b)));
        CHECK(in_Q(scalar_div(a, 2)));
    }
}

TEST_CASE("pure T differences fall outside the subring monomials") {
    // U / (U T1^-1) = T1, which has no X/Y/Z content
    ExpVec t1 = *sub(ExpVec::U(1), ExpVec::make(0, 0, 0, 1, {{1, -1}}));
    CHECK(t1 == ExpVec::T(1, 1));
    CHECK(in_QR(t1).verdict == QVerdict::NotInQPureT);
}

TEST_CASE("the order is total and translation invariant") {
    Rng rng(94);
    for (int t = 0; t < 500; ++t) {
        ExpVec a = random_p_monomial(rng), b = random_p_monomial(rng), c = random_p_monomial(rng);
        auto ord = compare(a, b);
        CHECK(((ord == std::strong_ordering::less) + (ord == std::strong_ordering::greater) +
               (ord == std::strong_ordering::equal)) == 1);
        if (ord == std::strong_ordering::equal) CHECK(a == b);
        CHECK(compare(add(a, c), add(b, c)) == ord);
    }
}
