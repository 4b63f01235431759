#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace divlab {

// Exact scalars used everywhere: arbitrary-precision integers and reduced
// fractions with positive denominators (both guaranteed by the backend).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const BigInt& n) { return n.str(); }
inline std::string to_string(const Rational& r) { return r.str(); }

/// Integer square root with perfect-square check.
inline std::optional<BigInt> exact_sqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// Rational square root; exists iff numerator and denominator are both
/// perfect squares (the fraction is stored reduced).
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto num = exact_sqrt(numerator(r));
    if (!num) return std::nullopt;
    auto den = exact_sqrt(denominator(r));
    if (!den) return std::nullopt;
    return Rational(*num, *den);
}

namespace detail {

inline BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& m) {
    return (a * b) % m;
}

inline BigInt powmod(BigInt base, BigInt exp, const BigInt& m) {
    BigInt result = 1;
    base %= m;
    while (exp > 0) {
        if (bit_test(exp, 0)) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Miller-Rabin, deterministic for n < 3.3e24 with the first twelve prime
// bases; inputs here stay far below that.
inline bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    unsigned s = 0;
    while (!bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        BigInt x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline BigInt pollard_rho(const BigInt& n) {
    if (n % 2 == 0) return 2;
    for (BigInt c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            d = gcd(x >= y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

inline void factorize_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    BigInt rest = n;
    for (int p : {2, 3, 5, 7, 11, 13}) {
        while (rest % p == 0) {
            ++out[p];
            rest /= p;
        }
    }
    if (rest == 1) return;
    if (is_probable_prime(rest)) {
        ++out[rest];
        return;
    }
    BigInt d = pollard_rho(rest);
    factorize_into(d, out);
    factorize_into(rest / d, out);
}

/// Prime factorization of |n|, n != 0.
inline std::map<BigInt, unsigned> factorize(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    std::map<BigInt, unsigned> out;
    factorize_into(abs(n), out);
    return out;
}

/// All positive divisors of |n|, ascending.
inline std::vector<BigInt> divisors(const BigInt& n) {
    auto factors = factorize(n);
    std::vector<BigInt> ds{1};
    for (const auto& [p, e] : factors) {
        std::size_t base = ds.size();
        BigInt pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
        if (ds.size() > 1000000) throw std::domain_error("divisors: too many divisors");
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline BigInt smallest_prime_factor(const BigInt& n) {
    return factorize(n).begin()->first;
}

}  // namespace detail

}  // namespace divlab
