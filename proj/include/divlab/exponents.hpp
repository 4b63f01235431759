#pragma once

#include "divlab/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace divlab {

/// Exponent vector for a monomial in the variables X, Y, Z and the infinite
/// family T[1], T[2], ...  The T exponents are eventually constant: every
/// T[i] carries the tail value u, except for finitely many indices i that
/// deviate by e_i (so T[i] has exponent u + e_i).  All entries must be
/// nonnegative rationals.  Stored canonically: zero deviations are dropped.
class ExpVec {
public:
    using DevMap = std::map<std::uint32_t, Rational>;

    ExpVec() = default;  // the zero vector, i.e. the monomial 1

    static ExpVec make(Rational x, Rational y, Rational z, Rational u, DevMap deviations = {}) {
        if (x < 0 || y < 0 || z < 0) throw std::invalid_argument("ExpVec: negative X/Y/Z exponent");
        if (u < 0) throw std::invalid_argument("ExpVec: negative tail exponent");
        for (auto& [i, e] : deviations) {
            if (i == 0) throw std::invalid_argument("ExpVec: T indices start at 1");
            if (u + e < 0) throw std::invalid_argument("ExpVec: negative T exponent");
        }
        return ExpVec(std::move(x), std::move(y), std::move(z), std::move(u), std::move(deviations));
    }

    static ExpVec X(Rational a) { return make(std::move(a), 0, 0, 0); }
    static ExpVec Y(Rational a) { return make(0, std::move(a), 0, 0); }
    static ExpVec Z(Rational a) { return make(0, 0, std::move(a), 0); }
    /// Tail generator: every T[i] to the power a.
    static ExpVec U(Rational a) { return make(0, 0, 0, std::move(a)); }
    /// Single T[i] to the power a, all other T exponents zero.
    static ExpVec T(std::uint32_t i, Rational a) { return make(0, 0, 0, 0, {{i, std::move(a)}}); }

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    const Rational& z() const { return z_; }
    const Rational& u() const { return u_; }
    const DevMap& deviations() const { return exc_; }

    /// Exponent of T[i], i.e. u + e_i.
    Rational t_exponent(std::uint32_t i) const {
        auto it = exc_.find(i);
        return it == exc_.end() ? u_ : u_ + it->second;
    }

    bool is_zero() const { return x_ == 0 && y_ == 0 && z_ == 0 && t_part_zero(); }
    bool t_part_zero() const { return u_ == 0 && exc_.empty(); }
    Rational xyz_sum() const { return x_ + y_ + z_; }

    friend bool operator==(const ExpVec& a, const ExpVec& b) {
        return a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_ && a.u_ == b.u_ && a.exc_ == b.exc_;
    }

private:
    ExpVec(Rational x, Rational y, Rational z, Rational u, DevMap exc)
        : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), u_(std::move(u)) {
        for (auto& [i, e] : exc)
            if (e != 0) exc_.emplace(i, std::move(e));
    }

    Rational x_{0}, y_{0}, z_{0}, u_{0};
    DevMap exc_;

    friend std::strong_ordering compare(const ExpVec&, const ExpVec&);
    friend ExpVec add(const ExpVec&, const ExpVec&);
    friend std::optional<ExpVec> sub(const ExpVec&, const ExpVec&);
    friend ExpVec min(const ExpVec&, const ExpVec&);
    friend ExpVec scalar_div(const ExpVec&, unsigned);
};

namespace detail {
inline std::strong_ordering cmp(const Rational& a, const Rational& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}
}  // namespace detail

/// Total order: lexicographic on (x, y, z, u, deviations by ascending index).
/// Translation-invariant, so it can drive leading-term division.
inline std::strong_ordering compare(const ExpVec& a, const ExpVec& b) {
    if (auto c = detail::cmp(a.x_, b.x_); c != 0) return c;
    if (auto c = detail::cmp(a.y_, b.y_); c != 0) return c;
    if (auto c = detail::cmp(a.z_, b.z_); c != 0) return c;
    if (auto c = detail::cmp(a.u_, b.u_); c != 0) return c;
    auto ia = a.exc_.begin(), ib = b.exc_.begin();
    while (ia != a.exc_.end() || ib != b.exc_.end()) {
        // A missing entry is an implicit zero deviation at that index.
        if (ib == b.exc_.end() || (ia != a.exc_.end() && ia->first < ib->first)) {
            if (auto c = detail::cmp(ia->second, 0); c != 0) return c;
            ++ia;
        } else if (ia == a.exc_.end() || ib->first < ia->first) {
            if (auto c = detail::cmp(Rational(0), ib->second); c != 0) return c;
            ++ib;
        } else {
            if (auto c = detail::cmp(ia->second, ib->second); c != 0) return c;
            ++ia;
            ++ib;
        }
    }
    return std::strong_ordering::equal;
}

inline bool operator<(const ExpVec& a, const ExpVec& b) { return compare(a, b) < 0; }
inline bool operator>(const ExpVec& a, const ExpVec& b) { return compare(a, b) > 0; }

/// Componentwise sum (monomial product).
inline ExpVec add(const ExpVec& a, const ExpVec& b) {
    ExpVec::DevMap exc = a.exc_;
    for (const auto& [i, e] : b.exc_) exc[i] += e;
    return ExpVec::make(a.x_ + b.x_, a.y_ + b.y_, a.z_ + b.z_, a.u_ + b.u_, std::move(exc));
}

/// Componentwise difference if it stays in the monoid, otherwise nullopt.
inline std::optional<ExpVec> sub(const ExpVec& a, const ExpVec& b) {
    if (a.x_ < b.x_ || a.y_ < b.y_ || a.z_ < b.z_ || a.u_ < b.u_) return std::nullopt;
    Rational du = a.u_ - b.u_;
    ExpVec::DevMap exc = a.exc_;
    for (const auto& [i, e] : b.exc_) exc[i] -= e;
    for (const auto& [i, e] : exc)
        if (du + e < 0) return std::nullopt;  // T[i] exponent would go negative
    return ExpVec::make(a.x_ - b.x_, a.y_ - b.y_, a.z_ - b.z_, std::move(du), std::move(exc));
}

/// Componentwise minimum (meet).  The tail of the result is min(u_a, u_b);
/// every index where either argument deviates is minimized individually.
inline ExpVec min(const ExpVec& a, const ExpVec& b) {
    Rational mu = a.u_ < b.u_ ? a.u_ : b.u_;
    ExpVec::DevMap exc;
    auto touch = [&](std::uint32_t i) {
        Rational ta = a.t_exponent(i), tb = b.t_exponent(i);
        Rational m = ta < tb ? ta : tb;
        if (m != mu) exc[i] = m - mu;
    };
    for (const auto& [i, e] : a.exc_) touch(i);
    for (const auto& [i, e] : b.exc_)
        if (!a.exc_.count(i)) touch(i);
    return ExpVec::make(a.x_ < b.x_ ? a.x_ : b.x_, a.y_ < b.y_ ? a.y_ : b.y_,
                        a.z_ < b.z_ ? a.z_ : b.z_, std::move(mu), std::move(exc));
}

/// Divide every exponent by n >= 1 (n-th root of the monomial).
inline ExpVec scalar_div(const ExpVec& a, unsigned n) {
    if (n == 0) throw std::invalid_argument("scalar_div: zero divisor");
    ExpVec::DevMap exc;
    for (const auto& [i, e] : a.exc_) exc[i] = e / n;
    return ExpVec::make(a.x_ / n, a.y_ / n, a.z_ / n, a.u_ / n, std::move(exc));
}

enum class QVerdict {
    InQPureXYZ,    // T part identically zero (includes the zero vector)
    InQMixed,      // x+y+z > 0 and T part nonzero
    NotInQPureT,   // x+y+z = 0 but T part nonzero
    NotInQNegative // some component negative (unreachable for valid ExpVecs)
};

struct QMembership {
    QVerdict verdict;
    std::string explanation;
    bool in_Q() const { return verdict == QVerdict::InQPureXYZ || verdict == QVerdict::InQMixed; }
};

/// Membership in the exponent monoid Q of the subring R: a vector lies in Q
/// iff all components are >= 0 and (x+y+z > 0 or the T part is zero).
inline QMembership in_QR(const ExpVec& a) {
    if (a.x() < 0 || a.y() < 0 || a.z() < 0)
        return {QVerdict::NotInQNegative, "negative X/Y/Z exponent"};
    if (a.u() < 0) return {QVerdict::NotInQNegative, "negative tail exponent"};
    for (const auto& [i, e] : a.deviations())
        if (a.u() + e < 0)
            return {QVerdict::NotInQNegative, "negative exponent at T[" + std::to_string(i) + "]"};
    if (a.xyz_sum() > 0) {
        if (a.t_part_zero()) return {QVerdict::InQPureXYZ, "pure X/Y/Z monomial"};
        return {QVerdict::InQMixed, "positive X/Y/Z part carries the T part"};
    }
    if (a.t_part_zero()) return {QVerdict::InQPureXYZ, "trivial monomial"};
    return {QVerdict::NotInQPureT, "nonzero T part with x+y+z = 0"};
}

inline bool in_Q(const ExpVec& a) { return in_QR(a).in_Q(); }

namespace detail {
inline std::string exponent_suffix(const Rational& e) {
    if (e == 1) return "";
    if (is_integer(e) && e > 0) return "^" + to_string(e);
    return "^(" + to_string(e) + ")";
}
}  // namespace detail

/// Monomial syntax, e.g. X^(3/2)*Y*T[5]^(1/3)*U^2; the zero vector prints as 1.
inline std::string to_string(const ExpVec& a) {
    std::string out;
    auto emit = [&](const std::string& var, const Rational& e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += var + detail::exponent_suffix(e);
    };
    emit("X", a.x());
    emit("Y", a.y());
    emit("Z", a.z());
    emit("U", a.u());
    for (const auto& [i, e] : a.deviations()) emit("T[" + std::to_string(i) + "]", e);
    return out.empty() ? "1" : out;
}

}  // namespace divlab
