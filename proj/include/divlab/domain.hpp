#pragma once

#include "divlab/dk_domain.hpp"
#include "divlab/f2_algebra.hpp"
#include "divlab/quadratic.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace divlab {

enum class DomainId {
    R0,  // F2[P], the full monoid algebra
    R,   // the subring cut out by Q
    Z,   // rational integers
    Z5,  // Z[sqrt(-5)]
    DK   // Z + x*K[x], K = Q(sqrt(2))
};

/// What each domain knows how to decide; predicates consult these instead of
/// guessing.
struct Capabilities {
    bool has_gcd = false;              // constructive gcd of any two elements
    bool has_mcd_verify = false;       // can certify maximality of common divisors
    bool has_divisor_enumeration = false;
    bool units_trivial = false;        // only unit is 1
};

struct DomainHandle {
    DomainId id;
    Capabilities caps;
};

inline DomainHandle domain_handle(DomainId id) {
    switch (id) {
        case DomainId::R0: return {id, {true, true, false, true}};   // monomials: gcd = min
        case DomainId::R: return {id, {false, true, false, true}};
        case DomainId::Z: return {id, {true, true, true, false}};
        case DomainId::Z5: return {id, {false, false, true, false}};
        case DomainId::DK: return {id, {false, false, false, false}};
    }
    throw std::invalid_argument("domain_handle: bad id");
}

inline std::optional<DomainId> domain_from_tag(std::string_view tag) {
    if (tag == "r0") return DomainId::R0;
    if (tag == "r") return DomainId::R;
    if (tag == "z") return DomainId::Z;
    if (tag == "z5") return DomainId::Z5;
    if (tag == "dk") return DomainId::DK;
    return std::nullopt;
}

inline std::string domain_tag(DomainId id) {
    switch (id) {
        case DomainId::R0: return "r0";
        case DomainId::R: return "r";
        case DomainId::Z: return "z";
        case DomainId::Z5: return "z5";
        case DomainId::DK: return "dk";
    }
    return "?";
}

/// Tagged element of one of the five domains.
class DomainElem {
public:
    static DomainElem r0(AlgElem f) { return {DomainId::R0, std::move(f)}; }
    static DomainElem r(AlgElem f) {
        if (!in_R(f)) throw std::invalid_argument("element has monomials outside Q");
        return {DomainId::R, std::move(f)};
    }
    static DomainElem z(BigInt n) { return {DomainId::Z, std::move(n)}; }
    static DomainElem z5(QuadInt v) { return {DomainId::Z5, std::move(v)}; }
    static DomainElem dk(DKElem v) { return {DomainId::DK, std::move(v)}; }

    DomainId id() const { return id_; }
    const AlgElem& alg() const { return std::get<AlgElem>(v_); }
    const BigInt& integer() const { return std::get<BigInt>(v_); }
    const QuadInt& quad() const { return std::get<QuadInt>(v_); }
    const DKElem& dkelem() const { return std::get<DKElem>(v_); }

    bool is_zero() const {
        switch (id_) {
            case DomainId::R0:
            case DomainId::R: return alg().is_zero();
            case DomainId::Z: return integer() == 0;
            case DomainId::Z5: return quad().is_zero();
            case DomainId::DK: return dkelem().is_zero();
        }
        return false;
    }

    bool is_unit() const {
        switch (id_) {
            case DomainId::R0:
            case DomainId::R: return alg().is_one();  // trivial unit group
            case DomainId::Z: return integer() == 1 || integer() == -1;
            case DomainId::Z5: return quad().is_unit();
            case DomainId::DK: return dkelem().is_unit();
        }
        return false;
    }

    friend bool operator==(const DomainElem& a, const DomainElem& b) = default;

    friend DomainElem mul(const DomainElem& a, const DomainElem& b) {
        a.check_same(b);
        switch (a.id_) {
            case DomainId::R0: return r0(a.alg() * b.alg());
            case DomainId::R: return r(a.alg() * b.alg());
            case DomainId::Z: return z(a.integer() * b.integer());
            case DomainId::Z5: return z5(a.quad() * b.quad());
            case DomainId::DK: return dk(a.dkelem() * b.dkelem());
        }
        throw std::logic_error("mul: bad id");
    }

    friend DomainElem add(const DomainElem& a, const DomainElem& b) {
        a.check_same(b);
        switch (a.id_) {
            case DomainId::R0: return r0(a.alg() + b.alg());
            case DomainId::R: return r(a.alg() + b.alg());
            case DomainId::Z: return z(a.integer() + b.integer());
            case DomainId::Z5: return z5(a.quad() + b.quad());
            case DomainId::DK: return dk(a.dkelem() + b.dkelem());
        }
        throw std::logic_error("add: bad id");
    }

    /// Quotient a/d within the domain if d divides a, else nullopt; d != 0.
    friend std::optional<DomainElem> divides(const DomainElem& d, const DomainElem& a) {
        d.check_same(a);
        if (d.is_zero()) throw std::invalid_argument("divides: division by zero");
        switch (d.id_) {
            case DomainId::R0: {
                auto q = exact_div(a.alg(), d.alg());
                if (!q) return std::nullopt;
                return r0(std::move(*q));
            }
            case DomainId::R: {
                auto q = exact_div(a.alg(), d.alg());
                if (!q || !in_R(*q)) return std::nullopt;  // quotient must stay in R
                return r(std::move(*q));
            }
            case DomainId::Z: {
                if (a.integer() % d.integer() != 0) return std::nullopt;
                return z(a.integer() / d.integer());
            }
            case DomainId::Z5: {
                auto q = quadint_divides(d.quad(), a.quad());
                if (!q) return std::nullopt;
                return z5(std::move(*q));
            }
            case DomainId::DK: {
                auto q = dk_divides(d.dkelem(), a.dkelem());
                if (!q) return std::nullopt;
                return dk(std::move(*q));
            }
        }
        throw std::logic_error("divides: bad id");
    }

private:
    template <class V>
    DomainElem(DomainId id, V v) : id_(id), v_(std::move(v)) {}
    void check_same(const DomainElem& o) const {
        if (id_ != o.id_) throw std::invalid_argument("mixed-domain operation");
    }

    DomainId id_;
    std::variant<AlgElem, BigInt, QuadInt, DKElem> v_;
};

inline std::string to_string(const DomainElem& e) {
    switch (e.id()) {
        case DomainId::R0:
        case DomainId::R: return to_string(e.alg());
        case DomainId::Z: return e.integer().str();
        case DomainId::Z5: return to_string(e.quad());
        case DomainId::DK: return to_string(e.dkelem());
    }
    return "?";
}

}  // namespace divlab
