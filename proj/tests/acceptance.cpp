// Acceptance gate: one line per criterion, exit 0 only if every criterion
// passes inside its time budget.
#include <divlab/divlab.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace divlab;

namespace {

struct Criterion {
    std::string name;
    long budget_ms;
    std::function<bool()> run;
};

bool reproduced(const WitnessReport& rep) { return rep.reproduced; }

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"mcd-family-of-100", 1000, [] {
        return reproduced(witness_mcd_infinite(FamilyParams(100)));
    }});
    criteria.push_back({"irreducible-divisor-family-of-100", 1000, [] {
        return reproduced(witness_idf_fails(FamilyParams(100)));
    }});
    criteria.push_back({"antimatter-factoring-10k", 5000, [] {
        return reproduced(witness_antimatter_idf(10000));
    }});
    criteria.push_back({"subring-product-claim-10k", 10000, [] {
        return reproduced(witness_claim_fuzz(10000));
    }});
    criteria.push_back({"quadratic-control-domain", 1000, [] {
        bool ok = reproduced(witness_gauss_fails_z5());
        ok = ok && reproduced(witness_aq_z5());
        auto res = prime_like_check(domain_handle(DomainId::Z5),
                                    DomainElem::z5(QuadInt{BigInt(2), BigInt(0)}),
                                    DomainElem::z5(QuadInt{BigInt(1), BigInt(1)}),
                                    DomainElem::z5(QuadInt{BigInt(1), BigInt(-1)}));
        return ok && res.kind == PrimeLikeCheckResult::Kind::NoWitness;
    }});
    criteria.push_back({"x-not-primal", 100, [] {
        return reproduced(witness_x_not_primal());
    }});
    criteria.push_back({"polynomial-prime-like-fuzz-1k", 10000, [] {
        return reproduced(fuzz_dk_prime_like(1000));
    }});
    criteria.push_back({"primal-decomposition-fuzz-1k", 10000, [] {
        return reproduced(fuzz_primal_z(1000)) && reproduced(fuzz_primal_r0(1000));
    }});
    criteria.push_back({"kernel-soundness-10k", 30000, [] {
        return reproduced(fuzz_kernel(10000));
    }});

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "criterion %s threw: %s\n", c.name.c_str(), e.what());
            ok = false;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        ok = ok && ms <= c.budget_ms;
        all_ok = all_ok && ok;
        std::printf("[%zu/%zu] %s %s (%lld ms)\n", i + 1, criteria.size(),
                    ok ? "PASS" : "FAIL", c.name.c_str(), static_cast<long long>(ms));
    }
    return all_ok ? 0 : 1;
}
