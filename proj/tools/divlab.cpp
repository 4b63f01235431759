// divlab: exact-arithmetic witnesses and divisibility predicates over the
// example domains (r0, r, z, z5, dk).
#include <divlab/divlab.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

using namespace divlab;
using nlohmann::ordered_json;

namespace {

int report_exit(const WitnessReport& rep, bool as_json) {
    if (as_json) {
        std::cout << rep.to_json().dump(2) << "\n";
    } else {
        std::cout << rep.name << ": " << (rep.reproduced ? "reproduced" : "FAILED") << "\n";
        std::cout << "  claim: " << rep.claim << "\n";
        for (const auto& in : rep.inputs) std::cout << "  input: " << in << "\n";
        for (const auto& c : rep.details) {
            std::cout << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
            if (!c.note.empty()) std::cout << " -- " << c.note;
            std::cout << "\n";
        }
        std::cout << "  elapsed: " << rep.elapsed_ms << " ms\n";
    }
    return rep.reproduced ? 0 : 1;
}

int truth_exit(Truth t) {
    switch (t) {
        case Truth::Yes: return 0;
        case Truth::No: return 1;
        case Truth::Unknown: return 2;
    }
    return 2;
}

std::string truth_str(Truth t) {
    switch (t) {
        case Truth::Yes: return "yes";
        case Truth::No: return "no";
        case Truth::Unknown: return "unknown";
    }
    return "unknown";
}

void emit(const ordered_json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact divisibility witnesses over five example domains"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    // ---- witness ----
    auto* w = app.add_subcommand("witness", "run a named reproduction");
    std::string wname;
    RunOptions wopt;
    w->add_option("name", wname, "one of: " + [] {
                      std::string s;
                      for (const auto& n : witness_names()) s += (s.empty() ? "" : ", ") + n;
                      return s;
                  }())
        ->required();
    w->add_option("--n", wopt.n, "family size for indexed families");
    w->add_option("--trials", wopt.trials, "fuzz batch size (0 = default)");
    w->add_option("--seed", wopt.seed, "random seed");

    // ---- fuzz ----
    auto* fz = app.add_subcommand("fuzz", "run a property fuzzer");
    std::string fprop;
    RunOptions fopt;
    fz->add_option("property", fprop, "one of: " + [] {
                       std::string s;
                       for (const auto& n : fuzz_names()) s += (s.empty() ? "" : ", ") + n;
                       return s;
                   }())
        ->required();
    fz->add_option("--trials", fopt.trials, "number of trials (0 = default)");
    fz->add_option("--seed", fopt.seed, "random seed");

    // ---- expression verbs ----
    std::string domain_tag = "r0";
    std::vector<std::string> exprs;
    auto add_expr_verb = [&](const std::string& name, const std::string& help, int arity) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--domain", domain_tag, "domain tag: r0, r, z, z5, dk")->required();
        auto* pos = sub->add_option("exprs", exprs, "element expressions");
        if (arity > 0)
            pos->expected(arity);
        else
            pos->expected(-1);
        return sub;
    };

    auto* v_parse = add_expr_verb("parse", "parse and print the normal form", 1);
    auto* v_divides = add_expr_verb("divides", "does the first argument divide the second", 2);
    auto* v_mul = add_expr_verb("mul", "multiply elements", 0);
    auto* v_coprime = add_expr_verb("coprime", "do the two elements share only unit divisors", 2);
    auto* v_primitive = add_expr_verb("primitive", "is the coefficient list primitive", 0);
    auto* v_aq = add_expr_verb("aq", "coprimality propagation to the product: r vs (s, t)", 3);
    auto* v_prime_like =
        add_expr_verb("prime-like", "find a nonunit divisor of p and of one factor", 3);
    auto* v_primal = add_expr_verb("primal", "split p along a | and b | with unit slack", 3);
    auto* v_mcd = add_expr_verb("mcd", "is d a maximal common divisor of {a, b}", 3);
    auto* v_claim = add_expr_verb("claim", "product in the subring forces a factor into it", 2);
    auto* v_sqrt = add_expr_verb("sqrt", "exponent-halving square root", 1);
    auto* v_exact_div = add_expr_verb("exact-div", "exact quotient of the second by the first", 2);

    // ---- gauss (needs two coefficient lists) ----
    auto* v_gauss = app.add_subcommand("gauss", "primitivity of a product of two polynomials");
    std::string gauss_domain = "z5";
    std::vector<std::string> gf, gg;
    v_gauss->add_option("--domain", gauss_domain, "domain tag")->required();
    v_gauss->add_option("--f", gf, "coefficients of f, ascending")->required();
    v_gauss->add_option("--g", gg, "coefficients of g, ascending")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (w->parsed()) {
            auto rep = run_witness(wname, wopt);
            if (!rep) {
                std::cerr << "unknown witness: " << wname << "\n";
                return 3;
            }
            return report_exit(*rep, as_json);
        }
        if (fz->parsed()) {
            auto rep = run_fuzz(fprop, fopt);
            if (!rep) {
                std::cerr << "unknown fuzz property: " << fprop << "\n";
                return 3;
            }
            return report_exit(*rep, as_json);
        }

        auto handle_for = [](const std::string& tag) {
            auto id = domain_from_tag(tag);
            if (!id) throw std::invalid_argument("unknown domain tag: " + tag);
            return domain_handle(*id);
        };

        if (v_gauss->parsed()) {
            auto D = handle_for(gauss_domain);
            std::vector<DomainElem> f, g;
            for (const auto& s : gf) f.push_back(parse_expr(s, D.id));
            for (const auto& s : gg) g.push_back(parse_expr(s, D.id));
            auto rep = gauss_product_check(D, f, g);
            ordered_json j;
            j["f_primitive"] = truth_str(rep.f_primitive);
            j["g_primitive"] = truth_str(rep.g_primitive);
            auto coeffs = ordered_json::array();
            for (const auto& cfx : rep.product_coeffs) coeffs.push_back(to_string(cfx));
            j["product_coeffs"] = coeffs;
            j["product_primitive"] = truth_str(rep.product_primitive);
            if (rep.witness_divisor) j["common_divisor"] = to_string(*rep.witness_divisor);
            std::string text = "f primitive: " + truth_str(rep.f_primitive) +
                               "\ng primitive: " + truth_str(rep.g_primitive) +
                               "\nproduct primitive: " + truth_str(rep.product_primitive);
            if (rep.witness_divisor) text += "\ncommon divisor: " + to_string(*rep.witness_divisor);
            emit(j, as_json, text);
            return truth_exit(rep.product_primitive);
        }

        auto D = handle_for(domain_tag);
        std::vector<DomainElem> args;
        for (const auto& s : exprs) args.push_back(parse_expr(s, D.id));

        if (v_parse->parsed()) {
            emit(ordered_json{{"value", print_expr(args[0])}}, as_json, print_expr(args[0]));
            return 0;
        }
        if (v_divides->parsed()) {
            auto q = divides(args[0], args[1]);
            ordered_json j{{"divides", q.has_value()}};
            if (q) j["quotient"] = print_expr(*q);
            emit(j, as_json, q ? "yes, quotient " + print_expr(*q) : "no");
            return q ? 0 : 1;
        }
        if (v_mul->parsed()) {
            if (args.empty()) {
                std::cerr << "mul needs at least one element\n";
                return 3;
            }
            DomainElem acc = args[0];
            for (std::size_t i = 1; i < args.size(); ++i) acc = mul(acc, args[i]);
            emit(ordered_json{{"product", print_expr(acc)}}, as_json, print_expr(acc));
            return 0;
        }
        if (v_coprime->parsed()) {
            auto res = coprime_check(D, args[0], args[1]);
            ordered_json j{{"coprime", truth_str(res.verdict)}};
            std::string text = "coprime: " + truth_str(res.verdict);
            if (res.witness) {
                j["common_divisor"] = print_expr(*res.witness);
                text += "\ncommon divisor: " + print_expr(*res.witness);
            }
            emit(j, as_json, text);
            return truth_exit(res.verdict);
        }
        if (v_primitive->parsed()) {
            auto res = is_primitive(D, ContentList::make(args));
            ordered_json j{{"primitive", truth_str(res.verdict)}, {"note", res.note}};
            std::string text = "primitive: " + truth_str(res.verdict);
            if (res.common_divisor) {
                j["common_divisor"] = print_expr(*res.common_divisor);
                text += "\ncommon divisor: " + print_expr(*res.common_divisor);
            }
            emit(j, as_json, text);
            return truth_exit(res.verdict);
        }
        if (v_aq->parsed()) {
            auto rep = aq_triple_check(D, args[0], args[1], args[2]);
            ordered_json j{{"r_coprime_s", truth_str(rep.r_s.verdict)},
                           {"r_coprime_t", truth_str(rep.r_t.verdict)},
                           {"r_coprime_st", truth_str(rep.r_st.verdict)},
                           {"holds", truth_str(rep.holds)}};
            if (rep.r_st.witness) j["violation_witness"] = print_expr(*rep.r_st.witness);
            std::string text = "coprime to each factor: " + truth_str(rep.r_s.verdict) + ", " +
                               truth_str(rep.r_t.verdict) +
                               "\ncoprime to the product: " + truth_str(rep.r_st.verdict) +
                               "\nimplication holds: " + truth_str(rep.holds);
            if (rep.r_st.witness) text += "\nshared divisor: " + print_expr(*rep.r_st.witness);
            emit(j, as_json, text);
            return truth_exit(rep.holds);
        }
        if (v_prime_like->parsed()) {
            auto res = prime_like_check(D, args[0], args[1], args[2]);
            ordered_json j;
            std::string text;
            switch (res.kind) {
                case PrimeLikeCheckResult::Kind::Witness: {
                    j["verdict"] = "witness";
                    j["divisor"] = print_expr(*res.divisor);
                    j["side"] = res.side == DivSide::DividesB ? "first-factor" : "second-factor";
                    text = "witness: " + print_expr(*res.divisor) + " divides p and the " +
                           std::string(res.side == DivSide::DividesB ? "first" : "second") +
                           " factor";
                    break;
                }
                case PrimeLikeCheckResult::Kind::NoWitness:
                    j["verdict"] = "no-witness";
                    text = "no nonunit divisor of p divides either factor";
                    break;
                case PrimeLikeCheckResult::Kind::Unknown:
                    j["verdict"] = "unknown";
                    text = "unknown: " + res.note;
                    break;
            }
            if (!res.note.empty()) j["note"] = res.note;
            emit(j, as_json, text);
            return res.kind == PrimeLikeCheckResult::Kind::Witness   ? 0
                   : res.kind == PrimeLikeCheckResult::Kind::NoWitness ? 1
                                                                       : 2;
        }
        if (v_primal->parsed()) {
            auto out = primal_decompose(D, args[0], args[1], args[2]);
            ordered_json j;
            std::string text;
            switch (out.kind) {
                case PrimalOutcome::Kind::Decomposed:
                    j["verdict"] = "decomposed";
                    j["a_part"] = print_expr(out.parts->r_part);
                    j["b_part"] = print_expr(out.parts->s_part);
                    j["unit"] = print_expr(out.parts->unit_slack);
                    text = "p = (" + print_expr(out.parts->r_part) + ") * (" +
                           print_expr(out.parts->s_part) + ") * (" +
                           print_expr(out.parts->unit_slack) + ")";
                    break;
                case PrimalOutcome::Kind::NotPrimal:
                    j["verdict"] = "not-primal";
                    text = "no decomposition: " + out.note;
                    break;
                case PrimalOutcome::Kind::Unknown:
                    j["verdict"] = "unknown";
                    text = "unknown: " + out.note;
                    break;
            }
            emit(j, as_json, text);
            return out.kind == PrimalOutcome::Kind::Decomposed  ? 0
                   : out.kind == PrimalOutcome::Kind::NotPrimal ? 1
                                                                : 2;
        }
        if (v_mcd->parsed()) {
            if (D.id != DomainId::R0 && D.id != DomainId::R) {
                std::cerr << "mcd verification is defined for monomials of r0 and r\n";
                return 3;
            }
            auto need_monomial = [](const DomainElem& e) {
                if (e.alg().monomials().size() != 1)
                    throw std::invalid_argument("mcd expects monomials");
                return e.alg().leading();
            };
            auto v = mcd_verify(need_monomial(args[0]), need_monomial(args[1]),
                                need_monomial(args[2]));
            ordered_json j;
            std::string text;
            switch (v.kind) {
                case MCDKind::Maximal:
                    j["verdict"] = "maximal";
                    text = "maximal common divisor";
                    break;
                case MCDKind::NotMaximal:
                    j["verdict"] = "not-maximal";
                    j["larger"] = to_string(*v.larger);
                    text = "common divisor but not maximal; larger: " + to_string(*v.larger);
                    break;
                case MCDKind::NotCommonDivisor:
                    j["verdict"] = "not-common-divisor";
                    text = "not a common divisor: " + v.note;
                    break;
            }
            emit(j, as_json, text);
            return v.kind == MCDKind::Maximal ? 0 : 1;
        }
        if (v_claim->parsed()) {
            if (D.id != DomainId::R0) {
                std::cerr << "claim takes r0 elements\n";
                return 3;
            }
            auto verdict = claim_check(args[0].alg(), args[1].alg());
            const char* names[] = {"not-applicable", "first-in-subring", "second-in-subring",
                                   "both-in-subring", "violation"};
            auto idx = static_cast<int>(verdict);
            emit(ordered_json{{"verdict", names[idx]}}, as_json, names[idx]);
            return verdict == ClaimVerdict::Violation       ? 1
                   : verdict == ClaimVerdict::NotApplicable ? 2
                                                            : 0;
        }
        if (v_sqrt->parsed()) {
            if (D.id != DomainId::R0 && D.id != DomainId::R) {
                std::cerr << "sqrt is defined in r0 and r\n";
                return 3;
            }
            AlgElem root = sqrt(args[0].alg());
            emit(ordered_json{{"sqrt", to_string(root)}}, as_json, to_string(root));
            return 0;
        }
        if (v_exact_div->parsed()) {
            if (D.id != DomainId::R0 && D.id != DomainId::R) {
                std::cerr << "exact-div is defined in r0 and r\n";
                return 3;
            }
            auto q = exact_div(args[1].alg(), args[0].alg());
            ordered_json j{{"divides", q.has_value()}};
            if (q) j["quotient"] = to_string(*q);
            emit(j, as_json, q ? "quotient: " + to_string(*q) : "not an exact multiple");
            return q ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
