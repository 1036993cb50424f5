// Command-line front end: expression evaluation in the two-idempotent
// algebra, quotient decomposition, and the randomized consistency suites.
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "idem/decompose.hpp"
#include "idem/errors.hpp"
#include "idem/expr.hpp"
#include "idem/factor.hpp"
#include "idem/freeword.hpp"
#include "idem/json_io.hpp"
#include "idem/quotient.hpp"
#include "idem/rep.hpp"
#include "idem/rng.hpp"
#include "idem/selftest.hpp"

using namespace idem;
using nlohmann::json;

namespace {

FieldDesc parse_field(const std::string& s) {
    if (s == "q" || s == "Q") return FieldDesc::rationals();
    try {
        std::size_t used = 0;
        unsigned long long p = std::stoull(s, &used);
        if (used == s.size()) return FieldDesc::prime(p);
    } catch (const NotPrime&) {
        throw;
    } catch (const std::exception&) {
        // fall through to the generic message
    }
    throw InputError("--field takes 'q' or a prime, got '" + s + "'");
}

Poly parse_poly(const FieldDesc& f, const std::string& s) {
    std::vector<FieldScalar> cs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t b = item.find_first_not_of(" \t");
        std::size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw InputError("empty coefficient in '" + s + "'");
        cs.push_back(FieldScalar::parse(f, item.substr(b, e - b + 1)));
    }
    if (cs.empty()) throw InputError("empty coefficient list");
    return Poly::from_coeffs(f, std::move(cs));
}

// "c0,c1,..:k;c0,c1,..:k" with :k optional (defaults to 1).
std::vector<FactorPower> parse_factor_spec(const FieldDesc& f,
                                           const std::string& s) {
    std::vector<FactorPower> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (part.empty()) continue;
        std::size_t colon = part.rfind(':');
        std::size_t k = 1;
        std::string coeffs = part;
        if (colon != std::string::npos) {
            coeffs = part.substr(0, colon);
            try {
                k = std::stoul(part.substr(colon + 1));
            } catch (const std::exception&) {
                throw InputError("bad exponent in '" + part + "'");
            }
        }
        out.push_back({parse_poly(f, coeffs), k});
    }
    if (out.empty()) throw InputError("empty factor list");
    return out;
}

std::string q_text(const QElem& x) {
    std::ostringstream os;
    os << "{e: " << x.unit_coeff().to_string("sigma")
       << ", sigma: " << x.c_sigma().to_string("sigma")
       << ", a: " << x.c_a().to_string("sigma")
       << ", b: " << x.c_b().to_string("sigma")
       << ", ab: " << x.c_ab().to_string("sigma") << "}";
    return os.str();
}

void print_nf(const NFElem& x, bool as_json) {
    if (as_json)
        std::cout << nf_to_json(x).dump(2) << "\n";
    else
        std::cout << to_string(x) << "\n";
}

void print_report(const Report& r, bool as_json) {
    if (as_json) {
        std::cout << report_to_json(r).dump(2) << "\n";
        return;
    }
    std::cout << r.suite << " over " << r.field << ": " << r.trials
              << " trials, " << r.mismatches.size() << " mismatches\n";
    for (const Mismatch& m : r.mismatches)
        std::cout << "  trial " << m.trial << " [" << m.kind << "] "
                  << m.detail << "\n";
    for (const std::string& c : r.certificates)
        std::cout << "  certificate: " << c << "\n";
}

bool is_power_of(const Poly& h, const Poly& g) {
    return h == g.pow(*h.degree());
}

void print_decomposition(const Decomposition& dec, bool as_json) {
    if (as_json) {
        std::cout << decomposition_to_json(dec).dump(2) << "\n";
        return;
    }
    std::cout << "minimal polynomial: " << dec.minpoly.to_string("sigma")
              << " over " << dec.field.to_string() << "\n";
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        const Block& b = dec.blocks[i];
        std::cout << "block " << i << ": " << block_kind_name(b.kind);
        if (b.kind == BlockKind::Zero) {
            std::cout << " (factor " << b.g.to_string("sigma")
                      << " absent)\n";
            continue;
        }
        std::cout << ", modulus " << b.modulus().to_string("sigma");
        if (b.trusted) std::cout << ", irreducibility taken on faith";
        std::cout << "\n";
        if (b.units) {
            std::cout << "  e11 " << q_text(b.units->e11) << "\n";
            std::cout << "  e12 " << q_text(b.units->e12) << "\n";
            std::cout << "  e21 " << q_text(b.units->e21) << "\n";
            std::cout << "  e22 " << q_text(b.units->e22) << "\n";
        }
        if (b.witness) {
            std::cout << "  nilpotency index " << b.witness->nilpotency_index
                      << ", module basis of size "
                      << b.witness->module_basis.size()
                      << (b.witness->quotient_commutative
                              ? ", commutative quotient"
                              : ", NON-commutative quotient")
                      << "\n";
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for an algebra on two idempotents"};
    app.require_subcommand(1);

    std::string field_str = "q";
    bool as_json = false;
    app.add_option("--field", field_str,
                   "coefficient field: q or a prime (default q)");
    app.add_flag("--json", as_json, "machine-readable output");

    std::vector<std::string> expr1;
    std::string lhs, rhs;

    CLI::App* nf_cmd = app.add_subcommand("nf", "normal form of an expression");
    nf_cmd->add_option("expr", expr1, "expression, e.g. '(a-b)^2'")
        ->required()
        ->expected(-1);

    CLI::App* mul_cmd = app.add_subcommand("mul", "product of two expressions");
    mul_cmd->add_option("x", lhs, "left factor")->required();
    mul_cmd->add_option("y", rhs, "right factor")->required();

    CLI::App* star_cmd =
        app.add_subcommand("star", "image under the involution");
    star_cmd->add_option("expr", expr1, "expression")->required()->expected(-1);

    CLI::App* jordan_cmd =
        app.add_subcommand("jordan", "Jordan product (xy + yx)/2");
    jordan_cmd->add_option("x", lhs, "left factor")->required();
    jordan_cmd->add_option("y", rhs, "right factor")->required();

    std::string minpoly_str, factors_str, modulus_str;
    std::uint64_t seed = 0xd1ce;
    CLI::App* dec_cmd = app.add_subcommand(
        "decompose", "block decomposition modulo a minimal polynomial");
    dec_cmd->add_option("--minpoly", minpoly_str,
                        "monic polynomial, ascending coefficients c0,c1,...")
        ->required();
    dec_cmd->add_option("--factors", factors_str,
                        "declared factorization 'c0,c1:k;...' (required over q)");
    dec_cmd->add_option("--seed", seed, "seed for the internal factorizer");

    CLI::App* block_cmd = app.add_subcommand(
        "block", "inspect the quotient by a single modulus");
    block_cmd->add_option("--modulus", modulus_str,
                          "polynomial, ascending coefficients c0,c1,...")
        ->required();

    std::uint64_t trials = 200, maxlen = 10, nsize = 2;
    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "random differential test of the normal form");
    oracle_cmd->add_option("--trials", trials, "number of random pairs");
    oracle_cmd->add_option("--maxlen", maxlen, "maximum word length");
    oracle_cmd->add_option("--seed", seed, "rng seed");

    CLI::App* rep_cmd = app.add_subcommand(
        "repcheck", "random matrix idempotent pairs against the theory");
    rep_cmd->add_option("--n", nsize, "matrix size (2 or 3 is sensible)");
    rep_cmd->add_option("--trials", trials, "number of random pairs");
    rep_cmd->add_option("--seed", seed, "rng seed");

    CLI::App* self_cmd =
        app.add_subcommand("selftest", "run the full acceptance battery");

    // --field and --json read naturally in any position.
    for (CLI::App* sub : {nf_cmd, mul_cmd, star_cmd, jordan_cmd, dec_cmd,
                          block_cmd, oracle_cmd, rep_cmd, self_cmd})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    auto joined = [](const std::vector<std::string>& v) {
        std::string s;
        for (const std::string& p : v) {
            if (!s.empty()) s += " ";
            s += p;
        }
        return s;
    };

    try {
        FieldDesc f = parse_field(field_str);

        if (nf_cmd->parsed()) {
            print_nf(parse_expr(joined(expr1), f), as_json);
        } else if (mul_cmd->parsed()) {
            print_nf(nf_mul(parse_expr(lhs, f), parse_expr(rhs, f)),
                     as_json);
        } else if (star_cmd->parsed()) {
            print_nf(star(parse_expr(joined(expr1), f)), as_json);
        } else if (jordan_cmd->parsed()) {
            print_nf(jordan_mul(parse_expr(lhs, f), parse_expr(rhs, f)),
                     as_json);
        } else if (dec_cmd->parsed()) {
            Poly m = parse_poly(f, minpoly_str);
            Factorization fact = [&] {
                if (!factors_str.empty())
                    return factor_input(m, parse_factor_spec(f, factors_str));
                if (!f.is_prime_field())
                    throw InputError(
                        "over q the factorization must be supplied "
                        "with --factors");
                Rng rng(seed);
                return factor_fp(m, rng);
            }();
            print_decomposition(decompose(fact), as_json);
        } else if (block_cmd->parsed()) {
            QuotientCtx ctx{parse_poly(f, modulus_str)};
            Poly lam = Poly::lambda(f);
            json j;
            j["modulus"] = poly_to_json(ctx.modulus());
            j["degree"] = ctx.degree();
            if (!as_json)
                std::cout << "modulus " << ctx.modulus().to_string("sigma")
                          << " over " << f.to_string() << ", degree "
                          << ctx.degree() << "\n";
            try {
                QElem e = quotient_unit(ctx);
                j["unit"] = q_to_json(e);
                if (!as_json) std::cout << "unit " << q_text(e) << "\n";
            } catch (const NotUnital&) {
                j["unit"] = nullptr;
                if (!as_json)
                    std::cout << "no internal unit (h(0) = 0)\n";
            }
            if (poly_gcd(ctx.modulus(), lam * (lam - Poly::one(f))).is_one()) {
                MatrixUnits units = matrix_units(ctx);
                j["units"] = {{"e11", q_to_json(units.e11)},
                              {"e12", q_to_json(units.e12)},
                              {"e21", q_to_json(units.e21)},
                              {"e22", q_to_json(units.e22)}};
                if (!as_json) {
                    std::cout << "matrix units:\n";
                    std::cout << "  e11 " << q_text(units.e11) << "\n";
                    std::cout << "  e12 " << q_text(units.e12) << "\n";
                    std::cout << "  e21 " << q_text(units.e21) << "\n";
                    std::cout << "  e22 " << q_text(units.e22) << "\n";
                }
            } else if (is_power_of(ctx.modulus(), lam) ||
                       is_power_of(ctx.modulus(), lam - Poly::one(f))) {
                bool at_zero = is_power_of(ctx.modulus(), lam);
                IdealWitness w = nilpotent_ideal_witness(
                    ctx,
                    at_zero ? BlockKind::SigmaNilpotent
                            : BlockKind::SigmaMinusOneNilpotent,
                    ctx.degree());
                j["witness"] = witness_to_json(w);
                if (!as_json)
                    std::cout << "nilpotent ideal: index "
                              << w.nilpotency_index << ", module basis size "
                              << w.module_basis.size()
                              << (w.quotient_commutative
                                      ? ", commutative quotient"
                                      : ", NON-commutative quotient")
                              << "\n";
            } else {
                throw InputError(
                    "mixed modulus: factor it and use 'decompose'");
            }
            if (as_json) std::cout << j.dump(2) << "\n";
        } else if (oracle_cmd->parsed()) {
            Report r = normalize_oracle(f, trials, maxlen, seed);
            print_report(r, as_json);
            if (!r.ok()) return 2;
        } else if (rep_cmd->parsed()) {
            Report r = differential_test(trials, nsize, f, seed);
            print_report(r, as_json);
            if (!r.ok()) return 2;
        } else if (self_cmd->parsed()) {
            auto results = run_acceptance();
            int failures = 0;
            json arr = json::array();
            for (const CheckResult& r : results) {
                if (as_json) {
                    arr.push_back({{"name", r.name},
                                   {"passed", r.passed},
                                   {"detail", r.detail}});
                } else {
                    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name
                              << " (" << r.detail << ")\n";
                }
                if (!r.passed) ++failures;
            }
            if (as_json) std::cout << arr.dump(2) << "\n";
            if (failures) return 2;
        }
        return 0;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
