#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lenscalc/checker.hpp"
#include "lenscalc/els.hpp"
#include "lenscalc/genus.hpp"
#include "lenscalc/lens_ring.hpp"

using namespace lenscalc;

namespace {

struct Output {
    bool json = false;
    std::vector<Certificate> certs;
    Json info;  // non-certificate payload (ring info, pow, factors, check-cert)
    std::string text;

    int finish() const {
        if (json) {
            if (!info.is_null()) {
                std::cout << info.dump(2) << "\n";
            } else if (certs.size() == 1) {
                std::cout << certs[0].to_json().dump(2) << "\n";
            } else {
                Json arr = Json::array();
                for (const auto& c : certs) arr.push_back(c.to_json());
                std::cout << arr.dump(2) << "\n";
            }
        } else {
            std::cout << text;
        }
        return exit_code_for(certs);
    }
};

std::string summarize(const Certificate& c) {
    std::ostringstream os;
    os << c.claim << ": " << to_string(c.verdict) << " (backend " << c.backend << ")\n";
    if (c.witness.contains("value")) os << "  value = " << c.witness["value"].get<std::string>() << "\n";
    if (c.witness.contains("not_applicable"))
        os << "  not applicable: " << c.witness["not_applicable"].get<std::string>() << "\n";
    if (c.witness.contains("violated"))
        os << "  violated: " << c.witness["violated"].get<std::string>() << "\n";
    if (c.witness.contains("violation")) {
        const Json& v = c.witness["violation"];
        os << "  violation at i=" << v.at("i").get<std::uint64_t>() << ": "
           << v.at("condition").get<std::string>() << " (" << v.at("lhs").get<std::string>()
           << " vs " << v.at("rhs").get<std::string>() << ")\n";
    }
    if (c.witness.contains("violations"))
        for (const auto& v : c.witness["violations"])
            os << "  stage i=" << v.at("i").get<std::uint64_t>() << " violated: "
               << v.at("reason").get<std::string>() << " (" << v.at("lhs").get<std::string>()
               << " vs " << v.at("rhs").get<std::string>() << ")\n";
    if (c.witness.contains("normal_form"))
        os << "  normal form: " << c.witness["normal_form"].dump() << "\n";
    if (c.witness.contains("membership") && c.witness["membership"].contains("residue"))
        os << "  residue mod p^t: " << c.witness["membership"]["residue"].dump() << "\n";
    if (c.witness.contains("residue")) os << "  residue mod p^t: " << c.witness["residue"].dump() << "\n";
    for (const auto& w : c.warnings) os << "  warning: " << w << "\n";
    return os.str();
}

Vec parse_coeffs(const std::string& csv) {
    Vec v;
    std::string item;
    std::istringstream is(csv);
    while (std::getline(is, item, ',')) v.push_back(parse_int(item));
    if (v.empty()) throw std::invalid_argument("empty coefficient list");
    return v;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("LENSCALC_BUDGET_BITS")) {
        const BigInt b = parse_int(env);
        if (b < 1) throw std::invalid_argument("LENSCALC_BUDGET_BITS must be >= 1");
        return to_u64(b, "LENSCALC_BUDGET_BITS");
    }
    return kDefaultBudgetBits;
}

Backend parse_backend(const std::string& s) {
    if (s == "auto") return Backend::automatic;
    if (s == "exact") return Backend::exact;
    if (s == "modular") return Backend::modular;
    throw CLI::ValidationError("--backend", "must be one of auto, exact, modular");
}

// shared flag bundle; numeric flags are decimal strings so they never clip
struct Args {
    std::string p, m, n_big, coeffs, exponent, family, family_file, backend = "auto",
                budget, cert_path;
    std::uint64_t k = 0, l = 0, n = 0, i = 0, j = 0, horizon = 1, start_index = 0;
    std::optional<std::uint64_t> t;

    BigInt pval() const { return parse_int(p); }
    BigInt mval() const { return parse_int(m); }
    std::uint64_t budget_bits() const {
        if (budget.empty()) return default_budget();
        const BigInt b = parse_int(budget);
        if (b < 1) throw std::invalid_argument("--budget-bits must be >= 1");
        return to_u64(b, "--budget-bits");
    }
    ParamFamily fam() const {
        if (!family_file.empty()) return ParamFamily::load(family_file);
        if (family.empty())
            throw std::invalid_argument("one of --family (with -p) or --family-file is required");
        return ParamFamily::builtin(family, parse_int(p));
    }
};

void add_t_option(CLI::App* cmd, Args& a) {
    cmd->add_option("-t,--modulus-exponent", a.t, "modulus exponent t (work mod p^t)");
}

void add_family_options(CLI::App* cmd, Args& a) {
    auto* fam = cmd->add_option("--family", a.family, "builtin family: f1, f2, f3, cor");
    auto* file = cmd->add_option("--family-file", a.family_file, "family table file");
    auto* p = cmd->add_option("-p,--prime", a.p, "prime p (with --family)");
    fam->excludes(file);
    file->excludes(p);
    fam->needs(p);
    p->needs(fam);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lens-space K-theory calculator with verification certificates"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.json, "emit JSON instead of text");
    Args a;

    // ring ----------------------------------------------------------------
    auto* ring = app.add_subcommand("ring", "ring structure queries");
    ring->require_subcommand(1);
    auto add_pkn = [&a](CLI::App* cmd) {
        cmd->add_option("-p,--prime", a.p, "prime p")->required();
        cmd->add_option("-k,--exponent", a.k, "group order exponent k (order p^k)")->required();
        cmd->add_option("-n,--dimension", a.n, "dimension parameter n")->required();
        cmd->add_option("--budget-bits", a.budget, "memory budget for exact coefficients");
    };
    auto* ring_info = ring->add_subcommand("info", "relation, lattice basis, determinant");
    add_pkn(ring_info);
    auto* ring_pow = ring->add_subcommand("pow", "power of an element");
    add_pkn(ring_pow);
    ring_pow->add_option("-c,--coeffs", a.coeffs, "element coefficients c0,c1,...")->required();
    ring_pow->add_option("-e,--power", a.exponent, "exponent (decimal, unbounded)")->required();
    auto* ring_member = ring->add_subcommand("member", "ideal membership of an element mod p^t");
    add_pkn(ring_member);
    ring_member->add_option("-c,--coeffs", a.coeffs, "element coefficients c0,c1,...")->required();
    add_t_option(ring_member, a);
    auto* ring_factors = ring->add_subcommand("factors", "invariant factors of the ideal lattice");
    add_pkn(ring_factors);

    // verify ----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "proposition-level verifications");
    verify->require_subcommand(1);
    auto* prop = verify->add_subcommand(
        "prop-ideal", "non-membership of (x^(p^(k-l))-1)^m in <x^(p^k)-1, (x-1)^n>");
    prop->add_option("-p,--prime", a.p, "prime p")->required();
    prop->add_option("-k,--exponent", a.k, "outer exponent k")->required();
    prop->add_option("-l,--level", a.l, "inner exponent l (1 <= l < k)")->required();
    prop->add_option("-m,--power", a.m, "power m")->required();
    prop->add_option("-n,--dimension", a.n, "dimension parameter n")->required();
    prop->add_option("--backend", a.backend, "auto, exact, or modular")->default_str("auto");
    prop->add_option("--budget-bits", a.budget, "memory budget for exact coefficients");
    add_t_option(prop, a);

    // genus -----------------------------------------------------------------
    auto* genus = app.add_subcommand("genus", "level and Schwarz-genus bounds");
    genus->require_subcommand(1);
    auto* gb = genus->add_subcommand("bounds", "all applicable bounds for (p, k, m)");
    gb->add_option("-p,--prime", a.p, "prime p")->required();
    gb->add_option("-k,--exponent", a.k, "group order exponent k")->required();
    gb->add_option("-m,--power", a.m, "dimension parameter m")->required();
    auto* gr = genus->add_subcommand("refute", "refute an essential map by the genus bound");
    gr->add_option("-p,--prime", a.p, "prime p")->required();
    gr->add_option("-k,--exponent", a.k, "group order exponent k")->required();
    gr->add_option("-m,--power", a.m, "source dimension m")->required();
    gr->add_option("-n,--dimension", a.n_big, "target dimension n")->required();
    auto* gm = genus->add_subcommand("remark", "inequality chain between two family stages");
    add_family_options(gm, a);
    gm->add_option("-i,--upper", a.i, "later stage index i")->required();
    gm->add_option("-j,--lower", a.j, "earlier stage index j")->required();

    // els ---------------------------------------------------------------
    auto* els = app.add_subcommand("els", "essential-lens-sequence family audits");
    els->require_subcommand(1);
    auto* ec = els->add_subcommand("check", "growth conditions over a horizon");
    add_family_options(ec, a);
    ec->add_option("--horizon", a.horizon, "last stage index to audit")->required();
    auto* cert = els->add_subcommand("certify", "finite-stage cup-length certificate");
    add_family_options(cert, a);
    cert->add_option("-i,--stage", a.i, "base stage index i")->required();
    cert->add_option("-m,--power", a.m, "power m (1, or m < p^(k_i-k_0))")->required();
    cert->add_option("-j,--ahead", a.j, "stages ahead (default 1)")->default_val(1);
    cert->add_option("--backend", a.backend, "auto, exact, or modular")->default_str("auto");
    cert->add_option("--budget-bits", a.budget, "memory budget for exact coefficients");
    add_t_option(cert, a);
    auto* cor = els->add_subcommand("corollary", "stage audit of the corollary family");
    cor->add_option("-p,--prime", a.p, "odd prime p")->required();
    cor->add_option("--horizon", a.horizon, "last stage index to audit")->required();
    cor->add_option("--start-index", a.start_index, "first stage index (default 0)");

    // check-cert ----------------------------------------------------------
    auto* cc = app.add_subcommand("check-cert", "independently validate a certificate file");
    cc->add_option("file", a.cert_path, "certificate JSON (object or array)")->required();

    // let the global --json appear after the subcommand too
    for (auto* s : app.get_subcommands({})) {
        s->fallthrough();
        for (auto* s2 : s->get_subcommands({})) s2->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n" << app.help();
        return 3;
    }

    try {
        if (*ring_info) {
            auto r = LensRing::make(a.pval(), a.k, a.n, a.budget_bits());
            Json j;
            j["p"] = dec(r->p());
            j["k"] = r->k();
            j["n"] = r->n();
            j["relation"] = to_text(r->relation(), "y");
            j["lattice_hnf"] = matrix_to_json(r->lattice_hnf());
            j["lattice_det"] = dec(r->lattice_det());
            j["required_bits"] = dec(r->required_bits());
            out.info = j;
            std::ostringstream os;
            os << "ring (p=" << dec(r->p()) << ", k=" << r->k() << ", n=" << r->n() << ")\n"
               << "relation f(y) = " << to_text(r->relation(), "y") << "\n"
               << "lattice determinant = " << dec(r->lattice_det()) << "\n"
               << "required bits = " << dec(r->required_bits()) << "\n";
            out.text = os.str();
        } else if (*ring_pow) {
            auto r = LensRing::make(a.pval(), a.k, a.n, a.budget_bits());
            RingElement e = pow(r->element(parse_coeffs(a.coeffs)), parse_int(a.exponent));
            out.info = Json{{"coeffs", vec_to_json(e.coeffs())}};
            std::ostringstream os;
            os << "coeffs:";
            for (const auto& c : e.coeffs()) os << " " << dec(c);
            os << "\n";
            out.text = os.str();
        } else if (*ring_member) {
            auto r = LensRing::make(a.pval(), a.k, a.n, a.budget_bits());
            const std::uint64_t t = a.t.value_or(a.k);
            Certificate c = member_mod(*r, r->element(parse_coeffs(a.coeffs)), t);
            out.text = summarize(c);
            out.certs.push_back(std::move(c));
        } else if (*ring_factors) {
            auto r = LensRing::make(a.pval(), a.k, a.n, a.budget_bits());
            out.info = Json{{"invariant_factors", vec_to_json(invariant_factors(*r))}};
            std::ostringstream os;
            os << "invariant factors:";
            for (const auto& d : invariant_factors(*r)) os << " " << dec(d);
            os << "\n";
            out.text = os.str();
        } else if (*prop) {
            VerifyOptions opts;
            opts.backend = parse_backend(a.backend);
            opts.t = a.t;
            opts.budget_bits = a.budget_bits();
            Certificate c = verify_ideal_prop(a.pval(), a.k, a.l, a.mval(), a.n, opts);
            out.text = summarize(c);
            out.certs.push_back(std::move(c));
        } else if (*gb) {
            for (BoundReport r : {level_lower_bound(a.pval(), a.k, a.mval()),
                                  meyer_exact(a.pval(), a.mval()),
                                  schwarz_lower(a.pval(), a.mval())}) {
                Certificate c = r.to_certificate();
                if (!r.applicable) c.witness["informational"] = true;
                out.text += summarize(c);
                out.certs.push_back(std::move(c));
            }
        } else if (*gr) {
            Certificate c = refute_essential_map(a.pval(), a.k, a.mval(), parse_int(a.n_big));
            out.text = summarize(c);
            out.certs.push_back(std::move(c));
        } else if (*gm) {
            Certificate c = remark_consistency(a.fam(), a.i, a.j);
            out.text = summarize(c);
            out.certs.push_back(std::move(c));
        } else if (*ec) {
            Certificate c = check_growth(a.fam(), a.horizon);
            out.text = summarize(c);
            out.certs.push_back(std::move(c));
        } else if (*cert) {
            CupOptions opts;
            opts.backend = parse_backend(a.backend);
            opts.t = a.t;
            opts.budget_bits = a.budget_bits();
            Certificate c = certify_cup_length(a.fam(), a.i, a.mval(), a.j, opts);
            out.text = summarize(c);
            out.certs.push_back(std::move(c));
        } else if (*cor) {
            Certificate c = corollary_check(a.pval(), a.horizon, a.start_index);
            out.text = summarize(c);
            out.certs.push_back(std::move(c));
        } else if (*cc) {
            std::ifstream in(a.cert_path);
            if (!in) throw std::runtime_error("cannot open certificate file: " + a.cert_path);
            Json doc = Json::parse(in);
            Json results = Json::array();
            bool all_ok = true;
            std::ostringstream os;
            const Json docs = doc.is_array() ? doc : Json::array({doc});
            for (std::size_t idx = 0; idx < docs.size(); ++idx) {
                CheckResult r = check_certificate(docs[idx]);
                all_ok = all_ok && r.ok;
                results.push_back(Json{{"index", idx}, {"ok", r.ok}, {"message", r.message}});
                os << idx << ": " << (r.ok ? "valid" : "INVALID: " + r.message) << "\n";
            }
            out.info = Json{{"results", results}, {"all_ok", all_ok}};
            out.text = os.str();
            out.finish();
            return all_ok ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return out.finish();
}
