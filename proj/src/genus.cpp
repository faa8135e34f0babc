#include "lenscalc/genus.hpp"

namespace lenscalc {

Certificate BoundReport::to_certificate() const {
    Certificate c;
    c.claim = kind;
    c.backend = "formula";
    c.params = params;
    if (applicable) {
        c.verdict = Verdict::verified;
        c.witness["value"] = dec(*value);
    } else {
        c.verdict = Verdict::unknown;
        c.witness["not_applicable"] = reason;
    }
    return c;
}

namespace {
void require_prime_pos(const BigInt& p, const BigInt& m) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + dec(p));
    if (m < 1) throw std::invalid_argument("m must be >= 1");
}
}  // namespace

BoundReport level_lower_bound(const BigInt& p, std::uint64_t k, const BigInt& m) {
    require_prime_pos(p, m);
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    BoundReport r;
    r.kind = "level-lower";
    r.params["p"] = dec(p);
    r.params["k"] = k;
    r.params["m"] = dec(m);
    r.applicable = true;
    r.value = ceil_div(m - 1, pow_big(p, k - 1)) + 1;
    return r;
}

BoundReport meyer_exact(const BigInt& p, const BigInt& m) {
    require_prime_pos(p, m);
    BoundReport r;
    r.kind = "meyer-exact";
    r.params["p"] = dec(p);
    r.params["m"] = dec(m);
    if (p == 2) {
        r.reason = "requires an odd prime";
        return r;
    }
    if (mod_reduce(m - 2, p) != 0) {
        r.reason = dec(m) + " != 2 mod " + dec(p);
        return r;
    }
    r.applicable = true;
    r.value = (m - 2) / p + 2;
    return r;
}

BoundReport schwarz_lower(const BigInt& p, const BigInt& m) {
    require_prime_pos(p, m);
    BoundReport r;
    r.kind = "schwarz-lower";
    r.params["p"] = dec(p);
    r.params["m"] = dec(m);
    r.applicable = true;
    r.value = ceil_div(m - 1, p) + 1;
    return r;
}

Certificate refute_essential_map(const BigInt& p, std::uint64_t k, const BigInt& m,
                                 const BigInt& n) {
    require_prime_pos(p, m);
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    BoundReport sg = schwarz_lower(p, m);
    Certificate c;
    c.claim = "refute-essential-map";
    c.backend = "formula";
    c.params["p"] = dec(p);
    c.params["k"] = k;
    c.params["m"] = dec(m);
    c.params["n"] = dec(n);
    c.witness["schwarz_lower"] = dec(*sg.value);
    c.witness["n"] = dec(n);
    if (n < *sg.value) {
        c.verdict = Verdict::refuted;
        c.witness["note"] = "Sg lower bound exceeds n: no essential map can exist";
    } else {
        c.verdict = Verdict::unknown;
        c.witness["note"] = "bound not exceeded; existence is not decided by this test";
    }
    return c;
}

Certificate remark_consistency(const ParamFamily& fam, std::uint64_t i, std::uint64_t j) {
    if (i <= j) throw std::invalid_argument("need i > j");
    const BigInt& p = fam.p();
    auto si = fam.eval(i);
    auto sj = fam.eval(j);
    auto s0 = fam.eval(0);
    if (si.k < sj.k) throw std::invalid_argument("family has decreasing k between stages");

    Certificate c;
    c.claim = "remark-consistency";
    c.backend = "formula";
    c.params["p"] = dec(p);
    c.params["family"] = fam.to_json();
    c.params["i"] = i;
    c.params["j"] = j;
    for (const auto& w : fam.warnings()) c.warnings.push_back(w);

    // chain: n_j >= ceil((n_i-1)/p^{k_i-k_j}) + 1 >= p^{k_j-k_0} + 1 > p^{k_j-k_0}
    const BigInt pk_ij = pow_big(p, si.k - sj.k);
    const BigInt mid = ceil_div(si.n - 1, pk_ij) + 1;
    const BigInt tail = pow_big(p, sj.k - s0.k);
    c.witness["n_j"] = dec(sj.n);
    c.witness["level_bound_mid"] = dec(mid);
    c.witness["p_pow_kj_k0"] = dec(tail);
    Json links = Json::array();
    links.push_back(Json{{"link", "n_j >= ceil((n_i-1)/p^(k_i-k_j)) + 1"},
                         {"lhs", dec(sj.n)},
                         {"rhs", dec(mid)},
                         {"holds", sj.n >= mid}});
    links.push_back(Json{{"link", "ceil((n_i-1)/p^(k_i-k_j)) + 1 >= p^(k_j-k_0) + 1"},
                         {"lhs", dec(mid)},
                         {"rhs", dec(tail + 1)},
                         {"holds", mid >= tail + 1}});
    links.push_back(Json{{"link", "p^(k_j-k_0) + 1 > p^(k_j-k_0)"},
                         {"lhs", dec(tail + 1)},
                         {"rhs", dec(tail)},
                         {"holds", true}});
    c.witness["links"] = links;
    std::string first_violated;
    for (const auto& L : c.witness["links"])
        if (!L.at("holds").get<bool>()) {
            first_violated = L.at("link").get<std::string>();
            break;
        }
    if (first_violated.empty()) {
        c.verdict = Verdict::verified;
    } else {
        c.verdict = Verdict::refuted;
        c.witness["first_violated"] = first_violated;
    }
    return c;
}

}  // namespace lenscalc
