#include "lenscalc/checker.hpp"

#include <algorithm>
#include <cstdint>

// Validates certificates from their own embedded data. All arithmetic here
// is local (incremental exact binomials, greedy echelon reduction) so a bug
// in the production kernels cannot silently vouch for itself.

namespace lenscalc {

namespace {

struct Fail : std::runtime_error {
    explicit Fail(const std::string& m) : std::runtime_error(m) {}
};

BigInt geti(const Json& j, const char* key) {
    const Json& v = j.at(key);
    if (v.is_string()) return parse_int(v.get<std::string>());
    if (v.is_number_unsigned()) return BigInt(static_cast<unsigned long>(v.get<std::uint64_t>()));
    if (v.is_number_integer()) return BigInt(static_cast<long>(v.get<std::int64_t>()));
    throw Fail(std::string("field '") + key + "' is not an integer");
}

std::uint64_t getu(const Json& j, const char* key) { return to_u64(geti(j, key), key); }

Vec getvec(const Json& j) {
    Vec v;
    for (const auto& x : j) v.push_back(parse_int(x.get<std::string>()));
    return v;
}

Matrix getmat(const Json& j) {
    Matrix m;
    for (const auto& r : j) m.push_back(getvec(r));
    return m;
}

bool all_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

// row of C(N, s) for s < len, optionally reduced mod q (q = 0 -> exact);
// incremental product, independent of the production binomial code
Vec binom_row(const BigInt& N, std::size_t len, const BigInt& q) {
    Vec row(len, 0);
    if (N < 0) throw Fail("negative binomial argument");
    BigInt c = 1;
    for (std::size_t s = 0; s < len; ++s) {
        if (BigInt(static_cast<unsigned long>(s)) > N) break;
        row[s] = (q == 0) ? c : mod_reduce(c, q);
        c *= N - s;
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(s + 1));
    }
    return row;
}

// ideal lattice generator rows y^i * f mod y^n over the (y^1..y^{n-1})
// block, where f = (1+y)^{p^k} - 1; entries mod q when q > 0
Matrix gen_rows(const BigInt& p, std::uint64_t k, std::uint64_t n, const BigInt& q) {
    Vec f = binom_row(pow_big(p, k), n, q);
    f[0] = 0;
    Matrix m;
    for (std::uint64_t i = 0; i + 1 < n; ++i) {
        Vec row(n - 1, 0);
        for (std::uint64_t c = i; c + 1 < n; ++c) row[c] = f[c - i + 1];
        if (q > 0 && all_zero(row)) continue;
        m.push_back(std::move(row));
    }
    return m;
}

// (x^T - 1)^m rewritten in y = x-1, truncated mod y^n; entries mod q if q > 0
Vec element_row(const BigInt& T, const BigInt& m, std::uint64_t n, const BigInt& q) {
    const std::uint64_t mu = to_u64(m, "m");
    Vec out(n, 0);
    Vec cs = binom_row(m, mu + 1, 0);
    for (std::uint64_t j = 0; j <= mu; ++j) {
        BigInt c = ((mu - j) % 2 == 1) ? -cs[j] : cs[j];
        Vec row = binom_row(T * j, n, 0);
        for (std::uint64_t s = 0; s < n; ++s) out[s] += c * row[s];
    }
    if (q > 0)
        for (auto& x : out) x = mod_reduce(x, q);
    return out;
}

// greedy reduction of v against an upper-echelon basis; over Z when q = 0,
// mod q otherwise. For echelon bases the result is zero iff v is in the
// span (mod q this additionally needs the annihilator-closure check below).
Vec echelon_reduce(const Matrix& b, Vec v, const BigInt& q) {
    for (const auto& row : b) {
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        if (c == row.size() || c >= v.size() || v[c] == 0) continue;
        BigInt f = floor_div(v[c], row[c]);
        if (f == 0) continue;
        for (std::size_t s = c; s < v.size(); ++s) {
            v[s] -= f * row[s];
            if (q > 0) v[s] = mod_reduce(v[s], q);
        }
    }
    return v;
}

struct EchelonInfo {
    std::vector<std::size_t> pivot_col;
    Vec pivot_val;
};

// structural echelon checks shared by the exact and modular witnesses
EchelonInfo echelon_info(const Matrix& b, std::size_t width, const BigInt& q) {
    EchelonInfo info;
    std::size_t prev = 0;
    bool first = true;
    for (const auto& row : b) {
        if (row.size() != width) throw Fail("basis row width mismatch");
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        if (c == row.size()) throw Fail("zero row in basis");
        if (!first && c <= prev) throw Fail("basis is not in echelon form");
        if (row[c] <= 0) throw Fail("non-positive pivot in basis");
        for (const auto& x : row) {
            if (x < 0) throw Fail("negative entry in basis");
            if (q > 0 && x >= q) throw Fail("basis entry not reduced mod q");
        }
        for (std::size_t r2 = 0; r2 < info.pivot_col.size(); ++r2)
            if (b[r2][c] >= row[c]) throw Fail("entry above pivot not reduced");
        info.pivot_col.push_back(c);
        info.pivot_val.push_back(row[c]);
        prev = c;
        first = false;
    }
    return info;
}

// full soundness chain for a modular non-membership witness: the basis is
// Howell-shaped, closed under annihilators, contains the re-derived
// generators, and the recorded residue replays and is nonzero
void check_modular_witness(const Json& w, const BigInt& p, std::uint64_t k, std::uint64_t n,
                           std::uint64_t t, const Vec& element, bool expect_nonzero) {
    const BigInt q = pow_big(p, t);
    if (geti(w, "modulus") != q) throw Fail("recorded modulus differs from p^t");
    Matrix basis = getmat(w.at("howell_basis"));
    Vec emod = getvec(w.at("element_mod"));
    Vec residue = getvec(w.at("residue"));
    if (emod.size() != n || residue.size() != n) throw Fail("witness vector length mismatch");
    for (std::size_t s = 0; s < n; ++s)
        if (mod_reduce(element[s], q) != emod[s]) throw Fail("element_mod does not re-derive");

    EchelonInfo info = echelon_info(basis, n > 0 ? n - 1 : 0, q);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        BigInt pv = info.pivot_val[r];
        std::uint64_t v = strip_p(pv, p);
        if (pv != 1) throw Fail("pivot is not a power of p");
        if (v >= t) throw Fail("pivot valuation out of range");
        // annihilator closure: p^{t-v} * row stays in the span
        Vec ann(basis[r].size());
        const BigInt mult = pow_big(p, t - v);
        for (std::size_t s = 0; s < ann.size(); ++s) ann[s] = mod_reduce(mult * basis[r][s], q);
        if (!all_zero(echelon_reduce(basis, std::move(ann), q)))
            throw Fail("basis not closed under annihilators");
    }
    for (auto& g : gen_rows(p, k, n, q))
        if (!all_zero(echelon_reduce(basis, std::move(g), q)))
            throw Fail("a lattice generator is outside the basis span");

    Vec tail(emod.begin() + 1, emod.end());
    Vec rtail = echelon_reduce(basis, std::move(tail), q);
    Vec replay(n, 0);
    replay[0] = emod[0];
    for (std::size_t s = 1; s < n; ++s) replay[s] = rtail[s - 1];
    if (replay != residue) throw Fail("residue does not replay");
    if (expect_nonzero && all_zero(residue)) throw Fail("claimed nonzero residue is zero");
    if (!expect_nonzero && !all_zero(residue)) throw Fail("claimed zero residue is nonzero");
}

// exact membership of the tail of v in the ideal lattice, decided against
// the re-derived triangular generators (independent of any witness basis)
bool exact_member(const BigInt& p, std::uint64_t k, std::uint64_t n, const Vec& v) {
    if (v.size() != n) throw Fail("element length mismatch");
    if (v[0] != 0) return false;
    if (n == 1) return true;
    Vec tail(v.begin() + 1, v.end());
    return all_zero(echelon_reduce(gen_rows(p, k, n, 0), std::move(tail), BigInt(0)));
}

// replay of an exact-backend witness: echelon HNF basis that contains the
// generators, and the recorded normal form replays
void check_exact_witness(const Json& w, const BigInt& p, std::uint64_t k, std::uint64_t n,
                         const Vec& element) {
    Matrix basis = getmat(w.at("hnf_basis"));
    Vec nf = getvec(w.at("normal_form"));
    if (nf.size() != n) throw Fail("normal_form length mismatch");
    echelon_info(basis, n > 0 ? n - 1 : 0, BigInt(0));
    for (auto& g : gen_rows(p, k, n, 0))
        if (!all_zero(echelon_reduce(basis, std::move(g), BigInt(0))))
            throw Fail("a lattice generator is outside the basis span");
    if (element[0] != nf[0]) throw Fail("normal form does not replay");
    if (n > 1) {
        Vec tail(element.begin() + 1, element.end());
        Vec r = echelon_reduce(basis, std::move(tail), BigInt(0));
        for (std::size_t s = 1; s < n; ++s)
            if (r[s - 1] != nf[s]) throw Fail("normal form does not replay");
    }
}

struct StageVals {
    BigInt k, n;
};

// local re-evaluation of family stages from the certificate's family block
StageVals family_eval(const Json& fam, std::uint64_t i) {
    const BigInt p = geti(fam, "p");
    if (!fam.at("builtin").get<bool>()) {
        for (const auto& row : fam.at("table"))
            if (getu(row, "i") == i) return {geti(row, "k"), geti(row, "n")};
        throw Fail("stage " + std::to_string(i) + " missing from family table");
    }
    const std::string name = fam.at("name").get<std::string>();
    const BigInt bi(static_cast<unsigned long>(i));
    if (name == "f1") return {bi + 1, pow_big(p, i) + 1};
    if (name == "f2") return {bi + 1, pow_big(p, i) + 2};
    if (name == "f3") {
        if (i > 62) throw Fail("family stage too large");
        const std::uint64_t two_i = std::uint64_t(1) << i;
        return {BigInt(static_cast<unsigned long>(two_i)), pow_big(p, two_i - 1) + 1};
    }
    if (name == "cor") {
        BigInt acc = 0;
        for (std::uint64_t s = 1; s + 1 <= i; ++s) acc += pow_big(p, s);
        return {bi, 3 * pow_big(p, i) - acc + 1};
    }
    throw Fail("unknown builtin family: " + name);
}

void expect(bool cond, const char* msg) {
    if (!cond) throw Fail(msg);
}

// ---- per-claim validators -------------------------------------------------

void check_formula_bound(const std::string& claim, const Json& params, const Json& witness,
                         const std::string& verdict) {
    const BigInt p = geti(params, "p");
    const BigInt m = geti(params, "m");
    expect(is_prime(p), "p is not prime");
    expect(m >= 1, "m must be positive");
    if (verdict == "unknown") {
        expect(claim == "meyer-exact", "only meyer-exact may be not-applicable");
        expect(witness.contains("not_applicable"), "missing not_applicable reason");
        expect(p == 2 || mod_reduce(m - 2, p) != 0, "recorded not-applicable but formula applies");
        return;
    }
    expect(verdict == "verified", "formula bounds are verified or unknown");
    BigInt expected;
    if (claim == "level-lower") {
        expected = ceil_div(m - 1, pow_big(p, getu(params, "k") - 1)) + 1;
    } else if (claim == "meyer-exact") {
        expect(p != 2, "meyer-exact requires odd p");
        expect(mod_reduce(m - 2, p) == 0, "meyer-exact requires m = 2 mod p");
        expected = (m - 2) / p + 2;
    } else {
        expected = ceil_div(m - 1, p) + 1;
    }
    expect(geti(witness, "value") == expected, "bound value does not re-evaluate");
}

void check_refute_map(const Json& params, const Json& witness, const std::string& verdict) {
    const BigInt p = geti(params, "p");
    const BigInt m = geti(params, "m");
    const BigInt n = geti(params, "n");
    expect(is_prime(p), "p is not prime");
    const BigInt sg = ceil_div(m - 1, p) + 1;
    expect(geti(witness, "schwarz_lower") == sg, "schwarz bound does not re-evaluate");
    if (verdict == "refuted") expect(n < sg, "refuted but bound not exceeded");
    else if (verdict == "unknown") expect(n >= sg, "unknown but bound exceeded");
    else throw Fail("refute-essential-map never verifies existence");
}

void check_remark(const Json& params, const Json& witness, const std::string& verdict) {
    const Json& fam = params.at("family");
    const std::uint64_t i = getu(params, "i"), j = getu(params, "j");
    expect(i > j, "remark requires i > j");
    const BigInt p = geti(fam, "p");
    StageVals si = family_eval(fam, i), sj = family_eval(fam, j), s0 = family_eval(fam, 0);
    const BigInt mid = ceil_div(si.n - 1, pow_big(p, si.k - sj.k)) + 1;
    const BigInt tail = pow_big(p, sj.k - s0.k);
    expect(geti(witness, "level_bound_mid") == mid, "middle link does not re-evaluate");
    expect(geti(witness, "p_pow_kj_k0") == tail, "tail link does not re-evaluate");
    expect(geti(witness, "n_j") == sj.n, "n_j does not re-evaluate");
    const bool ok1 = sj.n >= mid, ok2 = mid >= tail + 1;
    if (verdict == "verified") expect(ok1 && ok2, "verified but a link fails");
    else if (verdict == "refuted") expect(!ok1 || !ok2, "refuted but all links hold");
    else throw Fail("remark-consistency is verified or refuted");
}

void check_growth_cert(const Json& params, const Json& witness, const std::string& verdict) {
    const Json& fam = params.at("family");
    const std::uint64_t horizon = getu(params, "horizon");
    const BigInt p = geti(fam, "p");
    const Json& stages = witness.at("stages");
    StageVals s0 = family_eval(fam, 0);
    BigInt prev_k;
    for (std::uint64_t i = 0; i <= horizon; ++i) {
        StageVals s = family_eval(fam, i);
        // every recorded stage row must re-derive from the family block
        expect(i < stages.size(), "stage list too short");
        const Json& row = stages.at(i);
        expect(getu(row, "i") == i, "stage indices out of order");
        expect(geti(row, "k") == s.k && geti(row, "n") == s.n, "stage does not re-evaluate");
        const bool inc_ok = (i == 0) || s.k > prev_k;
        const bool base_ok = s.k >= s0.k;
        const bool grow_ok = base_ok && s.n > pow_big(p, s.k - s0.k);
        if (row.contains("p_pow_ki_k0"))
            expect(base_ok && geti(row, "p_pow_ki_k0") == pow_big(p, s.k - s0.k),
                   "stage bound does not re-evaluate");
        if (!inc_ok || !base_ok || !grow_ok) {
            expect(verdict == "refuted", "violation found but verdict is not refuted");
            expect(getu(witness.at("violation"), "i") == i,
                   "first violated stage does not re-evaluate");
            expect(stages.size() == i + 1, "stage list continues past the violation");
            return;
        }
        prev_k = s.k;
    }
    expect(verdict == "verified", "all stages hold but verdict is not verified");
    expect(stages.size() == horizon + 1, "stage list length mismatch");
}

void check_corollary(const Json& params, const Json& witness, const std::string& verdict) {
    const Json& fam = params.at("family");
    const BigInt p = geti(fam, "p");
    expect(p != 2 && is_prime(p), "corollary requires an odd prime");
    const std::uint64_t horizon = getu(params, "horizon");
    const std::uint64_t start = getu(params, "start_index");
    const Json& stages = witness.at("stages");
    expect(stages.size() == horizon - start + 1, "stage list length mismatch");
    bool any_violation = false;
    std::size_t row_idx = 0;
    for (std::uint64_t i = start; i <= horizon; ++i, ++row_idx) {
        const Json& row = stages.at(row_idx);
        expect(getu(row, "i") == i, "stage indices out of order");
        StageVals si = family_eval(fam, i), sn = family_eval(fam, i + 1);
        const BigInt m = sn.n + 1;
        expect(geti(row, "m") == m, "m does not re-evaluate");
        expect(geti(row, "n_i") == si.n, "n_i does not re-evaluate");
        const bool congruent = mod_reduce(m - 2, p) == 0;
        expect(row.at("congruence_holds").get<bool>() == congruent,
               "congruence flag does not re-evaluate");
        const BigInt meyer = floor_div(m - 2, p) + 2;
        expect(geti(row, "meyer_value") == meyer, "meyer value does not re-evaluate");
        const bool le = congruent && meyer <= si.n;
        expect(row.at("le_holds").get<bool>() == le, "comparison flag does not re-evaluate");
        expect(row.at("equality").get<bool>() == (congruent && meyer == si.n),
               "equality flag does not re-evaluate");
        if (!congruent || !le) any_violation = true;
    }
    expect((verdict == "refuted") == any_violation, "verdict does not match the stage audit");
    expect(witness.at("violations").empty() != any_violation, "violation list inconsistent");
}

void check_hypotheses_block(const Json& witness) {
    for (const auto& h : witness.at("hypotheses")) {
        const BigInt lhs = geti(h, "lhs"), rhs = geti(h, "rhs");
        expect(h.at("holds").get<bool>() == (lhs < rhs), "hypothesis flag does not re-evaluate");
        expect(lhs < rhs, "recorded hypothesis does not hold");
    }
}

void check_prop_ideal(const Json& params, const Json& witness, const std::string& verdict,
                      const std::string& backend) {
    const BigInt p = geti(params, "p");
    const std::uint64_t k = getu(params, "k"), l = getu(params, "l"), n = getu(params, "n");
    const BigInt m = geti(params, "m");
    expect(is_prime(p), "p is not prime");
    expect(k > l && l >= 1, "need k > l >= 1");

    if (verdict == "unknown") {
        if (witness.contains("violated")) {
            const std::string which = witness.at("violated").get<std::string>();
            const BigInt lhs = geti(witness, "lhs"), rhs = geti(witness, "rhs");
            if (which == "m < p^l")
                expect(lhs == m && rhs == pow_big(p, l), "violation does not re-evaluate");
            else if (which == "m*p^(k-l) < n")
                expect(lhs == m * pow_big(p, k - l) && rhs == n,
                       "violation does not re-evaluate");
            else
                throw Fail("unknown hypothesis name");
            expect(lhs >= rhs, "claimed violated hypothesis actually holds");
            return;
        }
        if (witness.contains("budget")) return;  // resource limit: nothing to re-verify
        // inconclusive modular pass: replay with a zero-residue expectation
        const std::uint64_t t = getu(params, "t");
        Vec element = element_row(pow_big(p, k - l), m, n, pow_big(p, t));
        check_modular_witness(witness.at("membership"), p, k, n, t, element, false);
        return;
    }

    expect(m < pow_big(p, l), "hypothesis m < p^l fails");
    expect(m * pow_big(p, k - l) < n, "hypothesis m*p^(k-l) < n fails");
    check_hypotheses_block(witness);
    const BigInt T = pow_big(p, k - l);
    if (backend == "modular") {
        expect(verdict == "verified", "modular backend cannot refute this claim");
        const std::uint64_t t = getu(params, "t");
        Vec element = element_row(T, m, n, pow_big(p, t));
        check_modular_witness(witness.at("membership"), p, k, n, t, element, true);
        return;
    }
    expect(backend == "exact-hnf", "unrecognized backend");
    Vec element = element_row(T, m, n, BigInt(0));
    check_exact_witness(witness, p, k, n, element);
    const bool member = exact_member(p, k, n, element);
    if (verdict == "verified") expect(!member, "element is in the ideal");
    else if (verdict == "refuted") expect(member, "element is not in the ideal");
    else throw Fail("unrecognized verdict for exact backend");
}

void check_member_mod(const Json& params, const Json& witness, const std::string& verdict) {
    const BigInt p = geti(params, "p");
    const std::uint64_t k = getu(params, "k"), n = getu(params, "n"), t = getu(params, "t");
    expect(is_prime(p), "p is not prime");
    Vec element = getvec(params.at("element"));
    expect(element.size() == n, "element length mismatch");
    check_modular_witness(witness, p, k, n, t, element, verdict == "refuted");
    expect(verdict == "refuted" || verdict == "unknown",
           "membership mod p^t is refuted or unknown");
}

void check_cup_length(const Json& params, const Json& witness, const std::string& verdict,
                      const std::string& backend) {
    const Json& fam = params.at("family");
    const BigInt p = geti(fam, "p");
    expect(is_prime(p), "p is not prime");
    const std::uint64_t i = getu(params, "i"), j = getu(params, "j");
    const BigInt m = geti(params, "m");
    expect(j >= 1 && m >= 1, "need j >= 1 and m >= 1");
    StageVals s0 = family_eval(fam, 0), si = family_eval(fam, i), sd = family_eval(fam, i + j);
    expect(geti(params.at("stage"), "k") == sd.k && geti(params.at("stage"), "n") == sd.n,
           "stage parameters do not re-evaluate");
    expect(m < pow_big(p, si.k - s0.k) || m == 1,
           "outside the cup-length hypothesis m < p^(k_i-k_0)");

    if (verdict == "unknown") {
        if (witness.contains("violated")) {
            // named instance-hypothesis failure; re-evaluate it
            const std::string which = witness.at("violated").get<std::string>();
            if (which == "m < p^k_i") expect(m >= pow_big(p, si.k), "hypothesis actually holds");
            else if (which == "m*p^(k_{i+j}-k_i) < n_{i+j}")
                expect(m * pow_big(p, sd.k - si.k) >= sd.n, "hypothesis actually holds");
            else
                throw Fail("unknown hypothesis name");
            return;
        }
        if (witness.contains("budget")) return;
        const std::uint64_t t = getu(params, "t");
        Vec element = element_row(pow_big(p, sd.k - si.k), m, to_u64(sd.n, "n"), pow_big(p, t));
        check_modular_witness(witness.at("membership"), p, to_u64(sd.k, "k"), to_u64(sd.n, "n"),
                              t, element, false);
        return;
    }

    expect(m < pow_big(p, si.k), "hypothesis m < p^k_i fails");
    expect(m * pow_big(p, sd.k - si.k) < sd.n, "hypothesis m*p^(k_ij-k_i) < n_ij fails");
    check_hypotheses_block(witness);
    const std::uint64_t k = to_u64(sd.k, "k"), n = to_u64(sd.n, "n");
    const BigInt T = pow_big(p, sd.k - si.k);
    if (backend == "modular") {
        expect(verdict == "verified", "modular backend cannot refute this claim");
        const std::uint64_t t = getu(params, "t");
        Vec element = element_row(T, m, n, pow_big(p, t));
        check_modular_witness(witness.at("membership"), p, k, n, t, element, true);
        return;
    }
    expect(backend == "exact-hnf", "unrecognized backend");
    Vec element = element_row(T, m, n, BigInt(0));
    check_exact_witness(witness, p, k, n, element);
    const bool member = exact_member(p, k, n, element);
    if (verdict == "verified") expect(!member, "element vanishes at this stage");
    else if (verdict == "refuted") expect(member, "element does not vanish");
    else throw Fail("unrecognized verdict for exact backend");
}

}  // namespace

CheckResult check_certificate(const Json& cert) {
    try {
        if (!cert.is_object()) throw Fail("certificate is not a JSON object");
        for (const char* key : {"verdict", "backend", "params", "witness", "version"})
            if (!cert.contains(key)) throw Fail(std::string("missing envelope key: ") + key);
        if (cert.size() != 5) throw Fail("unexpected extra envelope keys");
        if (!cert.at("version").is_number_integer() || cert.at("version").get<int>() != 1)
            throw Fail("unsupported certificate version");
        const std::string verdict = cert.at("verdict").get<std::string>();
        if (verdict != "verified" && verdict != "refuted" && verdict != "unknown")
            throw Fail("unrecognized verdict: " + verdict);
        const std::string backend = cert.at("backend").get<std::string>();
        const Json& params = cert.at("params");
        const Json& witness = cert.at("witness");
        if (!params.is_object() || !witness.is_object())
            throw Fail("params and witness must be objects");
        if (params.contains("warnings"))
            for (const auto& w : params.at("warnings"))
                if (!w.is_string()) throw Fail("warnings must be strings");
        const std::string claim = params.value("claim", "");
        if (claim.empty()) throw Fail("missing claim");

        if (claim == "level-lower" || claim == "meyer-exact" || claim == "schwarz-lower")
            check_formula_bound(claim, params, witness, verdict);
        else if (claim == "refute-essential-map")
            check_refute_map(params, witness, verdict);
        else if (claim == "remark-consistency")
            check_remark(params, witness, verdict);
        else if (claim == "els-growth")
            check_growth_cert(params, witness, verdict);
        else if (claim == "corollary-stages")
            check_corollary(params, witness, verdict);
        else if (claim == "prop-ideal")
            check_prop_ideal(params, witness, verdict, backend);
        else if (claim == "member-mod")
            check_member_mod(params, witness, verdict);
        else if (claim == "cup-length")
            check_cup_length(params, witness, verdict, backend);
        else
            throw Fail("unrecognized claim: " + claim);
        return {true, "valid"};
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
}

}  // namespace lenscalc
