#include "lenscalc/lens_ring.hpp"

#include <algorithm>

#include "lenscalc/lattice.hpp"

namespace lenscalc {

namespace {

bool all_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

// rows y^i * f mod y^n in the (y^1..y^{n-1}) coordinate block; f_dense has
// length n with f_dense[0] == 0
Matrix shift_rows(const Vec& f_dense, std::size_t n, bool drop_zero_rows) {
    Matrix m;
    if (n <= 1) return m;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Vec row(n - 1, 0);
        for (std::size_t c = i; c + 1 < n; ++c) row[c] = f_dense[c - i + 1];
        if (drop_zero_rows && all_zero(row)) continue;
        m.push_back(std::move(row));
    }
    return m;
}

SparsePoly poly_from_dense_y(const Vec& d) {
    std::vector<SparsePoly::Term> ts;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) ts.push_back({i, d[i]});
    return SparsePoly::from_terms(std::move(ts));
}

// sparse expansion of (x^T - 1)^m over Z, exponents T*j (machine-checked)
SparsePoly power_diff_poly(std::uint64_t T, std::uint64_t m) {
    auto cs = binomial_row(BigInt(static_cast<unsigned long>(m)), m + 1);
    std::vector<SparsePoly::Term> ts;
    for (std::uint64_t j = 0; j <= m; ++j) {
        BigInt c = cs[j];
        if ((m - j) % 2 == 1) c = -c;
        if (T != 0 && j > UINT64_MAX / T) throw std::overflow_error("exponent overflow");
        ts.push_back({T * j, std::move(c)});
    }
    return SparsePoly::from_terms(std::move(ts));
}

}  // namespace

std::shared_ptr<const LensRing> LensRing::make(BigInt p, std::uint64_t k, std::uint64_t n,
                                               std::uint64_t budget_bits) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + dec(p));
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    auto r = std::shared_ptr<LensRing>(new LensRing());
    r->p_ = p;
    r->k_ = k;
    r->n_ = n;
    r->budget_bits_ = budget_bits;
    r->pk_ = pow_big(p, k);

    // budget gate: n * bitlength of the largest relation coefficient.
    // The natural proxy C(p^k, n-1) degenerates to 0 once n-1 > p^k, so
    // the widest actual entry C(p^k, floor(p^k/2)) is used in that regime.
    BigInt jstar = BigInt(static_cast<unsigned long>(n)) - 1;
    if (jstar > r->pk_) jstar = r->pk_ / 2;
    if (!fits_u64(jstar))
        throw BudgetError(BigInt(static_cast<unsigned long>(n)) * jstar, budget_bits);
    // work guard before touching a possibly huge exact binomial:
    // bitlength C(p^k, j) >= min(j, p^k - j), so this underestimates required_bits
    const BigInt rest = r->pk_ - jstar;
    const BigInt& eff = std::min(jstar, rest);
    BigInt est = BigInt(static_cast<unsigned long>(n)) * eff;
    if (est > BigInt(budget_bits) * 4) throw BudgetError(est, budget_bits);
    BigInt widest = binomial(r->pk_, jstar);
    r->required_bits_ = BigInt(static_cast<unsigned long>(n)) * BigInt(bit_length(widest));
    if (r->required_bits_ > budget_bits) throw BudgetError(r->required_bits_, budget_bits);

    Vec f_dense = binomial_row(r->pk_, n);
    f_dense[0] -= 1;  // (1+y)^{p^k} - 1 truncated mod y^n
    r->f_ = poly_from_dense_y(f_dense);
    r->gens_ = shift_rows(f_dense, n, false);
    r->hnf_ = r->gens_;
    hnf_inplace(r->hnf_);
    r->det_ = hnf_det(r->hnf_, n - 1);
    return r;
}

Vec LensRing::reduce(Vec v) const {
    v.resize(n_, 0);
    if (n_ == 1) return v;
    Vec tail(v.begin() + 1, v.end());
    tail = hnf_reduce(hnf_, std::move(tail));
    for (std::size_t i = 1; i < n_; ++i) v[i] = tail[i - 1];
    return v;
}

RingElement LensRing::zero() const { return element(Vec{}); }

RingElement LensRing::one() const { return element(Vec{BigInt(1)}); }

RingElement LensRing::generator(Gen which) const {
    Vec c(n_, 0);
    if (which == Gen::eta) {
        c[0] = 1;
        if (n_ > 1) c[1] = 1;
    } else {
        if (n_ > 1) c[1] = 1;
    }
    return element(std::move(c));
}

RingElement LensRing::element(Vec coeffs) const {
    coeffs.resize(n_, 0);  // truncation is reduction mod y^n
    return RingElement(shared_from_this(), reduce(std::move(coeffs)));
}

bool RingElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigInt& x) { return x == 0; });
}

namespace {
void require_same_ring(const RingElement& a, const RingElement& b) {
    if (!a.ring().same_ring(b.ring()))
        throw std::invalid_argument("ring mismatch between operands");
}
}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    Vec c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
    return a.ring().element(std::move(c));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    Vec c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
    return a.ring().element(std::move(c));
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return a.ring().element(conv_trunc(a.coeffs(), b.coeffs(), a.ring().n()));
}

bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring().same_ring(b.ring()) && a.coeffs() == b.coeffs();
}

RingElement pow(const RingElement& a, const BigInt& e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    RingElement r = a.ring().one();
    RingElement base = a;
    BigInt ee = e;
    while (ee > 0) {
        if (mpz_odd_p(ee.get_mpz_t())) r = r * base;
        ee >>= 1;
        if (ee > 0) base = base * base;
    }
    return r;
}

Vec invariant_factors(const LensRing& ring) {
    if (ring.n() == 1) return {};
    return invariant_factors_of(ring.lattice_gens());
}

namespace {

// dense y-coordinates mod y^n of sum_e c_e x^{e*t} for big t, using
// incremental binomial rows C(e*t, j)
Vec expand_x_power_sub(const SparsePoly& a_in_x, const BigInt& t, std::size_t n) {
    Vec out(n, 0);
    for (const auto& term : a_in_x.terms()) {
        BigInt N = BigInt(static_cast<unsigned long>(term.exp)) * t;
        Vec row = binomial_row(N, n);
        const std::size_t lim = std::min<std::size_t>(n, fits_u64(N) ? to_u64(N, "deg") + 1 : n);
        for (std::size_t j = 0; j < lim; ++j) out[j] += term.coeff * row[j];
    }
    return out;
}

}  // namespace

RingElement pullback(const LensRing& src, const LensRing& dst, const RingElement& a) {
    if (src.p() != dst.p()) throw std::invalid_argument("pullback: prime mismatch");
    if (dst.k() < src.k()) throw std::invalid_argument("pullback: dst.k < src.k");
    if (!a.ring().same_ring(src)) throw std::invalid_argument("pullback: element not in src");
    const BigInt t = pow_big(src.p(), dst.k() - src.k());
    SparsePoly in_x = shift_from_y(poly_from_dense_y(a.coeffs()));
    return dst.element(expand_x_power_sub(in_x, t, dst.n()));
}

bool pullback_preserves_relations(const LensRing& src, const LensRing& dst) {
    if (src.p() != dst.p() || dst.k() < src.k()) return false;
    // image of (x-1)^{src.n} must vanish in dst
    const BigInt t = pow_big(src.p(), dst.k() - src.k());
    if (src.n() >= dst.n()) return true;  // lowest image degree src.n kills it mod y^{dst.n}
    SparsePoly rel = power_diff_poly(1, src.n());  // (x-1)^{n1}
    Vec img = expand_x_power_sub(rel, t, dst.n());
    return all_zero(dst.reduce(std::move(img)));
}

PullbackMap::PullbackMap(std::shared_ptr<const LensRing> src, std::shared_ptr<const LensRing> dst)
    : src_(std::move(src)), dst_(std::move(dst)) {
    if (src_->p() != dst_->p()) throw std::invalid_argument("pullback: prime mismatch");
    if (dst_->k() < src_->k()) throw std::invalid_argument("pullback: dst.k < src.k");
    const BigInt t = pow_big(src_->p(), dst_->k() - src_->k());
    images_.reserve(src_->n());
    for (std::uint64_t d = 0; d < src_->n(); ++d) {
        SparsePoly yd = shift_from_y(SparsePoly::monomial(1, d));  // (x-1)^d
        images_.push_back(dst_->reduce(expand_x_power_sub(yd, t, dst_->n())));
    }
}

RingElement PullbackMap::apply(const RingElement& a) const {
    if (!a.ring().same_ring(*src_)) throw std::invalid_argument("pullback: element not in src");
    Vec out(dst_->n(), 0);
    for (std::size_t d = 0; d < src_->n(); ++d) {
        if (a.coeffs()[d] == 0) continue;
        for (std::size_t j = 0; j < dst_->n(); ++j) out[j] += a.coeffs()[d] * images_[d][j];
    }
    return dst_->element(std::move(out));
}

ModRing::ModRing(BigInt p, std::uint64_t k, std::uint64_t n, std::uint64_t t)
    : p_(std::move(p)), k_(k), n_(n), t_(t) {
    if (!is_prime(p_)) throw std::invalid_argument("p must be prime, got " + dec(p_));
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    q_ = pow_big(p_, t);
    pk_ = pow_big(p_, k);
    fbar_ = binomial_row_mod(pk_, n, p_, t);
    fbar_[0] = 0;  // constant term of (1+y)^{p^k} - 1
    if (!all_zero(fbar_) && n > 8193)
        throw std::runtime_error("modular lattice too large to materialize (n > 8193)");
    Matrix rows = shift_rows(fbar_, n, true);
    howell_ = howell_form(std::move(rows), p_, t_);
}

Vec ModRing::power_diff_element(std::uint64_t T, const BigInt& m) const {
    if (m < 0) throw std::invalid_argument("negative exponent");
    if (!fits_u64(m)) throw std::invalid_argument("exponent too large to expand");
    const std::uint64_t mu = to_u64(m, "m");
    Vec out(n_, 0);
    Vec cs = binomial_row_mod(m, mu + 1, p_, t_);
    for (std::uint64_t j = 0; j <= mu; ++j) {
        if (cs[j] == 0) continue;
        if (T != 0 && j > 0 && T > UINT64_MAX / j) throw std::overflow_error("exponent overflow");
        const BigInt N(static_cast<unsigned long>(T * j));
        Vec row = binomial_row_mod(N, n_, p_, t_);
        BigInt c = cs[j];
        if ((mu - j) % 2 == 1) c = q_ - c;  // negation mod p^t
        c = mod_reduce(c, q_);
        if (c == 0) continue;
        for (std::size_t s = 0; s < n_; ++s) {
            if (row[s] == 0) continue;
            out[s] = mod_reduce(out[s] + c * row[s], q_);
        }
    }
    return out;
}

Vec ModRing::reduce_vec(Vec v) const {
    v.resize(n_, 0);
    for (auto& x : v) x = mod_reduce(x, q_);
    if (n_ == 1) return v;
    Vec tail(v.begin() + 1, v.end());
    tail = howell_reduce(howell_, std::move(tail), p_, t_);
    for (std::size_t i = 1; i < n_; ++i) v[i] = tail[i - 1];
    return v;
}

bool ModRing::spans_member(const Vec& v) const {
    Vec r = reduce_vec(v);
    return all_zero(r);
}

namespace {

Json howell_witness(const ModRing& M, const Vec& element_mod, const Vec& residue) {
    Json w;
    w["modulus"] = dec(M.modulus());
    w["element_mod"] = vec_to_json(element_mod);
    w["howell_basis"] = matrix_to_json(M.howell().rows);
    Json pc = Json::array(), pv = Json::array();
    for (auto c : M.howell().pivot_col) pc.push_back(c);
    for (auto v : M.howell().pivot_val) pv.push_back(v);
    w["howell_pivot_cols"] = std::move(pc);
    w["howell_pivot_valuations"] = std::move(pv);
    w["residue"] = vec_to_json(residue);
    return w;
}

void add_p2_warning(Certificate& c, const BigInt& p) {
    if (p == 2)
        c.warnings.push_back(
            "p=2 permitted here, but the underlying sequence results are stated for odd primes");
}

}  // namespace

Certificate member_mod(const LensRing& ring, const RingElement& a, std::uint64_t t) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    ModRing M(ring.p(), ring.k(), ring.n(), t);
    Vec amod = a.coeffs();
    for (auto& x : amod) x = mod_reduce(x, M.modulus());
    Vec residue = M.reduce_vec(amod);
    Certificate c;
    c.claim = "member-mod";
    c.backend = "modular";
    c.params["p"] = dec(ring.p());
    c.params["k"] = ring.k();
    c.params["n"] = ring.n();
    c.params["t"] = t;
    c.params["element"] = vec_to_json(a.coeffs());
    c.witness = howell_witness(M, amod, residue);
    c.verdict = all_zero(residue) ? Verdict::unknown : Verdict::refuted;
    if (c.verdict == Verdict::unknown)
        c.witness["note"] = "element lies in the lattice span mod p^t; no conclusion over Z";
    else
        c.witness["note"] = "nonzero residue mod p^t certifies non-membership over Z";
    add_p2_warning(c, ring.p());
    return c;
}

std::string to_string(Backend b) {
    switch (b) {
        case Backend::automatic: return "auto";
        case Backend::exact: return "exact";
        case Backend::modular: return "modular";
    }
    return "auto";
}

Certificate verify_ideal_prop(const BigInt& p, std::uint64_t k, std::uint64_t l, const BigInt& m,
                              std::uint64_t n, const VerifyOptions& opts) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + dec(p));
    if (l < 1 || k <= l) throw std::invalid_argument("need k > l >= 1");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const std::uint64_t t = opts.t.value_or(k - l);
    if (t < 1) throw std::invalid_argument("t must be >= 1");

    Certificate c;
    c.claim = "prop-ideal";
    c.params["p"] = dec(p);
    c.params["k"] = k;
    c.params["l"] = l;
    c.params["m"] = dec(m);
    c.params["n"] = n;
    c.params["t"] = t;
    c.params["backend_requested"] = to_string(opts.backend);
    add_p2_warning(c, p);

    const BigInt pl = pow_big(p, l);
    if (!(m < pl)) {
        c.verdict = Verdict::unknown;
        c.backend = "none";
        c.witness["violated"] = "m < p^l";
        c.witness["lhs"] = dec(m);
        c.witness["rhs"] = dec(pl);
        return c;
    }
    const BigInt T = pow_big(p, k - l);
    const BigInt mT = m * T;
    if (!(mT < n)) {
        c.verdict = Verdict::unknown;
        c.backend = "none";
        c.witness["violated"] = "m*p^(k-l) < n";
        c.witness["lhs"] = dec(mT);
        c.witness["rhs"] = dec(BigInt(static_cast<unsigned long>(n)));
        return c;
    }
    c.witness["hypotheses"] = Json::array({
        Json{{"name", "m < p^l"}, {"lhs", dec(m)}, {"rhs", dec(pl)}, {"holds", true}},
        Json{{"name", "m*p^(k-l) < n"},
             {"lhs", dec(mT)},
             {"rhs", dec(BigInt(static_cast<unsigned long>(n)))},
             {"holds", true}},
    });
    const std::uint64_t Tu = to_u64(T, "p^(k-l)");

    if (opts.backend != Backend::exact) {
        ModRing M(p, k, n, t);
        Vec emod = M.power_diff_element(Tu, m);
        Vec residue = M.reduce_vec(emod);
        if (!all_zero(residue)) {
            c.verdict = Verdict::verified;
            c.backend = "modular";
            c.witness["membership"] = howell_witness(M, emod, residue);
            c.witness["membership"]["note"] =
                "nonzero residue mod p^t certifies non-membership over Z";
            return c;
        }
        if (opts.backend == Backend::modular) {
            c.verdict = Verdict::unknown;
            c.backend = "modular";
            c.witness["membership"] = howell_witness(M, emod, residue);
            c.witness["membership"]["note"] = "element lies in the lattice span mod p^t";
            return c;
        }
    }

    // exact route (forced, or fallback after an inconclusive modular pass)
    std::shared_ptr<const LensRing> ring;
    try {
        ring = LensRing::make(p, k, n, opts.budget_bits);
    } catch (const BudgetError& e) {
        c.verdict = Verdict::unknown;
        c.backend = (opts.backend == Backend::exact) ? "exact-hnf" : "modular";
        c.witness["budget"] = Json{{"required_bits", dec(e.required_bits)},
                                   {"allowed_bits", e.allowed_bits}};
        c.witness["note"] = "exact backend over budget; no conclusion";
        return c;
    }
    SparsePoly in_x = power_diff_poly(Tu, to_u64(m, "m"));
    Vec raw = shift_to_y_trunc(in_x, n);
    Vec nf = ring->reduce(raw);
    c.backend = "exact-hnf";
    c.witness["hnf_basis"] = matrix_to_json(ring->lattice_hnf());
    c.witness["normal_form"] = vec_to_json(nf);
    if (all_zero(nf)) {
        c.verdict = Verdict::refuted;  // would contradict the proposition
        c.witness["note"] = "element reduced to zero: it IS in the ideal";
    } else {
        c.verdict = Verdict::verified;
        c.witness["note"] = "nonzero normal form certifies non-membership over Z";
    }
    return c;
}

}  // namespace lenscalc
