#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "lenscalc/bigint.hpp"
#include "lenscalc/certificate.hpp"
#include "lenscalc/kernels.hpp"
#include "lenscalc/poly.hpp"

namespace lenscalc {

inline constexpr std::uint64_t kDefaultBudgetBits = 1u << 20;

class LensRing;

// element of Z[y]/<y^n, f(y)>, stored as the dense coefficient vector of
// its canonical (lattice-reduced) representative, ascending degree
class RingElement {
public:
    const Vec& coeffs() const { return c_; }
    const LensRing& ring() const { return *ring_; }
    bool is_zero() const;

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend bool operator==(const RingElement& a, const RingElement& b);

private:
    friend class LensRing;
    friend RingElement pow(const RingElement& a, const BigInt& e);
    friend RingElement pullback(const LensRing& src, const LensRing& dst, const RingElement& a);
    friend class PullbackMap;
    RingElement(std::shared_ptr<const LensRing> r, Vec c) : ring_(std::move(r)), c_(std::move(c)) {}
    std::shared_ptr<const LensRing> ring_;
    Vec c_;
};

enum class Gen { eta, sigma };

// K^0 of the lens space L^n(p^k) presented as Z[y]/<y^n, f(y)> with
// y = x-1 and f = (x^{p^k}-1 rewritten in y, truncated mod y^n);
// immutable after construction, safe to share across threads
class LensRing : public std::enable_shared_from_this<LensRing> {
public:
    // checks p prime, k >= 1, n >= 1 and the memory budget
    // n * bitlength(C(p^k, n-1)); throws BudgetError when exceeded
    static std::shared_ptr<const LensRing> make(BigInt p, std::uint64_t k, std::uint64_t n,
                                                std::uint64_t budget_bits = kDefaultBudgetBits);

    const BigInt& p() const { return p_; }
    std::uint64_t k() const { return k_; }
    std::uint64_t n() const { return n_; }
    const BigInt& pk() const { return pk_; }
    std::uint64_t budget_bits() const { return budget_bits_; }
    const BigInt& required_bits() const { return required_bits_; }

    const SparsePoly& relation() const { return f_; }        // f(y)
    const Matrix& lattice_gens() const { return gens_; }     // rows y^i * f mod y^n
    const Matrix& lattice_hnf() const { return hnf_; }
    const BigInt& lattice_det() const { return det_; }

    RingElement zero() const;
    RingElement one() const;
    RingElement generator(Gen which) const;
    RingElement element(Vec coeffs) const;  // truncates/pads to n, reduces

    Vec reduce(Vec v) const;  // lattice reduction of a length-n vector
    bool same_ring(const LensRing& o) const { return p_ == o.p_ && k_ == o.k_ && n_ == o.n_; }

private:
    LensRing() = default;
    BigInt p_, pk_, det_, required_bits_;
    std::uint64_t k_ = 0, n_ = 0, budget_bits_ = 0;
    SparsePoly f_;
    Matrix gens_, hnf_;
};

RingElement pow(const RingElement& a, const BigInt& e);

// invariant factors d1 | d2 | ... of the ideal lattice (Smith normal form);
// the reduced K-group is the direct sum of Z/d_i
Vec invariant_factors(const LensRing& ring);

// image of a under eta_src -> eta_dst^{p^{dst.k - src.k}}, computed on the
// canonical representative (rewrite in x, substitute x -> x^{p^dk},
// rewrite in y, truncate, reduce)
RingElement pullback(const LensRing& src, const LensRing& dst, const RingElement& a);

// true iff the map above is a ring homomorphism on cosets, i.e. the image
// of src's relation (x-1)^{src.n} vanishes in dst
bool pullback_preserves_relations(const LensRing& src, const LensRing& dst);

// precomputed linear form of the pullback (images of y^d), for batch use
class PullbackMap {
public:
    PullbackMap(std::shared_ptr<const LensRing> src, std::shared_ptr<const LensRing> dst);
    RingElement apply(const RingElement& a) const;

private:
    std::shared_ptr<const LensRing> src_, dst_;
    Matrix images_;  // images_[d] = reduced image of y^d, d < src.n
};

// modular view of the ring: coefficients in Z/p^t, ideal lattice replaced
// by its Howell span; no memory budget (entries stay below p^t)
class ModRing {
public:
    ModRing(BigInt p, std::uint64_t k, std::uint64_t n, std::uint64_t t);

    const BigInt& modulus() const { return q_; }
    std::uint64_t t() const { return t_; }
    const Vec& relation_row() const { return fbar_; }  // f mod p^t, dense length n
    const HowellForm& howell() const { return howell_; }

    // dense residue vector (length n) of (x^T - 1)^m rewritten in y mod p^t
    Vec power_diff_element(std::uint64_t T, const BigInt& m) const;

    Vec reduce_vec(Vec v) const;        // residue after Howell reduction
    bool spans_member(const Vec& v) const;

private:
    BigInt p_, q_, pk_;
    std::uint64_t k_, n_, t_;
    Vec fbar_;
    HowellForm howell_;
};

struct MemberOptions {
    std::uint64_t budget_bits = kDefaultBudgetBits;
};

// membership of a's residue in the ideal lattice reduced mod p^t:
// "refuted" (not a member mod p^t, hence not a member over Z) or
// "unknown" (member mod p^t); sound in the refuted direction only
Certificate member_mod(const LensRing& ring, const RingElement& a, std::uint64_t t);

enum class Backend { automatic, exact, modular };

std::string to_string(Backend b);

struct VerifyOptions {
    Backend backend = Backend::automatic;
    std::optional<std::uint64_t> t;  // modulus exponent; default k-l
    std::uint64_t budget_bits = kDefaultBudgetBits;
};

// decides (x^{p^{k-l}}-1)^m notin <x^{p^k}-1, (x-1)^n> under the
// hypotheses m < p^l and m*p^{k-l} < n; verdict "verified" carries a
// non-membership witness, hypothesis failures yield "unknown" naming the
// violated inequality
Certificate verify_ideal_prop(const BigInt& p, std::uint64_t k, std::uint64_t l, const BigInt& m,
                              std::uint64_t n, const VerifyOptions& opts = {});

}  // namespace lenscalc
