#pragma once

#include <cstdint>
#include <optional>

#include "lenscalc/certificate.hpp"
#include "lenscalc/family.hpp"
#include "lenscalc/lens_ring.hpp"

namespace lenscalc {

// growth condition for stages 0..horizon: k_i strictly increasing and
// n_i > p^{k_i - k_0}; "verified", or "refuted" with the first violated
// stage and both sides
Certificate check_growth(const ParamFamily& fam, std::uint64_t horizon);

struct CupOptions {
    std::optional<std::uint64_t> t;  // modulus exponent; default k_{i+j} - k_i
    Backend backend = Backend::automatic;
    std::uint64_t budget_bits = kDefaultBudgetBits;
};

// nonvanishing of (eta^{p^{k_{i+j}-k_i}} - 1)^m in the stage-(i+j) ring:
// checks the ideal-proposition hypotheses symbolically, then certifies
// non-membership (modular first, exact fallback when in budget). Throws
// for m >= p^{k_i-k_0} (outside the hypothesis) or m < 1 or j < 1.
Certificate certify_cup_length(const ParamFamily& fam, std::uint64_t i, const BigInt& m,
                               std::uint64_t j, const CupOptions& opts = {});

// stage-by-stage audit of the corollary family (k_i = i,
// n_i = 3p^i - sum_{s=1}^{i-1} p^s + 1): with m = n_{i+1}+1, checks
// m = 2 mod p and (m-2)/p + 2 <= n_i for start_index <= i <= horizon,
// recording every stage verbatim; "refuted" lists the violated stages.
// Throws for p = 2 or p not prime.
Certificate corollary_check(const BigInt& p, std::uint64_t horizon, std::uint64_t start_index = 0);

}  // namespace lenscalc
