#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lenscalc/bigint.hpp"
#include "lenscalc/certificate.hpp"
#include "lenscalc/family.hpp"

namespace lenscalc {

struct BoundReport {
    std::string kind;  // "level-lower", "meyer-exact", "schwarz-lower"
    Json params;
    bool applicable = false;
    std::optional<BigInt> value;  // present iff applicable
    std::string reason;           // why not, when !applicable

    Certificate to_certificate() const;
};

// v_{p,k}(m) >= ceil((m-1)/p^{k-1}) + 1
BoundReport level_lower_bound(const BigInt& p, std::uint64_t k, const BigInt& m);

// exact value v_{p,2}(m) = (m-2)/p + 2 for odd p and m = 2 mod p;
// not applicable otherwise (with reason)
BoundReport meyer_exact(const BigInt& p, const BigInt& m);

// Sg(pi^m_k) >= ceil((m-1)/p) + 1, independent of k
BoundReport schwarz_lower(const BigInt& p, const BigInt& m);

// "refuted" when n < the Schwarz lower bound (no essential map can exist);
// otherwise "unknown" — this function never claims existence
Certificate refute_essential_map(const BigInt& p, std::uint64_t k, const BigInt& m,
                                 const BigInt& n);

// evaluates the inequality chain linking n_j to the level bound at stage i
// (i > j): n_j >= ceil((n_i - 1)/p^{k_i-k_j}) + 1 >= p^{k_i-k_0}/p^{k_i-k_j} + 1
// > p^{k_j-k_0}; reports the first violated link exactly. The level-function
// value itself is not machine-evaluable; only its bound enters the chain.
Certificate remark_consistency(const ParamFamily& fam, std::uint64_t i, std::uint64_t j);

}  // namespace lenscalc
