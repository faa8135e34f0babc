#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lenscalc/bigint.hpp"

namespace lenscalc {

// Sparse univariate polynomial over Z, terms kept in ascending exponent
// order with no zero coefficients (canonical, so serialization is stable).
class SparsePoly {
public:
    struct Term {
        std::uint64_t exp;
        BigInt coeff;
    };

    SparsePoly() = default;
    static SparsePoly constant(BigInt c);
    static SparsePoly monomial(BigInt c, std::uint64_t e);
    // normalizes: merges duplicate exponents, drops zeros, sorts
    static SparsePoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint64_t degree() const;  // zero polynomial has degree 0 by convention
    BigInt coeff(std::uint64_t e) const;

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend bool operator==(const SparsePoly& a, const SparsePoly& b);

private:
    std::vector<Term> terms_;
};

SparsePoly pow(const SparsePoly& a, std::uint64_t e);

// a(x) -> a(x^t); throws for t = 0
SparsePoly substitute_power(const SparsePoly& a, std::uint64_t t);

// a(x) -> a(y+1), expanded exactly
SparsePoly shift_to_y(const SparsePoly& a);

// a(y) -> a(x-1), the inverse substitution
SparsePoly shift_from_y(const SparsePoly& a);

// dense coefficient vector of a(y+1) mod y^n (fused shift + truncation;
// never materializes the untruncated expansion)
Vec shift_to_y_trunc(const SparsePoly& a, std::size_t n);

// exact C(N, j); 0 when j > N or either argument is negative
BigInt binomial(const BigInt& n, const BigInt& j);

// row C(N, 0..count-1) exactly (incremental, one division per step)
Vec binomial_row(const BigInt& n, std::size_t count);

// row C(N, 0..count-1) reduced mod p^t, computed with unit/valuation
// tracking so no intermediate exceeds p^t
Vec binomial_row_mod(const BigInt& n, std::size_t count, const BigInt& p, std::uint64_t t);

// "c0 + c1*x^1 + ..." ascending, zero terms omitted; "0" for the zero poly
std::string to_text(const SparsePoly& a, std::string_view var = "x");

}  // namespace lenscalc
