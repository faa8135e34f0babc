#pragma once

#include <cstddef>

#include "lenscalc/bigint.hpp"

// Data-parallel kernels (OpenMP) with serial reference implementations in
// lenscalc::ref. Both compute identical canonical outputs; tests assert
// agreement and bench/bench_kernels compares timings.

namespace lenscalc {

// truncated product: c[k] = sum_{i+j=k, i<|a|, j<|b|} a[i]*b[j] for k < n
Vec conv_trunc(const Vec& a, const Vec& b, std::size_t n);

// canonical Hermite normal form (row lattice): upper echelon, positive
// pivots, entries above each pivot reduced into [0, pivot); zero rows
// dropped. Pivot choice: smallest nonzero magnitude first (deterministic).
void hnf_inplace(Matrix& rows);

struct HowellForm {
    Matrix rows;                         // canonical Howell basis mod p^t
    std::vector<std::size_t> pivot_col;  // pivot column of each row
    std::vector<std::uint64_t> pivot_val;  // valuation v: pivot entry is p^v
};

// canonical Howell form of the row span mod p^t (entries normalized to
// [0, p^t), pivots p^v, entries above pivots reduced into [0, p^v),
// span closed under annihilators)
HowellForm howell_form(Matrix rows, const BigInt& p, std::uint64_t t);

// greedy pivot reduction of v against a Howell form; returns the residue
// (zero iff v is in the row span, by the Howell property)
Vec howell_reduce(const HowellForm& h, Vec v, const BigInt& p, std::uint64_t t);

namespace ref {
Vec conv_trunc(const Vec& a, const Vec& b, std::size_t n);
void hnf_inplace(Matrix& rows);
HowellForm howell_form(Matrix rows, const BigInt& p, std::uint64_t t);
}  // namespace ref

}  // namespace lenscalc
