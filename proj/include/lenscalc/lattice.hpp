#pragma once

#include <cstdint>

#include "lenscalc/bigint.hpp"
#include "lenscalc/kernels.hpp"

namespace lenscalc {

// reduce v against an HNF basis (ascending pivot columns): unique coset
// representative, each pivot coordinate landing in [0, pivot)
Vec hnf_reduce(const Matrix& hnf, Vec v);

// product of HNF pivots (0 if rank < dimension)
BigInt hnf_det(const Matrix& hnf, std::size_t dim);

// Smith normal form invariant factors d1 | d2 | ... (all positive, 1s kept)
// of a square integer matrix of full rank
Vec invariant_factors_of(Matrix m);

}  // namespace lenscalc
