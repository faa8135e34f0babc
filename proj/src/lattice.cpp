#include "lenscalc/lattice.hpp"

#include <algorithm>

namespace lenscalc {

Vec hnf_reduce(const Matrix& hnf, Vec v) {
    // ascending pivot columns: unique representative in the pivot box
    for (const auto& row : hnf) {
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        if (c == row.size()) continue;
        BigInt q = floor_div(v[c], row[c]);
        if (q == 0) continue;
        for (std::size_t j = c; j < v.size(); ++j) v[j] -= q * row[j];
    }
    return v;
}

BigInt hnf_det(const Matrix& hnf, std::size_t dim) {
    if (hnf.size() < dim) return 0;
    BigInt d = 1;
    for (const auto& row : hnf) {
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        if (c == row.size()) return 0;
        d *= row[c];
    }
    return d;
}

namespace {

bool find_nonzero(const Matrix& m, std::size_t t, std::size_t& bi, std::size_t& bj) {
    bool found = false;
    for (std::size_t i = t; i < m.size(); ++i)
        for (std::size_t j = t; j < m[i].size(); ++j) {
            if (m[i][j] == 0) continue;
            if (!found || cmp(abs(m[i][j]), abs(m[bi][bj])) < 0) {
                bi = i;
                bj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

Vec invariant_factors_of(Matrix m) {
    const std::size_t dim = m.size();
    Vec factors;
    std::size_t t = 0;
    while (t < dim) {
        std::size_t bi = t, bj = t;
        if (!find_nonzero(m, t, bi, bj)) break;
        std::swap(m[t], m[bi]);
        for (auto& row : m) std::swap(row[t], row[bj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < dim; ++i) {
                if (m[i][t] == 0) continue;
                BigInt q = floor_div(m[i][t], m[t][t]);
                for (std::size_t j = t; j < dim; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {  // remainder became the smaller pivot
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < dim; ++j) {
                if (m[t][j] == 0) continue;
                BigInt q = floor_div(m[t][j], m[t][t]);
                for (std::size_t i = t; i < dim; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = t; i < dim; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
        }
        // divisibility fix: fold any non-multiple into the pivot position
        bool again = false;
        for (std::size_t i = t + 1; i < dim && !again; ++i)
            for (std::size_t j = t + 1; j < dim && !again; ++j)
                if (m[i][j] != 0 && !mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
                    for (std::size_t jj = t; jj < dim; ++jj) m[t][jj] += m[i][jj];
                    again = true;
                }
        if (again) continue;  // redo elimination at the same t
        if (m[t][t] < 0) m[t][t] = -m[t][t];
        factors.push_back(m[t][t]);
        ++t;
    }
    while (factors.size() < dim) factors.push_back(0);
    return factors;
}

}  // namespace lenscalc
