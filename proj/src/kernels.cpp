#include "lenscalc/kernels.hpp"

#include <algorithm>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lenscalc {

namespace {

// below this much work the parallel path is not worth the fork/join
constexpr std::size_t kParMinWork = 4096;

bool row_zero(const Vec& r) {
    return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; });
}

}  // namespace

Vec ref::conv_trunc(const Vec& a, const Vec& b, std::size_t n) {
    Vec c(n, 0);
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) continue;
        const std::size_t jmax = std::min(b.size(), n - i);
        for (std::size_t j = 0; j < jmax; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

Vec conv_trunc(const Vec& a, const Vec& b, std::size_t n) {
    Vec c(n, 0);
    const std::size_t work = std::min(a.size(), n) * std::min(b.size(), n);
    if (work < kParMinWork) return ref::conv_trunc(a, b, n);
    // each output coefficient is an independent dot product
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t k = 0; k < n; ++k) {
        BigInt acc = 0;
        const std::size_t ilo = (k + 1 > b.size()) ? k + 1 - b.size() : 0;
        const std::size_t ihi = std::min(a.size(), k + 1);
        for (std::size_t i = ilo; i < ihi; ++i) acc += a[i] * b[k - i];
        c[k] = std::move(acc);
    }
    return c;
}

namespace {

// shared echelon scaffolding: deterministic smallest-|pivot|-first column
// elimination over Z; `parallel` toggles the omp row loop
void hnf_impl(Matrix& rows, bool parallel) {
    std::erase_if(rows, row_zero);
    if (rows.empty()) return;
    const std::size_t ncols = rows[0].size();
    std::size_t top = 0;
    for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
        while (true) {
            // deterministic pivot: smallest nonzero |entry|, then lowest row
            std::size_t piv = rows.size();
            for (std::size_t r = top; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                if (piv == rows.size() ||
                    cmp(abs(rows[r][col]), abs(rows[piv][col])) < 0)
                    piv = r;
            }
            if (piv == rows.size()) break;  // column clear below top
            std::swap(rows[top], rows[piv]);
            const BigInt& pv = rows[top][col];
            bool again = false;
            const std::ptrdiff_t nrows = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic) if (parallel && rows.size() > 8)
            for (std::ptrdiff_t r = static_cast<std::ptrdiff_t>(top) + 1; r < nrows; ++r) {
                if (rows[r][col] == 0) continue;
                BigInt q = floor_div(rows[r][col], pv);
                if (q != 0)
                    for (std::size_t j = col; j < ncols; ++j) rows[r][j] -= q * rows[top][j];
            }
            for (std::size_t r = top + 1; r < rows.size(); ++r)
                if (rows[r][col] != 0) again = true;
            if (!again) break;
        }
        if (rows[top][col] != 0) {
            if (rows[top][col] < 0)
                for (std::size_t j = col; j < ncols; ++j) rows[top][j] = -rows[top][j];
            ++top;
        }
    }
    std::erase_if(rows, row_zero);
    // canonical part: entries above every pivot into [0, pivot)
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t pcol = 0;
        while (pcol < ncols && rows[r][pcol] == 0) ++pcol;
        const std::ptrdiff_t rr = static_cast<std::ptrdiff_t>(r);
#pragma omp parallel for schedule(dynamic) if (parallel && r > 8)
        for (std::ptrdiff_t up = 0; up < rr; ++up) {
            BigInt q = floor_div(rows[up][pcol], rows[r][pcol]);
            if (q != 0)
                for (std::size_t j = pcol; j < ncols; ++j) rows[up][j] -= q * rows[r][j];
        }
    }
}

void howell_normalize_row(Vec& row, const BigInt& q) {
    for (auto& x : row) x = mod_reduce(x, q);
}

HowellForm howell_impl(Matrix rows, const BigInt& p, std::uint64_t t, bool parallel) {
    const BigInt q = pow_big(p, t);
    for (auto& r : rows) howell_normalize_row(r, q);
    std::erase_if(rows, row_zero);
    HowellForm h;
    if (rows.empty()) return h;
    const std::size_t ncols = rows[0].size();

    auto val_of = [&](const BigInt& x) -> std::uint64_t {
        BigInt y = x;
        return (x == 0) ? t : strip_p(y, p);
    };

    for (std::size_t col = 0; col < ncols; ++col) {
        // pick the unplaced row with minimal valuation at this column
        std::size_t piv = rows.size();
        std::uint64_t best = t;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            std::uint64_t v = val_of(rows[r][col]);
            if (piv == rows.size() || v < best ||
                (v == best && rows[r][col] < rows[piv][col])) {
                piv = r;
                best = v;
            }
        }
        if (piv == rows.size()) continue;
        Vec prow = std::move(rows[piv]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(piv));
        // normalize the pivot entry to exactly p^v
        BigInt u = prow[col];
        std::uint64_t v = strip_p(u, p);
        BigInt uinv = invert_mod(u, q);
        for (std::size_t j = col; j < ncols; ++j) prow[j] = mod_reduce(prow[j] * uinv, q);
        const BigInt pv = pow_big(p, v);
        // eliminate the column from the remaining rows
        const std::ptrdiff_t nrows = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic) if (parallel && rows.size() > 8)
        for (std::ptrdiff_t r = 0; r < nrows; ++r) {
            if (rows[r][col] == 0) continue;
            BigInt w;
            mpz_divexact(w.get_mpz_t(), rows[r][col].get_mpz_t(), pv.get_mpz_t());
            for (std::size_t j = col; j < ncols; ++j)
                rows[r][j] = mod_reduce(rows[r][j] - w * prow[j], q);
        }
        std::erase_if(rows, row_zero);
        // Howell closure: the annihilator multiple joins the working set
        if (v > 0) {
            Vec ann(ncols, 0);
            BigInt mult = pow_big(p, t - v);
            for (std::size_t j = col; j < ncols; ++j) ann[j] = mod_reduce(prow[j] * mult, q);
            if (!row_zero(ann)) rows.push_back(std::move(ann));
        }
        h.rows.push_back(std::move(prow));
        h.pivot_col.push_back(col);
        h.pivot_val.push_back(v);
    }
    // reduce entries above each pivot into [0, p^v)
    for (std::size_t r = 0; r < h.rows.size(); ++r) {
        const BigInt pv = pow_big(p, h.pivot_val[r]);
        const std::size_t c = h.pivot_col[r];
        for (std::size_t up = 0; up < r; ++up) {
            BigInt qq = floor_div(h.rows[up][c], pv);
            if (qq != 0)
                for (std::size_t j = c; j < ncols; ++j)
                    h.rows[up][j] = mod_reduce(h.rows[up][j] - qq * h.rows[r][j], q);
        }
    }
    return h;
}

}  // namespace

void ref::hnf_inplace(Matrix& rows) { hnf_impl(rows, false); }
void hnf_inplace(Matrix& rows) { hnf_impl(rows, true); }

HowellForm ref::howell_form(Matrix rows, const BigInt& p, std::uint64_t t) {
    return howell_impl(std::move(rows), p, t, false);
}

HowellForm howell_form(Matrix rows, const BigInt& p, std::uint64_t t) {
    return howell_impl(std::move(rows), p, t, true);
}

Vec howell_reduce(const HowellForm& h, Vec v, const BigInt& p, std::uint64_t t) {
    const BigInt q = pow_big(p, t);
    for (auto& x : v) x = mod_reduce(x, q);
    for (std::size_t r = 0; r < h.rows.size(); ++r) {
        const std::size_t c = h.pivot_col[r];
        if (v[c] == 0) continue;
        // canonical coset representative: push the pivot coordinate into
        // [0, p^val); on members this is the exact elimination quotient
        const BigInt pv = pow_big(p, h.pivot_val[r]);
        const BigInt w = floor_div(v[c], pv);
        if (w == 0) continue;
        for (std::size_t j = c; j < v.size(); ++j)
            v[j] = mod_reduce(v[j] - w * h.rows[r][j], q);
    }
    return v;
}

}  // namespace lenscalc
