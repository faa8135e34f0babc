// timing comparison of the OpenMP kernels against the serial reference
// implementations; prints a table, asserts nothing
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lenscalc/kernels.hpp"
#include "lenscalc/lens_ring.hpp"

using namespace lenscalc;
using Clock = std::chrono::steady_clock;

namespace {

std::mt19937_64 rng(42);

BigInt rand_bits(unsigned bits) {
    BigInt x = 0;
    for (unsigned b = 0; b < bits; b += 32) {
        x <<= 32;
        x += static_cast<unsigned long>(rng() & 0xffffffffu);
    }
    return x;
}

Vec rand_vec(std::size_t n, unsigned bits) {
    Vec v(n);
    for (auto& x : v) x = rand_bits(bits);
    return v;
}

Matrix rand_matrix(std::size_t r, std::size_t c, unsigned bits) {
    Matrix m(r);
    for (auto& row : m) row = rand_vec(c, bits);
    return m;
}

template <class F>
double time_best_of(int reps, F&& f) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        f();
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        if (s < best) best = s;
    }
    return best;
}

void row(const std::string& label, double serial, double parallel) {
    std::printf("%-44s %10.4fs %10.4fs %9.2fx\n", label.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n\n");
#endif
    std::printf("%-44s %11s %11s %10s\n", "kernel", "serial", "parallel", "speedup");

    {
        const std::size_t n = 900;
        Vec a = rand_vec(n, 1024), b = rand_vec(n, 1024);
        Vec out_s, out_p;
        double s = time_best_of(3, [&] { out_s = ref::conv_trunc(a, b, n); });
        double p = time_best_of(3, [&] { out_p = conv_trunc(a, b, n); });
        row("conv_trunc  n=900, 1024-bit coefficients", s, p);
        if (out_s != out_p) std::printf("  !! outputs differ\n");
    }
    {
        Matrix base = rand_matrix(36, 36, 48);
        Matrix ms, mp;
        double s = time_best_of(3, [&] {
            ms = base;
            ref::hnf_inplace(ms);
        });
        double p = time_best_of(3, [&] {
            mp = base;
            hnf_inplace(mp);
        });
        row("hnf_inplace  36x36, 48-bit entries", s, p);
        if (ms != mp) std::printf("  !! outputs differ\n");
    }
    {
        const BigInt p3 = 3;
        const std::uint64_t t = 5;
        Matrix base = rand_matrix(160, 160, 0);
        const BigInt q = pow_big(p3, t);
        for (auto& r : base)
            for (auto& x : r) x = mod_reduce(rand_bits(64), q);
        HowellForm hs, hp;
        double s = time_best_of(3, [&] { hs = ref::howell_form(base, p3, t); });
        double p = time_best_of(3, [&] { hp = howell_form(base, p3, t); });
        row("howell_form  160x160 mod 3^5", s, p);
        if (hs.rows != hp.rows) std::printf("  !! outputs differ\n");
    }
    {
        // end-to-end: canonical normal forms of a batch of ring elements
        auto r = LensRing::make(3, 3, 96, 1u << 22);
        std::vector<Vec> batch(32);
        for (auto& v : batch) v = rand_vec(r->n(), 48);
        double s = time_best_of(2, [&] {
            for (const auto& v : batch) (void)r->reduce(v);
        });
        std::printf("%-44s %10.4fs  (batch of %zu, lattice reduce)\n",
                    "normal forms in L^96(3^3)", s, batch.size());
    }
    return 0;
}
