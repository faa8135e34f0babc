#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lenscalc/lattice.hpp"
#include "oracles.hpp"

using namespace lenscalc;

namespace {
std::mt19937_64 rng(0xabcdef12ULL);
}

TEST_CASE("frozen Smith forms of the small ideal lattices") {
    // lattice of Z[y]/<y^2, 2y>: single generator (2)
    Matrix m1{{BigInt(2)}};
    CHECK(invariant_factors_of(m1) == Vec{BigInt(2)});
    CHECK(oracles::snf_by_minors(m1) == Vec{BigInt(2)});

    // lattice rows (4,6),(0,4) -> factors [2,8]
    Matrix m2{{BigInt(4), BigInt(6)}, {BigInt(0), BigInt(4)}};
    CHECK(invariant_factors_of(m2) == Vec{BigInt(2), BigInt(8)});
    CHECK(oracles::snf_by_minors(m2) == Vec{BigInt(2), BigInt(8)});

    // lattice rows (3,3),(0,3) -> factors [3,3], determinant 9
    Matrix m3{{BigInt(3), BigInt(3)}, {BigInt(0), BigInt(3)}};
    CHECK(invariant_factors_of(m3) == Vec{BigInt(3), BigInt(3)});
    CHECK(oracles::snf_by_minors(m3) == Vec{BigInt(3), BigInt(3)});
    auto h3 = m3;
    hnf_inplace(h3);
    CHECK(hnf_det(h3, 2) == 9);
}

TEST_CASE("Smith form against the determinant-divisor oracle, random matrices") {
    for (int it = 0; it < 60; ++it) {
        std::size_t d = 1 + rng() % 5;
        Matrix m(d, Vec(d));
        bool nonsingular = false;
        while (!nonsingular) {
            for (auto& row : m)
                for (auto& x : row) x = BigInt(static_cast<long>(rng() % 41) - 20);
            auto h = m;
            hnf_inplace(h);
            nonsingular = (hnf_det(h, d) != 0);
        }
        auto got = invariant_factors_of(m);
        auto want = oracles::snf_by_minors(m);
        CHECK(got == want);
        for (std::size_t i = 0; i + 1 < got.size(); ++i) {
            CHECK(got[i] > 0);
            CHECK(mpz_divisible_p(got[i + 1].get_mpz_t(), got[i].get_mpz_t()));
        }
        // |det| equals the product of invariant factors and of HNF pivots
        auto h = m;
        hnf_inplace(h);
        BigInt prod = 1;
        for (const auto& f : got) prod *= f;
        CHECK(prod == hnf_det(h, d));
    }
}

TEST_CASE("hnf_reduce is idempotent and constant on cosets") {
    for (int it = 0; it < 40; ++it) {
        std::size_t d = 2 + rng() % 4;
        Matrix m(d, Vec(d, 0));
        // random full-rank upper-triangular lattice
        for (std::size_t i = 0; i < d; ++i) {
            m[i][i] = BigInt(1 + rng() % 9);
            for (std::size_t j = i + 1; j < d; ++j) m[i][j] = BigInt(static_cast<long>(rng() % 15) - 7);
        }
        auto h = m;
        hnf_inplace(h);
        Vec v(d);
        for (auto& x : v) x = BigInt(static_cast<long>(rng() % 2001) - 1000);
        auto r1 = hnf_reduce(h, v);
        CHECK(hnf_reduce(h, r1) == r1);
        // shifting by random lattice vectors does not change the representative
        Vec w = v;
        for (std::size_t i = 0; i < d; ++i) {
            BigInt c = BigInt(static_cast<long>(rng() % 11) - 5);
            for (std::size_t j = 0; j < d; ++j) w[j] += c * m[i][j];
        }
        CHECK(hnf_reduce(h, w) == r1);
        // zero residue exactly for members (triangular oracle)
        auto member = oracles::triangular_span_member(m, v);
        REQUIRE(member.has_value());
        bool zero = std::all_of(r1.begin(), r1.end(), [](const BigInt& x) { return x == 0; });
        CHECK(zero == *member);
    }
}
