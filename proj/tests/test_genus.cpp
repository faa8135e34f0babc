#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lenscalc/genus.hpp"
#include "oracles.hpp"

using namespace lenscalc;

TEST_CASE("level lower bound: frozen values") {
    CHECK(*level_lower_bound(3, 2, 5).value == 3);
    CHECK(*level_lower_bound(2, 1, 7).value == 7);
    for (long p : {2L, 3L, 5L})
        for (std::uint64_t k = 1; k <= 3; ++k) CHECK(*level_lower_bound(p, k, 1).value == 1);
}

TEST_CASE("meyer exact value and applicability") {
    auto m35 = meyer_exact(3, 5);
    REQUIRE(m35.applicable);
    CHECK(*m35.value == 3);
    for (long p : {3L, 5L, 7L}) CHECK(*meyer_exact(p, 2).value == 2);

    auto na = meyer_exact(3, 4);
    CHECK(!na.applicable);
    CHECK(!na.value.has_value());
    CHECK(na.reason == "4 != 2 mod 3");
    CHECK(!meyer_exact(2, 4).applicable);

    Certificate c = na.to_certificate();
    CHECK(c.verdict == Verdict::unknown);
    CHECK(c.witness.at("not_applicable").get<std::string>() == "4 != 2 mod 3");
}

TEST_CASE("schwarz lower bound: frozen values") {
    CHECK(*schwarz_lower(3, 5).value == 3);
    CHECK(*schwarz_lower(3, 8).value == 4);
    for (long p : {2L, 3L, 5L}) CHECK(*schwarz_lower(p, 1).value == 1);
}

TEST_CASE("bounds are monotone in m and the exact coincidences hold") {
    for (long p : {3L, 5L, 7L}) {
        BigInt prev = 0;
        for (BigInt m = 1; m <= 300; ++m) {
            BigInt sg = *schwarz_lower(p, m).value;
            CHECK(sg >= prev);
            prev = sg;
            // schwarz_lower divides out one factor of p, same as the k = 2 level bound
            CHECK(sg == *level_lower_bound(p, 2, m).value);
            // meyer's exact value matches the k = 2 level bound on its domain
            if (mod_reduce(m - 2, p) == 0) CHECK(*meyer_exact(p, m).value == *level_lower_bound(p, 2, m).value);
        }
    }
}

TEST_CASE("essential-map refutation: frozen verdicts") {
    Certificate c1 = refute_essential_map(3, 1, 5, 2);
    CHECK(c1.verdict == Verdict::refuted);
    CHECK(parse_int(c1.witness.at("schwarz_lower").get<std::string>()) == 3);

    Certificate c2 = refute_essential_map(3, 1, 5, 3);
    CHECK(c2.verdict == Verdict::unknown);

    Certificate c3 = refute_essential_map(5, 2, 12, 3);
    CHECK(c3.verdict == Verdict::refuted);
    CHECK(parse_int(c3.witness.at("schwarz_lower").get<std::string>()) == 4);

    // the bound test never affirms existence
    for (BigInt n = 1; n <= 12; ++n)
        CHECK(refute_essential_map(3, 2, 7, n).verdict != Verdict::verified);
}

TEST_CASE("remark chain on the first builtin family") {
    ParamFamily f1 = ParamFamily::builtin("f1", 3);
    Certificate a = remark_consistency(f1, 1, 0);
    CHECK(a.verdict == Verdict::verified);
    CHECK(parse_int(a.witness.at("level_bound_mid").get<std::string>()) == 2);

    Certificate b = remark_consistency(f1, 2, 0);
    CHECK(b.verdict == Verdict::verified);
    CHECK(parse_int(b.witness.at("level_bound_mid").get<std::string>()) == 2);

    for (std::uint64_t i = 1; i <= 6; ++i)
        for (std::uint64_t j = 0; j < i; ++j)
            CHECK(remark_consistency(f1, i, j).verdict == Verdict::verified);

    CHECK_THROWS_AS(remark_consistency(f1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(remark_consistency(f1, 0, 1), std::invalid_argument);
}

TEST_CASE("remark chain flags a constructed violation") {
    // n_1 forced to 1: the first link 1 >= ceil((n_2-1)/p)+1 must fail
    ParamFamily bad = ParamFamily::from_table(
        3, {{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(1)}, {BigInt(3), BigInt(9)}}, "synthetic");
    Certificate c = remark_consistency(bad, 2, 1);
    CHECK(c.verdict == Verdict::refuted);
    CHECK(c.witness.at("first_violated").get<std::string>() ==
          "n_j >= ceil((n_i-1)/p^(k_i-k_j)) + 1");
}
