#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lenscalc {

using BigInt = mpz_class;
using Vec = std::vector<BigInt>;
using Matrix = std::vector<Vec>;

inline BigInt pow_big(const BigInt& base, std::uint64_t e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline bool fits_u64(const BigInt& a) {
    return a >= 0 && mpz_fits_ulong_p(a.get_mpz_t());
}

inline std::uint64_t to_u64(const BigInt& a, const char* what) {
    if (!fits_u64(a))
        throw std::invalid_argument(std::string(what) + " out of machine range: " + a.get_str());
    return mpz_get_ui(a.get_mpz_t());
}

inline BigInt pow_big(const BigInt& base, const BigInt& e) {
    return pow_big(base, to_u64(e, "exponent"));
}

// floor(a/b), b > 0
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// ceil(a/b), b > 0
inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// representative of a in [0, m), m > 0
inline BigInt mod_reduce(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline BigInt invert_mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("not invertible mod " + m.get_str());
    return r;
}

inline bool is_prime(const BigInt& p) {
    return p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

// strips all factors p from a (a != 0), returns the number removed
inline std::uint64_t strip_p(BigInt& a, const BigInt& p) {
    std::uint64_t v = 0;
    while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

inline std::uint64_t bit_length(const BigInt& a) {
    if (a == 0) return 0;
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline std::string dec(const BigInt& a) { return a.get_str(); }

// strict decimal parse (optional leading '-'), for CLI flags of unbounded size
inline BigInt parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad integer literal: " + s);
    return BigInt(s);
}

struct BudgetError : std::runtime_error {
    BigInt required_bits;
    std::uint64_t allowed_bits;
    BudgetError(BigInt req, std::uint64_t allowed)
        : std::runtime_error("memory budget exceeded: required " + req.get_str() +
                             " bits, allowed " + std::to_string(allowed) + " bits"),
          required_bits(std::move(req)),
          allowed_bits(allowed) {}
};

}  // namespace lenscalc
