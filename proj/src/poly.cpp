#include "lenscalc/poly.hpp"

#include <algorithm>
#include <map>

namespace lenscalc {

SparsePoly SparsePoly::constant(BigInt c) { return monomial(std::move(c), 0); }

SparsePoly SparsePoly::monomial(BigInt c, std::uint64_t e) {
    SparsePoly r;
    if (c != 0) r.terms_.push_back({e, std::move(c)});
    return r;
}

SparsePoly SparsePoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exp < b.exp; });
    SparsePoly r;
    for (auto& t : terms) {
        if (!r.terms_.empty() && r.terms_.back().exp == t.exp)
            r.terms_.back().coeff += t.coeff;
        else
            r.terms_.push_back(std::move(t));
    }
    std::erase_if(r.terms_, [](const Term& t) { return t.coeff == 0; });
    return r;
}

std::uint64_t SparsePoly::degree() const { return terms_.empty() ? 0 : terms_.back().exp; }

BigInt SparsePoly::coeff(std::uint64_t e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, std::uint64_t x) { return t.exp < x; });
    if (it != terms_.end() && it->exp == e) return it->coeff;
    return 0;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->exp < ib->exp)) {
            r.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->exp < ia->exp) {
            r.terms_.push_back(*ib++);
        } else {
            BigInt c = ia->coeff + ib->coeff;
            if (c != 0) r.terms_.push_back({ia->exp, std::move(c)});
            ++ia, ++ib;
        }
    }
    return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly nb = b;
    for (auto& t : nb.terms_) t.coeff = -t.coeff;
    return a + nb;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    std::map<std::uint64_t, BigInt> acc;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) acc[ta.exp + tb.exp] += ta.coeff * tb.coeff;
    SparsePoly r;
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.push_back({e, std::move(c)});
    return r;
}

SparsePoly pow(const SparsePoly& a, std::uint64_t e) {
    SparsePoly r = SparsePoly::constant(1);
    SparsePoly base = a;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

SparsePoly substitute_power(const SparsePoly& a, std::uint64_t t) {
    if (t == 0) throw std::invalid_argument("substitute_power: t must be positive");
    std::vector<SparsePoly::Term> ts;
    ts.reserve(a.terms().size());
    for (const auto& term : a.terms()) {
        if (term.exp != 0 && term.exp > UINT64_MAX / t)
            throw std::overflow_error("substitute_power: exponent overflow");
        ts.push_back({term.exp * t, term.coeff});
    }
    return SparsePoly::from_terms(std::move(ts));
}

namespace {

// a(x + s) for s = +-1, full expansion; per term an incremental binomial row
SparsePoly shift_by_unit(const SparsePoly& a, int s) {
    std::map<std::uint64_t, BigInt> acc;
    for (const auto& term : a.terms()) {
        const std::uint64_t d = term.exp;
        BigInt binom = 1;  // C(d, d-j) walking j downward = C(d, i) upward
        for (std::uint64_t i = 0;; ++i) {
            // contribution to x^{d-i}: coeff * C(d, i) * s^i
            BigInt c = term.coeff * binom;
            if (s < 0 && (i & 1)) c = -c;
            acc[d - i] += c;
            if (i == d) break;
            binom *= BigInt(d - i);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                            static_cast<unsigned long>(i + 1));
        }
    }
    std::vector<SparsePoly::Term> ts;
    for (auto& [e, c] : acc)
        if (c != 0) ts.push_back({e, std::move(c)});
    return SparsePoly::from_terms(std::move(ts));
}

}  // namespace

SparsePoly shift_to_y(const SparsePoly& a) { return shift_by_unit(a, +1); }

SparsePoly shift_from_y(const SparsePoly& a) { return shift_by_unit(a, -1); }

Vec shift_to_y_trunc(const SparsePoly& a, std::size_t n) {
    Vec out(n, 0);
    if (n == 0) return out;
    for (const auto& term : a.terms()) {
        const std::uint64_t d = term.exp;
        BigInt binom = 1;  // C(d, j)
        const std::uint64_t top = std::min<std::uint64_t>(d, n - 1);
        for (std::uint64_t j = 0;; ++j) {
            out[j] += term.coeff * binom;
            if (j == top) break;
            binom *= BigInt(d - j);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                            static_cast<unsigned long>(j + 1));
        }
    }
    return out;
}

BigInt binomial(const BigInt& n, const BigInt& j) {
    if (n < 0 || j < 0 || j > n) return 0;
    BigInt jj = j;
    if (j * 2 > n) jj = n - j;  // symmetry keeps the loop short
    BigInt r = 1;
    for (BigInt i = 1; i <= jj; ++i) {
        r *= n - jj + i;
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), i.get_mpz_t());
    }
    return r;
}

Vec binomial_row(const BigInt& n, std::size_t count) {
    Vec row(count, 0);
    if (count == 0) return row;
    row[0] = (n >= 0) ? 1 : 0;
    for (std::size_t jj = 1; jj < count; ++jj) {
        BigInt j(static_cast<unsigned long>(jj));
        if (j > n) break;  // rest stay zero
        BigInt t = row[jj - 1] * (n - j + 1);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), j.get_mpz_t());
        row[jj] = std::move(t);
    }
    return row;
}

Vec binomial_row_mod(const BigInt& n, std::size_t count, const BigInt& p, std::uint64_t t) {
    if (t == 0) throw std::invalid_argument("binomial_row_mod: t must be positive");
    const BigInt q = pow_big(p, t);
    Vec row(count, 0);
    if (count == 0) return row;
    if (n < 0) return row;
    row[0] = 1;
    // C(n,j) = p^v * unum/uden with unum, uden prime to p, tracked mod p^t
    BigInt unum = 1, uden = 1;
    std::uint64_t v = 0;
    for (std::size_t jj = 1; jj < count; ++jj) {
        BigInt j(static_cast<unsigned long>(jj));
        if (j > n) break;
        BigInt a = n - j + 1;
        v += strip_p(a, p);
        BigInt b = j;
        std::uint64_t vb = strip_p(b, p);
        if (vb > v) throw std::logic_error("binomial_row_mod: negative valuation");
        v -= vb;
        unum = mod_reduce(unum * mod_reduce(a, q), q);
        uden = mod_reduce(uden * mod_reduce(b, q), q);
        if (v >= t) {
            row[jj] = 0;
        } else {
            BigInt u = mod_reduce(unum * invert_mod(uden, q), q);
            row[jj] = mod_reduce(pow_big(p, v) * u, q);
        }
    }
    return row;
}

std::string to_text(const SparsePoly& a, std::string_view var) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& term : a.terms()) {
        if (!out.empty()) out += " + ";
        if (term.exp == 0) {
            out += term.coeff.get_str();
        } else {
            out += term.coeff.get_str();
            out += "*";
            out += var;
            out += "^";
            out += std::to_string(term.exp);
        }
    }
    return out;
}

}  // namespace lenscalc
