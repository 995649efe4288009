#include "torsearch/residues.hpp"

#include <stdexcept>

namespace torsearch {

namespace {

u128 upow128(std::uint64_t base, std::uint32_t exp) {
    u128 r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) r *= base;
    return r;
}

bool is_constant_times_square(const Poly& b, std::uint64_t seed) {
    Factorization fac = factor(b, seed);
    for (const auto& fp : fac.factors)
        if (fp.exp % 2) return false;
    return true;
}

} // namespace

int jacobi(const Poly& a, const Poly& b) {
    if (b.is_zero() || !b.is_monic() || b.is_constant())
        throw std::invalid_argument("jacobi: denominator must be monic of degree >= 1");
    const FieldSpecPtr& spec = b.spec();
    bool q3mod4 = (spec->q() % 4) == 3;
    int sign = 1;
    Poly num = a, den = b;
    for (;;) {
        Poly r = num % den;
        if (r.is_zero()) return 0;
        std::uint64_t c = r.leading_code();
        if (c != 1) {
            // (c/den) = chi(c)^{deg den}
            if (spec->legendre(c) == -1 && (den.degree() % 2)) sign = -sign;
            r = r.scaled(spec->inv(c));
        }
        if (r.is_constant()) return sign; // r = 1
        // monic-monic flip
        if (q3mod4 && (r.degree() % 2) && (den.degree() % 2)) sign = -sign;
        num = std::move(den);
        den = std::move(r);
    }
}

int jacobi_euler(const Poly& a, const Poly& b, std::uint64_t seed) {
    if (b.is_zero() || !b.is_monic() || b.is_constant())
        throw std::invalid_argument("jacobi: denominator must be monic of degree >= 1");
    const FieldSpecPtr& spec = b.spec();
    int result = 1;
    for (const auto& fp : factor(b, seed).factors) {
        Poly red = a % fp.prime;
        if (red.is_zero()) return 0;
        u128 exponent = (upow128(spec->q(), static_cast<std::uint32_t>(fp.prime.degree())) - 1) / 2;
        Poly s = red.pow_mod(exponent, fp.prime);
        int sym;
        if (s.is_one())
            sym = 1;
        else if (s.is_constant() && s.coeff_code(0) == spec->neg(1))
            sym = -1;
        else
            throw std::logic_error("Euler criterion did not evaluate to +-1");
        if (fp.exp % 2) result *= sym;
    }
    return result;
}

std::int64_t rho(const Poly& m, const Poly& l, std::uint32_t g, std::uint64_t seed) {
    if (l.is_zero() || !l.is_monic() || l.is_constant())
        throw std::invalid_argument("rho: modulus must be monic of degree >= 1");
    if (g % 2 == 0 || g < 1) throw std::invalid_argument("rho: g must be odd and >= 1");
    if (m.is_zero() || !gcd_monic(m, l).is_one())
        throw std::invalid_argument("rho: requires gcd(m, l) = 1");
    std::int64_t r = 1;
    for (const auto& fp : factor(l, seed).factors) {
        r *= 1 + jacobi(m, fp.prime);
        if (!r) return 0;
    }
    return r;
}

CharSumResult char_sum_fixed(const Poly& b, std::uint32_t D, Budget* budget, std::uint64_t seed) {
    if (b.is_zero() || b.is_constant())
        throw std::invalid_argument("char_sum_fixed: b must be non-constant");
    if (D < 1) throw std::invalid_argument("char_sum_fixed: D must be >= 1");
    Budget local;
    Budget& bud = budget ? *budget : local;
    const FieldSpecPtr& spec = b.spec();
    bud.charge(monic_count(spec, D), "char_sum_fixed");

    std::int64_t value = 0;
    for_each_monic(spec, D, [&](const Poly& a) { value += jacobi(b, a); });

    CharSumResult res{spec->q(), b.degree(), D, value, std::nullopt, false};
    if (static_cast<int>(D) >= b.degree() && !is_constant_times_square(b, seed)) {
        res.predicted = 0;
        res.match = (value == 0);
    }
    return res;
}

CharSumResult char_sum_double(const FieldSpecPtr& spec, std::uint32_t B, std::uint32_t D,
                              Budget* budget) {
    if (D < 1 || D + 1 > B) throw std::invalid_argument("char_sum_double: need 1 <= D <= B-1");
    Budget local;
    Budget& bud = budget ? *budget : local;
    bud.charge(checked_pow_u64(spec->q(), B + D), "char_sum_double");

    std::int64_t value = 0;
    for_each_monic(spec, B, [&](const Poly& b) {
        for_each_monic(spec, D, [&](const Poly& a) { value += jacobi(b, a); });
    });

    CharSumResult res{spec->q(), static_cast<std::int64_t>(B), D, value, std::nullopt, false};
    if (D % 2) {
        res.predicted = 0;
    } else {
        // (q-1)(1-1/q) q^{B+D/2} = (q-1)^2 q^{B+D/2-1}
        std::int64_t qm1 = static_cast<std::int64_t>(spec->q()) - 1;
        res.predicted = qm1 * qm1 * static_cast<std::int64_t>(checked_pow_u64(spec->q(), B + D / 2 - 1));
    }
    res.match = (value == *res.predicted);
    return res;
}

RhoAverage rho_average(const FieldSpecPtr& spec, std::uint32_t M, std::uint32_t T, std::uint32_t g,
                       Budget* budget, std::uint64_t seed) {
    if (M < 1 || T < 1) throw std::invalid_argument("rho_average: need M, T >= 1");
    if (g % 2 == 0 || g < 1) throw std::invalid_argument("rho_average: g must be odd and >= 1");
    Budget local;
    Budget& bud = budget ? *budget : local;
    bud.charge(checked_pow_u64(spec->q(), M + T), "rho_average");

    std::int64_t total = 0;
    for_each_monic(spec, T, [&](const Poly& t) {
        Factorization tf = factor(t, seed);
        for_each_monic(spec, M, [&](const Poly& m) {
            std::int64_t r = 1;
            for (const auto& fp : tf.factors) {
                Poly red = m % fp.prime;
                if (red.is_zero()) return; // gcd(m, t) != 1: excluded from the sum
                r *= 1 + jacobi(m, fp.prime);
                if (!r) break;
            }
            total += r;
        });
    });

    std::int64_t qMT = static_cast<std::int64_t>(checked_pow_u64(spec->q(), M + T));
    std::int64_t main = qMT / static_cast<std::int64_t>(spec->q()) * (static_cast<std::int64_t>(spec->q()) - 1);
    return {total, main, total - main};
}

} // namespace torsearch
