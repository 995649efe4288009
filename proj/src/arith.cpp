#include "torsearch/arith.hpp"

#include <stdexcept>

namespace torsearch {

int mobius(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("mobius of 0 is undefined");
    if (f.is_constant()) return 1;
    if (!is_squarefree(f)) return 0;
    // distinct-degree pass: f squarefree, count primes as deg(block)/d
    const FieldSpecPtr& spec = f.spec();
    Poly rest = f.monic();
    Poly xp = Poly::x(spec);
    Poly h = xp % rest;
    std::uint32_t t = 0;
    std::uint32_t d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > static_cast<std::uint32_t>(rest.degree())) {
            ++t;
            break;
        }
        h = h.pow_mod(spec->q(), rest);
        Poly g = gcd_monic(h - xp, rest);
        if (g.degree() > 0) {
            t += static_cast<std::uint32_t>(g.degree()) / d;
            rest = rest.exact_div(g);
            h = h % rest;
        }
    }
    return (t % 2 == 0) ? 1 : -1;
}

std::int64_t divisor_count(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("divisor count of 0 is undefined");
    std::int64_t r = 1;
    for (const auto& fp : factor(f, seed).factors) r *= static_cast<std::int64_t>(fp.exp) + 1;
    return r;
}

std::int64_t euler_phi(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("euler_phi of 0 is undefined");
    if (f.is_constant()) return 1;
    std::int64_t r = 1;
    for (const auto& fp : factor(f, seed).factors) {
        std::uint64_t np = checked_pow_u64(f.spec()->q(), static_cast<std::uint32_t>(fp.prime.degree()));
        std::int64_t block = static_cast<std::int64_t>(np) - 1;
        for (std::uint32_t i = 1; i < fp.exp; ++i) block *= static_cast<std::int64_t>(np);
        r *= block;
    }
    return r;
}

int mobius_int(std::uint64_t n) {
    if (n == 0) throw std::domain_error("mobius_int(0) is undefined");
    int t = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            ++t;
        }
    }
    if (n > 1) ++t;
    return (t % 2 == 0) ? 1 : -1;
}

std::int64_t irreducible_count(const FieldSpecPtr& spec, std::uint32_t U) {
    if (U < 1) throw std::invalid_argument("irreducible_count requires U >= 1");
    std::int64_t total = 0;
    for (std::uint32_t D = 1; D <= U; ++D) {
        if (U % D) continue;
        total += mobius_int(D) * static_cast<std::int64_t>(checked_pow_u64(spec->q(), U / D));
    }
    if (total % U) throw std::logic_error("Gauss inversion did not divide evenly");
    return total / U;
}

DegreeSummary degree_summary(const FieldSpecPtr& spec, std::uint32_t U, Budget* budget) {
    Budget local;
    Budget& b = budget ? *budget : local;
    b.charge(monic_count(spec, U), "degree_summary");

    DegreeSummary s{spec->q(), U, 0, 0, 0, 0};
    for_each_monic(spec, U, [&](const Poly& f) {
        Factorization fac = factor(f);
        bool squarefree = fac.all_exponents_one();
        if (squarefree) s.sum_mu += (fac.factors.size() % 2 == 0) ? 1 : -1;
        std::int64_t d = 1, phi = 1;
        for (const auto& fp : fac.factors) {
            d *= static_cast<std::int64_t>(fp.exp) + 1;
            std::uint64_t np = checked_pow_u64(spec->q(), static_cast<std::uint32_t>(fp.prime.degree()));
            std::int64_t block = static_cast<std::int64_t>(np) - 1;
            for (std::uint32_t i = 1; i < fp.exp; ++i) block *= static_cast<std::int64_t>(np);
            phi *= block;
        }
        s.sum_d += d;
        s.sum_phi += phi;
        if (fac.factors.size() == 1 && fac.factors[0].exp == 1 &&
            fac.factors[0].prime.degree() == static_cast<int>(U))
            ++s.pi;
    });

    // closed forms are hard invariants of the summary
    std::int64_t qU = static_cast<std::int64_t>(checked_pow_u64(spec->q(), U));
    if (U == 0) {
        if (s.sum_mu != 1 || s.sum_phi != 1 || s.sum_d != 1 || s.pi != 0)
            throw std::logic_error("degree_summary invariant failed at U = 0");
        return s;
    }
    std::int64_t expected_mu = (U == 1) ? -static_cast<std::int64_t>(spec->q()) : 0;
    std::int64_t expected_phi =
        static_cast<std::int64_t>(checked_pow_u64(spec->q(), 2 * U)) / static_cast<std::int64_t>(spec->q()) *
        (static_cast<std::int64_t>(spec->q()) - 1);
    std::int64_t expected_d = qU * (static_cast<std::int64_t>(U) + 1);
    if (s.sum_mu != expected_mu) throw std::logic_error("degree_summary: mu sum violates closed form");
    if (s.sum_phi != expected_phi) throw std::logic_error("degree_summary: phi sum violates closed form");
    if (s.sum_d != expected_d) throw std::logic_error("degree_summary: d sum violates closed form");
    if (s.pi != irreducible_count(spec, U)) throw std::logic_error("degree_summary: pi mismatch");
    if (s.pi * static_cast<std::int64_t>(U) > qU) throw std::logic_error("degree_summary: pi bound violated");
    return s;
}

} // namespace torsearch
