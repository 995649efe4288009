#include "torsearch/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace torsearch {

namespace {

u128 upow128(std::uint64_t base, std::uint32_t exp) {
    u128 r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (r > (~static_cast<u128>(0)) / base) throw std::overflow_error("exponent exceeds 128 bits");
        r *= base;
    }
    return r;
}

Poly random_poly_below(const FieldSpecPtr& spec, int deg_bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, spec->q() - 1);
    std::vector<std::uint64_t> codes(static_cast<std::size_t>(deg_bound));
    for (auto& c : codes) c = dist(rng);
    return Poly::from_codes(spec, std::move(codes));
}

// splits a monic product of k >= 1 distinct irreducibles, all of degree d
void equal_degree_split(const Poly& u, std::uint32_t d, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
    if (static_cast<std::uint32_t>(u.degree()) == d) {
        out.push_back(u);
        return;
    }
    const FieldSpecPtr& spec = u.spec();
    u128 exponent = (upow128(spec->q(), d) - 1) / 2;
    for (;;) {
        Poly a = random_poly_below(spec, u.degree(), rng);
        if (a.is_zero() || a.is_constant()) continue;
        Poly g = gcd_monic(a, u);
        if (!g.is_one() && g.degree() < u.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(u.exact_div(g), d, rng, out);
            return;
        }
        Poly b = a.pow_mod(exponent, u) - Poly::one(spec);
        if (b.is_zero()) continue;
        Poly h = gcd_monic(b, u);
        if (!h.is_one() && h.degree() < u.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split(u.exact_div(h), d, rng, out);
            return;
        }
    }
}

// monic squarefree input -> monic irreducible factors
void factor_squarefree(const Poly& w, std::mt19937_64& rng, std::vector<Poly>& out) {
    const FieldSpecPtr& spec = w.spec();
    Poly rest = w;
    Poly xp = Poly::x(spec);
    Poly h = xp % rest;
    std::uint32_t d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > static_cast<std::uint32_t>(rest.degree())) {
            out.push_back(rest); // what is left is irreducible
            break;
        }
        h = h.pow_mod(spec->q(), rest);
        Poly g = gcd_monic(h - xp, rest);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            rest = rest.exact_div(g);
            h = h % rest;
        }
    }
}

void factor_monic(const Poly& f, std::mt19937_64& rng, std::uint32_t mult,
                  std::vector<FactorPower>& out) {
    const FieldSpecPtr& spec = f.spec();
    if (f.degree() == 0) return;
    Poly d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p) with p-th-power coefficients, so f = (p-th root of g)^p
        std::uint64_t p = spec->p();
        std::vector<std::uint64_t> codes(f.degree() / p + 1, 0);
        for (std::size_t i = 0; i < codes.size(); ++i)
            codes[i] = spec->proot(f.coeff_code(i * p));
        factor_monic(Poly::from_codes(spec, std::move(codes)), rng, mult * static_cast<std::uint32_t>(p), out);
        return;
    }
    Poly c = gcd_monic(f, d);
    Poly w = f.exact_div(c); // product of the primes of f with exponent not divisible by p
    std::vector<Poly> primes;
    factor_squarefree(w, rng, primes);
    Poly rest = f;
    for (const Poly& prime : primes) {
        std::uint32_t e = 0;
        for (;;) {
            auto [quot, rem] = rest.divmod(prime);
            if (!rem.is_zero()) break;
            rest = quot;
            ++e;
        }
        out.push_back({prime, e * mult});
    }
    factor_monic(rest, rng, mult, out); // leftover primes have exponent divisible by p
}

} // namespace

Poly Factorization::expand() const {
    Poly r = Poly::constant(unit.spec(), unit.code());
    for (const auto& fp : factors) r = r * fp.prime.pow(fp.exp);
    return r;
}

bool Factorization::all_exponents_one() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const FactorPower& fp) { return fp.exp == 1; });
}

Factorization Factorization::squared() const {
    Factorization r = *this;
    r.unit = unit * unit;
    for (auto& fp : r.factors) fp.exp *= 2;
    return r;
}

Factorization factor(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    const FieldSpecPtr& spec = f.spec();
    Factorization result{f.leading(), {}};
    std::mt19937_64 rng(seed ^ (f.stable_hash() * 0x9e3779b97f4a7c15ull));
    factor_monic(f.monic(), rng, 1, result.factors);
    std::sort(result.factors.begin(), result.factors.end(),
              [](const FactorPower& a, const FactorPower& b) { return a.prime < b.prime; });
    for (const auto& fp : result.factors)
        if (!is_irreducible(fp.prime)) throw std::logic_error("factor certification failed");
    if (result.expand() != f) throw std::logic_error("factorization does not reproduce input");
    return result;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.is_constant()) return false;
    const FieldSpecPtr& spec = f.spec();
    Poly m = f.monic();
    std::uint32_t d = static_cast<std::uint32_t>(m.degree());
    if (d == 1) return true;
    Poly xp = Poly::x(spec);
    // x^{q^d} = x mod f, and gcd(x^{q^{d/l}} - x, f) = 1 for prime l | d
    Poly h = xp % m;
    for (std::uint32_t i = 1; i <= d; ++i) {
        h = h.pow_mod(spec->q(), m);
        if (i < d && d % i == 0) {
            std::uint32_t cofactor = d / i;
            bool cof_prime = cofactor >= 2;
            for (std::uint32_t t = 2; t * t <= cofactor; ++t)
                if (cofactor % t == 0) { cof_prime = false; break; }
            if (cof_prime && !gcd_monic(h - xp, m).is_one()) return false;
        }
    }
    return h == xp % m;
}

} // namespace torsearch
