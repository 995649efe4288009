#include "torsearch/modsqrt.hpp"

#include <algorithm>
#include <stdexcept>

namespace torsearch {

namespace {

u128 upow128(std::uint64_t base, std::uint32_t exp) {
    u128 r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) r *= base;
    return r;
}

// deterministic quadratic non-residue of A/p: first residue (enumeration
// order) whose Euler symbol is -1
Poly find_nonresidue(const Poly& p, u128 half) {
    const FieldSpecPtr& spec = p.spec();
    Poly found;
    bool done = false;
    for_each_residue(spec, static_cast<std::uint32_t>(p.degree()), [&](const Poly& z) {
        if (done || z.is_zero()) return;
        Poly s = z.pow_mod(half, p);
        if (s.is_constant() && !s.is_zero() && s.coeff_code(0) == spec->neg(1)) {
            found = z;
            done = true;
        }
    });
    if (!done) throw std::logic_error("no quadratic non-residue found");
    return found;
}

} // namespace

std::optional<Poly> sqrt_mod_irreducible(const Poly& a, const Poly& p) {
    const FieldSpecPtr& spec = p.spec();
    Poly red = a % p;
    if (red.is_zero()) return Poly::zero(spec);
    std::uint32_t d = static_cast<std::uint32_t>(p.degree());
    u128 order = upow128(spec->q(), d) - 1;
    u128 half = order / 2;
    Poly chi = red.pow_mod(half, p);
    if (!(chi.is_one())) return std::nullopt; // 0 handled above; -1 means non-residue

    // Tonelli-Shanks in the field A/p
    std::uint32_t s = 0;
    u128 t = order;
    while ((t & 1) == 0) {
        t >>= 1;
        ++s;
    }
    if (s == 1) {
        // |F| = 3 mod 4 shortcut: a^{(|F|+1)/4}
        return red.pow_mod((order + 2) / 4, p);
    }
    Poly z = find_nonresidue(p, half);
    Poly c = z.pow_mod(t, p);
    Poly r = red.pow_mod((t + 1) / 2, p);
    Poly u = red.pow_mod(t, p);
    std::uint32_t m = s;
    while (!u.is_one()) {
        std::uint32_t i = 0;
        Poly probe = u;
        while (!probe.is_one()) {
            probe = (probe * probe) % p;
            ++i;
            if (i == m) throw std::logic_error("Tonelli-Shanks: element order inconsistency");
        }
        Poly b = c;
        for (std::uint32_t j = 0; j + i + 1 < m; ++j) b = (b * b) % p;
        r = (r * b) % p;
        c = (b * b) % p;
        u = (u * c) % p;
        m = i;
    }
    return r;
}

Poly hensel_lift_sqrt(const Poly& a, const Poly& p, const Poly& root_mod_p, std::uint32_t target) {
    if (target < 1) throw std::invalid_argument("hensel_lift_sqrt: target exponent must be >= 1");
    if ((root_mod_p % p).is_zero()) throw std::invalid_argument("hensel_lift_sqrt: root must be a unit");
    const FieldSpecPtr& spec = p.spec();
    Poly root = root_mod_p % p;
    std::uint32_t k = 1;
    while (k < target) {
        std::uint32_t next = std::min(2 * k, target);
        Poly mod = p.pow(next);
        Poly two = Poly::constant(spec, spec->encode({2}));
        Poly denom_inv = inverse_mod((two * root) % mod, mod);
        Poly delta = ((root * root - a) % mod) * denom_inv % mod;
        root = (root - delta) % mod;
        if (!((root * root - a) % mod).is_zero())
            throw std::logic_error("hensel_lift_sqrt: lift failed");
        k = next;
    }
    return root;
}

Poly crt_pair(const Poly& r1, const Poly& m1, const Poly& r2, const Poly& m2) {
    XGcd g = xgcd(m1, m2);
    if (!g.g.is_one()) throw std::invalid_argument("crt_pair: moduli are not coprime");
    Poly mod = m1 * m2;
    // x = r1 + m1 * s * (r2 - r1) with s = m1^{-1} mod m2
    Poly x = (r1 + m1 * (g.s * (r2 - r1) % m2)) % mod;
    return x;
}

std::vector<Poly> solve_square_congruence(const Poly& a, const Factorization& l_factored) {
    const FieldSpecPtr& spec = a.spec();
    struct Branch {
        Poly modulus; // p^e
        Poly root;    // one root mod p^e (the other is its negation)
    };
    std::vector<Branch> branches;
    for (const auto& fp : l_factored.factors) {
        Poly red = a % fp.prime;
        if (red.is_zero())
            throw std::invalid_argument("solve_square_congruence: a shares a factor with the modulus");
        auto root0 = sqrt_mod_irreducible(a, fp.prime);
        if (!root0) return {};
        Poly lifted = fp.exp == 1 ? *root0 : hensel_lift_sqrt(a, fp.prime, *root0, fp.exp);
        branches.push_back({fp.prime.pow(fp.exp), lifted});
    }
    // combine: 2^k sign choices
    std::vector<Poly> sols{Poly::zero(spec)};
    Poly modulus = Poly::one(spec);
    for (const auto& br : branches) {
        std::vector<Poly> next;
        Poly neg_root = (-br.root) % br.modulus;
        for (const auto& base : sols) {
            if (modulus.is_one()) {
                next.push_back(br.root);
                next.push_back(neg_root);
            } else {
                next.push_back(crt_pair(base, modulus, br.root, br.modulus));
                next.push_back(crt_pair(base, modulus, neg_root, br.modulus));
            }
        }
        sols = std::move(next);
        modulus = modulus * br.modulus;
    }
    std::sort(sols.begin(), sols.end());
    sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
    return sols;
}

} // namespace torsearch
