#ifndef TORSEARCH_FACTOR_HPP
#define TORSEARCH_FACTOR_HPP

#include <cstdint>
#include <vector>

#include "torsearch/poly.hpp"

namespace torsearch {

struct FactorPower {
    Poly prime; // irreducible, monic
    std::uint32_t exp;
};

/// unit * prod(prime_i ^ exp_i), primes distinct, monic, irreducible, sorted
/// by (degree, coefficient order).
struct Factorization {
    FieldElem unit;
    std::vector<FactorPower> factors;

    Poly expand() const;
    bool all_exponents_one() const;
    /// the same primes with every exponent doubled (factorization of f^2)
    Factorization squared() const;
};

/// Full factorization: distinct-degree splitting, then seeded
/// Cantor-Zassenhaus equal-degree splitting. Deterministic for a fixed seed
/// (the generator is keyed on seed and the input polynomial, so results do
/// not depend on call order). Each factor is certified irreducible before
/// returning. Throws on f = 0.
Factorization factor(const Poly& f, std::uint64_t seed = 0);

bool is_irreducible(const Poly& f);

} // namespace torsearch

#endif
