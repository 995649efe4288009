#ifndef TORSEARCH_RESIDUES_HPP
#define TORSEARCH_RESIDUES_HPP

#include <cstdint>
#include <optional>

#include "torsearch/budget.hpp"
#include "torsearch/factor.hpp"
#include "torsearch/poly.hpp"

namespace torsearch {

/// Jacobi symbol (a/b) for monic b of degree >= 1: the product over the prime
/// factorization of b of the quadratic residue symbols in A/p. Computed by
/// Euclidean reduction through the reciprocity law
///   (a/b)(b/a) = (-1)^{((q-1)/2) deg a deg b}   (a, b monic coprime),
/// peeling leading coefficients via (c/b) = chi(c)^{deg b}. Returns 0 iff
/// gcd(a, b) != 1. Throws if b is not monic or is constant.
int jacobi(const Poly& a, const Poly& b);

/// Slow oracle: factor b and apply the Euler criterion a^{(|p|-1)/2} mod p
/// for each prime p. Same contract as jacobi().
int jacobi_euler(const Poly& a, const Poly& b, std::uint64_t seed = 0);

/// rho_m(l): number of solutions mod l of n^2 = m^g, for gcd(m, l) = 1,
/// l monic of degree >= 1, g odd >= 1. Multiplicative over the primes of l
/// with rho_m(p^a) = 1 + (m/p); g enters only through its oddness.
/// gcd(m, l) != 1 is an explicit error, not 0.
std::int64_t rho(const Poly& m, const Poly& l, std::uint32_t g, std::uint64_t seed = 0);

struct CharSumResult {
    std::uint64_t q;
    std::int64_t b_or_B; // deg b for the fixed sum, B for the double sum
    std::uint32_t D;
    std::int64_t value;                   // exact enumerated sum
    std::optional<std::int64_t> predicted; // absent when the hypothesis fails
    bool match;                            // value == predicted when present
};

/// sum over monic a of degree D of (b/a). Predicted 0 when D >= deg b and b
/// is not a constant times a perfect square; otherwise the sum is still
/// computed and predicted is absent.
CharSumResult char_sum_fixed(const Poly& b, std::uint32_t D, Budget* budget = nullptr,
                             std::uint64_t seed = 0);

/// double sum over monic b of degree B and monic a of degree D of (b/a),
/// 1 <= D <= B-1. Predicted 0 for odd D; for even D the reported prediction
/// is (q-1)(1-1/q)q^{B+D/2} and the enumerated value is authoritative, with
/// match recording agreement.
CharSumResult char_sum_double(const FieldSpecPtr& spec, std::uint32_t B, std::uint32_t D,
                              Budget* budget = nullptr);

struct RhoAverage {
    std::int64_t total;     // sum over monic m (deg M), monic t (deg T), gcd = 1, of rho_m(t^2)
    std::int64_t main_term; // q^{M+T}(1 - 1/q), exact
    std::int64_t residual;  // total - main_term
};

RhoAverage rho_average(const FieldSpecPtr& spec, std::uint32_t M, std::uint32_t T, std::uint32_t g,
                       Budget* budget = nullptr, std::uint64_t seed = 0);

} // namespace torsearch

#endif
