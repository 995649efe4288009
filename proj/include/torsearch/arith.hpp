#ifndef TORSEARCH_ARITH_HPP
#define TORSEARCH_ARITH_HPP

#include <cstdint>

#include "torsearch/budget.hpp"
#include "torsearch/factor.hpp"
#include "torsearch/poly.hpp"

namespace torsearch {

/// Exact sums of mu, phi, d over all monic polynomials of degree U, plus the
/// count pi(U) of monic irreducibles. Computed by enumeration; the closed
/// forms (sum_mu = 0 for U >= 2, sum_phi = q^{2U}(1 - 1/q), sum_d = q^U(U+1),
/// pi <= q^U/U) are asserted before the summary is returned.
struct DegreeSummary {
    std::uint64_t q;
    std::uint32_t U;
    std::int64_t sum_mu;
    std::int64_t sum_phi;
    std::int64_t sum_d;
    std::int64_t pi; // pi(0) reported as 0: units are not irreducible
};

/// 0 if f is not square-free, else (-1)^t with t the number of distinct
/// monic irreducible factors. Needs only distinct-degree data, no splitting.
int mobius(const Poly& f);

/// number of distinct monic divisors, prod(exp_i + 1).
std::int64_t divisor_count(const Poly& f, std::uint64_t seed = 0);

/// order of (A/fA)^x via the product formula; 1 for constants.
std::int64_t euler_phi(const Poly& f, std::uint64_t seed = 0);

/// exact pi(U) by Gauss/Moebius inversion of q^U = sum_{D|U} D pi(D).
std::int64_t irreducible_count(const FieldSpecPtr& spec, std::uint32_t U);

DegreeSummary degree_summary(const FieldSpecPtr& spec, std::uint32_t U, Budget* budget = nullptr);

/// integer Moebius function (trial division).
int mobius_int(std::uint64_t n);

} // namespace torsearch

#endif
