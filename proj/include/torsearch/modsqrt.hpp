#ifndef TORSEARCH_MODSQRT_HPP
#define TORSEARCH_MODSQRT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "torsearch/factor.hpp"
#include "torsearch/poly.hpp"

namespace torsearch {

/// Square root of a in the residue field A/p, p monic irreducible, by
/// Tonelli-Shanks (the non-residue is picked deterministically, smallest in
/// enumeration order). Returns nullopt for non-residues. a = 0 yields 0.
std::optional<Poly> sqrt_mod_irreducible(const Poly& a, const Poly& p);

/// Newton-lift a root of y^2 = a from mod p to mod p^target; requires
/// root nonzero mod p (so 2*root is invertible). Returns the lifted root
/// reduced mod p^target.
Poly hensel_lift_sqrt(const Poly& a, const Poly& p, const Poly& root_mod_p, std::uint32_t target);

/// All solutions of n^2 = a (mod l), where l = prod p_i^{e_i} is given in
/// factored form and gcd(a, l) = 1: per-prime Tonelli-Shanks roots, Hensel
/// lifting, then CRT over all sign choices. Sorted, duplicate-free; empty
/// when some prime sees a non-residue.
std::vector<Poly> solve_square_congruence(const Poly& a, const Factorization& l_factored);

/// x = r1 (mod m1), x = r2 (mod m2) for coprime moduli; reduced mod m1*m2.
Poly crt_pair(const Poly& r1, const Poly& m1, const Poly& r2, const Poly& m2);

} // namespace torsearch

#endif
