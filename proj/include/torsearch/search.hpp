#ifndef TORSEARCH_SEARCH_HPP
#define TORSEARCH_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torsearch/budget.hpp"
#include "torsearch/poly.hpp"

namespace torsearch {

/// Degree regime for the diophantine search n^2 - m^g = t^2 f:
///   g odd >= 3, L odd, 0 <= T < L/2, M g = 2T + L, N = T + (L-1)/2,
/// and the S-set threshold Q = ceil((L - T + 2 log_q L)/3).
struct SearchParams {
    FieldSpecPtr spec;
    std::uint64_t q;
    std::uint32_t g;
    std::uint32_t L;
    std::uint32_t T;
    std::uint32_t M;
    std::uint32_t N;
    std::uint32_t Q;           // S2/S3 boundary
    std::uint32_t log_floor;   // floor(log_q L), S1/S2 boundary
    double log_q_L;

    void validate() const; // throws std::invalid_argument naming the failed constraint
};

/// T defaults to the valid integer (g | 2T+L, 0 <= T < L/2) nearest to
/// L(g-2)/(4(g+1)), ties broken downward. Passing T_override skips the
/// optimization but not the validity checks.
SearchParams derive_params(const FieldSpecPtr& spec, std::uint32_t g, std::uint32_t L,
                           std::optional<std::uint32_t> T_override = std::nullopt);

enum class SClass { S1, S2, S3 };
const char* to_string(SClass c);

struct SolutionTuple {
    Poly m, n, t; // monic, degrees M, N, T
    Poly f;       // (n^2 - m^g)/t^2, square-free, degree L, sgn = -1
    std::optional<SClass> s_class;
};

enum class RejectReason { NotCoprime, NotDivisible, DegreeCondition, EvenDegree, NotSquarefree };
const char* to_string(RejectReason r);

struct BuildResult {
    std::optional<Poly> f;
    std::optional<RejectReason> reject;
    bool ok() const { return f.has_value(); }
};

/// Checks, in order: gcd(m, n) = 1; t^2 | n^2 - m^g; deg m^g > max(2 deg n,
/// 4 deg t); f = (n^2 - m^g)/t^2 of odd degree and square-free. Returns f or
/// the first failed check.
BuildResult build_f(const Poly& m, const Poly& n, const Poly& t, std::uint32_t g);

struct SearchOptions {
    std::uint64_t budget = Budget::kDefault;
    std::uint32_t workers = 1;
    std::uint64_t seed = 0;
    bool use_naive = false; // oracle: scan all q^{M+N+T} monic triples
};

/// Complete, duplicate-free stream of solutions, ordered by (m, t, n) in
/// enumeration order. The fast path solves n^2 = m^g (mod t^2) per (m, t)
/// by Tonelli-Shanks + Hensel + CRT and lifts each residue class to its
/// q^{N-2T} monic candidates of degree N.
std::vector<SolutionTuple> enumerate_solutions(const SearchParams& params,
                                               const SearchOptions& opts = {});

/// Membership of a candidate quotient in the (overlapping) S-sets: a prime
/// square p^2 | f_raw counts against S1 when deg p <= floor(log_q L), puts
/// the tuple in S2 when floor(log_q L) < deg p <= Q, in S3 when deg p > Q.
struct SMembership {
    bool s1, s2, s3;
};
SMembership s_membership(const Poly& f_raw, const SearchParams& params, std::uint64_t seed = 0);

/// Single label with precedence S3, S2, then S1 by its own condition;
/// nullopt when only small-prime squares divide the quotient (the three
/// sets do not cover that case). Square-free quotients are always S1.
std::optional<SClass> classify_quotient(const Poly& f_raw, const SearchParams& params,
                                        std::uint64_t seed = 0);
std::optional<SClass> classify_tuple(const SolutionTuple& sol, const SearchParams& params,
                                     std::uint64_t seed = 0);

/// Census over the degree regime. R(f) counts solutions per distinct f;
/// s_counts tallies S-set membership over every congruence-satisfying
/// coprime candidate triple (square-free or not).
struct CensusReport {
    SearchParams params;
    std::uint64_t n_g_lt = 0;      // #{f : R(f) >= 1}
    std::uint64_t sum_r = 0;       // sum R(f)
    std::uint64_t sum_r_pairs = 0; // sum R(f)(R(f)-1)
    std::map<std::uint64_t, std::uint64_t> r_histogram;
    std::uint64_t n1 = 0, n2 = 0, n3 = 0;
    std::uint64_t cauchy_num = 0, cauchy_den = 1; // (sum R)^2 / sum R^2, reduced
    std::vector<std::pair<Poly, std::uint64_t>> distinct_f; // sorted, with R(f)

    std::uint64_t cauchy_ceil() const;
};

CensusReport census(const SearchParams& params, const SearchOptions& opts = {});

} // namespace torsearch

#endif
