#include "torsearch/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "torsearch/arith.hpp"
#include "torsearch/modsqrt.hpp"

namespace torsearch {

const char* to_string(SClass c) {
    switch (c) {
        case SClass::S1: return "S1";
        case SClass::S2: return "S2";
        case SClass::S3: return "S3";
    }
    return "?";
}

const char* to_string(RejectReason r) {
    switch (r) {
        case RejectReason::NotCoprime: return "not coprime";
        case RejectReason::NotDivisible: return "t^2 does not divide n^2 - m^g";
        case RejectReason::DegreeCondition: return "degree condition";
        case RejectReason::EvenDegree: return "even degree";
        case RejectReason::NotSquarefree: return "not squarefree";
    }
    return "?";
}

void SearchParams::validate() const {
    if (!spec || spec->q() != q) throw std::invalid_argument("params: spec/q mismatch");
    if (g < 3 || g % 2 == 0) throw std::invalid_argument("params: g must be odd and >= 3");
    if (L < 3 || L % 2 == 0) throw std::invalid_argument("params: L must be odd and >= 3");
    if (2 * T >= L) throw std::invalid_argument("params: T must satisfy T < L/2");
    if (static_cast<std::uint64_t>(M) * g != 2ull * T + L)
        throw std::invalid_argument("params: Mg = 2T + L violated");
    if (N != T + (L - 1) / 2) throw std::invalid_argument("params: N = T + (L-1)/2 violated");
    std::uint64_t mg = static_cast<std::uint64_t>(M) * g;
    if (!(mg > 2ull * N && mg > 4ull * T))
        throw std::invalid_argument("params: Mg > max(2N, 4T) violated");
}

SearchParams derive_params(const FieldSpecPtr& spec, std::uint32_t g, std::uint32_t L,
                           std::optional<std::uint32_t> T_override) {
    if (g < 3 || g % 2 == 0) throw std::invalid_argument("derive_params: g must be odd and >= 3");
    if (L < 3 || L % 2 == 0) throw std::invalid_argument("derive_params: L must be odd and >= 3");

    std::uint32_t T = 0;
    if (T_override) {
        T = *T_override;
        if (2 * T >= L) throw std::invalid_argument("derive_params: T override violates T < L/2");
        if ((2ull * T + L) % g) throw std::invalid_argument("derive_params: T override violates g | 2T + L");
    } else {
        // valid T minimizing |4(g+1)T - L(g-2)| (an exact proxy for the
        // distance to L(g-2)/(4(g+1))), ties broken downward
        bool found = false;
        std::int64_t best_dist = 0;
        std::int64_t target = static_cast<std::int64_t>(L) * (g - 2);
        for (std::uint32_t cand = 0; 2 * cand < L; ++cand) {
            if ((2ull * cand + L) % g) continue;
            std::int64_t dist = std::llabs(4ll * (g + 1) * cand - target);
            if (!found || dist < best_dist) {
                found = true;
                best_dist = dist;
                T = cand;
            }
        }
        if (!found)
            throw std::invalid_argument(
                "derive_params: no T with g | 2T + L and 0 <= T < L/2 exists for these (g, L)");
    }

    SearchParams P;
    P.spec = spec;
    P.q = spec->q();
    P.g = g;
    P.L = L;
    P.T = T;
    P.M = static_cast<std::uint32_t>((2ull * T + L) / g);
    P.N = T + (L - 1) / 2;

    std::uint32_t k = 0;
    while (checked_pow_u64(P.q, k + 1) <= L) ++k;
    P.log_floor = k;
    P.log_q_L = std::log(static_cast<double>(L)) / std::log(static_cast<double>(P.q));
    if (checked_pow_u64(P.q, k) == L) {
        // L an exact power of q: integer ceil, immune to FP boundary error
        std::uint32_t a = L - T + 2 * k;
        P.Q = (a + 2) / 3;
    } else {
        P.Q = static_cast<std::uint32_t>(std::ceil((L - T + 2.0 * P.log_q_L) / 3.0));
    }
    P.validate();
    return P;
}

BuildResult build_f(const Poly& m, const Poly& n, const Poly& t, std::uint32_t g) {
    if (g < 3 || g % 2 == 0) throw std::invalid_argument("build_f: g must be odd and >= 3");
    if (m.is_zero() || n.is_zero() || t.is_zero() || !m.is_monic() || !n.is_monic() || !t.is_monic())
        throw std::invalid_argument("build_f: m, n, t must be monic and nonzero");

    if (!gcd_monic(m, n).is_one()) return {std::nullopt, RejectReason::NotCoprime};
    Poly h = n * n - m.pow(g);
    Poly t2 = t * t;
    auto [quot, rem] = h.divmod(t2);
    if (!rem.is_zero()) return {std::nullopt, RejectReason::NotDivisible};
    std::uint64_t mg = static_cast<std::uint64_t>(m.degree()) * g;
    if (!(mg > 2ull * n.degree() && mg > 4ull * t.degree()))
        return {std::nullopt, RejectReason::DegreeCondition};
    if (quot.degree() % 2 == 0) return {std::nullopt, RejectReason::EvenDegree};
    if (!is_squarefree(quot)) return {std::nullopt, RejectReason::NotSquarefree};
    return {quot, std::nullopt};
}

SMembership s_membership(const Poly& f_raw, const SearchParams& params, std::uint64_t seed) {
    if (f_raw.is_zero()) throw std::invalid_argument("s_membership: zero quotient");
    SMembership m{true, false, false};
    if (f_raw.is_constant() || is_squarefree(f_raw)) return m;
    for (const auto& fp : factor(f_raw, seed).factors) {
        if (fp.exp < 2) continue;
        std::uint32_t d = static_cast<std::uint32_t>(fp.prime.degree());
        if (d <= params.log_floor)
            m.s1 = false;
        else if (d <= params.Q)
            m.s2 = true;
        else
            m.s3 = true;
    }
    return m;
}

std::optional<SClass> classify_quotient(const Poly& f_raw, const SearchParams& params,
                                        std::uint64_t seed) {
    SMembership m = s_membership(f_raw, params, seed);
    if (m.s3) return SClass::S3;
    if (m.s2) return SClass::S2;
    if (m.s1) return SClass::S1;
    return std::nullopt; // only small-prime squares: outside all three sets
}

std::optional<SClass> classify_tuple(const SolutionTuple& sol, const SearchParams& params,
                                     std::uint64_t seed) {
    return classify_quotient(sol.f, params, seed);
}

namespace {

struct WorkerOut {
    std::vector<SolutionTuple> sols;
    std::uint64_t n1 = 0, n2 = 0, n3 = 0;
    std::uint64_t candidates = 0;
};

// a candidate satisfies the congruence, the degree regime and gcd(m, n) = 1;
// its quotient may or may not be square-free
void handle_candidate(const SearchParams& P, const SearchOptions& opts, const Poly& m,
                      const Poly& n, const Poly& t, const Poly& f_raw, bool diagnostics,
                      WorkerOut& out) {
    ++out.candidates;
    bool squarefree = is_squarefree(f_raw);
    if (diagnostics) {
        SMembership mem = squarefree ? SMembership{true, false, false}
                                     : s_membership(f_raw, P, opts.seed);
        out.n1 += mem.s1;
        out.n2 += mem.s2;
        out.n3 += mem.s3;
    }
    if (!squarefree) return;
    SolutionTuple sol{m, n, t, f_raw, SClass::S1};
    // emission-time recheck of the defining identity
    if (sol.t * sol.t * sol.f != sol.n * sol.n - sol.m.pow(P.g))
        throw std::logic_error("solution recheck failed: t^2 f != n^2 - m^g");
    out.sols.push_back(std::move(sol));
}

void process_m_range(const SearchParams& P, const SearchOptions& opts, std::uint64_t lo,
                     std::uint64_t hi, bool diagnostics, Budget& bud, WorkerOut& out) {
    const FieldSpecPtr& spec = P.spec;
    for (std::uint64_t mi = lo; mi < hi; ++mi) {
        Poly m = monic_by_index(spec, P.M, mi);
        Poly m_pow = m.pow(P.g);
        for_each_monic(spec, P.T, [&](const Poly& t) {
            bud.charge(1, "enumerate_solutions");
            if (!gcd_monic(m, t).is_one()) return; // a shared prime would force p | n
            Poly t2 = t * t;
            Factorization t2_fac = factor(t, opts.seed).squared();
            std::vector<Poly> residues = solve_square_congruence(m_pow % t2, t2_fac);
            if (residues.empty()) return;
            std::vector<Poly> ns;
            for (const Poly& r : residues) {
                if (P.N >= 2 * P.T) {
                    for_each_monic(spec, P.N - 2 * P.T, [&](const Poly& s) {
                        ns.push_back(t2 * s + r);
                    });
                } else if (r.degree() == static_cast<int>(P.N) && r.is_monic()) {
                    ns.push_back(r); // residue classes are wider than degree N
                }
            }
            std::sort(ns.begin(), ns.end());
            for (const Poly& n : ns) {
                bud.charge(1, "enumerate_solutions");
                if (!gcd_monic(m, n).is_one()) continue;
                Poly f_raw = (n * n - m_pow).exact_div(t2);
                handle_candidate(P, opts, m, n, t, f_raw, diagnostics, out);
            }
        });
    }
}

void process_m_range_naive(const SearchParams& P, const SearchOptions& opts, std::uint64_t lo,
                           std::uint64_t hi, bool diagnostics, Budget& bud, WorkerOut& out) {
    const FieldSpecPtr& spec = P.spec;
    for (std::uint64_t mi = lo; mi < hi; ++mi) {
        Poly m = monic_by_index(spec, P.M, mi);
        Poly m_pow = m.pow(P.g);
        for_each_monic(spec, P.T, [&](const Poly& t) {
            Poly t2 = t * t;
            for_each_monic(spec, P.N, [&](const Poly& n) {
                bud.charge(1, "enumerate_solutions(naive)");
                if (!gcd_monic(m, n).is_one()) return;
                auto [quot, rem] = (n * n - m_pow).divmod(t2);
                if (!rem.is_zero()) return;
                handle_candidate(P, opts, m, n, t, quot, diagnostics, out);
            });
        });
    }
}

std::vector<WorkerOut> run_search(const SearchParams& P, const SearchOptions& opts,
                                  bool diagnostics) {
    P.validate();
    std::uint32_t workers = std::max<std::uint32_t>(1, opts.workers);
    std::uint64_t total = monic_count(P.spec, P.M);
    std::uint64_t chunk = (total + workers - 1) / workers;

    auto run_chunk = [&](std::uint64_t lo, std::uint64_t hi, WorkerOut& out) {
        Budget bud(std::max<std::uint64_t>(1, opts.budget / workers));
        if (opts.use_naive)
            process_m_range_naive(P, opts, lo, hi, diagnostics, bud, out);
        else
            process_m_range(P, opts, lo, hi, diagnostics, bud, out);
    };

    std::vector<WorkerOut> outs(workers);
    if (workers == 1) {
        run_chunk(0, total, outs[0]);
        return outs;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (std::uint32_t w = 0; w < workers; ++w) {
        std::uint64_t lo = std::min<std::uint64_t>(total, w * chunk);
        std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
        threads.emplace_back([&, w, lo, hi] {
            try {
                run_chunk(lo, hi, outs[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    return outs;
}

} // namespace

std::vector<SolutionTuple> enumerate_solutions(const SearchParams& params,
                                               const SearchOptions& opts) {
    std::vector<WorkerOut> outs = run_search(params, opts, false);
    std::vector<SolutionTuple> merged;
    for (auto& o : outs)
        for (auto& s : o.sols) merged.push_back(std::move(s));
    return merged;
}

std::uint64_t CensusReport::cauchy_ceil() const {
    if (cauchy_num == 0) return 0;
    return (cauchy_num + cauchy_den - 1) / cauchy_den;
}

CensusReport census(const SearchParams& params, const SearchOptions& opts) {
    std::vector<WorkerOut> outs = run_search(params, opts, true);

    CensusReport rep;
    rep.params = params;
    std::map<Poly, std::uint64_t> by_f;
    for (auto& o : outs) {
        rep.n1 += o.n1;
        rep.n2 += o.n2;
        rep.n3 += o.n3;
        for (auto& s : o.sols) ++by_f[s.f];
    }
    std::uint64_t sum_r2 = 0;
    for (auto& [f, r] : by_f) {
        rep.distinct_f.emplace_back(f, r);
        rep.sum_r += r;
        rep.sum_r_pairs += r * (r - 1);
        sum_r2 += r * r;
        ++rep.r_histogram[r];
    }
    rep.n_g_lt = by_f.size();

    if (sum_r2 > 0) {
        std::uint64_t num = rep.sum_r * rep.sum_r;
        std::uint64_t den = sum_r2;
        std::uint64_t g = std::gcd(num, den);
        rep.cauchy_num = num / g;
        rep.cauchy_den = den / g;
    }
    // Cauchy-Schwarz: N_g(L,T) * sum R^2 >= (sum R)^2, exactly
    if (rep.n_g_lt * sum_r2 < rep.sum_r * rep.sum_r)
        throw std::logic_error("census: Cauchy-Schwarz lower bound violated");
    return rep;
}

} // namespace torsearch
