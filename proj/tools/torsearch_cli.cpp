// torsearch: constructive search for odd-order torsion in class groups of
// imaginary quadratic function fields F_q(x, sqrt(f)), plus the exact
// arithmetic tables and character sums backing it.
//
// exit codes: 0 ok, 2 usage/invalid input, 3 budget exceeded,
//             4 failed verification or internal invariant, 1 other errors.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "torsearch/io.hpp"

using namespace torsearch;

namespace {

struct CommonOpts {
    std::uint64_t q = 3;
    std::uint32_t ext = 1; // extension degree e when q is given as p
    std::uint64_t budget = Budget::kDefault;
    std::uint32_t workers = 1;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format;
};

// --q accepts a prime power directly (9 -> p=3, e=2) unless --e overrides
FieldSpecPtr spec_from(const CommonOpts& c) {
    if (c.ext > 1) return FieldSpec::make(c.q, c.ext);
    return field_for_cardinality(c.q);
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int run_params(const CommonOpts& c, std::uint32_t g, std::uint32_t L,
               std::optional<std::uint32_t> T) {
    SearchParams P = derive_params(spec_from(c), g, L, T);
    Output out(c.out_path);
    out.os() << params_to_json(P).dump(2) << "\n";
    return 0;
}

int run_search(const CommonOpts& c, std::uint32_t g, std::uint32_t L,
               std::optional<std::uint32_t> T, bool naive, bool verify) {
    SearchParams P = derive_params(spec_from(c), g, L, T);
    SearchOptions opts{c.budget, c.workers, c.seed, naive};
    auto sols = enumerate_solutions(P, opts);
    Output out(c.out_path);
    bool all_pass = true;
    for (const auto& s : sols) {
        out.os() << solution_to_jsonl_line(P, s) << "\n";
        if (verify) {
            OrderCertificate cert = verify_order_g(s, P.g);
            if (!cert.pass) {
                std::cerr << "verification FAILED: " << certificate_to_json(cert, *P.spec).dump()
                          << "\n";
                all_pass = false;
            }
        }
    }
    std::cerr << "solutions: " << sols.size() << "\n";
    return all_pass ? 0 : 4;
}

int run_census(const CommonOpts& c, std::uint32_t g, std::uint32_t L,
               std::optional<std::uint32_t> T, bool naive, bool verify) {
    SearchParams P = derive_params(spec_from(c), g, L, T);
    SearchOptions opts{c.budget, c.workers, c.seed, naive};
    CensusReport rep = census(P, opts);
    bool all_pass = true;
    if (verify) {
        auto sols = enumerate_solutions(P, opts);
        for (const auto& s : sols) {
            OrderCertificate cert = verify_order_g(s, P.g);
            if (!cert.pass) {
                std::cerr << "verification FAILED: " << certificate_to_json(cert, *P.spec).dump()
                          << "\n";
                all_pass = false;
            }
        }
        if (all_pass) std::cerr << "all " << sols.size() << " solutions verified (order " << g << ")\n";
    }
    Output out(c.out_path);
    if (c.format == "csv")
        out.os() << census_csv_header() << "\n" << census_csv_row(rep) << "\n";
    else
        out.os() << census_to_json(rep).dump(2) << "\n";
    return all_pass ? 0 : 4;
}

int run_verify(const CommonOpts& c, std::uint32_t g, const std::string& ms, const std::string& ns,
               const std::string& ts) {
    FieldSpecPtr spec = spec_from(c);
    Poly m = parse_poly(spec, ms), n = parse_poly(spec, ns), t = parse_poly(spec, ts);
    BuildResult built = build_f(m, n, t, g);
    Output out(c.out_path);
    if (!built.ok()) {
        out.os() << json{{"pass", false}, {"rejected", to_string(*built.reject)}}.dump(2) << "\n";
        return 4;
    }
    SolutionTuple sol{m, n, t, *built.f, std::nullopt};
    Budget bud(c.budget);
    OrderCertificate cert = verify_order_g(sol, g, &bud);
    out.os() << certificate_to_json(cert, *spec).dump(2) << "\n";
    return cert.pass ? 0 : 4;
}

int run_curve(const CommonOpts& c, const std::string& fs) {
    FieldSpecPtr spec = spec_from(c);
    Poly f = parse_poly(spec, fs);
    Budget bud(c.budget);
    ClassGroupSummary s = l_polynomial(curve_from(f), &bud);
    Output out(c.out_path);
    out.os() << curve_summary_to_json(s).dump(2) << "\n";
    return 0;
}

int run_tables(const CommonOpts& c, std::uint32_t U) {
    FieldSpecPtr spec = spec_from(c);
    Budget bud(c.budget);
    Output out(c.out_path);
    out.os() << tables_csv_header() << "\n";
    for (std::uint32_t u = 0; u <= U; ++u)
        out.os() << tables_csv_row(degree_summary(spec, u, &bud)) << "\n";
    return 0;
}

int run_charsum(const CommonOpts& c, const std::string& b, std::uint32_t B, std::uint32_t D) {
    FieldSpecPtr spec = spec_from(c);
    Budget bud(c.budget);
    CharSumResult r = b.empty() ? char_sum_double(spec, B, D, &bud)
                                : char_sum_fixed(parse_poly(spec, b), D, &bud, c.seed);
    Output out(c.out_path);
    out.os() << charsum_csv_header() << "\n" << charsum_csv_row(r) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"torsion search in class groups of imaginary quadratic function fields"};
    app.require_subcommand(1);

    CommonOpts c;
    std::uint32_t g = 3, L = 5, U = 2, B = 0, D = 1;
    std::optional<std::uint32_t> T;
    std::uint32_t t_flag = 0;
    bool naive = false, verify = false;
    std::string m_str, n_str, t_str, f_str, b_str;

    auto add_common = [&](CLI::App* cmd, bool with_search_opts) {
        cmd->add_option("--q", c.q, "field cardinality (odd prime power)")->required();
        cmd->add_option("--e", c.ext, "extension degree when --q is the characteristic");
        cmd->add_option("--budget", c.budget, "enumeration node cap");
        cmd->add_option("--seed", c.seed, "factorization seed");
        cmd->add_option("--out", c.out_path, "output path (default stdout)");
        if (with_search_opts) {
            cmd->add_option("--workers", c.workers, "worker threads");
            cmd->add_flag("--naive", naive, "use the exhaustive triple-loop oracle");
        }
    };

    auto* cmd_params = app.add_subcommand("params", "derive the degree regime (T, M, N, Q)");
    add_common(cmd_params, false);
    cmd_params->add_option("--g", g, "target torsion order (odd, >= 3)")->required();
    cmd_params->add_option("--L", L, "degree of f (odd, >= 3)")->required();
    auto* optT1 = cmd_params->add_option("--T", t_flag, "override deg t");

    auto* cmd_search = app.add_subcommand("search", "emit solutions of n^2 - m^g = t^2 f as JSONL");
    add_common(cmd_search, true);
    cmd_search->add_option("--g", g)->required();
    cmd_search->add_option("--L", L)->required();
    auto* optT2 = cmd_search->add_option("--T", t_flag);
    cmd_search->add_flag("--verify", verify, "certify order g for every solution");

    auto* cmd_census = app.add_subcommand("census", "aggregate R(f), S-classes and the Cauchy-Schwarz bound");
    add_common(cmd_census, true);
    cmd_census->add_option("--g", g)->required();
    cmd_census->add_option("--L", L)->required();
    auto* optT3 = cmd_census->add_option("--T", t_flag);
    cmd_census->add_option("--format", c.format, "json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_census->add_flag("--verify", verify);

    auto* cmd_verify = app.add_subcommand("verify", "certificate of order g for one (m, n, t)");
    add_common(cmd_verify, false);
    cmd_verify->add_option("--g", g)->required();
    cmd_verify->add_option("--m", m_str, "monic m, JSON coefficients or expression")->required();
    cmd_verify->add_option("--n", n_str)->required();
    cmd_verify->add_option("--t", t_str)->required();

    auto* cmd_curve = app.add_subcommand("curve", "point counts, L-polynomial and class number of y^2 = f");
    add_common(cmd_curve, false);
    cmd_curve->add_option("--f", f_str, "square-free f of odd degree")->required();

    auto* cmd_tables = app.add_subcommand("tables", "CSV of exact mu/phi/d sums and pi per degree");
    add_common(cmd_tables, false);
    cmd_tables->add_option("--U", U, "maximum degree")->required();

    auto* cmd_charsum = app.add_subcommand("charsum", "exact Jacobi-symbol character sums as CSV");
    add_common(cmd_charsum, false);
    auto* optb = cmd_charsum->add_option("--b", b_str, "fixed numerator polynomial");
    auto* optB = cmd_charsum->add_option("--B", B, "outer degree for the double sum");
    cmd_charsum->add_option("--D", D, "inner (denominator) degree")->required();
    optb->excludes(optB);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cmd_params->parsed()) {
            if (optT1->count()) T = t_flag;
            return run_params(c, g, L, T);
        }
        if (cmd_search->parsed()) {
            if (optT2->count()) T = t_flag;
            return run_search(c, g, L, T, naive, verify);
        }
        if (cmd_census->parsed()) {
            if (optT3->count()) T = t_flag;
            return run_census(c, g, L, T, naive, verify);
        }
        if (cmd_verify->parsed()) return run_verify(c, g, m_str, n_str, t_str);
        if (cmd_curve->parsed()) return run_curve(c, f_str);
        if (cmd_tables->parsed()) return run_tables(c, U);
        if (cmd_charsum->parsed()) {
            if (b_str.empty() && !optB->count())
                throw std::invalid_argument("charsum requires --b or --B");
            return run_charsum(c, b_str, B, D);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
