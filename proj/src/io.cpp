#include "torsearch/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace torsearch {

json elem_to_json(const FieldSpec& spec, std::uint64_t code) {
    if (spec.e() == 1) return code;
    return json(spec.decode(code));
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (std::size_t i = 0; i < p.codes().size(); ++i)
        arr.push_back(elem_to_json(*p.spec(), p.codes()[i]));
    return arr;
}

Poly poly_from_json(const FieldSpecPtr& spec, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<std::uint64_t> codes;
    for (const auto& c : j) {
        if (c.is_number_integer()) {
            codes.push_back(spec->encode({c.get<std::int64_t>()}));
        } else if (c.is_array()) {
            std::vector<std::int64_t> vec = c.get<std::vector<std::int64_t>>();
            codes.push_back(spec->encode(vec));
        } else {
            throw std::invalid_argument("polynomial coefficient must be an integer or residue vector");
        }
    }
    return Poly::from_codes(spec, std::move(codes));
}

namespace {

// grammar: term (("+"|"-") term)*, term = int ["*" x-part] | x-part,
// x-part = "x" ["^" int]
Poly parse_human(const FieldSpecPtr& spec, const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_uint = [&]() -> std::int64_t {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw std::invalid_argument("expected integer in polynomial at '" + text.substr(start) + "'");
        return std::stoll(text.substr(start, i - start));
    };

    Poly acc = Poly::zero(spec);
    bool first = true;
    skip_ws();
    while (i < text.size()) {
        std::int64_t sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in polynomial");
        }
        first = false;
        std::int64_t coef = 1;
        bool saw_coef = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coef = parse_uint();
            saw_coef = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        std::uint32_t deg = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            deg = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                deg = static_cast<std::uint32_t>(parse_uint());
            }
        } else if (!saw_coef) {
            throw std::invalid_argument("expected coefficient or 'x' in polynomial");
        }
        std::uint64_t code = spec->encode({sign * coef});
        acc = acc + Poly::monomial(spec, deg, 1).scaled(code);
        skip_ws();
    }
    return acc;
}

} // namespace

Poly parse_poly(const FieldSpecPtr& spec, const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '[') return poly_from_json(spec, json::parse(text));
    return parse_human(spec, text);
}

json params_to_json(const SearchParams& p) {
    return json{{"q", p.q},      {"g", p.g}, {"L", p.L},
                {"T", p.T},      {"M", p.M}, {"N", p.N},
                {"Q", p.Q},      {"log_floor", p.log_floor},
                {"log_q_L", p.log_q_L}};
}

json solution_to_json(const SearchParams& p, const SolutionTuple& s) {
    json j{{"q", p.q},
           {"g", p.g},
           {"m", poly_to_json(s.m)},
           {"n", poly_to_json(s.n)},
           {"t", poly_to_json(s.t)},
           {"f", poly_to_json(s.f)}};
    if (s.s_class) j["s_class"] = to_string(*s.s_class);
    return j;
}

std::string solution_to_jsonl_line(const SearchParams& p, const SolutionTuple& s) {
    return solution_to_json(p, s).dump();
}

json census_to_json(const CensusReport& rep) {
    json hist = json::object();
    for (const auto& [r, c] : rep.r_histogram) hist[std::to_string(r)] = c;
    json fs = json::array();
    for (const auto& [f, r] : rep.distinct_f) fs.push_back(json{{"f", poly_to_json(f)}, {"R", r}});
    return json{{"params", params_to_json(rep.params)},
                {"N_g_LT", rep.n_g_lt},
                {"sum_R", rep.sum_r},
                {"sum_R_pairs", rep.sum_r_pairs},
                {"r_histogram", hist},
                {"s_counts", json{{"N1", rep.n1}, {"N2", rep.n2}, {"N3", rep.n3}}},
                {"cauchy_lower", json{{"num", rep.cauchy_num}, {"den", rep.cauchy_den},
                                      {"ceil", rep.cauchy_ceil()}}},
                {"distinct_f", fs}};
}

std::string census_csv_header() { return "q,g,L,T,M,N,N_g_LT,sum_R,sum_R_pairs,N1,N2,N3"; }

std::string census_csv_row(const CensusReport& rep) {
    std::ostringstream os;
    const SearchParams& p = rep.params;
    os << p.q << ',' << p.g << ',' << p.L << ',' << p.T << ',' << p.M << ',' << p.N << ','
       << rep.n_g_lt << ',' << rep.sum_r << ',' << rep.sum_r_pairs << ',' << rep.n1 << ','
       << rep.n2 << ',' << rep.n3;
    return os.str();
}

std::string tables_csv_header() { return "q,U,sum_mu,sum_phi,sum_d,pi"; }

std::string tables_csv_row(const DegreeSummary& s) {
    std::ostringstream os;
    os << s.q << ',' << s.U << ',' << s.sum_mu << ',' << s.sum_phi << ',' << s.sum_d << ',' << s.pi;
    return os.str();
}

std::string charsum_csv_header() { return "q,B_or_b,D,value,predicted,match"; }

std::string charsum_csv_row(const CharSumResult& r) {
    std::ostringstream os;
    os << r.q << ',' << r.b_or_B << ',' << r.D << ',' << r.value << ',';
    if (r.predicted)
        os << *r.predicted << ',' << (r.match ? "true" : "false");
    else
        os << "," << "n/a";
    return os.str();
}

json curve_summary_to_json(const ClassGroupSummary& s) {
    json hf = json::array();
    for (const auto& [p, e] : s.h_factored) hf.push_back(json{{"p", p}, {"e", e}});
    return json{{"q", s.curve.spec()->q()},
                {"f", poly_to_json(s.curve.f())},
                {"genus", s.curve.genus()},
                {"N", s.point_counts},
                {"L_poly", s.l_poly},
                {"h", s.h},
                {"h_factored", hf}};
}

json certificate_to_json(const OrderCertificate& c, const FieldSpec&) {
    return json{{"m", poly_to_json(c.m)},   {"n", poly_to_json(c.n)}, {"t", poly_to_json(c.t)},
                {"f", poly_to_json(c.f)},   {"h", c.h},               {"order", c.order},
                {"pass", c.pass}};
}

} // namespace torsearch
