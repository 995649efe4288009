// pybind11 surface: the main operations with plain-Python inputs
// (polynomials as little-endian coefficient lists) and dict/list outputs.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "torsearch/io.hpp"

namespace py = pybind11;
using namespace torsearch;

namespace {

json py_to_json(py::handle h) {
    if (py::isinstance<py::int_>(h)) return h.cast<std::int64_t>();
    if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
        json arr = json::array();
        for (auto item : h) arr.push_back(py_to_json(item));
        return arr;
    }
    throw py::type_error("expected an int or a (nested) list of ints");
}

py::object json_to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

FieldSpecPtr make_spec(std::uint64_t q, std::uint32_t e) {
    if (e > 1) return FieldSpec::make(q, e);
    return field_for_cardinality(q);
}

Poly poly_arg(const FieldSpecPtr& spec, py::handle h) {
    return poly_from_json(spec, py_to_json(h));
}

SearchParams params_arg(std::uint64_t q, std::uint32_t e, std::uint32_t g, std::uint32_t L,
                        std::optional<std::uint32_t> T) {
    return derive_params(make_spec(q, e), g, L, T);
}

} // namespace

PYBIND11_MODULE(_torsearch, m) {
    m.doc() = "torsion search in class groups of imaginary quadratic function fields";

    m.def(
        "derive_params",
        [](std::uint64_t q, std::uint32_t g, std::uint32_t L, std::optional<std::uint32_t> T,
           std::uint32_t e) { return json_to_py(params_to_json(params_arg(q, e, g, L, T))); },
        py::arg("q"), py::arg("g"), py::arg("L"), py::arg("T") = std::nullopt, py::arg("e") = 1);

    m.def(
        "build_f",
        [](std::uint64_t q, std::uint32_t g, py::handle m_, py::handle n_, py::handle t_,
           std::uint32_t e) {
            FieldSpecPtr spec = make_spec(q, e);
            BuildResult r = build_f(poly_arg(spec, m_), poly_arg(spec, n_), poly_arg(spec, t_), g);
            json j;
            if (r.ok())
                j = json{{"ok", true}, {"f", poly_to_json(*r.f)}};
            else
                j = json{{"ok", false}, {"rejected", to_string(*r.reject)}};
            return json_to_py(j);
        },
        py::arg("q"), py::arg("g"), py::arg("m"), py::arg("n"), py::arg("t"), py::arg("e") = 1);

    m.def(
        "search",
        [](std::uint64_t q, std::uint32_t g, std::uint32_t L, std::optional<std::uint32_t> T,
           std::uint32_t e, std::uint64_t budget, std::uint32_t workers, std::uint64_t seed,
           bool naive) {
            SearchParams P = params_arg(q, e, g, L, T);
            SearchOptions opts{budget, workers, seed, naive};
            json arr = json::array();
            for (const auto& s : enumerate_solutions(P, opts)) arr.push_back(solution_to_json(P, s));
            return json_to_py(arr);
        },
        py::arg("q"), py::arg("g"), py::arg("L"), py::arg("T") = std::nullopt, py::arg("e") = 1,
        py::arg("budget") = Budget::kDefault, py::arg("workers") = 1, py::arg("seed") = 0,
        py::arg("naive") = false);

    m.def(
        "census",
        [](std::uint64_t q, std::uint32_t g, std::uint32_t L, std::optional<std::uint32_t> T,
           std::uint32_t e, std::uint64_t budget, std::uint32_t workers, std::uint64_t seed,
           bool naive) {
            SearchParams P = params_arg(q, e, g, L, T);
            SearchOptions opts{budget, workers, seed, naive};
            return json_to_py(census_to_json(census(P, opts)));
        },
        py::arg("q"), py::arg("g"), py::arg("L"), py::arg("T") = std::nullopt, py::arg("e") = 1,
        py::arg("budget") = Budget::kDefault, py::arg("workers") = 1, py::arg("seed") = 0,
        py::arg("naive") = false);

    m.def(
        "verify_order",
        [](std::uint64_t q, std::uint32_t g, py::handle m_, py::handle n_, py::handle t_,
           std::uint32_t e, std::uint64_t budget) {
            FieldSpecPtr spec = make_spec(q, e);
            BuildResult r = build_f(poly_arg(spec, m_), poly_arg(spec, n_), poly_arg(spec, t_), g);
            if (!r.ok())
                return json_to_py(json{{"pass", false}, {"rejected", to_string(*r.reject)}});
            SolutionTuple sol{poly_arg(spec, m_), poly_arg(spec, n_), poly_arg(spec, t_), *r.f,
                              std::nullopt};
            Budget bud(budget);
            return json_to_py(certificate_to_json(verify_order_g(sol, g, &bud), *spec));
        },
        py::arg("q"), py::arg("g"), py::arg("m"), py::arg("n"), py::arg("t"), py::arg("e") = 1,
        py::arg("budget") = Budget::kDefault);

    m.def(
        "curve_summary",
        [](std::uint64_t q, py::handle f_, std::uint32_t e, std::uint64_t budget) {
            FieldSpecPtr spec = make_spec(q, e);
            Budget bud(budget);
            return json_to_py(curve_summary_to_json(l_polynomial(curve_from(poly_arg(spec, f_)), &bud)));
        },
        py::arg("q"), py::arg("f"), py::arg("e") = 1, py::arg("budget") = Budget::kDefault);

    m.def(
        "tables",
        [](std::uint64_t q, std::uint32_t U, std::uint32_t e) {
            FieldSpecPtr spec = make_spec(q, e);
            Budget bud;
            json arr = json::array();
            for (std::uint32_t u = 0; u <= U; ++u) {
                DegreeSummary s = degree_summary(spec, u, &bud);
                arr.push_back(json{{"q", s.q},
                                   {"U", s.U},
                                   {"sum_mu", s.sum_mu},
                                   {"sum_phi", s.sum_phi},
                                   {"sum_d", s.sum_d},
                                   {"pi", s.pi}});
            }
            return json_to_py(arr);
        },
        py::arg("q"), py::arg("U"), py::arg("e") = 1);

    m.def(
        "charsum_fixed",
        [](std::uint64_t q, py::handle b_, std::uint32_t D, std::uint32_t e, std::uint64_t seed) {
            FieldSpecPtr spec = make_spec(q, e);
            CharSumResult r = char_sum_fixed(poly_arg(spec, b_), D, nullptr, seed);
            json j{{"q", r.q}, {"b_deg", r.b_or_B}, {"D", r.D}, {"value", r.value}, {"match", r.match}};
            if (r.predicted) j["predicted"] = *r.predicted;
            return json_to_py(j);
        },
        py::arg("q"), py::arg("b"), py::arg("D"), py::arg("e") = 1, py::arg("seed") = 0);

    m.def(
        "charsum_double",
        [](std::uint64_t q, std::uint32_t B, std::uint32_t D, std::uint32_t e) {
            FieldSpecPtr spec = make_spec(q, e);
            CharSumResult r = char_sum_double(spec, B, D);
            json j{{"q", r.q}, {"B", r.b_or_B}, {"D", r.D}, {"value", r.value}, {"match", r.match}};
            if (r.predicted) j["predicted"] = *r.predicted;
            return json_to_py(j);
        },
        py::arg("q"), py::arg("B"), py::arg("D"), py::arg("e") = 1);

    m.def(
        "jacobi",
        [](std::uint64_t q, py::handle a_, py::handle b_, std::uint32_t e) {
            FieldSpecPtr spec = make_spec(q, e);
            return jacobi(poly_arg(spec, a_), poly_arg(spec, b_));
        },
        py::arg("q"), py::arg("a"), py::arg("b"), py::arg("e") = 1);

    m.def(
        "rho",
        [](std::uint64_t q, py::handle m_, py::handle l_, std::uint32_t g, std::uint32_t e) {
            FieldSpecPtr spec = make_spec(q, e);
            return rho(poly_arg(spec, m_), poly_arg(spec, l_), g);
        },
        py::arg("q"), py::arg("m"), py::arg("l"), py::arg("g"), py::arg("e") = 1);

    m.def(
        "mobius",
        [](std::uint64_t q, py::handle f_, std::uint32_t e) {
            return mobius(poly_arg(make_spec(q, e), f_));
        },
        py::arg("q"), py::arg("f"), py::arg("e") = 1);

    m.def(
        "euler_phi",
        [](std::uint64_t q, py::handle f_, std::uint32_t e) {
            return euler_phi(poly_arg(make_spec(q, e), f_));
        },
        py::arg("q"), py::arg("f"), py::arg("e") = 1);

    m.def(
        "divisor_count",
        [](std::uint64_t q, py::handle f_, std::uint32_t e) {
            return divisor_count(poly_arg(make_spec(q, e), f_));
        },
        py::arg("q"), py::arg("f"), py::arg("e") = 1);

    m.def(
        "factorize",
        [](std::uint64_t q, py::handle f_, std::uint64_t seed, std::uint32_t e) {
            FieldSpecPtr spec = make_spec(q, e);
            Factorization fac = factor(poly_arg(spec, f_), seed);
            json factors = json::array();
            for (const auto& fp : fac.factors)
                factors.push_back(json{{"prime", poly_to_json(fp.prime)}, {"exp", fp.exp}});
            return json_to_py(json{{"unit", elem_to_json(*spec, fac.unit.code())}, {"factors", factors}});
        },
        py::arg("q"), py::arg("f"), py::arg("seed") = 0, py::arg("e") = 1);

    m.attr("__version__") = "0.1.0";
}
