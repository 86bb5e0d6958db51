#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fewears/compositions.hpp"
#include "fewears/counting.hpp"
#include "fewears/disjointness.hpp"
#include "fewears/errors.hpp"
#include "fewears/svg.hpp"
#include "fewears/triangulation.hpp"
#include "fewears/verify.hpp"

namespace py = pybind11;
using namespace fewears;

namespace {

// Exact counts cross the boundary as Python ints, via their decimal form.
py::int_ to_py(const ExactCount& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(x).c_str(), nullptr, 10));
}

using Pair = std::pair<int, int>;

std::vector<Diagonal> to_diagonals(int n, const std::vector<Pair>& pairs) {
    std::vector<Diagonal> out;
    for (auto [a, b] : pairs) out.push_back(make_diagonal(n, a, b));
    return out;
}

std::vector<Pair> to_pairs(const std::vector<Diagonal>& ds) {
    std::vector<Pair> out;
    for (const Diagonal& d : ds) out.emplace_back(d.a, d.b);
    return out;
}

std::vector<std::array<int, 3>> to_triples(const std::vector<Triangle>& ts) {
    std::vector<std::array<int, 3>> out;
    for (const Triangle& t : ts) out.push_back(t.v);
    return out;
}

ClassCountMethod class_method(const std::string& name) {
    if (name == "closed") return ClassCountMethod::Closed;
    if (name == "burnside") return ClassCountMethod::Burnside;
    if (name == "direct") return ClassCountMethod::Direct;
    throw InputError("method must be closed|burnside|direct");
}

FixedOp fixed_op(const std::string& name) {
    if (name == "reversal") return FixedOp::Reversal;
    if (name == "conjugation") return FixedOp::Conjugation;
    if (name == "conj_rev") return FixedOp::ConjRev;
    throw InputError("op must be reversal|conjugation|conj_rev");
}

EarType ear_type(const std::array<int, 3>& t) { return EarType{t[0], t[1], t[2]}; }

std::vector<int> parts(const Composition& c) { return c.parts(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact counts for triangulations of convex polygons with few ears";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    py::class_<Triangulation>(m, "Triangulation")
        .def(py::init([](int n, const std::vector<Pair>& diagonals) {
                 std::vector<Diagonal> ds;
                 for (auto [a, b] : diagonals) ds.push_back(a < b ? Diagonal{a, b} : Diagonal{b, a});
                 return Triangulation(n, std::move(ds));
             }),
             py::arg("n"), py::arg("diagonals"))
        .def_static("parse", [](const std::string& text) { return parse_triangulation(text); })
        .def_property_readonly("n", &Triangulation::n)
        .def_property_readonly("diagonals", [](const Triangulation& t) { return to_pairs(t.diagonals()); })
        .def("triangles", [](const Triangulation& t) { return to_triples(triangles_of(t)); })
        .def("ears", [](const Triangulation& t) { return to_triples(ears_of(t)); })
        .def("internal_triangles", [](const Triangulation& t) { return to_triples(internal_triangles_of(t)); })
        .def("ear_count", [](const Triangulation& t) { return ear_count(t); })
        .def("rotate", [](const Triangulation& t, int s) { return rotate(t, s); })
        .def("reflect", [](const Triangulation& t) { return reflect(t); })
        .def("canonical_form", [](const Triangulation& t) { return canonical_form(t); })
        .def("is_disjoint_from", [](const Triangulation& t, const Triangulation& o) { return are_disjoint(t, o); })
        .def("__str__", [](const Triangulation& t) { return format_triangulation(t); })
        .def("__repr__", [](const Triangulation& t) { return "Triangulation.parse('" + format_triangulation(t) + "')"; })
        .def("__eq__", [](const Triangulation& a, const Triangulation& b) { return a == b; })
        .def("__hash__", [](const Triangulation& t) { return py::hash(py::str(format_triangulation(t))); });

    m.def("crosses", [](int n, Pair d1, Pair d2) {
        return crosses(n, make_diagonal(n, d1.first, d1.second), make_diagonal(n, d2.first, d2.second));
    });
    m.def("is_triangulation", [](int n, const std::vector<Pair>& diagonals) {
        std::vector<Diagonal> ds;
        for (auto [a, b] : diagonals) ds.push_back(a < b ? Diagonal{a, b} : Diagonal{b, a});
        std::sort(ds.begin(), ds.end());
        return is_triangulation(n, ds);
    });
    m.def("enumerate_triangulations", &enumerate_triangulations, py::arg("n"));

    m.def("catalan", [](int k) { return to_py(catalan(k)); });
    m.def("hurtado_noy", [](int n, int k) { return to_py(hurtado_noy(n, k)); });
    m.def("ear_census", [](int n, const std::string& method) {
        const auto c = ear_census(n, method == "brute" ? CensusMethod::Brute : CensusMethod::Formula);
        py::dict d;
        for (const auto& [k, v] : c.counts) d[py::int_(k)] = to_py(v);
        return d;
    }, py::arg("n"), py::arg("method") = "formula");
    m.def("symmetry_classes_2ear", [](int n) { return to_py(symmetry_classes_2ear(n)); });
    m.def("symmetry_classes_3ear", [](int n) { return to_py(symmetry_classes_3ear(n)); });
    m.def("symmetry_classes_orbit", [](int n, std::optional<int> ears) {
        return to_py(symmetry_classes_orbit(n, ears));
    }, py::arg("n"), py::arg("ears") = py::none());

    m.def("enumerate_compositions", [](int total) {
        std::vector<std::vector<int>> out;
        for_each_composition(total, [&](const Composition& c) { out.push_back(c.parts()); });
        return out;
    });
    m.def("conjugate", [](const std::vector<int>& c) { return parts(conjugate(Composition(c))); });
    m.def("reverse", [](const std::vector<int>& c) { return parts(reverse(Composition(c))); });
    m.def("class_of", [](const std::vector<int>& c) {
        std::vector<std::vector<int>> out;
        for (const auto& x : class_of(Composition(c))) out.push_back(x.parts());
        return out;
    });
    m.def("count_classes", [](int total, const std::string& method) {
        return to_py(count_classes(total, class_method(method)));
    }, py::arg("m"), py::arg("method") = "direct");
    m.def("count_fixed", [](int total, const std::string& op) { return to_py(count_fixed(total, fixed_op(op))); });
    m.def("two_eared_to_string", [](const Triangulation& t) { return format_pointing(two_eared_to_string(t)); });
    m.def("string_to_two_eared", [](const std::string& s) { return string_to_two_eared(parse_pointing(s)); });
    m.def("string_to_composition", [](const std::string& s) { return parts(string_to_composition(parse_pointing(s))); });
    m.def("composition_to_string", [](const std::vector<int>& c, int n) {
        return format_pointing(composition_to_string(Composition(c), n));
    });

    m.def("arrow", &arrow);
    m.def("snake", &snake);
    m.def("three_ear_rep", [](int n, const std::array<int, 3>& t) { return three_ear_rep(n, ear_type(t)); });
    m.def("three_ear_type", [](const Triangulation& t) {
        const EarType e = three_ear_type(t);
        return std::array<int, 3>{e.p, e.q, e.r};
    });
    m.def("count_avoiding", [](int n, const std::vector<Pair>& forbidden) {
        return to_py(count_avoiding(n, to_diagonals(n, forbidden)));
    });
    m.def("disj_count", [](const Triangulation& t) { return to_py(disj_count(t)); });
    m.def("disj_2ear_formula", [](int n) { return to_py(disj_2ear_formula(n)); });
    m.def("disj_inclusion_exclusion", [](int n) { return to_py(disj_inclusion_exclusion(n)); });
    m.def("disj_series_coefficients", [](int order) {
        py::list out;
        for (const auto& c : disj_series_coefficients(order)) out.append(to_py(c));
        return out;
    });
    m.def("m_forb_formula", [](int n, int k) { return to_py(m_forb_formula(n, k)); });
    m.def("disj_3ear_cases", [](int n, const std::array<int, 3>& t) { return to_py(disj_3ear_cases(n, ear_type(t))); });
    m.def("disj_3ear_printed", [](int n, const std::array<int, 3>& t) {
        return to_py(disj_3ear_printed(n, ear_type(t)));
    });
    m.def("count_avoiding_parallel", [](int n, const std::set<int>& residues) {
        return to_py(count_avoiding_parallel(n, residues));
    });
    m.def("internal_signature", [](const Triangulation& t) { return to_triples(internal_signature(t).triangles); });

    m.def("render_svg", [](const Triangulation& t, const std::string& highlight) {
        SvgOptions o;
        o.highlight = parse_highlight(highlight);
        return render_svg(t, o);
    }, py::arg("t"), py::arg("highlight") = "none");

    m.def("verify_json", [](std::optional<int> max_n, const std::vector<std::string>& suites, std::optional<int> threads) {
        VerifyOptions o;
        o.max_n = max_n;
        o.suites = suites;
        if (threads) o.threads = *threads;
        RunReport report;
        {
            py::gil_scoped_release release;
            report = run_verify(o);
        }
        return report_to_json(report).dump();
    }, py::arg("max_n") = py::none(), py::arg("suites") = std::vector<std::string>{}, py::arg("threads") = py::none());
}
