// python bindings for the core operations; vertices are 0-based here,
// matching the in-memory API (file formats stay 1-based)

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "sntrank/closed_form.hpp"
#include "sntrank/errors.hpp"
#include "sntrank/factorization.hpp"
#include "sntrank/io.hpp"
#include "sntrank/uniqueness.hpp"

namespace py = pybind11;
using namespace sntrank;

namespace {

std::vector<std::vector<int>> cover_components(const Cover& c) {
    std::vector<std::vector<int>> out;
    for (const Component& k : c.components()) out.push_back(k.members());
    return out;
}

Cover make_cover(int ground_n, const std::vector<std::vector<int>>& components,
                 const std::vector<std::pair<int, int>>& joins) {
    Cover c(ground_n);
    std::vector<int> idx;
    for (const auto& members : components) {
        Component k(ground_n);
        for (int v : members) {
            if (v < 0 || v >= ground_n) throw std::invalid_argument("vertex out of range");
            k.set(v);
        }
        idx.push_back(c.add_component(k));
    }
    for (auto [a, b] : joins) {
        if (a < 0 || b < 0 || a >= int(idx.size()) || b >= int(idx.size()))
            throw std::invalid_argument("join index out of range");
        c.add_join(idx[a], idx[b]);
    }
    return c;
}

std::vector<std::vector<long long>> matrix_rows(const IntMatrix& m) {
    std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
    return out;
}

SolverOptions make_options(std::optional<int> max_order, std::optional<double> time_limit,
                           int threads) {
    SolverOptions opts;
    opts.max_order = max_order;
    opts.time_limit_s = time_limit;
    opts.threads = threads;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact SNT-rank solver, certificate builder, and verifier";

    py::register_exception<limit_error>(m, "LimitError");
    py::register_exception<parse_error>(m, "ParseError");

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init(&Graph::from_edges), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def("has_edge", &Graph::has_edge)
        .def("has_loop", &Graph::has_loop)
        .def("edges", &Graph::edges)
        .def("edge_count", &Graph::edge_count)
        .def("neighbors", [](const Graph& g, int v) { return neighbors(g, v).members(); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.vertex_count() << ", edges=" << g.edge_count() << ")";
            return s.str();
        });

    py::class_<Cover>(m, "Cover")
        .def(py::init(&make_cover), py::arg("ground_n"), py::arg("components"), py::arg("joins"))
        .def_property_readonly("ground_n", &Cover::ground_n)
        .def_property_readonly("order", &Cover::order)
        .def_property_readonly("components", &cover_components)
        .def_property_readonly("joins", [](const Cover& c) { return c.joins(); })
        .def("__eq__", [](const Cover& a, const Cover& b) { return a == b; })
        .def("__repr__", [](const Cover& c) {
            std::ostringstream s;
            s << "Cover(order=" << c.order() << ", joins=" << c.joins().size() << ")";
            return s.str();
        });

    py::class_<ValidityReport>(m, "ValidityReport")
        .def_readonly("valid", &ValidityReport::valid)
        .def_readonly("missing", &ValidityReport::missing)
        .def_readonly("forbidden", &ValidityReport::forbidden);

    py::enum_<SolveStatus>(m, "SolveStatus")
        .value("exact", SolveStatus::exact)
        .value("cap_reached", SolveStatus::cap_reached)
        .value("timeout", SolveStatus::timeout);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("rank", &SolveResult::rank)
        .def_readonly("certificate", &SolveResult::certificate)
        .def_readonly("status", &SolveResult::status);

    py::class_<UniquenessReport>(m, "UniquenessReport")
        .def_readonly("rank", &UniquenessReport::rank)
        .def_readonly("covers", &UniquenessReport::covers)
        .def_readonly("orbit_count", &UniquenessReport::orbit_count)
        .def_readonly("cover_graphs", &UniquenessReport::cover_graphs)
        .def_readonly("unique", &UniquenessReport::unique)
        .def_readonly("essentially_unique", &UniquenessReport::essentially_unique)
        .def_readonly("unique_cover_graph", &UniquenessReport::unique_cover_graph);

    // factories
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);
    m.def("complete_graph_loops", &complete_graph_loops);
    m.def("star_graph", &star_graph);
    m.def("disjoint_union", &disjoint_union);
    m.def("graph_join", &join);
    m.def("conormal_product", &conormal_product);

    // solving
    m.def(
        "snt_rank",
        [](const Graph& g, std::optional<int> max_order, std::optional<double> time_limit,
           int threads) { return snt_rank(g, make_options(max_order, time_limit, threads)); },
        py::arg("g"), py::arg("max_order") = std::nullopt, py::arg("time_limit") = std::nullopt,
        py::arg("threads") = 1);
    m.def(
        "snt_rank_exact",
        [](const Graph& g, std::optional<int> max_order, std::optional<double> time_limit,
           int threads) { return snt_rank_exact(g, make_options(max_order, time_limit, threads)); },
        py::arg("g"), py::arg("max_order") = std::nullopt, py::arg("time_limit") = std::nullopt,
        py::arg("threads") = 1);
    m.def(
        "enumerate_optimal_covers",
        [](const Graph& g, std::optional<double> time_limit) {
            const auto en = enumerate_optimal_covers(g, make_options(std::nullopt, time_limit, 1));
            if (!en.complete) throw limit_error("enumeration incomplete");
            return en.covers;
        },
        py::arg("g"), py::arg("time_limit") = std::nullopt);
    m.def(
        "classify_uniqueness",
        [](const Graph& g, std::optional<double> time_limit) {
            return classify_uniqueness(g, make_options(std::nullopt, time_limit, 1));
        },
        py::arg("g"), py::arg("time_limit") = std::nullopt);
    m.def("lower_bound", &lower_bound);

    // covers and factorizations
    m.def("validate_cover", &validate_cover);
    m.def("cover_graph", &cover_graph);
    m.def("canonical_form", &canonical_form);
    m.def("sdr_exists", &sdr_exists);
    m.def("cover_to_factors",
          [](const Cover& c) {
              const auto [b, cmat] = cover_to_factors(c);
              return py::make_tuple(matrix_rows(b), matrix_rows(cmat));
          })
        .def(
            "triproduct",
            [](const std::vector<std::vector<long long>>& b,
               const std::vector<std::vector<long long>>& cmat) {
                return matrix_rows(triproduct(IntMatrix::from_rows(b), IntMatrix::from_rows(cmat)));
            })
        .def("pattern_of",
             [](const std::vector<std::vector<long long>>& a) {
                 return pattern_of(IntMatrix::from_rows(a));
             })
        .def("verify_realization",
             [](const Graph& g, const std::vector<std::vector<long long>>& b,
                const std::vector<std::vector<long long>>& cmat) {
                 return verify_realization(g, IntMatrix::from_rows(b), IntMatrix::from_rows(cmat));
             })
        .def("support_condition_check",
             [](const std::vector<std::vector<long long>>& a,
                const std::vector<std::vector<long long>>& b,
                const std::vector<std::vector<long long>>& cmat) {
                 return support_condition_check(IntMatrix::from_rows(a), IntMatrix::from_rows(b),
                                                IntMatrix::from_rows(cmat));
             })
        .def("factors_to_cover", [](const std::vector<std::vector<long long>>& b,
                                    const std::vector<std::vector<long long>>& cmat) {
            return factors_to_cover(IntMatrix::from_rows(b), IntMatrix::from_rows(cmat));
        });

    // closed forms
    m.def("katona_s", &katona_s);
    m.def("min_factor_sum", [](long long n) {
        const auto f = min_factor_sum(n);
        return py::make_tuple(f.sum, f.factors);
    });
    m.def("katona_recursion_check", &katona_recursion_check);
    m.def("build_complete_cover", &build_complete_cover);
    m.def("snt_rank_forest", &snt_rank_forest);
    m.def("snt_rank_generalized_star", &snt_rank_generalized_star);
    m.def("snt_rank_cycle", &snt_rank_cycle);
    m.def("snt_rank_unicyclic", &snt_rank_unicyclic);

    // text formats (1-based labels, same as the CLI)
    m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
    m.def("write_edgelist", &write_edgelist);
}
