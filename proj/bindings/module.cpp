#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kneser/bounds.hpp"
#include "kneser/constructions.hpp"
#include "kneser/search.hpp"
#include "kneser/spectral.hpp"
#include "kneser/verify.hpp"

namespace py = pybind11;
using namespace kneser;

namespace {

py::object to_frac(const Rat& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(rat_str(q));
}

py::object to_int(const Int& v) {
    static py::object int_type = py::module_::import("builtins").attr("int");
    return int_type(v.get_str());
}

Rat rat_from(const py::object& obj) {
    if (py::isinstance<py::float_>(obj))
        throw py::type_error("rational expected: pass an int, Fraction, or 'p/q' string");
    std::string text = py::str(obj);
    Rat q;
    if (q.set_str(text, 10) != 0) throw py::value_error("cannot parse rational: " + text);
    q.canonicalize();
    return q;
}

Int int_from(const py::object& obj) { return Int(std::string(py::str(obj))); }

SubsetCode code_from(int n, const std::vector<int>& elems) { return SubsetCode(n, elems); }

std::vector<std::vector<int>> member_lists(const Family& f) {
    std::vector<std::vector<int>> out;
    out.reserve(f.size());
    for (const auto& a : f.members()) out.push_back(a.elements());
    return out;
}

Order order_from(const std::string& name) {
    if (name == "lex") return Order::lex;
    if (name == "colex") return Order::colex;
    throw py::value_error("order must be 'lex' or 'colex'");
}

Objective objective_from(const std::string& name) {
    if (name == "max_degree") return Objective::max_degree;
    if (name == "edge_count") return Objective::edge_count;
    throw py::value_error("objective must be 'max_degree' or 'edge_count'");
}

py::dict profile_dict(const DegreeProfile& p) {
    py::dict d;
    d["degrees"] = p.degrees;
    d["max_degree"] = p.max_degree;
    d["edge_count"] = to_int(p.edge_count);
    return d;
}

py::dict report_dict(const BoundReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["value_down"] = r.value.decimal(Round::down);
    d["value_up"] = r.value.decimal(Round::up);
    if (r.value.is_rational()) d["value_exact"] = to_frac(r.value.rational_value());
    d["hypothesis"] = r.hypothesis;
    d["hypothesis_ok"] = r.hypothesis_ok;
    d["forced"] = r.forced;
    if (r.comparison) {
        py::dict c;
        c["quantity"] = r.comparison->quantity;
        c["measured"] = to_frac(r.comparison->measured);
        c["holds"] = r.comparison->holds;
        d["comparison"] = c;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact analysis of induced subgraphs of Kneser graphs";

    py::class_<Family>(m, "Family")
        .def(py::init([](int n, int k, const std::vector<std::vector<int>>& members) {
                 std::vector<SubsetCode> codes;
                 codes.reserve(members.size());
                 for (const auto& e : members) codes.push_back(code_from(n, e));
                 return Family(n, k, std::move(codes));
             }),
             py::arg("n"), py::arg("k"), py::arg("members") = std::vector<std::vector<int>>{})
        .def_property_readonly("n", &Family::n)
        .def_property_readonly("k", &Family::k)
        .def("__len__", &Family::size)
        .def("members", &member_lists)
        .def("contains",
             [](const Family& f, const std::vector<int>& elems) {
                 return f.contains(code_from(f.n(), elems));
             })
        .def("__repr__", [](const Family& f) {
            return "Family(n=" + std::to_string(f.n()) + ", k=" + std::to_string(f.k()) +
                   ", size=" + std::to_string(f.size()) + ")";
        });

    m.def("binom", [](long n, long k) { return to_int(binom(n, k)); });
    m.def("falling_ratio", [](long n, long k, long i) { return to_frac(falling_ratio(n, k, i)); });
    m.def("size_parameter", [](long n, long k, const py::object& m_) {
        auto sp = size_parameter(n, k, int_from(m_));
        return py::make_tuple(sp.s, to_frac(sp.lambda));
    });
    m.def("count_from_lambda", [](long n, long k, long s, const py::object& lam) {
        return to_int(count_from_lambda(n, k, s, rat_from(lam)));
    });

    m.def("full_family", &full_family);
    m.def("sets_meeting", [](int n, int k, const std::vector<int>& elems) {
        return sets_meeting(n, k, code_from(n, elems));
    });
    m.def("union_of_stars", [](int n, int k, const std::vector<int>& elems) {
        return union_of_stars(n, k, code_from(n, elems));
    });
    m.def(
        "order_segment",
        [](const std::string& order, int n, int k, const py::object& m_) {
            return order_segment(order_from(order), n, k, int_from(m_));
        },
        py::arg("order"), py::arg("n"), py::arg("k"), py::arg("m"));
    m.def(
        "explicit_family",
        [](int n, int k, int s, const py::object& lam) {
            auto [fam, t] = explicit_family(ConstructionSpec{n, k, s, rat_from(lam), {}});
            return py::make_tuple(fam, t);
        },
        py::arg("n"), py::arg("k"), py::arg("s"), py::arg("lam"));
    m.def(
        "random_family",
        [](int n, int k, int s, const py::object& lam, std::uint64_t seed) {
            return random_family(ConstructionSpec{n, k, s, rat_from(lam), seed});
        },
        py::arg("n"), py::arg("k"), py::arg("s"), py::arg("lam"), py::arg("seed"));

    m.def(
        "degree_profile",
        [](const Family& f, const std::string& strategy) {
            DegreeStrategy st = DegreeStrategy::automatic;
            if (strategy == "naive")
                st = DegreeStrategy::naive;
            else if (strategy == "zeta")
                st = DegreeStrategy::zeta;
            else if (strategy != "auto")
                throw py::value_error("strategy must be 'auto', 'naive', or 'zeta'");
            return profile_dict(degree_profile(f, st));
        },
        py::arg("family"), py::arg("strategy") = "auto");
    m.def("star_densities", [](const Family& f) {
        py::list out;
        for (const Rat& g : star_densities(f)) out.append(to_frac(g));
        return out;
    });
    m.def("bipartite_edge_count", [](const Family& a, const Family& b) {
        return to_int(bipartite_edge_count(a, b));
    });
    m.def(
        "slice",
        [](const Family& f, const std::vector<int>& j, const std::vector<int>& i) {
            auto r = slice(f, code_from(f.n(), j), code_from(f.n(), i));
            return py::make_tuple(r.family, r.labels);
        },
        py::arg("family"), py::arg("j"), py::arg("i"));

    m.def("spectrum", [](long n, long k) {
        auto s = spectrum(n, k);
        py::list ev, mult;
        for (const Int& v : s.eigenvalues) ev.append(to_int(v));
        for (const Int& v : s.multiplicities) mult.append(to_int(v));
        return py::make_tuple(ev, mult);
    });
    m.def("eigencomponent_norms", [](const Family& f) {
        py::list out;
        for (const Rat& v : eigencomponent_norms(f)) out.append(to_frac(v));
        return out;
    });
    m.def("linear_profile", [](const Family& f) {
        auto p = linear_profile(f);
        py::dict d;
        d["alpha"] = to_frac(p.alpha);
        py::list gamma, a, norms;
        for (const Rat& v : p.gamma) gamma.append(to_frac(v));
        for (const Rat& v : p.a) a.append(to_frac(v));
        for (const Rat& v : p.eigennorm_sq) norms.append(to_frac(v));
        d["gamma"] = gamma;
        d["gamma_max"] = to_frac(p.gamma_max);
        d["a"] = a;
        d["eta"] = to_frac(p.eta);
        d["eigennorm_sq"] = norms;
        return d;
    });
    m.def("singular_ratio_bound",
          [](long n, long k, long l) { return to_frac(singular_ratio_bound(n, k, l)); });
    m.def("bipartite_singular_sq", [](int n, int k, int l) {
        py::list out;
        for (const Rat& v : bipartite_singular_sq(n, k, l)) out.append(to_frac(v));
        return out;
    });

    m.def(
        "main_lower_bound",
        [](long n, long k, long s, const py::object& lam, bool force) {
            return report_dict(main_lower_bound(n, k, s, rat_from(lam), force));
        },
        py::arg("n"), py::arg("k"), py::arg("s"), py::arg("lam"), py::arg("force") = false);
    m.def(
        "construction_upper_bound",
        [](long n, long k, long s, const py::object& lam, bool force) {
            return report_dict(construction_upper_bound(n, k, s, rat_from(lam), force));
        },
        py::arg("n"), py::arg("k"), py::arg("s"), py::arg("lam"), py::arg("force") = false);
    m.def("random_expected_degree", [](long n, long k, long s, const py::object& lam) {
        return to_frac(random_expected_degree(n, k, s, rat_from(lam)));
    });
    m.def("stars_max_degree",
          [](long n, long k, long s) { return to_int(stars_max_degree(n, k, s)); });

    m.def(
        "exact_minimize",
        [](int n, int k, long m_, const std::string& objective, const std::string& mode) {
            SearchMode sm;
            if (mode == "bb")
                sm = SearchMode::branch_and_bound;
            else if (mode == "exhaustive")
                sm = SearchMode::exhaustive;
            else
                throw py::value_error("mode must be 'bb' or 'exhaustive'");
            auto r = exact_minimize(n, k, m_, objective_from(objective), sm);
            py::dict d;
            d["optimum"] = to_int(r.optimum);
            d["witness"] = r.witness;
            d["nodes_explored"] = r.nodes_explored;
            d["proven_optimal"] = r.proven_optimal;
            return d;
        },
        py::arg("n"), py::arg("k"), py::arg("m"), py::arg("objective") = "max_degree",
        py::arg("mode") = "bb");
    m.def("greedy_matching", [](const Family& f) {
        py::list out;
        for (const auto& a : greedy_matching(f).members) out.append(a.elements());
        return out;
    });

    m.def("run_criterion", [](int id) {
        auto r = run_criterion(id);
        py::dict d;
        d["id"] = r.id;
        d["name"] = r.name;
        d["pass"] = r.pass;
        d["detail"] = r.detail;
        return d;
    });
    m.def("suite_criteria", &suite_criteria);
}
