#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tlrep/functors.hpp"
#include "tlrep/homology.hpp"
#include "tlrep/io.hpp"
#include "tlrep/quiver.hpp"
#include "tlrep/verify.hpp"

namespace py = pybind11;
using namespace tlrep;

namespace {

AlgebraCtx make_ctx(const std::string& family, int n, int ell) {
    if (family != "tl" && family != "dtl") throw DomainError("family must be 'tl' or 'dtl'");
    AlgebraCtx c{family == "dtl" ? Family::DTL : Family::TL, n, ell};
    check_ctx(c);
    return c;
}

Indec single(const AlgebraCtx& ctx, const std::string& text) {
    const ModuleSum s = parse_module(ctx, text);
    if (s.total() != 1 || s.terms.size() != 1) throw DomainError(text + " is not indecomposable");
    return s.terms.begin()->first;
}

std::optional<int> dim(const DimResult& d) { return d.value; }

using SumFn = ModuleSum (*)(const AlgebraCtx&, const Indec&);

std::string per_summand(const ModuleSum& s, SumFn fn) {
    ModuleSum out(s.ctx);
    for (const auto& [m, c] : s.terms) out.add(fn(s.ctx, m), c);
    return to_string(out);
}

}  // namespace

PYBIND11_MODULE(_tlrep, m) {
    m.doc() = "Indecomposable modules of (dilute) Temperley-Lieb algebras at roots of unity";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("orbits", [](const std::string& family, int n, int ell) {
        const AlgebraCtx ctx = make_ctx(family, n, ell);
        std::vector<int> crit;
        std::vector<std::vector<int>> orbs;
        for (const OrbitView& o : orbit_partition(ctx)) {
            if (o.critical) crit.push_back(o.k_L());
            else orbs.push_back(o.members);
        }
        return py::make_tuple(crit, orbs);
    }, py::arg("family"), py::arg("n"), py::arg("ell"), "critical labels and non-critical orbits");

    m.def("normalize", [](const std::string& f, int n, int ell, const std::string& spec) {
        return to_string(parse_module(make_ctx(f, n, ell), spec));
    }, py::arg("family"), py::arg("n"), py::arg("ell"), py::arg("spec"));

    m.def("normalize_json", [](const std::string& f, int n, int ell, const std::string& spec) {
        return sum_json(parse_module(make_ctx(f, n, ell), spec));
    }, py::arg("family"), py::arg("n"), py::arg("ell"), py::arg("spec"));

    m.def("factors", [](const std::string& f, int n, int ell, const std::string& spec) {
        return composition_factors(parse_module(make_ctx(f, n, ell), spec));
    }, py::arg("family"), py::arg("n"), py::arg("ell"), py::arg("spec"));

    m.def("loewy", [](const std::string& f, int n, int ell, const std::string& spec) {
        const AlgebraCtx ctx = make_ctx(f, n, ell);
        return loewy_layers(ctx, single(ctx, spec));
    }, py::arg("family"), py::arg("n"), py::arg("ell"), py::arg("spec"));

    m.def("dual", [](const std::string& f, int n, int ell, const std::string& spec) {
        return to_string(dual(parse_module(make_ctx(f, n, ell), spec)));
    }, py::arg("family"), py::arg("n"), py::arg("ell"), py::arg("spec"));

    m.def("cover", [](const std::string& f, int n, int ell, const std::string& spec) {
        return per_summand(parse_module(make_ctx(f, n, ell), spec), projective_cover);
    }, py::arg("family"), py::arg("n"), py::arg("ell"), py::arg("spec"));

    m.def("hull", [](const std::string& f, int n, int ell, const std::string& spec) {
        return per_summand(parse_module(make_ctx(f, n, ell), spec), injective_hull);
    }, py::arg("family"), py::arg("n"), py::arg("ell"), py::arg("spec"));

    m.def("res", [](const std::string& f, int n, int ell, const std::string& spec) {
        return to_string(restrict_sum(parse_module(make_ctx(f, n, ell), spec)));
    }, py::arg("family"), py::arg("n"), py::arg("ell"), py::arg("spec"));

    m.def("ind", [](const std::string& f, int n, int ell, const std::string& spec) {
        return to_string(induce_sum(parse_module(make_ctx(f, n, ell), spec)));
    }, py::arg("family"), py::arg("n"), py::arg("ell"), py::arg("spec"));

    m.def("hom", [](const std::string& f, int n, int ell, const std::string& a, const std::string& b) {
        const AlgebraCtx ctx = make_ctx(f, n, ell);
        return dim(hom_dim(ctx, single(ctx, a), single(ctx, b)));
    }, py::arg("family"), py::arg("n"), py::arg("ell"), py::arg("a"), py::arg("b"), "None when the dimension is not determined");

    m.def("ext", [](const std::string& f, int n, int ell, const std::string& a, const std::string& b) {
        const AlgebraCtx ctx = make_ctx(f, n, ell);
        return dim(ext_dim(ctx, single(ctx, a), single(ctx, b)));
    }, py::arg("family"), py::arg("n"), py::arg("ell"), py::arg("a"), py::arg("b"), "None when the dimension is not determined");

    m.def("indecomposables", [](const std::string& f, int n, int ell) {
        std::vector<std::string> out;
        for (const Indec& x : enumerate_indecomposables(make_ctx(f, n, ell))) out.push_back(to_string(x));
        return out;
    }, py::arg("family"), py::arg("n"), py::arg("ell"));

    m.def("quiver_json", [](const std::string& f, int n, int ell, int k, bool show_tau) {
        const AlgebraCtx ctx = make_ctx(f, n, ell);
        if (!in_lambda0(ctx, k)) throw DomainError("label " + std::to_string(k) + " not in Lambda_0 for " + describe(ctx));
        return quiver_json(build_block_quiver(ctx, orbit_of(ctx, k)), show_tau);
    }, py::arg("family"), py::arg("n"), py::arg("ell"), py::arg("k"), py::arg("show_tau") = true);

    m.def("quiver_dot", [](const std::string& f, int n, int ell, int k, bool show_tau) {
        const AlgebraCtx ctx = make_ctx(f, n, ell);
        if (!in_lambda0(ctx, k)) throw DomainError("label " + std::to_string(k) + " not in Lambda_0 for " + describe(ctx));
        return quiver_dot(build_block_quiver(ctx, orbit_of(ctx, k)), show_tau);
    }, py::arg("family"), py::arg("n"), py::arg("ell"), py::arg("k"), py::arg("show_tau") = false);

    m.def("verify", [](int max_n, int max_ell, int threads) {
        if (max_n < 1 || max_ell < 2) throw DomainError("verify needs max_n >= 1 and max_ell >= 2");
        std::vector<CheckResult> rs;
        {
            py::gil_scoped_release release;
            rs = run_all_sweeps(SweepRange{1, max_n, 2, max_ell}, threads);
        }
        py::list out;
        for (const CheckResult& r : rs) {
            py::dict d;
            d["name"] = r.name;
            d["checks"] = r.checks;
            d["failures"] = r.failures;
            d["samples"] = r.samples;
            out.append(d);
        }
        return out;
    }, py::arg("max_n") = 12, py::arg("max_ell") = 6, py::arg("threads") = 0);
}
