#include "instmod/hilbert.hpp"
#include "instmod/index.hpp"
#include "instmod/monad.hpp"
#include "instmod/restriction.hpp"
#include "instmod/serialize.hpp"
#include "instmod/stable_maps.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace instmod;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j)
{
    switch (j.type()) {
        case json::value_t::object: {
            py::dict d;
            for (const auto& [key, value] : j.items())
                d[py::str(key)] = json_to_py(value);
            return d;
        }
        case json::value_t::array: {
            py::list l;
            for (const json& v : j)
                l.append(json_to_py(v));
            return l;
        }
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        default:
            return py::none();
    }
}

MonadConfig pack_config(const CMat& a1, const CMat& a2, const CMat& d, const CMat& b, const CMat& c)
{
    MonadConfig cfg;
    cfg.k = static_cast<int>(a1.rows());
    cfg.r = static_cast<int>(b.cols());
    cfg.a1 = a1;
    cfg.a2 = a2;
    cfg.d = d;
    cfg.b = b;
    cfg.c = c;
    cfg.validate();
    return cfg;
}

json monad_report(const MonadConfig& cfg, int samples, double tol, std::uint64_t seed)
{
    const double residual = integrability_residual(cfg);
    const auto points = sample_blowup_points(samples, seed);
    const ExactnessReport exact = exactness_check(cfg, points, 1e-8);
    double max_ba = 0.0;
    for (const auto& pt : exact.points)
        max_ba = std::max(max_ba, pt.ba_rel_residual);
    json report = {{"k", cfg.k},
                   {"r", cfg.r},
                   {"integrability_residual", residual},
                   {"points", points.size()},
                   {"max_ba_rel_residual", max_ba},
                   {"exact", exact.all_exact},
                   {"pass", residual <= tol && exact.all_exact && max_ba <= tol}};
    if (cfg.k >= 1 && cfg.r > 2 * cfg.k) {
        const double scale = std::max({cfg.b.norm(), cfg.c.norm(), 1e-300});
        if (cfg.a1.norm() <= 1e-8 * scale && cfg.a2.norm() <= 1e-8 * scale && cfg.d.norm() <= 1e-8 * scale) {
            const DimensionReport dim = m0_dimension_check(cfg);
            report["dimension"] = {{"measured", dim.measured}, {"expected", dim.expected}, {"match", dim.match}};
            report["pass"] = report["pass"].get<bool>() && dim.match;
        }
    }
    return report;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "algebraic and numerical verification kernel for instanton moduli over connected sums of CP^2";

    // index arithmetic
    m.def(
        "dirac_index",
        [](int q, std::int64_t k, int r, std::vector<std::int64_t> c, std::vector<std::int64_t> c1e) {
            if (c.empty())
                c.assign(static_cast<std::size_t>(q), 1);
            return dirac_index(IndexProblem(q, k, r, std::move(c1e), SpinCClass(std::move(c))));
        },
        py::arg("q"), py::arg("k"), py::arg("r") = 2, py::arg("c") = std::vector<std::int64_t>{},
        py::arg("c1e") = std::vector<std::int64_t>{},
        "Index of the coupled Dirac operator: k + c1E.(c1E+c)/2 + r(c.c-q)/8.");
    m.def("enumerate_spinc", [](int q) {
        std::vector<std::vector<std::int64_t>> out;
        for (const SpinCClass& c : enumerate_spinc(q))
            out.push_back(c.c);
        return out;
    });
    m.def("chosen_classes", [](int q) {
        std::vector<std::vector<std::int64_t>> out;
        for (const SpinCClass& c : chosen_classes(q))
            out.push_back(c.c);
        return out;
    });
    m.def(
        "coupled_line_index",
        [](std::vector<std::int64_t> c, int slot, int sign) {
            return coupled_line_index(SpinCClass(std::move(c)), slot, sign);
        },
        py::arg("c"), py::arg("slot"), py::arg("sign") = 1);
    m.def("intersection", &intersection);

    // graded-ring verifications
    m.def(
        "kernel_report",
        [](int q, int k, int max_degree) { return json_to_py(kernel_report_to_json(kernel_equals_ideal(q, k, max_degree))); },
        py::arg("q"), py::arg("k"), py::arg("max_degree") = 12,
        "Degreewise dim ker f* vs the relation ideal, plus exact vanishing of the relations.");
    m.def("relations_in_kernel", [](int q) { return verify_relations_in_kernel(q).all_zero; });
    m.def("identity_check", &identity_check);
    m.def(
        "hilbert_report",
        [](int q, int max_degree) { return json_to_py(hilbert_report_to_json(t43_check(q, max_degree))); },
        py::arg("q"), py::arg("max_degree") = 20);
    m.def(
        "surjectivity_report",
        [](int q, int m_max) { return json_to_py(surjectivity_report_to_json(surjectivity_check(q, m_max))); },
        py::arg("q"), py::arg("m_max") = 6);

    // monad numerics on numpy matrices
    m.def(
        "integrability_residual",
        [](const CMat& a1, const CMat& a2, const CMat& d, const CMat& b, const CMat& c) {
            return integrability_residual(pack_config(a1, a2, d, b, c));
        },
        py::arg("a1"), py::arg("a2"), py::arg("d"), py::arg("b"), py::arg("c"));
    m.def(
        "gauge_act",
        [](const CMat& g, const CMat& h, const CMat& a1, const CMat& a2, const CMat& d, const CMat& b,
           const CMat& c) {
            const MonadConfig out = gauge_act(GaugePair{g, h}, pack_config(a1, a2, d, b, c));
            return py::make_tuple(out.a1, out.a2, out.d, out.b, out.c);
        },
        py::arg("g"), py::arg("h"), py::arg("a1"), py::arg("a2"), py::arg("d"), py::arg("b"), py::arg("c"));
    m.def(
        "m0_config",
        [](const CMat& v1, const CMat& v2) {
            const MonadConfig cfg = m0_config(SubspacePair{v1, v2});
            return py::make_tuple(cfg.b, cfg.c);
        },
        py::arg("v1"), py::arg("v2"), "The configuration (0,0,0,b,c) of an orthogonal subspace pair.");
    m.def(
        "m0_subspaces",
        [](const CMat& b, const CMat& c, double tol) {
            MonadConfig cfg = MonadConfig::zero(static_cast<int>(b.rows()), static_cast<int>(b.cols()));
            cfg.b = b;
            cfg.c = c;
            const SubspacePair sp = m0_subspaces(cfg, tol);
            return py::make_tuple(sp.v1, sp.v2);
        },
        py::arg("b"), py::arg("c"), py::arg("tol") = 1e-8);
    m.def(
        "monad_maps",
        [](const CMat& b, const CMat& c, const Eigen::Vector3cd& x, const Eigen::Vector2cd& s) {
            MonadConfig cfg = MonadConfig::zero(static_cast<int>(b.rows()), static_cast<int>(b.cols()));
            cfg.b = b;
            cfg.c = c;
            BlowupPoint pt;
            pt.x = x;
            pt.s = s;
            const auto [ma, mb] = monad_maps(cfg, pt);
            return py::make_tuple(ma, mb);
        },
        py::arg("b"), py::arg("c"), py::arg("x"), py::arg("s"));
    m.def(
        "sample_blowup_points",
        [](int n, std::uint64_t seed) {
            py::list out;
            for (const BlowupPoint& pt : sample_blowup_points(n, seed))
                out.append(py::make_tuple(pt.x, pt.s));
            return out;
        },
        py::arg("n"), py::arg("seed") = RandomStream::kDefaultSeed);
    m.def(
        "m0_dimension_check",
        [](int k, int r, std::uint64_t seed) {
            const DimensionReport d = m0_dimension_check(k, r, seed);
            return json_to_py({{"k", d.k},
                               {"r", d.r},
                               {"measured", d.measured},
                               {"expected", d.expected},
                               {"match", d.match},
                               {"rank_constraint", d.rank_constraint},
                               {"rank_gauge", d.rank_gauge}});
        },
        py::arg("k"), py::arg("r"), py::arg("seed") = RandomStream::kDefaultSeed);
    m.def(
        "monad_report",
        [](int k, int r, int samples, double tol, std::uint64_t seed) {
            RandomStream rng(seed);
            return json_to_py(monad_report(m0_config(random_subspace_pair(k, r, rng)), samples, tol, seed));
        },
        py::arg("k") = 2, py::arg("r") = 6, py::arg("samples") = 100, py::arg("tol") = 1e-10,
        py::arg("seed") = RandomStream::kDefaultSeed,
        "Random M0 configuration: residuals, exactness at sampled points, dimension count.");

    m.attr("__version__") = "1.0.0";
}
