#include "instmod/serialize.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace instmod {

using nlohmann::json;

json poly_to_json(const GradedPolynomial& p)
{
    json gens = json::array();
    for (const GeneratorSpec& g : p.ring()->gens())
        gens.push_back({{"name", print_name(g.name)}, {"deg", g.degree}});
    json terms = json::array();
    for (const auto& [mono, coef] : p.terms()) {
        json exps = json::array();
        for (Exp e : mono.exps)
            exps.push_back(e);
        terms.push_back({{"exps", std::move(exps)}, {"coef", coef.str()}});
    }
    return {{"gens", std::move(gens)}, {"terms", std::move(terms)}};
}

GradedPolynomial poly_from_json(const json& j)
{
    std::vector<GeneratorSpec> gens;
    for (const json& g : j.at("gens"))
        gens.push_back({parse_name(g.at("name").get<std::string>()), g.at("deg").get<int>()});
    const Ring ring = make_ring(std::move(gens));
    GradedPolynomial p = GradedPolynomial::zero(ring);
    for (const json& t : j.at("terms")) {
        Monomial mono;
        for (const json& e : t.at("exps"))
            mono.exps.push_back(e.get<Exp>());
        if (mono.exps.size() != ring->size())
            throw std::invalid_argument("poly_from_json: exponent vector length mismatch");
        p.add_term(mono, Int(t.at("coef").get<std::string>()));
    }
    return p;
}

json kernel_report_to_json(const KernelReport& report)
{
    json degrees = json::array();
    for (const KernelDegreeReport& d : report.degrees)
        degrees.push_back({{"d", d.d},
                           {"dim_kernel", d.dim_kernel},
                           {"dim_ideal", d.dim_ideal},
                           {"equal", d.equal}});
    return {{"q", report.q},
            {"k", report.k},
            {"degrees", std::move(degrees)},
            {"all_equal", report.all_equal},
            {"relations_in_kernel", report.relations_in_kernel}};
}

json hilbert_report_to_json(const HilbertReport& report)
{
    json per_degree = json::array();
    for (const HilbertDegreeReport& d : report.per_degree)
        per_degree.push_back({{"d", d.d},
                              {"lhs", d.lhs.str()},
                              {"rhs", d.rhs.str()},
                              {"equal", d.equal}});
    return {{"q", report.q},
            {"D", report.max_degree},
            {"per_degree", std::move(per_degree)},
            {"all_equal", report.all_equal}};
}

json surjectivity_report_to_json(const SurjectivityReport& report)
{
    json certs = json::array();
    for (const PreimageCertificate& c : report.certificates)
        certs.push_back({{"target", print_name(c.target)}, {"preimage", c.preimage.str()}});
    json coker = json::array();
    for (std::size_t m = 0; m < report.cokernel_trivial.size(); ++m)
        coker.push_back({{"m", m + 1}, {"trivial", static_cast<bool>(report.cokernel_trivial[m])}});
    return {{"q", report.q},
            {"M", report.m_max},
            {"surjective", report.surjective},
            {"cokernel", std::move(coker)},
            {"certificates", std::move(certs)}};
}

namespace {

json cmat_to_json(const CMat& m)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

CMat cmat_from_json(const json& j, Eigen::Index rows, Eigen::Index cols, const char* field)
{
    CMat m = CMat::Zero(rows, cols);
    if (j.size() != static_cast<std::size_t>(rows))
        throw std::invalid_argument(std::string("monad spec: bad row count in ") + field);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json& row = j.at(static_cast<std::size_t>(i));
        if (row.size() != static_cast<std::size_t>(cols))
            throw std::invalid_argument(std::string("monad spec: bad column count in ") + field);
        for (Eigen::Index c = 0; c < cols; ++c) {
            const json& e = row.at(static_cast<std::size_t>(c));
            m(i, c) = std::complex<double>(e.at(0).get<double>(), e.at(1).get<double>());
        }
    }
    return m;
}

}  // namespace

json monad_config_to_json(const MonadConfig& cfg)
{
    return {{"k", cfg.k},       {"r", cfg.r},
            {"a1", cmat_to_json(cfg.a1)}, {"a2", cmat_to_json(cfg.a2)},
            {"d", cmat_to_json(cfg.d)},   {"b", cmat_to_json(cfg.b)},
            {"c", cmat_to_json(cfg.c)}};
}

MonadConfig monad_config_from_json(const json& j)
{
    const int k = j.at("k").get<int>();
    const int r = j.at("r").get<int>();
    if (j.contains("mode")) {
        if (j.at("mode").get<std::string>() != "random_m0")
            throw std::invalid_argument("monad spec: unknown mode");
        RandomStream rng(j.value("seed", RandomStream::kDefaultSeed));
        return m0_config(random_subspace_pair(k, r, rng));
    }
    MonadConfig cfg = MonadConfig::zero(k, r);
    cfg.a1 = cmat_from_json(j.at("a1"), k, k, "a1");
    cfg.a2 = cmat_from_json(j.at("a2"), k, k, "a2");
    cfg.d = cmat_from_json(j.at("d"), k, k, "d");
    cfg.b = cmat_from_json(j.at("b"), k, r, "b");
    cfg.c = cmat_from_json(j.at("c"), r, k, "c");
    cfg.validate();
    return cfg;
}

}  // namespace instmod
