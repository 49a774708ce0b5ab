// Batch verification front end: every check is a subcommand with a
// machine-readable JSON report (or --format table for humans).
// Exit codes: 0 all checks pass, 1 a check failed, 2 malformed arguments.

#include "instmod/hilbert.hpp"
#include "instmod/index.hpp"
#include "instmod/monad.hpp"
#include "instmod/restriction.hpp"
#include "instmod/serialize.hpp"
#include "instmod/stable_maps.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

using namespace instmod;
using nlohmann::json;

namespace {

struct Options {
    int q = 1;
    long long k = 1;
    int r = 2;
    std::vector<std::int64_t> c;
    std::vector<std::int64_t> c1e;
    int max_degree = 12;
    int m_max = 6;
    int samples = 100;
    double tol = 1e-10;
    std::uint64_t seed = RandomStream::kDefaultSeed;
    std::string spec_path;
    std::string format = "json";
};

void emit(const json& report, const Options& opt)
{
    if (opt.format == "table") {
        // flat rendering: scalar fields first, then array-of-object rows
        for (const auto& [key, value] : report.items())
            if (!value.is_array() && !value.is_object())
                std::cout << key << " = " << value.dump() << "\n";
        for (const auto& [key, value] : report.items()) {
            if (!value.is_array())
                continue;
            std::cout << key << ":\n";
            for (const json& row : value) {
                std::cout << "  ";
                if (row.is_object()) {
                    bool first = true;
                    for (const auto& [k2, v2] : row.items()) {
                        std::cout << (first ? "" : "  ") << k2 << "=" << v2.dump();
                        first = false;
                    }
                } else {
                    std::cout << row.dump();
                }
                std::cout << "\n";
            }
        }
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

json spinc_report(int q)
{
    const auto classes = enumerate_spinc(q);
    json list = json::array();
    for (const SpinCClass& c : classes)
        list.push_back(c.c);
    return {{"q", q}, {"count", classes.size()}, {"classes", std::move(list)}};
}

std::pair<json, bool> run_index(const Options& opt)
{
    std::vector<std::int64_t> c = opt.c;
    if (c.empty())
        c.assign(static_cast<std::size_t>(opt.q), 1);
    std::vector<std::int64_t> c1e = opt.c1e;
    if (c1e.empty())
        c1e.assign(static_cast<std::size_t>(opt.q), 0);
    const IndexProblem problem(opt.q, opt.k, opt.r, c1e, SpinCClass(c));
    return {{{"index", dirac_index(problem)}}, true};
}

std::pair<json, bool> run_kernel(const Options& opt)
{
    const KernelReport report = kernel_equals_ideal(opt.q, static_cast<int>(opt.k), opt.max_degree);
    return {kernel_report_to_json(report), report.all_equal && report.relations_in_kernel};
}

std::pair<json, bool> run_hilbert(const Options& opt)
{
    const HilbertReport report = t43_check(opt.q, opt.max_degree);
    return {hilbert_report_to_json(report), report.all_equal};
}

std::pair<json, bool> run_surjectivity(const Options& opt)
{
    const SurjectivityReport report = surjectivity_check(opt.q, opt.m_max);
    return {surjectivity_report_to_json(report), report.surjective};
}

std::pair<json, bool> run_identity()
{
    const bool holds = identity_check();
    return {{{"holds", holds}, {"degree", 10}}, holds};
}

std::pair<json, bool> run_monad(const Options& opt)
{
    MonadConfig cfg;
    if (!opt.spec_path.empty()) {
        std::ifstream in(opt.spec_path);
        if (!in)
            throw CLI::ValidationError("--spec", "cannot open " + opt.spec_path);
        json spec;
        in >> spec;
        cfg = monad_config_from_json(spec);
    } else {
        RandomStream rng(opt.seed);
        cfg = m0_config(random_subspace_pair(static_cast<int>(opt.k), opt.r, rng));
    }

    const double residual = integrability_residual(cfg);
    const auto points = sample_blowup_points(opt.samples, opt.seed);
    const ExactnessReport exact = exactness_check(cfg, points, 1e-8);
    double max_ba = 0.0;
    for (const auto& pt : exact.points)
        max_ba = std::max(max_ba, pt.ba_rel_residual);

    json report = {{"k", cfg.k},
                   {"r", cfg.r},
                   {"integrability_residual", residual},
                   {"points", points.size()},
                   {"max_ba_rel_residual", max_ba},
                   {"exact", exact.all_exact}};
    bool pass = residual <= opt.tol && exact.all_exact && max_ba <= opt.tol;

    const double scale = std::max({cfg.b.norm(), cfg.c.norm(), 1e-300});
    const bool m0_shape = cfg.a1.norm() <= 1e-8 * scale && cfg.a2.norm() <= 1e-8 * scale &&
                          cfg.d.norm() <= 1e-8 * scale;
    if (m0_shape && cfg.k >= 1 && cfg.r > 2 * cfg.k) {
        const DimensionReport dim = m0_dimension_check(cfg);
        report["dimension"] = {{"measured", dim.measured},
                               {"expected", dim.expected},
                               {"match", dim.match},
                               {"rank_constraint", dim.rank_constraint},
                               {"rank_gauge", dim.rank_gauge}};
        pass = pass && dim.match;
    }
    return {std::move(report), pass};
}

std::pair<json, bool> run_all(const Options& opt)
{
    json checks = json::array();
    bool pass = true;
    auto add = [&](const std::string& name, bool ok, json detail) {
        checks.push_back({{"name", name}, {"pass", ok}, {"detail", std::move(detail)}});
        pass = pass && ok;
    };

    {  // charge equals index on CP^2; rank independence on X_q
        bool ok = true;
        for (std::int64_t k = 1; k <= 10 && ok; ++k)
            for (int r = 2; r <= 20 && ok; ++r)
                for (std::int64_t sign : {1, -1})
                    ok = ok && dirac_index(IndexProblem(1, k, r, {0}, SpinCClass({sign}))) == k;
        for (const SpinCClass& c : enumerate_spinc(opt.q)) {
            const std::int64_t base = dirac_index(IndexProblem(opt.q, 1, 2, {}, c));
            for (int r = 3; r <= 20; ++r)
                ok = ok && dirac_index(IndexProblem(opt.q, 1, r, {}, c)) == base;
        }
        add("index", ok, {{"q", opt.q}});
    }
    {
        const auto classes = enumerate_spinc(opt.q);
        bool ok = classes.size() == (std::size_t(1) << opt.q);
        for (const SpinCClass& c : classes)
            ok = ok && intersection(c.c, c.c) == opt.q;
        add("spinc", ok, {{"count", classes.size()}});
    }
    for (int k : {1, 2}) {
        Options sub = opt;
        sub.k = k;
        auto [detail, ok] = run_kernel(sub);
        add("kernel_k" + std::to_string(k), ok, std::move(detail));
    }
    {
        auto [detail, ok] = run_identity();
        add("identity", ok, std::move(detail));
    }
    {
        auto [detail, ok] = run_hilbert(opt);
        add("hilbert", ok, std::move(detail));
    }
    {
        auto [detail, ok] = run_surjectivity(opt);
        add("surjectivity", ok, std::move(detail));
    }
    {
        Options sub = opt;
        sub.spec_path.clear();
        if (sub.k < 1 || sub.r <= 2 * sub.k) {
            sub.k = 2;
            sub.r = 6;
        }
        auto [detail, ok] = run_monad(sub);
        add("monad", ok, std::move(detail));
    }
    return {{{"pass", pass}, {"checks", std::move(checks)}}, pass};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"algebraic and numerical verification suite for instanton moduli over connected sums of CP^2"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_degree = false) {
        cmd->add_option("--format", opt.format, "json|table")->check(CLI::IsMember({"json", "table"}));
        if (with_degree)
            cmd->add_option("--max-degree", opt.max_degree, "even degree bound D")->check(CLI::PositiveNumber);
        return cmd;
    };

    CLI::App* index_cmd = add_common(app.add_subcommand("index", "coupled Dirac index"));
    index_cmd->add_option("--q", opt.q, "number of CP^2 summands")->required();
    index_cmd->add_option("--k", opt.k, "instanton charge");
    index_cmd->add_option("--r", opt.r, "bundle rank");
    index_cmd->add_option("--c", opt.c, "Spin^c class entries (comma list)")->delimiter(',');
    index_cmd->add_option("--c1e", opt.c1e, "c1(E) entries (comma list)")->delimiter(',');

    CLI::App* spinc_cmd = add_common(app.add_subcommand("spinc", "enumerate Spin^c structures with c.c = q"));
    spinc_cmd->add_option("--q", opt.q)->required();

    CLI::App* kernel_cmd = add_common(app.add_subcommand("kernel", "kernel of f* vs the relation ideal"), true);
    kernel_cmd->add_option("--q", opt.q)->required();
    kernel_cmd->add_option("--k", opt.k, "charge (1 or 2)")->check(CLI::Range(1, 2));

    CLI::App* hilbert_cmd = add_common(app.add_subcommand("hilbert", "graded-rank cross-check of the charge-2 ring"), true);
    hilbert_cmd->add_option("--q", opt.q)->required();

    CLI::App* surj_cmd = add_common(app.add_subcommand("surjectivity", "stable homology surjectivity with certificates"));
    surj_cmd->add_option("--q", opt.q)->required();
    surj_cmd->add_option("--m-max", opt.m_max, "generator degree bound M")->check(CLI::PositiveNumber);

    CLI::App* identity_cmd = add_common(app.add_subcommand("identity", "exact check of the relation syzygy identity"));
    (void)identity_cmd;

    CLI::App* monad_cmd = add_common(app.add_subcommand("monad", "monad equations, exactness and dimension"));
    monad_cmd->add_option("--spec", opt.spec_path, "JSON configuration file");
    monad_cmd->add_option("--k", opt.k, "charge for random_m0 mode");
    monad_cmd->add_option("--r", opt.r, "rank for random_m0 mode");
    monad_cmd->add_option("--samples", opt.samples, "number of sampled points")->check(CLI::PositiveNumber);
    monad_cmd->add_option("--tol", opt.tol, "acceptance tolerance");
    monad_cmd->add_option("--seed", opt.seed, "RNG seed");

    CLI::App* all_cmd = add_common(app.add_subcommand("all", "run every verification"), true);
    all_cmd->add_option("--q", opt.q)->required();
    all_cmd->add_option("--k", opt.k);
    all_cmd->add_option("--r", opt.r);
    all_cmd->add_option("--m-max", opt.m_max)->check(CLI::PositiveNumber);
    all_cmd->add_option("--samples", opt.samples)->check(CLI::PositiveNumber);
    all_cmd->add_option("--tol", opt.tol);
    all_cmd->add_option("--seed", opt.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::pair<json, bool> result;
        if (app.got_subcommand(index_cmd))
            result = run_index(opt);
        else if (app.got_subcommand(spinc_cmd))
            result = {spinc_report(opt.q), true};
        else if (app.got_subcommand(kernel_cmd))
            result = run_kernel(opt);
        else if (app.got_subcommand(hilbert_cmd))
            result = run_hilbert(opt);
        else if (app.got_subcommand(surj_cmd))
            result = run_surjectivity(opt);
        else if (app.got_subcommand(identity_cmd))
            result = run_identity();
        else if (app.got_subcommand(monad_cmd))
            result = run_monad(opt);
        else
            result = run_all(opt);
        emit(result.first, opt);
        return result.second ? 0 : 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
