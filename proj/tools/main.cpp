// Command-line surface of the verification toolkit. Exit codes: 0 all checks
// pass, 1 at least one asserted check failed, 2 usage or configuration error,
// 3 a computation refused its requested size.
#include "vhh/arch.hpp"
#include "vhh/config.hpp"
#include "vhh/cutoffs.hpp"
#include "vhh/forest.hpp"
#include "vhh/geometry.hpp"
#include "vhh/renorm.hpp"
#include "vhh/report.hpp"
#include "vhh/sectors.hpp"
#include "vhh/suites.hpp"
#include "vhh/util.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

namespace {

using nlohmann::json;

vhh::RunConfig make_config(const std::string& file,
                           const std::vector<std::string>& overrides) {
    vhh::RunConfig cfg = vhh::load_config(file, overrides);
    cfg.validate();
    return cfg;
}

int run_dump_surface(const vhh::RunConfig&, int n) {
    std::cout << "k1,k2,kplus,kminus,e,t1,t2,t3\n";
    for (int ia = 0; ia < n; ++ia) {
        for (int ib = 0; ib < n; ++ib) {
            const vhh::ObliqueMomentum kq{-1.0 + 2.0 * ia / n, -1.0 + 2.0 * ib / n};
            const vhh::CartesianMomentum k = vhh::oblique_to_cart(kq);
            const auto t = vhh::three_factors(kq);
            std::cout << vhh::fmt17(k.k1) << ',' << vhh::fmt17(k.k2) << ','
                      << vhh::fmt17(kq.kplus) << ',' << vhh::fmt17(kq.kminus) << ','
                      << vhh::fmt17(vhh::band_e_oblique(kq)) << ','
                      << vhh::fmt17(t[0]) << ',' << vhh::fmt17(t[1]) << ','
                      << vhh::fmt17(t[2]) << '\n';
        }
    }
    return 0;
}

int run_sectors(int j) {
    std::cout << "s_a,s_b,class,l,r\n";
    for (const auto& s : vhh::enumerate_sectors(j)) {
        std::cout << s.sa << ',' << s.sb << ','
                  << vhh::to_string(vhh::classify_sector(j, s.sa, s.sb)) << ','
                  << s.depth_l() << ',' << vhh::fmt17(s.r2() / 2.0) << '\n';
    }
    return 0;
}

vhh::BoundReport run_suite(const std::string& name, const vhh::RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    if (name == "cutoffs") return vhh::cutoffs_suite(cfg);
    if (name == "propagator") return vhh::propagator_suite(cfg);
    if (name == "counting") return vhh::counting_suite(cfg, rng);
    if (name == "forest") return vhh::forest_suite(cfg, rng);
    if (name == "arch") return vhh::arch_suite(rng);
    if (name == "renorm") return vhh::renorm_suite(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

int run_check_bounds(const vhh::RunConfig& cfg, const std::string& suite) {
    std::vector<std::string> names;
    if (suite == "all")
        names = {"cutoffs", "propagator", "counting", "forest", "arch", "renorm"};
    else
        names = {suite};
    bool all_pass = true;
    for (const auto& name : names) {
        const auto start = std::chrono::steady_clock::now();
        const vhh::BoundReport rep = run_suite(name, cfg);
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        rep.write_csv(std::cout);
        std::ofstream out(cfg.out_dir + "/" + name + ".json");
        out << rep.to_json(cfg.hash(), ms);
        all_pass = all_pass && rep.pass();
    }
    return all_pass ? 0 : 1;
}

int run_expand_jungles(const vhh::RunConfig& cfg, int n, int layers) {
    std::mt19937_64 rng(cfg.seed);
    for (const auto& jungle : vhh::enumerate_jungles(n, layers)) {
        std::vector<double> w;
        for (size_t i = 0; i < jungle.layers.back().size(); ++i)
            w.push_back(static_cast<double>(rng() % 1000) / 999.0);
        json line;
        line["n"] = jungle.n;
        line["layers"] = json::array();
        for (const auto& layer : jungle.layers) {
            json jl = json::array();
            for (auto [a, b] : layer) jl.push_back({a, b});
            line["layers"].push_back(jl);
        }
        line["connected"] = jungle.connected();
        line["min_eigenvalue"] =
            vhh::min_eigenvalue(vhh::interpolation_matrix(jungle, w));
        std::cout << line.dump() << '\n';
    }
    return 0;
}

int run_expand_arches(const vhh::RunConfig&, const std::string& file) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open tree file: " + file);
    json spec = json::parse(in);
    vhh::DecoratedTree tree;
    tree.n = spec.at("n").get<int>();
    tree.y = spec.at("y").get<int>();
    tree.z = spec.at("z").get<int>();
    for (const auto& e : spec.at("edges"))
        tree.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    tree.extra_fields = spec.at("extra_fields").get<std::vector<int>>();

    for (const auto& sys : vhh::enumerate_arch_systems(tree)) {
        const vhh::Multigraph g = vhh::realize(tree, {&sys});
        json line;
        line["arches"] = json::array();
        for (const auto& a : sys.arches)
            line["arches"].push_back({{"f", {a.f.vertex, a.f.slot}},
                                      {"g", {a.g.vertex, a.g.slot}},
                                      {"start", a.start},
                                      {"arrive", a.arrive}});
        line["q"] = sys.flyover;
        line["weight"] = sys.weight;
        line["minimal"] = sys.minimal;
        const bool pi1 = vhh::is_1pi(g, tree.y, tree.z);
        const bool pi2 = pi1 && vhh::is_2pi(g, tree.y, tree.z);
        line["is_1pi"] = pi1;
        line["is_2pi"] = pi2;
        if (pi2 && vhh::one_vertex_irreducible(g, tree.y, tree.z)) {
            const vhh::Ring ring = vhh::find_ring(g, tree.y, tree.z, {});
            if (ring.found)
                line["ring"] = {{"path1", ring.path1},
                                {"path2", ring.path2},
                                {"r_ring", ring.r_ring}};
            else
                line["ring"] = {{"certificate", ring.certificate}};
        } else {
            line["ring"] = nullptr;
        }
        std::cout << line.dump() << '\n';
    }
    return 0;
}

int run_tadpole_sweep(const vhh::RunConfig& cfg) {
    const vhh::GevreyCutoff chi(cfg.gevrey_h);
    const int j_max = vhh::compute_j_max(cfg.temperature, cfg.gamma);
    std::cout << "j,value,j_rate,ratio\n";
    double first_rate = 0.0;
    for (int j = 0; j <= j_max; ++j) {
        const auto t =
            vhh::tadpole_scale(j, cfg.gamma, cfg.temperature, chi, cfg.resolution);
        const double rate =
            (j == 0) ? t.abs_value
                     : t.abs_value / (j * vhh::powi(cfg.gamma, -j));
        if (j == 1) first_rate = rate;
        const double ratio = (j >= 1 && first_rate > 0.0) ? rate / first_rate : 1.0;
        std::cout << j << ',' << vhh::fmt17(t.abs_value) << ','
                  << vhh::fmt17(rate) << ',' << vhh::fmt17(ratio) << '\n';
    }
    return 0;
}

int run_sunshine(const vhh::RunConfig& cfg, const std::string& point) {
    vhh::ObliqueMomentum q{1.0, 1.0};
    if (point == "fermipoint")
        q = {1.0, 0.5};
    else if (point != "vanhove")
        throw std::invalid_argument("point must be vanhove or fermipoint");
    std::vector<double> t_list = cfg.temperature_list;
    if (t_list.empty()) t_list = {cfg.temperature};
    const auto rows =
        vhh::derivative_sweep(t_list, cfg.sunshine_resolution, cfg.lambda, q);
    const double slope = rows.size() >= 2 ? vhh::sweep_fit(rows).slope_d2 : 0.0;
    std::cout << "T,abs_sigma,d1,d2_k0,d2_spatial,slope_fit\n";
    for (const auto& r : rows) {
        std::cout << vhh::fmt17(r.T) << ',' << vhh::fmt17(r.abs_sigma) << ','
                  << vhh::fmt17(r.d1) << ',' << vhh::fmt17(r.d2_k0) << ','
                  << vhh::fmt17(r.d2_spatial) << ',' << vhh::fmt17(slope) << '\n';
    }
    return 0;
}

int run_report_merge(const std::vector<std::string>& files) {
    std::vector<std::string> bodies;
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) throw std::invalid_argument("cannot open report: " + f);
        bodies.emplace_back(std::istreambuf_iterator<char>(in),
                            std::istreambuf_iterator<char>());
    }
    std::cout << vhh::merge_reports(bodies) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification toolkit for the van Hove lattice model"};
    app.require_subcommand(1);

    std::string config_file;
    std::vector<std::string> overrides;
    app.add_option("--config", config_file, "key=value configuration file");
    app.add_option("--set", overrides, "override as key=value (repeatable)");

    auto* dump = app.add_subcommand("dump-surface", "band and factor grid as CSV");
    int dump_n = 48;
    dump->add_option("--n", dump_n, "grid points per axis");

    auto* sectors = app.add_subcommand("sectors", "sector table at one scale");
    int sector_j = 4;
    sectors->add_option("--j", sector_j, "scale index")->required();

    auto* check = app.add_subcommand("check", "run check suites");
    auto* bounds = check->add_subcommand("bounds", "bound-verification suites");
    std::string suite = "all";
    bounds->add_option("--suite", suite,
                       "cutoffs|propagator|counting|forest|arch|renorm|all");

    auto* expand = app.add_subcommand("expand", "enumerate expansion objects");
    auto* jungles = expand->add_subcommand("jungles", "layered forests as JSON lines");
    int jungle_n = 4, jungle_layers = 2;
    jungles->add_option("--n", jungle_n, "vertices");
    jungles->add_option("--layers", jungle_layers, "scale layers");
    auto* arches = expand->add_subcommand("arches", "arch systems over a tree");
    std::string tree_file;
    arches->add_option("--tree", tree_file, "JSON tree description")->required();

    auto* tadpole = app.add_subcommand("tadpole", "tadpole amplitudes");
    auto* sweep = tadpole->add_subcommand("sweep", "per-scale sweep as CSV");
    double opt_gamma = 0.0, opt_T = 0.0;
    sweep->add_option("--gamma", opt_gamma, "scale ratio");
    sweep->add_option("--T", opt_T, "temperature");

    auto* selfenergy = app.add_subcommand("selfenergy", "two-loop self-energy");
    auto* sunshine = selfenergy->add_subcommand("sunshine", "temperature sweep CSV");
    std::string point = "vanhove";
    sunshine->add_option("--point", point, "vanhove|fermipoint");
    std::string t_list_opt;
    sunshine->add_option("--T-list", t_list_opt, "comma-separated temperatures");

    auto* report = app.add_subcommand("report", "report plumbing");
    auto* merge = report->add_subcommand("merge", "merge JSON suite reports");
    std::vector<std::string> merge_files;
    merge->add_option("files", merge_files, "report files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (opt_gamma > 0.0) overrides.push_back("gamma=" + vhh::fmt17(opt_gamma));
        if (opt_T > 0.0) overrides.push_back("temperature=" + vhh::fmt17(opt_T));
        if (!t_list_opt.empty()) overrides.push_back("temperature_list=" + t_list_opt);
        const vhh::RunConfig cfg = make_config(config_file, overrides);

        if (dump->parsed()) return run_dump_surface(cfg, dump_n);
        if (sectors->parsed()) return run_sectors(sector_j);
        if (bounds->parsed()) return run_check_bounds(cfg, suite);
        if (jungles->parsed()) return run_expand_jungles(cfg, jungle_n, jungle_layers);
        if (arches->parsed()) return run_expand_arches(cfg, tree_file);
        if (sweep->parsed()) return run_tadpole_sweep(cfg);
        if (sunshine->parsed()) return run_sunshine(cfg, point);
        if (merge->parsed()) return run_report_merge(merge_files);
        std::cerr << "no actionable subcommand\n";
        return 2;
    } catch (const vhh::NumericRefusal& e) {
        std::cerr << "refused: " << e.what() << " (required " << e.required()
                  << ")\n";
        return 3;
    } catch (const vhh::StructuralError& e) {
        std::cerr << "structural error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
