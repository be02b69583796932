#include "gicreg/channel.hpp"
#include "gicreg/config_file.hpp"
#include "gicreg/frontier.hpp"
#include "gicreg/manifest.hpp"
#include "gicreg/optimizer.hpp"
#include "gicreg/schemes.hpp"
#include "gicreg/spectrum.hpp"
#include "gicreg/toeplitz.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace gicreg;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct ChannelFlags {
    std::optional<double> p1, p2, a12, a21;
    std::string config_path;
};

void add_channel_options(CLI::App* cmd, ChannelFlags& flags) {
    cmd->add_option("--config", flags.config_path, "key-value configuration file");
    cmd->add_option("--p1", flags.p1, "power of user 1 (linear)");
    cmd->add_option("--p2", flags.p2, "power of user 2 (linear)");
    cmd->add_option("--a12", flags.a12, "cross gain of user 2 at receiver 1");
    cmd->add_option("--a21", flags.a21, "cross gain of user 1 at receiver 2");
}

// flags override config file values
ChannelParams resolve_channel(const ChannelFlags& flags, const ConfigFile* cfg) {
    auto pick = [&](const std::optional<double>& flag, const char* key) -> std::optional<double> {
        if (flag) return flag;
        if (cfg) return cfg->get_double(key);
        return std::nullopt;
    };
    const auto p1 = pick(flags.p1, "p1");
    const auto p2 = pick(flags.p2, "p2");
    const auto a12 = pick(flags.a12, "a12");
    const auto a21 = pick(flags.a21, "a21");
    if (!p1 || !p2) throw CLI::ValidationError("channel", "p1 and p2 are required");
    return ChannelParams::validated(*p1, *p2, a12.value_or(0.0), a21.value_or(0.0));
}

int default_threads() {
    if (const char* env = std::getenv("GICREG_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // resolve to hardware concurrency downstream
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::runtime_error("invalid number list: " + text);
    }
    return out;
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

std::vector<std::string> names_for(const std::string& scheme, std::size_t dim) {
    if (auto id = scheme_from_string(scheme)) return scheme_param_names(*id, dim);
    return {};
}

struct RegionArgs {
    ChannelFlags channel;
    std::string scheme;
    std::string out_base;
    double step_unit = 1e-2;
    double step_filter = 2e-2;
    int cosine_terms = 1;
    std::vector<std::string> grid_overrides;
    std::vector<std::string> fixes;
    std::string strategy;  // "", "grid", "random"
    std::uint64_t budget = 200000;
    std::uint64_t seed = 1;
    int rounds = 3;
    std::string anchor;
    int threads = default_threads();
    int quad_points = 4096;
    bool adaptive = false;
    double quad_tol = 1e-10;
    bool hull = false;
    std::string weighting = "derivation";
};

void apply_axis_override(GridSpec& grid, const std::string& name, const GridAxis& axis) {
    for (auto& [axis_name, ax] : grid.axes) {
        if (axis_name == name) {
            ax = axis;
            return;
        }
    }
    throw std::runtime_error("unknown grid dimension '" + name + "'");
}

int run_region(const RegionArgs& args, const std::string& command_line) {
    const auto start = std::chrono::steady_clock::now();

    std::optional<ConfigFile> cfg;
    if (!args.channel.config_path.empty()) cfg = ConfigFile::parse_file(args.channel.config_path);
    const ChannelParams ch = resolve_channel(args.channel, cfg ? &*cfg : nullptr);

    const auto id = scheme_from_string(args.scheme);
    if (!id) throw CLI::ValidationError("--scheme", "unknown scheme " + args.scheme);

    SearchOptions opts;
    opts.threads = args.threads;
    opts.quad.method = args.adaptive ? QuadratureConfig::Method::Adaptive
                                     : QuadratureConfig::Method::FixedTrapezoid;
    opts.quad.points = args.quad_points;
    opts.quad.tol = args.quad_tol;
    opts.weighting = args.weighting == "printed" ? Theorem5Weighting::AsPrinted
                                                 : Theorem5Weighting::TimeSharing;

    GridSpec grid = default_grid(*id, args.step_unit, args.step_filter, args.cosine_terms);
    if (cfg) {
        for (const auto& [key, value] : cfg->entries()) {
            if (key.rfind("grid.", 0) == 0) {
                apply_axis_override(grid, key.substr(5), parse_grid_axis(value));
            }
        }
    }
    for (const std::string& text : args.grid_overrides) {
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw std::runtime_error("--grid expects name=lo:hi:step");
        apply_axis_override(grid, text.substr(0, eq), parse_grid_axis(text.substr(eq + 1)));
    }
    for (const std::string& text : args.fixes) {
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw std::runtime_error("--fix expects name=value");
        std::size_t used = 0;
        const std::string value = text.substr(eq + 1);
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::runtime_error("--fix expects name=value");
        apply_axis_override(grid, text.substr(0, eq), GridAxis{v, v, 0.0});
    }

    std::string strategy = args.strategy;
    if (strategy.empty()) {
        const bool high_dim = *id == SchemeId::HkSc || *id == SchemeId::HkSim ||
                              *id == SchemeId::HkCorollary;
        strategy = high_dim ? "random" : "grid";
    }

    Frontier frontier;
    SearchBudget budget{args.budget, args.seed, args.rounds};
    if (strategy == "grid") {
        frontier = grid_search(ch, *id, grid, opts);
    } else if (strategy == "random") {
        std::optional<std::vector<double>> anchor;
        if (!args.anchor.empty()) anchor = parse_double_list(args.anchor);
        frontier = random_refine_search(ch, *id, budget, opts, anchor ? &*anchor : nullptr);
    } else {
        throw CLI::ValidationError("--strategy", "must be 'grid' or 'random'");
    }
    if (frontier.empty()) throw std::runtime_error("search produced no feasible points");
    if (args.hull || *id == SchemeId::HkCorollary) frontier = convex_hull(frontier);

    const std::string csv_path = args.out_base + ".csv";
    const std::string json_path = args.out_base + ".points.json";
    const std::string manifest_path = args.out_base + ".manifest.json";
    std::vector<std::string> written;
    try {
        write_frontier_csv(frontier, csv_path);
        written.push_back(csv_path);
        write_frontier_json(frontier, json_path, names_for);
        written.push_back(json_path);

        RunManifest m;
        m.command = command_line;
        m.channel = ch;
        m.scheme = args.scheme;
        m.seed = args.seed;
        m.settings["strategy"] = strategy;
        m.settings["quadrature"] = args.adaptive ? "adaptive" : "trapezoid";
        m.settings["quadrature_points"] = std::to_string(args.quad_points);
        m.settings["t5_weighting"] = args.weighting;
        if (strategy == "grid") {
            for (const auto& [name, ax] : grid.axes) {
                std::ostringstream axis;
                axis << ax.lo << ":" << ax.hi << ":" << ax.step;
                m.settings["grid." + name] = axis.str();
            }
        } else {
            m.settings["budget"] = std::to_string(args.budget);
            m.settings["refinement_rounds"] = std::to_string(args.rounds);
            if (!args.anchor.empty()) m.settings["anchor"] = args.anchor;
        }
        m.wall_clock_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        m.outputs.emplace_back(csv_path, fnv1a64_file(csv_path));
        m.outputs.emplace_back(json_path, fnv1a64_file(json_path));
        write_manifest(m, manifest_path);
    } catch (...) {
        for (const std::string& f : written) std::filesystem::remove(f);
        throw;
    }

    std::cout << frontier.size() << " frontier points -> " << csv_path << "\n";
    return kExitOk;
}

int run_compare(const std::string& base_path, const std::string& other_path, double slack) {
    const Frontier base = read_frontier_csv(base_path);
    const Frontier other = read_frontier_csv(other_path);
    const DominanceReport rep = dominates(other, base, slack);
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", rep.max_violation);
    if (rep.dominates) {
        std::cout << "dominates: " << other_path << " covers " << base_path << " within slack "
                  << slack << " (max violation " << buf << ")\n";
        return kExitOk;
    }
    std::cout << "no dominance: " << other_path << " misses " << base_path << " by " << buf
              << " (slack " << slack << ")\n";
    return kExitFailure;
}

int run_corner(const std::string& in_path, double r2_min, bool hull) {
    Frontier f = read_frontier_csv(in_path);
    if (hull) f = convex_hull(f);
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", corner_query(f, r2_min));
    std::cout << buf << "\n";
    return kExitOk;
}

struct OracleArgs {
    ChannelFlags channel;
    std::string term = "cond";
    std::vector<int> n_list;
    std::string ar1, ma1, ar2, ma2;
    std::optional<double> power1, power2;
    std::string out_path;
    int quad_points = 4096;
    bool adaptive = true;
    double quad_tol = 1e-10;
};

int run_oracle(const OracleArgs& args, const std::string& command_line) {
    const auto start = std::chrono::steady_clock::now();
    std::optional<ConfigFile> cfg;
    if (!args.channel.config_path.empty()) cfg = ConfigFile::parse_file(args.channel.config_path);
    const ChannelParams ch = resolve_channel(args.channel, cfg ? &*cfg : nullptr);

    const auto term = oracle_term_from_string(args.term);
    if (!term) throw CLI::ValidationError("--term", "must be cond, interference or direct");
    if (args.n_list.empty()) throw CLI::ValidationError("--n-list", "at least one blocklength");

    const ArmaSpectrum s1 =
        ArmaSpectrum::make(parse_double_list(args.ar1), parse_double_list(args.ma1),
                           args.power1.value_or(ch.p1));
    const ArmaSpectrum s2 =
        ArmaSpectrum::make(parse_double_list(args.ar2), parse_double_list(args.ma2),
                           args.power2.value_or(ch.p2));

    QuadratureConfig quad;
    quad.method = args.adaptive ? QuadratureConfig::Method::Adaptive
                                : QuadratureConfig::Method::FixedTrapezoid;
    quad.points = args.quad_points;
    quad.tol = args.quad_tol;

    const auto reports = convergence_report(ch, s1, s2, *term, args.n_list, quad);

    std::printf("%-14s %8s %16s %16s %12s\n", "term", "n", "finite", "limit", "abs_error");
    for (const OracleReport& r : reports) {
        std::printf("%-14s %8d %16.10f %16.10f %12.3e\n", r.term.c_str(), r.n, r.finite_rate,
                    r.limit_rate, r.abs_error);
    }

    if (!args.out_path.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const OracleReport& r : reports) {
            arr.push_back({{"term", r.term},
                           {"n", r.n},
                           {"finite_rate", r.finite_rate},
                           {"limit_rate", r.limit_rate},
                           {"abs_error", r.abs_error}});
        }
        std::ofstream out(args.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + args.out_path);
        out << arr.dump(2) << '\n';

        RunManifest m;
        m.command = command_line;
        m.channel = ch;
        m.scheme = "oracle-" + args.term;
        m.settings["n_list"] = [&] {
            std::string s;
            for (int n : args.n_list) s += (s.empty() ? "" : ",") + std::to_string(n);
            return s;
        }();
        m.wall_clock_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        m.outputs.emplace_back(args.out_path, fnv1a64_file(args.out_path));
        write_manifest(m, args.out_path + ".manifest.json");
    }

    if (non_convergent(reports)) {
        std::cout << "non-convergent: error at n=" << reports.back().n
                  << " exceeds error at n=" << reports.front().n << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

int run_freq_response(const std::string& ar, const std::string& ma, int points,
                      const std::string& out_path) {
    const ArmaSpectrum s = ArmaSpectrum::make(parse_double_list(ar), parse_double_list(ma), 1.0);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << "omega,magnitude\n";
    char buf[96];
    for (int j = 0; j < points; ++j) {
        const double w = 2.0 * M_PI * j / points;
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", w, s.frequency_response_modulus(w));
        out << buf;
    }
    if (!out) throw std::runtime_error("failed writing " + out_path);
    std::cout << points << " samples -> " << out_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"achievable rate regions of the two-user Gaussian interference channel"};
    app.require_subcommand(1);
    const std::string command_line = join_args(argc, argv);

    RegionArgs region;
    CLI::App* region_cmd = app.add_subcommand(
        "region", "compute a named achievable region and export frontier CSV/JSON");
    add_channel_options(region_cmd, region.channel);
    region_cmd->add_option("--scheme", region.scheme, "sason|theorem2|arma|arma-split|hk-sc|hk-sim|hk-corollary|hk-baseline")
        ->required();
    region_cmd->add_option("--out", region.out_base, "output base path")->required();
    region_cmd->add_option("--step,--step-unit", region.step_unit, "grid step for [0,1] parameters");
    region_cmd->add_option("--step-filter", region.step_filter, "grid step for (-1,1) parameters");
    region_cmd->add_option("--cosine-terms", region.cosine_terms,
                           "cosine coefficients per slot (theorem2)");
    region_cmd->add_option("--grid", region.grid_overrides, "override axis: name=lo:hi:step");
    region_cmd->add_option("--fix", region.fixes, "pin one dimension: name=value");
    region_cmd->add_option("--strategy", region.strategy, "grid|random (default per scheme)");
    region_cmd->add_option("--budget", region.budget, "random search evaluation budget");
    region_cmd->add_option("--seed", region.seed, "random search seed");
    region_cmd->add_option("--rounds", region.rounds, "random search refinement rounds");
    region_cmd->add_option("--anchor", region.anchor, "comma list seeding the random search");
    region_cmd->add_option("--threads", region.threads, "worker threads (env GICREG_THREADS)");
    region_cmd->add_option("--points", region.quad_points, "fixed quadrature sample count");
    region_cmd->add_flag("--adaptive", region.adaptive, "adaptive quadrature");
    region_cmd->add_option("--tol", region.quad_tol, "adaptive quadrature tolerance");
    region_cmd->add_flag("--hull", region.hull, "export the convex hull (time sharing)");
    region_cmd->add_option("--t5-weighting", region.weighting,
                           "derivation|printed: weighting of the user-2 mode-1 bracket in the "
                           "simultaneous-decoding rates");

    std::string cmp_base, cmp_other;
    double cmp_slack = 0.0;
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "check whether one frontier dominates another");
    compare_cmd->add_option("--base", cmp_base, "frontier expected to be covered")->required();
    compare_cmd->add_option("--other", cmp_other, "frontier expected to cover")->required();
    compare_cmd->add_option("--slack", cmp_slack, "tolerance");

    std::string corner_in;
    double corner_r2min = 0.0;
    bool corner_hull = false;
    CLI::App* corner_cmd =
        app.add_subcommand("corner", "max r1 subject to r2 >= threshold on a frontier CSV");
    corner_cmd->add_option("--in", corner_in, "frontier CSV")->required();
    corner_cmd->add_option("--r2-min", corner_r2min, "r2 threshold")->required();
    corner_cmd->add_flag("--hull", corner_hull, "hull the frontier before querying");

    OracleArgs oracle;
    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "finite-blocklength Toeplitz log-det rates vs the spectral limits");
    add_channel_options(oracle_cmd, oracle.channel);
    oracle_cmd->add_option("--term", oracle.term, "cond|interference|direct");
    oracle_cmd->add_option("--n-list", oracle.n_list, "blocklengths, ascending")->required();
    oracle_cmd->add_option("--ar1", oracle.ar1, "user-1 AR coefficients, comma separated");
    oracle_cmd->add_option("--ma1", oracle.ma1, "user-1 MA coefficients");
    oracle_cmd->add_option("--ar2", oracle.ar2, "user-2 AR coefficients");
    oracle_cmd->add_option("--ma2", oracle.ma2, "user-2 MA coefficients");
    oracle_cmd->add_option("--power1", oracle.power1, "user-1 spectrum power (default p1)");
    oracle_cmd->add_option("--power2", oracle.power2, "user-2 spectrum power (default p2)");
    oracle_cmd->add_option("--out", oracle.out_path, "write the report as JSON");
    oracle_cmd->add_option("--points", oracle.quad_points, "fixed quadrature sample count");
    oracle_cmd->add_flag("--fixed", [&oracle](std::int64_t) { oracle.adaptive = false; },
                         "use the fixed trapezoid rule for the limit");

    std::string fr_ar, fr_ma, fr_out;
    int fr_points = 512;
    CLI::App* fr_cmd =
        app.add_subcommand("freq-response", "export the filter magnitude response as CSV");
    fr_cmd->add_option("--ar", fr_ar, "AR coefficients, comma separated");
    fr_cmd->add_option("--ma", fr_ma, "MA coefficients, comma separated");
    fr_cmd->add_option("--points", fr_points, "samples over [0,2pi)");
    fr_cmd->add_option("--out", fr_out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (region_cmd->parsed()) return run_region(region, command_line);
        if (compare_cmd->parsed()) return run_compare(cmp_base, cmp_other, cmp_slack);
        if (corner_cmd->parsed()) return run_corner(corner_in, corner_r2min, corner_hull);
        if (oracle_cmd->parsed()) return run_oracle(oracle, command_line);
        if (fr_cmd->parsed()) return run_freq_response(fr_ar, fr_ma, fr_points, fr_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
