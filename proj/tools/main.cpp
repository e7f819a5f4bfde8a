// movest: moving-estimator models for nonstationary return series.
//
// Subcommands map onto the library's evaluation and data operations:
//   returns       price CSV -> log-return CSV
//   fit-static    static EPD MLE (fixed kappa or full profile search)
//   fit-adaptive  walk-forward adaptive EPD evaluation
//   sweep         log-likelihood vs kappa curve (static / adaptive modes)
//   garch         GARCH(1,1) baseline fit + walk-forward evaluation
//   simulate      synthetic EPD / GARCH / regime-switching series
//   normalize     CDF transform to near-uniform values + KS statistic
//   compare       ranked model comparison on one series
//
// Every output embeds the fully resolved run configuration so results can be
// reproduced byte for byte from the file alone.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "movest/data_io.hpp"
#include "movest/errors.hpp"
#include "movest/eval.hpp"
#include "movest/garch.hpp"

namespace {

using nlohmann::json;

struct CommonIo {
    std::string input;
    bool prices = false;
    std::string column = "close";
    std::string output;
    std::string format = "json";
    unsigned threads = 0;
};

unsigned default_threads() {
    if (const char* env = std::getenv("MOVEST_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 0;  // resolved to hardware concurrency downstream
}

void add_io_options(CLI::App* cmd, CommonIo& io, bool needs_input = true) {
    auto* in = cmd->add_option("--input", io.input, "input CSV file");
    if (needs_input) in->required();
    cmd->add_flag("--prices", io.prices,
                  "treat the input as a price series and take log-returns");
    cmd->add_option("--column", io.column,
                    "price column (name or 0-based index) when --prices is set");
    cmd->add_option("--output", io.output, "output file (default: stdout)");
    cmd->add_option("--format", io.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--threads", io.threads,
                    "worker threads (default: MOVEST_THREADS or all cores)");
}

movest::ColumnSelector parse_column(const std::string& text) {
    if (!text.empty() &&
        std::all_of(text.begin(), text.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        return static_cast<std::size_t>(std::stoul(text));
    }
    return text;
}

movest::ReturnSeries load_input(const CommonIo& io) {
    if (io.prices) {
        const auto prices = movest::load_price_csv(io.input, parse_column(io.column));
        return movest::log_returns(prices, std::filesystem::path(io.input).stem().string());
    }
    return movest::load_return_csv(io.input);
}

void emit(const CommonIo& io, const std::string& text) {
    if (io.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(io.output);
    if (!out) {
        throw movest::io_error("cannot write output file: " + io.output);
    }
    out << text;
}

std::string csv_preamble(const json& config) {
    return "# config: " + config.dump() + "\n";
}

json io_config(const CommonIo& io, const char* command) {
    json j;
    j["command"] = command;
    if (!io.input.empty()) j["input"] = io.input;
    j["prices"] = io.prices;
    if (io.prices) j["column"] = io.column;
    j["format"] = io.format;
    j["threads"] = io.threads;
    return j;
}

json report_with_config(const json& config, const std::string& report_json) {
    json j;
    j["config"] = config;
    j["report"] = json::parse(report_json);
    return j;
}

std::vector<double> parse_grid(const std::string& text) {
    double start, stop, step;
    char c1, c2;
    std::istringstream is(text);
    if (!(is >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
        !(step > 0.0) || !(stop >= start)) {
        throw std::invalid_argument("expected kappa grid start:stop:step, got '" +
                                    text + "'");
    }
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double k = start + i * step;
        if (k > stop + 1e-12) break;
        grid.push_back(std::min(k, stop));
    }
    return grid;
}

std::vector<movest::RegimeBlock> parse_schedule(const std::string& text) {
    std::vector<movest::RegimeBlock> blocks;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("expected schedule length:sigma, got '" +
                                        item + "'");
        }
        blocks.push_back({std::stoul(item.substr(0, colon)),
                          std::stod(item.substr(colon + 1))});
    }
    return blocks;
}

// ---- subcommand runners ----

int run_returns(const CommonIo& io) {
    const auto prices = movest::load_price_csv(io.input, parse_column(io.column));
    const auto returns = movest::log_returns(
        prices, std::filesystem::path(io.input).stem().string());
    json config = io_config(io, "returns");
    config["column"] = io.column;
    config["n"] = returns.values.size();
    if (io.output.empty()) {
        std::ostringstream out;
        out.precision(17);
        out << csv_preamble(config) << "x\n";
        for (double v : returns.values) out << v << "\n";
        std::cout << out.str();
    } else {
        movest::write_return_csv(returns, io.output, csv_preamble(config));
    }
    return 0;
}

struct AdaptiveFlags {
    double kappa = 1.0;
    movest::RateConfig rates;
    bool adapt_mu = false;
    movest::AdaptiveInit init;
    std::string trajectory_path;
};

void add_adaptive_options(CLI::App* cmd, AdaptiveFlags& flags) {
    cmd->add_option("--eta", flags.rates.eta, "scale retention rate in (0,1]");
    cmd->add_option("--nu", flags.rates.nu, "location retention rate in (0,1]");
    cmd->add_flag("--adapt-mu", flags.adapt_mu,
                  "adapt the location with an EMA instead of pinning it at --mu1");
    cmd->add_option("--sigma1", flags.init.sigma_1, "initial scale");
    cmd->add_option("--mu1", flags.init.mu_1, "initial location");
    cmd->add_flag("--debias", flags.rates.debias,
                  "exactly normalized weights instead of the plain EMA");
    cmd->add_option("--eps-eta", flags.rates.epsilon_eta,
                    "gradient learning rate for eta (0 disables)");
}

json adaptive_config(const AdaptiveFlags& f) {
    json j;
    j["kappa"] = f.kappa;
    j["eta"] = f.rates.eta;
    j["nu"] = f.rates.nu;
    j["adapt_mu"] = f.adapt_mu;
    j["sigma1"] = f.init.sigma_1;
    j["mu1"] = f.init.mu_1;
    j["debias"] = f.rates.debias;
    j["eps_eta"] = f.rates.epsilon_eta;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"moving-estimator EPD models and GARCH baseline for return series"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from an INI/TOML file");

    CommonIo io;
    io.threads = default_threads();

    // returns
    auto* cmd_returns = app.add_subcommand("returns", "convert prices to log-returns");
    cmd_returns->add_option("--input", io.input, "price CSV")->required();
    cmd_returns->add_option("--column", io.column, "price column (name or index)");
    cmd_returns->add_option("--output", io.output, "output CSV (default: stdout)");

    // fit-static
    auto* cmd_fit_static = app.add_subcommand("fit-static", "static EPD MLE");
    std::optional<double> fs_kappa;
    std::string fs_range;
    std::optional<double> fs_holdout;
    add_io_options(cmd_fit_static, io);
    cmd_fit_static->add_option("--kappa", fs_kappa, "fixed shape parameter");
    cmd_fit_static->add_option("--kappa-range", fs_range,
                               "lo:hi profile search range (default 0.3:4)");
    cmd_fit_static->add_option(
        "--holdout", fs_holdout,
        "train fraction in (0,1): fit on the head, score the tail "
        "(default: in-sample)");

    // fit-adaptive
    auto* cmd_fit_adaptive =
        app.add_subcommand("fit-adaptive", "walk-forward adaptive EPD evaluation");
    AdaptiveFlags fa;
    add_io_options(cmd_fit_adaptive, io);
    cmd_fit_adaptive->add_option("--kappa", fa.kappa, "shape parameter")->required();
    add_adaptive_options(cmd_fit_adaptive, fa);
    cmd_fit_adaptive->add_option("--dump-trajectory", fa.trajectory_path,
                                 "write per-step t,sigma,mu CSV here");

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "log-likelihood vs kappa curve");
    AdaptiveFlags sw;
    std::string sweep_mode = "adaptive";
    std::string sweep_grid = "0.5:2.5:0.05";
    add_io_options(cmd_sweep, io);
    cmd_sweep->add_option("--mode", sweep_mode, "static | adaptive | adaptive-opt-eta")
        ->check(CLI::IsMember({"static", "adaptive", "adaptive-opt-eta"}));
    cmd_sweep->add_option("--kappa", sweep_grid, "grid as start:stop:step");
    add_adaptive_options(cmd_sweep, sw);

    // garch
    auto* cmd_garch = app.add_subcommand("garch", "GARCH(1,1) baseline fit");
    add_io_options(cmd_garch, io);

    // simulate
    auto* cmd_sim = app.add_subcommand("simulate", "generate synthetic series");
    std::string sim_model = "epd";
    double sim_kappa = 1.0, sim_mu = 0.0, sim_sigma = 1.0;
    double sim_omega = 1e-6, sim_alpha = 0.08, sim_beta = 0.90, sim_gmu = 0.0;
    std::string sim_schedule = "500:0.01,500:0.03";
    std::size_t sim_n = 1000;
    std::uint64_t sim_seed = 1;
    std::string sim_latent;
    cmd_sim->add_option("--model", sim_model, "epd | garch | regime")
        ->check(CLI::IsMember({"epd", "garch", "regime"}));
    cmd_sim->add_option("--kappa", sim_kappa, "EPD shape");
    cmd_sim->add_option("--mu", sim_mu, "EPD location");
    cmd_sim->add_option("--sigma", sim_sigma, "EPD scale");
    cmd_sim->add_option("--omega", sim_omega, "GARCH omega");
    cmd_sim->add_option("--alpha", sim_alpha, "GARCH alpha");
    cmd_sim->add_option("--beta", sim_beta, "GARCH beta");
    cmd_sim->add_option("--garch-mu", sim_gmu, "GARCH mean");
    cmd_sim->add_option("--schedule", sim_schedule,
                        "regime blocks as length:sigma,length:sigma,...");
    cmd_sim->add_option("--n", sim_n, "number of observations");
    cmd_sim->add_option("--seed", sim_seed, "RNG seed (default 1)");
    cmd_sim->add_option("--output", io.output, "output CSV (default: stdout)");
    cmd_sim->add_option("--latent-output", sim_latent,
                        "write the latent sigma / variance trajectory here");

    // normalize
    auto* cmd_norm =
        app.add_subcommand("normalize", "CDF-transform the series to (0,1) values");
    std::string norm_model = "adaptive-epd:kappa=1.15,eta=0.94,nu=0.997,adapt-mu=1";
    add_io_options(cmd_norm, io);
    cmd_norm->add_option("--model", norm_model, "model spec, e.g. "
                         "'adaptive-epd:kappa=1,eta=0.94' or 'garch'");

    // compare
    auto* cmd_compare = app.add_subcommand("compare", "rank models by mean log-likelihood");
    std::string compare_models_arg =
        "static-epd:kappa=2;adaptive-epd:kappa=1,eta=0.94;garch";
    add_io_options(cmd_compare, io);
    cmd_compare->add_option("--models", compare_models_arg,
                            "semicolon-separated model specs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_returns->parsed()) return run_returns(io);

        if (cmd_fit_static->parsed()) {
            const auto returns = load_input(io);
            movest::EvalReport report;
            json config = io_config(io, "fit-static");
            if (fs_holdout) {
                report = movest::eval_static_holdout(returns, fs_kappa, *fs_holdout);
                config["holdout"] = *fs_holdout;
                if (fs_kappa) config["kappa"] = *fs_kappa;
            } else if (fs_kappa) {
                report = movest::eval_static(returns, *fs_kappa);
                config["kappa"] = *fs_kappa;
            } else {
                movest::KappaRange range;
                if (!fs_range.empty()) {
                    const auto colon = fs_range.find(':');
                    if (colon == std::string::npos) {
                        throw std::invalid_argument("--kappa-range expects lo:hi");
                    }
                    range.lo = std::stod(fs_range.substr(0, colon));
                    range.hi = std::stod(fs_range.substr(colon + 1));
                }
                report = movest::eval_static_full(returns, range);
                config["kappa_range"] = {range.lo, range.hi};
            }
            config["n"] = report.n;
            emit(io, report_with_config(config, movest::to_json(report)).dump(2) + "\n");
            return 0;
        }

        if (cmd_fit_adaptive->parsed()) {
            const auto returns = load_input(io);
            const bool want_traj = !fa.trajectory_path.empty();
            const auto report = movest::eval_adaptive(returns, fa.kappa, fa.rates,
                                                      fa.adapt_mu, fa.init, want_traj);
            json config = io_config(io, "fit-adaptive");
            config.update(adaptive_config(fa));
            config["n"] = report.n;
            if (want_traj) {
                std::ofstream traj(fa.trajectory_path);
                if (!traj) {
                    throw movest::io_error("cannot write trajectory file: " +
                                           fa.trajectory_path);
                }
                traj << csv_preamble(config) << movest::trajectory_csv(report);
                config["trajectory_output"] = fa.trajectory_path;
            }
            movest::EvalReport slim = report;
            slim.trajectories.reset();  // the CSV carries the trajectories
            emit(io, report_with_config(config, movest::to_json(slim)).dump(2) + "\n");
            return 0;
        }

        if (cmd_sweep->parsed()) {
            const auto returns = load_input(io);
            const auto grid = parse_grid(sweep_grid);
            movest::SweepMode mode = movest::SweepMode::adaptive_fixed_rate;
            if (sweep_mode == "static") mode = movest::SweepMode::static_fit;
            if (sweep_mode == "adaptive-opt-eta") {
                mode = movest::SweepMode::adaptive_optimized_rate;
            }
            const auto curve = movest::sweep_kappa(returns, grid, mode, sw.rates,
                                                   sw.adapt_mu, sw.init, io.threads);
            json config = io_config(io, "sweep");
            config.update(adaptive_config(sw));
            config.erase("kappa");
            config["mode"] = sweep_mode;
            config["grid"] = sweep_grid;
            config["n"] = returns.values.size();
            if (io.format == "csv") {
                emit(io, csv_preamble(config) + movest::sweep_csv(curve));
            } else {
                emit(io, report_with_config(config, movest::to_json(curve)).dump(2) + "\n");
            }
            return 0;
        }

        if (cmd_garch->parsed()) {
            const auto returns = load_input(io);
            const auto report = movest::eval_garch(returns);
            json config = io_config(io, "garch");
            config["n"] = report.n;
            emit(io, report_with_config(config, movest::to_json(report)).dump(2) + "\n");
            return 0;
        }

        if (cmd_sim->parsed()) {
            movest::ReturnSeries series;
            std::vector<double> latent;
            json config;
            config["command"] = "simulate";
            config["model"] = sim_model;
            config["n"] = sim_n;
            config["seed"] = sim_seed;
            if (sim_model == "epd") {
                series = movest::gen_epd_series(
                    movest::EpdParams(sim_kappa, sim_mu, sim_sigma), sim_n, sim_seed);
                config["kappa"] = sim_kappa;
                config["mu"] = sim_mu;
                config["sigma"] = sim_sigma;
            } else if (sim_model == "garch") {
                auto sim = movest::gen_garch_series(
                    movest::GarchParams(sim_omega, sim_alpha, sim_beta, sim_gmu),
                    sim_n, sim_seed);
                series = std::move(sim.returns);
                latent = std::move(sim.latent_variance);
                config["omega"] = sim_omega;
                config["alpha"] = sim_alpha;
                config["beta"] = sim_beta;
                config["garch_mu"] = sim_gmu;
            } else {
                const auto blocks = parse_schedule(sim_schedule);
                auto sim = movest::gen_regime_switching(sim_kappa, blocks, sim_seed);
                series = std::move(sim.returns);
                latent = std::move(sim.latent_sigma);
                config["kappa"] = sim_kappa;
                config["schedule"] = sim_schedule;
            }
            if (io.output.empty()) {
                std::ostringstream out;
                out.precision(17);
                out << csv_preamble(config) << "x\n";
                for (double v : series.values) out << v << "\n";
                std::cout << out.str();
            } else {
                movest::write_return_csv(series, io.output, csv_preamble(config));
            }
            if (!sim_latent.empty() && !latent.empty()) {
                std::ofstream out(sim_latent);
                if (!out) {
                    throw movest::io_error("cannot write latent file: " + sim_latent);
                }
                out.precision(17);
                out << csv_preamble(config)
                    << (sim_model == "garch" ? "variance\n" : "sigma\n");
                for (double v : latent) out << v << "\n";
            }
            return 0;
        }

        if (cmd_norm->parsed()) {
            const auto returns = load_input(io);
            const auto spec = movest::ModelSpec::parse(norm_model);
            const auto y = movest::cdf_normalize(returns, spec);
            const double ks = movest::ks_statistic(y);
            json config = io_config(io, "normalize");
            config["model"] = spec.id();
            config["n"] = y.size();
            if (io.format == "csv" || !io.output.empty()) {
                std::ostringstream out;
                out.precision(17);
                out << csv_preamble(config) << "y\n";
                for (double v : y) out << v << "\n";
                emit(io, out.str());
            }
            json summary;
            summary["config"] = config;
            summary["ks_statistic"] = ks;
            summary["n"] = y.size();
            std::cout << summary.dump(2) << "\n";
            return 0;
        }

        if (cmd_compare->parsed()) {
            const auto returns = load_input(io);
            std::vector<movest::ModelSpec> specs;
            std::istringstream is(compare_models_arg);
            std::string item;
            while (std::getline(is, item, ';')) {
                if (!item.empty()) specs.push_back(movest::ModelSpec::parse(item));
            }
            const auto entries = movest::compare_models(returns, specs, io.threads);
            json config = io_config(io, "compare");
            config["models"] = compare_models_arg;
            config["n"] = returns.values.size();
            if (io.format == "csv") {
                emit(io, csv_preamble(config) + movest::comparison_csv(entries));
            } else {
                json j;
                j["config"] = config;
                j["ranking"] = json::parse(movest::to_json(entries));
                emit(io, j.dump(2) + "\n");
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
