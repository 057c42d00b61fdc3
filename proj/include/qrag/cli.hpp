#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrag/experiment.hpp"
#include "qrag/generators.hpp"
#include "qrag/instance.hpp"

namespace qrag {

/// Exit codes shared by every subcommand.
///   0  success
///   1  usage or configuration error
///   2  instance file missing or malformed
///   3  a trial failed while running
namespace cli_exit {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int bad_instance = 2;
inline constexpr int trial_failure = 3;
}  // namespace cli_exit

namespace detail {

/// Runs `emit` against --out FILE when given, else against `fallback`.
inline int with_output(const std::string& path, std::ostream& fallback, std::ostream& err,
                       const std::function<void(std::ostream&)>& emit) {
    if (path.empty()) {
        emit(fallback);
        return cli_exit::ok;
    }
    std::ofstream file(path);
    if (!file) {
        err << "cannot open output file: " << path << "\n";
        return cli_exit::usage;
    }
    emit(file);
    if (!file.good()) {
        err << "error while writing: " << path << "\n";
        return cli_exit::usage;
    }
    return cli_exit::ok;
}

struct PlayerArgs {
    std::string player = "quantum";
    std::string backend = "modeled";
    double epsilon = 0.5;
    double budget_factor = 10.0;
    std::string tracker = "faithful";
    std::size_t constant_index = 1;
};

struct RunArgs {
    std::string instance_path;
    std::string generator;  // random | hard, when generating inline
    std::size_t d = 2, m = 2, k = 2;
    int case_number = 1;
    std::size_t z = 0, u = 0;  // 0 = defaults (word m/2, bit k)
    std::size_t favored = 1;
    double bias = 4.0;
    double noise = 0.0;
    PlayerArgs player;
    std::size_t buffer_size = 0;    // 0 = use the instance's string length k
    std::size_t demand_period = 0;  // 0 = use k
    bool allow_r_gt_k = false;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::string out_path;
};

struct SweepArgs {
    std::string axis = "k";  // m | k
    std::vector<std::size_t> values;
    std::string generator = "hard";
    std::size_t d = 2, m = 0, k = 0;
    int case_number = 2;
    std::size_t favored = 1;
    double bias = 4.0;
    double noise = 0.0;
    PlayerArgs player;
    std::size_t buffer_size = 0;
    std::size_t demand_period = 0;
    bool allow_r_gt_k = false;
    std::size_t trials = 10;
    std::uint64_t seed = 0;
    std::string out_path;
};

inline void add_player_flags(CLI::App* cmd, PlayerArgs& args) {
    cmd->add_option("--player", args.player, "quantum | classical | oracle | constant")
        ->required();
    cmd->add_option("--backend", args.backend,
                    "comparison backend for the quantum player: modeled | exact");
    cmd->add_option("--epsilon", args.epsilon,
                    "per-search error rate of the modeled backend");
    cmd->add_option("--budget-factor", args.budget_factor,
                    "query budget multiplier of the exact backend");
    cmd->add_option("--tracker", args.tracker, "running-maximum rule: faithful | strict");
    cmd->add_option("--constant-index", args.constant_index,
                    "answer used by the constant player");
}

inline BackendConfig make_backend(const PlayerArgs& args) {
    BackendConfig backend;
    if (args.backend == "exact")
        backend.kind = BackendKind::exact_amplitude;
    else if (args.backend == "modeled")
        backend.kind = BackendKind::modeled;
    else
        throw std::invalid_argument("unknown backend: " + args.backend);
    backend.epsilon = args.epsilon;
    backend.budget_factor = args.budget_factor;
    backend.validate();
    return backend;
}

inline TrackerMode make_tracker(const PlayerArgs& args) {
    if (args.tracker == "faithful") return TrackerMode::faithful;
    if (args.tracker == "strict") return TrackerMode::strict;
    throw std::invalid_argument("unknown tracker: " + args.tracker);
}

inline PlayerConfig make_player_config(const PlayerArgs& args) {
    PlayerConfig config;
    config.backend = make_backend(args);
    config.tracker = make_tracker(args);
    return config;
}

inline Instance make_hard(std::size_t m, std::size_t k, int case_number, std::size_t z,
                          std::size_t u) {
    HardInstanceSpec spec;
    spec.m = m;
    spec.k = k;
    spec.variant = case_number;
    if (spec.variant == 2) {
        spec.z = z != 0 ? z : m / 2;
        spec.u = u != 0 ? u : k;
    }
    return gen_hard(spec);
}

/// Fills the setup columns shared by run and sweep rows.
inline RunSetup make_setup(const std::string& generator, const Instance& inst,
                           const PlayerArgs& player_args, const GameConfig& game) {
    RunSetup setup;
    setup.generator = generator;
    setup.d = inst.d();
    setup.m = inst.m();
    setup.k = inst.k();
    setup.player = player_args.player;
    if (player_args.player == "quantum") {
        setup.backend = player_args.backend;
        if (player_args.backend == "modeled") setup.epsilon = player_args.epsilon;
        setup.tracker = player_args.tracker;
    } else if (player_args.player == "classical") {
        setup.tracker = player_args.tracker;
    }
    setup.buffer_size = game.buffer_size;
    setup.demand_period = game.demand_period;
    return setup;
}

inline GameConfig make_game(std::size_t buffer_size, std::size_t demand_period,
                            bool allow_r_gt_k, std::size_t k) {
    GameConfig game;
    game.buffer_size = buffer_size != 0 ? buffer_size : k;
    game.demand_period = demand_period != 0 ? demand_period : k;
    game.allow_period_over_buffer = allow_r_gt_k;
    game.validate();
    return game;
}

inline int execute_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
    std::unique_ptr<Instance> inst;
    RunSetup setup;

    if (!args.instance_path.empty()) {
        if (!args.generator.empty()) {
            err << "--instance and --generator are mutually exclusive\n";
            return cli_exit::usage;
        }
        std::ifstream file(args.instance_path);
        if (!file) {
            err << "cannot open instance file: " << args.instance_path << "\n";
            return cli_exit::bad_instance;
        }
        try {
            inst = std::make_unique<Instance>(parse_instance(file));
        } catch (const ParseError& e) {
            err << args.instance_path << ": " << e.what() << "\n";
            return cli_exit::bad_instance;
        }
        setup.generator = "file";
    } else if (args.generator == "random") {
        RandomSpec spec;
        spec.d = args.d;
        spec.m = args.m;
        spec.k = args.k;
        spec.seed = args.seed;
        spec.favored = args.favored;
        spec.bias = args.bias;
        spec.noise = args.noise;
        inst = std::make_unique<Instance>(gen_random(spec));
        setup.instance_seed = spec.seed;
        setup.generator = "random";
    } else if (args.generator == "hard") {
        inst = std::make_unique<Instance>(
            make_hard(args.m, args.k, args.case_number, args.z, args.u));
        setup.generator = "hard";
    } else if (args.generator.empty()) {
        err << "either --instance FILE or --generator random|hard is required\n";
        return cli_exit::usage;
    } else {
        err << "unknown generator: " << args.generator << "\n";
        return cli_exit::usage;
    }

    const GameConfig game =
        make_game(args.buffer_size, args.demand_period, args.allow_r_gt_k, inst->k());
    const PlayerKind kind = parse_player_kind(args.player.player);
    const PlayerConfig config = make_player_config(args.player);
    const std::string generator_label = setup.generator;
    setup = make_setup(generator_label, *inst, args.player, game);
    if (generator_label == "random") setup.instance_seed = args.seed;

    std::vector<TrialResult> results;
    try {
        results = run_trials(kind, *inst, game, config, args.seed, args.trials,
                             args.player.constant_index);
    } catch (const std::exception& e) {
        err << "trial failed: " << e.what() << "\n";
        return cli_exit::trial_failure;
    }

    const RunSummary summary = summarize(results);
    return with_output(args.out_path, out, err, [&](std::ostream& sink) {
        sink << run_csv_header() << "\n";
        for (const TrialResult& t : results) sink << run_csv_trial_row(setup, t) << "\n";
        sink << run_csv_summary_row(setup, summary, args.seed) << "\n";
    });
}

inline int execute_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    if (args.axis != "m" && args.axis != "k") {
        err << "unknown axis: " << args.axis << "\n";
        return cli_exit::usage;
    }
    if (args.axis == "k" && args.m == 0) {
        err << "--m is required when sweeping k\n";
        return cli_exit::usage;
    }
    if (args.axis == "m" && args.k == 0) {
        err << "--k is required when sweeping m\n";
        return cli_exit::usage;
    }
    if (args.generator != "hard" && args.generator != "random") {
        err << "unknown generator: " << args.generator << "\n";
        return cli_exit::usage;
    }

    const PlayerKind kind = parse_player_kind(args.player.player);
    const PlayerConfig config = make_player_config(args.player);

    std::vector<std::string> rows;
    for (std::size_t i = 0; i < args.values.size(); ++i) {
        const std::size_t value = args.values[i];
        const std::size_t m = args.axis == "m" ? value : args.m;
        const std::size_t k = args.axis == "k" ? value : args.k;
        const std::uint64_t point_seed = derive_seed(args.seed, i);

        Instance inst = [&] {
            if (args.generator == "hard")
                return make_hard(m, k, args.case_number, 0, 0);
            RandomSpec spec;
            spec.d = args.d;
            spec.m = m;
            spec.k = k;
            spec.seed = point_seed;
            spec.favored = args.favored;
            spec.bias = args.bias;
            spec.noise = args.noise;
            return gen_random(spec);
        }();

        const GameConfig game =
            make_game(args.buffer_size, args.demand_period, args.allow_r_gt_k, inst.k());

        std::vector<TrialResult> results;
        try {
            results = run_trials(kind, inst, game, config, point_seed, args.trials,
                                 args.player.constant_index);
        } catch (const std::exception& e) {
            err << "trial failed at " << args.axis << "=" << value << ": " << e.what()
                << "\n";
            return cli_exit::trial_failure;
        }
        rows.push_back(
            sweep_csv_row(std::to_string(value), args.player.player, summarize(results)));
    }

    return with_output(args.out_path, out, err, [&](std::ostream& sink) {
        sink << sweep_csv_header() << "\n";
        for (const std::string& row : rows) sink << row << "\n";
    });
}

}  // namespace detail

/// Parses `args` (program name excluded) and runs the requested subcommand,
/// writing results to `out` (or --out FILE) and diagnostics to `err`.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"request-answer games on most-frequent-keyword instances", "qrag"};
    app.require_subcommand(1);

    // --- gen ----------------------------------------------------------------
    CLI::App* gen = app.add_subcommand("gen", "write an instance file");
    gen->require_subcommand(1);

    RandomSpec gen_random_spec;
    std::string gen_random_out;
    CLI::App* gen_random_cmd = gen->add_subcommand("random", "skewed random instance");
    gen_random_cmd->add_option("--d", gen_random_spec.d, "number of keywords")
        ->required();
    gen_random_cmd->add_option("--m", gen_random_spec.m, "number of words")->required();
    gen_random_cmd->add_option("--k", gen_random_spec.k, "string length")->required();
    gen_random_cmd->add_option("--seed", gen_random_spec.seed, "generator seed");
    gen_random_cmd->add_option("--favored", gen_random_spec.favored,
                               "keyword index drawn with extra weight");
    gen_random_cmd->add_option("--bias", gen_random_spec.bias,
                               "extra draw weight of the favored keyword");
    gen_random_cmd->add_option("--noise", gen_random_spec.noise,
                               "fraction of words matching no keyword");
    gen_random_cmd->add_option("--out", gen_random_out, "output file");

    std::size_t gen_hard_m = 2, gen_hard_k = 2, gen_hard_z = 0, gen_hard_u = 0;
    int gen_hard_case = 1;
    std::string gen_hard_out;
    CLI::App* gen_hard_cmd =
        gen->add_subcommand("hard", "two-keyword adversarial instance");
    gen_hard_cmd->add_option("--m", gen_hard_m, "number of words")->required();
    gen_hard_cmd->add_option("--k", gen_hard_k, "string length")->required();
    gen_hard_cmd->add_option("--case", gen_hard_case, "1 | 2")->required();
    gen_hard_cmd->add_option("--z", gen_hard_z,
                             "case 2: index of the flipped word (default m/2)");
    gen_hard_cmd->add_option("--u", gen_hard_u,
                             "case 2: position of the flipped bit (default k)");
    gen_hard_cmd->add_option("--out", gen_hard_out, "output file");

    // --- run ----------------------------------------------------------------
    detail::RunArgs run_args;
    CLI::App* run_cmd = app.add_subcommand("run", "play seeded games, emit a CSV");
    run_cmd->add_option("--instance", run_args.instance_path, "instance file to load");
    run_cmd->add_option("--generator", run_args.generator,
                        "generate the instance inline: random | hard");
    run_cmd->add_option("--d", run_args.d, "random: number of keywords");
    run_cmd->add_option("--m", run_args.m, "number of words");
    run_cmd->add_option("--k", run_args.k, "string length");
    run_cmd->add_option("--case", run_args.case_number, "hard: 1 | 2");
    run_cmd->add_option("--z", run_args.z, "hard case 2: flipped word index");
    run_cmd->add_option("--u", run_args.u, "hard case 2: flipped bit position");
    run_cmd->add_option("--favored", run_args.favored, "random: favored keyword");
    run_cmd->add_option("--bias", run_args.bias, "random: favored keyword weight");
    run_cmd->add_option("--noise", run_args.noise, "random: unmatched-word fraction");
    detail::add_player_flags(run_cmd, run_args.player);
    run_cmd->add_option("--K", run_args.buffer_size, "buffer capacity (default k)");
    run_cmd->add_option("--R", run_args.demand_period, "demand period (default k)");
    run_cmd->add_flag("--allow-r-gt-k", run_args.allow_r_gt_k,
                      "permit a demand period larger than the buffer");
    run_cmd->add_option("--trials", run_args.trials, "number of seeded games");
    run_cmd->add_option("--seed", run_args.seed, "base seed (trial i adds i)");
    run_cmd->add_option("--out", run_args.out_path, "output CSV file");

    // --- sweep ---------------------------------------------------------------
    detail::SweepArgs sweep_args;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "vary one dimension, emit summary rows");
    sweep_cmd->add_option("--axis", sweep_args.axis, "swept dimension: m | k");
    sweep_cmd->add_option("--values", sweep_args.values, "axis values")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--generator", sweep_args.generator, "hard | random");
    sweep_cmd->add_option("--d", sweep_args.d, "random: number of keywords");
    sweep_cmd->add_option("--m", sweep_args.m, "number of words (fixed when axis=k)");
    sweep_cmd->add_option("--k", sweep_args.k, "string length (fixed when axis=m)");
    sweep_cmd->add_option("--case", sweep_args.case_number, "hard: 1 | 2");
    sweep_cmd->add_option("--favored", sweep_args.favored, "random: favored keyword");
    sweep_cmd->add_option("--bias", sweep_args.bias, "random: favored keyword weight");
    sweep_cmd->add_option("--noise", sweep_args.noise, "random: unmatched fraction");
    detail::add_player_flags(sweep_cmd, sweep_args.player);
    sweep_cmd->add_option("--K", sweep_args.buffer_size, "buffer capacity (default k)");
    sweep_cmd->add_option("--R", sweep_args.demand_period, "demand period (default k)");
    sweep_cmd->add_flag("--allow-r-gt-k", sweep_args.allow_r_gt_k,
                        "permit a demand period larger than the buffer");
    sweep_cmd->add_option("--trials", sweep_args.trials, "games per axis value");
    sweep_cmd->add_option("--seed", sweep_args.seed, "base seed");
    sweep_cmd->add_option("--out", sweep_args.out_path, "output CSV file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? cli_exit::ok : cli_exit::usage;
    }

    try {
        if (gen_random_cmd->parsed())
            return detail::with_output(gen_random_out, out, err, [&](std::ostream& sink) {
                serialize(gen_random(gen_random_spec), sink);
            });
        if (gen_hard_cmd->parsed())
            return detail::with_output(gen_hard_out, out, err, [&](std::ostream& sink) {
                serialize(detail::make_hard(gen_hard_m, gen_hard_k, gen_hard_case,
                                            gen_hard_z, gen_hard_u),
                          sink);
            });
        if (run_cmd->parsed()) return detail::execute_run(run_args, out, err);
        if (sweep_cmd->parsed()) return detail::execute_sweep(sweep_args, out, err);
    } catch (const GenerationError& e) {
        err << e.what() << "\n";
        return cli_exit::usage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return cli_exit::usage;
    }
    err << "no subcommand\n";
    return cli_exit::usage;
}

}  // namespace qrag
