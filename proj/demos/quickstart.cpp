// Plays one adversarial instance with each player and prints what it cost.
// Build tree: cmake --build build --target demo-quickstart && ./build/demos/demo-quickstart

#include <iostream>

#include "qrag/qrag.hpp"

int main() {
    using namespace qrag;

    HardInstanceSpec spec;
    spec.m = 64;
    spec.k = 4096;
    spec.variant = 2;
    spec.z = spec.m / 2;
    spec.u = spec.k;
    const Instance inst = gen_hard(spec);

    GameConfig game;
    game.buffer_size = inst.k();
    game.demand_period = inst.k();

    std::cout << "instance: d=" << inst.d() << " m=" << inst.m() << " k=" << inst.k()
              << " optimum=" << offline_optimum(inst) << "\n";

    for (const PlayerKind kind :
         {PlayerKind::oracle, PlayerKind::classical, PlayerKind::quantum}) {
        PlayerConfig config;
        config.backend = BackendConfig::modeled_with(0.5);
        const TrialResult t = run_single_trial(kind, inst, game, config, 42, 0);
        std::cout << to_string(kind) << ": cost=" << t.report.cost
                  << " ratio=" << t.report.ratio.to_decimal6()
                  << " wrong=" << t.report.wrong_significant
                  << " queries=" << t.report.ledger.buffer_queries()
                  << " answer=" << t.report.final_answer
                  << (t.report.final_correct ? " (correct)" : " (incorrect)") << "\n";
    }
    return 0;
}
