#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrag/engine.hpp"
#include "qrag/util.hpp"

namespace qrag {

namespace detail {

inline std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace detail

/// Everything about a run that stays constant across its trials. String
/// fields that do not apply (backend of a classical player, tracker of a
/// pass-only player) stay empty and produce empty CSV cells.
struct RunSetup {
    std::string generator;  // random | hard | file
    std::size_t d = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    std::optional<std::uint64_t> instance_seed;
    std::string player;  // quantum | classical | oracle | constant
    std::string backend;
    std::optional<double> epsilon;
    std::string tracker;
    std::size_t buffer_size = 0;
    std::size_t demand_period = 0;
};

struct TrialResult {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    CostReport report;
};

struct RunSummary {
    std::size_t trials = 0;
    double mean_cost = 0;
    double mean_ratio = 0;
    double mean_wrong = 0;
    double mean_rounds = 0;
    double mean_queries = 0;
    double mean_loads = 0;
    double mean_passes = 0;
    std::uint64_t wrong_min = 0;
    std::uint64_t wrong_max = 0;
    double correct_rate = 0;  // fraction of trials whose final answer was optimal
};

inline RunSummary summarize(const std::vector<TrialResult>& results) {
    if (results.empty()) throw std::invalid_argument("summarize: no trials");
    RunSummary s;
    s.trials = results.size();
    s.wrong_min = results.front().report.wrong_significant;
    s.wrong_max = s.wrong_min;
    std::uint64_t correct = 0;
    for (const TrialResult& t : results) {
        const CostReport& r = t.report;
        s.mean_cost += static_cast<double>(r.cost);
        s.mean_ratio += r.ratio.to_double();
        s.mean_wrong += static_cast<double>(r.wrong_significant);
        s.mean_rounds += static_cast<double>(r.total_rounds);
        s.mean_queries += static_cast<double>(r.ledger.buffer_queries());
        s.mean_loads += static_cast<double>(r.ledger.loads());
        s.mean_passes += static_cast<double>(r.ledger.passes());
        s.wrong_min = std::min(s.wrong_min, r.wrong_significant);
        s.wrong_max = std::max(s.wrong_max, r.wrong_significant);
        if (r.final_correct) ++correct;
    }
    const double n = static_cast<double>(s.trials);
    s.mean_cost /= n;
    s.mean_ratio /= n;
    s.mean_wrong /= n;
    s.mean_rounds /= n;
    s.mean_queries /= n;
    s.mean_loads /= n;
    s.mean_passes /= n;
    s.correct_rate = static_cast<double>(correct) / n;
    return s;
}

inline std::string run_csv_header() {
    return "row,generator,d,m,k,instance_seed,player,backend,epsilon,tracker,K,R,"
           "trial,seed,cost,opt,ratio,wrong,wrong_min,wrong_max,rounds,queries,"
           "loads,passes,answer,optimum,correct";
}

namespace detail {

inline void append_setup(std::ostringstream& row, const RunSetup& s) {
    row << s.generator << ',' << s.d << ',' << s.m << ',' << s.k << ',';
    if (s.instance_seed) row << *s.instance_seed;
    row << ',' << s.player << ',' << s.backend << ',';
    if (s.epsilon) row << fixed6(*s.epsilon);
    row << ',' << s.tracker << ',' << s.buffer_size << ',' << s.demand_period;
}

}  // namespace detail

inline std::string run_csv_trial_row(const RunSetup& setup, const TrialResult& t) {
    const CostReport& r = t.report;
    std::ostringstream row;
    row << "trial,";
    detail::append_setup(row, setup);
    row << ',' << t.trial << ',' << t.seed << ',' << r.cost << ',' << r.opt_cost << ','
        << r.ratio.to_decimal6() << ',' << r.wrong_significant << ','
        << r.wrong_significant << ',' << r.wrong_significant << ',' << r.total_rounds
        << ',' << r.ledger.buffer_queries() << ',' << r.ledger.loads() << ','
        << r.ledger.passes() << ',' << r.final_answer << ',' << r.optimum << ','
        << (r.final_correct ? 1 : 0);
    return row.str();
}

inline std::string run_csv_summary_row(const RunSetup& setup, const RunSummary& s,
                                       std::uint64_t base_seed) {
    std::ostringstream row;
    row << "summary,";
    detail::append_setup(row, setup);
    row << ',' << s.trials << ',' << base_seed << ',' << detail::fixed6(s.mean_cost)
        << ",1," << detail::fixed6(s.mean_ratio) << ',' << detail::fixed6(s.mean_wrong)
        << ',' << s.wrong_min << ',' << s.wrong_max << ',' << detail::fixed6(s.mean_rounds)
        << ',' << detail::fixed6(s.mean_queries) << ',' << detail::fixed6(s.mean_loads)
        << ',' << detail::fixed6(s.mean_passes) << ",,,"
        << detail::fixed6(s.correct_rate);
    return row.str();
}

inline std::string sweep_csv_header() {
    return "axis_value,player,mean_cost,mean_ratio,mean_wrong,mean_rounds,failure_rate";
}

inline std::string sweep_csv_row(const std::string& axis_value, const std::string& player,
                                 const RunSummary& s) {
    std::ostringstream row;
    row << axis_value << ',' << player << ',' << detail::fixed6(s.mean_cost) << ','
        << detail::fixed6(s.mean_ratio) << ',' << detail::fixed6(s.mean_wrong) << ','
        << detail::fixed6(s.mean_rounds) << ',' << detail::fixed6(1.0 - s.correct_rate);
    return row.str();
}

}  // namespace qrag
