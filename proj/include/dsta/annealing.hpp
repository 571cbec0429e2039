#pragma once

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "cluster_opt.hpp"
#include "operators.hpp"
#include "solver.hpp"

namespace dsta {

struct SaConfig {
    double t0 = 5000.0;
    double cooling = 0.97;
    int epoch_length = 0;  // moves per temperature step; 0 means m
    int m_a = 2;
    int m_b = 1;
    std::uint64_t seed = 1;
    Termination termination;  // counted in epochs
    bool record_trace = true;

    void validate() const {
        if (!(t0 > 0.0)) throw std::invalid_argument("initial temperature must be positive");
        if (!(cooling > 0.0 && cooling < 1.0)) throw std::invalid_argument("cooling rate must lie in (0, 1)");
        if (epoch_length < 0) throw std::invalid_argument("epoch length must be non-negative");
        if (m_a < 2 || m_b < 1) throw std::invalid_argument("operator bounds must be m_a >= 2, m_b >= 1");
        if (!termination.any()) throw std::invalid_argument("no termination criterion is active");
    }
};

inline double sa_accept_probability(Cost delta, double temperature) {
    if (delta <= 0) return 1.0;
    if (temperature <= 0.0) return 0.0;
    return std::exp(-static_cast<double>(delta) / temperature);
}

// Simulated annealing over unguided swap/shift moves with short cluster optimisation.
inline RunResult sa_solve(const Instance &inst, const SaConfig &cfg) {
    cfg.validate();
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    auto elapsed_s = [&] { return std::chrono::duration<double>(clock::now() - t0).count(); };

    Rng init_rng(substream_seed(cfg.seed, detail::stream_initial));
    Tour current = initial_tour(inst, init_rng);
    Tour best = current;
    RunResult result;

    if (inst.m() >= 4) {
        const std::size_t epoch = cfg.epoch_length > 0 ? static_cast<std::size_t>(cfg.epoch_length)
                                                       : static_cast<std::size_t>(inst.m());
        double temperature = cfg.t0;
        std::size_t stall = 0;
        for (std::size_t round = 1;; ++round) {
            Rng rng(substream_seed(cfg.seed, detail::stream_round + round));
            const Cost before = best.cost;
            for (std::size_t step = 0; step < epoch; ++step) {
                auto move = rng.chance(0.5) ? swap_move(inst, current, cfg.m_a, rng)
                                            : shift_move(inst, current, cfg.m_b, rng);
                Tour next = short_co(inst, move.tour, move.changed);
                if (rng.chance(sa_accept_probability(next.cost - current.cost, temperature))) {
                    current = std::move(next);
                    if (current.cost < best.cost) best = current;
                }
            }
            temperature *= cfg.cooling;
            result.rounds = round;
            if (cfg.record_trace) result.trace.push_back({round, OperatorKind::Anneal, current.cost, best.cost, elapsed_s() * 1e3});
            stall = best.cost < before ? 0 : stall + 1;
            const auto &term = cfg.termination;
            if (term.max_rounds > 0 && round >= term.max_rounds) break;
            if (term.stall_rounds > 0 && stall >= term.stall_rounds) break;
            if (term.time_limit_s > 0.0 && elapsed_s() >= term.time_limit_s) break;
        }
    } else {
        result.rounds = 1;
        if (cfg.record_trace) result.trace.push_back({1, OperatorKind::Anneal, current.cost, best.cost, elapsed_s() * 1e3});
    }
    result.elapsed_s = elapsed_s();
    result.cost = best.cost;
    result.best = std::move(best);
    return result;
}

}  // namespace dsta
