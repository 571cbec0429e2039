#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cluster_opt.hpp"
#include "instance.hpp"
#include "neighbors.hpp"
#include "operators.hpp"
#include "rng.hpp"
#include "tour.hpp"

namespace dsta {

enum class OperatorKind : std::uint8_t { Swap, Shift, KCircle, KSymmetry, KShift, Anneal };

inline std::string_view to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::Swap: return "swap";
        case OperatorKind::Shift: return "shift";
        case OperatorKind::KCircle: return "k-circle";
        case OperatorKind::KSymmetry: return "k-symmetry";
        case OperatorKind::KShift: return "k-shift";
        case OperatorKind::Anneal: return "sa";
    }
    return "?";
}

// One iteration of the main loop applies these in order.
inline constexpr OperatorKind round_schedule[] = {OperatorKind::Swap, OperatorKind::Shift, OperatorKind::KCircle,
                                                  OperatorKind::KSymmetry, OperatorKind::KShift};

// Zero disables a criterion; at least one must be active.
struct Termination {
    std::size_t max_rounds = 0;
    std::size_t stall_rounds = 2000;
    double time_limit_s = 0.0;

    bool any() const { return max_rounds > 0 || stall_rounds > 0 || time_limit_s > 0.0; }
};

struct SolverConfig {
    int se = 10;      // candidates per operator round
    int m_a = 2;      // swap size bound
    int m_b = 1;      // shift segment bound
    int m_c = 2;      // symmetry half-length bound
    int k = 8;        // K-Neighbor list size
    double p1 = 0.1;  // risk: accept a worse candidate
    double p2 = 0.05; // restore: reset the incumbent to the historical best
    std::uint64_t seed = 1;
    Termination termination;
    bool record_trace = true;

    void validate() const {
        if (se < 1) throw std::invalid_argument("SE must be >= 1");
        if (m_a < 2 || m_b < 1 || m_c < 1) throw std::invalid_argument("operator bounds must be m_a >= 2, m_b >= 1, m_c >= 1");
        if (k < 1) throw std::invalid_argument("k must be >= 1");
        if (!(p1 >= 0.0 && p1 <= 1.0) || !(p2 >= 0.0 && p2 <= 1.0))
            throw std::invalid_argument("p1 and p2 must lie in [0, 1]");
        if (!termination.any()) throw std::invalid_argument("no termination criterion is active");
    }
};

struct TraceRow {
    std::size_t round = 0;
    OperatorKind op = OperatorKind::Swap;
    Cost best_cost = 0;
    Cost best_star_cost = 0;
    double elapsed_ms = 0.0;
};

inline void write_trace_csv(std::ostream &out, const std::vector<TraceRow> &trace) {
    out << "round,operator,best_cost,best_star_cost,elapsed_ms\n";
    for (const auto &row : trace)
        out << row.round << ',' << to_string(row.op) << ',' << row.best_cost << ',' << row.best_star_cost << ','
            << row.elapsed_ms << '\n';
}

struct RunResult {
    Tour best;
    Cost cost = 0;
    std::size_t rounds = 0;
    double elapsed_s = 0.0;
    std::vector<TraceRow> trace;
};

// best is the incumbent, best_star the best tour seen so far.
struct SolverState {
    Tour best;
    Tour best_star;
    std::size_t round = 0;
    std::vector<TraceRow> trace;
};

// Random cluster order and random vertex per cluster, then exact cluster optimisation.
inline Tour initial_tour(const Instance &inst, Rng &rng) {
    const auto m = static_cast<std::size_t>(inst.m());
    Tour t;
    t.order.resize(m);
    std::iota(t.order.begin(), t.order.end(), 1);
    std::shuffle(t.order.begin(), t.order.end(), rng.engine());
    t.choice.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto &members = inst.cluster(t.order[i]);
        t.choice[i] = members[rng.index(members.size())];
    }
    t.cost = tour_cost(inst, t);
    return full_co(inst, t);
}

inline MoveResult generate_candidate(const Instance &inst, const NeighborModel &nm, const Tour &from,
                                     OperatorKind kind, const SolverConfig &cfg, Rng &rng) {
    switch (kind) {
        case OperatorKind::Swap: return swap_move(inst, from, cfg.m_a, rng);
        case OperatorKind::Shift: return shift_move(inst, from, cfg.m_b, rng);
        case OperatorKind::KCircle: return k_circle_move(inst, from, nm, rng);
        case OperatorKind::KSymmetry: return k_symmetry_move(inst, from, nm, cfg.m_c, rng);
        case OperatorKind::KShift: return k_shift_move(inst, from, nm, cfg.m_b, rng);
        case OperatorKind::Anneal: break;
    }
    throw std::invalid_argument("not a DSTA operator");
}

// Applies SE transformations of `kind` to the incumbent, short-CO on each, then the
// risk/restore update. Requires m >= 4.
inline void operator_round(SolverState &state, const Instance &inst, const NeighborModel &nm, OperatorKind kind,
                           const SolverConfig &cfg, Rng &rng) {
    Tour cand;
    bool have = false;
    for (int s = 0; s < cfg.se; ++s) {
        auto move = generate_candidate(inst, nm, state.best, kind, cfg, rng);
        Tour t = short_co(inst, move.tour, move.changed);
        if (!have || t.cost < cand.cost) {
            cand = std::move(t);
            have = true;
        }
    }
    if (cand.cost < state.best.cost || rng.chance(cfg.p1)) state.best = std::move(cand);
    if (state.best.cost < state.best_star.cost) state.best_star = state.best;
    if (rng.chance(cfg.p2)) state.best = state.best_star;
}

namespace detail {

enum : std::uint64_t { stream_initial = 0x1000, stream_round = 0x2000 };

}  // namespace detail

inline RunResult solve(const Instance &inst, const NeighborModel &nm, const SolverConfig &cfg) {
    cfg.validate();
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    auto elapsed_s = [&] { return std::chrono::duration<double>(clock::now() - t0).count(); };

    Rng init_rng(substream_seed(cfg.seed, detail::stream_initial));
    SolverState state;
    state.best = initial_tour(inst, init_rng);
    state.best_star = state.best;

    RunResult result;
    if (inst.m() < 4) {
        // every cluster order is equivalent up to rotation and reflection
        state.round = 1;
        if (cfg.record_trace)
            state.trace.push_back({1, OperatorKind::Swap, state.best.cost, state.best_star.cost, elapsed_s() * 1e3});
    } else {
        std::size_t stall = 0;
        for (;;) {
            ++state.round;
            const Cost before = state.best_star.cost;
            for (std::size_t op = 0; op < std::size(round_schedule); ++op) {
                Rng rng(substream_seed(cfg.seed, detail::stream_round + state.round, op));
                operator_round(state, inst, nm, round_schedule[op], cfg, rng);
                if (cfg.record_trace)
                    state.trace.push_back(
                        {state.round, round_schedule[op], state.best.cost, state.best_star.cost, elapsed_s() * 1e3});
            }
            stall = state.best_star.cost < before ? 0 : stall + 1;
            const auto &term = cfg.termination;
            if (term.max_rounds > 0 && state.round >= term.max_rounds) break;
            if (term.stall_rounds > 0 && stall >= term.stall_rounds) break;
            if (term.time_limit_s > 0.0 && elapsed_s() >= term.time_limit_s) break;
        }
    }
    result.elapsed_s = elapsed_s();
    result.rounds = state.round;
    result.cost = state.best_star.cost;
    result.best = std::move(state.best_star);
    result.trace = std::move(state.trace);
    return result;
}

inline RunResult solve(const Instance &inst, const SolverConfig &cfg) {
    cfg.validate();
    if (inst.m() < 4) return solve(inst, NeighborModel{}, cfg);
    return solve(inst, NeighborModel::build(inst, cfg.k), cfg);
}

}  // namespace dsta
