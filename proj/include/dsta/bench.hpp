#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "annealing.hpp"
#include "instance.hpp"
#include "neighbors.hpp"
#include "solver.hpp"

namespace dsta {

// Percent relative error of the mean against a known optimum.
inline double delta_avg(const std::vector<Cost> &values, Cost opt) {
    if (opt <= 0) throw std::invalid_argument("optimum must be positive");
    if (values.empty()) throw std::invalid_argument("no values");
    const double mean = static_cast<double>(std::accumulate(values.begin(), values.end(), Cost{0})) /
                        static_cast<double>(values.size());
    return (mean - static_cast<double>(opt)) / static_cast<double>(opt) * 100.0;
}

struct KnownOptimum {
    std::string instance;
    Cost opt = 0;
    std::optional<Cost> published_best;  // best reported for the reference method, if any
    std::string source;
    bool discrepancy = false;
};

using OptimaTable = std::map<std::string, KnownOptimum>;

// CSV: instance,opt,published_best,source,discrepancy (header line required, '#' lines ignored).
inline OptimaTable parse_optima_csv(std::istream &in) {
    OptimaTable table;
    std::string line;
    bool header = true;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream row(line);
        for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
        if (cells.size() != 5) throw std::runtime_error("optima table line " + std::to_string(number) + ": expected 5 columns");
        KnownOptimum k;
        k.instance = cells[0];
        k.opt = std::stoll(cells[1]);
        if (!cells[2].empty()) k.published_best = std::stoll(cells[2]);
        k.source = cells[3];
        k.discrepancy = cells[4] == "1" || cells[4] == "yes";
        table[k.instance] = k;
    }
    return table;
}

inline OptimaTable load_optima(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open optima table " + path.string());
    return parse_optima_csv(in);
}

enum class SolverChoice { Dsta, Sa, Both };

struct RunRecord {
    std::uint64_t seed = 0;
    Cost cost = 0;
    double time_s = 0.0;
    std::size_t rounds = 0;
    std::string tour;
};

struct RunReport {
    std::string instance;
    std::string solver;
    std::optional<Cost> opt;
    Cost best = 0;
    std::optional<double> delta_avg;
    double mean = 0.0;
    double t_avg = 0.0;
    double setup_s = 0.0;  // neighbour model build, excluded from t_avg
    bool below_known_optimum = false;
    bool optimum_discrepancy = false;
    std::vector<RunRecord> runs;
};

inline RunReport summarize(std::string instance, std::string solver, std::vector<RunRecord> runs,
                           const OptimaTable &optima) {
    RunReport r;
    r.instance = std::move(instance);
    r.solver = std::move(solver);
    r.runs = std::move(runs);
    if (r.runs.empty()) return r;
    std::vector<Cost> costs;
    double time = 0.0;
    for (const auto &run : r.runs) {
        costs.push_back(run.cost);
        time += run.time_s;
    }
    r.best = *std::min_element(costs.begin(), costs.end());
    r.mean = static_cast<double>(std::accumulate(costs.begin(), costs.end(), Cost{0})) / static_cast<double>(costs.size());
    r.t_avg = time / static_cast<double>(r.runs.size());
    if (const auto it = optima.find(r.instance); it != optima.end()) {
        r.opt = it->second.opt;
        r.delta_avg = delta_avg(costs, it->second.opt);
        r.below_known_optimum = r.best < it->second.opt;
        r.optimum_discrepancy = it->second.discrepancy;
    }
    return r;
}

struct ExperimentConfig {
    SolverConfig dsta;
    SaConfig sa;
    SolverChoice solver = SolverChoice::Dsta;
    int runs = 10;
    std::uint64_t base_seed = 1;
    int workers = 1;
};

struct ExperimentResult {
    std::vector<RunReport> reports;
    std::vector<std::pair<std::string, std::string>> errors;  // file, message
};

// Executes fn(i) for i in [0, count) on up to `workers` threads.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn fn) {
    const auto threads = static_cast<std::size_t>(std::clamp(workers, 1, 64));
    if (threads == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t w = 0; w < std::min(threads, count); ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto &t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

inline std::string instance_label(const Instance &inst, const std::filesystem::path &path) {
    return inst.name().empty() ? path.stem().string() : inst.name();
}

// Seeded runs of each requested solver on one parsed instance; seeds are base_seed + run index.
inline std::vector<RunReport> run_instance(const Instance &inst, const std::string &label, const ExperimentConfig &cfg,
                                           const OptimaTable &optima) {
    std::vector<RunReport> reports;
    const auto runs = static_cast<std::size_t>(std::max(cfg.runs, 0));
    if (cfg.solver != SolverChoice::Sa) {
        const auto t0 = std::chrono::steady_clock::now();
        const NeighborModel nm = inst.m() >= 4 ? NeighborModel::build(inst, cfg.dsta.k) : NeighborModel{};
        const double setup = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::vector<RunRecord> records(runs);
        parallel_for(runs, cfg.workers, [&](std::size_t i) {
            SolverConfig c = cfg.dsta;
            c.seed = cfg.base_seed + i;
            c.record_trace = false;
            const auto res = solve(inst, nm, c);
            records[i] = {c.seed, res.cost, res.elapsed_s, res.rounds, to_string(res.best)};
        });
        reports.push_back(summarize(label, "dsta", std::move(records), optima));
        reports.back().setup_s = setup;
    }
    if (cfg.solver != SolverChoice::Dsta) {
        std::vector<RunRecord> records(runs);
        parallel_for(runs, cfg.workers, [&](std::size_t i) {
            SaConfig c = cfg.sa;
            c.seed = cfg.base_seed + i;
            c.record_trace = false;
            const auto res = sa_solve(inst, c);
            records[i] = {c.seed, res.cost, res.elapsed_s, res.rounds, to_string(res.best)};
        });
        reports.push_back(summarize(label, "sa", std::move(records), optima));
    }
    return reports;
}

inline std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Parse failures are collected per file; remaining files still run.
inline ExperimentResult run_experiment(const std::vector<std::filesystem::path> &files, const ExperimentConfig &cfg,
                                       const OptimaTable &optima = {}) {
    ExperimentResult out;
    for (const auto &file : files) {
        std::optional<Instance> inst;
        try {
            inst.emplace(parse_gtsplib(read_file(file)));
        } catch (const std::exception &e) {
            out.errors.emplace_back(file.string(), e.what());
            continue;
        }
        auto reports = run_instance(*inst, instance_label(*inst, file), cfg, optima);
        for (auto &r : reports) out.reports.push_back(std::move(r));
    }
    return out;
}

// Table-style summary: one row per instance and solver.
inline void write_report_csv(std::ostream &out, const std::vector<RunReport> &reports) {
    out << "instance,solver,opt,best,delta_avg,t_avg\n";
    for (const auto &r : reports) {
        out << r.instance << ',' << r.solver << ',';
        if (r.opt) out << *r.opt;
        out << ',' << r.best << ',';
        if (r.delta_avg) {
            std::ostringstream d;
            d.setf(std::ios::fixed);
            d.precision(2);
            d << *r.delta_avg;
            out << d.str();
        }
        std::ostringstream t;
        t.setf(std::ios::fixed);
        t.precision(3);
        t << r.t_avg;
        out << ',' << t.str() << '\n';
    }
}

inline nlohmann::json report_json(const std::vector<RunReport> &reports) {
    auto arr = nlohmann::json::array();
    for (const auto &r : reports) {
        nlohmann::json j{{"instance", r.instance},
                         {"solver", r.solver},
                         {"best", r.best},
                         {"mean", r.mean},
                         {"t_avg", r.t_avg},
                         {"setup_s", r.setup_s},
                         {"below_known_optimum", r.below_known_optimum},
                         {"optimum_discrepancy", r.optimum_discrepancy}};
        j["opt"] = r.opt ? nlohmann::json(*r.opt) : nlohmann::json(nullptr);
        j["delta_avg"] = r.delta_avg ? nlohmann::json(*r.delta_avg) : nlohmann::json(nullptr);
        auto runs = nlohmann::json::array();
        for (const auto &run : r.runs)
            runs.push_back({{"seed", run.seed}, {"cost", run.cost}, {"time_s", run.time_s}, {"rounds", run.rounds}, {"tour", run.tour}});
        j["runs"] = std::move(runs);
        arr.push_back(std::move(j));
    }
    return arr;
}

// Writes <prefix>.csv and <prefix>.json.
inline void emit_report(const std::vector<RunReport> &reports, const std::string &prefix) {
    std::ofstream csv(prefix + ".csv");
    std::ofstream json(prefix + ".json");
    if (!csv || !json) throw std::runtime_error("cannot write report files with prefix " + prefix);
    write_report_csv(csv, reports);
    json << report_json(reports).dump(2) << '\n';
    if (!csv || !json) throw std::runtime_error("failed writing report files with prefix " + prefix);
}

}  // namespace dsta
