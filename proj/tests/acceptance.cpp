// Acceptance suite: prints one PASS/FAIL line per criterion and exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <dsta/dsta.hpp>

#include "support.hpp"

using namespace dsta;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string &why) {
        if (!pass) detail << "; ";
        else detail.str("");
        pass = false;
        detail << why;
    }
};

int failures = 0;

void report(const std::string &name, Verdict &v) {
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail.str() << std::endl;
    failures += !v.pass;
}

struct Target {
    const char *name;
    Cost best;
};

constexpr Target targets[] = {{"30kroA150", 11018}, {"31pr152", 51576}, {"46pr226", 64007}};

std::optional<fs::path> locate(const std::string &name) {
    std::vector<fs::path> dirs;
    if (const char *env = std::getenv("DSTA_GTSPLIB_DIR")) dirs.emplace_back(env);
    dirs.emplace_back(fs::path(DSTA_DATA_DIR) / "gtsplib");
    for (const auto &d : dirs)
        for (const char *ext : {".gtsp", ".txt", ""})
            if (fs::is_regular_file(d / (name + ext))) return d / (name + ext);
    return std::nullopt;
}

SolverConfig reference_config() {
    SolverConfig cfg;
    cfg.k = 8;
    cfg.m_a = 2;
    cfg.m_b = 1;
    cfg.termination.time_limit_s = 120.0;
    cfg.record_trace = false;
    return cfg;
}

// Per-instance DSTA runs, shared by the reproduction and ordering criteria.
struct TableRun {
    std::optional<Instance> inst;
    std::vector<RunResult> runs;
    std::string error;
};

std::vector<TableRun> run_table_instances() {
    std::vector<TableRun> out;
    for (const auto &t : targets) {
        TableRun tr;
        const auto path = locate(t.name);
        if (!path) {
            tr.error = std::string(t.name) + " not found (set DSTA_GTSPLIB_DIR or copy it to data/gtsplib/)";
            out.push_back(std::move(tr));
            continue;
        }
        try {
            tr.inst.emplace(parse_gtsplib(read_file(*path)));
        } catch (const std::exception &e) {
            tr.error = std::string(t.name) + ": " + e.what();
            out.push_back(std::move(tr));
            continue;
        }
        const auto nm = NeighborModel::build(*tr.inst, 8);
        tr.runs.resize(10);
        const int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        parallel_for(10, workers, [&](std::size_t i) {
            SolverConfig cfg = reference_config();
            cfg.seed = 1 + i;
            tr.runs[i] = solve(*tr.inst, nm, cfg);
        });
        out.push_back(std::move(tr));
    }
    return out;
}

void criterion_reproduction(const std::vector<TableRun> &table) {
    Verdict v;
    v.detail << "best equals the published value and delta_avg <= 2% on";
    for (std::size_t i = 0; i < std::size(targets); ++i) {
        const auto &t = targets[i];
        const auto &tr = table[i];
        if (!tr.error.empty()) {
            v.fail(tr.error);
            continue;
        }
        std::vector<Cost> costs;
        Cost best = std::numeric_limits<Cost>::max();
        double worst_time = 0.0;
        for (const auto &r : tr.runs) {
            costs.push_back(r.cost);
            best = std::min(best, r.cost);
            worst_time = std::max(worst_time, r.elapsed_s);
        }
        const double d = delta_avg(costs, t.best);
        std::ostringstream row;
        row << t.name << " best " << best << " (want " << t.best << "), delta_avg " << d << "%, slowest run "
            << worst_time << " s";
        if (best != t.best || d > 2.0 || worst_time > 125.0) v.fail(row.str());
        else if (v.pass) v.detail << ' ' << row.str() << ';';
    }
    report("table reproduction", v);
}

void criterion_ordering(const std::vector<TableRun> &table) {
    Verdict v;
    v.detail << "DSTA delta_avg <= SA delta_avg at equal time on";
    for (std::size_t i = 0; i < std::size(targets); ++i) {
        const auto &t = targets[i];
        const auto &tr = table[i];
        if (!tr.error.empty()) {
            v.fail(tr.error);
            continue;
        }
        std::vector<Cost> dsta_costs, sa_costs(tr.runs.size());
        for (const auto &r : tr.runs) dsta_costs.push_back(r.cost);
        const int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        parallel_for(tr.runs.size(), workers, [&](std::size_t r) {
            SaConfig cfg;
            cfg.seed = 1 + r;
            cfg.termination = {0, 0, std::max(tr.runs[r].elapsed_s, 1e-3)};
            cfg.record_trace = false;
            sa_costs[r] = sa_solve(*tr.inst, cfg).cost;
        });
        const double d_dsta = delta_avg(dsta_costs, t.best), d_sa = delta_avg(sa_costs, t.best);
        std::ostringstream row;
        row << t.name << " dsta " << d_dsta << "% vs sa " << d_sa << "%";
        if (d_dsta > d_sa) v.fail(row.str());
        else if (v.pass) v.detail << ' ' << row.str() << ';';
    }
    report("dsta vs sa ordering", v);
}

void criterion_oracle() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(20240601);
    int hits = 0, pairs = 0, below = 0;
    for (int i = 0; i < 50; ++i) {
        const Instance inst = dsta::testing::random_instance(rng, rng.uniform(3, 7), 3);
        const Cost opt = brute_force_oracle(inst).cost;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            SolverConfig cfg;
            cfg.seed = seed;
            cfg.record_trace = false;
            const Cost c = solve(inst, cfg).cost;
            hits += c == opt;
            below += c < opt;
            ++pairs;
        }
    }
    int co_agree = 0;
    for (int i = 0; i < 200; ++i) {
        const Instance inst = dsta::testing::random_instance(rng, rng.uniform(1, 7), 3);
        const Tour t = dsta::testing::random_tour(inst, rng);
        co_agree += full_co(inst, t).cost == dsta::testing::enumerate_assignments(inst, t.order);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.detail << "oracle hit " << hits << "/" << pairs << " (need >= 90%), full_co agreement " << co_agree
             << "/200, " << secs << " s";
    if (hits * 10 < pairs * 9) v.fail("oracle hit rate " + std::to_string(hits) + "/" + std::to_string(pairs));
    if (below > 0) v.fail(std::to_string(below) + " runs reported a cost below the oracle optimum");
    if (co_agree != 200) v.fail("full_co disagreed with enumeration on " + std::to_string(200 - co_agree) + " pairs");
    if (secs > 300.0) v.fail("took " + std::to_string(secs) + " s");
    report("oracle equivalence", v);
}

std::vector<Instance> bundled_instances() {
    std::vector<fs::path> files;
    for (const auto &e : fs::directory_iterator(fs::path(DSTA_DATA_DIR) / "instances"))
        if (e.path().extension() == ".gtsp") files.push_back(e.path());
    for (const auto &t : targets)
        if (const auto p = locate(t.name)) files.push_back(*p);
    std::sort(files.begin(), files.end());
    std::vector<Instance> out;
    for (const auto &f : files) out.push_back(parse_gtsplib(read_file(f)));
    return out;
}

void criterion_invariants() {
    Verdict v;
    const auto instances = bundled_instances();
    std::size_t matrices = 0;
    for (const auto &inst : instances) {
        if (inst.m() < 3) continue;  // relevancy needs a third cluster to carry mass
        const auto nm = NeighborModel::build(inst, 8);
        ++matrices;
        for (std::size_t i = 0; i < static_cast<std::size_t>(inst.m()); ++i) {
            const double rs = nm.correlation.row_sum(i), ps = nm.relevancy.row_sum(i);
            if (std::abs(rs - 1.0) > 1e-9 || std::abs(ps - 1.0) > 1e-9)
                v.fail(inst.name() + " row " + std::to_string(i + 1) + " sums r=" + std::to_string(rs) +
                       " p=" + std::to_string(ps));
        }
    }

    Rng rng(77);
    const Instance inst = dsta::testing::random_instance(rng, 30, 5);
    const auto nm = NeighborModel::build(inst, 8);
    Tour t = initial_tour(inst, rng);
    std::size_t bad_moves = 0;
    for (int i = 0; i < 10000; ++i) {
        MoveResult res;
        switch (i % 7) {
            case 0: res = swap_move(inst, t, 2 + i % 3, rng); break;
            case 1: res = shift_move(inst, t, 1 + i % 3, rng); break;
            case 2: res = symmetry_move(inst, t, 1 + i % 3, rng); break;
            case 3: res = circle_move(inst, t, rng); break;
            case 4: res = k_shift_move(inst, t, nm, 1 + i % 3, rng); break;
            case 5: res = k_symmetry_move(inst, t, nm, 2, rng); break;
            default: res = k_circle_move(inst, t, nm, rng); break;
        }
        Tour next = short_co(inst, res.tour, res.changed);
        if (!is_valid_tour(inst, res.tour) || !is_valid_tour(inst, next) || res.tour.cost != tour_cost(inst, res.tour))
            ++bad_moves;
        t = std::move(next);
    }
    if (bad_moves > 0) v.fail(std::to_string(bad_moves) + " of 10000 operator outputs invalid or mis-costed");

    std::size_t runs = 0, non_monotone = 0, nondeterministic = 0;
    for (const auto &b : instances) {
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            SolverConfig cfg;
            cfg.seed = seed;
            cfg.termination.stall_rounds = 200;
            const auto a = solve(b, cfg), c = solve(b, cfg);
            ++runs;
            for (std::size_t i = 1; i < a.trace.size(); ++i)
                if (a.trace[i].best_star_cost > a.trace[i - 1].best_star_cost) {
                    ++non_monotone;
                    break;
                }
            bool same = a.trace.size() == c.trace.size() && a.best == c.best;
            for (std::size_t i = 0; same && i < a.trace.size(); ++i)
                same = a.trace[i].round == c.trace[i].round && a.trace[i].op == c.trace[i].op &&
                       a.trace[i].best_cost == c.trace[i].best_cost &&
                       a.trace[i].best_star_cost == c.trace[i].best_star_cost;
            nondeterministic += !same;
            if (!is_valid_tour(b, a.best)) v.fail(b.name() + " returned an invalid tour");
        }
    }
    if (non_monotone > 0) v.fail(std::to_string(non_monotone) + " runs with a non-monotone best_star trace");
    if (nondeterministic > 0) v.fail(std::to_string(nondeterministic) + " runs not reproducible from their seed");
    if (v.pass)
        v.detail << matrices << " relevancy models row-stochastic, 10000 operator outputs exact, " << runs
                 << " runs monotone and reproducible";
    report("invariants", v);
}

void criterion_formulas() {
    Verdict v;
    if (delta_avg({50, 50, 50}, 50) != 0.0) v.fail("all-equal delta_avg not 0");
    if (delta_avg({100, 110}, 100) != 5.0) v.fail("mean 105 over opt 100 not 5.0");
    if (delta_avg(std::vector<Cost>(10, 11018), 11018) != 0.0) v.fail("11018 x 10 not 0");
    bool threw = false;
    try {
        delta_avg({1}, 0);
    } catch (const std::invalid_argument &) {
        threw = true;
    }
    if (!threw) v.fail("opt <= 0 accepted");

    const Instance line = dsta::testing::coords_instance({{0, 0}, {1, 0}, {3, 0}}, {{1}, {2}, {3}});
    const Matrix r = correlation_matrix(centroid_distances(line));
    const Matrix p = relevancy_matrix(r);
    const struct {
        const Matrix &mat;
        std::size_t i, j;
        double want;
        const char *label;
    } checks[] = {{r, 0, 1, 0.375, "r12"}, {r, 0, 2, 0.125, "r13"}, {r, 1, 0, 1.0 / 3.0, "r21"},
                  {r, 2, 0, 0.2, "r31"},   {p, 0, 1, 5.0 / 6.0, "p12"}, {p, 0, 2, 1.0 / 6.0, "p13"},
                  {p, 0, 0, 0.0, "p11"}};
    for (const auto &c : checks)
        if (std::abs(c.mat(c.i, c.j) - c.want) > 1e-12)
            v.fail(std::string(c.label) + " = " + std::to_string(c.mat(c.i, c.j)));
    if (v.pass) v.detail << "delta_avg examples exact, collinear r/p within 1e-12";
    report("formula checks", v);
}

}  // namespace

template <typename Fn>
void guarded(const std::string &name, Fn fn) {
    try {
        fn();
    } catch (const std::exception &e) {
        Verdict v;
        v.fail(std::string("exception: ") + e.what());
        report(name, v);
    }
}

int main() {
    const auto table = run_table_instances();
    guarded("table reproduction", [&] { criterion_reproduction(table); });
    guarded("dsta vs sa ordering", [&] { criterion_ordering(table); });
    guarded("oracle equivalence", criterion_oracle);
    guarded("invariants", criterion_invariants);
    guarded("formula checks", criterion_formulas);
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
