#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <dsta/dsta.hpp>

namespace fs = std::filesystem;

namespace {

enum Exit { ok = 0, usage = 1, parse_error = 2, guard_violation = 3 };

dsta::Instance load(const std::string &path) { return dsta::parse_gtsplib(dsta::read_file(path)); }

std::vector<fs::path> expand(const std::vector<std::string> &inputs) {
    std::vector<fs::path> files;
    for (const auto &in : inputs) {
        if (fs::is_directory(in)) {
            std::vector<fs::path> found;
            for (const auto &e : fs::directory_iterator(in))
                if (e.is_regular_file() && e.path().extension() == ".gtsp") found.push_back(e.path());
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else {
            files.emplace_back(in);
        }
    }
    return files;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"GTSP solver: discrete state transition algorithm with K-Neighbor guidance"};
    app.require_subcommand(1);

    std::string file;
    dsta::SolverConfig cfg;
    std::string trace_path;
    auto *solve = app.add_subcommand("solve", "solve one instance and print the best tour");
    solve->add_option("file", file, "GTSPLIB instance")->required();
    solve->add_option("--seed", cfg.seed, "random seed");
    solve->add_option("--se", cfg.se, "candidates per operator round")->check(CLI::PositiveNumber);
    solve->add_option("--ma", cfg.m_a, "swap size bound");
    solve->add_option("--mb", cfg.m_b, "shift segment bound");
    solve->add_option("--mc", cfg.m_c, "symmetry half-length bound");
    solve->add_option("--k", cfg.k, "K-Neighbor list size");
    solve->add_option("--p1", cfg.p1, "probability of accepting a worse candidate");
    solve->add_option("--p2", cfg.p2, "probability of restoring the historical best");
    solve->add_option("--max-rounds", cfg.termination.max_rounds, "stop after N rounds (0 = off)");
    solve->add_option("--stall-rounds", cfg.termination.stall_rounds, "stop after N rounds without improvement (0 = off)");
    solve->add_option("--time-limit", cfg.termination.time_limit_s, "stop after SECS seconds (0 = off)");
    solve->add_option("--trace", trace_path, "write the per-operator trace CSV here");

    std::vector<std::string> inputs;
    int runs = 10, workers = 1;
    std::string solver_name = "dsta", out_prefix = "bench", optima_path = DSTA_DATA_DIR "/known_optima.csv";
    std::uint64_t base_seed = 1;
    auto *bench = app.add_subcommand("bench", "multi-seed experiment over instance files or directories");
    bench->add_option("inputs", inputs, "instance files or directories of .gtsp files")->required();
    bench->add_option("--runs", runs, "seeded runs per instance and solver")->check(CLI::PositiveNumber);
    bench->add_option("--solver", solver_name, "dsta, sa or both")->check(CLI::IsMember({"dsta", "sa", "both"}));
    bench->add_option("--out", out_prefix, "report prefix; writes PREFIX.csv and PREFIX.json");
    bench->add_option("--workers", workers, "concurrent runs")->check(CLI::PositiveNumber);
    bench->add_option("--optima", optima_path, "known optima CSV");
    bench->add_option("--seed", base_seed, "seed of the first run");

    auto *oracle = app.add_subcommand("oracle", "exact optimum of a tiny instance by enumeration");
    oracle->add_option("file", file, "GTSPLIB instance")->required();

    int k = 8;
    std::string dump_path;
    auto *neighbors = app.add_subcommand("neighbors", "print each cluster's K-Neighbor list");
    neighbors->add_option("file", file, "GTSPLIB instance")->required();
    neighbors->add_option("--k", k, "list size")->check(CLI::PositiveNumber);
    neighbors->add_option("--dump-p", dump_path, "write the relevancy matrix as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*solve) {
            cfg.validate();
            const auto inst = load(file);
            const auto res = dsta::solve(inst, cfg);
            std::cout << dsta::to_string(res.best) << '\n';
            std::cerr << "cost " << res.cost << ", rounds " << res.rounds << ", " << res.elapsed_s << " s\n";
            if (!trace_path.empty()) {
                std::ofstream out(trace_path);
                if (!out) throw std::runtime_error("cannot write " + trace_path);
                dsta::write_trace_csv(out, res.trace);
            }
        } else if (*bench) {
            dsta::ExperimentConfig ec;
            ec.runs = runs;
            ec.workers = workers;
            ec.base_seed = base_seed;
            ec.solver = solver_name == "sa" ? dsta::SolverChoice::Sa
                        : solver_name == "both" ? dsta::SolverChoice::Both
                                                : dsta::SolverChoice::Dsta;
            dsta::OptimaTable optima;
            if (fs::exists(optima_path)) optima = dsta::load_optima(optima_path);
            const auto result = dsta::run_experiment(expand(inputs), ec, optima);
            for (const auto &[f, msg] : result.errors) std::cerr << f << ": " << msg << '\n';
            dsta::emit_report(result.reports, out_prefix);
            dsta::write_report_csv(std::cout, result.reports);
            for (const auto &r : result.reports)
                if (r.below_known_optimum)
                    std::cerr << r.instance << ": best " << r.best << " is below the tabulated optimum " << *r.opt << '\n';
            if (!result.errors.empty()) return parse_error;
        } else if (*oracle) {
            const auto inst = load(file);
            const auto res = dsta::brute_force_oracle(inst);
            std::cout << dsta::to_string(res.tour) << '\n';
            std::cerr << res.orders_checked << " cluster orders checked\n";
        } else if (*neighbors) {
            const auto inst = load(file);
            const auto nm = dsta::NeighborModel::build(inst, k);
            for (int c = 1; c <= inst.m(); ++c) {
                std::cout << c << ':';
                for (int j : nm.neighbors_of(c)) std::cout << ' ' << j;
                std::cout << '\n';
            }
            if (!dump_path.empty()) {
                std::ofstream out(dump_path);
                if (!out) throw std::runtime_error("cannot write " + dump_path);
                dsta::write_relevancy_csv(out, nm.relevancy);
            }
        }
    } catch (const dsta::ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return parse_error;
    } catch (const dsta::GuardViolation &e) {
        std::cerr << e.what() << '\n';
        return guard_violation;
    } catch (const std::invalid_argument &e) {
        std::cerr << e.what() << '\n';
        return usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return parse_error;
    }
    return ok;
}
