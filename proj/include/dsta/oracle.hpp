#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cluster_opt.hpp"
#include "instance.hpp"
#include "tour.hpp"

namespace dsta {

class GuardViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleLimits {
    int max_clusters = 8;
    double max_assignments = 1e5;
};

struct OracleResult {
    Cost cost = 0;
    Tour tour;
    std::size_t orders_checked = 0;
};

// Exact optimum by enumerating every cyclic cluster order once (cluster 1 first, reflections
// skipped) and solving the vertex choice for each order exactly.
inline OracleResult brute_force_oracle(const Instance &inst, OracleLimits limits = {}) {
    const int m = inst.m();
    double assignments = 1.0;
    for (const auto &c : inst.clusters()) assignments *= static_cast<double>(c.size());
    if (m > limits.max_clusters || assignments > limits.max_assignments)
        throw GuardViolation("instance too large for brute force: m=" + std::to_string(m) +
                             ", assignments=" + std::to_string(static_cast<long long>(assignments)));

    OracleResult result;
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 1);
    bool have = false;
    do {
        if (m >= 3 && order[1] > order.back()) continue;
        Tour t{order, std::vector<int>(order.size()), 0};
        for (std::size_t i = 0; i < order.size(); ++i) t.choice[i] = inst.cluster(order[i]).front();
        t.cost = tour_cost(inst, t);
        Tour opt = full_co(inst, t);
        ++result.orders_checked;
        if (!have || opt.cost < result.cost) {
            result.cost = opt.cost;
            result.tour = std::move(opt);
            have = true;
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return result;
}

}  // namespace dsta
