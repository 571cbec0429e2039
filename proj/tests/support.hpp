#pragma once

// Test-only helpers: fixture builders and exhaustive oracles that share no code path
// with the cluster-optimisation DP.

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <dsta/instance.hpp>
#include <dsta/rng.hpp>
#include <dsta/tour.hpp>

namespace dsta::testing {

inline constexpr const char *fixture4 = R"(NAME: fixture4
TYPE: GTSP
COMMENT: 4 vertices, 2 clusters
DIMENSION: 4
GTSP_SETS: 2
EDGE_WEIGHT_TYPE: EUC_2D
NODE_COORD_SECTION
1 0 0
2 0 1
3 10 0
4 10 1
GTSP_SET_SECTION
1 1 2 -1
2 3 4 -1
EOF
)";

inline Instance coords_instance(std::vector<Point> coords, std::vector<std::vector<int>> clusters,
                                WeightKind kind = WeightKind::Euc2D, std::string name = "test") {
    InstanceData d;
    d.name = std::move(name);
    d.kind = kind;
    d.n = static_cast<int>(coords.size());
    d.coords = std::move(coords);
    d.clusters = std::move(clusters);
    return Instance(std::move(d));
}

// Symmetric explicit instance from an upper-triangular cost list (row-major, i < j).
inline Instance explicit_instance(int n, const std::vector<Cost> &upper, std::vector<std::vector<int>> clusters) {
    InstanceData d;
    d.name = "explicit";
    d.kind = WeightKind::Explicit;
    d.format = WeightFormat::FullMatrix;
    d.n = n;
    d.explicit_costs.assign(static_cast<std::size_t>(n * n), 0);
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            d.explicit_costs[static_cast<std::size_t>(i * n + j)] = upper[k];
            d.explicit_costs[static_cast<std::size_t>(j * n + i)] = upper[k];
            ++k;
        }
    d.clusters = std::move(clusters);
    return Instance(std::move(d));
}

// Random EUC_2D instance with m clusters of 1..max_size vertices, coordinates on a grid.
inline Instance random_instance(Rng &rng, int m, int max_size, double extent = 1000.0) {
    std::vector<Point> coords;
    std::vector<std::vector<int>> clusters(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
        const int size = rng.uniform(1, max_size);
        const double cx = std::floor(rng.unit() * extent), cy = std::floor(rng.unit() * extent);
        for (int s = 0; s < size; ++s) {
            coords.push_back({cx + std::floor(rng.unit() * extent / 5), cy + std::floor(rng.unit() * extent / 5)});
            clusters[static_cast<std::size_t>(c)].push_back(static_cast<int>(coords.size()));
        }
    }
    // shuffle vertex ids so clusters are not contiguous ranges
    const int n = static_cast<int>(coords.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    std::vector<Point> shuffled(coords.size());
    for (int v = 1; v <= n; ++v) shuffled[static_cast<std::size_t>(perm[static_cast<std::size_t>(v - 1)] - 1)] = coords[static_cast<std::size_t>(v - 1)];
    for (auto &c : clusters)
        for (int &v : c) v = perm[static_cast<std::size_t>(v - 1)];
    return coords_instance(std::move(shuffled), std::move(clusters), WeightKind::Euc2D, "random");
}

inline Tour random_tour(const Instance &inst, Rng &rng) {
    Tour t;
    t.order.resize(static_cast<std::size_t>(inst.m()));
    std::iota(t.order.begin(), t.order.end(), 1);
    std::shuffle(t.order.begin(), t.order.end(), rng.engine());
    for (int c : t.order) {
        const auto &members = inst.cluster(c);
        t.choice.push_back(members[rng.index(members.size())]);
    }
    t.cost = tour_cost(inst, t);
    return t;
}

// Minimum cycle cost over every vertex assignment for a fixed order (odometer enumeration).
inline Cost enumerate_assignments(const Instance &inst, const std::vector<int> &order) {
    const std::size_t m = order.size();
    std::vector<std::size_t> digit(m, 0);
    Cost best = std::numeric_limits<Cost>::max();
    std::vector<int> choice(m);
    for (;;) {
        for (std::size_t i = 0; i < m; ++i) choice[i] = inst.cluster(order[i])[digit[i]];
        Cost c = 0;
        for (std::size_t i = 0; i < m; ++i) c += inst.edge_cost(choice[i], choice[(i + 1) % m]);
        if (m < 2) c = 0;
        best = std::min(best, c);
        std::size_t i = 0;
        while (i < m && ++digit[i] == inst.cluster(order[i]).size()) digit[i++] = 0;
        if (i == m) break;
    }
    return best;
}

// Exhaustive optimum over all orders (cluster 1 fixed first) and all assignments.
inline Cost exhaustive_optimum(const Instance &inst) {
    std::vector<int> order(static_cast<std::size_t>(inst.m()));
    std::iota(order.begin(), order.end(), 1);
    Cost best = std::numeric_limits<Cost>::max();
    do {
        best = std::min(best, enumerate_assignments(inst, order));
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return best;
}

// Undirected edge multiset of a tour's vertex cycle, as sorted (min,max) pairs.
inline std::vector<std::pair<int, int>> edge_set(const Tour &t) {
    std::vector<std::pair<int, int>> edges;
    const std::size_t m = t.size();
    for (std::size_t i = 0; i < m; ++i) {
        const int a = t.choice[i], b = t.choice[(i + 1) % m];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Number of edges in `after` that are not in `before` (multiset difference).
inline std::size_t edges_changed(const Tour &before, const Tour &after) {
    const auto a = edge_set(before), b = edge_set(after);
    std::vector<std::pair<int, int>> diff;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(diff));
    return diff.size();
}

}  // namespace dsta::testing
