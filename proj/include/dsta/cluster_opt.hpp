#pragma once

#include <algorithm>
#include <limits>
#include <span>
#include <vector>

#include "instance.hpp"
#include "tour.hpp"

namespace dsta {

namespace detail {

// Shortest path from fixed vertex `from` through one vertex of each cluster in `layers`
// to fixed vertex `to`. Writes the chosen vertices to `out` and returns the path cost.
// Ties resolve to the smallest vertex id.
inline Cost layered_path(const Instance &inst, int from, std::span<const int> layers, int to,
                         std::span<int> out) {
    constexpr Cost inf = std::numeric_limits<Cost>::max();
    const std::size_t depth = layers.size();
    if (depth == 0) return inst.cost_unchecked(from, to);

    std::vector<std::vector<Cost>> dist(depth);
    std::vector<std::vector<std::size_t>> pred(depth);
    {
        const auto &first = inst.cluster(layers[0]);
        dist[0].resize(first.size());
        for (std::size_t a = 0; a < first.size(); ++a) dist[0][a] = inst.cost_unchecked(from, first[a]);
    }
    for (std::size_t l = 1; l < depth; ++l) {
        const auto &prev = inst.cluster(layers[l - 1]);
        const auto &cur = inst.cluster(layers[l]);
        dist[l].assign(cur.size(), inf);
        pred[l].assign(cur.size(), 0);
        for (std::size_t b = 0; b < cur.size(); ++b) {
            for (std::size_t a = 0; a < prev.size(); ++a) {
                const Cost c = dist[l - 1][a] + inst.cost_unchecked(prev[a], cur[b]);
                if (c < dist[l][b]) {
                    dist[l][b] = c;
                    pred[l][b] = a;
                }
            }
        }
    }
    const auto &last = inst.cluster(layers[depth - 1]);
    Cost best = inf;
    std::size_t arg = 0;
    for (std::size_t a = 0; a < last.size(); ++a) {
        const Cost c = dist[depth - 1][a] + inst.cost_unchecked(last[a], to);
        if (c < best) {
            best = c;
            arg = a;
        }
    }
    for (std::size_t l = depth; l-- > 0;) {
        out[l] = inst.cluster(layers[l])[arg];
        if (l > 0) arg = pred[l][arg];
    }
    return best;
}

}  // namespace detail

// Optimal vertex choice for the tour's cluster order (layer-network shortest path).
// The DP starts from the smallest cluster; the cluster order is returned unchanged.
inline Tour full_co(const Instance &inst, const Tour &t) {
    const std::size_t m = t.size();
    Tour out = t;
    if (m == 0) return out;
    if (m == 1) {
        out.choice[0] = inst.cluster(t.order[0]).front();
        out.cost = 0;
        return out;
    }

    std::size_t start = 0;
    for (std::size_t i = 1; i < m; ++i)
        if (inst.cluster(t.order[i]).size() < inst.cluster(t.order[start]).size()) start = i;

    std::vector<int> layers(m - 1);
    for (std::size_t l = 0; l + 1 < m; ++l) layers[l] = t.order[(start + 1 + l) % m];

    std::vector<int> path(m - 1), best_path(m - 1);
    Cost best = std::numeric_limits<Cost>::max();
    int best_start = 0;
    for (int s : inst.cluster(t.order[start])) {
        const Cost c = detail::layered_path(inst, s, layers, s, path);
        if (c < best) {
            best = c;
            best_start = s;
            best_path = path;
        }
    }
    out.choice[start] = best_start;
    for (std::size_t l = 0; l + 1 < m; ++l) out.choice[(start + 1 + l) % m] = best_path[l];
    out.cost = best;
    return out;
}

inline constexpr std::size_t short_co_radius = 1;  // free clusters on each side of a changed position

// Re-optimises a small window around each changed position: the changed cluster and its two
// neighbours are free, the clusters just outside are held fixed (5 clusters per window).
// Overlapping or touching windows are merged into one run. Never increases the cost.
inline Tour short_co(const Instance &inst, const Tour &t, std::span<const std::size_t> changed) {
    const std::size_t m = t.size();
    Tour out = t;
    if (changed.empty() || m == 0) return out;

    std::vector<bool> free(m, false);
    for (std::size_t c : changed)
        for (std::ptrdiff_t off = -static_cast<std::ptrdiff_t>(short_co_radius);
             off <= static_cast<std::ptrdiff_t>(short_co_radius); ++off)
            free[wrap_pos(static_cast<std::ptrdiff_t>(c) + off, m)] = true;

    const auto fixed_pos = std::find(free.begin(), free.end(), false);
    if (fixed_pos == free.end()) {
        Tour best = full_co(inst, t);
        return best.cost <= t.cost ? best : out;
    }

    const auto anchor = static_cast<std::size_t>(fixed_pos - free.begin());
    std::vector<int> layers, chosen;
    std::size_t i = next_pos(anchor, m);
    for (std::size_t visited = 0; visited < m;) {
        if (!free[i]) {
            i = next_pos(i, m);
            ++visited;
            continue;
        }
        const std::size_t left = prev_pos(i, m);
        layers.clear();
        std::size_t run_start = i;
        while (free[i]) {
            layers.push_back(out.order[i]);
            i = next_pos(i, m);
            ++visited;
        }
        const std::size_t right = i;
        chosen.assign(layers.size(), 0);
        const Cost best = detail::layered_path(inst, out.choice[left], layers, out.choice[right], chosen);

        Cost current = 0;
        std::size_t p = left;
        for (std::size_t l = 0; l <= layers.size(); ++l) {
            const std::size_t q = next_pos(p, m);
            current += inst.cost_unchecked(out.choice[p], out.choice[q]);
            p = q;
        }
        if (best < current) {
            for (std::size_t l = 0; l < layers.size(); ++l) out.choice[(run_start + l) % m] = chosen[l];
            out.cost += best - current;
        }
    }
    return out;
}

}  // namespace dsta
