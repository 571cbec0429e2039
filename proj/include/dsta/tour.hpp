#pragma once

#include <charconv>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "instance.hpp"

namespace dsta {

// A GTSP tour: cyclic cluster order plus the vertex chosen in each cluster.
// choice[i] belongs to cluster order[i]; cost is the cycle length including the closing edge.
struct Tour {
    std::vector<int> order;
    std::vector<int> choice;
    Cost cost = 0;

    std::size_t size() const { return order.size(); }

    friend bool operator==(const Tour &, const Tour &) = default;
};

inline std::size_t next_pos(std::size_t i, std::size_t m) { return i + 1 == m ? 0 : i + 1; }
inline std::size_t prev_pos(std::size_t i, std::size_t m) { return i == 0 ? m - 1 : i - 1; }
inline std::size_t wrap_pos(std::ptrdiff_t i, std::size_t m) {
    const auto mm = static_cast<std::ptrdiff_t>(m);
    return static_cast<std::size_t>(((i % mm) + mm) % mm);
}

// Full recomputation of the cycle cost; the reference every incremental update is checked against.
inline Cost tour_cost(const Instance &inst, const std::vector<int> &choice) {
    const std::size_t m = choice.size();
    if (m < 2) return 0;
    Cost total = 0;
    for (std::size_t i = 0; i < m; ++i) total += inst.edge_cost(choice[i], choice[next_pos(i, m)]);
    return total;
}

inline Cost tour_cost(const Instance &inst, const Tour &t) { return tour_cost(inst, t.choice); }

// Builds a tour and fills in its cost.
inline Tour make_tour(const Instance &inst, std::vector<int> order, std::vector<int> choice) {
    Tour t{std::move(order), std::move(choice), 0};
    t.cost = tour_cost(inst, t.choice);
    return t;
}

inline const std::vector<int> &cluster_sequence(const Tour &t) { return t.order; }

struct Validity {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

inline Validity is_valid_tour(const Instance &inst, const Tour &t) {
    const auto m = static_cast<std::size_t>(inst.m());
    if (t.order.size() != m) return {false, "order length " + std::to_string(t.order.size()) + " != m"};
    if (t.choice.size() != m) return {false, "choice length " + std::to_string(t.choice.size()) + " != m"};
    std::vector<bool> seen(m + 1, false);
    for (int c : t.order) {
        if (c < 1 || static_cast<std::size_t>(c) > m || seen[static_cast<std::size_t>(c)])
            return {false, "order not a permutation"};
        seen[static_cast<std::size_t>(c)] = true;
    }
    for (std::size_t i = 0; i < m; ++i) {
        const int v = t.choice[i];
        if (v < 1 || v > inst.n() || inst.cluster_of(v) != t.order[i])
            return {false, "choice/cluster mismatch at position " + std::to_string(i + 1)};
    }
    const Cost actual = tour_cost(inst, t);
    if (actual != t.cost)
        return {false, "cached cost " + std::to_string(t.cost) + " != recomputed " + std::to_string(actual)};
    return {};
}

// Same directed cycle up to rotation.
inline bool same_cycle(const std::vector<int> &a, const std::vector<int> &b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    const std::size_t m = a.size();
    for (std::size_t shift = 0; shift < m; ++shift) {
        if (b[shift] != a[0]) continue;
        bool equal = true;
        for (std::size_t i = 0; i < m && equal; ++i) equal = a[i] == b[(i + shift) % m];
        if (equal) return true;
    }
    return false;
}

// "cost;c1:v1,c2:v2,...,cm:vm"
inline std::string to_string(const Tour &t) {
    std::string out = std::to_string(t.cost) + ';';
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t.order[i]) + ':' + std::to_string(t.choice[i]);
    }
    return out;
}

inline Tour parse_tour(std::string_view text) {
    auto read_int = [](std::string_view s) {
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw std::invalid_argument("bad integer '" + std::string(s) + "' in tour text");
        return value;
    };
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw std::invalid_argument("tour text lacks ';'");
    Tour t;
    t.cost = read_int(text.substr(0, semi));
    auto rest = text.substr(semi + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) throw std::invalid_argument("tour item lacks ':'");
        t.order.push_back(static_cast<int>(read_int(item.substr(0, colon))));
        t.choice.push_back(static_cast<int>(read_int(item.substr(colon + 1))));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return t;
}

}  // namespace dsta
