#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "instance.hpp"
#include "neighbors.hpp"
#include "rng.hpp"
#include "tour.hpp"

namespace dsta {

enum class MoveKind { Swap, Shift, Symmetry, Circle };

// A transformed tour plus the positions (in the new tour) that gained a new edge.
struct MoveResult {
    Tour tour;
    std::vector<std::size_t> changed;
    bool guided = false;
};

namespace detail {

inline Cost cost(const Instance &inst, int u, int v) { return inst.cost_unchecked(u, v); }

// Forward cyclic distance from position a to position b.
inline std::size_t forward(std::size_t a, std::size_t b, std::size_t m) { return (b + m - a) % m; }

inline bool in_arc(std::size_t p, std::size_t start, std::size_t len, std::size_t m) {
    return forward(start, p, m) < len;
}

// Builds a tour from a sequence of old positions, rotated so the old first cluster stays first.
inline Tour gather(const Tour &t, const std::vector<std::size_t> &positions, Cost cost) {
    const std::size_t m = positions.size();
    const auto it = std::find(positions.begin(), positions.end(), std::size_t{0});
    const auto shift = static_cast<std::size_t>(it - positions.begin());
    Tour out;
    out.order.resize(m);
    out.choice.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t from = positions[(i + shift) % m];
        out.order[i] = t.order[from];
        out.choice[i] = t.choice[from];
    }
    out.cost = cost;
    return out;
}

// New-tour positions of the given clusters (deduplicated).
inline std::vector<std::size_t> positions_of(const Tour &t, std::initializer_list<int> clusters) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (std::find(clusters.begin(), clusters.end(), t.order[i]) != clusters.end()) out.push_back(i);
    return out;
}

inline std::vector<std::size_t> cluster_positions(const Tour &t) {
    std::vector<std::size_t> pos(t.size() + 1);
    for (std::size_t i = 0; i < t.size(); ++i) pos[static_cast<std::size_t>(t.order[i])] = i;
    return pos;
}

}  // namespace detail

// Moves the content of positions[i] to positions[i+1] (cyclically). Two positions: a transposition.
inline MoveResult apply_swap(const Instance &inst, const Tour &t, std::span<const std::size_t> positions) {
    const std::size_t m = t.size();
    const std::size_t k = positions.size();
    if (k < 2) throw std::invalid_argument("swap needs at least two positions");
    MoveResult res{t, {positions.begin(), positions.end()}};
    Tour &out = res.tour;
    for (std::size_t i = 0; i < k; ++i) {
        out.order[positions[(i + 1) % k]] = t.order[positions[i]];
        out.choice[positions[(i + 1) % k]] = t.choice[positions[i]];
    }
    std::vector<std::size_t> edges;
    for (std::size_t p : positions) {
        edges.push_back(prev_pos(p, m));
        edges.push_back(p);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Cost delta = 0;
    for (std::size_t e : edges) {
        const std::size_t f = next_pos(e, m);
        delta += detail::cost(inst, out.choice[e], out.choice[f]) - detail::cost(inst, t.choice[e], t.choice[f]);
    }
    out.cost += delta;
    return res;
}

// Removes the segment [start, start+len) and reinserts it after old position insert_after.
inline MoveResult apply_shift(const Instance &inst, const Tour &t, std::size_t start, std::size_t len,
                              std::size_t insert_after) {
    using detail::cost;
    const std::size_t m = t.size();
    if (len < 1 || len + 2 > m) throw std::invalid_argument("shift segment length out of range");
    if (detail::in_arc(insert_after, start, len, m) || insert_after == prev_pos(start, m))
        throw std::invalid_argument("shift insertion point must lie outside the segment and move it");

    const std::size_t rest_start = (start + len) % m;
    const std::size_t q = detail::forward(rest_start, insert_after, m);
    std::vector<std::size_t> seq;
    seq.reserve(m);
    for (std::size_t r = 0; r <= q; ++r) seq.push_back((rest_start + r) % m);
    for (std::size_t s = 0; s < len; ++s) seq.push_back((start + s) % m);
    for (std::size_t r = q + 1; r < m - len; ++r) seq.push_back((rest_start + r) % m);

    const auto &ch = t.choice;
    const int a = ch[prev_pos(start, m)], s0 = ch[start], se = ch[(start + len - 1) % m], b = ch[rest_start];
    const int x = ch[insert_after], y = ch[next_pos(insert_after, m)];
    const Cost delta = cost(inst, a, b) + cost(inst, x, s0) + cost(inst, se, y) - cost(inst, a, s0) -
                       cost(inst, se, b) - cost(inst, x, y);

    MoveResult res{detail::gather(t, seq, t.cost + delta), {}};
    const auto &o = t.order;
    res.changed = detail::positions_of(res.tour, {o[prev_pos(start, m)], o[start], o[(start + len - 1) % m],
                                                  o[rest_start], o[insert_after], o[next_pos(insert_after, m)]});
    return res;
}

// Reverses the window of 2*half+1 positions centred on `center`.
inline MoveResult apply_symmetry(const Instance &inst, const Tour &t, std::size_t center, std::size_t half) {
    using detail::cost;
    const std::size_t m = t.size();
    if (half < 1 || 2 * half + 1 > m) throw std::invalid_argument("symmetry half-length out of range");
    const std::size_t ws = wrap_pos(static_cast<std::ptrdiff_t>(center) - static_cast<std::ptrdiff_t>(half), m);
    const std::size_t we = (center + half) % m;
    Cost delta = 0;
    if (2 * half + 1 < m) {
        const auto &ch = t.choice;
        const int a = ch[prev_pos(ws, m)], s = ch[ws], e = ch[we], b = ch[next_pos(we, m)];
        delta = cost(inst, a, e) + cost(inst, s, b) - cost(inst, a, s) - cost(inst, e, b);
    }
    MoveResult res{t, {ws, we}};
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t l = (ws + k) % m;
        const std::size_t r = wrap_pos(static_cast<std::ptrdiff_t>(we) - static_cast<std::ptrdiff_t>(k), m);
        std::swap(res.tour.order[l], res.tour.order[r]);
        std::swap(res.tour.choice[l], res.tour.choice[r]);
    }
    res.tour.cost += delta;
    return res;
}

// Circle move. The arc A = [start, start+len) and the rest B are each closed into a circle.
// A is broken before its element at offset `break_at` (offset 0 breaks A's closing edge),
// optionally reversed, and spliced into B after B's element at index `insert_at`
// (the last index splices into B's closing edge, i.e. the original interface).
inline MoveResult apply_circle(const Instance &inst, const Tour &t, std::size_t start, std::size_t len,
                               std::size_t break_at, bool reversed, std::size_t insert_at) {
    using detail::cost;
    const std::size_t m = t.size();
    if (len < 1 || len >= m) throw std::invalid_argument("circle arc length out of range");
    const std::size_t blen = m - len;
    if (break_at >= len || insert_at >= blen) throw std::invalid_argument("circle break/insert index out of range");

    auto arc = [&](std::size_t i) { return (start + i) % m; };
    auto rest = [&](std::size_t i) { return (start + len + i) % m; };

    std::vector<std::size_t> path;
    for (std::size_t i = 0; i < len; ++i) path.push_back(arc((break_at + i) % len));
    if (reversed) std::reverse(path.begin(), path.end());

    std::vector<std::size_t> seq;
    seq.reserve(m);
    for (std::size_t i = 0; i <= insert_at; ++i) seq.push_back(rest(i));
    seq.insert(seq.end(), path.begin(), path.end());
    for (std::size_t i = insert_at + 1; i < blen; ++i) seq.push_back(rest(i));

    const auto &ch = t.choice;
    const int a_first = ch[arc(0)], a_last = ch[arc(len - 1)];
    const int b_first = ch[rest(0)], b_last = ch[rest(blen - 1)];
    const Cost close_a = cost(inst, a_last, a_first);
    const Cost close_b = cost(inst, b_last, b_first);
    const Cost broken_a = break_at > 0 ? cost(inst, ch[arc(break_at - 1)], ch[arc(break_at)]) : close_a;
    const Cost broken_b = insert_at + 1 < blen ? cost(inst, ch[rest(insert_at)], ch[rest(insert_at + 1)]) : close_b;
    const int head = ch[path.front()], tail = ch[path.back()];
    const int before = ch[rest(insert_at)], after = ch[rest((insert_at + 1) % blen)];
    const Cost delta = -cost(inst, a_last, b_first) - cost(inst, b_last, a_first) + close_a + close_b - broken_a -
                       broken_b + cost(inst, before, head) + cost(inst, tail, after);

    MoveResult res{detail::gather(t, seq, t.cost + delta), {}};
    const auto &o = t.order;
    res.changed = detail::positions_of(
        res.tour, {o[rest(insert_at)], o[path.front()], o[path.back()], o[rest((insert_at + 1) % blen)],
                   o[arc(0)], o[arc(len - 1)], o[rest(0)], o[rest(blen - 1)]});
    return res;
}

// ---- random operators ---------------------------------------------------------------------

// Exchanges s positions, s uniform in {2..max(2, m_a)} (capped at m).
inline MoveResult swap_move(const Instance &inst, const Tour &t, int m_a, Rng &rng) {
    const std::size_t m = t.size();
    if (m < 2) throw std::invalid_argument("swap needs m >= 2");
    const std::size_t upper = std::min<std::size_t>(m, static_cast<std::size_t>(std::max(2, m_a)));
    const std::size_t count = rng.uniform<std::size_t>(2, upper);
    std::vector<std::size_t> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = i;
    for (std::size_t i = 0; i < count; ++i) std::swap(all[i], all[i + rng.index(m - i)]);
    all.resize(count);
    return apply_swap(inst, t, all);
}

inline std::size_t max_shift_len(std::size_t m, int m_b) {
    return std::min<std::size_t>(static_cast<std::size_t>(std::max(1, m_b)), m - 2);
}

// Segment of length 1..m_b moved to a different gap.
inline MoveResult shift_move(const Instance &inst, const Tour &t, int m_b, Rng &rng) {
    const std::size_t m = t.size();
    if (m < 3) throw std::invalid_argument("shift needs m >= 3");
    const std::size_t len = rng.uniform<std::size_t>(1, max_shift_len(m, m_b));
    const std::size_t start = rng.index(m);
    const std::size_t q = rng.index(m - len - 1);
    return apply_shift(inst, t, start, len, (start + len + q) % m);
}

inline std::size_t max_symmetry_half(std::size_t m, int m_c) {
    return std::min<std::size_t>(static_cast<std::size_t>(std::max(1, m_c)), (m - 1) / 2);
}

inline MoveResult symmetry_move(const Instance &inst, const Tour &t, int m_c, Rng &rng) {
    const std::size_t m = t.size();
    if (m < 3) throw std::invalid_argument("symmetry needs m >= 3");
    const std::size_t half = rng.uniform<std::size_t>(1, max_symmetry_half(m, m_c));
    return apply_symmetry(inst, t, rng.index(m), half);
}

inline constexpr int max_resample = 64;

// Uniform over (arc start, arc length, break point, direction, insertion point); no-op results resampled.
inline MoveResult circle_move(const Instance &inst, const Tour &t, Rng &rng) {
    const std::size_t m = t.size();
    if (m < 4) throw std::invalid_argument("circle needs m >= 4");
    for (;;) {
        const std::size_t len = rng.uniform<std::size_t>(1, m - 1);
        const std::size_t start = rng.index(m);
        const std::size_t brk = rng.index(len);
        const bool rev = len > 1 && rng.chance(0.5);
        const std::size_t ins = rng.index(m - len);
        auto res = apply_circle(inst, t, start, len, brk, rev, ins);
        if (!same_cycle(res.tour.order, t.order)) return res;
    }
}

// ---- K-Neighbor guidance ------------------------------------------------------------------

// Samples cluster u uniformly and v uniformly from u's K-Neighbor list, rejecting pairs that
// are already adjacent. Returns the tour positions of (u, v).
inline std::optional<std::pair<std::size_t, std::size_t>> guided_positions(const Tour &t, const NeighborModel &nm,
                                                                          Rng &rng) {
    const std::size_t m = t.size();
    const auto pos = detail::cluster_positions(t);
    for (int attempt = 0; attempt < max_resample; ++attempt) {
        const int u = rng.uniform<int>(1, static_cast<int>(m));
        const auto &list = nm.neighbors_of(u);
        if (list.empty()) continue;
        const int v = list[rng.index(list.size())];
        const std::size_t pu = pos[static_cast<std::size_t>(u)], pv = pos[static_cast<std::size_t>(v)];
        if (next_pos(pu, m) == pv || next_pos(pv, m) == pu) continue;
        return std::pair{pu, pv};
    }
    return std::nullopt;
}

// k-shift: moves a segment that starts or ends at u so that u becomes adjacent to v.
inline std::optional<MoveResult> k_shift_at(const Instance &inst, const Tour &t, std::size_t pu, std::size_t pv,
                                            int m_b, Rng &rng) {
    const std::size_t m = t.size();
    const std::size_t len = rng.uniform<std::size_t>(1, max_shift_len(m, m_b));
    const bool after_v = rng.chance(0.5);
    for (int side = 0; side < 2; ++side) {
        const bool use_after = (side == 0) == after_v;
        if (use_after) {
            // segment [u, u+len) lands right after v
            if (!detail::in_arc(pv, pu, len, m)) return apply_shift(inst, t, pu, len, pv);
        } else {
            // segment (u-len, u] lands right before v
            const std::size_t start = wrap_pos(static_cast<std::ptrdiff_t>(pu) - static_cast<std::ptrdiff_t>(len) + 1, m);
            if (!detail::in_arc(pv, start, len, m)) return apply_shift(inst, t, start, len, prev_pos(pv, m));
        }
    }
    return std::nullopt;
}

// k-symmetry: a reversal window whose new boundary edge joins u and v.
inline std::optional<MoveResult> k_symmetry_at(const Instance &inst, const Tour &t, std::size_t pu, std::size_t pv,
                                               int m_c, Rng &rng) {
    const std::size_t m = t.size();
    const std::size_t max_len = 2 * max_symmetry_half(m, m_c) + 1;
    std::vector<std::size_t> starts, lengths;
    auto consider = [&](std::size_t start, std::size_t len) {
        if (len >= 3 && len <= max_len && len % 2 == 1) {
            starts.push_back(start);
            lengths.push_back(len);
        }
    };
    const std::size_t uv = detail::forward(pu, pv, m), vu = detail::forward(pv, pu, m);
    consider(next_pos(pu, m), uv);  // u left of window, v at its end
    consider(next_pos(pv, m), vu);  // v left of window, u at its end
    consider(pu, uv);               // u at window start, v right of it
    consider(pv, vu);               // v at window start, u right of it
    if (starts.empty()) return std::nullopt;
    const std::size_t pick = rng.index(starts.size());
    const std::size_t half = (lengths[pick] - 1) / 2;
    return apply_symmetry(inst, t, (starts[pick] + half) % m, half);
}

// k-circle: arc containing one of (u, v) is spliced next to the other.
inline std::optional<MoveResult> k_circle_at(const Instance &inst, const Tour &t, std::size_t pu, std::size_t pv,
                                             Rng &rng) {
    const std::size_t m = t.size();
    const bool u_inside = rng.chance(0.5);
    const std::size_t pa = u_inside ? pu : pv;
    const std::size_t pb = u_inside ? pv : pu;
    const std::size_t room = detail::forward(pb, pa, m);  // A may start at most room-1 before pa
    const std::size_t reach = detail::forward(pa, pb, m);  // and extend at most reach-1 past pa
    for (int attempt = 0; attempt < max_resample; ++attempt) {
        const std::size_t offset = rng.index(room);
        const std::size_t len = offset + rng.uniform<std::size_t>(1, reach);
        const std::size_t start = wrap_pos(static_cast<std::ptrdiff_t>(pa) - static_cast<std::ptrdiff_t>(offset), m);
        const std::size_t blen = m - len;
        const std::size_t ib = detail::forward((start + len) % m, pb, m);
        const bool rev = len > 1 && rng.chance(0.5);
        const bool as_head = rng.chance(0.5);
        std::size_t brk = 0, ins = 0;
        if (as_head) {
            brk = rev ? (offset + 1) % len : offset;
            ins = ib;
        } else {
            brk = rev ? offset : (offset + 1) % len;
            ins = (ib + blen - 1) % blen;
        }
        auto res = apply_circle(inst, t, start, len, brk, rev, ins);
        if (!same_cycle(res.tour.order, t.order)) {
            res.guided = true;
            return res;
        }
    }
    return std::nullopt;
}

template <typename Construct>
std::optional<MoveResult> guided(const Tour &t, const NeighborModel &nm, Rng &rng, Construct construct) {
    for (int attempt = 0; attempt < max_resample; ++attempt) {
        const auto pair = guided_positions(t, nm, rng);
        if (!pair) return std::nullopt;
        if (auto res = construct(pair->first, pair->second)) {
            res->guided = true;
            return res;
        }
    }
    return std::nullopt;
}

// Guided operators fall back to their unguided form when no valid guided move is found.
inline MoveResult k_shift_move(const Instance &inst, const Tour &t, const NeighborModel &nm, int m_b, Rng &rng) {
    if (auto res = guided(t, nm, rng, [&](auto pu, auto pv) { return k_shift_at(inst, t, pu, pv, m_b, rng); }))
        return *res;
    return shift_move(inst, t, m_b, rng);
}

inline MoveResult k_symmetry_move(const Instance &inst, const Tour &t, const NeighborModel &nm, int m_c, Rng &rng) {
    if (auto res = guided(t, nm, rng, [&](auto pu, auto pv) { return k_symmetry_at(inst, t, pu, pv, m_c, rng); }))
        return *res;
    return symmetry_move(inst, t, m_c, rng);
}

inline MoveResult k_circle_move(const Instance &inst, const Tour &t, const NeighborModel &nm, Rng &rng) {
    if (auto res = guided(t, nm, rng, [&](auto pu, auto pv) { return k_circle_at(inst, t, pu, pv, rng); }))
        return *res;
    return circle_move(inst, t, rng);
}

}  // namespace dsta
