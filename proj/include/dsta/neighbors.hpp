#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "instance.hpp"

namespace dsta {

// Dense square matrix of doubles, row-major, 0-based.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t size, double fill = 0.0) : size_(size), values_(size * size, fill) {}

    std::size_t size() const { return size_; }
    double &operator()(std::size_t i, std::size_t j) { return values_[i * size_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i * size_ + j]; }

    double row_sum(std::size_t i) const {
        return std::accumulate(values_.begin() + static_cast<std::ptrdiff_t>(i * size_),
                               values_.begin() + static_cast<std::ptrdiff_t>((i + 1) * size_), 0.0);
    }

private:
    std::size_t size_ = 0;
    std::vector<double> values_;
};

class DegenerateGeometry : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Distances between cluster centres. Coordinate instances use Euclidean distance between
// unrounded centroids; EXPLICIT instances fall back to the mean inter-cluster edge cost.
inline Matrix centroid_distances(const Instance &inst) {
    const auto m = static_cast<std::size_t>(inst.m());
    Matrix d(m);
    if (inst.has_coords()) {
        std::vector<Point> centre(m);
        for (std::size_t c = 0; c < m; ++c) {
            const auto &members = inst.clusters()[c];
            for (int v : members) {
                centre[c].x += inst.coord(v).x;
                centre[c].y += inst.coord(v).y;
            }
            centre[c].x /= static_cast<double>(members.size());
            centre[c].y /= static_cast<double>(members.size());
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                d(i, j) = d(j, i) = std::hypot(centre[i].x - centre[j].x, centre[i].y - centre[j].y);
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                const auto &a = inst.clusters()[i];
                const auto &b = inst.clusters()[j];
                double total = 0.0;
                for (int u : a)
                    for (int v : b) total += static_cast<double>(inst.edge_cost(u, v));
                d(i, j) = d(j, i) = total / static_cast<double>(a.size() * b.size());
            }
        }
    }
    return d;
}

// r(i,j) = (1 - d(i,j)/d_i) / (m - 1), with d_i the row sum of d. Rows sum to one.
inline Matrix correlation_matrix(const Matrix &d) {
    const std::size_t m = d.size();
    if (m < 2) throw DegenerateGeometry("correlation needs at least two clusters");
    Matrix r(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double di = d.row_sum(i);
        if (!(di > 0.0)) throw DegenerateGeometry("cluster " + std::to_string(i + 1) + " coincides with all others");
        for (std::size_t j = 0; j < m; ++j) r(i, j) = (1.0 - d(i, j) / di) / static_cast<double>(m - 1);
    }
    return r;
}

// p(i,j) = r(i,j) r(j,i) / sum_{l != i} r(i,l) r(l,i); the diagonal is zero.
inline Matrix relevancy_matrix(const Matrix &r) {
    const std::size_t m = r.size();
    Matrix p(m);
    for (std::size_t i = 0; i < m; ++i) {
        double denom = 0.0;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) denom += r(i, j) * r(j, i);
        if (!(denom > 0.0)) throw DegenerateGeometry("relevancy row " + std::to_string(i + 1) + " has zero mass");
        for (std::size_t j = 0; j < m; ++j) p(i, j) = j == i ? 0.0 : r(i, j) * r(j, i) / denom;
    }
    return p;
}

// Top-k clusters per row of p (1-based ids), descending relevancy, ties by ascending id, self excluded.
inline std::vector<std::vector<int>> k_neighbor_table(const Matrix &p, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const std::size_t m = p.size();
    const std::size_t keep = std::min<std::size_t>(static_cast<std::size_t>(k), m == 0 ? 0 : m - 1);
    std::vector<std::vector<int>> table(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) others.push_back(j);
        std::stable_sort(others.begin(), others.end(),
                         [&](std::size_t a, std::size_t b) { return p(i, a) > p(i, b); });
        for (std::size_t t = 0; t < keep; ++t) table[i].push_back(static_cast<int>(others[t] + 1));
    }
    return table;
}

// Static search guidance built once per instance.
struct NeighborModel {
    Matrix centroid_dist;
    std::vector<double> row_sums;
    Matrix correlation;
    Matrix relevancy;
    std::vector<std::vector<int>> k_neighbors;  // indexed by cluster id - 1

    const std::vector<int> &neighbors_of(int cluster) const {
        return k_neighbors.at(static_cast<std::size_t>(cluster - 1));
    }

    static NeighborModel build(const Instance &inst, int k) {
        NeighborModel nm;
        nm.centroid_dist = centroid_distances(inst);
        for (std::size_t i = 0; i < nm.centroid_dist.size(); ++i) nm.row_sums.push_back(nm.centroid_dist.row_sum(i));
        nm.correlation = correlation_matrix(nm.centroid_dist);
        nm.relevancy = relevancy_matrix(nm.correlation);
        nm.k_neighbors = k_neighbor_table(nm.relevancy, k);
        return nm;
    }
};

// CSV of p with cluster ids as header row and first column.
inline void write_relevancy_csv(std::ostream &out, const Matrix &p) {
    const auto old_precision = out.precision(17);
    out << "cluster";
    for (std::size_t j = 0; j < p.size(); ++j) out << ',' << j + 1;
    out << '\n';
    for (std::size_t i = 0; i < p.size(); ++i) {
        out << i + 1;
        for (std::size_t j = 0; j < p.size(); ++j) out << ',' << p(i, j);
        out << '\n';
    }
    out.precision(old_precision);
}

}  // namespace dsta
