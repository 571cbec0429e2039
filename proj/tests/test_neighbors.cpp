#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include <dsta/neighbors.hpp>

#include "support.hpp"

using namespace dsta;
using dsta::testing::coords_instance;

namespace {

Instance collinear() { return coords_instance({{0, 0}, {1, 0}, {3, 0}}, {{1}, {2}, {3}}); }

Instance equilateral() { return coords_instance({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}, {{1}, {2}, {3}}); }

}  // namespace

TEST(CentroidDistances, Midpoints) {
    const Instance inst = coords_instance({{0, 0}, {0, 2}, {4, 0}, {4, 2}}, {{1, 2}, {3, 4}});
    const Matrix d = centroid_distances(inst);
    EXPECT_DOUBLE_EQ(d(0, 1), 4.0);
    EXPECT_DOUBLE_EQ(d(1, 0), 4.0);
    EXPECT_DOUBLE_EQ(d(0, 0), 0.0);
}

TEST(CentroidDistances, EquilateralSingletons) {
    const Matrix d = centroid_distances(equilateral());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(d(i, j), i == j ? 0.0 : 1.0, 1e-15);
}

TEST(CentroidDistances, ExplicitFallsBackToMeanPairCost) {
    // clusters {1,2} and {3}: costs 1-3 = 4, 2-3 = 8
    const Instance inst = dsta::testing::explicit_instance(3, {1, 4, 8}, {{1, 2}, {3}});
    const Matrix d = centroid_distances(inst);
    EXPECT_DOUBLE_EQ(d(0, 1), 6.0);
    EXPECT_DOUBLE_EQ(d(1, 1), 0.0);
}

TEST(CorrelationMatrix, HandExamples) {
    const Matrix re = correlation_matrix(centroid_distances(equilateral()));
    EXPECT_NEAR(re(0, 1), 0.25, 1e-12);
    EXPECT_NEAR(re(0, 0), 0.5, 1e-12);

    const Matrix rc = correlation_matrix(centroid_distances(collinear()));
    EXPECT_NEAR(rc(0, 1), 0.375, 1e-12);
    EXPECT_NEAR(rc(0, 2), 0.125, 1e-12);
    EXPECT_NEAR(rc(1, 0), 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(rc(2, 0), 0.2, 1e-12);
}

TEST(CorrelationMatrix, DegenerateGeometry) {
    const Instance inst = coords_instance({{1, 1}, {1, 1}}, {{1}, {2}});
    EXPECT_THROW(correlation_matrix(centroid_distances(inst)), DegenerateGeometry);
}

TEST(RelevancyMatrix, HandExamples) {
    const Matrix pc = relevancy_matrix(correlation_matrix(centroid_distances(collinear())));
    EXPECT_NEAR(pc(0, 1), 5.0 / 6.0, 1e-12);
    EXPECT_NEAR(pc(0, 2), 1.0 / 6.0, 1e-12);
    EXPECT_EQ(pc(0, 0), 0.0);

    const Matrix pe = relevancy_matrix(correlation_matrix(centroid_distances(equilateral())));
    EXPECT_NEAR(pe(0, 1), 0.5, 1e-12);
    EXPECT_NEAR(pe(0, 2), 0.5, 1e-12);
}

TEST(KNeighborTable, OrderingAndSaturation) {
    const Matrix pc = relevancy_matrix(correlation_matrix(centroid_distances(collinear())));
    EXPECT_EQ(k_neighbor_table(pc, 1)[0], (std::vector<int>{2}));
    const auto all = k_neighbor_table(pc, 5);
    EXPECT_EQ(all[0], (std::vector<int>{2, 3}));
    EXPECT_EQ(all[2].size(), 2u);

    const Matrix pe = relevancy_matrix(correlation_matrix(centroid_distances(equilateral())));
    EXPECT_EQ(k_neighbor_table(pe, 1)[0], (std::vector<int>{2}));
    EXPECT_THROW(k_neighbor_table(pe, 0), std::invalid_argument);
}

TEST(NeighborModel, RowStochasticScaleFreeAndSelfFree) {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const Instance inst = dsta::testing::random_instance(rng, rng.uniform(3, 40), 5);
        const auto nm = NeighborModel::build(inst, 8);
        const auto m = static_cast<std::size_t>(inst.m());
        for (std::size_t i = 0; i < m; ++i) {
            EXPECT_NEAR(nm.correlation.row_sum(i), 1.0, 1e-9);
            EXPECT_NEAR(nm.relevancy.row_sum(i), 1.0, 1e-9);
            const auto &list = nm.k_neighbors[i];
            EXPECT_EQ(list.size(), std::min<std::size_t>(8, m - 1));
            EXPECT_EQ(std::count(list.begin(), list.end(), static_cast<int>(i + 1)), 0);
            for (std::size_t a = 1; a < list.size(); ++a)
                EXPECT_GE(nm.relevancy(i, static_cast<std::size_t>(list[a - 1] - 1)),
                          nm.relevancy(i, static_cast<std::size_t>(list[a] - 1)));
        }

        InstanceData scaled = inst.data();
        for (auto &p : scaled.coords) p = {p.x * 3.5, p.y * 3.5};
        const auto nm2 = NeighborModel::build(Instance(scaled), 8);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                EXPECT_NEAR(nm2.correlation(i, j), nm.correlation(i, j), 1e-12);
                EXPECT_NEAR(nm2.relevancy(i, j), nm.relevancy(i, j), 1e-12);
            }
        EXPECT_EQ(nm2.k_neighbors, nm.k_neighbors);
        EXPECT_EQ(NeighborModel::build(inst, 8).k_neighbors, nm.k_neighbors);
    }
}

TEST(NeighborModel, RelevancyCsvDump) {
    const Matrix pe = relevancy_matrix(correlation_matrix(centroid_distances(equilateral())));
    std::ostringstream out;
    write_relevancy_csv(out, pe);
    const std::string csv = out.str();
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "cluster,1,2,3");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
    EXPECT_EQ(csv.substr(csv.find('\n') + 1, 4), "1,0,");
}
