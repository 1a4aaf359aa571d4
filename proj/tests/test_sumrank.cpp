#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "lrsnc/netsim.hpp"
#include "lrsnc/sumrank.hpp"

using namespace lrsnc;

namespace {

TEST(OrderedPartition, Basics) {
    const OrderedPartition p({2, 3, 1});
    EXPECT_EQ(p.length(), 6u);
    EXPECT_EQ(p.blocks(), 3u);
    EXPECT_EQ(p.offset(2), 5u);
    EXPECT_EQ(p.to_string(), "2 3 1");
    EXPECT_THROW(OrderedPartition({2, 0}), std::invalid_argument);
    EXPECT_EQ(OrderedPartition::singletons(3), OrderedPartition({1, 1, 1}));
}

TEST(SumRankWeight, ExtremePartitions) {
    // Singletons give the Hamming weight, one block gives the rank weight.
    std::mt19937_64 rng(1);
    const auto F = FieldTower::make(3, 1, 3);
    for (int it = 0; it < 200; ++it) {
        std::vector<Elem> x(5);
        for (auto& v : x) v = rng() % 3 ? random_element(F, rng) : F.zero();
        EXPECT_EQ(sum_rank_weight(F, x, OrderedPartition::singletons(5)), hamming_weight(x));
        EXPECT_EQ(sum_rank_weight(F, x, OrderedPartition::whole(5)), rank_q(F, x));
    }
}

TEST(SumRankWeight, SmallExample) {
    const auto F = FieldTower::make(3, 1, 2);
    const Elem g = F.gamma();
    // block 1 = (1, 2): rank 1; block 2 = (γ, 1): rank 2
    const std::vector<Elem> x{F.one(), Elem{2}, g, F.one()};
    EXPECT_EQ(sum_rank_weight(F, x, OrderedPartition({2, 2})), 3u);
    EXPECT_EQ(sum_rank_weight(F, x, OrderedPartition({4})), 2u);
}

TEST(SumRankWeight, MetricProperties) {
    std::mt19937_64 rng(2);
    const auto F = FieldTower::make(2, 2, 2);
    const OrderedPartition part({3, 2, 2});
    for (int it = 0; it < 200; ++it) {
        std::vector<Elem> x(7), y(7), z(7);
        for (std::size_t j = 0; j < 7; ++j) {
            x[j] = random_element(F, rng);
            y[j] = random_element(F, rng);
            z[j] = random_element(F, rng);
        }
        const auto dxy = sum_rank_distance(F, x, y, part);
        EXPECT_EQ(dxy, sum_rank_distance(F, y, x, part));
        EXPECT_LE(sum_rank_distance(F, x, z, part), dxy + sum_rank_distance(F, y, z, part));
        EXPECT_EQ(sum_rank_distance(F, x, x, part), 0u);
        EXPECT_LE(sum_rank_weight(F, x, part), hamming_weight(x));
        // F_{q^m}-scaling preserves weight
        const Elem c = random_nonzero(F, rng);
        auto cx = x;
        for (auto& v : cx) v = F.mul(c, v);
        EXPECT_EQ(sum_rank_weight(F, cx, part), sum_rank_weight(F, x, part));
    }
}

TEST(SumRankWeight, MatrixOrientations) {
    const auto F = FieldTower::make(2, 1, 3);
    Matrix<Elem> M(3, 4, F.zero());
    M(0, 0) = F.one();
    M(1, 1) = F.one();
    M(2, 0) = F.one();
    M(2, 1) = F.one();
    EXPECT_EQ(sum_rank_weight(F, M, OrderedPartition({2, 2}), Orientation::columns), 2u);
    EXPECT_EQ(sum_rank_weight(F, M, OrderedPartition({1, 2}), Orientation::rows), 3u);
    EXPECT_THROW(sum_rank_weight(F, M, OrderedPartition({2}), Orientation::rows), std::invalid_argument);
}

TEST(RandomError, HasRequestedWeight) {
    std::mt19937_64 rng(3);
    const auto F = FieldTower::make(3, 1, 3);
    const OrderedPartition part({2, 3, 2});
    for (int it = 0; it < 100; ++it) {
        const std::size_t w = rng() % 8;
        EXPECT_EQ(sum_rank_weight(F, random_sum_rank_error(F, part, w, rng), part), w);
    }
    EXPECT_THROW(random_sum_rank_error(F, part, 8, rng), std::invalid_argument);
}

TEST(BruteForce, MdsDistanceOfRepetitionLikeCodes) {
    const auto F = FieldTower::make(3, 1, 2);
    Matrix<Elem> G(1, 3, F.one());
    EXPECT_EQ(min_distance_bruteforce(F, G, OrderedPartition::singletons(3)), 3u);
    EXPECT_EQ(min_distance_bruteforce(F, G, OrderedPartition::whole(3)), 1u);
    Matrix<Elem> H(2, 2, F.zero());
    H(0, 0) = F.one();
    H(1, 1) = F.one();
    EXPECT_EQ(min_distance_bruteforce(F, H, OrderedPartition::singletons(2)), 1u);
}

TEST(BruteForce, Guard) {
    const auto F = FieldTower::make(2, 1, 8);
    Matrix<Elem> G(3, 4, F.one());
    EXPECT_THROW(min_distance_bruteforce(F, G, OrderedPartition::whole(4)), guard_exceeded);
}

TEST(BruteForce, DecodeRepetitionCode) {
    const auto F = FieldTower::make(3, 1, 2);
    Matrix<Elem> G(1, 3, F.one());
    const auto part = OrderedPartition::singletons(3);
    std::vector<Elem> y{F.gamma(), F.gamma(), F.one()};
    auto r = bruteforce_decode(F, G, part, y);
    EXPECT_EQ(r.radius, 1u);
    ASSERT_EQ(r.status, DecodeStatus::decoded);
    EXPECT_EQ(r.message, std::vector<Elem>{F.gamma()});
    EXPECT_EQ(r.distance, 1u);

    // One erasure drops the radius to 0 but still recovers from the rest.
    const std::vector<std::size_t> er{2};
    r = bruteforce_decode(F, G, part, y, er);
    EXPECT_EQ(r.radius, 0u);
    EXPECT_EQ(r.status, DecodeStatus::decoded);

    // Three distinct symbols: nothing within radius 1, several nearest codewords.
    y = {F.one(), F.gamma(), Elem{2}};
    r = bruteforce_decode(F, G, part, y);
    EXPECT_EQ(r.status, DecodeStatus::ambiguous);
    EXPECT_EQ(to_string(r.status), "ambiguous");
}

}  // namespace
