#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "lrsnc/netsim.hpp"

using namespace lrsnc;

namespace {

NetworkInstance toy(std::size_t ell) {
    NetworkInstance inst;
    inst.h = 4;
    inst.r = {1, 3, 2, 3};
    inst.S = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    inst.t = 2;
    inst.rho = 2;
    inst.ell = ell;
    return inst;
}

NetworkInstance singletons() {
    NetworkInstance inst = toy(1);
    inst.S = {{0}, {1}, {2}, {3}};
    return inst;
}

TEST(Designer, ToyNetworkMinimalLengths) {
    const std::vector<std::size_t> want_n{15, 19, 23, 27};
    for (std::size_t ell = 1; ell <= 4; ++ell) {
        const auto inst = toy(ell);
        const auto ld = design_lengths(inst);
        EXPECT_EQ(ld.n, want_n[ell - 1]) << "ell=" << ell;
        EXPECT_TRUE(lengths_feasible(inst, ld.n_J));
        std::size_t sum = 0;
        for (auto x : ld.n_J) sum += x;
        EXPECT_EQ(sum, ld.n);
    }
}

TEST(Designer, PublishedTupleIsFeasibleButNotSmaller) {
    const auto inst = toy(3);
    const std::vector<std::size_t> published{6, 7, 2, 8};
    EXPECT_TRUE(lengths_feasible(inst, published));
    const std::vector<std::size_t> short_by_one{6, 7, 2, 7};
    const auto why = violated_constraint(inst, short_by_one);
    ASSERT_TRUE(why.has_value());
    EXPECT_NE(why->find("constraint"), std::string::npos);
}

TEST(Designer, OptimalityByExhaustion) {
    // No tuple of total n - 1 passes for a small instance.
    NetworkInstance inst;
    inst.h = 2;
    inst.r = {1, 2};
    inst.S = {{0}, {0, 1}, {1}};
    inst.t = 1;
    inst.rho = 1;
    inst.ell = 2;
    const auto ld = design_lengths(inst);
    const std::size_t cap = inst.k() + 2 * inst.ell * inst.t + inst.rho;
    for (std::size_t a = 0; a <= cap; ++a)
        for (std::size_t b = 0; b <= cap; ++b)
            for (std::size_t c = 0; c <= cap; ++c) {
                const std::vector<std::size_t> x{a, b, c};
                if (a + b + c < ld.n) {
                    EXPECT_FALSE(lengths_feasible(inst, x));
                }
                if (a + b + c == ld.n && lengths_feasible(inst, x)) {
                    EXPECT_LE(ld.n_J, x);
                }
            }
}

TEST(Designer, InfeasibleWhenMessageUnheld) {
    NetworkInstance inst = toy(1);
    inst.S = {{0, 1}, {1, 2}};
    EXPECT_THROW(design_lengths(inst), infeasible);
    EXPECT_THROW(build_distributed_code(inst), infeasible);
}

TEST(Designer, GuardsAndValidation) {
    NetworkInstance inst = toy(1);
    inst.r = {1, 2};
    EXPECT_THROW(design_lengths(inst), std::invalid_argument);
    inst = toy(1);
    inst.h = 11;
    inst.r.assign(11, 1);
    EXPECT_THROW(design_lengths(inst), guard_exceeded);
}

TEST(Mincut, MatchesDefinition) {
    const auto inst = toy(3);
    const std::vector<std::size_t> nJ{2, 7, 6, 8};
    const std::vector<std::size_t> m1{0};
    EXPECT_EQ(mincut(inst, nJ, m1), 15u);  // source 4 lacks message 1
    const std::vector<std::size_t> all{0, 1, 2, 3};
    EXPECT_EQ(mincut(inst, nJ, all), 23u);
}

TEST(KTilde, MessageLevelMatchesRowLevel) {
    for (std::size_t ell = 1; ell <= 3; ++ell) {
        const auto inst = toy(ell);
        const auto ld = design_lengths(inst);
        const auto sc = derive_zero_sets(inst.S, inst.r, ld.n_J);
        EXPECT_EQ(message_level_k_tilde(inst, ld.n_J), k_tilde(sc));
    }
}

TEST(SplitBlocks, NearEqual) {
    EXPECT_EQ(split_blocks(23, 3), OrderedPartition({8, 7, 8}));
    EXPECT_EQ(split_blocks(19, 2), OrderedPartition({10, 9}));
    EXPECT_EQ(split_blocks(27, 4), OrderedPartition({7, 7, 6, 7}));
    EXPECT_EQ(split_blocks(15, 1), OrderedPartition({15}));
    for (std::size_t n = 1; n < 40; ++n)
        for (std::size_t ell = 1; ell <= std::min<std::size_t>(n, 6); ++ell) {
            const auto p = split_blocks(n, ell);
            EXPECT_EQ(p.length(), n);
            std::size_t lo = n, hi = 0;
            for (auto x : p.parts()) lo = std::min(lo, x), hi = std::max(hi, x);
            EXPECT_LE(hi - lo, 1u);
        }
    EXPECT_THROW(split_blocks(2, 3), std::invalid_argument);
}

TEST(BuildCode, ToyEll3) {
    const auto d = build_distributed_code(toy(3));
    EXPECT_EQ(d.n, 23u);
    EXPECT_EQ(d.k, 9u);
    EXPECT_EQ(d.k_tilde, 9u);
    EXPECT_EQ(d.d, 15u);
    EXPECT_EQ(d.field.q, 4u);
    EXPECT_EQ(d.blocks, OrderedPartition({8, 7, 8}));
    ASSERT_TRUE(d.code.has_value());
    EXPECT_TRUE(verify_support(d.code->G, d.code->sc).empty());
    EXPECT_EQ(rank(top_ops(d.code->code.field), d.code->G), 9u);
}

TEST(BuildCode, SingletonsAreParametersOnly) {
    const auto d = build_distributed_code(singletons());
    EXPECT_EQ(d.n, 33u);
    EXPECT_EQ(d.k_tilde, 27u);
    EXPECT_EQ(d.d, 7u);
    EXPECT_FALSE(d.code.has_value());
    EXPECT_NE(d.note.find("parameters only"), std::string::npos);
}

TEST(Channel, NoiselessLiftRoundTrip) {
    std::mt19937_64 rng(1);
    const auto F = FieldTower::make(3, 1, 3);
    const std::vector<std::size_t> nJ{2, 1, 3};
    for (int it = 0; it < 50; ++it) {
        std::vector<Elem> c(6);
        for (auto& v : c) v = random_element(F, rng);
        const auto X = lift(F, source_blocks(F, c, nJ));
        EXPECT_EQ(X.rows(), 6u);
        EXPECT_EQ(X.cols(), 9u);
        const auto ch = sample_channel(F, 6, 8, 9, 0, 0, trial_seed(5, static_cast<std::uint64_t>(it)));
        EXPECT_EQ(ch.frozen, 0u);
        const auto back = recover_codeword(F, transmit(F, X, ch), 6);
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, c);
    }
}

TEST(Channel, ErasuresHideCodeword) {
    const auto F = FieldTower::make(2, 1, 3);
    std::vector<Elem> c{F.one(), F.gamma(), F.one()};
    const std::vector<std::size_t> nJ{3};
    const auto X = lift(F, source_blocks(F, c, nJ));
    // N = 2 < n forces at least one frozen coordinate
    const auto ch = sample_channel(F, 3, 2, X.cols(), 0, 1, 4);
    EXPECT_EQ(ch.frozen, 1u);
    EXPECT_FALSE(recover_codeword(F, transmit(F, X, ch), 3).has_value());
}

TEST(Channel, SeedsAreReproducible) {
    const auto F = FieldTower::make(3, 1, 2);
    const auto a = sample_channel(F, 4, 4, 6, 1, 1, 99);
    const auto b = sample_channel(F, 4, 4, 6, 1, 1, 99);
    EXPECT_EQ(a.A, b.A);
    EXPECT_EQ(a.E, b.E);
    EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
}

TEST(Channel, AuditBoundsHold) {
    const auto F = FieldTower::make(3, 1, 2);
    const OrderedPartition rows({4, 4}), cols({4, 4});
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto ch = sample_channel(F, 8, 8, 8, 1, 2, trial_seed(7, s));
        const auto a = audit_weights(F, ch, rows, cols, 1, 2);
        EXPECT_TRUE(a.erasure_ok);
        EXPECT_TRUE(a.error_ok);
        EXPECT_LE(a.rank_E, ch.malicious);
        EXPECT_GE(a.wt_E, a.rank_E);
        EXPECT_LE(ch.frozen, 2u);
    }
}

TEST(Channel, MonteCarloReproducesProbabilityBound) {
    const auto F = FieldTower::make(3, 1, 2);
    const auto rep = monte_carlo_audit(F, OrderedPartition({4, 4}), OrderedPartition({4, 4}), 8, 1, 0, 400, 11);
    EXPECT_EQ(rep.bounds_ok, rep.trials);
    EXPECT_GT(rep.rank_t, 0u);
    EXPECT_GT(rep.probability(), 0.25);
}

}  // namespace
