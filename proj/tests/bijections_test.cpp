#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "fishburn/bijections.hpp"
#include "fishburn/statistics.hpp"

using namespace fishburn;

namespace {

FishburnMatrix M(std::vector<std::vector<Entry>> rows) { return FishburnMatrix::from_rows(rows); }

const FishburnMatrix kRemovalA = M({{1, 2, 0, 0}, {0, 2, 1, 0}, {0, 0, 2, 1}, {0, 0, 0, 2}});
const FishburnMatrix kRemovalB = M({{1, 0, 2, 0}, {0, 3, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 1}});
const FishburnMatrix kRemovalC =
    M({{2, 4, 1, 3, 0}, {0, 5, 2, 2, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 3}, {0, 0, 0, 0, 2}});
const FishburnMatrix kAdditionA = M({{2, 4, 0, 3}, {0, 5, 0, 2}, {0, 0, 1, 3}, {0, 0, 0, 2}});

// Random ascent sequence of length n, each entry uniform in its allowed range.
std::vector<int> random_ascent_sequence(std::mt19937& rng, int n) {
    std::vector<int> xs{0};
    int asc = 0;
    while (static_cast<int>(xs.size()) < n) {
        std::uniform_int_distribution<int> pick(0, asc + 1);
        int v = pick(rng);
        if (xs.back() < v) ++asc;
        xs.push_back(v);
    }
    return xs;
}

}  // namespace

TEST(Theta, GoldenExamples) {
    EXPECT_EQ(theta(Permutation{8, 5, 2, 3, 1, 6, 4, 7}), (AscentSequence{0, 1, 1, 0, 2, 1, 0, 3}));
    EXPECT_EQ(theta(Permutation{1}), AscentSequence{0});
    EXPECT_EQ(theta(Permutation{5, 3, 4, 7, 2, 6, 8, 1}), (AscentSequence{0, 1, 2, 2, 3, 1, 3, 1}));
    EXPECT_EQ(theta(Permutation{1, 2, 3}), (AscentSequence{0, 0, 0}));
}

TEST(Theta, Inverse) {
    EXPECT_EQ(theta_inv(AscentSequence{0, 1, 1, 0, 2, 1, 0, 3}), (Permutation{8, 5, 2, 3, 1, 6, 4, 7}));
    EXPECT_EQ(theta_inv(AscentSequence{0}), Permutation{1});
    EXPECT_EQ(theta_inv(AscentSequence{0, 0, 0}), (Permutation{1, 2, 3}));
}

TEST(Theta, InsertionChainMatchesDisplay) {
    const auto chain = insertion_chain(AscentSequence{0, 1, 1, 0, 2, 1, 0, 3});
    const std::vector<std::string> want{
        "_1 1 _0",
        "_2 2 _1 1 _0",
        "_2 2 3 _1 1 _0",
        "_2 2 3 1 _1 4 _0",
        "_3 5 _2 2 3 1 _1 4 _0",
        "_3 5 2 3 1 _2 6 _1 4 _0",
        "_3 5 2 3 1 _2 6 4 _1 7 _0",
        "_4 8 _3 5 2 3 1 _2 6 4 _1 7 _0",
    };
    ASSERT_EQ(chain.size(), want.size());
    for (std::size_t k = 0; k < chain.size(); ++k) EXPECT_EQ(labeled_sites_text(chain[k]), want[k]);
}

TEST(Theta, Errors) {
    EXPECT_THROW(theta(Permutation{4, 2, 5, 1, 3}), std::invalid_argument);
    EXPECT_THROW(theta(Permutation{}), std::invalid_argument);
}

TEST(Theta, LastEntryIsLabelAfterMaximum) {
    for (std::size_t n = 1; n <= 8; ++n)
        for_each_avoider(n, [&](const Permutation& p) { ASSERT_EQ(theta(p).back(), perm_stats(p).a); });
}

TEST(Removal, GoldenExamples) {
    EXPECT_EQ(removal_rule(kRemovalA), RemovalRule::reduce);
    EXPECT_EQ(removal_f(kRemovalA), M({{1, 2, 0, 0}, {0, 2, 1, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));

    EXPECT_EQ(removal_rule(kRemovalB), RemovalRule::drop_last);
    EXPECT_EQ(removal_f(kRemovalB), M({{1, 0, 2}, {0, 3, 0}, {0, 0, 2}}));

    EXPECT_EQ(removal_rule(kRemovalC), RemovalRule::shift);
    EXPECT_EQ(removal_shift_columns(kRemovalC), (std::vector<std::size_t>{3, 4}));
    EXPECT_EQ(removal_f(kRemovalC), M({{2, 4, 1, 3}, {0, 5, 2, 2}, {0, 0, 1, 3}, {0, 0, 0, 2}}));
}

TEST(Removal, WeightOneHasNoPredecessor) { EXPECT_THROW(removal_f(FishburnMatrix{}), std::invalid_argument); }

TEST(Addition, GoldenExamples) {
    EXPECT_EQ(kAdditionA.index(), 1u);

    EXPECT_EQ(addition_rule(kAdditionA, 0), AdditionRule::increment);
    EXPECT_EQ(addition_g(kAdditionA, 0), M({{2, 4, 0, 4}, {0, 5, 0, 2}, {0, 0, 1, 3}, {0, 0, 0, 2}}));

    EXPECT_EQ(addition_rule(kAdditionA, 4), AdditionRule::extend);
    EXPECT_EQ(addition_g(kAdditionA, 4),
              M({{2, 4, 0, 3, 0}, {0, 5, 0, 2, 0}, {0, 0, 1, 3, 0}, {0, 0, 0, 2, 0}, {0, 0, 0, 0, 1}}));

    EXPECT_EQ(addition_rule(kAdditionA, 1), AdditionRule::shift);
    EXPECT_EQ(addition_shift_columns(kAdditionA, 1), (std::vector<std::size_t>{3, 5}));
    EXPECT_EQ(addition_g(kAdditionA, 1),
              M({{2, 4, 3, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 5, 0, 2}, {0, 0, 0, 1, 3}, {0, 0, 0, 0, 2}}));
}

TEST(Addition, OutOfRangeNamesDim) {
    try {
        addition_g(kAdditionA, 5);
        FAIL();
    } catch (const std::out_of_range& e) {
        EXPECT_NE(std::string(e.what()).find("dim(A) = 4"), std::string::npos) << e.what();
    }
}

TEST(Addition, RemovalUndoesAddition) {
    for (std::size_t n = 1; n <= 7; ++n)
        for_each_fishburn_matrix(n, [&](const FishburnMatrix& a) {
            for (std::size_t i = 0; i <= a.dim(); ++i) {
                const auto grown = addition_g(a, i);
                ASSERT_EQ(grown.weight(), a.weight() + 1);
                ASSERT_EQ(grown.index(), i + 1);
                ASSERT_EQ(removal_f(grown), a);
            }
        });
}

TEST(Phi, SmallExamples) {
    EXPECT_EQ(phi(AscentSequence{0, 0, 0}), M({{3}}));
    EXPECT_EQ(phi(AscentSequence{0, 1, 2}), M({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    EXPECT_EQ(phi(AscentSequence{0, 1, 0}), M({{1, 1}, {0, 1}}));
    EXPECT_EQ(phi(AscentSequence{0}), FishburnMatrix{});
}

TEST(Psi, SmallExamples) {
    EXPECT_EQ(psi(M({{1, 1}, {0, 1}})), (AscentSequence{0, 1, 0}));
    EXPECT_EQ(psi(FishburnMatrix{}), AscentSequence{0});
    const AscentSequence x{0, 1, 1, 0, 2, 1, 0, 3};
    EXPECT_EQ(psi(phi(x)), x);
}

TEST(Phi, DimAndIndexFollowAscents) {
    for (std::size_t n = 1; n <= 8; ++n)
        for_each_ascent_sequence(n, [&](const std::vector<int>& v) {
            const AscentSequence x(v);
            const auto a = phi(x);
            ASSERT_EQ(static_cast<int>(a.dim()), x.asc() + 1);
            ASSERT_EQ(static_cast<int>(a.index()), x.back() + 1);
        });
}

TEST(RoundTrips, Exhaustive) {
    for (std::size_t n = 1; n <= 8; ++n) {
        for_each_avoider(n, [&](const Permutation& p) { ASSERT_EQ(theta_inv(theta(p)), p); });
        for_each_ascent_sequence(n, [&](const std::vector<int>& v) {
            const AscentSequence x(v);
            ASSERT_EQ(theta(theta_inv(x)), x);
            ASSERT_EQ(psi(phi(x)), x);
        });
        for_each_fishburn_matrix(n, [&](const FishburnMatrix& a) { ASSERT_EQ(phi(psi(a)), a); });
    }
}

TEST(RoundTrips, RandomLongSequences) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 9 + trial % 6;
        const AscentSequence x(random_ascent_sequence(rng, n));
        const auto p = theta_inv(x);
        ASSERT_FALSE(contains_pattern(p));
        ASSERT_EQ(theta(p), x);
        const auto a = phi(x);
        ASSERT_EQ(a.weight(), n);
        ASSERT_EQ(psi(a), x);
        ASSERT_EQ(alpha_inv(alpha(p)), p);
    }
}

TEST(Flip, Examples) {
    EXPECT_EQ(flip(M({{1, 1}, {0, 1}})), M({{1, 1}, {0, 1}}));
    EXPECT_EQ(flip(M({{2, 0}, {0, 1}})), M({{1, 0}, {0, 2}}));
    EXPECT_EQ(flip(M({{1, 2, 0}, {0, 1, 0}, {0, 0, 1}})), M({{1, 0, 0}, {0, 1, 2}, {0, 0, 1}}));
}

TEST(Flip, InvolutionSwappingRowOneAndLastColumn) {
    for (std::size_t n = 1; n <= 7; ++n)
        for_each_fishburn_matrix(n, [&](const FishburnMatrix& a) {
            const auto f = flip(a);
            ASSERT_EQ(flip(f), a);
            const auto sa = matrix_stats(a);
            const auto sf = matrix_stats(f);
            ASSERT_EQ(sa.rsum_first(), sf.csum_last());
            ASSERT_EQ(sa.csum_last(), sf.rsum_first());
            ASSERT_EQ(sa.tr, sf.tr);
            ASSERT_EQ(sa.ne(), sf.ne());
        });
}

TEST(Alpha, Examples) {
    EXPECT_EQ(alpha(Permutation{1}), FishburnMatrix{});
    const auto a = alpha(Permutation{8, 5, 2, 3, 1, 6, 4, 7});
    EXPECT_EQ(a.dim(), 4u);
    EXPECT_EQ(a, flip(phi(AscentSequence{0, 1, 1, 0, 2, 1, 0, 3})));
    EXPECT_EQ(alpha(Permutation{5, 3, 4, 7, 2, 6, 8, 1}).dim(), 5u);
}
