#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "fishburn/bijections.hpp"
#include "fishburn/oracle.hpp"
#include "fishburn/patterns.hpp"

using namespace fishburn;

namespace {

// Literal reading of the definition: indices i < i+1 < j with p_i + 1 = p_j < p_{i+1}.
bool naive_contains(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    for (int i = 0; i + 1 < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (p[i] + 1 == p[j] && p[j] < p[i + 1]) return true;
    return false;
}

}  // namespace

TEST(Pattern, SmallExamples) {
    EXPECT_TRUE(contains_pattern(Permutation{4, 2, 5, 1, 3}));
    EXPECT_FALSE(contains_pattern(Permutation{5, 2, 3, 1, 4}));
    EXPECT_FALSE(contains_pattern(Permutation{1, 2, 3, 4, 5}));
    EXPECT_FALSE(contains_pattern(Permutation{}));
}

TEST(Pattern, AgreesWithNaiveDefinition) {
    for (int n = 1; n <= 7; ++n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 1);
        do {
            ASSERT_EQ(contains_pattern(p), naive_contains(p));
        } while (std::next_permutation(p.begin(), p.end()));
    }
}

TEST(ActiveSites, ChainDisplays) {
    EXPECT_EQ(labeled_sites_text(Permutation{1}), "_1 1 _0");
    EXPECT_EQ(labeled_sites_text(Permutation{5, 2, 3, 1, 6, 4, 7}), "_3 5 2 3 1 _2 6 4 _1 7 _0");
    EXPECT_EQ(labeled_sites_text(Permutation{4, 2, 1, 7, 8, 5, 3, 6}), "_4 4 2 1 _3 7 8 _2 5 3 _1 6 _0");

    const auto sites = active_sites(Permutation{5, 2, 3, 1, 6, 4, 7});
    EXPECT_EQ(sites.sites, (std::vector<std::size_t>{0, 4, 6, 7}));
    EXPECT_EQ(sites.label_of_gap(0), 3);
    EXPECT_EQ(sites.label_of_gap(7), 0);
    EXPECT_FALSE(sites.label_of_gap(1).has_value());
    EXPECT_EQ(sites.gap_of_label(2), 4u);
}

TEST(ActiveSites, RejectsPatternContainingInput) {
    EXPECT_THROW(active_sites(Permutation{4, 2, 5, 1, 3}), std::invalid_argument);
}

TEST(ActiveSites, ActiveIffInsertionAvoids) {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& p : enumerate_avoiders(n)) {
            const auto sites = active_sites(p);
            const int next = static_cast<int>(n) + 1;
            for (std::size_t gap = 0; gap <= n; ++gap) {
                const bool active = sites.label_of_gap(gap).has_value();
                EXPECT_EQ(active, !naive_contains(insert_at_gap(p.values(), gap, next)));
            }
            // End gap and the gap after the maximum are always active.
            EXPECT_EQ(sites.sites.back(), n);
            const auto max_at = std::find(p.vec().begin(), p.vec().end(), static_cast<int>(n)) - p.vec().begin();
            EXPECT_TRUE(sites.label_of_gap(static_cast<std::size_t>(max_at) + 1).has_value());
        }
    }
}

TEST(ActiveSites, CountIsTwoPlusAscents) {
    for (std::size_t n = 1; n <= 8; ++n)
        for_each_avoider(n, [&](const Permutation& p) {
            ASSERT_EQ(static_cast<int>(active_sites(p).size()), 2 + theta(p).asc());
        });
}

TEST(InsertMax, ChainSteps) {
    EXPECT_EQ(insert_max(Permutation{5, 2, 3, 1, 6, 4, 7}, 3), (Permutation{8, 5, 2, 3, 1, 6, 4, 7}));
    EXPECT_EQ(insert_max(Permutation{1}, 1), (Permutation{2, 1}));
    EXPECT_EQ(insert_max(Permutation{2, 3, 1}, 0), (Permutation{2, 3, 1, 4}));
    EXPECT_EQ(insert_max(Permutation{2, 3, 1}, 1), (Permutation{2, 3, 4, 1}));
}

TEST(InsertMax, LabelOutOfRangeNamesSiteCount) {
    try {
        insert_max(Permutation{1}, 2);
        FAIL();
    } catch (const std::out_of_range& e) {
        EXPECT_NE(std::string(e.what()).find("s = 2"), std::string::npos) << e.what();
    }
    EXPECT_THROW(insert_max(Permutation{1}, -1), std::out_of_range);
}

TEST(Avoiders, SmallCases) {
    EXPECT_EQ(enumerate_avoiders(1), std::vector<Permutation>{Permutation{1}});
    EXPECT_EQ(enumerate_avoiders(3).size(), 5u);
    const auto eight = enumerate_avoiders(8);
    EXPECT_EQ(eight.size(), 5335u);
    EXPECT_NE(std::find(eight.begin(), eight.end(), Permutation{8, 5, 2, 3, 1, 6, 4, 7}), eight.end());
}

TEST(Avoiders, GrowthMatchesFilter) {
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto grown = enumerate_avoiders(n);
        std::set<Permutation> as_set(grown.begin(), grown.end());
        EXPECT_EQ(as_set.size(), grown.size()) << "duplicates at n=" << n;
        const auto filtered = filter_avoiders(n);
        EXPECT_EQ(std::vector<Permutation>(as_set.begin(), as_set.end()), filtered) << "n=" << n;
    }
}
