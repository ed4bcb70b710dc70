#include <gtest/gtest.h>

#include <string>

#include "fishburn/verify.hpp"

using namespace fishburn;

TEST(JointTable, MatricesRsumNe) {
    const auto t = joint_table(Family::matrices, "rsum1", "ne", 3);
    EXPECT_EQ(t.total(), 5u);
    EXPECT_TRUE(check_symmetry(t));
    EXPECT_EQ(t.at(1, 2), 1u);
    EXPECT_EQ(t.at(3, 1), 1u);
    EXPECT_EQ(t.at(3, 3), 0u);
}

TEST(JointTable, SingleAvoider) {
    const auto t = joint_table(Family::avoiders, "LRmax", "RLmax", 1);
    EXPECT_EQ(t.counts, (std::map<std::pair<int, int>, std::uint64_t>{{{1, 1}, 1}}));
}

TEST(JointTable, SequencesZeroRmin) {
    const auto t = joint_table(Family::sequences, "zero", "Rmin", 5);
    EXPECT_EQ(t.total(), 53u);
    EXPECT_TRUE(check_symmetry(t));
}

TEST(JointTable, AsymmetricPairIsReported) {
    const auto t = joint_table(Family::matrices, "dim", "index", 3);
    EXPECT_EQ(t.total(), 5u);
    EXPECT_FALSE(check_symmetry(t));
}

TEST(JointTable, UnknownStatisticListsAvailableOnes) {
    try {
        joint_table(Family::matrices, "rsum1", "bogus", 3);
        FAIL();
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("bogus"), std::string::npos) << msg;
        for (const auto& name : statistic_names(Family::matrices)) EXPECT_NE(msg.find(name), std::string::npos) << msg;
    }
    EXPECT_THROW(joint_table(Family::matrices, "rsum1", "ne", 0), std::out_of_range);
}

TEST(JointTable, FamilyNames) {
    EXPECT_EQ(parse_family("perm"), Family::avoiders);
    EXPECT_EQ(parse_family("sequences"), Family::sequences);
    EXPECT_EQ(parse_family("matrix"), Family::matrices);
    EXPECT_THROW(parse_family("trees"), std::invalid_argument);
}

TEST(Transport, HoldsThroughSizeEight) {
    for (std::size_t n : {1u, 3u, 8u}) {
        for (const auto& r : check_transport(n)) {
            EXPECT_TRUE(r.ok()) << r.name << " at n=" << n << ": " << r.failure->object;
            EXPECT_GT(r.checked, 0u);
        }
    }
    EXPECT_THROW(check_transport(9), std::out_of_range);
}

TEST(RoundTrips, Harness) {
    for (const auto& r : check_round_trips(7, 6)) EXPECT_TRUE(r.ok()) << r.name;
}

TEST(Symmetry, TablesAgreeThroughEight) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto s = check_symmetry_tables(n);
        EXPECT_TRUE(s.ok()) << "n=" << n;
    }
}

TEST(Remark, ChainExampleDisagrees) {
    const auto r = check_remark(Permutation{8, 5, 2, 3, 1, 6, 4, 7});
    ASSERT_TRUE(r.inverse_avoids);
    EXPECT_EQ(r.inverse, (Permutation{5, 3, 4, 7, 2, 6, 8, 1}));
    EXPECT_EQ(r.asc, 3);
    EXPECT_EQ(r.inverse_asc, 4);
    EXPECT_EQ(r.dim, 4u);
    EXPECT_EQ(r.inverse_dim, 5u);
    EXPECT_FALSE(r.equal);
}

TEST(Remark, SmallCasesAgree) {
    EXPECT_TRUE(check_remark(Permutation{1}).equal);
    EXPECT_TRUE(check_remark(Permutation{1, 2}).equal);
}

TEST(Remark, InverseOfAvoiderAvoids) {
    for (std::size_t n = 1; n <= 8; ++n)
        for_each_avoider(n, [&](const Permutation& p) { ASSERT_FALSE(contains_pattern(p.inverse())) << to_text(p); });
    EXPECT_THROW(check_remark(Permutation{4, 2, 5, 1, 3}), std::invalid_argument);
}

TEST(Harness, ProfilesAndSections) {
    EXPECT_EQ(VerifyOptions::profile("ci").n_max, 7u);
    EXPECT_EQ(VerifyOptions::profile("long").n_max, 8u);
    EXPECT_THROW(VerifyOptions::profile("short"), std::invalid_argument);

    auto opt = VerifyOptions::profile("ci");
    opt.only = {"remark", "counts"};
    const auto rep = run_verification(opt);
    EXPECT_TRUE(rep.ok());
    for (const auto& l : rep.lines) EXPECT_TRUE(l.section == "remark" || l.section == "counts") << l.section;
    EXPECT_EQ(rep.lines.size(), 1u + 3u * 7u);
    EXPECT_TRUE(rep.json["ok"].get<bool>());
    EXPECT_NE(to_text(rep).find("all checks passed"), std::string::npos);

    opt.only = {"nope"};
    EXPECT_THROW(run_verification(opt), std::invalid_argument);
}

TEST(Harness, FailedRemarkIsReported) {
    auto opt = VerifyOptions::profile("ci");
    opt.only = {"remark"};
    opt.remark_perm = Permutation{1, 2};
    const auto rep = run_verification(opt);
    EXPECT_FALSE(rep.ok());
    EXPECT_NE(to_text(rep).find("FAIL  [remark]"), std::string::npos);
    EXPECT_NE(to_text(rep).find("verification FAILED"), std::string::npos);
}

TEST(Harness, FullCiProfilePasses) {
    const auto rep = run_verification(VerifyOptions::profile("ci"));
    for (const auto& l : rep.lines) EXPECT_TRUE(l.ok) << l.section << ' ' << l.name << ' ' << l.detail;
}
