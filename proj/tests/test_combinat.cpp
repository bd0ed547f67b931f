#include <gtest/gtest.h>

#include "grcm/combinat.hpp"

using namespace grcm;

namespace {

using V = std::vector<int>;

TEST(Rim, SortsAndValidates) {
    EXPECT_EQ(Rim(8, {5, 1, 4}).members(), (V{1, 4, 5}));
    EXPECT_THROW(Rim(8, {0, 1}), Error);
    EXPECT_THROW(Rim(8, {9}), Error);
    EXPECT_THROW(Rim(8, {2, 2}), Error);
    EXPECT_THROW(Rim(0, {}), Error);
    EXPECT_EQ(Rim(8, {}).k(), 0);
}

TEST(Rim, CyclicMembership) {
    const Rim I(8, {1, 4, 5});
    EXPECT_TRUE(I.contains(9));
    EXPECT_TRUE(I.contains(1));
    EXPECT_FALSE(I.contains(0));
    EXPECT_EQ(I.normalize(0), 8);
    EXPECT_EQ(I.to_string(), "{1,4,5}");
}

TEST(Peaks, Examples) {
    EXPECT_EQ(peaks(Rim(8, {1, 4, 5})), (V{3, 8}));
    EXPECT_EQ(peaks(Rim(7, {1, 2, 3})), (V{7}));
    EXPECT_EQ(peaks(Rim(8, {1, 3, 5, 7})), (V{2, 4, 6, 8}));
}

TEST(Valleys, Examples) {
    EXPECT_EQ(valleys(Rim(8, {1, 4, 5})), (V{1, 5}));
    EXPECT_EQ(valleys(Rim(7, {1, 2, 3})), (V{3}));
    EXPECT_EQ(valleys(Rim(8, {1, 3, 5, 7})), (V{1, 3, 5, 7}));
}

TEST(HeightProfile, Examples) {
    EXPECT_EQ(height_profile(Rim(8, {1, 4, 5})), (V{0, -1, 0, 1, 0, -1, 0, 1, 2}));
    EXPECT_EQ(height_profile(Rim(5, {})), (V{0, 1, 2, 3, 4, 5}));
    EXPECT_EQ(height_profile(Rim(6, {1, 3, 5})), (V{0, -1, 0, -1, 0, -1, 0}));
}

// Every subset of {1..n} for n <= 8.
std::vector<Rim> all_subsets(int n) {
    std::vector<Rim> out;
    for (unsigned m = 0; m < (1U << n); ++m) {
        V members;
        for (int l = 1; l <= n; ++l)
            if (m >> (l - 1) & 1U) members.push_back(l);
        out.emplace_back(n, members);
    }
    return out;
}

TEST(RimProperties, PeaksValleysBalanceAndHeightEnd) {
    for (int n = 1; n <= 8; ++n)
        for (const Rim& I : all_subsets(n)) {
            EXPECT_EQ(peaks(I).size(), valleys(I).size()) << I.to_string();
            EXPECT_EQ(height_profile(I).back(), n - 2 * I.k());
            // After a peak comes a run of members ending in a valley.
            for (int p : peaks(I)) {
                int l = p + 1;
                while (I.contains(l + 1)) ++l;
                const auto v = valleys(I);
                EXPECT_NE(std::find(v.begin(), v.end(), I.normalize(l)), v.end());
            }
        }
}

TEST(Interlacing, Examples) {
    const auto a = interlacing(Rim(6, {1, 3, 5}), Rim(6, {2, 4, 6}));
    EXPECT_EQ(a.r, 3);
    EXPECT_TRUE(a.tight);
    EXPECT_EQ(a.i_positions, (V{1, 3, 5}));
    EXPECT_EQ(a.j_positions, (V{2, 4, 6}));

    const auto b = interlacing(Rim(6, {1, 3}), Rim(6, {1, 3}));
    EXPECT_EQ(b.r, 0);
    EXPECT_TRUE(b.tight);

    const auto c = interlacing(Rim(6, {1, 2, 5}), Rim(6, {2, 4, 6}));
    EXPECT_EQ(c.r, 2);
    EXPECT_TRUE(c.tight);
}

TEST(Interlacing, NonTightAndShapeErrors) {
    // I\J = {1,2}, J\I = {3,4}: one block each, r = 1 but |I\J| = 2.
    const auto rep = interlacing(Rim(6, {1, 2}), Rim(6, {3, 4}));
    EXPECT_EQ(rep.r, 1);
    EXPECT_FALSE(rep.tight);
    EXPECT_THROW(interlacing(Rim(6, {1, 2}), Rim(7, {3, 4})), Error);
    EXPECT_THROW(interlacing(Rim(6, {1, 2}), Rim(6, {3})), Error);
}

TEST(InterlacingProperties, Symmetric) {
    for (int n = 2; n <= 7; ++n) {
        const auto subsets = all_subsets(n);
        for (const Rim& I : subsets)
            for (const Rim& J : subsets) {
                if (I.k() != J.k()) continue;
                const auto a = interlacing(I, J), b = interlacing(J, I);
                EXPECT_EQ(a.r, b.r);
                EXPECT_EQ(a.tight, b.tight);
            }
    }
}

TEST(ModelReduction, GeneralPair) {
    const auto red = model_reduction(Rim(8, {1, 4, 6}), Rim(8, {2, 5, 7}));
    EXPECT_EQ(red.r, 3);
    EXPECT_EQ(red.position_map, (V{0, 1, 2, 4, 5, 6, 7}));
    for (auto [label, pos] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {4, 3}, {5, 4}, {6, 5}, {7, 6}})
        EXPECT_EQ(red.label_position[label], pos);
    EXPECT_TRUE(red.common.empty());
    EXPECT_EQ(red.empty, (V{3, 8}));
}

TEST(ModelReduction, ModelIsIdentity) {
    const auto red = model_reduction(Rim(8, {1, 3, 5, 7}), Rim(8, {2, 4, 6, 8}));
    EXPECT_EQ(red.r, 4);
    for (int p = 1; p <= 8; ++p) EXPECT_EQ(red.position_map[p], p);
    EXPECT_EQ(red.vertex_model, (V{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(ModelReduction, CommonAndEmpty) {
    const auto red = model_reduction(Rim(6, {1, 2, 4}), Rim(6, {2, 3, 5}));
    EXPECT_EQ(red.r, 2);
    EXPECT_EQ(red.common, (V{2}));
    EXPECT_EQ(red.empty, (V{6}));
    // Scalar edges 2 and 6 do not advance the model vertex.
    EXPECT_EQ(red.vertex_model, (V{0, 1, 1, 2, 3, 0}));
}

TEST(ModelReduction, RejectsNonTightAndEqual) {
    try {
        model_reduction(Rim(6, {1, 2}), Rim(6, {3, 4}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotTight);
    }
    EXPECT_THROW(model_reduction(Rim(6, {1, 2}), Rim(6, {1, 2})), Error);
}

TEST(ModelReductionProperties, ForgettingScalarLabelsKeepsR) {
    for (int n = 2; n <= 8; ++n) {
        const auto subsets = all_subsets(n);
        for (const Rim& I : subsets)
            for (const Rim& J : subsets) {
                if (I.k() != J.k()) continue;
                const auto rep = interlacing(I, J);
                if (!rep.tight || rep.r < 1) continue;
                const auto red = model_reduction(I, J);
                V mi, mj;
                for (int l = 1; l <= red.r; ++l) mi.push_back(2 * l - 1), mj.push_back(2 * l);
                EXPECT_EQ(interlacing(Rim(2 * red.r, mi), Rim(2 * red.r, mj)).r, red.r);
                // Model peaks of I: 2, 4, .., 2r.
                EXPECT_EQ(static_cast<int>(red.position_map.size()), 2 * red.r + 1);
                for (int l = 1; l <= red.r; ++l) {
                    EXPECT_TRUE(I.contains(red.position_map[2 * l - 1]));
                    EXPECT_FALSE(J.contains(red.position_map[2 * l - 1]));
                    EXPECT_TRUE(J.contains(red.position_map[2 * l]));
                    EXPECT_FALSE(I.contains(red.position_map[2 * l]));
                }
            }
    }
}

TEST(ModelPeaks, TightModelHasRPeaks) {
    for (int r = 1; r <= 5; ++r) {
        V mi;
        for (int l = 1; l <= r; ++l) mi.push_back(2 * l - 1);
        V expect;
        for (int l = 1; l <= r; ++l) expect.push_back(2 * l);
        EXPECT_EQ(peaks(Rim(2 * r, mi)), expect);
    }
}

} // namespace
