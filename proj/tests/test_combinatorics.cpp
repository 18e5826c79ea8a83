#include <gtest/gtest.h>

#include <random>
#include <set>

#include "stratahom/combinatorics.hpp"

using namespace stratahom;

using MC = MarkedComposition;

TEST(Composition, NormsAndValidation) {
    Composition w{1, 2, 2, 4, 3};
    EXPECT_EQ(w.norm(), 12);
    EXPECT_EQ(w.reduced_norm(), 7);
    EXPECT_EQ(Composition{}.reduced_norm(), 0);
    EXPECT_THROW((Composition{1, 0}), ArgumentError);
    MC m({1, 2}, 3);
    EXPECT_EQ(m.norm(), 6);
    EXPECT_EQ(m.reduced_norm(), 4);
    EXPECT_THROW(MC({1}, -1), ArgumentError);
}

TEST(Merge, Examples) {
    EXPECT_EQ(merge({1, 2, 2, 4, 3}, 3), (Composition{1, 2, 6, 3}));
    EXPECT_EQ(merge({2, 2}, 1), (Composition{4}));
    EXPECT_EQ(merge({5, 1, 1}, 2), (Composition{5, 2}));
    EXPECT_THROW(merge({5, 1, 1}, 0), ArgumentError);
    EXPECT_THROW(merge({5, 1, 1}, 3), ArgumentError);
    EXPECT_THROW(merge({5}, 1), ArgumentError);
}

TEST(Insert, Examples) {
    EXPECT_EQ(insert({1, 2, 2, 4, 3}, 0), (Composition{2, 1, 2, 2, 4, 3}));
    EXPECT_EQ(insert({}, 0), (Composition{2}));
    EXPECT_EQ(insert({1, 1}, 1), (Composition{1, 2, 1}));
    EXPECT_THROW(insert({1, 1}, 3), ArgumentError);
}

TEST(MergeInf, Examples) {
    MC m({1, 2, 2, 4, 3}, 2);
    EXPECT_EQ(merge_inf(m, 0), MC({2, 2, 4, 3}, 3));
    EXPECT_EQ(merge_inf(m, 5), MC({1, 2, 2, 4}, 5));
    EXPECT_EQ(merge_inf(m, 3), MC({1, 2, 6, 3}, 2));
    EXPECT_EQ(merge_inf(MC({7}, 0), 0), MC({}, 7));
    EXPECT_THROW(merge_inf(MC({}, 3), 0), ArgumentError);
    EXPECT_THROW(merge_inf(m, 6), ArgumentError);
}

TEST(InsertInf, Examples) {
    EXPECT_EQ(insert_inf(MC({1, 2, 2, 4, 3}, 2), 5), MC({1, 2, 2, 4, 3, 2}, 2));
    EXPECT_EQ(insert_inf(MC({}, 4), 0), MC({2}, 4));
    EXPECT_EQ(insert_inf(MC({3, 3}, 1), 1), MC({3, 2, 3}, 1));
}

TEST(Precedes, Examples) {
    EXPECT_TRUE(precedes(Composition{4}, Composition{2, 2}));
    EXPECT_TRUE(precedes(Composition{1, 3}, Composition{1, 3}));
    EXPECT_FALSE(precedes(Composition{2, 2}, Composition{4}));
    EXPECT_TRUE(precedes(Composition{4}, Composition{}));
    EXPECT_TRUE(precedes(MC({}, 4), MC({1, 1}, 0), Kind::marked));
    EXPECT_TRUE(precedes(MC({4}, 0), MC({1, 1}, 0), Kind::plain));
    EXPECT_FALSE(precedes(MC({3}, 0), MC({1, 1}, 0), Kind::plain));
    EXPECT_THROW(precedes(MC({}, 4), MC({1, 1}, 0), Kind::plain), ArgumentError);
}

TEST(Precedes, IsAPartialOrderOnSmallCells) {
    for (bool marked : {false, true}) {
        Kind kind = marked ? Kind::marked : Kind::plain;
        auto cells = enumerate_cells(6, marked);
        for (auto& a : cells)
            for (auto& b : cells) {
                if (a == b) continue;
                EXPECT_FALSE(precedes(a, b, kind) && precedes(b, a, kind));
                if (precedes(a, b, kind)) {
                    EXPECT_GT(a.reduced_norm(), b.reduced_norm());
                }
            }
    }
}

TEST(Operations, NormBookkeeping) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> parts(rng() % 6);
        for (auto& p : parts) p = 1 + rng() % 4;
        Composition w(parts);
        for (std::size_t j = 0; j <= w.length(); ++j) {
            auto v = insert(w, j);
            EXPECT_EQ(v.norm(), w.norm() + 2);
            EXPECT_EQ(v.reduced_norm(), w.reduced_norm() + 1);
        }
        for (std::size_t j = 1; j + 1 <= w.length(); ++j) {
            auto v = merge(w, j);
            EXPECT_EQ(v.norm(), w.norm());
            EXPECT_EQ(v.reduced_norm(), w.reduced_norm() + 1);
        }
        MC m(w, rng() % 3);
        for (auto& y : one_step_images(m, Kind::marked)) EXPECT_EQ(y.reduced_norm(), m.reduced_norm() + 1);
    }
}

TEST(Cells, NonemptinessAndDimension) {
    EXPECT_EQ(cell_dimension(MC({1, 1, 1}, 0), 3), 3);
    EXPECT_EQ(cell_dimension(MC({}, 5), 5), 0);
    EXPECT_EQ(cell_dimension(MC({2, 2}, 0), 4), 2);
    EXPECT_TRUE(is_nonempty_cell(MC({2}, 0), 4));
    EXPECT_FALSE(is_nonempty_cell(MC({2}, 1), 4));
    EXPECT_FALSE(is_nonempty_cell(MC({2, 2, 2}, 0), 4));
    EXPECT_THROW(cell_dimension(MC({3}, 0), 4), DomainError);
}

TEST(Cells, Enumeration) {
    auto c2 = enumerate_cells(2, true);
    std::set<MC> want{MC({}, 0), MC({1, 1}, 0), MC({1}, 1), MC({2}, 0), MC({}, 2)};
    EXPECT_EQ(std::set<MC>(c2.begin(), c2.end()), want);
    EXPECT_EQ(c2.size(), 5u);
    auto c0 = enumerate_cells(0, false);
    ASSERT_EQ(c0.size(), 1u);
    EXPECT_TRUE(c0[0].omega.empty());
    EXPECT_EQ(enumerate_cells(5, true).size(), 42u);
    for (int d = 0; d <= 8; ++d) {
        auto cells = enumerate_cells(d, true);
        EXPECT_TRUE(std::is_sorted(cells.begin(), cells.end()));
        EXPECT_EQ(std::set<MC>(cells.begin(), cells.end()).size(), cells.size());
    }
}

TEST(Cells, UniqueZeroCell) {
    for (int d = 0; d <= 9; ++d) {
        int zero = 0;
        for (auto& c : enumerate_cells(d, true))
            if (cell_dimension(c, d) == 0) {
                ++zero;
                EXPECT_EQ(c, MC({}, d));
            }
        EXPECT_EQ(zero, 1);
        for (auto& c : enumerate_cells(d, false))
            if (!c.omega.empty() || d == 0) {
                EXPECT_GE(cell_dimension(c, d), d == 0 ? 0 : 1);
            }
    }
}

TEST(Compositions, CountIsPowerOfTwo) {
    EXPECT_EQ(compositions_of(0).size(), 1u);
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(compositions_of(n).size(), 1u << (n - 1));
}

TEST(TextSyntax, RoundTrip) {
    EXPECT_EQ(parse_pattern("1,2,2,4,3|2"), MC({1, 2, 2, 4, 3}, 2));
    EXPECT_EQ(parse_pattern("()|4"), MC({}, 4));
    EXPECT_EQ(parse_pattern("(1,2)"), MC({1, 2}, 0));
    EXPECT_EQ(parse_composition("()"), Composition{});
    EXPECT_EQ(to_string(Composition{}), "()");
    EXPECT_EQ(to_string(MC({1, 2}, 3)), "1,2|3");
    EXPECT_THROW(parse_pattern("1,x"), ArgumentError);
    EXPECT_THROW(parse_pattern("1,0"), ArgumentError);
    for (auto& c : enumerate_cells(6, true)) EXPECT_EQ(parse_pattern(to_string(c)), c);
}
