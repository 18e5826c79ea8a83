#include <gtest/gtest.h>

#include <random>

#include "stratahom/chain_complex.hpp"
#include "stratahom/integer_linalg.hpp"
#include "stratahom/posets.hpp"

using namespace stratahom;

namespace {

DenseMatrix dense(std::vector<std::vector<long>> rows) {
    DenseMatrix m;
    for (auto& r : rows) {
        m.emplace_back();
        for (long v : r) m.back().push_back(BigInt(v));
    }
    return m;
}

IntMatrix sparse(const DenseMatrix& a) {
    IntMatrix m(static_cast<int>(a.size()), a.empty() ? 0 : static_cast<int>(a[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) m.add(static_cast<int>(i), static_cast<int>(j), a[i][j]);
    return m.normalize();
}

DenseMatrix random_dense(std::mt19937& rng, std::size_t m, std::size_t n, int lo, int hi, int zero_bias = 0) {
    std::uniform_int_distribution<int> dist(lo, hi);
    DenseMatrix a(m, std::vector<BigInt>(n));
    for (auto& r : a)
        for (auto& x : r) x = (zero_bias && static_cast<int>(rng() % 10) < zero_bias) ? 0 : dist(rng);
    return a;
}

bool is_diagonal_chain(const SmithForm& S) {
    for (std::size_t i = 0; i < S.D.size(); ++i)
        for (std::size_t j = 0; j < S.D[i].size(); ++j)
            if (i != j && S.D[i][j] != 0) return false;
    for (std::size_t i = 0; i + 1 < S.diagonal.size(); ++i)
        if (S.diagonal[i + 1] % S.diagonal[i] != 0) return false;
    for (auto& x : S.diagonal)
        if (x <= 0) return false;
    return true;
}

/// Determinantal divisors: gcd of all k x k minors. Independent of any elimination.
std::vector<BigInt> determinantal_divisors(const DenseMatrix& a) {
    std::size_t m = a.size(), n = m ? a[0].size() : 0;
    std::vector<BigInt> out;
    std::function<BigInt(std::vector<std::size_t>&, std::vector<std::size_t>&)> det = [&](std::vector<std::size_t>& r, std::vector<std::size_t>& c) {
        if (r.size() == 1) return a[r[0]][c[0]];
        BigInt s = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::vector<std::size_t> rr(r.begin() + 1, r.end()), cc;
            for (std::size_t j = 0; j < c.size(); ++j)
                if (j != i) cc.push_back(c[j]);
            BigInt t = a[r[0]][c[i]] * det(rr, cc);
            s += i % 2 ? BigInt(-t) : t;
        }
        return s;
    };
    for (std::size_t k = 1; k <= std::min(m, n); ++k) {
        BigInt g = 0;
        std::vector<bool> rs(m, false), cs(n, false);
        std::fill(rs.begin(), rs.begin() + k, true);
        do {
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.begin(), cs.begin() + k, true);
            do {
                std::vector<std::size_t> r, c;
                for (std::size_t i = 0; i < m; ++i)
                    if (rs[i]) r.push_back(i);
                for (std::size_t j = 0; j < n; ++j)
                    if (cs[j]) c.push_back(j);
                BigInt v = det(r, c);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            } while (std::prev_permutation(cs.begin(), cs.end()));
        } while (std::prev_permutation(rs.begin(), rs.end()));
        if (g == 0) break;
        out.push_back(g);
    }
    return out;
}

}  // namespace

TEST(SmithNormalForm, Examples) {
    auto S = smith_normal_form(dense({{2, 0}, {0, 3}}));
    EXPECT_EQ(S.diagonal, (std::vector<BigInt>{1, 6}));
    auto Z = smith_normal_form(dense({{0, 0, 0}, {0, 0, 0}}));
    EXPECT_EQ(Z.rank, 0u);
    EXPECT_EQ(Z.D, dense({{0, 0, 0}, {0, 0, 0}}));
    auto E = smith_normal_form(DenseMatrix{});
    EXPECT_EQ(E.rank, 0u);
}

TEST(SmithNormalForm, RP2BoundaryHasDivisorTwo) {
    auto C = build(realize_family(PosetFamily::full(), 2, Kind::marked), Variant::proj);
    auto e = elementary_divisors(C.diff[2]);
    // two 2-cells, ((1,1),0) and ((),0); elementary divisors 1 and 2
    EXPECT_EQ(e.rank, 2u);
    EXPECT_EQ(e.torsion, (std::vector<BigInt>{2}));
}

TEST(SmithNormalForm, RandomOracle500) {
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t m = 1 + rng() % 40, n = 1 + rng() % 40;
        auto A = random_dense(rng, m, n, -9, 9, static_cast<int>(rng() % 9));
        auto S = smith_normal_form(A);
        ASSERT_EQ(dense_multiply(dense_multiply(S.U, A), S.V), S.D) << "trial " << trial;
        ASSERT_TRUE(is_diagonal_chain(S)) << "trial " << trial;
        ASSERT_TRUE(is_unimodular(S.U) && is_unimodular(S.V)) << "trial " << trial;
        auto e = elementary_divisors(sparse(A));
        ASSERT_EQ(e.rank, S.rank);
        ASSERT_EQ(e.torsion, invariant_factors(S.diagonal));
    }
}

TEST(SmithNormalForm, DeterminantalDivisorOracle) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t m = 1 + rng() % 5, n = 1 + rng() % 5;
        auto A = random_dense(rng, m, n, -6, 6, static_cast<int>(rng() % 6));
        auto dd = determinantal_divisors(A);
        auto S = smith_normal_form(A, false);
        ASSERT_EQ(S.rank, dd.size());
        for (std::size_t k = 0; k < dd.size(); ++k) {
            BigInt want = k == 0 ? dd[0] : BigInt(dd[k] / dd[k - 1]);
            ASSERT_EQ(S.diagonal[k], want) << "trial " << trial;
        }
    }
}

TEST(SmithNormalForm, LargeEntriesUseBigIntegers) {
    // Products overflow 64 bits during elimination.
    BigInt big("123456789012345678901");
    DenseMatrix A{{big, big + 1}, {big * 3, big * 3 + 5}};
    auto S = smith_normal_form(A);
    EXPECT_EQ(dense_multiply(dense_multiply(S.U, A), S.V), S.D);
    auto e = elementary_divisors(sparse(A));
    EXPECT_EQ(e.rank, 2u);
    EXPECT_EQ(e.torsion, invariant_factors(S.diagonal));
    SparseMatrix<std::int64_t> w(2, 2);
    w.add(0, 0, 3037000499LL * 3);
    w.add(0, 1, 3037000499LL * 2);
    w.add(1, 0, 3037000499LL * 5);
    w.add(1, 1, 3037000493LL);
    w.normalize();
    DenseMatrix wd{{BigInt(3037000499L * 3), BigInt(3037000499L * 2)}, {BigInt(3037000499L * 5), BigInt(3037000493L)}};
    EXPECT_EQ(elementary_divisors(w).torsion, invariant_factors(smith_normal_form(wd, false).diagonal));
}

TEST(ModpRank, Examples) {
    EXPECT_EQ(modp_rank(sparse(dense({{2, 0}, {0, 3}})), 2), 1u);
    EXPECT_EQ(modp_rank(sparse(dense({{2, 0}, {0, 3}})), 3), 1u);
    EXPECT_EQ(modp_rank(sparse(dense({{2, 0}, {0, 3}})), 5), 2u);
    EXPECT_THROW(modp_rank(sparse(dense({{1}})), 1), ArgumentError);
}

TEST(ModpRank, ConsistentWithInvariantFactors) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        auto A = random_dense(rng, 1 + rng() % 15, 1 + rng() % 15, -9, 9, static_cast<int>(rng() % 8));
        auto e = elementary_divisors(sparse(A));
        for (long p : {2L, 3L, 5L, 7L}) {
            std::size_t drop = 0;
            for (auto& t : e.torsion)
                if (t % p == 0) ++drop;
            ASSERT_LE(modp_rank(sparse(A), p), e.rank);
            ASSERT_EQ(modp_rank(sparse(A), p), e.rank - drop) << "p=" << p;
        }
    }
}

TEST(ModpRank, FullComplexD6) {
    auto C = build(realize_family(PosetFamily::full(), 6, Kind::marked), Variant::proj);
    for (int j = 1; j <= 6; ++j) {
        auto e = elementary_divisors(C.diff[j]);
        std::size_t drop = 0;
        for (auto& t : e.torsion)
            if (t % 3 == 0) ++drop;
        EXPECT_EQ(modp_rank(C.diff[j], 3), e.rank - drop);
    }
}

TEST(InvariantFactors, Normalization) {
    EXPECT_EQ(invariant_factors({BigInt(6), BigInt(4)}), (std::vector<BigInt>{2, 12}));
    EXPECT_EQ(invariant_factors({BigInt(1), BigInt(-2), BigInt(3)}), (std::vector<BigInt>{6}));
    EXPECT_TRUE(invariant_factors({BigInt(1), BigInt(1)}).empty());
}

TEST(HomologyGroup, Rendering) {
    EXPECT_EQ(HomologyGroup{}.to_string(), "0");
    EXPECT_EQ((HomologyGroup{1, {}}).to_string(), "Z");
    EXPECT_EQ((HomologyGroup{3, {}}).to_string(), "Z^3");
    EXPECT_EQ((HomologyGroup{1, {2, 4}}).to_string(), "Z ⊕ Z/2 ⊕ Z/4");
    EXPECT_EQ((HomologyGroup{2, {2}}).to_table_string(), "Z^2 ⊕ Z/2Z");
    EXPECT_EQ((HomologyGroup{0, {2, 2, 2}}).to_table_string(), "(Z/2Z)^3");
}

TEST(HomologyGroup, ParseRoundTrip) {
    for (auto& g : {HomologyGroup{}, HomologyGroup{1, {}}, HomologyGroup{0, {4}}, HomologyGroup{2, {2, 2, 6}}}) {
        EXPECT_EQ(parse_group(g.to_string()), g);
        EXPECT_EQ(parse_group(g.to_table_string()), g);
    }
    EXPECT_EQ(parse_group("Z + Z/2Z"), (HomologyGroup{1, {2}}));
    EXPECT_THROW(parse_group("Q"), ArgumentError);
}

TEST(SparseMatrix, NormalizeAndTranspose) {
    SparseMatrix<long> m(2, 3);
    m.add(0, 1, 2);
    m.add(0, 1, -2);
    m.add(1, 2, 5);
    m.normalize();
    EXPECT_EQ(m.nonzeros(), 1u);
    EXPECT_EQ(m.transpose().transpose(), m);
    EXPECT_THROW(m.add(2, 0, 1), ArgumentError);
}
