#pragma once

#include <string>
#include <vector>

#include "chain_complex.hpp"

namespace stratahom {

struct HomologyProfile {
    std::string space;   // "B", "P", "cB", "cP", "cB-twisted", "rel", "D"
    int d = 0;
    std::string family;
    bool reduced = false;
    bool cohomology = false;
    std::vector<HomologyGroup> groups;  // index = degree, 0..d

    const HomologyGroup& at(int j) const {
        static const HomologyGroup zero;
        return j >= 0 && j < static_cast<int>(groups.size()) ? groups[j] : zero;
    }
    bool operator==(const HomologyProfile& o) const { return groups == o.groups; }
    std::size_t total_rank() const {
        std::size_t r = 0;
        for (auto& g : groups) r += g.rank;
        return r;
    }
};

inline HomologyProfile make_profile(std::string space, int d, const PosetFamily& f, bool reduced, std::vector<HomologyGroup> g) {
    HomologyProfile p;
    p.space = std::move(space);
    p.d = d;
    p.family = f.name();
    p.reduced = reduced;
    p.groups = std::move(g);
    p.groups.resize(d + 1);
    return p;
}

/// H_*(B_d^Theta); reduced drops one Z from H_0 of a nonempty space.
inline HomologyProfile homology_B(int d, const PosetFamily& f, bool reduced = false) {
    auto P = realize_family(f, d, Kind::marked);
    auto g = homology(build(P, Variant::proj));
    if (reduced && !P.empty()) g[0].rank -= 1;
    return make_profile("B", d, f, reduced, std::move(g));
}

/// Reduced homology of the compactified stratum closure in P_d (basepoint at infinity).
inline HomologyProfile reduced_homology_P(int d, const PosetFamily& f) {
    auto P = realize_family(f, d, Kind::plain);
    return make_profile("P", d, f, true, homology(build(P, Variant::poly)));
}

/// H^j of the complement in P_d: grade j reads the POLY complex at reduced
/// norms j, j+1, j+2, i.e. homological degree d-j-1. H^0 carries the extra
/// Z of a nonempty complement (unreduced).
inline HomologyProfile cohomology_P_complement(int d, const PosetFamily& f) {
    auto P = realize_family(f, d, Kind::plain);
    auto C = build(P, Variant::poly);
    auto h = homology(C);
    std::vector<HomologyGroup> g(d + 1);
    for (int j = 0; j <= d; ++j)
        if (d - j - 1 >= 0) g[j] = h[d - j - 1];
    bool complement_empty = P.size() == enumerate_cells(d, false).size();
    if (!complement_empty) g[0].rank += 1;
    auto p = make_profile("cP", d, f, false, std::move(g));
    p.cohomology = true;
    return p;
}

/// H_*(B_d, B_d^Theta; Z) from the quotient complex.
inline HomologyProfile relative_homology_B(int d, const PosetFamily& f) {
    auto P = realize_family(f, d, Kind::marked);
    return make_profile("rel", d, f, false, homology(build(P, Variant::quotient)));
}

/// H^j(B_d \ B_d^Theta; Z) = H_{d-j} of the quotient complex with coefficients
/// in the orientation system of RP^d (plain coefficients when d is odd).
inline HomologyProfile cohomology_B_complement(int d, const PosetFamily& f) {
    auto P = realize_family(f, d, Kind::marked);
    auto h = homology(build(P, Variant::quotient, true));
    std::vector<HomologyGroup> g(d + 1);
    for (int j = 0; j <= d; ++j) g[j] = h[d - j];
    auto p = make_profile("cB", d, f, false, std::move(g));
    p.cohomology = true;
    return p;
}

/// H_j(B_d \ B_d^Theta; Z^t) = H^{d-j} of the dual of the plain quotient complex.
inline HomologyProfile twisted_homology_B_complement(int d, const PosetFamily& f) {
    auto P = realize_family(f, d, Kind::marked);
    auto h = homology(dualize(build(P, Variant::quotient)));
    std::vector<HomologyGroup> g(d + 1);
    for (int j = 0; j <= d; ++j) g[j] = h[d - j];
    return make_profile("cB-twisted", d, f, false, std::move(g));
}

/// The quotient-complex formula for H^j(complement) read with plain integer
/// coefficients for every d: H_{d-j}(B_d, B_d^Theta; Z). This is the
/// cohomology of the complement with twisted coefficients; it agrees with
/// cohomology_B_complement exactly when d is odd.
inline HomologyProfile untwisted_quotient_reading(int d, const PosetFamily& f) {
    auto rel = relative_homology_B(d, f);
    std::vector<HomologyGroup> g(d + 1);
    for (int j = 0; j <= d; ++j) g[j] = rel.groups[d - j];
    auto p = make_profile("cB-untwisted", d, f, false, std::move(g));
    p.cohomology = true;
    return p;
}

// ---- closed forms -------------------------------------------------------------

inline HomologyGroup Zk(std::size_t k) { return {k, {}}; }
inline HomologyGroup Z2k(std::size_t k) { return {0, std::vector<BigInt>(k, BigInt(2))}; }

/// H_*(RP^d; Z).
inline std::vector<HomologyGroup> rp_homology(int d) {
    std::vector<HomologyGroup> g(d + 1);
    g[0] = Zk(1);
    for (int p = 1; p < d; p += 2) g[p] = Z2k(1);
    if (d % 2 == 1) g[d] = Zk(1);
    return g;
}

/// H^*(RP^d; Z).
inline std::vector<HomologyGroup> rp_cohomology(int d) {
    std::vector<HomologyGroup> g(d + 1);
    g[0] = Zk(1);
    for (int p = 2; p <= d; p += 2) g[p] = Z2k(1);
    if (d % 2 == 1 && d > 0) g[d] = Zk(1);
    return g;
}

inline std::vector<HomologyGroup> sphere_reduced_homology(int d) {
    std::vector<HomologyGroup> g(d + 1);
    g[d] = Zk(1);
    return g;
}

/// Reduced homology of the discriminant in B_d, d >= 2.
inline HomologyProfile discriminant_oracle(int d) {
    if (d < 2) throw ArgumentError("discriminant closed form needs d >= 2");
    std::vector<HomologyGroup> g(d + 1);
    if (d % 2 == 1) {
        g[d - 1] = Zk((d - 1) / 2);
        g[d - 2] = Zk((d + 1) / 2);
        for (int i = d - 4; i >= 1; i -= 2) g[i] = Z2k(1);
    } else {
        g[d - 1] = Zk(1);
        if (d - 2 >= 1) g[d - 2] = Z2k(d / 2 - 1);
        for (int i = d - 3; i >= 1; i -= 2) g[i] = Z2k(1);
    }
    return make_profile("D", d, PosetFamily::disc(), true, std::move(g));
}

/// H_*(B_d, D_d; Z): nonzero only in degrees d and d-1.
inline std::vector<HomologyGroup> relative_discriminant_oracle(int d) {
    std::vector<HomologyGroup> g(d + 1);
    if (d % 2 == 1) {
        g[d] = Zk((d + 1) / 2);
        g[d - 1] = Zk((d + 1) / 2);
    } else {
        g[d] = Zk(1);
        if (d >= 1) g[d - 1] = Z2k(d / 2);
    }
    return g;
}

// ---- cell counts ----------------------------------------------------------------

struct CountPolynomial {
    std::vector<long long> coeffs;  // coefficient of t^j

    long long at(std::size_t j) const { return j < coeffs.size() ? coeffs[j] : 0; }
    long long eval(long long t) const {
        long long v = 0, p = 1;
        for (auto c : coeffs) {
            v += c * p;
            p *= t;
        }
        return v;
    }
    bool operator==(const CountPolynomial& o) const {
        std::size_t n = std::max(coeffs.size(), o.coeffs.size());
        for (std::size_t i = 0; i < n; ++i)
            if (at(i) != o.at(i)) return false;
        return true;
    }
    std::string to_string() const {
        std::string s;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j] == 0) continue;
            if (!s.empty()) s += " + ";
            if (j == 0 || coeffs[j] != 1) s += std::to_string(coeffs[j]);
            if (j >= 1) s += "t";
            if (j >= 2) s += "^" + std::to_string(j);
        }
        return s.empty() ? "0" : s;
    }
};

struct CellCounts {
    CountPolynomial P;  // G(Pbar_d; t), includes the point at infinity
    CountPolynomial B;  // G(B_d; t)
};

inline CellCounts cell_counts(int d) {
    CellCounts c;
    c.P.coeffs.assign(d + 1, 0);
    c.B.coeffs.assign(d + 1, 0);
    c.P.coeffs[0] = 1;
    for (auto& m : enumerate_cells(d, false)) ++c.P.coeffs[cell_dimension(m, d)];
    for (auto& m : enumerate_cells(d, true)) ++c.B.coeffs[cell_dimension(m, d)];
    return c;
}

inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Compositions of n into l parts; one (empty) composition of 0 into 0 parts.
inline long long compositions_count(long long n, long long l) {
    if (n == 0 && l == 0) return 1;
    if (n <= 0 || l <= 0) return 0;
    return binomial(n - 1, l - 1);
}

/// p_j^d summed over the norms d' of the same parity: j - (d - d') parts.
inline long long p_count_by_norm(int d, int j) {
    if (j == 0) return 1 + (d == 0 ? 1 : 0);
    long long s = 0;
    for (int n = d % 2; n <= d; n += 2) s += compositions_count(n, j - (d - n));
    return s;
}

/// The binomial closed form sum_k C(d-1-2k, j-1-2k), k <= min((j-1)/2, (d-1)/2), j >= 1.
inline long long p_count_binomial(int d, int j) {
    long long s = 0;
    int kmax = std::min((j - 1) / 2, (d - 1) / 2);
    for (int k = 0; k <= kmax; ++k) s += binomial(d - 1 - 2 * k, j - 1 - 2 * k);
    return s;
}

}  // namespace stratahom
