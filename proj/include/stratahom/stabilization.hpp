#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spaces.hpp"

namespace stratahom {

/// trunc : Z[Theta_<d+2]] -> Z[Theta_<d]], identity on norm <= d, zero on norm d+2,
/// lowering dimension by 2. maps[j] goes from source grade j+2 to target grade j.
struct TruncMap {
    PosetFamily family;
    int d = 0;
    Variant variant = Variant::proj;
    ChainComplex source;  // degree d+2
    ChainComplex target;  // degree d
    ChainComplex kernel;  // norm d+2 cells with the merge part only, graded as in source
    std::vector<Matrix> maps;
};

inline Kind kind_of(Variant v) { return v == Variant::poly ? Kind::plain : Kind::marked; }

inline TruncMap build_trunc(const PosetFamily& f, int d, Variant variant) {
    if (variant == Variant::quotient) throw ArgumentError("trunc is defined for POLY and PROJ");
    Kind kind = kind_of(variant);
    auto Pd = realize_family(f, d, kind);
    auto Pd2 = realize_family(f, d + 2, kind);
    for (auto& c : Pd2.cells())
        if (c.norm() <= d && !Pd.contains(c)) throw InvariantViolation("realizations at d and d+2 disagree at " + to_string(c));
    for (auto& c : Pd.cells())
        if (!Pd2.contains(c)) throw InvariantViolation("realizations at d and d+2 disagree at " + to_string(c));

    TruncMap T;
    T.family = f;
    T.d = d;
    T.variant = variant;
    T.source = build(Pd2, variant);
    T.target = build(Pd, variant);
    auto& S = T.source;
    auto& R = T.target;

    auto idx = detail::index_basis(R.basis);
    T.maps.resize(d + 1);
    for (int j = 0; j <= d; ++j) {
        Matrix m(static_cast<int>(R.basis[j].size()), static_cast<int>(S.basis[j + 2].size()));
        std::size_t killed = 0;
        for (std::size_t c = 0; c < S.basis[j + 2].size(); ++c) {
            auto& cell = S.basis[j + 2][c];
            if (cell.norm() > d) {
                ++killed;
                continue;
            }
            m.add(idx[j].at(cell), static_cast<int>(c), 1);
        }
        // graded exactness of 0 -> kernel -> source -> target -> 0
        if (S.basis[j + 2].size() != R.basis[j].size() + killed)
            throw InvariantViolation("trunc is not surjective in grade " + std::to_string(j));
        T.maps[j] = std::move(m.normalize());
    }
    // source grades 0 and 1 only hold norm d+2 cells
    for (int j = 0; j < 2 && j <= d + 2; ++j)
        for (auto& c : S.basis[j])
            if (c.norm() <= d) throw InvariantViolation("low-dimensional cell survives trunc");

    // chain map: trunc_{j-1} o d'_{j+2} = d_j o trunc_j
    for (int j = 1; j <= d; ++j) {
        auto lhs = multiply(T.maps[j - 1], S.diff[j + 2]);
        auto rhs = multiply(R.diff[j], T.maps[j]);
        if (!(lhs == rhs)) throw InvariantViolation("trunc is not a chain map in grade " + std::to_string(j));
    }
    // kernel: norm d+2 cells, differential = merge part
    ChainComplex K;
    K.d = d + 2;
    K.variant = variant;
    K.kind = kind;
    K.basis.resize(d + 3);
    for (int j = 0; j <= d + 2; ++j)
        for (auto& c : S.basis[j])
            if (c.norm() == d + 2) K.basis[j].push_back(c);
    auto merges = [&](const MarkedComposition& m) {
        return kind == Kind::marked ? boundary_projective_merges(m, d + 2) : boundary_polynomial_merges(m, d + 2);
    };
    K.diff = detail::assemble(K.basis, d + 2, merges, [](const MarkedComposition&) { return false; });
    // the restriction of the full boundary to the kernel must be the merge part
    for (int j = 1; j <= d + 2; ++j)
        for (std::size_t c = 0; c < K.basis[j].size(); ++c) {
            auto& cell = K.basis[j][c];
            auto full = kind == Kind::marked ? boundary_projective(cell, d + 2) : boundary_polynomial(cell.omega, d + 2);
            if (!(full == merges(cell))) throw InvariantViolation("boundary on the kernel has insert terms");
        }
    if (!squares_to_zero(K)) throw InvariantViolation("kernel differential does not square to zero");
    T.kernel = std::move(K);
    return T;
}

/// Cross-checks psi against the maximum of (d + |x| - 2|x|')/2 over all members.
inline int dim_K(const PosetFamily& f, int d, Kind kind = Kind::marked) {
    auto P = realize_family(f, d, kind);
    int p = psi(P);
    int best = 0;
    bool first = true;
    for (auto& x : P.cells()) {
        int v = d + x.norm() - 2 * x.reduced_norm();
        if (first || v > best) best = v;
        first = false;
    }
    if (best % 2 != 0 || best / 2 != p) throw InvariantViolation("psi disagrees with the direct maximum");
    return p;
}

/// For j+1 >= psi(d+2), no norm-(d+2) member sits at dimension j+2 of the degree d+2 realization.
inline bool top_norm_cells_below_psi(const PosetRealization& Pd2) {
    if (Pd2.empty()) return true;
    int D = Pd2.degree();
    int p = psi(Pd2);
    for (auto& c : Pd2.cells()) {
        if (c.norm() != D) continue;
        int j = cell_dimension(c, D) - 2;
        if (j + 1 >= p) return false;
    }
    return true;
}

struct StabilizationRow {
    int j = 0;
    HomologyGroup upper;  // H_{j+2} at degree d+2
    HomologyGroup lower;  // H_j at degree d
    bool isomorphic = false;
    bool guaranteed = false;
    std::optional<bool> certified;  // slow mode: kernel acyclic at j+1, j+2
};

struct StabilizationReport {
    PosetFamily family;
    int d = 0;
    Variant variant = Variant::proj;
    std::optional<int> psi_upper;  // psi at d+2; none when the realization is empty
    std::vector<StabilizationRow> rows;

    std::vector<int> violations() const {
        std::vector<int> v;
        for (auto& r : rows)
            if (r.guaranteed && !r.isomorphic) v.push_back(r.j);
        return v;
    }
};

inline StabilizationReport stability_report(const PosetFamily& f, int d, Variant variant, bool slow_induced_map = false) {
    TruncMap T = build_trunc(f, d, variant);
    StabilizationReport R;
    R.family = f;
    R.d = d;
    R.variant = variant;
    auto Pd2 = realize_family(f, d + 2, kind_of(variant));
    if (!Pd2.empty()) R.psi_upper = psi(Pd2);
    auto hu = homology(T.source);
    auto hl = homology(T.target);
    std::vector<HomologyGroup> hk;
    if (slow_induced_map) hk = homology(T.kernel);
    for (int j = 0; j <= d; ++j) {
        StabilizationRow row;
        row.j = j;
        row.upper = hu[j + 2];
        row.lower = hl[j];
        row.isomorphic = row.upper == row.lower;
        row.guaranteed = !R.psi_upper || j >= *R.psi_upper - 1;
        if (slow_induced_map) row.certified = hk[j + 2].is_zero() && hk[j + 1].is_zero();
        R.rows.push_back(std::move(row));
    }
    return R;
}

}  // namespace stratahom
