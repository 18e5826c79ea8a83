#pragma once

#include <map>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "integer_linalg.hpp"
#include "posets.hpp"

namespace stratahom {

/// Integer combination of cells; zero coefficients are never stored.
struct FormalSum {
    std::map<MarkedComposition, long> terms;

    void add(const MarkedComposition& m, long c) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(m, c);
        if (!fresh && (it->second += c) == 0) terms.erase(it);
    }
    bool is_zero() const { return terms.empty(); }
    long coefficient(const MarkedComposition& m) const {
        auto it = terms.find(m);
        return it == terms.end() ? 0 : it->second;
    }
    bool operator==(const FormalSum&) const = default;
};

inline long sign_of(std::size_t k) { return k % 2 ? -1 : 1; }

// Merge part of the projective boundary. With `twisted`, the term sending the
// last part to infinity picks up the orientation character (-1)^(d+1) when that
// part is odd (coefficients in the orientation system of RP^d).
inline FormalSum boundary_projective_merges(const MarkedComposition& m, int d, bool twisted = false) {
    if (!is_nonempty_cell(m, d)) throw DomainError("empty cell " + to_string(m));
    FormalSum s;
    std::size_t l = m.length();
    if (l == 0) return s;
    for (std::size_t k = 0; k <= l; ++k) {
        long c = -sign_of(k);
        if (twisted && k == l && m.omega.parts.back() % 2 == 1 && d % 2 == 0) c = -c;
        s.add(merge_inf(m, k), c);
    }
    return s;
}

inline FormalSum boundary_inserts(const MarkedComposition& m, int d) {
    if (!is_nonempty_cell(m, d)) throw DomainError("empty cell " + to_string(m));
    FormalSum s;
    if (m.norm() + 2 > d) return s;
    for (std::size_t k = 0; k <= m.length(); ++k) s.add(insert_inf(m, k), sign_of(k));
    return s;
}

inline FormalSum boundary_polynomial_merges(const MarkedComposition& m, int d) {
    if (m.kappa != 0) throw ArgumentError("polynomial boundary of a marked pattern");
    if (!is_nonempty_cell(m, d)) throw DomainError("empty cell " + to_string(m));
    FormalSum s;
    for (std::size_t k = 1; k + 1 <= m.length(); ++k) s.add({merge(m.omega, k), 0}, -sign_of(k));
    return s;
}

inline FormalSum boundary_projective(const MarkedComposition& m, int d, bool twisted = false) {
    FormalSum s = boundary_projective_merges(m, d, twisted);
    for (auto& [c, v] : boundary_inserts(m, d).terms) s.add(c, v);
    return s;
}

inline FormalSum boundary_polynomial(const Composition& w, int d) {
    MarkedComposition m(w, 0);
    FormalSum s = boundary_polynomial_merges(m, d);
    for (auto& [c, v] : boundary_inserts(m, d).terms) s.add(c, v);
    return s;
}

enum class Variant { poly, proj, quotient };

inline std::string to_string(Variant v) {
    switch (v) {
        case Variant::poly: return "POLY";
        case Variant::proj: return "PROJ";
        case Variant::quotient: return "QUOTIENT";
    }
    return "?";
}

using Matrix = SparseMatrix<std::int64_t>;

/// Graded free complex. basis[j] holds the cells of dimension j. For a chain
/// complex diff[j] : C_j -> C_{j-1}; after dualize, diff[j] : C^j -> C^{j+1}.
struct ChainComplex {
    int d = 0;
    Variant variant = Variant::proj;
    Kind kind = Kind::marked;
    bool cochain = false;
    bool twisted = false;
    std::vector<std::vector<MarkedComposition>> basis;
    std::vector<Matrix> diff;

    int step() const { return cochain ? 1 : -1; }
    std::size_t rank(int j) const { return basis[j].size(); }
    std::size_t total_cells() const {
        std::size_t n = 0;
        for (auto& b : basis) n += b.size();
        return n;
    }
    /// The map landing in grade j, if any.
    const Matrix* incoming(int j) const {
        int src = j - step();
        if (src < 0 || src > d) return nullptr;
        return &diff[src];
    }
    bool operator==(const ChainComplex& o) const {
        return d == o.d && cochain == o.cochain && basis == o.basis && diff == o.diff;
    }
};

namespace detail {

inline std::vector<std::unordered_map<MarkedComposition, int, MarkedCompositionHash>> index_basis(
    const std::vector<std::vector<MarkedComposition>>& basis) {
    std::vector<std::unordered_map<MarkedComposition, int, MarkedCompositionHash>> idx(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < basis[j].size(); ++i) idx[j].emplace(basis[j][i], static_cast<int>(i));
    return idx;
}

inline std::vector<std::vector<MarkedComposition>> grade(const std::vector<MarkedComposition>& cells, int d) {
    std::vector<std::vector<MarkedComposition>> basis(d + 1);
    for (auto& c : cells) basis[cell_dimension(c, d)].push_back(c);
    for (auto& b : basis) std::sort(b.begin(), b.end());
    return basis;
}

// Assembles boundary matrices from a per-cell formula. Targets missing from the
// basis are dropped when `drop` accepts them, otherwise they are an error.
template <class F, class Drop>
std::vector<Matrix> assemble(const std::vector<std::vector<MarkedComposition>>& basis, int d, F&& formula, Drop&& drop) {
    auto idx = index_basis(basis);
    std::vector<Matrix> diff(d + 1);
    diff[0] = Matrix(0, static_cast<int>(basis[0].size()));
    for (int j = 1; j <= d; ++j) {
        Matrix m(static_cast<int>(basis[j - 1].size()), static_cast<int>(basis[j].size()));
        for (std::size_t c = 0; c < basis[j].size(); ++c)
            for (auto& [t, v] : formula(basis[j][c]).terms) {
                auto it = idx[j - 1].find(t);
                if (it == idx[j - 1].end()) {
                    if (drop(t)) continue;
                    throw InvariantViolation("boundary of " + to_string(basis[j][c]) + " leaves the complex at " + to_string(t));
                }
                m.add(it->second, static_cast<int>(c), v);
            }
        diff[j] = std::move(m.normalize());
    }
    return diff;
}

}  // namespace detail

inline bool squares_to_zero(const ChainComplex& C) {
    for (int j = 0; j <= C.d; ++j) {
        int t = j + C.step();
        if (t < 0 || t > C.d) continue;
        if (!multiply(C.diff[t], C.diff[j]).is_zero()) return false;
    }
    return true;
}

/// Cellular complex of a closed realization. QUOTIENT uses the complement of P
/// in all cells of degree d and sends boundary terms inside P to zero.
inline ChainComplex build(const PosetRealization& P, Variant variant, bool twisted = false) {
    if (!is_closed(P)) throw InvariantViolation("realization is not closed");
    if (variant == Variant::poly && P.kind() != Kind::plain) throw ArgumentError("POLY complex needs a plain realization");
    if (variant == Variant::proj && P.kind() != Kind::marked) throw ArgumentError("PROJ complex needs a marked realization");
    ChainComplex C;
    C.d = P.degree();
    C.variant = variant;
    C.kind = P.kind();
    C.twisted = twisted;
    int d = C.d;
    std::vector<MarkedComposition> cells;
    if (variant == Variant::quotient) {
        for (auto& c : enumerate_cells(d, P.kind() == Kind::marked))
            if (!P.contains(c)) cells.push_back(std::move(c));
    } else {
        cells = P.cells();
    }
    C.basis = detail::grade(cells, d);
    auto formula = [&](const MarkedComposition& m) {
        return C.kind == Kind::marked ? boundary_projective(m, d, twisted) : boundary_polynomial(m.omega, d);
    };
    auto drop = [&](const MarkedComposition& t) { return variant == Variant::quotient && P.contains(t); };
    C.diff = detail::assemble(C.basis, d, formula, drop);
    if (!squares_to_zero(C)) throw InvariantViolation("boundary does not square to zero");
    return C;
}

inline ChainComplex dualize(const ChainComplex& C) {
    ChainComplex D = C;
    D.cochain = !C.cochain;
    int d = C.d;
    for (int j = 0; j <= d; ++j) {
        int src = j + D.step();  // the old map out of src lands in j
        int n = static_cast<int>(C.basis[j].size());
        if (src < 0 || src > d) D.diff[j] = Matrix(0, n);
        else D.diff[j] = C.diff[src].transpose();
    }
    return D;
}

/// Checks that merge and insert parts are anticommuting differentials.
inline bool verify_anticommute(const PosetRealization& P) {
    int d = P.degree();
    auto basis = detail::grade(P.cells(), d);
    bool marked = P.kind() == Kind::marked;
    auto never = [](const MarkedComposition&) { return false; };
    auto M = detail::assemble(
        basis, d,
        [&](const MarkedComposition& m) { return marked ? boundary_projective_merges(m, d) : boundary_polynomial_merges(m, d); },
        never);
    auto I = detail::assemble(basis, d, [&](const MarkedComposition& m) { return boundary_inserts(m, d); }, never);
    for (int j = 2; j <= d; ++j) {
        if (!multiply(M[j - 1], M[j]).is_zero()) return false;
        if (!multiply(I[j - 1], I[j]).is_zero()) return false;
        if (!add(multiply(M[j - 1], I[j]), multiply(I[j - 1], M[j])).is_zero()) return false;
    }
    return true;
}

// ---- homology ----------------------------------------------------------------

/// H_j (or H^j for a cochain complex): ker of the outgoing map over the image of the incoming one.
inline HomologyGroup homology_at(const ChainComplex& C, int j) {
    if (j < 0 || j > C.d) throw ArgumentError("degree out of range");
    auto out = elementary_divisors(C.diff[j]);
    HomologyGroup g;
    std::size_t in_rank = 0;
    if (auto in = C.incoming(j)) {
        auto e = elementary_divisors(*in);
        in_rank = e.rank;
        g.torsion = std::move(e.torsion);
    }
    g.rank = C.rank(j) - out.rank - in_rank;
    return g;
}

/// All groups, one elimination per matrix.
inline std::vector<HomologyGroup> homology(const ChainComplex& C) {
    std::vector<ElementaryDivisors> ed(C.d + 1);
    for (int j = 0; j <= C.d; ++j) ed[j] = elementary_divisors(C.diff[j]);
    std::vector<HomologyGroup> out(C.d + 1);
    for (int j = 0; j <= C.d; ++j) {
        int src = j - C.step();
        std::size_t in_rank = 0;
        if (src >= 0 && src <= C.d) {
            in_rank = ed[src].rank;
            out[j].torsion = ed[src].torsion;
        }
        out[j].rank = C.rank(j) - ed[j].rank - in_rank;
    }
    return out;
}

/// "j: <cell_out> <- <cell_in> : coeff", one line per nonzero entry.
inline void dump(const ChainComplex& C, std::ostream& os) {
    for (int j = 0; j <= C.d; ++j) {
        int t = j + C.step();
        if (t < 0 || t > C.d) continue;
        for (auto& e : C.diff[j].entries)
            os << j << ": " << to_string(C.basis[t][e.row], C.kind) << " <- " << to_string(C.basis[j][e.col], C.kind)
               << " : " << e.value << "\n";
    }
}

}  // namespace stratahom
