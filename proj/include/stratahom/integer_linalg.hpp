#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <queue>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace stratahom {

using BigInt = mpz_class;

/// Sparse matrix in triplet form. normalize() sorts, merges duplicates and drops zeros.
template <class T>
struct SparseMatrix {
    struct Entry {
        int row, col;
        T value;
    };
    int rows = 0, cols = 0;
    std::vector<Entry> entries;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c) {}

    void add(int r, int c, const T& v) {
        if (r < 0 || r >= rows || c < 0 || c >= cols) throw ArgumentError("matrix index out of range");
        if (v != 0) entries.push_back({r, c, v});
    }

    SparseMatrix& normalize() {
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            return a.col != b.col ? a.col < b.col : a.row < b.row;
        });
        std::vector<Entry> out;
        for (auto& e : entries) {
            if (!out.empty() && out.back().row == e.row && out.back().col == e.col)
                out.back().value += e.value;
            else
                out.push_back(e);
        }
        std::erase_if(out, [](const Entry& e) { return e.value == 0; });
        entries = std::move(out);
        return *this;
    }

    std::size_t nonzeros() const { return entries.size(); }
    bool is_zero() const { return entries.empty(); }

    SparseMatrix transpose() const {
        SparseMatrix t(cols, rows);
        for (auto& e : entries) t.entries.push_back({e.col, e.row, e.value});
        return t.normalize();
    }

    bool operator==(const SparseMatrix& o) const {
        if (rows != o.rows || cols != o.cols || entries.size() != o.entries.size()) return false;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i].row != o.entries[i].row || entries[i].col != o.entries[i].col || entries[i].value != o.entries[i].value)
                return false;
        return true;
    }
};

/// Product a*b (a: r x k, b: k x c), normalized.
template <class T>
SparseMatrix<T> multiply(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
    if (a.cols != b.rows) throw ArgumentError("matrix shapes do not compose");
    std::vector<std::vector<std::pair<int, T>>> brows(b.rows);
    for (auto& e : b.entries) brows[e.row].push_back({e.col, e.value});
    SparseMatrix<T> out(a.rows, b.cols);
    for (auto& e : a.entries)
        for (auto& [c, v] : brows[e.col]) out.entries.push_back({e.row, c, e.value * v});
    return out.normalize();
}

template <class T>
SparseMatrix<T> add(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw ArgumentError("matrix shapes differ");
    SparseMatrix<T> out = a;
    out.entries.insert(out.entries.end(), b.entries.begin(), b.entries.end());
    return out.normalize();
}

using IntMatrix = SparseMatrix<BigInt>;
using DenseMatrix = std::vector<std::vector<BigInt>>;

template <class T>
DenseMatrix to_dense(const SparseMatrix<T>& a) {
    DenseMatrix m(a.rows, std::vector<BigInt>(a.cols, 0));
    for (auto& e : a.entries) m[e.row][e.col] += BigInt(e.value);
    return m;
}

inline DenseMatrix dense_multiply(const DenseMatrix& a, const DenseMatrix& b) {
    std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    DenseMatrix out(n, std::vector<BigInt>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    return out;
}

inline DenseMatrix identity_matrix(std::size_t n) {
    DenseMatrix m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// ---- finitely generated abelian groups -------------------------------------

/// Z^rank plus torsion invariant factors d_1 | d_2 | ..., each >= 2.
struct HomologyGroup {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup& o) const { return rank == o.rank && torsion == o.torsion; }

    /// "0", "Z", "Z^3", "Z ⊕ Z/2 ⊕ Z/4".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        if (rank == 1) s = "Z";
        else if (rank > 1) s = "Z^" + std::to_string(rank);
        for (auto& t : torsion) {
            if (!s.empty()) s += " ⊕ ";
            s += "Z/" + t.get_str();
        }
        return s;
    }

    /// Table style: "Z^2 ⊕ Z/2Z", repeated factors as "(Z/2Z)^3".
    std::string to_table_string() const {
        if (is_zero()) return "0";
        std::string s;
        if (rank == 1) s = "Z";
        else if (rank > 1) s = "Z^" + std::to_string(rank);
        for (std::size_t i = 0; i < torsion.size();) {
            std::size_t j = i;
            while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
            if (!s.empty()) s += " ⊕ ";
            std::string f = "Z/" + torsion[i].get_str() + "Z";
            s += j - i == 1 ? f : "(" + f + ")^" + std::to_string(j - i);
            i = j;
        }
        return s;
    }
};

/// Parses "0", "Z", "Z^3", "Z ⊕ Z/2 ⊕ Z/4", "Z^2⊕Z/2Z", "(Z/2Z)^3"; '+' also accepted as separator.
inline HomologyGroup parse_group(const std::string& text) {
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.compare(i, 3, "⊕") == 0) {
            s += '+';
            i += 2;
        } else if (text[i] != ' ') {
            s += text[i];
        }
    }
    HomologyGroup g;
    if (s == "0" || s.empty()) return g;
    std::stringstream ss(s);
    std::string tok;
    auto number = [&](const std::string& x) {
        if (x.empty() || x.find_first_not_of("0123456789") != std::string::npos) throw ArgumentError("malformed group '" + text + "'");
        return std::stoul(x);
    };
    while (std::getline(ss, tok, '+')) {
        std::size_t power = 1;
        if (tok.size() > 2 && tok.front() == '(') {
            auto close = tok.find(")^");
            if (close == std::string::npos) throw ArgumentError("malformed group '" + text + "'");
            power = number(tok.substr(close + 2));
            tok = tok.substr(1, close - 1);
        }
        if (tok == "Z") {
            g.rank += power;
        } else if (tok.rfind("Z^", 0) == 0) {
            g.rank += power * number(tok.substr(2));
        } else if (tok.rfind("Z/", 0) == 0) {
            std::string n = tok.substr(2);
            if (!n.empty() && n.back() == 'Z') n.pop_back();
            BigInt v(static_cast<unsigned long>(number(n)));
            for (std::size_t i = 0; i < power; ++i) g.torsion.push_back(v);
        } else {
            throw ArgumentError("malformed group '" + text + "'");
        }
    }
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

/// Turns an arbitrary list of positive diagonal entries into invariant factors (> 1, divisibility chain).
inline std::vector<BigInt> invariant_factors(std::vector<BigInt> diag) {
    for (auto& v : diag) v = abs(v);
    diag.erase(std::remove_if(diag.begin(), diag.end(), [](const BigInt& v) { return v <= 1; }), diag.end());
    std::sort(diag.begin(), diag.end());
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            BigInt g = gcd(diag[i], diag[j]);
            if (g == diag[i]) continue;
            BigInt l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    diag.erase(std::remove_if(diag.begin(), diag.end(), [](const BigInt& v) { return v <= 1; }), diag.end());
    std::sort(diag.begin(), diag.end());
    return diag;
}

// ---- sparse elimination ------------------------------------------------------

namespace detail {

struct Overflow {};

inline std::int64_t ck_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t ck_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t ck_abs(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
}
inline BigInt ck_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt ck_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt ck_abs(const BigInt& a) { return abs(a); }

inline bool is_unit(std::int64_t a) { return a == 1 || a == -1; }
inline bool is_unit(const BigInt& a) { return a == 1 || a == -1; }

// g = s*a + t*b with g = gcd(a,b) > 0
inline std::tuple<std::int64_t, std::int64_t, std::int64_t> xgcd(std::int64_t a, std::int64_t b) {
    std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = ck_add(r0, -ck_mul(q, r1));
        std::int64_t s2 = ck_add(s0, -ck_mul(q, s1));
        std::int64_t t2 = ck_add(t0, -ck_mul(q, t1));
        r0 = r1; r1 = r2; s0 = s1; s1 = s2; t0 = t1; t1 = t2;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    return {r0, s0, t0};
}
inline std::tuple<BigInt, BigInt, BigInt> xgcd(const BigInt& a, const BigInt& b) {
    BigInt g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {g, s, t};
}

template <class Int>
class Eliminator {
public:
    using Row = std::vector<std::pair<int, Int>>;

    template <class T>
    explicit Eliminator(const SparseMatrix<T>& a) : rows_(a.rows), colrows_(a.cols) {
        for (auto& e : a.entries) {
            Int v;
            if constexpr (std::is_same_v<Int, std::int64_t>) {
                if constexpr (std::is_same_v<T, BigInt>) {
                    if (!e.value.fits_slong_p()) throw Overflow{};
                    v = e.value.get_si();
                } else {
                    v = static_cast<std::int64_t>(e.value);
                }
            } else {
                v = BigInt(e.value);
            }
            rows_[e.row].push_back({e.col, v});
        }
        for (int r = 0; r < a.rows; ++r) {
            auto& row = rows_[r];
            std::sort(row.begin(), row.end(), [](auto& x, auto& y) { return x.first < y.first; });
            Row merged;
            for (auto& [c, v] : row) {
                if (!merged.empty() && merged.back().first == c) merged.back().second = ck_add(merged.back().second, v);
                else merged.push_back({c, v});
            }
            std::erase_if(merged, [](auto& x) { return x.second == 0; });
            row = std::move(merged);
            for (auto& [c, v] : row) colrows_[c].push_back(r);
        }
        alive_.assign(a.rows, true);
    }

    /// Reduces to diagonal form; returns (rank, non-unit diagonal entries).
    std::pair<std::size_t, std::vector<BigInt>> run() {
        std::size_t rank = 0;
        std::vector<BigInt> diag;
        for (;;) {
            rank += unit_phase();
            auto piv = smallest_entry();
            if (piv.first < 0) break;
            diag.push_back(general_pivot(piv.first, piv.second));
            ++rank;
        }
        return {rank, diag};
    }

private:
    std::vector<Row> rows_;
    std::vector<std::vector<int>> colrows_;
    std::vector<bool> alive_;

    const Int* find(int r, int c) const {
        auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](auto& x, int v) { return x.first < v; });
        return it != row.end() && it->first == c ? &it->second : nullptr;
    }

    // Live rows with a nonzero in column c; compacts the index.
    std::vector<int> column(int c) {
        auto& list = colrows_[c];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        std::erase_if(list, [&](int r) { return !alive_[r] || !find(r, c); });
        return list;
    }

    // row_t = a*row_t + b*row_s
    void combine(int t, const Int& a, int s, const Int& b) {
        Row out;
        auto& x = rows_[t];
        auto& y = rows_[s];
        out.reserve(x.size() + y.size());
        std::size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
                Int v = a == 1 ? x[i].second : ck_mul(a, x[i].second);
                if (v != 0) out.push_back({x[i].first, v});
                ++i;
            } else if (i == x.size() || y[j].first < x[i].first) {
                Int v = ck_mul(b, y[j].second);
                if (v != 0) {
                    out.push_back({y[j].first, v});
                    colrows_[y[j].first].push_back(t);
                }
                ++j;
            } else {
                Int v = ck_add(a == 1 ? x[i].second : ck_mul(a, x[i].second), ck_mul(b, y[j].second));
                if (v != 0) out.push_back({x[i].first, v});
                ++i;
                ++j;
            }
        }
        x = std::move(out);
    }

    void kill(int r) {
        alive_[r] = false;
        rows_[r].clear();
    }

    // Eliminates +-1 pivots, shortest rows first.
    std::size_t unit_phase() {
        using Item = std::pair<std::size_t, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
        for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
            if (alive_[r] && !rows_[r].empty()) heap.push({rows_[r].size(), r});
        std::size_t rank = 0;
        while (!heap.empty()) {
            auto [len, r] = heap.top();
            heap.pop();
            if (!alive_[r] || rows_[r].size() != len || len == 0) continue;
            int best = -1;
            std::size_t best_cost = 0;
            for (auto& [c, v] : rows_[r]) {
                if (!is_unit(v)) continue;
                std::size_t cost = colrows_[c].size();
                if (best < 0 || cost < best_cost) {
                    best = c;
                    best_cost = cost;
                }
            }
            if (best < 0) continue;
            Int p = *find(r, best);
            for (int o : column(best)) {
                if (o == r) continue;
                Int q = ck_mul(*find(o, best), p);  // p^-1 = p
                combine(o, Int(1), r, Int(-q));
                if (!rows_[o].empty()) heap.push({rows_[o].size(), o});
            }
            kill(r);
            colrows_[best].clear();
            ++rank;
        }
        return rank;
    }

    std::pair<int, int> smallest_entry() {
        int br = -1, bc = -1;
        Int bv = 0;
        std::size_t bcost = 0;
        for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
            if (!alive_[r]) continue;
            for (auto& [c, v] : rows_[r]) {
                Int a = ck_abs(v);
                std::size_t cost = rows_[r].size() + colrows_[c].size();
                if (br < 0 || a < bv || (a == bv && cost < bcost)) {
                    br = r;
                    bc = c;
                    bv = a;
                    bcost = cost;
                }
            }
        }
        return {br, bc};
    }

    // Clears row r and column c around pivot (r,c) with unimodular operations.
    BigInt general_pivot(int r, int c) {
        for (;;) {
            bool clean = true;
            for (int o : column(c)) {
                if (o == r) continue;
                clean = false;
                Int p = *find(r, c);
                Int a = *find(o, c);
                if (a % p == 0) {
                    combine(o, Int(1), r, Int(-(a / p)));
                } else {
                    auto [g, s, t] = xgcd(p, a);
                    Row old_r = rows_[r];
                    // r <- s*r + t*o ; o <- (-a/g)*r_old + (p/g)*o
                    combine(r, s, o, t);
                    Row new_r = std::move(rows_[r]);
                    rows_[r] = std::move(old_r);
                    combine(o, Int(p / g), r, Int(-(a / g)));
                    rows_[r] = std::move(new_r);
                    for (auto& [cc, v] : rows_[r]) colrows_[cc].push_back(r);
                }
            }
            if (!clean) continue;
            Int p = *find(r, c);
            int bad = -1;
            for (auto& [cc, v] : rows_[r])
                if (cc != c && v % p != 0) {
                    bad = cc;
                    break;
                }
            if (bad < 0) {
                BigInt out;
                if constexpr (std::is_same_v<Int, BigInt>) out = abs(p);
                else out = BigInt(static_cast<long>(ck_abs(p)));
                kill(r);
                colrows_[c].clear();
                return out;
            }
            // column op between c and bad
            Int b = *find(r, bad);
            auto [g, s, t] = xgcd(p, b);
            Int u = -(b / g), w = p / g;
            std::vector<int> touched = column(bad);
            touched.push_back(r);
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (int o : touched) {
                const Int* xp = find(o, c);
                const Int* yp = find(o, bad);
                Int x = xp ? *xp : Int(0), y = yp ? *yp : Int(0);
                set(o, c, ck_add(ck_mul(s, x), ck_mul(t, y)));
                set(o, bad, ck_add(ck_mul(u, x), ck_mul(w, y)));
            }
        }
    }

    void set(int r, int c, const Int& v) {
        auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](auto& x, int k) { return x.first < k; });
        if (it != row.end() && it->first == c) {
            if (v == 0) row.erase(it);
            else it->second = v;
        } else if (v != 0) {
            row.insert(it, {c, v});
            colrows_[c].push_back(r);
        }
    }
};

}  // namespace detail

struct ElementaryDivisors {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1
};

/// Rank and non-unit invariant factors; word-size arithmetic with a GMP retry on overflow.
template <class T>
ElementaryDivisors elementary_divisors(const SparseMatrix<T>& a) {
    std::pair<std::size_t, std::vector<BigInt>> res;
    try {
        detail::Eliminator<std::int64_t> e(a);
        res = e.run();
    } catch (const detail::Overflow&) {
        detail::Eliminator<BigInt> e(a);
        res = e.run();
    }
    return {res.first, invariant_factors(std::move(res.second))};
}

// ---- dense Smith normal form with transforms --------------------------------

struct SmithForm {
    DenseMatrix D, U, V;         // U*A*V = D
    std::vector<BigInt> diagonal;  // nonzero diagonal, d_1 | d_2 | ...
    std::size_t rank = 0;
};

inline SmithForm smith_normal_form(const DenseMatrix& A, bool transforms = true) {
    std::size_t m = A.size(), n = m ? A[0].size() : 0;
    SmithForm S;
    S.D = A;
    if (transforms) {
        S.U = identity_matrix(m);
        S.V = identity_matrix(n);
    }
    auto& D = S.D;
    auto row_op = [&](std::size_t t, std::size_t s, const BigInt& q) {  // row_t -= q row_s
        for (std::size_t j = 0; j < n; ++j) D[t][j] -= q * D[s][j];
        if (transforms)
            for (std::size_t j = 0; j < m; ++j) S.U[t][j] -= q * S.U[s][j];
    };
    auto col_op = [&](std::size_t t, std::size_t s, const BigInt& q) {  // col_t -= q col_s
        for (std::size_t i = 0; i < m; ++i) D[i][t] -= q * D[i][s];
        if (transforms)
            for (std::size_t i = 0; i < n; ++i) S.V[i][t] -= q * S.V[i][s];
    };
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(D[a], D[b]);
        if (transforms) std::swap(S.U[a], S.U[b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (auto& row : D) std::swap(row[a], row[b]);
        if (transforms)
            for (auto& row : S.V) std::swap(row[a], row[b]);
    };
    // nearest-integer quotient keeps remainders within half the pivot
    auto nearest = [](const BigInt& a, const BigInt& b) {
        BigInt q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (2 * abs(r) > abs(b)) q += sgn(b) * sgn(r);
        return q;
    };
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        bool empty = false;
        for (;;) {
            // the smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D[i][j] != 0 && (pi == m || abs(D[i][j]) < abs(D[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) {
                empty = true;
                break;
            }
            if (pi != t) swap_rows(t, pi);
            if (pj != t) swap_cols(t, pj);
            bool clear = true;
            for (std::size_t i = t + 1; i < m; ++i)
                if (D[i][t] != 0) {
                    row_op(i, t, nearest(D[i][t], D[t][t]));
                    clear &= D[i][t] == 0;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (D[t][j] != 0) {
                    col_op(j, t, nearest(D[t][j], D[t][t]));
                    clear &= D[t][j] == 0;
                }
            if (!clear) continue;
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            row_op(t, bad, BigInt(-1));
        }
        if (empty) break;
        if (D[t][t] < 0) {
            for (std::size_t j = 0; j < n; ++j) D[t][j] = -D[t][j];
            if (transforms)
                for (std::size_t j = 0; j < m; ++j) S.U[t][j] = -S.U[t][j];
        }
        S.diagonal.push_back(D[t][t]);
    }
    S.rank = S.diagonal.size();
    return S;
}

inline bool is_unimodular(const DenseMatrix& M) {
    // |det| = 1 via fraction-free Bareiss
    std::size_t n = M.size();
    if (n == 0) return true;
    DenseMatrix a = M;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return false;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    BigInt det = a[n - 1][n - 1] * sign;
    return det == 1 || det == -1;
}

// ---- rank over F_p -------------------------------------------------------------

template <class T>
std::size_t modp_rank(const SparseMatrix<T>& a, long p) {
    if (p < 2) throw ArgumentError("modulus must be >= 2");
    auto red = [p](const T& v) {
        BigInt b(v);
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(p));
        return static_cast<long>(r.get_si());
    };
    std::vector<std::vector<std::pair<int, long>>> rows(a.rows);
    for (auto& e : a.entries) {
        long v = red(e.value);
        if (v) rows[e.row].push_back({e.col, v});
    }
    for (auto& row : rows) {
        std::sort(row.begin(), row.end());
        std::vector<std::pair<int, long>> m;
        for (auto& [c, v] : row) {
            if (!m.empty() && m.back().first == c) m.back().second = (m.back().second + v) % p;
            else m.push_back({c, v});
        }
        std::erase_if(m, [](auto& x) { return x.second == 0; });
        row = std::move(m);
    }
    auto inv = [p](long x) {
        long r = 1, b = x % p, e = p - 2;
        while (e > 0) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    // pivot rows keyed by leading column
    std::vector<int> pivot_of(a.cols, -1);
    std::vector<std::vector<std::pair<int, long>>> basis;
    std::size_t rank = 0;
    for (auto& row : rows) {
        auto cur = row;
        while (!cur.empty()) {
            int lead = cur.front().first;
            int b = pivot_of[lead];
            if (b < 0) {
                long s = inv(cur.front().second);
                for (auto& x : cur) x.second = x.second * s % p;
                pivot_of[lead] = static_cast<int>(basis.size());
                basis.push_back(std::move(cur));
                ++rank;
                break;
            }
            long f = cur.front().second;
            auto& br = basis[b];
            std::vector<std::pair<int, long>> out;
            std::size_t i = 0, j = 0;
            while (i < cur.size() || j < br.size()) {
                if (j == br.size() || (i < cur.size() && cur[i].first < br[j].first)) {
                    out.push_back(cur[i++]);
                } else if (i == cur.size() || br[j].first < cur[i].first) {
                    long v = (p - f * br[j].second % p) % p;
                    if (v) out.push_back({br[j].first, v});
                    ++j;
                } else {
                    long v = ((cur[i].second - f * br[j].second) % p + p) % p;
                    if (v) out.push_back({cur[i].first, v});
                    ++i;
                    ++j;
                }
            }
            cur = std::move(out);
        }
    }
    return rank;
}

}  // namespace stratahom
