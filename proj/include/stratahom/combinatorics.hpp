#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace stratahom {

/// Ordered multiplicities of the real roots, left to right.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    Composition(std::initializer_list<int> p) : parts(p) { check(); }
    explicit Composition(std::vector<int> p) : parts(std::move(p)) { check(); }

    std::size_t length() const { return parts.size(); }
    bool empty() const { return parts.empty(); }
    int norm() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int reduced_norm() const { return norm() - static_cast<int>(parts.size()); }
    int max_part() const { return parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end()); }

    auto operator<=>(const Composition&) const = default;
    bool operator==(const Composition&) const = default;

private:
    void check() const {
        for (int p : parts)
            if (p < 1) throw ArgumentError("composition parts must be positive");
    }
};

/// Composition plus the multiplicity kappa of the root at infinity.
struct MarkedComposition {
    Composition omega;
    int kappa = 0;

    MarkedComposition() = default;
    MarkedComposition(Composition w, int k) : omega(std::move(w)), kappa(k) {
        if (k < 0) throw ArgumentError("kappa must be non-negative");
    }
    explicit MarkedComposition(Composition w) : omega(std::move(w)) {}

    int norm() const { return omega.norm() + kappa; }
    int reduced_norm() const { return omega.reduced_norm() + kappa; }
    std::size_t length() const { return omega.length(); }

    bool operator==(const MarkedComposition&) const = default;
};

// Cell order: norm, then parts lexicographically, then kappa.
inline bool operator<(const MarkedComposition& a, const MarkedComposition& b) {
    int na = a.norm(), nb = b.norm();
    if (na != nb) return na < nb;
    if (a.omega != b.omega) return a.omega.parts < b.omega.parts;
    return a.kappa < b.kappa;
}

struct MarkedCompositionHash {
    std::size_t operator()(const MarkedComposition& m) const noexcept {
        std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(m.kappa);
        for (int p : m.omega.parts) h = (h ^ static_cast<std::uint64_t>(p)) * 1099511628211ull;
        return static_cast<std::size_t>(h ^ (m.omega.parts.size() << 48));
    }
};

enum class Kind { plain, marked };

// ---- merge / insert --------------------------------------------------------

/// M_j: sum parts j and j+1 (1-based), 1 <= j <= l-1.
inline Composition merge(const Composition& w, std::size_t j) {
    std::size_t l = w.length();
    if (l < 2 || j < 1 || j > l - 1) throw ArgumentError("merge index out of range");
    std::vector<int> p;
    p.reserve(l - 1);
    for (std::size_t i = 0; i < l; ++i) {
        if (i + 1 == j) {
            p.push_back(w.parts[i] + w.parts[i + 1]);
            ++i;
        } else {
            p.push_back(w.parts[i]);
        }
    }
    return Composition(std::move(p));
}

/// I_j: put a new part 2 after part j, 0 <= j <= l (0 prepends).
inline Composition insert(const Composition& w, std::size_t j) {
    if (j > w.length()) throw ArgumentError("insert position out of range");
    std::vector<int> p = w.parts;
    p.insert(p.begin() + static_cast<std::ptrdiff_t>(j), 2);
    return Composition(std::move(p));
}

/// M_j^inf on marked compositions, 0 <= j <= l. j = 0 and j = l send the
/// first/last part to infinity.
inline MarkedComposition merge_inf(const MarkedComposition& m, std::size_t j) {
    std::size_t l = m.length();
    if (l == 0) throw ArgumentError("merge_inf of an empty composition");
    if (j > l) throw ArgumentError("merge_inf index out of range");
    const auto& p = m.omega.parts;
    if (j == 0) return {Composition(std::vector<int>(p.begin() + 1, p.end())), m.kappa + p.front()};
    if (j == l) return {Composition(std::vector<int>(p.begin(), p.end() - 1)), m.kappa + p.back()};
    return {merge(m.omega, j), m.kappa};
}

inline MarkedComposition insert_inf(const MarkedComposition& m, std::size_t j) {
    return {insert(m.omega, j), m.kappa};
}

/// One-step images (merges then inserts), without norm cutoff.
inline std::vector<MarkedComposition> one_step_images(const MarkedComposition& m, Kind kind) {
    std::vector<MarkedComposition> out;
    std::size_t l = m.length();
    if (kind == Kind::marked) {
        if (l > 0)
            for (std::size_t j = 0; j <= l; ++j) out.push_back(merge_inf(m, j));
    } else {
        for (std::size_t j = 1; j + 1 <= l; ++j) out.push_back({merge(m.omega, j), 0});
    }
    for (std::size_t j = 0; j <= l; ++j) out.push_back(insert_inf(m, j));
    return out;
}

/// x precedes y: x is reachable from y by merges/inserts.
inline bool precedes(const MarkedComposition& x, const MarkedComposition& y, Kind kind) {
    if (kind == Kind::plain && (x.kappa != 0 || y.kappa != 0))
        throw ArgumentError("plain order applied to marked compositions");
    if (x == y) return true;
    int dr = x.reduced_norm() - y.reduced_norm();
    int dn = x.norm() - y.norm();
    if (dr <= 0 || dn < 0 || dn % 2 != 0) return false;
    // Depth-first search; each step raises reduced norm by one.
    std::vector<MarkedComposition> stack{y};
    std::vector<MarkedComposition> seen;
    while (!stack.empty()) {
        MarkedComposition c = std::move(stack.back());
        stack.pop_back();
        for (auto& n : one_step_images(c, kind)) {
            if (n.norm() > x.norm() || n.reduced_norm() > x.reduced_norm()) continue;
            if (n == x) return true;
            if (std::find(seen.begin(), seen.end(), n) != seen.end()) continue;
            seen.push_back(n);
            stack.push_back(std::move(n));
        }
    }
    return false;
}

inline bool precedes(const Composition& x, const Composition& y) {
    return precedes(MarkedComposition(x), MarkedComposition(y), Kind::plain);
}

// ---- cells ------------------------------------------------------------------

inline bool is_nonempty_cell(const MarkedComposition& m, int d) {
    int n = m.norm();
    return d >= 0 && n <= d && (d - n) % 2 == 0;
}

inline int cell_dimension(const MarkedComposition& m, int d) {
    if (!is_nonempty_cell(m, d)) throw DomainError("empty cell");
    return d - m.reduced_norm();
}

/// All compositions of n in lexicographic order.
inline std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n < 0) return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

/// Every nonempty cell of B_d (marked) or of P_d (plain), in cell order.
inline std::vector<MarkedComposition> enumerate_cells(int d, bool marked) {
    if (d < 0) throw ArgumentError("negative degree");
    std::vector<MarkedComposition> out;
    for (int n = d % 2; n <= d; n += 2) {
        if (marked) {
            for (int k = 0; k <= n; ++k)
                for (auto& w : compositions_of(n - k)) out.emplace_back(std::move(w), k);
        } else {
            for (auto& w : compositions_of(n)) out.emplace_back(std::move(w), 0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- text syntax: "1,2,2,4,3|2", "()" ---------------------------------------

inline Composition parse_composition(std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '(')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == ')')) v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    std::vector<int> parts;
    if (s.empty()) return Composition();
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string_view tok = trim(s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos));
        if (tok.empty()) throw ArgumentError("malformed composition: empty part");
        int v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') throw ArgumentError("malformed composition: '" + std::string(tok) + "'");
            v = v * 10 + (c - '0');
            if (v > 1000000) throw ArgumentError("composition part too large");
        }
        if (v == 0) throw ArgumentError("composition parts must be positive");
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

inline MarkedComposition parse_pattern(std::string_view s) {
    std::size_t bar = s.find('|');
    if (bar == std::string_view::npos) return MarkedComposition(parse_composition(s), 0);
    std::string_view k = s.substr(bar + 1);
    while (!k.empty() && k.front() == ' ') k.remove_prefix(1);
    while (!k.empty() && k.back() == ' ') k.remove_suffix(1);
    if (k.empty()) throw ArgumentError("malformed pattern: missing kappa");
    int kv = 0;
    for (char c : k) {
        if (c < '0' || c > '9') throw ArgumentError("malformed pattern kappa");
        kv = kv * 10 + (c - '0');
    }
    return MarkedComposition(parse_composition(s.substr(0, bar)), kv);
}

inline std::string to_string(const Composition& w) {
    if (w.empty()) return "()";
    std::string s;
    for (std::size_t i = 0; i < w.parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w.parts[i]);
    }
    return s;
}

inline std::string to_string(const MarkedComposition& m, Kind kind = Kind::marked) {
    if (kind == Kind::plain) return to_string(m.omega);
    return to_string(m.omega) + "|" + std::to_string(m.kappa);
}

}  // namespace stratahom
