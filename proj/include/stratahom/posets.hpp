#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "combinatorics.hpp"

namespace stratahom {

/// Finite realization Theta_<d]: a closed set of nonempty cells of degree d.
class PosetRealization {
public:
    PosetRealization(Kind kind, int d) : kind_(kind), d_(d) {
        if (d < 0) throw ArgumentError("negative degree");
    }
    PosetRealization(Kind kind, int d, std::vector<MarkedComposition> cells) : PosetRealization(kind, d) {
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        for (auto& c : cells) {
            if (!is_nonempty_cell(c, d)) throw ArgumentError("cell " + to_string(c) + " is empty in degree " + std::to_string(d));
            if (kind == Kind::plain && c.kappa != 0) throw ArgumentError("plain realization with kappa > 0");
        }
        cells_ = std::move(cells);
        for (std::size_t i = 0; i < cells_.size(); ++i) index_.emplace(cells_[i], i);
    }

    Kind kind() const { return kind_; }
    int degree() const { return d_; }
    int parity() const { return d_ % 2; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const std::vector<MarkedComposition>& cells() const { return cells_; }
    bool contains(const MarkedComposition& m) const { return index_.count(m) != 0; }

    /// Members with reduced norm m, in cell order.
    std::vector<MarkedComposition> with_reduced_norm(int m) const {
        std::vector<MarkedComposition> out;
        for (auto& c : cells_)
            if (c.reduced_norm() == m) out.push_back(c);
        return out;
    }
    /// Members of top norm d (Theta_d).
    std::vector<MarkedComposition> norm_equals_degree() const {
        std::vector<MarkedComposition> out;
        for (auto& c : cells_)
            if (c.norm() == d_) out.push_back(c);
        return out;
    }

    bool operator==(const PosetRealization& o) const {
        return kind_ == o.kind_ && d_ == o.d_ && cells_ == o.cells_;
    }

private:
    Kind kind_;
    int d_;
    std::vector<MarkedComposition> cells_;
    std::unordered_map<MarkedComposition, std::size_t, MarkedCompositionHash> index_;
};

/// One-step images that are still nonempty cells of degree d.
inline std::vector<MarkedComposition> images_within(const MarkedComposition& m, int d, Kind kind) {
    std::vector<MarkedComposition> out;
    for (auto& n : one_step_images(m, kind))
        if (n.norm() <= d) out.push_back(std::move(n));
    return out;
}

inline PosetRealization close(const std::vector<MarkedComposition>& generators, int d, Kind kind) {
    std::unordered_set<MarkedComposition, MarkedCompositionHash> seen;
    std::deque<MarkedComposition> queue;
    for (auto& g : generators) {
        if (kind == Kind::plain && g.kappa != 0) throw ArgumentError("plain generator with kappa > 0");
        if ((g.norm() - d) % 2 != 0) throw ArgumentError("generator " + to_string(g, kind) + " has parity different from d");
        if (g.norm() > d) throw ArgumentError("generator " + to_string(g, kind) + " has norm > d");
        if (seen.insert(g).second) queue.push_back(g);
    }
    while (!queue.empty()) {
        MarkedComposition c = std::move(queue.front());
        queue.pop_front();
        for (auto& n : images_within(c, d, kind))
            if (seen.insert(n).second) queue.push_back(std::move(n));
    }
    return PosetRealization(kind, d, std::vector<MarkedComposition>(seen.begin(), seen.end()));
}

inline bool is_closed(const std::vector<MarkedComposition>& cells, int d, Kind kind) {
    std::unordered_set<MarkedComposition, MarkedCompositionHash> set(cells.begin(), cells.end());
    for (auto& c : cells)
        for (auto& n : images_within(c, d, kind))
            if (!set.count(n)) return false;
    return true;
}

inline bool is_closed(const PosetRealization& p) { return is_closed(p.cells(), p.degree(), p.kind()); }

inline std::vector<MarkedComposition> maximal_elements(const PosetRealization& p) {
    std::unordered_set<MarkedComposition, MarkedCompositionHash> hit;
    for (auto& c : p.cells())
        for (auto& n : images_within(c, p.degree(), p.kind())) hit.insert(n);
    std::vector<MarkedComposition> out;
    for (auto& c : p.cells())
        if (!hit.count(c)) out.push_back(c);
    return out;
}

/// eta = max over maximal elements of (norm - 2 reduced norm).
inline int eta(const PosetRealization& p) {
    if (p.empty()) throw DomainError("eta of an empty poset");
    int best = 0;
    bool first = true;
    for (auto& m : maximal_elements(p)) {
        int v = m.norm() - 2 * m.reduced_norm();
        if (first || v > best) best = v;
        first = false;
    }
    return best;
}

inline int psi(const PosetRealization& p) { return (p.degree() + eta(p)) / 2; }

// ---- families ---------------------------------------------------------------

struct PosetFamily {
    enum class Tag { empty, full, all_real, disc, max_ge, skeleton, single, generated };
    Tag tag = Tag::full;
    int param = 0;                               // k for max_ge, q for skeleton
    std::vector<MarkedComposition> generators;   // single / generated

    static PosetFamily empty_family() { return {Tag::empty, 0, {}}; }
    static PosetFamily full() { return {Tag::full, 0, {}}; }
    static PosetFamily all_real() { return {Tag::all_real, 0, {}}; }
    static PosetFamily disc() { return {Tag::disc, 0, {}}; }
    static PosetFamily max_ge(int k) { return {Tag::max_ge, k, {}}; }
    static PosetFamily skeleton(int q) { return {Tag::skeleton, q, {}}; }
    static PosetFamily single(MarkedComposition m) { return {Tag::single, 0, {std::move(m)}}; }
    static PosetFamily single(Composition w) { return single(MarkedComposition(std::move(w), 0)); }
    static PosetFamily generated(std::vector<MarkedComposition> g) { return {Tag::generated, 0, std::move(g)}; }

    /// Parity fixed by the generators, if any.
    std::optional<int> fixed_parity() const {
        if (generators.empty()) return std::nullopt;
        int p = generators.front().norm() % 2;
        for (auto& g : generators)
            if (g.norm() % 2 != p) throw ArgumentError("generators of mixed parity");
        return p;
    }
    bool compatible(int d) const {
        auto p = fixed_parity();
        return !p || *p == d % 2;
    }

    bool contains(const MarkedComposition& m) const {
        switch (tag) {
            case Tag::empty: return false;
            case Tag::full: return true;
            case Tag::disc: return m.omega.max_part() >= 2 || m.kappa >= 2;
            case Tag::max_ge: return m.omega.max_part() >= param || m.kappa >= param;
            case Tag::skeleton: return m.reduced_norm() >= param;
            default: throw ArgumentError("membership of this family depends on d");
        }
    }

    std::string name() const {
        switch (tag) {
            case Tag::empty: return "empty";
            case Tag::full: return "full";
            case Tag::all_real: return "all-real";
            case Tag::disc: return "disc";
            case Tag::max_ge: return "max-ge:" + std::to_string(param);
            case Tag::skeleton: return "skeleton:" + std::to_string(param);
            case Tag::single: {
                auto& g = generators.front();
                return "single:" + (g.kappa ? to_string(g) : to_string(g.omega));
            }
            case Tag::generated: {
                std::string s = "gen:";
                for (std::size_t i = 0; i < generators.size(); ++i) {
                    if (i) s += ';';
                    auto& g = generators[i];
                    s += "(" + (g.kappa ? to_string(g) : to_string(g.omega)) + ")";
                }
                return s;
            }
        }
        return "?";
    }
};

/// On-disk store of realizations, one pattern per line. Disabled while the directory is empty.
class RealizationCache {
public:
    static RealizationCache& instance() {
        static RealizationCache c;
        return c;
    }
    void set_directory(std::string dir) {
        std::lock_guard lock(mu_);
        dir_ = std::move(dir);
    }
    std::string directory() const {
        std::lock_guard lock(mu_);
        return dir_;
    }

    std::optional<PosetRealization> load(const PosetFamily& f, int d, Kind kind) const {
        auto path = file(f, d, kind);
        if (path.empty()) return std::nullopt;
        std::ifstream in(path);
        if (!in) return std::nullopt;
        std::vector<MarkedComposition> cells;
        std::string line;
        try {
            while (std::getline(in, line))
                if (!line.empty() && line[0] != '#') cells.push_back(parse_pattern(line));
            PosetRealization p(kind, d, std::move(cells));
            if (is_closed(p.cells(), d, kind)) return p;
        } catch (const std::exception&) {
        }
        return std::nullopt;
    }

    void store(const PosetFamily& f, int d, Kind kind, const PosetRealization& p) const {
        auto path = file(f, d, kind);
        if (path.empty()) return;
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        auto tmp = path;
        tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
        {
            std::ofstream out(tmp);
            if (!out) return;
            out << "# " << f.name() << " d=" << d << (kind == Kind::marked ? " marked" : " plain") << "\n";
            for (auto& c : p.cells()) out << to_string(c) << "\n";
        }
        std::filesystem::rename(tmp, path, ec);
    }

private:
    mutable std::mutex mu_;
    std::string dir_;

    std::filesystem::path file(const PosetFamily& f, int d, Kind kind) const {
        std::string dir = directory();
        if (dir.empty()) return {};
        std::string key = kind == Kind::marked ? "marked-" : "plain-";
        key += std::to_string(d) + "-";
        for (unsigned char c : f.name()) {
            if (std::isalnum(c)) key += static_cast<char>(c);
            else {
                char buf[4];
                std::snprintf(buf, sizeof buf, "_%02X", c);
                key += buf;
            }
        }
        return std::filesystem::path(dir) / (key + ".cells");
    }
};

namespace detail {
inline PosetRealization realize_uncached(const PosetFamily& f, int d, Kind kind) {
    using Tag = PosetFamily::Tag;
    if (f.tag == Tag::single || f.tag == Tag::generated) {
        std::vector<MarkedComposition> gens;
        for (auto& g : f.generators) {
            if (kind == Kind::plain && g.kappa != 0) throw ArgumentError("plain family with kappa > 0");
            if (g.norm() <= d) gens.push_back(g);
        }
        return close(gens, d, kind);
    }
    std::vector<MarkedComposition> cells;
    if (f.tag != Tag::empty)
        for (auto& c : enumerate_cells(d, kind == Kind::marked)) {
            bool keep = f.tag == Tag::all_real ? c.norm() == d : f.contains(c);
            if (keep) cells.push_back(std::move(c));
        }
    return PosetRealization(kind, d, std::move(cells));
}
}  // namespace detail

inline PosetRealization realize_family(const PosetFamily& f, int d, Kind kind) {
    if (!f.compatible(d)) throw ArgumentError("family " + f.name() + " has parity different from d = " + std::to_string(d));
    auto& cache = RealizationCache::instance();
    if (auto hit = cache.load(f, d, kind)) return *hit;
    auto p = detail::realize_uncached(f, d, kind);
    cache.store(f, d, kind, p);
    return p;
}

/// "full", "all-real", "disc", "empty", "max-ge:3", "skeleton:2", "single:1,2,1", "gen:(2,2);(4)".
inline PosetFamily parse_family(const std::string& s) {
    auto colon = s.find(':');
    std::string head = s.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
    auto need_int = [&](const std::string& a) {
        if (a.empty() || a.find_first_not_of("0123456789") != std::string::npos)
            throw ArgumentError("family '" + s + "' needs a non-negative integer parameter");
        return std::stoi(a);
    };
    if (head == "full" && arg.empty()) return PosetFamily::full();
    if (head == "all-real" && arg.empty()) return PosetFamily::all_real();
    if (head == "disc" && arg.empty()) return PosetFamily::disc();
    if (head == "empty" && arg.empty()) return PosetFamily::empty_family();
    if (head == "max-ge") return PosetFamily::max_ge(need_int(arg));
    if (head == "skeleton") return PosetFamily::skeleton(need_int(arg));
    if (head == "single") return PosetFamily::single(parse_pattern(arg));
    if (head == "gen") {
        std::vector<MarkedComposition> gens;
        std::size_t pos = 0;
        while (pos <= arg.size()) {
            auto semi = arg.find(';', pos);
            std::string tok = arg.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
            if (tok.find_first_not_of(" ") == std::string::npos) throw ArgumentError("empty generator in '" + s + "'");
            gens.push_back(parse_pattern(tok));
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
        PosetFamily f = PosetFamily::generated(std::move(gens));
        f.fixed_parity();
        return f;
    }
    throw ArgumentError("unknown family '" + s + "'");
}

}  // namespace stratahom
