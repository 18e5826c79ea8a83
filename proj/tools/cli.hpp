#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fixture_data.hpp"
#include "stratahom/fixtures.hpp"
#include "stratahom/stratahom.hpp"

namespace stratahom::cli {

using json = nlohmann::json;

enum class Format { text, json, csv, markdown };

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
};

inline std::size_t display_width(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

inline void render(const Table& t, Format f, std::ostream& os) {
    switch (f) {
        case Format::text: {
            std::vector<std::size_t> w(t.headers.size(), 0);
            for (std::size_t i = 0; i < t.headers.size(); ++i) w[i] = display_width(t.headers[i]);
            for (auto& r : t.rows)
                for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], display_width(r[i]));
            auto line = [&](const std::vector<std::string>& r) {
                std::string s;
                for (std::size_t i = 0; i < r.size(); ++i) {
                    if (i) s += "  ";
                    s += r[i];
                    if (i + 1 < r.size()) s += std::string(w[i] - display_width(r[i]), ' ');
                }
                os << s << "\n";
            };
            line(t.headers);
            for (auto& r : t.rows) line(r);
            for (auto& n : t.notes) os << "# " << n << "\n";
            break;
        }
        case Format::csv: {
            for (std::size_t i = 0; i < t.headers.size(); ++i) os << (i ? "," : "") << csv_field(t.headers[i]);
            os << "\n";
            for (auto& r : t.rows) {
                for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
                os << "\n";
            }
            break;
        }
        case Format::markdown: {
            os << "|";
            for (auto& h : t.headers) os << " " << h << " |";
            os << "\n|";
            for (std::size_t i = 0; i < t.headers.size(); ++i) os << "---|";
            os << "\n";
            for (auto& r : t.rows) {
                os << "|";
                for (auto& c : r) os << " " << c << " |";
                os << "\n";
            }
            for (auto& n : t.notes) os << "\n" << n << "\n";
            break;
        }
        case Format::json: {
            json a = json::array();
            for (auto& r : t.rows) {
                json o = json::object();
                for (std::size_t i = 0; i < r.size(); ++i) o[t.headers[i]] = r[i];
                a.push_back(o);
            }
            json out = {{"rows", a}};
            if (!t.notes.empty()) out["notes"] = t.notes;
            os << out.dump(2) << "\n";
            break;
        }
    }
}

inline json group_json(int degree, const HomologyGroup& g) {
    json t = json::array();
    for (auto& x : g.torsion) {
        if (x.fits_slong_p()) t.push_back(x.get_si());
        else t.push_back(x.get_str());
    }
    return {{"degree", degree}, {"rank", g.rank}, {"torsion", t}};
}

inline json profile_json(const HomologyProfile& p) {
    json g = json::array();
    for (int j = 0; j <= p.d; ++j) g.push_back(group_json(j, p.at(j)));
    return {{"space", p.space}, {"d", p.d}, {"family", p.family}, {"reduced", p.reduced}, {"groups", g}};
}

/// Runs fn(i) for i in [0, n) on `threads` workers; results keep index order.
template <class R>
std::vector<R> parallel_map(std::size_t n, unsigned threads, const std::function<R(std::size_t)>& fn) {
    std::vector<R> out(n);
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex mu;
    auto work = [&] {
        for (;;) {
            std::size_t i = next++;
            if (i >= n) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!error) error = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

struct Options {
    Format format = Format::text;
    unsigned threads = 1;
    int d = -1;
    int dmin = -1;
    int dmax = -1;
    int q = 2;
    std::string family = "full";
    std::string space = "B";
    std::string variant = "PROJ";
    std::string table;
    bool reduced = false;
    bool twisted = false;
    bool dump = false;
    bool slow = false;
};

inline Variant parse_variant(const std::string& s) {
    if (s == "PROJ" || s == "proj" || s == "marked") return Variant::proj;
    if (s == "POLY" || s == "poly" || s == "plain") return Variant::poly;
    throw ArgumentError("unknown variant '" + s + "' (expected PROJ or POLY)");
}

inline int need_d(const Options& o) {
    if (o.d < 0) throw ArgumentError("--d is required");
    return o.d;
}

inline std::pair<int, int> d_range(const Options& o, int default_min) {
    if (o.d >= 0) return {o.d, o.d};
    if (o.dmax < 0) throw ArgumentError("--d or --dmax is required");
    int lo = o.dmin >= 0 ? o.dmin : default_min;
    return {lo, o.dmax};
}

inline std::string verdict(bool ok) { return ok ? "MATCH" : "MISMATCH"; }

// ---- verbs ---------------------------------------------------------------------

inline int cmd_cells(const Options& o, std::ostream& os) {
    int d = need_d(o);
    Kind kind = kind_of(parse_variant(o.variant));
    auto P = realize_family(parse_family(o.family), d, kind);
    Table t{{"pattern", "norm", "reduced_norm", "dimension"}, {}, {}};
    for (auto& c : P.cells())
        t.rows.push_back({to_string(c, kind), std::to_string(c.norm()), std::to_string(c.reduced_norm()),
                          std::to_string(cell_dimension(c, d))});
    t.notes.push_back(std::to_string(P.size()) + " cells");
    render(t, o.format, os);
    return 0;
}

inline int cmd_counts(const Options& o, std::ostream& os) {
    auto [lo, hi] = d_range(o, 0);
    Table t{{"d", "space", "coefficients", "G(t)"}, {}, {}};
    for (int d = lo; d <= hi; ++d) {
        auto c = cell_counts(d);
        for (auto [name, poly] : {std::pair{"Pbar", &c.P}, std::pair{"B", &c.B}}) {
            std::string coeffs;
            for (std::size_t j = 0; j < poly->coeffs.size(); ++j) coeffs += (j ? "," : "") + std::to_string(poly->coeffs[j]);
            t.rows.push_back({std::to_string(d), name, coeffs, poly->to_string()});
        }
    }
    render(t, o.format, os);
    return 0;
}

inline int cmd_poset(const Options& o, std::ostream& os) {
    int d = need_d(o);
    Kind kind = kind_of(parse_variant(o.variant));
    auto f = parse_family(o.family);
    auto P = realize_family(f, d, kind);
    std::string maxes;
    for (auto& m : maximal_elements(P)) maxes += (maxes.empty() ? "" : " ") + to_string(m, kind);
    Table t{{"key", "value"}, {}, {}};
    t.rows.push_back({"family", f.name()});
    t.rows.push_back({"d", std::to_string(d)});
    t.rows.push_back({"kind", kind == Kind::marked ? "marked" : "plain"});
    t.rows.push_back({"cells", std::to_string(P.size())});
    t.rows.push_back({"closed", is_closed(P) ? "yes" : "no"});
    t.rows.push_back({"maximal", maxes.empty() ? "-" : maxes});
    t.rows.push_back({"eta", P.empty() ? "-" : std::to_string(eta(P))});
    t.rows.push_back({"psi", P.empty() ? "-" : std::to_string(psi(P))});
    render(t, o.format, os);
    return 0;
}

inline void render_profile(const HomologyProfile& p, const HomologyProfile* expected, Format f, std::ostream& os,
                           std::vector<std::string> notes = {}) {
    if (f == Format::json) {
        json j = profile_json(p);
        if (expected) {
            j["expected"] = profile_json(*expected)["groups"];
            j["match"] = p.groups == expected->groups;
        }
        if (!notes.empty()) j["notes"] = notes;
        os << j.dump(2) << "\n";
        return;
    }
    std::string h = p.cohomology ? "H^j" : (p.reduced ? "reduced H_j" : "H_j");
    Table t{{"j", h}, {}, std::move(notes)};
    if (expected) {
        t.headers.push_back("expected");
        t.headers.push_back("verdict");
    }
    for (int j = 0; j <= p.d; ++j) {
        std::vector<std::string> r{std::to_string(j), p.at(j).to_table_string()};
        if (expected) {
            r.push_back(expected->at(j).to_table_string());
            r.push_back(verdict(p.at(j) == expected->at(j)));
        }
        t.rows.push_back(r);
    }
    t.notes.insert(t.notes.begin(), "space " + p.space + ", d = " + std::to_string(p.d) + ", family " + p.family);
    render(t, f, os);
}

inline int cmd_homology(const Options& o, std::ostream& os) {
    int d = need_d(o);
    auto f = parse_family(o.family);
    if (o.dump) {
        Variant v = o.space == "P" ? Variant::poly : o.space == "B" ? Variant::proj : throw ArgumentError("--dump needs --space B or P");
        dump(build(realize_family(f, d, kind_of(v)), v), os);
        return 0;
    }
    if (o.space == "B") render_profile(homology_B(d, f, o.reduced), nullptr, o.format, os);
    else if (o.space == "P") render_profile(reduced_homology_P(d, f), nullptr, o.format, os);
    else if (o.space == "cP") render_profile(cohomology_P_complement(d, f), nullptr, o.format, os);
    else if (o.space == "cB") {
        if (o.twisted) render_profile(twisted_homology_B_complement(d, f), nullptr, o.format, os, {"homology with orientation-twisted coefficients"});
        else render_profile(cohomology_B_complement(d, f), nullptr, o.format, os);
    } else if (o.space == "D") {
        auto p = homology_B(d, PosetFamily::disc(), true);
        auto e = discriminant_oracle(d);
        render_profile(p, &e, o.format, os);
        return p.groups == e.groups ? 0 : 3;
    } else {
        throw ArgumentError("unknown space '" + o.space + "' (expected B, P, cB, cP or D)");
    }
    return 0;
}

inline int cmd_complement(const Options& o, std::ostream& os) {
    Options c = o;
    if (c.space != "cP") c.space = "cB";
    return cmd_homology(c, os);
}

inline Table discriminant_table(int lo, int hi, unsigned threads, bool& all_match) {
    struct Row {
        HomologyProfile h, e;
        std::vector<HomologyGroup> rel, rel_e;
    };
    lo = std::max(lo, 2);
    std::size_t n = hi >= lo ? hi - lo + 1 : 0;
    auto rows = parallel_map<Row>(n, threads, [&](std::size_t i) {
        int d = lo + static_cast<int>(i);
        return Row{homology_B(d, PosetFamily::disc(), true), discriminant_oracle(d),
                   relative_homology_B(d, PosetFamily::disc()).groups, relative_discriminant_oracle(d)};
    });
    Table t{{"d", "group", "j", "computed", "expected", "verdict"}, {}, {}};
    all_match = true;
    for (auto& r : rows) {
        int d = r.h.d;
        for (int j = 0; j <= d; ++j) {
            bool ok = r.h.at(j) == r.e.at(j);
            all_match &= ok;
            if (r.h.at(j).is_zero() && r.e.at(j).is_zero()) continue;
            t.rows.push_back({std::to_string(d), "reduced H_j(D_d)", std::to_string(j), r.h.at(j).to_table_string(), r.e.at(j).to_table_string(), verdict(ok)});
        }
        for (int j = 0; j <= d; ++j) {
            bool ok = r.rel[j] == r.rel_e[j];
            all_match &= ok;
            if (r.rel[j].is_zero() && r.rel_e[j].is_zero()) continue;
            t.rows.push_back({std::to_string(d), "H_j(B_d,D_d)", std::to_string(j), r.rel[j].to_table_string(), r.rel_e[j].to_table_string(), verdict(ok)});
        }
    }
    t.notes.push_back("degrees where both sides vanish are omitted");
    t.notes.push_back(all_match ? "all MATCH" : "MISMATCH present");
    return t;
}

inline int cmd_discriminant(const Options& o, std::ostream& os) {
    auto [lo, hi] = d_range(o, 2);
    bool ok = true;
    render(discriminant_table(lo, hi, o.threads, ok), o.format, os);
    return ok ? 0 : 3;
}

inline int cmd_stabilize(const Options& o, std::ostream& os) {
    int d = need_d(o);
    auto f = parse_family(o.family);
    Variant v = parse_variant(o.variant);
    auto R = stability_report(f, d, v, o.slow);
    std::string up = "H_{j+2}(d+2)", lo = "H_j(d)";
    Table t{{"j", up, lo, "iso?", "guaranteed?"}, {}, {}};
    if (o.slow) t.headers.push_back("certified?");
    for (auto& r : R.rows) {
        std::vector<std::string> row{std::to_string(r.j), r.upper.to_table_string(), r.lower.to_table_string(),
                                     r.isomorphic ? "yes" : "no", r.guaranteed ? "yes" : "no"};
        if (o.slow) row.push_back(*r.certified ? "yes" : "no");
        t.rows.push_back(row);
    }
    t.notes.push_back(f.name() + " " + to_string(v) + " d = " + std::to_string(d) + ", psi(d+2) = " +
                      (R.psi_upper ? std::to_string(*R.psi_upper) : std::string("-")));
    if (o.slow) t.notes.push_back("certified: the kernel complex of trunc is acyclic in degrees j+1 and j+2");
    auto viol = R.violations();
    t.notes.push_back(viol.empty() ? "no violations in the guaranteed zone" : std::to_string(viol.size()) + " violation(s) in the guaranteed zone");
    render(t, o.format, os);
    return viol.empty() ? 0 : 3;
}

inline Table group_table(const std::string& label, const GroupTable& expected, int lo, int hi, unsigned threads,
                         const std::function<HomologyProfile(int)>& compute, bool& all_match) {
    std::size_t n = hi >= lo ? hi - lo + 1 : 0;
    auto profiles = parallel_map<HomologyProfile>(n, threads, [&](std::size_t i) { return compute(lo + static_cast<int>(i)); });
    Table t{{"d", "j", "computed", "expected", "verdict"}, {}, {}};
    all_match = true;
    for (auto& p : profiles) {
        bool have_row = false;
        for (auto& [k, v] : expected)
            if (k.first == p.d) have_row = true;
        for (int j = 1; j <= p.d; ++j) {
            auto it = expected.find({p.d, j});
            std::string exp = "-", ver = "n/a";
            if (have_row) {
                HomologyGroup e = it == expected.end() ? HomologyGroup{} : it->second;
                exp = e.to_table_string();
                bool ok = e == p.at(j);
                ver = verdict(ok);
                all_match &= ok;
            }
            t.rows.push_back({std::to_string(p.d), std::to_string(j), p.at(j).to_table_string(), exp, ver});
        }
    }
    t.notes.push_back(label);
    t.notes.push_back(all_match ? "all MATCH" : "MISMATCH present");
    return t;
}

inline Table single_omega_table(int lo, int hi, unsigned threads, bool& all_match) {
    auto listed = parse_sphere_table(fixture::single_omega_csv);
    std::vector<std::pair<int, Composition>> jobs;
    for (int d = lo; d <= hi; ++d)
        for (auto& c : enumerate_cells(d, false))
            if (!c.omega.empty()) jobs.push_back({d, c.omega});
    auto profiles = parallel_map<HomologyProfile>(jobs.size(), threads, [&](std::size_t i) {
        return reduced_homology_P(jobs[i].first, PosetFamily::single(jobs[i].second));
    });
    Table t{{"d", "omega", "computed", "expected degree", "verdict"}, {}, {}};
    all_match = true;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        auto& [d, w] = jobs[i];
        auto& p = profiles[i];
        std::string comp;
        for (int j = 0; j <= d; ++j)
            if (!p.at(j).is_zero()) comp += (comp.empty() ? "" : "; ") + ("H_" + std::to_string(j) + " = " + p.at(j).to_table_string());
        auto it = listed.find({d, w});
        bool in_range = d >= 4 && d <= 13;
        if (it == listed.end() && comp.empty()) continue;
        std::string exp = "-", ver;
        if (it != listed.end()) {
            exp = std::to_string(it->second);
            bool ok = true;
            for (int j = 0; j <= d; ++j) ok &= j == it->second ? p.at(j) == Zk(1) : p.at(j).is_zero();
            ver = verdict(ok);
            all_match &= ok;
        } else {
            ver = in_range ? "UNLISTED" : "n/a";
            if (in_range) all_match = false;
        }
        t.rows.push_back({std::to_string(d), "(" + to_string(w) + ")", comp.empty() ? "0" : comp, exp, ver});
    }
    t.notes.push_back("one row per homologically nontrivial or listed (d, omega); the empty composition is skipped");
    t.notes.push_back(all_match ? "all MATCH" : "MISMATCH or UNLISTED present");
    return t;
}

inline int cmd_table(const Options& o, std::ostream& os) {
    bool ok = true;
    Table t;
    if (o.table == "triple-root") {
        auto [lo, hi] = d_range(o, 3);
        t = group_table("reduced homology of B_d^{max>=3}", parse_group_table(fixture::triple_root_csv), lo, hi, o.threads,
                        [](int d) { return homology_B(d, PosetFamily::max_ge(3), true); }, ok);
    } else if (o.table == "skeleton") {
        auto [lo, hi] = d_range(o, std::max(o.q + 2, 1));
        GroupTable expected = o.q == 2 ? parse_group_table(fixture::skeleton_q2_csv) : GroupTable{};
        int q = o.q;
        t = group_table("homology of the cells of codimension >= " + std::to_string(q), expected, lo, hi, o.threads,
                        [q](int d) { return homology_B(d, PosetFamily::skeleton(q)); }, ok);
    } else if (o.table == "discriminant") {
        auto [lo, hi] = d_range(o, 2);
        t = discriminant_table(lo, hi, o.threads, ok);
    } else if (o.table == "single-omega") {
        auto [lo, hi] = d_range(o, 4);
        t = single_omega_table(lo, hi, o.threads, ok);
    } else {
        throw ArgumentError("unknown table '" + o.table + "' (expected triple-root, skeleton, discriminant, single-omega)");
    }
    render(t, o.format, os);
    return 0;
}

// ---- selftest --------------------------------------------------------------------

inline int selftest(const Options& o, std::ostream& os) {
    Table t{{"check", "result"}, {}, {}};
    bool all = true;
    auto record = [&](const std::string& name, const std::function<bool()>& fn) {
        bool ok = false;
        std::string why;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            why = std::string(": ") + e.what();
        }
        all &= ok;
        t.rows.push_back({name, (ok ? "pass" : "FAIL") + why});
    };
    std::vector<PosetFamily> fams{PosetFamily::full(), PosetFamily::disc(), PosetFamily::max_ge(3), PosetFamily::skeleton(2),
                                  PosetFamily::all_real()};
    record("d^2 = 0 (POLY, PROJ, QUOTIENT, twisted, duals), d <= 8", [&] {
        for (auto& f : fams)
            for (int d = 0; d <= 8; ++d) {
                auto M = realize_family(f, d, Kind::marked);
                auto P = realize_family(f, d, Kind::plain);
                for (auto& C : {build(P, Variant::poly), build(M, Variant::proj), build(M, Variant::quotient), build(M, Variant::quotient, true)})
                    if (!squares_to_zero(C) || !squares_to_zero(dualize(C))) return false;
            }
        return true;
    });
    record("merge/insert anticommute, d <= 8", [&] {
        for (auto& f : fams)
            for (int d = 0; d <= 8; ++d)
                if (!verify_anticommute(realize_family(f, d, Kind::marked)) || !verify_anticommute(realize_family(f, d, Kind::plain)))
                    return false;
        return true;
    });
    record("Euler characteristic of the full complexes, d <= 10", [&] {
        for (int d = 0; d <= 10; ++d) {
            long chi_p = 1, chi_b = 0;  // 1: the point at infinity
            auto P = build(realize_family(PosetFamily::full(), d, Kind::plain), Variant::poly);
            auto B = build(realize_family(PosetFamily::full(), d, Kind::marked), Variant::proj);
            for (int j = 0; j <= d; ++j) {
                long s = j % 2 ? -1 : 1;
                chi_p += s * static_cast<long>(P.rank(j));
                chi_b += s * static_cast<long>(B.rank(j));
            }
            if (chi_p != 1 + (d % 2 ? -1 : 1) || 2 * chi_b != 1 + (d % 2 ? -1 : 1)) return false;
        }
        return true;
    });
    record("trunc is a chain map, d <= 8", [&] {
        for (auto& f : fams)
            for (int d = 0; d <= 8; ++d) {
                if (f.tag == PosetFamily::Tag::all_real) continue;  // norm exactly d, no d => d+2 map
                for (auto v : {Variant::proj, Variant::poly}) build_trunc(f, d, v);
            }
        return true;
    });
    record("complement formula guards (empty family, discriminant), d <= 8", [&] {
        for (int d = 1; d <= 8; ++d) {
            if (cohomology_B_complement(d, PosetFamily::empty_family()).groups != rp_cohomology(d)) return false;
            auto c = cohomology_B_complement(d, PosetFamily::disc());
            if (c.at(0).rank != static_cast<std::size_t>(d / 2 + 1) || c.at(1).rank != static_cast<std::size_t>(d % 2 ? (d + 1) / 2 : d / 2))
                return false;
        }
        return true;
    });
    render(t, o.format, os);
    return all ? 0 : 3;
}

// ---- entry point ------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homology of real-root strata of binary forms and polynomials"};
    app.fallthrough();
    app.require_subcommand(0, 1);
    Options o;
    std::string format = "text";
    bool self = false;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--format", format, "text|json|csv|markdown")->check(CLI::IsMember({"text", "json", "csv", "markdown"}));
    app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 1024u));
    app.add_flag("--selftest", self, "run the consistency suites");

    auto add_d = [&](CLI::App* s) {
        s->add_option("--d", o.d, "degree")->check(CLI::Range(0, 40));
    };
    auto add_range = [&](CLI::App* s) {
        s->add_option("--dmax", o.dmax, "largest degree")->check(CLI::Range(0, 40));
        s->add_option("--dmin", o.dmin, "smallest degree")->check(CLI::Range(0, 40));
    };
    auto add_family = [&](CLI::App* s) { s->add_option("--family", o.family, "full, disc, max-ge:k, skeleton:q, single:..., gen:(...);(...)"); };
    auto add_variant = [&](CLI::App* s) { s->add_option("--variant", o.variant, "PROJ or POLY"); };

    auto* cells = app.add_subcommand("cells", "list the cells of a realization");
    add_d(cells), add_family(cells), add_variant(cells);
    auto* counts = app.add_subcommand("counts", "cell-count polynomials");
    add_d(counts), add_range(counts);
    auto* poset = app.add_subcommand("poset", "describe a realization");
    add_d(poset), add_family(poset), add_variant(poset);
    auto* hom = app.add_subcommand("homology", "homology of a space");
    add_d(hom), add_family(hom);
    hom->add_option("--space", o.space, "B|P|cB|cP|D")->check(CLI::IsMember({"B", "P", "cB", "cP", "D"}));
    hom->add_flag("--reduced", o.reduced, "reduced homology on the B side");
    hom->add_flag("--twisted", o.twisted, "for cB: homology with twisted coefficients");
    hom->add_flag("--dump", o.dump, "print the boundary matrices instead");
    auto* comp = app.add_subcommand("complement", "cohomology of a complement");
    add_d(comp), add_family(comp);
    comp->add_option("--space", o.space, "cB|cP")->check(CLI::IsMember({"cB", "cP"}));
    comp->add_flag("--twisted", o.twisted, "for cB: homology with twisted coefficients");
    auto* disc = app.add_subcommand("discriminant", "discriminant against the closed form");
    add_d(disc), add_range(disc);
    auto* stab = app.add_subcommand("stabilize", "d => d+2 stabilization report");
    add_d(stab), add_family(stab), add_variant(stab);
    stab->add_flag("--slow-induced-map", o.slow, "also certify trunc_* through its kernel complex");
    auto* table = app.add_subcommand("table", "compare against a reference table");
    table->add_option("name", o.table, "triple-root|skeleton|discriminant|single-omega")->required();
    add_range(table);
    table->add_option("--q", o.q, "skeleton codimension")->check(CLI::Range(0, 40));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    o.format = format == "json" ? Format::json : format == "csv" ? Format::csv : format == "markdown" ? Format::markdown : Format::text;
    o.threads = threads;
    if (const char* dir = std::getenv("STRATAHOM_CACHE")) RealizationCache::instance().set_directory(dir);

    try {
        if (self) return selftest(o, out);
        if (cells->parsed()) return cmd_cells(o, out);
        if (counts->parsed()) return cmd_counts(o, out);
        if (poset->parsed()) return cmd_poset(o, out);
        if (hom->parsed()) return cmd_homology(o, out);
        if (comp->parsed()) return cmd_complement(o, out);
        if (disc->parsed()) return cmd_discriminant(o, out);
        if (stab->parsed()) return cmd_stabilize(o, out);
        if (table->parsed()) return cmd_table(o, out);
        err << app.help();
        return 2;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace stratahom::cli
