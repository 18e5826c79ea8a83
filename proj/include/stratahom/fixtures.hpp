#pragma once

// Readers for the CSV transcriptions shipped under data/fixtures.

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "integer_linalg.hpp"

namespace stratahom {

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') quoted = !quoted;
        else if (c == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

template <class F>
void for_each_record(const std::string& text, F&& f) {
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        f(split_csv_line(line));
    }
}

}  // namespace detail

/// (d, degree) -> group, from "d,degree,group" records.
using GroupTable = std::map<std::pair<int, int>, HomologyGroup>;

inline GroupTable parse_group_table(const std::string& csv) {
    GroupTable t;
    detail::for_each_record(csv, [&](const std::vector<std::string>& r) {
        if (r.size() != 3) throw ArgumentError("group table record needs 3 fields");
        t[{std::stoi(r[0]), std::stoi(r[1])}] = parse_group(r[2]);
    });
    return t;
}

/// (d, omega) -> degree of the single nonzero reduced group.
using SphereTable = std::map<std::pair<int, Composition>, int>;

inline SphereTable parse_sphere_table(const std::string& csv) {
    SphereTable t;
    detail::for_each_record(csv, [&](const std::vector<std::string>& r) {
        if (r.size() != 3) throw ArgumentError("sphere table record needs 3 fields");
        t[{std::stoi(r[0]), parse_composition(r[1])}] = std::stoi(r[2]);
    });
    return t;
}

}  // namespace stratahom
