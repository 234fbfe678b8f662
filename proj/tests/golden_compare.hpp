#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hhiv/cli/app.hpp"

namespace hhiv::testing {

using json = nlohmann::ordered_json;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

inline Outcome run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "hhiv");
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = hhiv::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline bool close_rel(double a, double b, double rel = 1e-12) {
    return std::abs(a - b) <= rel * std::max(1.0, std::abs(b));
}

// Structural equality with numeric leaves compared to 1e-12 relative.
// Returns the path of the first mismatch, or an empty string.
inline std::string json_mismatch(const json& got, const json& want, const std::string& path = "$") {
    if (want.is_number()) {
        if (!got.is_number() || !close_rel(got.get<double>(), want.get<double>())) return path;
        return {};
    }
    if (got.type() != want.type()) return path;
    if (want.is_object()) {
        if (got.size() != want.size()) return path;
        auto g = got.begin();
        for (auto w = want.begin(); w != want.end(); ++w, ++g) {
            if (g.key() != w.key()) return path + "." + w.key();
            if (auto m = json_mismatch(g.value(), w.value(), path + "." + w.key()); !m.empty()) return m;
        }
        return {};
    }
    if (want.is_array()) {
        if (got.size() != want.size()) return path;
        for (std::size_t i = 0; i < want.size(); ++i) {
            if (auto m = json_mismatch(got[i], want[i], path + "[" + std::to_string(i) + "]"); !m.empty()) return m;
        }
        return {};
    }
    return got == want ? std::string{} : path;
}

inline std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

// Same header, same non-numeric cells, numeric cells within 1e-12 relative.
// Returns a description of the first mismatch, or an empty string.
inline std::string csv_mismatch(const std::string& got, const std::string& want) {
    const auto g = parse_csv(got);
    const auto w = parse_csv(want);
    if (g.size() != w.size()) return "row count " + std::to_string(g.size()) + " vs " + std::to_string(w.size());
    if (g.front() != w.front()) return "header";
    for (std::size_t r = 1; r < w.size(); ++r) {
        if (g[r].size() != w[r].size()) return "row " + std::to_string(r) + " width";
        for (std::size_t c = 0; c < w[r].size(); ++c) {
            const std::string& a = g[r][c];
            const std::string& b = w[r][c];
            const bool same = (b == "true" || b == "false" || b.empty()) ? a == b
                                                                         : close_rel(std::stod(a), std::stod(b));
            if (!same) return "row " + std::to_string(r) + " column " + w.front()[c];
        }
    }
    return {};
}

}  // namespace hhiv::testing
