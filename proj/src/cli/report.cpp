#include "hhiv/cli/report.hpp"

#include <cstdio>
#include <optional>

namespace hhiv::cli {

using json = nlohmann::ordered_json;

json to_json(const Interval& u) {
    return json{{"lo", u.lo()}, {"hi", u.hi()}};
}

json to_json(const ChainReport& r) {
    json terms = json::array();
    for (const Term& t : r.terms) {
        terms.push_back({{"name", t.name}, {"lo", t.value.lo()}, {"hi", t.value.hi()}});
    }
    json inclusions = json::array();
    for (const InclusionCheck& c : r.inclusions) {
        inclusions.push_back({{"outer", c.outer},
                              {"inner", c.inner},
                              {"holds_strict", c.holds_strict},
                              {"holds_tol", c.holds_tol},
                              {"gap", c.gap}});
    }
    json coefficients = json::object();
    for (const auto& [name, v] : r.coefficients) coefficients[name] = v;
    return json{{"theorem", std::string(to_string(r.theorem))},
                {"direction", std::string(to_string(r.direction))},
                {"terms", terms},
                {"inclusions", inclusions},
                {"coefficients", coefficients}};
}

json to_json(const Certificate& c) {
    json j{{"verdict", std::string(to_string(c.verdict))},
           {"direction", std::string(to_string(c.direction))},
           {"resolution", c.resolution}};
    if (c.witness) {
        const Witness& w = *c.witness;
        j["witness"] = {{"x", w.x},
                        {"y", w.y},
                        {"t", w.t},
                        {"index", {w.i, w.j, w.k}},
                        {"lhs", to_json(w.lhs)},
                        {"rhs", to_json(w.rhs)},
                        {"gap", w.gap}};
    }
    return j;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

// The term whose Hausdorff gaps to its chain neighbours are reported: the
// weighted integral, or the right-hand sum that contains it.
std::string gap_anchor(const ChainReport& r) {
    return r.theorem == Theorem::product_left ? "RHS" : "I";
}

struct Gaps {
    std::optional<double> outer;
    std::optional<double> inner;
};

Gaps anchor_gaps(const ChainReport& r) {
    // Chain terms precede the auxiliary ones; there is one more of them
    // than there are inclusions.
    const std::size_t chain_len = r.inclusions.size() + 1;
    const std::string anchor = gap_anchor(r);
    Gaps g;
    for (std::size_t i = 0; i < chain_len && i < r.terms.size(); ++i) {
        if (r.terms[i].name != anchor) continue;
        if (i > 0) g.outer = hausdorff(r.terms[i - 1].value, r.terms[i].value);
        if (i + 1 < chain_len) g.inner = hausdorff(r.terms[i].value, r.terms[i + 1].value);
    }
    return g;
}

}  // namespace

std::vector<std::string> csv_header(const ChainReport& r) {
    std::vector<std::string> h{"param_value"};
    for (const Term& t : r.terms) {
        h.push_back(t.name + "_lo");
        h.push_back(t.name + "_hi");
    }
    for (const char* c : {"gap_outer", "gap_inner", "holds_strict", "holds_tol"}) h.emplace_back(c);
    return h;
}

std::vector<std::string> csv_row(double param, const ChainReport& r) {
    std::vector<std::string> row{format_number(param)};
    for (const Term& t : r.terms) {
        row.push_back(format_number(t.value.lo()));
        row.push_back(format_number(t.value.hi()));
    }
    const Gaps g = anchor_gaps(r);
    row.push_back(g.outer ? format_number(*g.outer) : "");
    row.push_back(g.inner ? format_number(*g.inner) : "");
    row.emplace_back(r.all_hold_strict() ? "true" : "false");
    row.emplace_back(r.all_hold_tol() ? "true" : "false");
    return row;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += fields[i];
    }
    line += '\n';
    return line;
}

}  // namespace hhiv::cli
