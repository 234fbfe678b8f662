#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hhiv/harmonic.hpp"
#include "hhiv/hh_bounds.hpp"

namespace hhiv::cli {

nlohmann::ordered_json to_json(const Interval& u);

/// {theorem, direction, terms: [{name, lo, hi}], inclusions: [...],
///  coefficients: {...}}; the caller adds version and inputs.
nlohmann::ordered_json to_json(const ChainReport& r);

/// {verdict, direction, resolution, witness?}.
nlohmann::ordered_json to_json(const Certificate& c);

/// param_value, <term>_lo, <term>_hi ..., gap_outer, gap_inner, holds_strict, holds_tol
std::vector<std::string> csv_header(const ChainReport& r);
std::vector<std::string> csv_row(double param, const ChainReport& r);

/// Joins fields with ',' and terminates with '\n'.
std::string csv_line(const std::vector<std::string>& fields);

/// 17 significant digits, '.' decimal separator.
std::string format_number(double v);

}  // namespace hhiv::cli
