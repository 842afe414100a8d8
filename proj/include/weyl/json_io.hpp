#pragma once

#include <string>

#include <json.hpp>

#include "weyl/filtration.hpp"
#include "weyl/graded_char.hpp"
#include "weyl/module_lab.hpp"
#include "weyl/sl2char.hpp"

namespace weyl {

// Series serialize as {"lo", "hi", "coeffs": [[exp, int], ...]} with only the
// nonzero terms, exponents ascending.  Parsed series are treated as truncated
// (the window is the only finiteness claim a file can make).
nlohmann::json to_json(const TruncSeries& s);
TruncSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Sl2Char& c);
Sl2Char sl2char_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GradedChar& c);
GradedChar gchar_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FiltMultiplicity& fm);

std::string to_csv(const GradedChar& c); // rows: weight, exponent, coefficient

nlohmann::json module_report(const lab::Realization& m, const GradedChar& chr);

/// Dense row-major dump with exact "p/q" entries.
std::string matrix_text(const RatMatrix& m);

std::string pretty(const GradedChar& c);
std::string pretty(const FiltMultiplicity& fm);

} // namespace weyl
