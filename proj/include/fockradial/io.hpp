#pragma once

#include "fockradial/expansion.hpp"
#include "fockradial/fock.hpp"
#include "fockradial/radial.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace fockradial::io {

using nlohmann::json;

// {"dim": d, "terms": [{"alpha": [...], "re": x, "im": y}, ...]}, graded order.
json to_json(const HermiteExpansion& f);
// Same shape plus "space": "fock".
json to_json(const FockSeries& F);
// {"dim", "n", "weighting": "gaussian-factored", "values_re", "values_im"}, row-major grid.
json to_json(const SampledFunction& f);
json to_json(const RadialReport& r);
json to_json(const RadialProfile& p);

HermiteExpansion hermite_expansion_from_json(const json& j);
FockSeries fock_series_from_json(const json& j);
SampledFunction sampled_function_from_json(const json& j);
RadialProfile radial_profile_from_json(const json& j);
RadialReport radial_report_from_json(const json& j);

bool is_sampled_function(const json& j);

/// Parses a file; throws FormatError on I/O or syntax errors.
json read_json_file(const std::filesystem::path& path);
/// Writes text followed by a newline; throws FormatError when the path is unwritable.
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace fockradial::io
