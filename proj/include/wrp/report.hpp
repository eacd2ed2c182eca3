#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "wrp/code.hpp"
#include "wrp/pfunction.hpp"

namespace wrp {

using Json = nlohmann::ordered_json;

// Canonical content key for one classified function; drives the cache.
std::string profile_cache_key(const FieldSpec& spec, const std::vector<TraceTerm>& descriptor);

Json field_json(const FieldSpec& spec);
Json profile_json(const FieldSpec& spec, const PlateauedProfile& prof);
PlateauedProfile profile_from_json(const FieldSpec& spec, const Json& j);
Json code_report_json(const CodeReport& rep);

// Renderers; reports carry no timestamps so identical configs reproduce
// byte-identical files.
std::string render_text(const Json& report, int indent = 0);
std::string render_csv(const Json& report);

void write_report_file(const std::string& path, const Json& report, const std::string& format);

}  // namespace wrp
