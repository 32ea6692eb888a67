#pragma once

/**
 * @file io.hpp
 * @brief Design file serialization and report construction.
 *
 * Design files are JSON with exact entries:
 *   { "geometry": {"rank": R, "degree": D},
 *     "radicand": m,                     // optional; required for irrational entries
 *     "points": [[entry, ...], ...],     // XOR with "gram"; rank 2 only
 *     "gram":   [[entry, ...], ...] }
 * where entry is "p/q", an integer, or {"a": "p/q", "b": "p/q"} read against
 * the design radicand.
 *
 * Reports are nlohmann ordered JSON with a fixed key order, so identical
 * invocations serialize byte-identically. Text output is rendered from the
 * JSON model, never computed separately.
 */

#include <string>

#include <json.hpp>

#include "tdesign/design.hpp"
#include "tdesign/rankforms.hpp"
#include "tdesign/scheme.hpp"

namespace tdesign {

using Json = nlohmann::ordered_json;

// exact-value <-> JSON entry encoding
Json entry_to_json(const QuadraticNumber& value);
QuadraticNumber entry_from_json(const nlohmann::json& j, long radicand);

DesignInstance parse_design_json(const nlohmann::json& j);
DesignInstance read_design_file(const std::string& path);

Json design_to_json(const DesignInstance& design);
void write_design_file(const DesignInstance& design, const std::string& path);

// Report for `analyze`; `scheme` extends it with the scheme section.
Json analysis_report(const DesignInstance& design, const DesignAnalysis& analysis);
Json scheme_report(const DesignInstance& design, const DesignAnalysis& analysis,
                   const SchemeAnalysis& scheme);

Json rank_profile_report(const RankProfile& profile);
Json scan_report(const ScanResult& result);

// Human-readable rendering of any of the report objects above.
std::string render_text(const Json& report);

} // namespace tdesign
