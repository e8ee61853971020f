#pragma once

// JSON and SVG renderings of the library's values.

#include <string>

#include "json.hpp"

#include "dualbraid/ncp.hpp"
#include "dualbraid/normal_form.hpp"
#include "dualbraid/periodic.hpp"
#include "dualbraid/sss.hpp"

namespace dualbraid {

/// {"n": int, "blocks": [[desc ints], ...]} including singletons.
nlohmann::json to_json(const Simple& s);
/// Inverse of to_json; validates the partition.
Simple simple_from_json(const nlohmann::json& j);

/// {"n": int, "inf": int, "factors": [simple, ...]}.
nlohmann::json to_json(const NormalForm& x);
/// Rebuilds and renormalizes; a malformed factor list still yields the element's normal form.
NormalForm normal_form_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PeriodicClass& c);
/// {"n", "k", "target", "gamma", "verified"}.
nlohmann::json to_json(const ConjugacyCertificate& cert);
/// {"conjugate": false, "reason": string}.
nlohmann::json non_conjugacy_json(const std::string& reason);

/// Header line followed by one normal form per line.
std::string sss_table_jsonl(const SssTable& table);

/// Standalone SVG: points 1..n on a horizontal line, each block drawn as
/// nested arcs joining consecutive points and its two extremes.
std::string chord_diagram_svg(const Simple& s);

}  // namespace dualbraid
