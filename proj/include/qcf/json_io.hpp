/**
 * @file json_io.hpp
 * @brief Canonical JSON encoding of Laurent polynomials and z-series.
 *
 * The encoding is deterministic: object keys appear in a fixed order and
 * terms are sorted by (q-exponent, y-exponent) ascending, so equal values
 * always serialize to byte-identical strings.
 */
#pragma once

#include <json.hpp>

#include "qcf/zseries.hpp"

namespace qcf {

using Json = nlohmann::ordered_json;

/// {"g": <granularity>, "terms": [{"q": <scaled exp>, "y": <exp>, "c": "<rational>"}]}.
Json laurent_to_json(const Laurent& f);
Laurent laurent_from_json(const Json& j);

/// {"order": N, "coeffs": [<laurent>, ...]} with exactly N+1 coefficients.
Json zseries_to_json(const ZSeries& f);
ZSeries zseries_from_json(const Json& j);

/// Compact single-line rendering used by every CLI output path.
std::string canonical_dump(const Json& j);

} // namespace qcf
