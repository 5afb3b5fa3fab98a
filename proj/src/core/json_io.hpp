#pragma once

#include "json.hpp"

#include "core/gallery.hpp"
#include "core/ltp.hpp"
#include "core/octa.hpp"
#include "core/transport.hpp"

namespace freelip {

using Json = nlohmann::json;

// Scalars cross the text boundary as "p/q" strings (integers stay numeric) in
// exact mode and as plain numbers in float mode, so exact values never get
// corrupted by a float detour.
Json scalar_to_json(const Scalar& s);
// Report form: exact values always as strings, floats as numbers.
Json scalar_to_report_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, NumMode mode);

// { "points": [names], "base": i, "mode": "exact"|"float", "dist": [[...]] }
Json space_to_json(const PointedMetricSpace& m);
PointedMetricSpace space_from_json(const Json& j);

// { "coeffs": { "<pointIndex>": scalar, ... } }
Measure measure_from_json(const PointedMetricSpace& m, const Json& j);
Json measure_to_json(const Measure& mu);

// { "values": { "<pointIndex>": scalar, ... } }
std::map<PointId, Scalar> values_from_json(const PointedMetricSpace& m,
                                           const Json& j);

Json certificate_to_json(const NormCertificate& cert, bool with_certificate);
Json witness_to_json(const LipschitzWitness& w);
Json ltp_report_to_json(const LtpReport& r);
Json profile_to_json(const std::vector<PairProfileEntry>& entries);
Json oct_report_to_json(const OctReport& r);
Json chain_report_to_json(const PointedMetricSpace& m, const ChainReport& r);
Json diff_report_to_json(const DiffReport& r);
Json ramsey_report_to_json(const RamseyReport& r);
Json distortion_to_json(const DistortionReport& r);

// Builds a gallery space from generator parameters:
//   { "name": "ejenega"|"graph-m"|"4branch"|"equilateral"|"line"|"dyadic"
//             |"tree"|"ellp", ... }
// The result is a space document; "ellp" adds "p" and "coords".
Json gallery_generate(const Json& params);

// Uniform error payload: { "error": code, "message": ..., "details": {...} }.
Json error_to_json(const std::string& code, const std::string& message,
                   const Json& details = Json::object());

}  // namespace freelip
