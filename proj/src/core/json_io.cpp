#include "core/json_io.hpp"

#include <limits>

#include "core/errors.hpp"

namespace freelip {

namespace {

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = require_field(j, key);
  if (!v.is_number_integer())
    throw FormatError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

PointId point_key(const std::string& key) {
  try {
    size_t used = 0;
    int p = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return p;
  } catch (const std::exception&) {
    throw FormatError("point key '" + key + "' is not an index");
  }
}

Scalar scalar_field(const Json& j, const char* key, NumMode mode) {
  return scalar_from_json(require_field(j, key), mode);
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (!s.is_exact()) return Json(s.to_double());
  const mpq_class& q = s.rat();
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return Json(static_cast<int64_t>(q.get_num().get_si()));
  return Json(s.str());
}

// Report values never take the integer shortcut: exact results always cross
// as strings so nothing downstream is tempted to treat them as floats.
Json scalar_to_report_json(const Scalar& s) {
  if (!s.is_exact()) return Json(s.to_double());
  return Json(s.str());
}

Scalar scalar_from_json(const Json& j, NumMode mode) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>(), mode);
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  if (j.is_number_integer()) {
    long v = j.get<int64_t>();
    return mode == NumMode::Exact ? Scalar::exact(v)
                                  : Scalar::real(static_cast<double>(v));
  }
  if (j.is_number_float()) {
    if (mode == NumMode::Exact)
      throw FormatError("non-integer number in exact mode; use \"p/q\"");
    return Scalar::real(j.get<double>());
  }
  throw FormatError("expected a number or \"p/q\" string");
}

Json space_to_json(const PointedMetricSpace& m) {
  Json dist = Json::array();
  for (int a = 0; a < m.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < m.size(); ++b) row.push_back(scalar_to_json(m.dist(a, b)));
    dist.push_back(std::move(row));
  }
  return Json{{"points", m.names()},
              {"base", m.base()},
              {"mode", m.mode() == NumMode::Exact ? "exact" : "float"},
              {"dist", std::move(dist)}};
}

PointedMetricSpace space_from_json(const Json& j) {
  std::string mode_str = require_field(j, "mode").get<std::string>();
  NumMode mode;
  if (mode_str == "exact")
    mode = NumMode::Exact;
  else if (mode_str == "float")
    mode = NumMode::Float;
  else
    throw FormatError("mode must be \"exact\" or \"float\"");

  const Json& dist = require_field(j, "dist");
  if (!dist.is_array() || dist.empty())
    throw FormatError("dist must be a non-empty matrix");
  std::vector<std::vector<Scalar>> d;
  for (const Json& row : dist) {
    if (!row.is_array()) throw FormatError("dist rows must be arrays");
    std::vector<Scalar> r;
    for (const Json& v : row) r.push_back(scalar_from_json(v, mode));
    d.push_back(std::move(r));
  }

  std::vector<std::string> names;
  if (j.contains("points")) {
    for (const Json& p : j.at("points")) names.push_back(p.get<std::string>());
  }
  return validate_metric(d, int_field(j, "base"), std::move(names));
}

Measure measure_from_json(const PointedMetricSpace& m, const Json& j) {
  const Json& coeffs = require_field(j, "coeffs");
  if (!coeffs.is_object()) throw FormatError("coeffs must be an object");
  std::map<PointId, Scalar> raw;
  for (const auto& [key, value] : coeffs.items())
    raw.emplace(point_key(key), scalar_from_json(value, m.mode()));
  return canonicalize(m, raw);
}

Json measure_to_json(const Measure& mu) {
  Json coeffs = Json::object();
  for (const auto& [p, a] : mu.coeffs())
    coeffs[std::to_string(p)] = scalar_to_json(a);
  return Json{{"coeffs", std::move(coeffs)}};
}

std::map<PointId, Scalar> values_from_json(const PointedMetricSpace& m,
                                           const Json& j) {
  const Json& values = require_field(j, "values");
  if (!values.is_object()) throw FormatError("values must be an object");
  std::map<PointId, Scalar> out;
  for (const auto& [key, value] : values.items())
    out.emplace(point_key(key), scalar_from_json(value, m.mode()));
  return out;
}

Json witness_to_json(const LipschitzWitness& w) {
  Json values = Json::array();
  for (const Scalar& v : w.values) values.push_back(scalar_to_report_json(v));
  return Json{{"values", std::move(values)}, {"lip", scalar_to_report_json(w.lip)}};
}

Json certificate_to_json(const NormCertificate& cert, bool with_certificate) {
  Json out{{"value", scalar_to_report_json(cert.value)}};
  if (!with_certificate) return out;
  Json plan = Json::array();
  for (const TransportArc& a : cert.plan)
    plan.push_back(Json::array({a.src, a.dst, scalar_to_report_json(a.mass)}));
  out["plan"] = std::move(plan);
  Json witness = Json::array();
  for (const Scalar& v : cert.witness.values)
    witness.push_back(scalar_to_report_json(v));
  out["witness"] = std::move(witness);
  out["witnessLip"] = scalar_to_report_json(cert.witness.lip);
  return out;
}

Json ltp_report_to_json(const LtpReport& r) {
  Json out{{"subset", r.subset.ids},
           {"ratio", scalar_to_report_json(r.ratio)},
           {"modulus", scalar_to_report_json(r.modulus)},
           {"witness", {r.witness.first, r.witness.second}}};
  if (r.worst_pair)
    out["worstPair"] = {r.worst_pair->first, r.worst_pair->second};
  else
    out["worstPair"] = nullptr;
  return out;
}

Json profile_to_json(const std::vector<PairProfileEntry>& entries) {
  Json pairs = Json::array();
  for (const auto& e : entries)
    pairs.push_back(Json{{"subset", {e.subset.first, e.subset.second}},
                         {"modulus", scalar_to_report_json(e.modulus)}});
  return Json{{"pairs", std::move(pairs)}};
}

Json oct_report_to_json(const OctReport& r) {
  Json per = Json::array();
  for (const Scalar& v : r.per_measure) per.push_back(scalar_to_report_json(v));
  return Json{{"index", scalar_to_report_json(r.index)},
              {"molecule", {r.molecule.first, r.molecule.second}},
              {"perMeasure", std::move(per)}};
}

Json chain_report_to_json(const PointedMetricSpace& m, const ChainReport& r) {
  return Json{{"ratio", scalar_to_report_json(r.ltp.ratio)},
              {"modulus", scalar_to_report_json(r.ltp.modulus)},
              {"ltpWitness", {r.ltp.witness.first, r.ltp.witness.second}},
              {"oct", scalar_to_report_json(r.oct.index)},
              {"molecule", {r.oct.molecule.first, r.oct.molecule.second}},
              {"lower", scalar_to_report_json(r.lower)},
              {"upper", scalar_to_report_json(r.upper)},
              {"marginLower", scalar_to_report_json(r.oct.index - r.lower)},
              {"marginUpper", scalar_to_report_json(r.upper - r.oct.index)},
              {"holds", r.holds},
              {"mode", m.mode() == NumMode::Exact ? "exact" : "float"}};
}

Json diff_report_to_json(const DiffReport& r) {
  Json out{{"differentiable", r.differentiable}, {"apex", r.apex}};
  if (r.witness_point) {
    out["witnessPoint"] = *r.witness_point;
    out["f1"] = witness_to_json(r.witnesses->first);
    out["f2"] = witness_to_json(r.witnesses->second);
  }
  return out;
}

Json ramsey_report_to_json(const RamseyReport& r) {
  return Json{{"pair", {r.pair.first, r.pair.second}},
              {"A", r.extracted},
              {"excludedX", r.excluded_x},
              {"excludedY", r.excluded_y},
              {"eps", scalar_to_report_json(r.eps)}};
}

Json distortion_to_json(const DistortionReport& r) {
  return Json{{"expansion", scalar_to_report_json(r.expansion)},
              {"contraction", scalar_to_report_json(r.contraction)},
              {"distortion", scalar_to_report_json(r.distortion)}};
}

Json gallery_generate(const Json& params) {
  std::string name = require_field(params, "name").get<std::string>();
  auto k = [&]() { return int_field(params, "k"); };
  if (name == "ejenega") return space_to_json(gen_ejenega(k()));
  if (name == "graph-m") return space_to_json(gen_graph_m(k()));
  if (name == "4branch") return space_to_json(gen_four_branch(k()));
  if (name == "equilateral") {
    Scalar c = params.contains("c")
                   ? scalar_field(params, "c", NumMode::Exact)
                   : Scalar::exact(1);
    return space_to_json(gen_equilateral(int_field(params, "n"), c));
  }
  if (name == "line") return space_to_json(gen_geometric_line(k()));
  if (name == "dyadic") return space_to_json(gen_dyadic_cluster(k()));
  if (name == "tree") {
    WeightedTree tree;
    const Json& edges = require_field(params, "edges");
    int max_vertex = -1;
    for (const Json& e : edges) {
      if (!e.is_array() || e.size() != 3)
        throw FormatError("tree edges must be [a, b, weight] triples");
      WeightedTree::Edge edge{e[0].get<int>(), e[1].get<int>(),
                              scalar_from_json(e[2], NumMode::Exact)};
      max_vertex = std::max({max_vertex, edge.a, edge.b});
      tree.edges.push_back(std::move(edge));
    }
    tree.vertex_count = max_vertex + 1;
    std::vector<int> marked;
    if (params.contains("marked"))
      marked = params.at("marked").get<std::vector<int>>();
    else
      for (int v = 0; v < tree.vertex_count; ++v) marked.push_back(v);
    return space_to_json(gen_tree_metric(tree, marked));
  }
  if (name == "ellp") {
    double p = scalar_field(params, "p", NumMode::Float).to_double();
    auto [config, bij] = gen_ellp_embed(p, k());
    Json out = space_to_json(config.space);
    out["p"] = p;
    out["coords"] = config.coords;
    return out;
  }
  throw FormatError("unknown generator '" + name + "'");
}

Json error_to_json(const std::string& code, const std::string& message,
                   const Json& details) {
  return Json{{"error", code}, {"message", message}, {"details", details}};
}

}  // namespace freelip
