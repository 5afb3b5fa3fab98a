#include "freelip.h"

#include <cstring>
#include <string>

#include "core/errors.hpp"
#include "core/json_io.hpp"
#include "core/replicate.hpp"

using namespace freelip;

struct flp_ctx {
  std::string error;
  std::string error_json;
  int jobs = 1;
};

struct flp_space {
  PointedMetricSpace m;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void clear_error(flp_ctx* ctx) {
  ctx->error.clear();
  ctx->error_json.clear();
}

flp_status fail(flp_ctx* ctx, flp_status status, const std::string& code,
                const std::string& message,
                const Json& details = Json::object()) {
  if (ctx) {
    ctx->error = message;
    ctx->error_json = error_to_json(code, message, details).dump();
  }
  return status;
}

template <typename Fn>
flp_status guarded(flp_ctx* ctx, Fn&& fn) {
  if (!ctx) return FLP_ERROR_ARGUMENT;
  clear_error(ctx);
  try {
    fn();
    return FLP_OK;
  } catch (const DomainError& e) {
    return fail(ctx, FLP_ERROR_DOMAIN, e.code(), e.what(), e.details());
  } catch (const FormatError& e) {
    return fail(ctx, FLP_ERROR_FORMAT, "Format", e.what());
  } catch (const Json::exception& e) {
    return fail(ctx, FLP_ERROR_FORMAT, "Format", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ctx, FLP_ERROR_FORMAT, "Format", e.what());
  } catch (const std::exception& e) {
    return fail(ctx, FLP_ERROR_INTERNAL, "Internal", e.what());
  }
}

Json parse_json_text(const char* text, const char* what) {
  if (!text) throw FormatError(std::string(what) + " is null");
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw FormatError(std::string("malformed JSON in ") + what);
  return j;
}

Subset subset_arg(const PointedMetricSpace& m, const int* subset, size_t len) {
  if (!subset && len > 0)
    throw FormatError("subset pointer is null");
  std::vector<PointId> ids(subset, subset + len);
  if (len == 0) return Subset::all(m);
  return Subset::checked(m, std::move(ids));
}

Scalar eps_arg(const PointedMetricSpace& m, const char* eps) {
  if (!eps) throw FormatError("eps is null");
  return Scalar::parse(eps, m.mode());
}

}  // namespace

extern "C" {

flp_ctx* flp_ctx_new(void) { return new flp_ctx; }

void flp_ctx_free(flp_ctx* ctx) { delete ctx; }

const char* flp_last_error(const flp_ctx* ctx) {
  return ctx ? ctx->error.c_str() : "";
}

const char* flp_last_error_json(const flp_ctx* ctx) {
  return ctx ? ctx->error_json.c_str() : "";
}

void flp_set_jobs(flp_ctx* ctx, int jobs) {
  if (ctx) ctx->jobs = jobs < 1 ? 1 : jobs;
}

const char* flp_version(void) { return "0.1.0"; }

void flp_string_free(char* s) { std::free(s); }

flp_status flp_space_parse(flp_ctx* ctx, const char* space_json,
                           flp_space** out) {
  if (!out) return FLP_ERROR_ARGUMENT;
  *out = nullptr;
  return guarded(ctx, [&] {
    Json j = parse_json_text(space_json, "space");
    *out = new flp_space{space_from_json(j)};
  });
}

flp_status flp_space_to_json(flp_ctx* ctx, const flp_space* space,
                             char** out) {
  if (!out || !space) return FLP_ERROR_ARGUMENT;
  return guarded(ctx, [&] { *out = dup_string(space_to_json(space->m).dump()); });
}

flp_status flp_generate(flp_ctx* ctx, const char* params_json, char** out) {
  if (!out) return FLP_ERROR_ARGUMENT;
  return guarded(ctx, [&] {
    Json params = parse_json_text(params_json, "generator parameters");
    *out = dup_string(gallery_generate(params).dump());
  });
}

flp_status flp_space_scale(flp_ctx* ctx, const flp_space* space,
                           const char* factor, flp_space** out) {
  if (!out || !space) return FLP_ERROR_ARGUMENT;
  *out = nullptr;
  return guarded(ctx, [&] {
    if (!factor) throw FormatError("scale factor is null");
    Scalar s = Scalar::parse(factor, space->m.mode());
    *out = new flp_space{scale_space(space->m, s)};
  });
}

flp_status flp_space_restrict(flp_ctx* ctx, const flp_space* space,
                              const int* subset, size_t subset_len,
                              flp_space** out) {
  if (!out || !space) return FLP_ERROR_ARGUMENT;
  *out = nullptr;
  return guarded(ctx, [&] {
    Subset s = subset_arg(space->m, subset, subset_len);
    *out = new flp_space{restrict_space(space->m, s)};
  });
}

flp_status flp_space_l1_sum(flp_ctx* ctx, const flp_space* a,
                            const flp_space* b, flp_space** out) {
  if (!out || !a || !b) return FLP_ERROR_ARGUMENT;
  *out = nullptr;
  return guarded(ctx, [&] { *out = new flp_space{l1_sum(a->m, b->m)}; });
}

int flp_space_size(const flp_space* space) {
  return space ? space->m.size() : 0;
}

int flp_space_base(const flp_space* space) {
  return space ? space->m.base() : -1;
}

int flp_space_point(const flp_space* space, const char* name) {
  if (!space || !name) return -1;
  for (int i = 0; i < space->m.size(); ++i)
    if (space->m.name(i) == name) return i;
  return -1;
}

void flp_space_free(flp_space* space) { delete space; }

flp_status flp_norm(flp_ctx* ctx, const flp_space* space,
                    const char* measure_json, int with_certificate,
                    char** out) {
  if (!out || !space) return FLP_ERROR_ARGUMENT;
  return guarded(ctx, [&] {
    Measure mu =
        measure_from_json(space->m, parse_json_text(measure_json, "measure"));
    NormCertificate cert = kr_norm(space->m, mu);
    *out = dup_string(
        certificate_to_json(cert, with_certificate != 0).dump());
  });
}

flp_status flp_ltp(flp_ctx* ctx, const flp_space* space, const int* subset,
                   size_t subset_len, char** out) {
  if (!out || !space) return FLP_ERROR_ARGUMENT;
  return guarded(ctx, [&] {
    Subset n = subset_arg(space->m, subset, subset_len);
    LtpReport r = ltp_ratio(space->m, n, ctx->jobs);
    *out = dup_string(ltp_report_to_json(r).dump());
  });
}

flp_status flp_profile(flp_ctx* ctx, const flp_space* space, char** out) {
  if (!out || !space) return FLP_ERROR_ARGUMENT;
  return guarded(ctx, [&] {
    *out = dup_string(
        profile_to_json(all_pairs_profile(space->m, ctx->jobs)).dump());
  });
}

flp_status flp_oct(flp_ctx* ctx, const flp_space* space,
                   const char* measures_json, char** out) {
  if (!out || !space) return FLP_ERROR_ARGUMENT;
  return guarded(ctx, [&] {
    Json arr = parse_json_text(measures_json, "measures");
    if (!arr.is_array()) throw FormatError("measures must be a JSON array");
    std::vector<Measure> family;
    for (const Json& j : arr) family.push_back(measure_from_json(space->m, j));
    OctReport r = oct_index(space->m, std::move(family), ctx->jobs);
    *out = dup_string(oct_report_to_json(r).dump());
  });
}

flp_status flp_chain(flp_ctx* ctx, const flp_space* space, const int* subset,
                     size_t subset_len, char** out) {
  if (!out || !space) return FLP_ERROR_ARGUMENT;
  return guarded(ctx, [&] {
    Subset n = subset_arg(space->m, subset, subset_len);
    ChainReport r = chain_check(space->m, n, ctx->jobs);
    *out = dup_string(chain_report_to_json(space->m, r).dump());
  });
}

flp_status flp_frechet(flp_ctx* ctx, const flp_space* space,
                       const char* measure_json, char** out) {
  if (!out || !space) return FLP_ERROR_ARGUMENT;
  return guarded(ctx, [&] {
    Measure mu =
        measure_from_json(space->m, parse_json_text(measure_json, "measure"));
    ConvexMoleculeCombination phi = combination_from_measure(space->m, mu);
    *out = dup_string(diff_report_to_json(frechet_check(space->m, phi)).dump());
  });
}

flp_status flp_ramsey(flp_ctx* ctx, const flp_space* space, const int* subset,
                      size_t subset_len, const char* eps, char** out) {
  if (!out || !space) return FLP_ERROR_ARGUMENT;
  return guarded(ctx, [&] {
    Subset n = subset_arg(space->m, subset, subset_len);
    RamseyReport r = ramsey_extract(space->m, n, eps_arg(space->m, eps));
    *out = dup_string(ramsey_report_to_json(r).dump());
  });
}

flp_status flp_extend(flp_ctx* ctx, const flp_space* space, const int* subset,
                      size_t subset_len, const char* values_json, int u, int v,
                      const char* eps, char** out) {
  if (!out || !space) return FLP_ERROR_ARGUMENT;
  return guarded(ctx, [&] {
    Subset n = subset_arg(space->m, subset, subset_len);
    auto values =
        values_from_json(space->m, parse_json_text(values_json, "values"));
    LipschitzWitness w =
        ltp_extend(space->m, n, values, u, v, eps_arg(space->m, eps));
    Json j = witness_to_json(w);
    j["uMinusV"] = scalar_to_report_json(w.values[u] - w.values[v]);
    *out = dup_string(j.dump());
  });
}

flp_status flp_distortion(flp_ctx* ctx, const flp_space* a, const flp_space* b,
                          const int* map, size_t map_len, char** out) {
  if (!out || !a || !b) return FLP_ERROR_ARGUMENT;
  return guarded(ctx, [&] {
    std::vector<int> m;
    if (map) {
      m.assign(map, map + map_len);
    } else {
      m.resize(a->m.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = static_cast<int>(i);
    }
    Bijection bij = Bijection::make(a->m, b->m, std::move(m));
    *out = dup_string(distortion_to_json(distortion(bij)).dump());
  });
}

flp_status flp_replicate(flp_ctx* ctx, char** out) {
  if (!out) return FLP_ERROR_ARGUMENT;
  return guarded(ctx, [&] {
    Json rows = Json::array();
    for (const ReplicationRow& r : run_replication(ctx->jobs))
      rows.push_back(
          Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    *out = dup_string(rows.dump());
  });
}

}  // extern "C"
