// Command-line front end. Talks to the library exclusively through the C API
// in freelip.h; JSON goes in and out unmodified so shell pipelines compose.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "freelip.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitFormat = 2;

struct CliState {
  flp_ctx* ctx = nullptr;
  std::string output_path;
  std::optional<std::string> stdin_cache;

  std::string read_input(const std::string& path) {
    if (path == "-") {
      if (!stdin_cache) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        stdin_cache = buf.str();
      }
      return *stdin_cache;
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  void emit(const std::string& text) {
    if (output_path.empty() || output_path == "-") {
      std::cout << text << "\n";
      return;
    }
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot write '" + output_path + "'");
    out << text << "\n";
  }
};

// Exits the process on failure after printing the structured error payload.
void check(CliState& s, flp_status status) {
  if (status == FLP_OK) return;
  const char* payload = flp_last_error_json(s.ctx);
  if (payload && *payload) std::cout << payload << "\n";
  std::cerr << "error: " << flp_last_error(s.ctx) << "\n";
  std::exit(status == FLP_ERROR_DOMAIN ? kExitDomain : kExitFormat);
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { flp_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct OwnedSpace {
  flp_space* p = nullptr;
  ~OwnedSpace() { flp_space_free(p); }
};

void load_space(CliState& s, const std::string& path, OwnedSpace& out) {
  std::string text = s.read_input(path);
  check(s, flp_space_parse(s.ctx, text.c_str(), &out.p));
}

// Subset and point tokens are indices or display names; numeric tokens are
// always indices.
int resolve_point(const flp_space* space, const std::string& token) {
  try {
    size_t used = 0;
    int idx = std::stoi(token, &used);
    if (used == token.size()) return idx;
  } catch (const std::exception&) {
  }
  int idx = flp_space_point(space, token.c_str());
  if (idx < 0) {
    std::cerr << "error: unknown point '" << token << "'\n";
    std::exit(kExitFormat);
  }
  return idx;
}

std::vector<int> resolve_subset(const flp_space* space,
                                const std::string& csv) {
  std::vector<int> ids;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ','))
    if (!token.empty()) ids.push_back(resolve_point(space, token));
  return ids;
}

json parse_measure_file(CliState& s, const std::string& path) {
  json j = json::parse(s.read_input(path), nullptr, false);
  if (j.is_discarded()) {
    std::cerr << "error: malformed JSON in '" << path << "'\n";
    std::exit(kExitFormat);
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free-space norm and long-trapezoid toolkit"};
  app.require_subcommand(1);

  CliState state;
  state.ctx = flp_ctx_new();

  int jobs = 1;
  if (const char* env = std::getenv("FSL_JOBS")) jobs = std::atoi(env);
  app.add_option("--jobs", jobs, "worker threads for pair searches");
  app.add_option("-o,--output", state.output_path, "output file (default stdout)");

  std::string space_path, space_path_b, measure_path, values_path, map_path;
  std::string subset_csv, eps = "1/100", u_token, v_token;
  bool with_certificate = false;
  std::vector<std::string> measure_paths;

  auto* validate = app.add_subcommand("validate", "check the metric axioms");
  validate->add_option("space", space_path)->required();

  auto* norm = app.add_subcommand("norm", "Kantorovich-Rubinstein norm");
  norm->add_option("space", space_path)->required();
  norm->add_option("--measure", measure_path)->required();
  norm->add_flag("--certificate", with_certificate,
                 "include transport plan and dual witness");

  auto* ltp = app.add_subcommand("ltp", "long trapezoid ratio and modulus");
  ltp->add_option("space", space_path)->required();
  ltp->add_option("--subset", subset_csv, "indices or names (default: all)");

  auto* profile = app.add_subcommand("profile", "modulus of every 2-point subset");
  profile->add_option("space", space_path)->required();

  auto* oct = app.add_subcommand("oct", "octahedrality index of a family");
  oct->add_option("space", space_path)->required();
  oct->add_option("--measures", measure_paths, "measure files")->required();

  auto* chain = app.add_subcommand("chain", "LTP ratio vs octahedrality index");
  chain->add_option("space", space_path)->required();
  chain->add_option("--subset", subset_csv)->required();

  auto* frechet = app.add_subcommand("frechet", "norm differentiability check");
  frechet->add_option("space", space_path)->required();
  frechet->add_option("--measure", measure_path)->required();

  auto* ramsey = app.add_subcommand("ramsey", "two-point failure extraction");
  ramsey->add_option("space", space_path)->required();
  ramsey->add_option("--subset", subset_csv)->required();
  ramsey->add_option("--eps", eps)->required();

  auto* extend = app.add_subcommand("extend", "witness-pair Lipschitz extension");
  extend->add_option("space", space_path)->required();
  extend->add_option("--subset", subset_csv)->required();
  extend->add_option("--values", values_path)->required();
  extend->add_option("--u", u_token)->required();
  extend->add_option("--v", v_token)->required();
  extend->add_option("--eps", eps)->required();

  std::string gen_name, gen_c = "1", gen_p = "2", gen_edges, gen_marked;
  int gen_k = 2, gen_n = 4;
  auto* gen = app.add_subcommand("gen", "emit a gallery space");
  gen->add_option("name", gen_name,
                  "ejenega|graph-m|4branch|equilateral|line|dyadic|tree|ellp")
      ->required();
  gen->add_option("--k", gen_k);
  gen->add_option("--n", gen_n);
  gen->add_option("--c", gen_c, "equilateral side length");
  gen->add_option("--p", gen_p, "sequence-space exponent");
  gen->add_option("--edges", gen_edges, "tree edges a-b:w,...");
  gen->add_option("--marked", gen_marked, "marked tree vertices i,j,...");

  auto* dist = app.add_subcommand("distortion", "bi-Lipschitz distortion");
  dist->add_option("a", space_path)->required();
  dist->add_option("b", space_path_b)->required();
  dist->add_option("--map", map_path, "JSON index map (default identity)");

  std::string replicate_what;
  auto* replicate = app.add_subcommand("replicate", "rerun the bundled examples");
  replicate->add_option("what", replicate_what)->required()->check(
      CLI::IsMember({"all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitFormat;
  }
  flp_set_jobs(state.ctx, jobs);

  try {
    if (*validate) {
      OwnedSpace space;
      load_space(state, space_path, space);
      json out = {{"valid", true},
                  {"points", flp_space_size(space.p)},
                  {"base", flp_space_base(space.p)}};
      state.emit(out.dump());
    } else if (*norm) {
      OwnedSpace space;
      load_space(state, space_path, space);
      json measure = parse_measure_file(state, measure_path);
      OwnedString out;
      check(state, flp_norm(state.ctx, space.p, measure.dump().c_str(),
                            with_certificate ? 1 : 0, &out.p));
      state.emit(out.str());
    } else if (*ltp) {
      OwnedSpace space;
      load_space(state, space_path, space);
      std::vector<int> ids = resolve_subset(space.p, subset_csv);
      OwnedString out;
      check(state, flp_ltp(state.ctx, space.p, ids.empty() ? nullptr : ids.data(),
                           ids.size(), &out.p));
      state.emit(out.str());
    } else if (*profile) {
      OwnedSpace space;
      load_space(state, space_path, space);
      OwnedString out;
      check(state, flp_profile(state.ctx, space.p, &out.p));
      state.emit(out.str());
    } else if (*oct) {
      OwnedSpace space;
      load_space(state, space_path, space);
      json family = json::array();
      for (const std::string& path : measure_paths)
        family.push_back(parse_measure_file(state, path));
      OwnedString out;
      check(state,
            flp_oct(state.ctx, space.p, family.dump().c_str(), &out.p));
      state.emit(out.str());
    } else if (*chain) {
      OwnedSpace space;
      load_space(state, space_path, space);
      std::vector<int> ids = resolve_subset(space.p, subset_csv);
      OwnedString out;
      check(state, flp_chain(state.ctx, space.p, ids.data(), ids.size(),
                             &out.p));
      state.emit(out.str());
    } else if (*frechet) {
      OwnedSpace space;
      load_space(state, space_path, space);
      json measure = parse_measure_file(state, measure_path);
      OwnedString out;
      check(state, flp_frechet(state.ctx, space.p, measure.dump().c_str(),
                               &out.p));
      state.emit(out.str());
    } else if (*ramsey) {
      OwnedSpace space;
      load_space(state, space_path, space);
      std::vector<int> ids = resolve_subset(space.p, subset_csv);
      OwnedString out;
      check(state, flp_ramsey(state.ctx, space.p, ids.data(), ids.size(),
                              eps.c_str(), &out.p));
      state.emit(out.str());
    } else if (*extend) {
      OwnedSpace space;
      load_space(state, space_path, space);
      std::vector<int> ids = resolve_subset(space.p, subset_csv);
      json values = parse_measure_file(state, values_path);
      int u = resolve_point(space.p, u_token);
      int v = resolve_point(space.p, v_token);
      OwnedString out;
      check(state,
            flp_extend(state.ctx, space.p, ids.data(), ids.size(),
                       values.dump().c_str(), u, v, eps.c_str(), &out.p));
      state.emit(out.str());
    } else if (*gen) {
      json params = {{"name", gen_name}};
      if (gen_name == "equilateral") {
        params["n"] = gen_n;
        params["c"] = gen_c;
      } else if (gen_name == "tree") {
        json edges = json::array();
        std::stringstream ss(gen_edges);
        std::string item;
        while (std::getline(ss, item, ',')) {
          auto dash = item.find('-');
          auto colon = item.find(':');
          if (dash == std::string::npos || colon == std::string::npos ||
              colon < dash) {
            std::cerr << "error: edge '" << item << "' is not a-b:w\n";
            return kExitFormat;
          }
          edges.push_back({std::stoi(item.substr(0, dash)),
                           std::stoi(item.substr(dash + 1, colon - dash - 1)),
                           item.substr(colon + 1)});
        }
        params["edges"] = edges;
        if (!gen_marked.empty()) {
          std::vector<int> marked;
          std::stringstream ms(gen_marked);
          while (std::getline(ms, item, ','))
            if (!item.empty()) marked.push_back(std::stoi(item));
          params["marked"] = marked;
        }
      } else if (gen_name == "ellp") {
        params["p"] = gen_p;
        params["k"] = gen_k;
      } else {
        params["k"] = gen_k;
      }
      OwnedString out;
      check(state, flp_generate(state.ctx, params.dump().c_str(), &out.p));
      state.emit(out.str());
    } else if (*dist) {
      OwnedSpace a, b;
      load_space(state, space_path, a);
      load_space(state, space_path_b, b);
      std::vector<int> map;
      if (!map_path.empty()) {
        json j = parse_measure_file(state, map_path);
        if (j.is_object() && j.contains("map")) j = j.at("map");
        map = j.get<std::vector<int>>();
      }
      OwnedString out;
      check(state, flp_distortion(state.ctx, a.p, b.p,
                                  map.empty() ? nullptr : map.data(),
                                  map.size(), &out.p));
      state.emit(out.str());
    } else if (*replicate) {
      OwnedString out;
      check(state, flp_replicate(state.ctx, &out.p));
      json rows = json::parse(out.str());
      size_t passed = 0;
      std::ostringstream table;
      for (const json& row : rows) {
        bool pass = row.at("pass").get<bool>();
        passed += pass ? 1 : 0;
        table << (pass ? "PASS " : "FAIL ") << row.at("name").get<std::string>();
        for (size_t i = row.at("name").get<std::string>().size(); i < 28; ++i)
          table << ' ';
        table << ' ' << row.at("detail").get<std::string>() << "\n";
      }
      table << passed << "/" << rows.size() << " passed";
      state.emit(table.str());
      if (passed != rows.size()) {
        flp_ctx_free(state.ctx);
        return kExitDomain;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    flp_ctx_free(state.ctx);
    return kExitFormat;
  }

  flp_ctx_free(state.ctx);
  return kExitOk;
}
