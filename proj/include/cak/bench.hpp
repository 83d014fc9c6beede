#pragma once

// Benchmark suites: expand a JSON suite description into instances, run every requested engine on
// each, and emit one CSV row per (instance, engine).
//
// Suite format:
//   {
//     "seed": 1, "repetitions": 1, "first": "B",
//     "count_mode": false, "restrict_clique_edges": false,
//     "engines": ["naive", "subset", "vc", "nd", "tree"],
//     "instances": [
//       {"generator": "random", "n": [6, 8], "p": [0.2, 0.5], "weights": [[1, 1, 1]]},
//       {"generator": "grid", "rows": 2, "cols": [2, 3], "variant": "cram"},
//       {"generator": "caterpillar", "pins": [1, 2, 3]},
//       {"generator": "lower-vc", "k": [2, 4]},
//       {"generator": "lower-nd", "k": 3, "s": [2, 3]},
//       {"generator": "random-tree", "n": [8, 12]}
//     ]
//   }
// Any parameter may be a scalar or a list; lists are expanded as a cartesian product. Randomized
// generators are seeded with seed + (global instance index).

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

#include <json.hpp>

#include "cak/generators.hpp"
#include "cak/parameters.hpp"
#include "cak/solver.hpp"

namespace cak {

/// Two engines disagreed on the winner of the same instance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

struct BenchRecord {
  std::string instance_id;
  std::string parameters;
  std::string engine;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t tau = 0;
  std::size_t nu = 0;
  std::string winner;  // empty when the run failed
  std::uint64_t node_expansions = 0;
  std::uint64_t distinct_keys = 0;
  double elapsed_ms = 0.0;
  std::string status = "ok";
};

struct BenchInstance {
  std::string id;
  std::string parameters;
  ColoredGraph graph;
};

struct BenchSuite {
  std::uint64_t seed = 1;
  std::size_t repetitions = 1;
  Player first = Player::B;
  bool count_mode = false;
  bool restrict_clique_edges = false;
  std::vector<Engine> engines;
  nlohmann::json instances = nlohmann::json::array();

  static BenchSuite from_json(const nlohmann::json& j) {
    BenchSuite s;
    s.seed = j.value("seed", std::uint64_t{1});
    s.repetitions = j.value("repetitions", std::size_t{1});
    const std::string first = j.value("first", std::string("B"));
    if (first != "B" && first != "W") throw Error("suite: first must be B or W");
    s.first = first == "B" ? Player::B : Player::W;
    s.count_mode = j.value("count_mode", false);
    s.restrict_clique_edges = j.value("restrict_clique_edges", false);
    if (!j.contains("engines") || !j["engines"].is_array()) throw Error("suite: engines list required");
    for (const auto& e : j["engines"]) {
      auto engine = parse_engine(e.get<std::string>());
      if (!engine) throw Error("suite: unknown engine " + e.get<std::string>());
      s.engines.push_back(*engine);
    }
    if (!j.contains("instances") || !j["instances"].is_array()) throw Error("suite: instances list required");
    s.instances = j["instances"];
    return s;
  }
};

namespace detail {

inline std::string format_number(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline std::string param_text(const nlohmann::json& v) {
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ":" : "") + param_text(v[i]);
    return s;
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_number(v.get<double>());
  return v.dump();
}

/// Cartesian product over the list-valued fields of one instance group. Weight lists are lists of
/// triples, so a "weights" value whose first element is a number is treated as a single triple.
inline std::vector<std::map<std::string, nlohmann::json>> expand_group(const nlohmann::json& group) {
  std::vector<std::map<std::string, nlohmann::json>> out{{}};
  for (const auto& [key, value] : group.items()) {
    std::vector<nlohmann::json> choices;
    const bool single_triple = key == "weights" && value.is_array() && !value.empty() && value[0].is_number();
    if (value.is_array() && !single_triple)
      choices.assign(value.begin(), value.end());
    else
      choices.push_back(value);
    std::vector<std::map<std::string, nlohmann::json>> next;
    for (const auto& partial : out)
      for (const auto& c : choices) {
        auto grown = partial;
        grown[key] = c;
        next.push_back(std::move(grown));
      }
    out = std::move(next);
  }
  return out;
}

inline ColoredGraph generate(const std::map<std::string, nlohmann::json>& p, std::uint64_t seed) {
  auto get = [&](const char* key) -> const nlohmann::json& {
    auto it = p.find(key);
    if (it == p.end()) throw Error(std::string("suite: missing parameter '") + key + "'");
    return it->second;
  };
  const std::string gen = get("generator").get<std::string>();
  if (gen == "random") {
    ColorWeights w;
    if (p.count("weights")) {
      const auto& t = p.at("weights");
      if (!t.is_array() || t.size() != 3) throw Error("suite: weights must be a triple");
      w = {t[0].get<double>(), t[1].get<double>(), t[2].get<double>()};
    }
    return gen_random(get("n").get<std::size_t>(), get("p").get<double>(), w, seed);
  }
  if (gen == "random-tree") return gen_random_tree(get("n").get<std::size_t>(), seed);
  if (gen == "grid") {
    const std::string variant = p.count("variant") ? p.at("variant").get<std::string>() : "cram";
    if (variant != "cram" && variant != "domineering") throw Error("suite: unknown grid variant " + variant);
    return gen_grid(get("rows").get<std::size_t>(), get("cols").get<std::size_t>(),
                    variant == "cram" ? GridVariant::Cram : GridVariant::Domineering);
  }
  if (gen == "caterpillar") return gen_caterpillar_kayles(get("pins").get<std::size_t>());
  if (gen == "lower-vc") return gen_lower_vc(get("k").get<std::size_t>());
  if (gen == "lower-nd") return gen_lower_nd(get("k").get<std::size_t>(), get("s").get<std::size_t>());
  throw Error("suite: unknown generator " + gen);
}

inline bool randomized(const std::map<std::string, nlohmann::json>& p) {
  const std::string gen = p.at("generator").get<std::string>();
  return gen == "random" || gen == "random-tree";
}

}  // namespace detail

inline std::vector<BenchInstance> expand_suite(const BenchSuite& suite) {
  std::vector<BenchInstance> out;
  std::size_t index = 0;
  for (const auto& group : suite.instances) {
    if (!group.contains("generator")) throw Error("suite: instance group without generator");
    for (const auto& params : detail::expand_group(group)) {
      const std::size_t reps = detail::randomized(params) ? suite.repetitions : 1;
      for (std::size_t r = 0; r < reps; ++r) {
        const std::uint64_t seed = suite.seed + index;
        std::string text = params.at("generator").get<std::string>();
        for (const auto& [k, v] : params)
          if (k != "generator") text += " " + k + "=" + detail::param_text(v);
        if (detail::randomized(params)) text += " seed=" + std::to_string(seed);
        char id[16];
        std::snprintf(id, sizeof id, "%05zu", index);
        out.push_back({id, text, detail::generate(params, seed)});
        ++index;
      }
    }
  }
  return out;
}

/// Runs the suite. Rows come back sorted by (instance id, engine name). Throws ConsistencyError if
/// two successful runs on one instance disagree on the winner (nd rows are left out of the check
/// when restrict_clique_edges is set, since that explores a different game).
inline std::vector<BenchRecord> run_bench(const BenchSuite& suite, bool timing = false) {
  std::vector<BenchRecord> rows;
  for (const auto& inst : expand_suite(suite)) {
    const std::size_t tau = min_vertex_cover(inst.graph).size();
    const std::size_t nu = nd_partition(inst.graph, false).size();
    std::map<std::string, std::string> winners;
    for (Engine engine : suite.engines) {
      BenchRecord rec;
      rec.instance_id = inst.id;
      rec.parameters = inst.parameters;
      rec.engine = std::string(engine_name(engine));
      rec.n = inst.graph.order();
      rec.m = inst.graph.size();
      rec.tau = tau;
      rec.nu = nu;
      EngineConfig cfg;
      cfg.count_mode = suite.count_mode;
      cfg.restrict_clique_edges = suite.restrict_clique_edges;
      cfg.max_n = 64;
      try {
        const EngineRun run = run_engine(engine, inst.graph, suite.first, cfg);
        rec.winner = std::string(1, player_letter(run.outcome.winner));
        rec.node_expansions = run.outcome.stats.node_expansions;
        rec.distinct_keys = run.outcome.stats.distinct_keys;
        if (timing) rec.elapsed_ms = static_cast<double>(run.outcome.stats.elapsed.count()) / 1e6;
        if (!(suite.restrict_clique_edges && engine == Engine::Nd)) winners[rec.engine] = rec.winner;
      } catch (const Error& e) {
        rec.status = std::string("error: ") + e.what();
      }
      rows.push_back(std::move(rec));
    }
    for (const auto& [engine, winner] : winners)
      if (winner != winners.begin()->second) {
        std::string msg = "winner mismatch on instance " + inst.id + " (" + inst.parameters + "):";
        for (const auto& [e, w] : winners) msg += " " + e + "=" + w;
        throw ConsistencyError(msg);
      }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return std::tie(a.instance_id, a.engine) < std::tie(b.instance_id, b.engine);
  });
  return rows;
}

inline std::string bench_csv(const std::vector<BenchRecord>& rows) {
  std::string out =
      "instance_id,parameters,engine,n,m,tau,nu,winner,node_expansions,distinct_keys,elapsed_ms,status\n";
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  for (const auto& r : rows) {
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms);
    out += quote(r.instance_id) + "," + quote(r.parameters) + "," + r.engine + "," + std::to_string(r.n) + "," +
           std::to_string(r.m) + "," + std::to_string(r.tau) + "," + std::to_string(r.nu) + "," + r.winner + "," +
           std::to_string(r.node_expansions) + "," + std::to_string(r.distinct_keys) + "," + elapsed + "," +
           quote(r.status) + "\n";
  }
  return out;
}

}  // namespace cak
