// cak: command-line front end for the Colored Arc Kayles solvers.
//
// Vertex ids on the command line, in partition files and in JSON output are 1-based, like the
// .cak format itself.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cak/cak.hpp"

using nlohmann::ordered_json;

namespace {

cak::Player parse_player(const std::string& s) {
  if (s == "B" || s == "b") return cak::Player::B;
  if (s == "W" || s == "w") return cak::Player::W;
  throw cak::Error("player must be B or W, got '" + s + "'");
}

std::vector<cak::Vertex> parse_id_list(const std::string& text, std::size_t n) {
  std::vector<cak::Vertex> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const long long id = std::stoll(tok);
    if (id < 1 || static_cast<std::size_t>(id) > n) throw cak::Error("vertex id " + tok + " out of range");
    out.push_back(static_cast<cak::Vertex>(id - 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

cak::ModulePartition read_partition(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw cak::Error("cannot open " + path);
  const auto j = nlohmann::json::parse(in);
  cak::ModulePartition p;
  for (const auto& mod : j) {
    std::vector<cak::Vertex> m;
    for (const auto& id : mod) {
      const auto v = id.get<long long>();
      if (v < 1 || static_cast<std::size_t>(v) > n) throw cak::Error("partition vertex id out of range");
      m.push_back(static_cast<cak::Vertex>(v - 1));
    }
    std::sort(m.begin(), m.end());
    p.modules.push_back(std::move(m));
  }
  return p;
}

ordered_json stats_json(const cak::SearchStats& s, bool timing) {
  ordered_json j;
  j["node_expansions"] = s.node_expansions;
  j["memo_hits"] = s.memo_hits;
  j["distinct_keys"] = s.distinct_keys;
  if (timing) j["elapsed_ms"] = static_cast<double>(s.elapsed.count()) / 1e6;
  return j;
}

ordered_json ids_json(const std::vector<cak::Vertex>& vs) {
  ordered_json a = ordered_json::array();
  for (auto v : vs) a.push_back(v + 1);
  return a;
}

void emit(const ordered_json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw cak::Error("cannot write " + out_path);
  out << j.dump(2) << "\n";
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw cak::Error("cannot write " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Winner determination for Colored Arc Kayles, Arc Kayles, Cram, Domineering and Kayles"};
  app.require_subcommand(1);

  // solve
  std::string file, first = "B", engine_name = "auto", cover_text, partition_path, out_path;
  std::size_t max_n = 32, vc_threshold = 12;
  bool count_mode = false, restrict_cliques = false, timing = false;
  auto* solve = app.add_subcommand("solve", "Determine the winner of a .cak instance");
  solve->add_option("-f,--file", file, ".cak instance")->required()->check(CLI::ExistingFile);
  solve->add_option("--first", first, "Player to move: B or W")->capture_default_str();
  solve->add_option("-e,--engine", engine_name, "naive, subset, vc, nd, tree or auto")->capture_default_str();
  solve->add_option("--cover", cover_text, "Vertex cover for the vc engine, e.g. 1,4,7");
  solve->add_option("--partition", partition_path, "JSON list of modules (lists of vertex ids) for the nd engine");
  solve->add_option("--max-n", max_n, "Mask width of the subset engine (at most 64)")->capture_default_str();
  solve->add_option("--vc-threshold", vc_threshold, "auto uses vc when the cover number is at most this")
      ->capture_default_str();
  solve->add_flag("--count-mode", count_mode, "Expand every move at every node (no short-circuit)");
  solve->add_flag("--restrict-clique-edges", restrict_cliques, "nd engine: only play edges inside clique modules");
  solve->add_flag("--timing", timing, "Include elapsed time in the report");

  // grundy
  std::string grundy_engine = "auto";
  auto* grundy = app.add_subcommand("grundy", "Sprague-Grundy value of an all-gray instance");
  grundy->add_option("-f,--file", file, ".cak instance")->required()->check(CLI::ExistingFile);
  grundy->add_option("-e,--engine", grundy_engine, "naive, tree or auto")->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance in .cak format");
  gen->require_subcommand(1);
  gen->add_option("-o,--out", out_path, "Output file (default stdout)");
  std::size_t rows = 0, cols = 0, pins = 0, k = 0, s = 0, n = 0;
  std::string variant = "cram", weights_text = "1,0,0";
  double p = 0.5;
  std::uint64_t seed = 1;
  auto* gen_grid = gen->add_subcommand("grid", "Cram or Domineering board");
  gen_grid->add_option("--rows", rows)->required();
  gen_grid->add_option("--cols", cols)->required();
  gen_grid->add_option("--variant", variant, "cram or domineering")->capture_default_str();
  auto* gen_cat = gen->add_subcommand("caterpillar", "Kayles row of pins as a caterpillar");
  gen_cat->add_option("--pins", pins)->required();
  auto* gen_lvc = gen->add_subcommand("lower-vc", "Vertex-cover lower-bound instance");
  gen_lvc->add_option("-k", k, "2 or a multiple of 4")->required();
  auto* gen_lnd = gen->add_subcommand("lower-nd", "Neighborhood-diversity lower-bound instance");
  gen_lnd->add_option("-k", k, "k+1 a power of two")->required();
  gen_lnd->add_option("-s", s, "clique size")->required();
  auto* gen_rand = gen->add_subcommand("random", "Random colored graph");
  gen_rand->add_option("-n", n)->required();
  gen_rand->add_option("-p", p)->capture_default_str();
  gen_rand->add_option("--weights", weights_text, "gray,black,white weights")->capture_default_str();
  gen_rand->add_option("--seed", seed)->capture_default_str();
  auto* gen_tree = gen->add_subcommand("random-tree", "Uniform random labeled tree");
  gen_tree->add_option("-n", n)->required();
  gen_tree->add_option("--seed", seed)->capture_default_str();

  for (auto* sub : gen->get_subcommands({})) sub->fallthrough();

  // params
  auto* params = app.add_subcommand("params", "Vertex cover, neighborhood diversity and class counts");
  params->add_option("-f,--file", file, ".cak instance")->required()->check(CLI::ExistingFile);

  // count
  std::string count_kind;
  std::size_t root = 1;
  auto* count = app.add_subcommand("count", "Subtree counts and position counts");
  count->add_option("kind", count_kind, "ak-subtrees, nk-subtrees, subset-positions, vc-positions, nd-positions")
      ->required()
      ->check(CLI::IsMember({"ak-subtrees", "nk-subtrees", "subset-positions", "vc-positions", "nd-positions"}));
  count->add_option("-f,--file", file, ".cak instance")->required()->check(CLI::ExistingFile);
  count->add_option("--root", root, "Root vertex for subtree counts")->capture_default_str();
  count->add_option("--first", first, "Player to move: B or W")->capture_default_str();
  count->add_option("--cover", cover_text, "Vertex cover for vc-positions");
  count->add_option("--partition", partition_path, "Module partition for nd-positions");
  count->add_option("--max-n", max_n, "Mask width for subset-positions")->capture_default_str();
  count->add_flag("--restrict-clique-edges", restrict_cliques, "nd-positions: only edges inside clique modules");

  // bench
  std::string suite_path;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and print CSV");
  bench->add_option("--suite", suite_path, "Suite description (JSON)")->required()->check(CLI::ExistingFile);
  bench->add_option("-o,--out", out_path, "CSV output file (default stdout)");
  bench->add_flag("--timing", timing, "Fill the elapsed_ms column (otherwise 0, for byte-stable output)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      const auto g = cak::read_graph_file(file);
      auto engine = cak::parse_engine(engine_name);
      if (!engine) throw cak::Error("unknown engine '" + engine_name + "'");
      cak::EngineConfig cfg;
      cfg.max_n = max_n;
      cfg.count_mode = count_mode;
      cfg.restrict_clique_edges = restrict_cliques;
      cfg.auto_vc_threshold = vc_threshold;
      if (!cover_text.empty()) cfg.cover = cak::VertexCover{parse_id_list(cover_text, g.order())};
      if (!partition_path.empty()) cfg.partition = read_partition(partition_path, g.order());
      const auto run = cak::run_engine(*engine, g, parse_player(first), cfg);
      ordered_json j;
      j["engine"] = std::string(cak::engine_name(run.engine));
      j["first"] = std::string(1, cak::player_letter(parse_player(first)));
      j["winner"] = std::string(1, cak::player_letter(run.outcome.winner));
      if (run.outcome.winning_move)
        j["winning_move"] = {run.outcome.winning_move->u + 1, run.outcome.winning_move->v + 1};
      else
        j["winning_move"] = nullptr;
      j["stats"] = stats_json(run.outcome.stats, timing);
      emit(j, "");
    } else if (grundy->parsed()) {
      const auto g = cak::read_graph_file(file);
      const auto all = cak::all_vertices(g);
      std::string used = grundy_engine;
      if (used == "auto") used = cak::is_forest(g, all) ? "tree" : "naive";
      cak::Grundy value;
      if (used == "tree") value = cak::grundy_tree(g, all);
      else if (used == "naive") value = cak::grundy_naive(g, all);
      else throw cak::Error("grundy engine must be naive, tree or auto");
      ordered_json j;
      j["engine"] = used;
      j["grundy"] = value.value;
      emit(j, "");
    } else if (gen->parsed()) {
      cak::ColoredGraph g;
      if (gen_grid->parsed()) {
        if (variant != "cram" && variant != "domineering") throw cak::Error("variant must be cram or domineering");
        g = cak::gen_grid(rows, cols, variant == "cram" ? cak::GridVariant::Cram : cak::GridVariant::Domineering);
      } else if (gen_cat->parsed()) {
        g = cak::gen_caterpillar_kayles(pins);
      } else if (gen_lvc->parsed()) {
        g = cak::gen_lower_vc(k);
      } else if (gen_lnd->parsed()) {
        g = cak::gen_lower_nd(k, s);
      } else if (gen_rand->parsed()) {
        std::vector<double> w;
        std::stringstream ss(weights_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) w.push_back(std::stod(tok));
        if (w.size() != 3) throw cak::Error("--weights needs three values");
        g = cak::gen_random(n, p, {w[0], w[1], w[2]}, seed);
      } else if (gen_tree->parsed()) {
        g = cak::gen_random_tree(n, seed);
      }
      emit_text(cak::serialize_graph(g), out_path);
    } else if (params->parsed()) {
      const auto g = cak::read_graph_file(file);
      const auto all = cak::all_vertices(g);
      const auto cover = cak::min_vertex_cover(g);
      const auto classes = cak::equivalence_classes(g, all, cover);
      const auto twins = cak::nd_partition(g, true);
      const auto colored = cak::nd_partition(g, false);
      ordered_json j;
      j["n"] = g.order();
      j["m"] = g.size();
      j["tau"] = cover.size();
      j["cover"] = ids_json(cover.vertices);
      j["nu"] = twins.size();
      j["nu_colored"] = colored.size();
      ordered_json mods = ordered_json::array();
      for (const auto& m : colored.modules) mods.push_back(ids_json(m));
      j["colored_modules"] = mods;
      j["classes"] = classes.classes.size();
      ordered_json sizes = ordered_json::object();
      for (const auto& [x, cls] : classes.classes) sizes[x.str()] = cls.members.size();
      j["class_sizes"] = sizes;
      j["representative_edges"] = cak::representative_edges(classes).size();
      emit(j, "");
    } else if (count->parsed()) {
      const auto g = cak::read_graph_file(file);
      ordered_json j;
      j["kind"] = count_kind;
      if (count_kind == "ak-subtrees" || count_kind == "nk-subtrees") {
        if (root < 1 || root > g.order()) throw cak::Error("--root out of range");
        const auto r = static_cast<cak::Vertex>(root - 1);
        j["root"] = root;
        j["count"] = count_kind == "ak-subtrees" ? cak::count_ak_subtrees(g, r) : cak::count_nk_subtrees(g, r);
      } else {
        const auto turn = parse_player(first);
        cak::SearchStats st;
        if (count_kind == "subset-positions") {
          cak::SubsetOptions o;
          o.max_n = max_n;
          st = cak::count_subset_positions(g, turn, o);
        } else if (count_kind == "vc-positions") {
          std::optional<cak::VertexCover> cover;
          if (!cover_text.empty()) cover = cak::VertexCover{parse_id_list(cover_text, g.order())};
          const auto used = cover ? *cover : cak::min_vertex_cover(g);
          j["cover_size"] = used.size();
          j["colors"] = g.colors_used();
          st = cak::count_vc_positions(g, turn, used);
        } else {
          std::optional<cak::ModulePartition> part;
          if (!partition_path.empty()) part = read_partition(partition_path, g.order());
          const auto used = part ? *part : cak::nd_partition(g, false);
          j["modules"] = used.size();
          j["key_bound"] = cak::nd_key_bound(used);
          st = cak::count_nd_positions(g, turn, used, restrict_cliques);
        }
        j["stats"] = stats_json(st, false);
      }
      emit(j, "");
    } else if (bench->parsed()) {
      std::ifstream in(suite_path);
      const auto suite = cak::BenchSuite::from_json(nlohmann::json::parse(in));
      emit_text(cak::bench_csv(cak::run_bench(suite, timing)), out_path);
    }
  } catch (const cak::ConsistencyError& e) {
    std::cerr << "consistency violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
