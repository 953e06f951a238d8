// geodetic-lab: command-line front end for the geodetic library.
//
// Exit status: 0 success, 1 a yes/no question answered "no", 2 usage or
// input error, 3 search budget exhausted.

#include <geodetic/builders.hpp>
#include <geodetic/conjectures.hpp>
#include <geodetic/diophantine.hpp>
#include <geodetic/distance.hpp>
#include <geodetic/error.hpp>
#include <geodetic/graph_io.hpp>
#include <geodetic/homeomorph.hpp>
#include <geodetic/predicates.hpp>
#include <geodetic/report_json.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using geodetic::Graph;
using nlohmann::json;

enum Exit : int { kOk = 0, kNo = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out;
  std::string format = "json";
  int workers = 1;
  std::optional<std::int64_t> budget_ms;
  std::optional<std::uint64_t> max_nodes;
};

struct GraphInput {
  std::string graph;
  std::string edges;
  std::string graph6;
};

std::string ReadFile(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Graph LoadGraph(const GraphInput& in, std::string* label) {
  const int given = !in.graph.empty() + !in.edges.empty() + !in.graph6.empty();
  if (given != 1)
    throw UsageError("give exactly one of --graph, --edges, --graph6");
  if (!in.graph.empty()) {
    *label = in.graph;
    return geodetic::BuiltinGraph(in.graph);
  }
  if (!in.edges.empty()) {
    *label = in.edges;
    return geodetic::ParseEdgeList(ReadFile(in.edges));
  }
  *label = in.graph6;
  return geodetic::DecodeGraph6(in.graph6);
}

// Text rendering: one "key: value" line per top-level field.
std::string AsText(const json& doc) {
  std::string s;
  if (!doc.is_object()) return doc.dump() + "\n";
  for (const auto& [key, value] : doc.items()) {
    s += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  return s;
}

void Emit(const Common& c, const json& doc, const std::string& text = "") {
  std::string body;
  if (c.format == "text") body = text.empty() ? AsText(doc) : text;
  else body = doc.dump(2) + "\n";
  if (c.out.empty() || c.out == "-") std::cout << body;
  else WriteFile(c.out, body);
}

geodetic::SearchOptions SearchFrom(const Common& c) {
  geodetic::SearchOptions opts;
  opts.workers = c.workers;
  if (c.budget_ms) opts.time_budget = std::chrono::milliseconds(*c.budget_ms);
  opts.node_budget = c.max_nodes;
  return opts;
}

geodetic::Skeleton LoadSkeleton(const std::string& base, const std::string& base_edges) {
  if (!base.empty() && !base_edges.empty())
    throw UsageError("give only one of --base, --base-edges");
  if (!base.empty()) return geodetic::Skeleton::Named(base);
  if (!base_edges.empty())
    return geodetic::Skeleton::FromMooreBase(geodetic::ParseEdgeList(ReadFile(base_edges)),
                                             base_edges);
  throw UsageError("a base is required: --base NAME or --base-edges FILE");
}

struct LengthInput {
  std::string base;
  std::string base_edges;
  std::string lengths;
  std::optional<int> uniform;
};

// Base graph, its display name, and the length vector.
struct Homeomorph {
  Graph base;
  std::string name;
  geodetic::LengthVector lengths;
};

Homeomorph LoadHomeomorph(const LengthInput& in) {
  if (in.lengths.empty() == !in.uniform)
    throw UsageError("give exactly one of --lengths, --uniform");
  std::optional<Graph> base;
  std::string name = !in.base.empty() ? in.base : in.base_edges;
  if (name.empty()) name = in.lengths;
  if (!in.base.empty() && !in.base_edges.empty())
    throw UsageError("give only one of --base, --base-edges");
  if (!in.base.empty()) base = geodetic::BuiltinGraph(in.base);
  if (!in.base_edges.empty()) base = geodetic::ParseEdgeList(ReadFile(in.base_edges));

  if (in.uniform) {
    if (!base) throw UsageError("--uniform needs --base or --base-edges");
    return {*base, name, geodetic::LengthVector::Uniform(base->num_edges(), *in.uniform)};
  }
  const std::string text = ReadFile(in.lengths);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw geodetic::Error(geodetic::ErrorCode::kParse, in.lengths + ": " + e.what());
    }
    auto [doc_base, lv] = geodetic::LengthVectorFromJson(doc);
    if (base && !(*base == doc_base))
      throw UsageError("--lengths names a different base than --base");
    return {doc_base, name, std::move(lv)};
  }
  if (!base) throw UsageError("text --lengths needs --base or --base-edges");
  return {*base, name, geodetic::ParseLengthVector(*base, text)};
}

json GraphSummary(const Graph& g, const std::string& label) {
  return {{"input", label},
          {"vertices", g.num_vertices()},
          {"edges", g.num_edges()},
          {"graph6", geodetic::EncodeGraph6(g)}};
}

void AddCommonFlags(CLI::App* app, Common& c) {
  app->add_option("--out", c.out, "Write the report here instead of stdout");
  app->add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
}

void AddSearchFlags(CLI::App* app, Common& c) {
  app->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  app->add_option("--budget-ms", c.budget_ms,
                  "Time budget in milliseconds (default: $GEODETIC_LAB_BUDGET_MS)")
      ->check(CLI::PositiveNumber);
  app->add_option("--max-nodes", c.max_nodes, "Search node budget")
      ->check(CLI::PositiveNumber);
}

void AddGraphFlags(CLI::App* app, GraphInput& in) {
  app->add_option("--graph", in.graph,
                  "Built-in graph: c5, petersen, hoffman-singleton, k<n>, cycle<n>, path<n>");
  app->add_option("--edges", in.edges, "Edge-list file ('-' for stdin)");
  app->add_option("--graph6", in.graph6, "graph6 string");
}

void AddLengthFlags(CLI::App* app, LengthInput& in) {
  app->add_option("--base", in.base, "Built-in base graph");
  app->add_option("--base-edges", in.base_edges, "Base graph as an edge-list file");
  app->add_option("--lengths", in.lengths,
                  "Length vector: JSON {base, lengths} or 'u v length' lines");
  app->add_option("--uniform", in.uniform, "Give every base edge this length")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, check and enumerate geodetic graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "geodetic-lab 1.0.0");

  Common common;
  GraphInput graph_in;
  LengthInput length_in;

  // check
  auto* check = app.add_subcommand("check", "Test predicates of a graph");
  AddGraphFlags(check, graph_in);
  AddCommonFlags(check, common);
  bool want_geodetic = false, want_srg = false, want_moore = false, want_block = false,
       want_diameter = false;
  check->add_flag("--geodetic", want_geodetic, "Unique shortest paths");
  check->add_flag("--srg", want_srg, "Strongly regular");
  check->add_flag("--moore", want_moore, "Moore graph");
  check->add_flag("--block", want_block, "2-connected");
  check->add_flag("--diameter", want_diameter, "Report the diameter");

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a built-in graph");
  std::string gen_name, gen_as = "graph6";
  gen->add_option("--graph", gen_name, "Built-in graph name")->required();
  gen->add_option("--as", gen_as, "Encoding")->check(CLI::IsMember({"graph6", "edges"}));
  AddCommonFlags(gen, common);

  // realize
  auto* realize = app.add_subcommand("realize", "Subdivide a base graph");
  AddLengthFlags(realize, length_in);
  AddCommonFlags(realize, common);

  // skeletonize
  auto* skeletonize = app.add_subcommand("skeletonize", "Smooth away degree-2 vertices");
  AddGraphFlags(skeletonize, graph_in);
  AddCommonFlags(skeletonize, common);

  // conditions
  auto* conditions =
      app.add_subcommand("conditions", "Check the three geodeticity conditions");
  AddLengthFlags(conditions, length_in);
  AddCommonFlags(conditions, common);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate geodetic homeomorphs");
  std::string base_name, base_edges, mode = "conditions", checkpoint;
  int target_d = 0;
  std::optional<int> bound;
  bool sound = false, timing = false;
  std::size_t max_witnesses = 1000;
  enumerate->add_option("--base", base_name, "Built-in Moore base");
  enumerate->add_option("--base-edges", base_edges, "Moore base as an edge-list file");
  enumerate->add_option("--d", target_d, "Target diameter")->required();
  enumerate->add_option("--mode", mode, "Engine")
      ->check(CLI::IsMember({"conditions", "exhaustive"}));
  enumerate->add_option("--bound", bound, "Exhaustive: largest segment length")
      ->check(CLI::PositiveNumber);
  enumerate->add_flag("--sound", sound, "Exhaustive: use bound 2d+1");
  enumerate->add_option("--max-witnesses", max_witnesses, "Witness list cap");
  enumerate->add_option("--checkpoint", checkpoint, "Resumable progress file");
  enumerate->add_flag("--timing", timing, "Include elapsed_ms in the report");
  AddSearchFlags(enumerate, common);
  AddCommonFlags(enumerate, common);

  // system
  auto* system = app.add_subcommand("system", "Dump the constraint system");
  system->add_option("--base", base_name, "Built-in Moore base");
  system->add_option("--base-edges", base_edges, "Moore base as an edge-list file");
  system->add_option("--d", target_d, "Target diameter")->required();
  AddCommonFlags(system, common);

  // conjecture-cycle
  auto* conjecture =
      app.add_subcommand("conjecture-cycle", "Check the embedded-cycle conjecture");
  AddGraphFlags(conjecture, graph_in);
  AddCommonFlags(conjecture, common);
  std::optional<int> t_value, max_len;
  std::string artifact = "counterexample.json";
  std::uint64_t max_cycles = geodetic::kDefaultMaxCycles;
  conjecture->add_option("--t", t_value, "t (default: every t from 1 to the diameter)")
      ->check(CLI::PositiveNumber);
  conjecture->add_option("--max-len", max_len, "Longest cycle examined (default: n)")
      ->check(CLI::Range(3, 1 << 20));
  conjecture->add_option("--max-cycles", max_cycles, "Cycle enumeration cap");
  conjecture->add_option("--artifact", artifact, "Counterexample file written on failure");

  // filter
  auto* filter = app.add_subcommand("filter", "Classify a stream of graphs");
  std::string input;
  std::vector<std::string> edge_files;
  std::string predicate = "geodetic&srg&!moore", survivors_path, sidecar_path;
  std::size_t chunk = 1024;
  filter->add_option("--input", input, "graph6 lines ('-' for stdin)");
  filter->add_option("--edge-list", edge_files, "Edge-list files, one graph each");
  filter->add_option("--predicate", predicate, "e.g. geodetic&srg&!moore");
  filter->add_option("--survivors", survivors_path, "Write matching graphs as graph6 lines");
  filter->add_option("--sidecar", sidecar_path, "Write survivor classifications as JSON");
  filter->add_option("--chunk", chunk, "Records per parallel chunk")->check(CLI::PositiveNumber);
  filter->add_option("--workers", common.workers, "Worker threads")->check(CLI::PositiveNumber);
  AddCommonFlags(filter, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (!common.budget_ms) {
    if (const char* env = std::getenv("GEODETIC_LAB_BUDGET_MS"); env && *env) {
      char* end = nullptr;
      const long long v = std::strtoll(env, &end, 10);
      if (*end != '\0' || v <= 0) {
        std::cerr << "error: GEODETIC_LAB_BUDGET_MS must be a positive integer\n";
        return kUsage;
      }
      common.budget_ms = v;
    }
  }

  try {
    if (check->parsed()) {
      std::string label;
      Graph g = LoadGraph(graph_in, &label);
      const bool all = !(want_geodetic || want_srg || want_moore || want_block || want_diameter);
      json doc = GraphSummary(g, label);
      const bool connected = g.is_connected();
      doc["connected"] = connected;
      bool answer = true;
      if (all || want_geodetic) {
        if (connected) {
          auto v = geodetic::IsGeodetic(g);
          doc["geodetic"] = v.geodetic;
          doc["witness"] = v.witness ? json{{"u", v.witness->u},
                                            {"v", v.witness->v},
                                            {"distance", v.witness_distance},
                                            {"multiplicity_at_least", v.multiplicity}}
                                     : json(nullptr);
          answer = answer && v.geodetic;
        } else {
          doc["geodetic"] = false;
          doc["witness"] = nullptr;
          answer = false;
        }
      }
      if (all || want_diameter) {
        doc["diameter"] = connected ? json(geodetic::Diameter(g)) : json(nullptr);
      }
      if (all || want_srg) {
        auto p = geodetic::StronglyRegularParams(g);
        doc["srg"] = p ? json{p->n, p->k, p->lambda, p->mu} : json(nullptr);
        answer = answer && p.has_value();
      }
      if (all || want_moore) {
        auto p = connected ? geodetic::MooreParamsOf(g) : std::nullopt;
        doc["moore"] = p ? json{p->k, p->d} : json(nullptr);
        answer = answer && p.has_value();
      }
      if (all || want_block) {
        const bool block = geodetic::IsBlock(g);
        doc["block"] = block;
        answer = answer && block;
      }
      Emit(common, doc);
      return all || answer ? kOk : kNo;
    }

    if (gen->parsed()) {
      Graph g = geodetic::BuiltinGraph(gen_name);
      const std::string text =
          gen_as == "graph6" ? geodetic::EncodeGraph6(g) + "\n" : geodetic::FormatEdgeList(g);
      json doc = GraphSummary(g, gen_name);
      doc["encoding"] = gen_as;
      doc["data"] = text;
      if (common.format == "json") Emit(common, doc);
      else Emit(common, doc, text);
      return kOk;
    }

    if (realize->parsed()) {
      Homeomorph h = LoadHomeomorph(length_in);
      Graph g = geodetic::Realize(h.base, h.lengths);
      json doc = GraphSummary(g, h.name);
      doc["lengths"] = h.lengths.lengths;
      doc["edge_list"] = json::array();
      for (const auto& e : g.edges()) doc["edge_list"].push_back({e.u, e.v});
      Emit(common, doc, geodetic::FormatEdgeList(g));
      return kOk;
    }

    if (skeletonize->parsed()) {
      std::string label;
      Graph g = LoadGraph(graph_in, &label);
      auto result = geodetic::Skeletonize(g);
      json doc = geodetic::LengthVectorToJson(result.base, result.lengths);
      doc["input"] = label;
      doc["base_graph6"] = geodetic::EncodeGraph6(result.base);
      Emit(common, doc, geodetic::FormatLengthVector(result.base, result.lengths));
      return kOk;
    }

    if (conditions->parsed()) {
      Homeomorph h = LoadHomeomorph(length_in);
      auto skeleton = geodetic::Skeleton::FromMooreBase(h.base, h.name);
      auto report = geodetic::CheckAllConditions(skeleton, h.lengths);
      json doc = geodetic::ToJson(report);
      doc["base"] = h.name;
      doc["lengths"] = h.lengths.lengths;
      Emit(common, doc);
      return report.all_conditions() ? kOk : kNo;
    }

    if (enumerate->parsed()) {
      auto skeleton = LoadSkeleton(base_name, base_edges);
      geodetic::EnumerateOptions opts;
      opts.search = SearchFrom(common);
      opts.search.checkpoint_path = checkpoint;
      opts.bound = bound;
      opts.sound = sound;
      opts.max_witnesses = max_witnesses;
      if (mode == "conditions" && (bound || sound))
        throw UsageError("--bound and --sound apply to --mode exhaustive");
      auto report = geodetic::EnumerateClasses(skeleton, target_d,
                                               geodetic::ParseEngineMode(mode), opts);
      Emit(common, geodetic::ToJson(report, timing));
      return kOk;
    }

    if (system->parsed()) {
      auto skeleton = LoadSkeleton(base_name, base_edges);
      Emit(common, geodetic::DumpSystem(geodetic::BuildSystem(skeleton, target_d)));
      return kOk;
    }

    if (conjecture->parsed()) {
      std::string label;
      Graph g = LoadGraph(graph_in, &label);
      const int len = max_len.value_or(std::max<int>(3, g.num_vertices()));
      std::vector<int> ts;
      if (t_value) {
        ts.push_back(*t_value);
      } else {
        for (int t = 1; t <= geodetic::Diameter(g); ++t) ts.push_back(t);
      }
      json doc = GraphSummary(g, label);
      doc["verdicts"] = json::array();
      bool failed = false;
      json artifacts = json::array();
      for (int t : ts) {
        auto v = geodetic::CheckCycleConjecture(g, t, len, max_cycles);
        doc["verdicts"].push_back(geodetic::ToJson(v));
        if (v.status == geodetic::VerdictStatus::kFail) {
          failed = true;
          artifacts.push_back(geodetic::CounterexampleArtifact(g, v));
        }
      }
      doc["status"] = failed ? "fail" : "ok";
      if (failed) {
        WriteFile(artifact, (artifacts.size() == 1 ? artifacts[0] : artifacts).dump(2) + "\n");
        doc["artifact"] = artifact;
        std::cerr << "counterexample written to " << artifact << "\n";
      }
      Emit(common, doc);
      return failed ? kNo : kOk;
    }

    if (filter->parsed()) {
      if (input.empty() == edge_files.empty())
        throw UsageError("give exactly one of --input, --edge-list");
      std::function<std::optional<geodetic::GraphRecord>()> source;
      std::ifstream file;
      if (!input.empty()) {
        std::istream* stream = &std::cin;
        if (input != "-") {
          file.open(input);
          if (!file) throw UsageError("cannot read " + input);
          stream = &file;
        }
        source = geodetic::Graph6LineSource(*stream);
      } else {
        source = [&, next = std::size_t{0}]() mutable -> std::optional<geodetic::GraphRecord> {
          if (next == edge_files.size()) return std::nullopt;
          const std::string& path = edge_files[next++];
          return geodetic::GraphRecord{path, ReadFile(path), true};
        };
      }
      geodetic::ClassifyOptions opts;
      opts.workers = common.workers;
      opts.chunk_size = chunk;
      std::string survivors_text;
      json sidecar = json::array();
      auto stats = geodetic::ClassifyStream(
          source, geodetic::GraphPredicate::Parse(predicate), opts,
          [&](const geodetic::Survivor& s) {
            const std::string g6 = geodetic::EncodeGraph6(s.graph);
            survivors_text += g6 + "\n";
            sidecar.push_back({{"id", s.id},
                               {"graph6", g6},
                               {"classification", geodetic::ToJson(s.classification)}});
          },
          [](const std::string& warning) { std::cerr << "warning: " << warning << "\n"; });
      if (!survivors_path.empty()) WriteFile(survivors_path, survivors_text);
      if (!sidecar_path.empty()) WriteFile(sidecar_path, sidecar.dump(2) + "\n");
      json doc = geodetic::ToJson(stats);
      doc["predicate"] = predicate;
      Emit(common, doc);
      return kOk;
    }
  } catch (const geodetic::BudgetExceededError& e) {
    json err{{"error", "budget_exceeded"},
             {"message", e.what()},
             {"completed_units", e.completed_units()},
             {"total_units", e.total_units()}};
    if (!e.checkpoint_path().empty()) err["checkpoint"] = e.checkpoint_path();
    std::cerr << err.dump() << "\n";
    return kBudget;
  } catch (const geodetic::Error& e) {
    std::cerr << json{{"error", geodetic::ErrorCodeName(e.code())}, {"message", e.what()}}.dump()
              << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
