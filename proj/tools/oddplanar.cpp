// Command line front end. Reports go to stdout as JSON, summaries to stderr.
// Exit codes: 0 success, 1 validation or precondition failure, 2 usage error,
// 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "oddplanar/bounds.hpp"
#include "oddplanar/document.hpp"
#include "oddplanar/enumerate.hpp"
#include "oddplanar/lemma1.hpp"
#include "oddplanar/parallel.hpp"
#include "oddplanar/pipeline.hpp"
#include "oddplanar/random_drawing.hpp"
#include "oddplanar/report.hpp"
#include "oddplanar/search.hpp"
#include "oddplanar/svg.hpp"
#include "oddplanar/validate.hpp"

using namespace oddplanar;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

void emit(const Json& j) { std::cout << json_text(j); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
}

// K5, K3,3, random:n:m, planar:n:m, or a graph or drawing document.
Multigraph load_graph(const std::string& spec, std::uint64_t seed) {
  std::smatch m;
  if (std::regex_match(spec, m, std::regex(R"(K(\d+))"))) return Multigraph::complete(std::stoi(m[1]));
  if (std::regex_match(spec, m, std::regex(R"(K(\d+),(\d+))"))) {
    return Multigraph::complete_bipartite(std::stoi(m[1]), std::stoi(m[2]));
  }
  if (std::regex_match(spec, m, std::regex(R"((random|planar):(\d+):(\d+))"))) {
    const int n = std::stoi(m[2]), e = std::stoi(m[3]);
    return m[1] == "random" ? random_graph(n, e, seed) : random_planar_graph(n, e, seed);
  }
  return parse_graph(read_text_file(spec));
}

Variant parse_variant(const std::string& s) {
  if (s == "cr") return Variant::Cr;
  if (s == "pcr") return Variant::Pcr;
  return Variant::Ocr;
}

Rule parse_rule(const std::string& s) {
  if (s == "+" || s == "plus") return Rule::Plus;
  if (s == "0" || s == "zero") return Rule::Zero;
  if (s == "-" || s == "minus") return Rule::Minus;
  return Rule::Star;
}

void note_seed(std::uint64_t seed) { std::cerr << "seed " << seed << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd-crossing drawings: validation, redrawing, bounds and search"};
  app.require_subcommand(1);
  std::string file, out_path, spec;
  int k = 0, threads = 0;
  std::int64_t n = 0, m = 0, trials = 0, budget = 0, max_candidates = 0;
  double p = 0, time_limit = 0;
  std::uint64_t seed = kDefaultSeed;
  int max_crossings = 1, moves = 3;
  std::string variant = "cr", rule = "0", model = "convex", witness_path;

  auto add_file = [&](CLI::App* c) { c->add_option("file", file, "Drawing document")->required(); };
  auto add_seed = [&](CLI::App* c) {
    c->add_option("--seed", seed, "Random seed (default 1)");
  };
  auto add_threads = [&](CLI::App* c) {
    c->add_option("--threads", threads, std::string("Worker threads (default ") + kThreadsEnv + " or all cores)");
  };

  auto* validate = app.add_subcommand("validate", "Check a drawing document");
  add_file(validate);
  auto* stats = app.add_subcommand("stats", "Crossing counts under the nine variants");
  add_file(stats);
  std::vector<EdgeId> loop_word;
  auto* lemma1 = app.add_subcommand("redraw-lemma1", "Redraw a one-vertex drawing of loops");
  auto* lemma1_file = lemma1->add_option("file", file, "Drawing document on one vertex");
  lemma1->add_option("--rotation", loop_word, "Loop ids in clockwise order, each twice (instead of a file)")
      ->excludes(lemma1_file);
  lemma1->require_option(1);
  auto* transform = app.add_subcommand("transform", "Turn a k-odd-plane drawing into a k-plane one");
  add_file(transform);
  transform->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  auto* embed = app.add_subcommand("embed", "Crossing-free redrawing of a drawing with only even pairs");
  add_file(embed);
  auto* bounds = app.add_subcommand("bounds", "Edge-count bounds and crossing lemma values");
  bounds->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  bounds->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  bounds->add_option("--m", m, "Edge count for the lemma values (default 0)")->check(CLI::NonNegativeNumber);
  auto* audit = app.add_subcommand("audit", "Check a drawing against the bounds");
  add_file(audit);
  audit->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  auto* sample = app.add_subcommand("sample", "Random induced subdrawings");
  add_file(sample);
  sample->add_option("--p", p)->required();
  sample->add_option("--trials", trials)->required();
  add_seed(sample);
  add_threads(sample);
  auto* oracle = app.add_subcommand("oracle", "Exact crossing value by enumeration");
  oracle->add_option("graph", spec, "K<n>, K<a>,<b>, random:n:m, planar:n:m or a document")->required();
  oracle->add_option("--variant", variant)->check(CLI::IsMember({"cr", "pcr", "ocr"}));
  oracle->add_option("--rule", rule)->check(CLI::IsMember({"+", "0", "-", "*", "plus", "zero", "minus", "star"}));
  oracle->add_option("--max-crossings", max_crossings)->check(CLI::NonNegativeNumber);
  oracle->add_option("--max-candidates", max_candidates, "0 for no limit");
  oracle->add_option("--time-limit", time_limit, "Seconds, 0 for no limit");
  oracle->add_option("--witness", witness_path, "Write the witness drawing here");
  add_seed(oracle);
  add_threads(oracle);
  auto* search = app.add_subcommand("search", "Local search for dense k-odd-plane drawings");
  search->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  search->add_option("--n", n)->required();
  search->add_option("--budget", budget, "Iterations")->required();
  search->add_option("--time-limit", time_limit, "Seconds, 0 for no limit");
  add_seed(search);
  auto* generate = app.add_subcommand("generate", "Seeded random drawing of a graph");
  generate->add_option("graph", spec, "K<n>, K<a>,<b>, random:n:m, planar:n:m or a document")->required();
  generate->add_option("--model", model)->check(CLI::IsMember({"convex", "perturbed-even"}));
  generate->add_option("--moves", moves, "Double-crossing moves for perturbed-even")->check(CLI::NonNegativeNumber);
  add_seed(generate);
  auto* render = app.add_subcommand("render", "SVG picture of a drawing");
  add_file(render);
  render->add_option("-o,--output", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) {
      const Drawing d = load_drawing(file, nullptr, false);
      const auto violations = validate_drawing(d);
      emit({{"valid", violations.empty()}, {"violations", to_json(violations)}});
      std::cerr << (violations.empty() ? "valid" : std::to_string(violations.size()) + " violations") << "\n";
      return violations.empty() ? kOk : kFailed;
    }
    if (*stats) {
      const Drawing d = load_drawing(file);
      const CrossingStats st = crossing_stats(d);
      Json j = to_json(st);
      j["n"] = d.graph().vertex_count();
      j["m"] = d.graph().edge_count();
      emit(j);
      std::cerr << "cr " << st.cr << ", pcr " << st.pcr << ", ocr " << st.ocr << "\n";
      return kOk;
    }
    if (*lemma1) {
      OneVertexSketch sketch;
      if (!loop_word.empty()) {
        // First occurrence of a loop id is end 0, the second end 1.
        std::vector<Ending> rotation;
        std::map<EdgeId, int> seen;
        for (EdgeId e : loop_word) rotation.push_back({e, static_cast<std::uint8_t>(seen[e]++ == 0 ? 0 : 1)});
        sketch = OneVertexSketch::from_rotation(0, rotation);
      } else {
        const Drawing d = load_drawing(file);
        if (d.graph().vertex_count() != 1) throw Error(ErrorKind::InvalidArgument, "need a drawing on one vertex");
        const VertexId v = d.graph().vertices()[0];
        sketch = OneVertexSketch::from_rotation(v, d.endings_at(v));
      }
      sketch.check();
      const Drawing r = lemma1_redraw(sketch);
      emit(drawing_json(r));
      std::cerr << r.crossing_node_count() << " crossings after redrawing\n";
      return kOk;
    }
    if (*transform) {
      const PipelineTrace t = theorem2_transform(load_drawing(file), k);
      emit({{"drawing", drawing_json(t.result, {std::nullopt, "transform", k})}, {"trace", to_json(t)}});
      std::cerr << t.removed.size() << " edges removed, " << t.result.crossing_node_count() << " crossings left\n";
      return kOk;
    }
    if (*embed) {
      const Drawing r = hanani_tutte_embed(load_drawing(file));
      emit(drawing_json(r, {std::nullopt, "embed", std::nullopt}));
      std::cerr << "crossing-free drawing with " << r.graph().edge_count() << " edges\n";
      return kOk;
    }
    if (*bounds) {
      const BoundReport r = bound_report(k, n, m);
      emit(to_json(r));
      std::cerr << "mk_upper " << r.mk_upper << ", modd_upper " << r.modd_upper << "\n";
      return kOk;
    }
    if (*audit) {
      const BoundReport r = audit_drawing(load_drawing(file), k);
      emit(to_json(r));
      std::cerr << (r.ok() ? "all checks passed" : std::to_string(r.alerts.size()) + " alerts") << "\n";
      return r.ok() ? kOk : kFailed;
    }
    if (*sample) {
      note_seed(seed);
      const SampleStats s = sampling_experiment(load_drawing(file), p, trials, seed, threads);
      emit(to_json(s));
      std::cerr << "mean n' " << s.mean_n << ", mean m' " << s.mean_m << ", law violations " << s.law_violations
                << "\n";
      return kOk;
    }
    if (*oracle) {
      if (spec.starts_with("random:") || spec.starts_with("planar:")) note_seed(seed);
      const Multigraph g = load_graph(spec, seed);
      const EnumerationBudget b{max_crossings, max_candidates, time_limit};
      const Variant v = parse_variant(variant);
      const Rule r = parse_rule(rule);
      const CrossingValue cv = exact_crossing_value(g, v, r, b, threads);
      Json j = to_json(cv);
      j["variant"] = to_string(v);
      j["rule"] = to_string(r);
      j["max_crossings"] = max_crossings;
      emit(j);
      if (!witness_path.empty() && cv.witness) write_file(witness_path, serialize_drawing(*cv.witness));
      std::cerr << to_string(v) << " (" << to_string(r) << ") " << (cv.exact ? "= " : ">= ") << cv.value << "\n";
      return kOk;
    }
    if (*search) {
      note_seed(seed);
      const SearchResult r = extremal_search(k, static_cast<int>(n), {budget, time_limit}, seed);
      Json j = to_json(r);
      j["seed"] = seed;
      emit(j);
      std::cerr << r.edges << " edges (mk_upper " << r.mk_upper << ", modd_upper " << r.modd_upper << ")\n";
      return kOk;
    }
    if (*generate) {
      note_seed(seed);
      const Multigraph g = load_graph(spec, seed);
      const RandomModel rm = model == "convex" ? RandomModel::Convex : RandomModel::PerturbedEven;
      const Drawing d = random_drawing(g, seed, rm, moves);
      std::cout << serialize_drawing(d, {seed, std::string("generate ") + to_string(rm), std::nullopt});
      std::cerr << d.crossing_node_count() << " crossings\n";
      return kOk;
    }
    if (*render) {
      const Drawing d = load_drawing(file);
      const Layout lay = layout_drawing(d);
      write_file(out_path, render_svg(d));
      emit({{"output", out_path}, {"routed", lay.fallback}});
      std::cerr << "wrote " << out_path << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::BudgetExceeded ? kBudget : kFailed;
  }
  return kUsage;
}
