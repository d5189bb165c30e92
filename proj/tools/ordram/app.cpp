#include "app.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "ledger.hpp"
#include "ordram/arrow.hpp"
#include "ordram/bounds.hpp"
#include "ordram/caterpillar.hpp"
#include "ordram/coloring_io.hpp"
#include "ordram/extremal.hpp"
#include "ordram/goodness.hpp"
#include "ordram/graph_io.hpp"
#include "ordram/queue_layout.hpp"
#include "ordram/render.hpp"
#include "ordram/sat/dimacs.hpp"
#include "ordram/sat/external.hpp"
#include "ordram/search.hpp"
#include "pattern_spec.hpp"

#ifndef ORDRAM_VERSION
#define ORDRAM_VERSION "0.0.0"
#endif

namespace ordram::cli {

namespace {

// Thrown for bad input discovered after argument parsing; maps to kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverFlags {
  double seconds = 60.0;
  std::uint64_t conflicts = 10'000'000;
  std::string backend = "builtin";
  std::string solver;
  std::uint64_t seed = 0;

  void add_to(CLI::App* sub) {
    sub->add_option("--budget", seconds, "wall-clock seconds per instance")->capture_default_str();
    sub->add_option("--conflicts", conflicts, "conflicts per instance")->capture_default_str();
    sub->add_option("--backend", backend, "builtin or external")
        ->check(CLI::IsMember({"builtin", "external"}))
        ->capture_default_str();
    sub->add_option("--solver", solver,
                    std::string("external solver command (default: $") + sat::kExternalSolverEnv +
                        ")");
    sub->add_option("--seed", seed, "branching seed")->capture_default_str();
  }

  SolveConfig config() const {
    SolveConfig c;
    c.backend = backend == "external" ? Backend::External : Backend::Builtin;
    c.external_command = solver;
    c.budget.seconds = seconds;
    c.budget.conflicts = conflicts;
    c.seed = seed;
    return c;
  }

  std::string backend_id() const {
    if (backend != "external") return "builtin";
    const std::string cmd = solver.empty() ? sat::external_solver_from_env().value_or("") : solver;
    return "external:" + cmd;
  }
};

struct LedgerFlags {
  std::string path;
  std::string witness_dir;
  bool disabled = false;

  void add_to(CLI::App* sub) {
    sub->add_option("--ledger", path, "results ledger (default: $ORDRAM_LEDGER or ordram-ledger.tsv)");
    sub->add_option("--witness-dir", witness_dir, "where witness colorings are stored");
    sub->add_flag("--no-ledger", disabled, "do not record results");
  }

  std::filesystem::path ledger_path() const {
    if (!path.empty()) return path;
    if (const char* env = std::getenv("ORDRAM_LEDGER"); env && *env) return env;
    return "ordram-ledger.tsv";
  }

  std::filesystem::path witness_path(const std::string& red, const std::string& blue, int n) const {
    std::filesystem::path dir = witness_dir;
    if (dir.empty()) dir = ledger_path().parent_path() / "witnesses";
    std::string name = red + "__" + blue + "__N" + std::to_string(n) + ".col";
    for (char& c : name) {
      if (c == ':' || c == ',' || c == ';' || c == '/') c = '_';
    }
    return dir / name;
  }
};

std::string describe_file_error(const std::string& path, const ParseError& e) {
  return path + ": " + e.what();
}

TwoColoring load_coloring(const std::string& path) {
  try {
    return read_coloring_file(path);
  } catch (const ParseError& e) {
    throw UsageError(describe_file_error(path, e));
  }
}

OrderedGraph load_graph(const std::string& text) {
  try {
    return parse_graph_argument(text);
  } catch (const ParseError& e) {
    throw UsageError(describe_file_error(text, e));
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string describe_verdict(const Verdict& v) {
  if (v.avoiding()) return "avoiding";
  std::string s = v.status == Verdict::Status::RedWitness ? "red copy at" : "blue copy at";
  if (v.witness) s += " " + join_ints(v.witness->map);
  return s;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string describe_decomposition(const CaterpillarDecomposition& d) {
  std::string s;
  for (std::size_t i = 0; i < d.stars.size(); ++i) {
    if (i) s += " + ";
    s += "S_{" + std::to_string(d.stars[i].l) + "," + std::to_string(d.stars[i].r) + "}";
  }
  return s;
}

// key=value pairs separated by commas, possibly spread over several tokens.
std::map<std::string, int> parse_params(const std::vector<std::string>& tokens) {
  std::map<std::string, int> out;
  for (const auto& token : tokens) {
    std::stringstream ss(token);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("--params expects key=value, got '" + item + "'");
      try {
        std::size_t used = 0;
        const int v = std::stoi(item.substr(eq + 1), &used);
        if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
        out[item.substr(0, eq)] = v;
      } catch (const std::logic_error&) {
        throw UsageError("--params: '" + item + "' is not an integer assignment");
      }
    }
  }
  return out;
}

int require_param(const std::map<std::string, int>& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) throw UsageError("--params is missing " + key + "=<value>");
  return it->second;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
};

// Subcommands ------------------------------------------------------------

int cmd_gen(Context& ctx, const std::string& kind, const std::vector<std::string>& args,
            const std::string& output) {
  auto arg = [&](std::size_t i) {
    if (i >= args.size()) throw UsageError("gen " + kind + ": missing argument " + std::to_string(i + 1));
    try {
      return std::stoi(args[i]);
    } catch (const std::logic_error&) {
      throw UsageError("gen " + kind + ": '" + args[i] + "' is not an integer");
    }
  };
  auto expect_args = [&](std::size_t n) {
    if (args.size() != n) {
      throw UsageError("gen " + kind + " takes " + std::to_string(n) + " argument(s)");
    }
  };
  std::string text;
  if (kind == "nested-matching") {
    expect_args(1);
    text = serialize_graph(nested_matching(arg(0)));
  } else if (kind == "star") {
    expect_args(2);
    text = serialize_graph(ordered_star(arg(0), arg(1)));
  } else if (kind == "path") {
    expect_args(1);
    text = serialize_graph(monotone_path(arg(0)));
  } else if (kind == "complete") {
    expect_args(1);
    text = serialize_graph(complete_graph(arg(0)));
  } else if (kind == "join-expr" || kind == "pattern") {
    expect_args(1);
    text = serialize_graph(pattern_spec_parse(args[0]));
  } else if (kind == "block-coloring") {
    expect_args(2);
    text = serialize_coloring(block_coloring(arg(0), arg(1)));
  } else if (kind == "chi") {
    expect_args(1);
    text = serialize_coloring(general_construction_chi(arg(0)));
  } else {
    throw UsageError("gen: unknown construction '" + kind + "'");
  }
  write_output(output, text, ctx.out);
  return kOk;
}

int cmd_verify(Context& ctx, const std::string& path, const std::string& red,
               const std::string& blue) {
  const TwoColoring c = load_coloring(path);
  const Verdict v = verify_avoiding(c, load_graph(red), load_graph(blue));
  ctx.out << describe_verdict(v) << "\n";
  return v.avoiding() ? kOk : kForbiddenCopy;
}

int cmd_routes(Context& ctx, const std::string& input, const std::string& certificate,
               const std::string& svg, std::uint64_t steps) {
  std::optional<TwoColoring> coloring;
  OrderedGraph g;
  std::ifstream probe(input, std::ios::binary);
  std::string head;
  if (probe && std::getline(probe, head) && head == "ordered-coloring v1") {
    coloring = load_coloring(input);
    g = coloring->red_graph();
  } else {
    g = load_graph(input);
  }
  const int n = g.vertex_count();
  const auto chain = max_nested_matching(g);
  const auto partition = queue_partition(g);
  const auto routes = materialize_routes(partition, n, steps);
  ctx.out << "vertices: " << n << "\n"
          << "edges: " << g.edge_count() << "\n"
          << "longest nested chain: " << chain.size << "\n"
          << "queue classes: " << partition.size() << "\n";
  ctx.out << "routes: "
          << (routes.ok ? "ok" : "not found (" + routes.failure + ")") << "\n";
  const int free_of = chain.size + 1;
  if (n >= 2 * free_of) {
    const auto bound = nm_free_edge_bound(free_of, n);
    ctx.out << "NM_" << free_of << "-free edge bound: " << bound << " (slack "
            << bound - static_cast<std::int64_t>(g.edge_count()) << ")\n";
  }
  if (!certificate.empty()) {
    if (!coloring) throw UsageError("--certificate needs a coloring input");
    write_coloring_file(certificate, *coloring, routes.ok ? routes.routes : std::vector<Route>{});
  }
  if (!svg.empty()) {
    const TwoColoring c = coloring ? *coloring : TwoColoring::from_red_graph(g);
    write_output(svg, render_matrix(c, RenderStyle::Svg, routes.routes), ctx.out);
  }
  return kOk;
}

int cmd_ramsey(Context& ctx, const std::string& red_text, const std::string& blue_text,
               std::optional<int> lo, std::optional<int> hi, bool no_symmetry,
               bool no_path_levels, bool verbose, const SolverFlags& solver,
               const LedgerFlags& ledger_flags) {
  const OrderedGraph red = load_graph(red_text);
  const OrderedGraph blue = load_graph(blue_text);
  RamseyOptions options;
  options.lo_hint = lo;
  options.hi_hint = hi;
  options.config = solver.config();
  options.symmetric_first = !no_symmetry;
  options.path_levels = !no_path_levels;
  const SearchReport report = ordered_ramsey(red, blue, options);

  if (verbose) {
    for (const auto& v : report.verdicts) {
      ctx.err << "N=" << v.n << (v.symmetric ? " symmetric " : " ") << sat::to_string(v.status)
              << " conflicts=" << v.conflicts << " seconds=" << std::fixed << std::setprecision(3)
              << v.seconds << std::defaultfloat << "\n";
    }
  }

  if (!ledger_flags.disabled) {
    ResultsLedger ledger(ledger_flags.ledger_path());
    std::string witness = "-";
    const int wn = report.lo - 1;
    if (wn >= 1) {
      const auto path = ledger_flags.witness_path(report.red_id, report.blue_id, wn);
      std::filesystem::create_directories(path.parent_path());
      write_coloring_file(path, report.witness);
      witness = path.string();
    }
    bool witness_logged = false;
    for (const auto& v : report.verdicts) {
      LedgerRecord r;
      r.timestamp = utc_timestamp();
      r.red = report.red_id;
      r.blue = report.blue_id;
      r.n = v.n;
      r.verdict = std::string(sat::to_string(v.status)) + (v.symmetric ? "(symmetric)" : "");
      r.seconds = v.seconds;
      r.conflicts = v.conflicts;
      if (!witness_logged && v.n == wn && v.status == sat::Status::Satisfiable) {
        r.witness = witness;
        witness_logged = true;
      }
      r.version = ORDRAM_VERSION;
      r.backend = solver.backend_id();
      r.seed = solver.seed;
      ledger.append(r);
    }
  }

  if (report.exact()) {
    ctx.out << report.lo << "\n";
    return kOk;
  }
  if (report.hi) {
    ctx.out << report.lo << " ≤ r ≤ " << *report.hi << "\n";
  } else {
    ctx.out << "r ≥ " << report.lo << "\n";
  }
  if (!report.unknown.empty()) ctx.err << "undecided N: " << join_ints(report.unknown) << "\n";
  return kBudgetExhausted;
}

int cmd_enumerate(Context& ctx, const std::string& red_text, const std::string& blue_text, int n,
                  std::size_t limit, bool symmetric, const std::string& out_dir,
                  bool distances, const SolverFlags& solver) {
  EncodeOptions eo;
  eo.symmetric = symmetric;
  const auto inst = encode_arrow(n, load_graph(red_text), load_graph(blue_text), eo);
  const auto e = enumerate_models(inst, solver.config(), limit);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < e.colorings.size(); ++i) {
      std::ostringstream name;
      name << std::setw(6) << std::setfill('0') << i + 1 << ".col";
      write_coloring_file(std::filesystem::path(out_dir) / name.str(), e.colorings[i]);
    }
  }
  ctx.out << e.colorings.size() << "\n";
  if (distances) {
    std::map<int, std::int64_t> histogram;
    for (std::size_t i = 0; i < e.colorings.size(); ++i) {
      for (std::size_t j = i + 1; j < e.colorings.size(); ++j) {
        ++histogram[hamming_distance(e.colorings[i], e.colorings[j])];
      }
    }
    for (const auto& [d, pairs] : histogram) ctx.out << "distance " << d << ": " << pairs << "\n";
  }
  if (e.complete) return kOk;
  if (e.limit_reached) {
    ctx.err << "limit of " << limit << " models reached; enumeration incomplete\n";
    return kOk;
  }
  ctx.err << "budget exhausted; enumeration incomplete\n";
  return kBudgetExhausted;
}

int cmd_caterpillar(Context& ctx, const std::string& input) {
  const OrderedGraph g = load_graph(input);
  if (!is_connected(g)) {
    ctx.out << "not connected\n";
    return kOk;
  }
  const auto d = caterpillar_by_decomposition(g);
  const bool by_patterns = caterpillar_by_patterns(g);
  if (d) {
    ctx.out << "caterpillar: " << describe_decomposition(*d) << "\n";
  } else {
    ctx.out << "not a caterpillar\n";
  }
  if (d.has_value() != by_patterns) {
    ctx.err << "internal disagreement between recognizers\n";
    return kUsage;
  }
  return kOk;
}

int cmd_scan_good(Context& ctx, int max_v, int n, int jobs, const SolverFlags& solver) {
  const auto report = scan_good_graphs(max_v, n, solver.config(), jobs);
  ctx.out << "vertices\tgraphs\tgood\tcaterpillars\n";
  for (int v = 1; v <= max_v; ++v) {
    std::size_t graphs = 0, good = 0, cats = 0;
    for (const auto& item : report.items) {
      if (item.graph.vertex_count() != v) continue;
      ++graphs;
      good += item.verdict == Goodness::Good;
      cats += item.caterpillar;
    }
    ctx.out << v << "\t" << graphs << "\t" << good << "\t" << cats << "\n";
  }
  ctx.out << "good non-caterpillars: " << report.good_noncaterpillars.size() << "\n"
          << "non-good caterpillars: " << report.nongood_caterpillars.size() << "\n"
          << "unknown: " << report.unknown.size() << "\n";
  for (const auto& g : report.good_noncaterpillars) ctx.out << "  good non-caterpillar " << to_string(g) << "\n";
  for (const auto& g : report.nongood_caterpillars) ctx.out << "  non-good caterpillar " << to_string(g) << "\n";
  for (const auto& g : report.unknown) ctx.out << "  unknown " << to_string(g) << "\n";
  return report.unknown.empty() ? kOk : kBudgetExhausted;
}

int cmd_bounds(Context& ctx, const std::string& family, const std::vector<std::string>& params) {
  const auto p = parse_params(params);
  Bracket b;
  if (family == "nm-k3") {
    b = nm_k3_bounds(require_param(p, "n"));
  } else {
    b = nm_kn_bounds(require_param(p, "m"), require_param(p, "n"));
  }
  ctx.out << b.lo << " ≤ r ≤ " << b.hi << (b.fallback ? " (trivial cap)" : "") << "\n";
  return kOk;
}

int cmd_render(Context& ctx, const std::string& path, bool svg, bool routes,
               const std::string& output) {
  ColoringDocument doc;
  try {
    doc = read_coloring_document(path);
  } catch (const ParseError& e) {
    throw UsageError(describe_file_error(path, e));
  }
  if (routes && doc.routes.empty()) {
    const auto m = materialize_routes(queue_partition(doc.coloring.red_graph()),
                                      doc.coloring.vertex_count());
    doc.routes = m.routes;
  }
  write_output(output,
               render_matrix(doc.coloring, svg ? RenderStyle::Svg : RenderStyle::Ascii,
                             svg ? doc.routes : std::vector<Route>{}),
               ctx.out);
  return kOk;
}

int cmd_chromatic(Context& ctx, const std::string& path, int k) {
  const TwoColoring c = load_coloring(path);
  try {
    ctx.out << chromatic_lower_bound_from_coloring(c, k) << "\n";
  } catch (const NotAvoidingError& e) {
    ctx.err << e.what() << ": " << describe_verdict(e.verdict()) << "\n";
    return kForbiddenCopy;
  }
  return kOk;
}

int cmd_recover(Context& ctx, const std::string& target_name, const std::string& output,
                const SolverFlags& solver) {
  const auto target = parse_extremal_target(target_name);
  if (!target) throw UsageError("recover: unknown target '" + target_name + "'");
  const auto r = recover_extremal_colorings(*target, {}, solver.config());
  if (!r.complete) {
    ctx.err << "budget exhausted\n";
    return kBudgetExhausted;
  }
  if (r.inconsistent) {
    ctx.err << "no avoiding coloring satisfies the constraints\n";
    return kForbiddenCopy;
  }
  ctx.out << "colorings: " << r.colorings.size() << "\n"
          << "max red edges: " << r.max_red_edges << " (" << r.max_red_count << " colorings)\n";
  const TwoColoring* chosen = nullptr;
  for (const auto& c : r.colorings) {
    if (static_cast<int>(c.red_edge_count()) == r.max_red_edges) {
      chosen = &c;
      break;
    }
  }
  const auto partition = queue_partition(chosen->red_graph());
  const auto routes = materialize_routes(partition, chosen->vertex_count());
  ctx.out << "queue classes: " << partition.size() << "\n"
          << "routes: " << (routes.ok ? "ok" : "not found") << "\n";
  if (!output.empty()) write_coloring_file(output, *chosen, routes.routes);
  return kOk;
}

int cmd_dimacs(Context& ctx, const std::string& red, const std::string& blue, int n,
               bool symmetric, bool path_levels, const std::string& output) {
  EncodeOptions eo;
  eo.symmetric = symmetric;
  eo.path_levels = path_levels;
  const auto inst = encode_arrow(n, load_graph(red), load_graph(blue), eo);
  write_output(output, sat::write_dimacs(inst.to_cnf()), ctx.out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Ordered Ramsey numbers of nested matchings: constructions, SAT search and certificates"};
  app.name("ordram");
  app.set_version_flag("--version", ORDRAM_VERSION);
  app.require_subcommand(1);
  int code = kOk;
  std::function<int()> action;

  // gen
  std::string gen_kind, gen_out;
  std::vector<std::string> gen_args;
  auto* gen = app.add_subcommand("gen", "write a graph or coloring construction");
  gen->add_option("kind", gen_kind,
                  "nested-matching K | star L R | path M | complete N | join-expr SPEC | "
                  "block-coloring SIZE COUNT | chi N")
      ->required();
  gen->add_option("args", gen_args, "construction parameters");
  gen->add_option("-o,--output", gen_out, "output file (default: stdout)");
  gen->callback([&] { action = [&] { return cmd_gen(ctx, gen_kind, gen_args, gen_out); }; });

  // verify
  std::string ver_path, ver_red, ver_blue;
  auto* verify = app.add_subcommand("verify", "check a coloring for red and blue copies");
  verify->add_option("coloring", ver_path, "ordered-coloring file")->required();
  verify->add_option("--red", ver_red, "red pattern")->required();
  verify->add_option("--blue", ver_blue, "blue pattern")->required();
  verify->callback([&] { action = [&] { return cmd_verify(ctx, ver_path, ver_red, ver_blue); }; });

  // routes
  std::string rt_in, rt_cert, rt_svg;
  std::uint64_t rt_steps = kDefaultRouteStepBudget;
  auto* routes = app.add_subcommand("routes", "queue partition, routes and edge bound");
  routes->add_option("input", rt_in, "graph file, pattern or coloring file")->required();
  routes->add_option("--certificate", rt_cert, "write the coloring with its routes");
  routes->add_option("--svg", rt_svg, "write an SVG matrix with routes");
  routes->add_option("--steps", rt_steps, "route search step budget")->capture_default_str();
  routes->callback([&] { action = [&] { return cmd_routes(ctx, rt_in, rt_cert, rt_svg, rt_steps); }; });

  // ramsey
  std::string rm_red, rm_blue;
  std::optional<int> rm_lo, rm_hi;
  bool rm_nosym = false, rm_nolevels = false, rm_verbose = false;
  SolverFlags rm_solver;
  LedgerFlags rm_ledger;
  auto* ramsey = app.add_subcommand("ramsey", "compute r_<(red, blue)");
  ramsey->add_option("--red", rm_red, "red pattern")->required();
  ramsey->add_option("--blue", rm_blue, "blue pattern")->required();
  ramsey->add_option("--lo", rm_lo, "known lower bound");
  ramsey->add_option("--hi", rm_hi, "known upper bound");
  ramsey->add_flag("--no-symmetry", rm_nosym, "skip the symmetric witness search");
  ramsey->add_flag("--no-path-levels", rm_nolevels, "plain encoding for red monotone paths");
  ramsey->add_flag("-v,--verbose", rm_verbose, "print per-N verdicts to stderr");
  rm_solver.add_to(ramsey);
  rm_ledger.add_to(ramsey);
  ramsey->callback([&] {
    action = [&] {
      return cmd_ramsey(ctx, rm_red, rm_blue, rm_lo, rm_hi, rm_nosym, rm_nolevels, rm_verbose,
                        rm_solver, rm_ledger);
    };
  });

  // enumerate
  std::string en_red, en_blue, en_dir;
  int en_n = 0;
  std::size_t en_limit = 1'000'000;
  bool en_sym = false;
  bool en_dist = false;
  SolverFlags en_solver;
  auto* enumerate = app.add_subcommand("enumerate", "count all avoiding colorings of K_N");
  enumerate->add_option("--red", en_red, "red pattern")->required();
  enumerate->add_option("--blue", en_blue, "blue pattern")->required();
  enumerate->add_option("--n", en_n, "vertex count")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--limit", en_limit, "stop after this many models")->capture_default_str();
  enumerate->add_flag("--symmetric", en_sym, "only colorings invariant under reversal");
  enumerate->add_option("--out-dir", en_dir, "write each coloring to this directory");
  enumerate->add_flag("--distances", en_dist, "histogram of pairwise Hamming distances");
  en_solver.add_to(enumerate);
  enumerate->callback([&] {
    action = [&] {
      return cmd_enumerate(ctx, en_red, en_blue, en_n, en_limit, en_sym, en_dir, en_dist, en_solver);
    };
  });

  // caterpillar
  std::string cat_in;
  auto* cat = app.add_subcommand("caterpillar", "monotone caterpillar decomposition");
  cat->add_option("graph", cat_in, "graph file or pattern")->required();
  cat->callback([&] { action = [&] { return cmd_caterpillar(ctx, cat_in); }; });

  // scan-good
  int sg_max = 4, sg_n = 3, sg_jobs = 1;
  SolverFlags sg_solver;
  auto* scan = app.add_subcommand("scan-good", "n-goodness of all small connected graphs");
  scan->add_option("--max-v", sg_max, "largest vertex count (1..6)")
      ->check(CLI::Range(1, 6))
      ->capture_default_str();
  scan->add_option("--n", sg_n, "clique size")->check(CLI::PositiveNumber)->capture_default_str();
  scan->add_option("--jobs", sg_jobs, "worker threads")->check(CLI::PositiveNumber);
  sg_solver.add_to(scan);
  scan->callback([&] { action = [&] { return cmd_scan_good(ctx, sg_max, sg_n, sg_jobs, sg_solver); }; });

  // bounds
  std::string bd_family;
  std::vector<std::string> bd_params;
  auto* bounds = app.add_subcommand("bounds", "closed-form brackets for r_<(NM, K)");
  bounds->add_option("--family", bd_family, "nm-k3 (n) or nm-kn (m, n; blue K_{n+1})")
      ->required()
      ->check(CLI::IsMember({"nm-k3", "nm-kn"}));
  bounds->add_option("--params", bd_params, "e.g. n=6 or m=2,n=2")->required();
  bounds->callback([&] { action = [&] { return cmd_bounds(ctx, bd_family, bd_params); }; });

  // render
  std::string rd_path, rd_out;
  bool rd_svg = false, rd_routes = false;
  auto* render = app.add_subcommand("render", "draw a coloring as a matrix");
  render->add_option("coloring", rd_path, "ordered-coloring file")->required();
  render->add_flag("--svg", rd_svg, "SVG instead of ASCII");
  render->add_flag("--routes", rd_routes, "compute routes when the file has none (SVG only)");
  render->add_option("-o,--output", rd_out, "output file (default: stdout)");
  render->callback([&] { action = [&] { return cmd_render(ctx, rd_path, rd_svg, rd_routes, rd_out); }; });

  // chromatic-bound
  std::string cb_path;
  int cb_k = 0;
  auto* chrom = app.add_subcommand("chromatic-bound", "chromatic lower bound for k-queue graphs");
  chrom->add_option("coloring", cb_path, "coloring without red NM_{k+1} or blue K_3")->required();
  chrom->add_option("--k", cb_k, "queue number")->required()->check(CLI::PositiveNumber);
  chrom->callback([&] { action = [&] { return cmd_chromatic(ctx, cb_path, cb_k); }; });

  // recover
  std::string rc_target, rc_out;
  SolverFlags rc_solver;
  auto* recover = app.add_subcommand("recover", "re-derive the extremal colorings");
  recover->add_option("--target", rc_target, "nm4-15 or nm5-19")
      ->required()
      ->check(CLI::IsMember({"nm4-15", "nm5-19"}));
  recover->add_option("-o,--output", rc_out, "write a maximum-red coloring with its routes");
  rc_solver.add_to(recover);
  recover->callback([&] { action = [&] { return cmd_recover(ctx, rc_target, rc_out, rc_solver); }; });

  // dimacs
  std::string dm_red, dm_blue, dm_out;
  int dm_n = 0;
  bool dm_sym = false, dm_levels = false;
  auto* dimacs = app.add_subcommand("dimacs", "write the arrowing CNF");
  dimacs->add_option("--red", dm_red, "red pattern")->required();
  dimacs->add_option("--blue", dm_blue, "blue pattern")->required();
  dimacs->add_option("--n", dm_n, "vertex count")->required()->check(CLI::PositiveNumber);
  dimacs->add_flag("--symmetric", dm_sym, "identify each edge with its mirror");
  dimacs->add_flag("--path-levels", dm_levels, "add level variables for a red monotone path");
  dimacs->add_option("-o,--output", dm_out, "output file (default: stdout)");
  dimacs->callback([&] { action = [&] { return cmd_dimacs(ctx, dm_red, dm_blue, dm_n, dm_sym, dm_levels, dm_out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }
  if (!action) return kUsage;
  try {
    code = action();
  } catch (const UsageError& e) {
    err << "ordram: " << e.what() << "\n";
    return kUsage;
  } catch (const PatternSyntaxError& e) {
    err << "ordram: pattern: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "ordram: " << e.what() << "\n";
    return kUsage;
  } catch (const NotAvoidingError& e) {
    err << "ordram: " << e.what() << ": " << describe_verdict(e.verdict()) << "\n";
    return kForbiddenCopy;
  } catch (const std::invalid_argument& e) {
    err << "ordram: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "ordram: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}

}  // namespace ordram::cli
