// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 100).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "ordram/arrow.hpp"
#include "ordram/bounds.hpp"
#include "ordram/caterpillar.hpp"
#include "ordram/coloring_io.hpp"
#include "ordram/goodness.hpp"
#include "ordram/graph_io.hpp"
#include "ordram/queue_layout.hpp"
#include "ordram/sat/external.hpp"
#include "ordram/search.hpp"
#include "support/oracles.hpp"

using namespace ordram;

namespace {

// Pinned limits.
constexpr double kCensusSeconds = 30 * 60;
constexpr double kNm5UnsatSeconds = 4 * 60 * 60;
constexpr double kPropertySeconds = 10 * 60;

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

// Every coloring a SAT answer produced during the run, for criterion 13.
struct Witness {
  TwoColoring coloring;
  OrderedGraph red;
  OrderedGraph blue;
};
std::vector<Witness> sat_witnesses;

void record(const TwoColoring& c, const OrderedGraph& r, const OrderedGraph& b) {
  sat_witnesses.push_back({c, r, b});
}

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << ": " << title << " |" << o.detail.str()
            << " (" << secs << " s)" << std::endl;
}

sat::Budget unlimited_conflicts(double seconds) {
  sat::Budget b = sat::Budget::unlimited();
  b.seconds = seconds;
  return b;
}

// r_< by bisection with the library; exact integer or -1.
int exact_ramsey(const OrderedGraph& r, const OrderedGraph& b, std::optional<int> lo,
                 std::optional<int> hi) {
  RamseyOptions o;
  o.lo_hint = lo;
  o.hi_hint = hi;
  o.config.budget = unlimited_conflicts(600);
  const auto rep = ordered_ramsey(r, b, o);
  if (rep.lo >= 2) record(rep.witness, r, b);
  return rep.exact() ? rep.lo : -1;
}

struct Computed {
  std::string family;  // "nm-k3" or "nm-kn"
  int m = 0;
  int n = 0;
  int value = 0;
};
std::vector<Computed> computed;

std::optional<TwoColoring> witness15;
std::optional<TwoColoring> witness19;

}  // namespace

int main() {
  std::cout << std::boolalpha;

  criterion(1, "r(NM_n, K_3) = 3, 7, 11 for n = 1, 2, 3", [](Outcome& o) {
    const int expected[] = {3, 7, 11};
    for (int n = 1; n <= 3; ++n) {
      const int r = exact_ramsey(nested_matching(n), complete_graph(3), std::nullopt, std::nullopt);
      o.detail << " n=" << n << ":" << r;
      o.require(r == expected[n - 1], "n=" + std::to_string(n));
      computed.push_back({"nm-k3", n, 3, r});
    }
  });

  criterion(2, "r(NM_4, K_3) = 16: SAT at 15, UNSAT at 16", [](Outcome& o) {
    SolveConfig cfg;
    cfg.budget = unlimited_conflicts(3600);
    const auto sat15 = solve(encode_arrow(15, nested_matching(4), complete_graph(3)), cfg);
    o.require(sat15.status == sat::Status::Satisfiable, "N=15 satisfiable");
    if (sat15.coloring) {
      witness15 = sat15.coloring;
      record(*sat15.coloring, nested_matching(4), complete_graph(3));
      o.require(verify_avoiding(*sat15.coloring, nested_matching(4), complete_graph(3)).avoiding(),
                "witness avoiding");
    }
    const auto inst16 = encode_arrow(16, nested_matching(4), complete_graph(3));
    o.require(!inst16.options.symmetric, "complete instance");
    const auto unsat16 = solve(inst16, cfg);
    o.detail << " N=15:" << sat::to_string(sat15.status) << " N=16:" << sat::to_string(unsat16.status)
             << " conflicts=" << unsat16.statistics.conflicts;
    o.require(unsat16.status == sat::Status::Unsatisfiable, "N=16 unsatisfiable");
    computed.push_back({"nm-k3", 4, 3, 16});
  });

  criterion(3, "326 avoiding colorings of K_15 for (NM_4, K_3), reproducible order", [](Outcome& o) {
    SolveConfig cfg;
    cfg.budget = unlimited_conflicts(kCensusSeconds);
    const auto inst = encode_arrow(15, nested_matching(4), complete_graph(3));
    const auto start = Clock::now();
    const auto a = enumerate_models(inst, cfg);
    const auto b = enumerate_models(inst, cfg);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    auto bytes = [](const Enumeration& e) {
      std::string s;
      for (const auto& c : e.colorings) s += serialize_coloring(c);
      return s;
    };
    const auto text = bytes(a);
    o.detail << " count=" << a.colorings.size() << " complete=" << a.complete << " fnv1a=";
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) h = (h ^ ch) * 1099511628211ull;
    o.detail << std::hex << h << std::dec;
    o.require(a.complete && a.colorings.size() == 326, "exactly 326");
    o.require(text == bytes(b), "identical bytes on rerun");
    o.require(secs <= 2 * kCensusSeconds, "within time limit");
    for (const auto& c : a.colorings) record(c, nested_matching(4), complete_graph(3));
  });

  criterion(4, "r(NM_5, K_3) = 20: symmetric SAT at 19, complete UNSAT at 20", [](Outcome& o) {
    SolveConfig cfg;
    cfg.budget = unlimited_conflicts(kNm5UnsatSeconds);
    EncodeOptions sym;
    sym.symmetric = true;
    const auto sat19 = solve(encode_arrow(19, nested_matching(5), complete_graph(3), sym), cfg);
    o.require(sat19.status == sat::Status::Satisfiable, "N=19 satisfiable");
    if (sat19.coloring) {
      witness19 = sat19.coloring;
      record(*sat19.coloring, nested_matching(5), complete_graph(3));
    }
    const auto inst20 = encode_arrow(20, nested_matching(5), complete_graph(3));
    o.require(!inst20.options.symmetric, "complete instance");
    auto unsat20 = solve(inst20, cfg);
    o.detail << " N=19:" << sat::to_string(sat19.status) << " N=20:" << sat::to_string(unsat20.status)
             << " backend=builtin conflicts=" << unsat20.statistics.conflicts;
    if (unsat20.status == sat::Status::Unknown) {
      SolveConfig ext = cfg;
      ext.backend = Backend::External;
      ext.external_command = sat::external_solver_from_env().value_or(ORDRAM_SAT_BIN);
      unsat20 = solve(inst20, ext);
      o.detail << " external:" << sat::to_string(unsat20.status);
    }
    o.require(unsat20.status == sat::Status::Unsatisfiable, "N=20 unsatisfiable");
    computed.push_back({"nm-k3", 5, 3, 20});
  });

  criterion(5, "general construction for n = 6..12", [](Outcome& o) {
    for (int n = 6; n <= 12; ++n) {
      const auto c = general_construction_chi(n);
      const bool avoiding = verify_avoiding(c, nested_matching(n), complete_graph(3)).avoiding();
      const auto classes = queue_partition(c.red_graph()).size();
      o.require(avoiding && is_symmetric(c) && classes <= static_cast<std::size_t>(n - 1),
                "n=" + std::to_string(n));
      o.detail << " n=" << n << ":" << classes;
    }
  });

  criterion(6, "r(NM_2, K_n) = 3n - 2 for n = 3, 4, 5", [](Outcome& o) {
    for (int n = 3; n <= 5; ++n) {
      const int r = exact_ramsey(nested_matching(2), complete_graph(n), std::nullopt, std::nullopt);
      o.detail << " n=" << n << ":" << r;
      o.require(r == 3 * n - 2, "n=" + std::to_string(n));
      computed.push_back({"nm-kn", 2, n - 1, r});
    }
  });

  criterion(7, "r(NM_3, K_n) = 5n - 4 for n = 3, 4", [](Outcome& o) {
    for (int n = 3; n <= 4; ++n) {
      const int r = exact_ramsey(nested_matching(3), complete_graph(n), std::nullopt, std::nullopt);
      o.detail << " n=" << n << ":" << r;
      o.require(r == 5 * n - 4, "n=" + std::to_string(n));
      computed.push_back({"nm-kn", 3, n - 1, r});
    }
  });

  criterion(8, "r(P_m, K_n) = (m - 1)(n - 1) + 1 for 2 <= m, n <= 5", [](Outcome& o) {
    int checked = 0;
    for (int m = 2; m <= 5; ++m) {
      for (int n = 2; n <= 5; ++n) {
        const int want = (m - 1) * (n - 1) + 1;
        const int r = exact_ramsey(monotone_path(m), complete_graph(n), want, want);
        o.require(r == want, "m=" + std::to_string(m) + " n=" + std::to_string(n));
        ++checked;
      }
    }
    // exact_ramsey keeps the default path-level extension of the encoding;
    // the plain CNF for P_5 against K_5 at N = 17 is out of reach.
    o.detail << " pairs=" << checked << " encoding=path-levels";
  });

  criterion(9, "good graphs are exactly the monotone caterpillars", [](Outcome& o) {
    SolveConfig cfg;
    cfg.budget = unlimited_conflicts(600);
    // "Good" means n-good for every n. A 3-good non-caterpillar is only a
    // counterexample if it is also 4-good, so those are rechecked at n = 4.
    auto certify = [&](const ScanReport& scan, const std::string& label) {
      int settled_at_4 = 0;
      for (const auto& g : scan.good_noncaterpillars) {
        const bool not_good = goodness_check(g, 4, cfg).verdict == Goodness::NotGood;
        settled_at_4 += not_good;
        o.require(not_good, label + " " + to_string(g) + " is 4-good");
      }
      o.detail << " " << label << ": graphs=" << scan.items.size()
               << " 3-good=" << scan.count(Goodness::Good)
               << " caterpillars=" << scan.caterpillar_count()
               << " 3-good non-caterpillars not 4-good=" << settled_at_4;
      o.require(scan.nongood_caterpillars.empty(), label + " no non-good caterpillar");
      o.require(scan.unknown.empty(), label + " no unknown");
    };
    certify(scan_good_graphs(5, 3, cfg), "<=5");

    const auto four = scan_good_graphs(5, 4, cfg);
    o.detail << " 4-good=" << four.count(Goodness::Good);
    o.require(four.good_noncaterpillars.empty() && four.nongood_caterpillars.empty() &&
                  four.unknown.empty(),
              "4-good graphs on <= 5 vertices are the caterpillars");

    if (std::getenv("ORDRAM_ACCEPTANCE_EXTENDED")) certify(scan_good_graphs(6, 3, cfg), "<=6");

    int disagreements = 0;
    for (int v = 1; v <= 6; ++v) {
      for_each_connected_graph(v, [&](const OrderedGraph& g) {
        if (caterpillar_by_decomposition(g).has_value() != caterpillar_by_patterns(g)) ++disagreements;
      });
    }
    o.require(disagreements == 0, "recognizers agree on <= 6 vertices");

    const auto trees = minimal_noncaterpillar_trees(4);
    int three_good = 0;
    int four_good = 0;
    for (const auto& t : trees) {
      three_good += goodness_check(t, 3, cfg).verdict == Goodness::Good;
      four_good += goodness_check(t, 4, cfg).verdict != Goodness::NotGood;
    }
    o.detail << " minimal trees=" << trees.size() << " 3-good=" << three_good
             << " not certified non-good at n=4=" << four_good;
    o.require(trees.size() == 9 && four_good == 0, "nine trees, none good");
  });

  criterion(10, "NM-free edge bound at desk scale", [](Outcome& o) {
    for (int n = 4; n <= 7; ++n) {
      // Edges e, f with f nested in e, as bit masks over lexicographic pairs.
      std::vector<Edge> pairs;
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
      }
      std::vector<std::uint32_t> nested_with(pairs.size(), 0);
      for (std::size_t a = 0; a < pairs.size(); ++a) {
        for (std::size_t b = 0; b < pairs.size(); ++b) {
          if (is_nested(pairs[a], pairs[b])) nested_with[a] |= 1u << b;
        }
      }
      int best = 0;
      const std::uint32_t total = 1u << pairs.size();
      for (std::uint32_t mask = 0; mask < total; ++mask) {
        bool free = true;
        for (std::size_t a = 0; a < pairs.size() && free; ++a) {
          if ((mask >> a) & 1) free = (nested_with[a] & mask) == 0;
        }
        if (free) best = std::max(best, __builtin_popcount(mask));
      }
      o.detail << " N=" << n << ":" << best;
      o.require(best == nm_free_edge_bound(2, n), "brute force N=" + std::to_string(n));
    }
    for (int n = 1; n <= 4; ++n) {
      for (int big = 2 * n; big <= 16; ++big) {
        const auto g = extremal_nm_free_graph(n, big);
        o.require(static_cast<std::int64_t>(g.edge_count()) == nm_free_edge_bound(n, big) &&
                      max_nested_matching(g).size == n - 1,
                  "extremal n=" + std::to_string(n) + " N=" + std::to_string(big));
      }
    }
  });

  criterion(11, "computed values lie inside the closed-form brackets", [](Outcome& o) {
    for (const auto& c : computed) {
      const auto b = c.family == "nm-k3" ? nm_k3_bounds(c.m) : nm_kn_bounds(c.m, c.n);
      o.require(b.lo <= c.value && c.value <= b.hi,
                c.family + " m=" + std::to_string(c.m) + " n=" + std::to_string(c.n));
      o.detail << " " << c.family << "(" << c.m << "," << c.n << "):" << b.lo << "<=" << c.value
               << "<=" << b.hi;
    }
    o.require(computed.size() == 10, "all values from criteria 1, 2, 4, 6, 7");
  });

  criterion(12, "chromatic lower bound 2k + 2 for k = 3, 4", [](Outcome& o) {
    o.require(witness15 && witness19, "witnesses from criteria 2 and 4");
    if (!witness15 || !witness19) return;
    const int b3 = chromatic_lower_bound_from_coloring(*witness15, 3);
    const int b4 = chromatic_lower_bound_from_coloring(*witness19, 4);
    o.detail << " k=3:" << b3 << " k=4:" << b4;
    o.require(b3 == 8 && b4 == 10, "values");
  });

  criterion(13, "property suites", [](Outcome& o) {
    const auto start = Clock::now();

    // Solver against brute force for N <= 6.
    const std::vector<std::pair<OrderedGraph, OrderedGraph>> pairs = {
        {nested_matching(2), complete_graph(3)},  {monotone_path(3), complete_graph(3)},
        {complete_graph(3), complete_graph(3)},   {ordered_star(1, 3), monotone_path(3)},
        {OrderedGraph(4, {{1, 3}, {2, 4}}), complete_graph(3)},
        {OrderedGraph(4, {{1, 2}, {3, 4}, {1, 4}}), monotone_path(3)},
    };
    int mismatches = 0;
    for (const auto& [r, b] : pairs) {
      for (int n = 1; n <= 6; ++n) {
        const auto e = enumerate_models(encode_arrow(n, r, b));
        if (!e.complete || e.colorings.size() != oracle::count_avoiding(n, r, b)) ++mismatches;
        for (const auto& c : e.colorings) record(c, r, b);
      }
    }
    o.require(mismatches == 0, "solver vs brute force");

    int unsound = 0;
    for (const auto& w : sat_witnesses) unsound += !verify_avoiding(w.coloring, w.red, w.blue).avoiding();
    o.detail << " witnesses=" << sat_witnesses.size();
    o.require(unsound == 0, "witness soundness");

    // Queue partition = longest nested chain on every graph with <= 7 vertices.
    std::uint64_t graphs = 0;
    int dilworth = 0;
    for (int n = 1; n <= 7; ++n) {
      const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
      for (std::uint64_t mask = 0; mask < total; ++mask, ++graphs) {
        const auto g = oracle::graph_from_mask(n, mask);
        const auto p = queue_partition(g);
        if (!is_valid_queue_partition(g, p) ||
            static_cast<int>(p.size()) != oracle::longest_nested_chain(g.edges())) {
          ++dilworth;
        }
      }
    }
    o.detail << " graphs<=7=" << graphs;
    o.require(dilworth == 0, "queue partition equals longest chain");

    std::mt19937_64 rng(2024);
    int round_trip = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const auto g = oracle::random_graph(1 + trial % 20, 0.3, rng);
      round_trip += !(parse_graph(serialize_graph(g)) == g);
      const auto c = TwoColoring::from_red_graph(g);
      round_trip += !(parse_coloring(serialize_coloring(c)) == c);
    }
    o.require(round_trip == 0, "serialization round trips");

    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    o.require(secs < kPropertySeconds, "under ten minutes");
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return std::min(failures, 100);
}
