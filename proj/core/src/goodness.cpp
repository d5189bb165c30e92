#include "ordram/goodness.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "ordram/arrow.hpp"
#include "ordram/caterpillar.hpp"

namespace ordram {

const char* to_string(Goodness g) {
  switch (g) {
    case Goodness::Good: return "good";
    case Goodness::NotGood: return "not-good";
    case Goodness::Unknown: return "unknown";
  }
  return "?";
}

GoodnessResult goodness_check(const OrderedGraph& g, int n, const SolveConfig& config) {
  if (n < 1) throw std::invalid_argument("goodness_check needs n >= 1");
  if (!is_connected(g)) throw std::invalid_argument("goodness is defined for connected graphs");
  GoodnessResult out;
  out.target = (g.vertex_count() - 1) * (n - 1) + 1;
  const auto inst = encode_arrow(out.target, g, complete_graph(n));
  auto v = solve(inst, config);
  out.statistics = v.statistics;
  switch (v.status) {
    case sat::Status::Unsatisfiable:
      out.verdict = Goodness::Good;
      break;
    case sat::Status::Satisfiable:
      out.verdict = Goodness::NotGood;
      out.witness = std::move(v.coloring);
      break;
    case sat::Status::Unknown:
      out.verdict = Goodness::Unknown;
      break;
  }
  return out;
}

std::size_t ScanReport::count(Goodness g) const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [g](const ScanItem& s) { return s.verdict == g; }));
}

std::size_t ScanReport::caterpillar_count() const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [](const ScanItem& s) { return s.caterpillar; }));
}

ScanReport scan_good_graphs(int max_vertices, int n, const SolveConfig& config, int jobs) {
  if (max_vertices < 1 || max_vertices > 6) {
    throw std::invalid_argument("scan_good_graphs supports 1..6 vertices");
  }
  ScanReport report;
  report.max_vertices = max_vertices;
  report.n = n;
  for (int v = 1; v <= max_vertices; ++v) {
    for_each_connected_graph(v, [&](const OrderedGraph& g) { report.items.push_back({g}); });
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < report.items.size() && !failed; i = next++) {
        auto& item = report.items[i];
        item.caterpillar = caterpillar_by_decomposition(item.graph).has_value();
        item.verdict = goodness_check(item.graph, n, config).verdict;
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  const int threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (const auto& item : report.items) {
    if (item.verdict == Goodness::Unknown) {
      report.unknown.push_back(item.graph);
    } else if ((item.verdict == Goodness::Good) != item.caterpillar) {
      (item.caterpillar ? report.nongood_caterpillars : report.good_noncaterpillars)
          .push_back(item.graph);
    }
  }
  return report;
}

}  // namespace ordram
