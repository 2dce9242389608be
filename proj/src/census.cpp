#include "bicirc/census.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

#include "bicirc/aut.hpp"
#include "bicirc/blocks.hpp"
#include "bicirc/errors.hpp"

namespace bicirc {
namespace {

struct Slice {
  int n = 0;
  int b = 0;
};

struct SliceOutput {
  std::uint64_t canonical = 0;
  std::uint64_t connected = 0;
  std::uint64_t prune_survivors = 0;
  std::uint64_t et_symbols = 0;
  std::vector<CensusRecord> rows;  // edge-transitive and undecided rows only
};

void scan_slice(const Slice& slice, const CensusJob& job, SliceOutput& out) {
  for (const BicirculantSymbol& sym :
       enumerate_symbols_slice(slice.n, job.valence, slice.b)) {
    ++out.canonical;
    BuiltBicirculant built = build_bicirculant(sym);
    bool conn = is_connected(built.graph);
    out.connected += conn;
    if (job.connected_only && !conn) continue;
    if (!equal_edge_class_triangles(sym, built.graph)) continue;
    ++out.prune_survivors;
    CensusRecord rec;
    rec.symbol = sym;
    rec.order = 2 * slice.n;
    rec.connected = conn;
    try {
      Group aut = automorphism_group(built.graph, GroupOptions{job.element_cap});
      if (!is_edge_transitive(built.graph, aut)) continue;
      ++out.et_symbols;
      rec.edge_transitive = Outcome::yes;
      rec.vertex_transitive = is_vertex_transitive(built.graph, aut);
      rec.arc_transitive = is_arc_transitive(built.graph, aut);
      rec.primitive = rec.vertex_transitive && is_primitive(aut);
      rec.aut_order = aut.order_big();
    } catch (const CapExceededError& e) {
      rec.edge_transitive = Outcome::undecided;
      rec.note = std::string("element cap: ") + e.what();
    }
    out.rows.push_back(std::move(rec));
  }
}

}  // namespace

void validate_job(const CensusJob& job) {
  if (job.valence < 3)
    throw std::invalid_argument("census valence must be at least 3");
  if (job.max_order < 2 * job.valence + 2)
    throw std::invalid_argument(
        "census order cap is below the smallest plausible order");
  if (job.jobs < 1)
    throw std::invalid_argument("census needs at least one worker");
}

bool equal_edge_class_triangles(const BicirculantSymbol& sym, const Graph& g) {
  int n = sym.n;
  int expect = common_neighbors(g, 0, 1);
  for (int s : sym.spokes)
    if (common_neighbors(g, 0, n + s) != expect) return false;
  return common_neighbors(g, n, n + sym.b) == expect;
}

bool CensusResult::complete() const {
  for (const CensusRecord& r : records)
    if (r.edge_transitive == Outcome::undecided) return false;
  return true;
}

int CensusResult::class_count() const {
  int count = 0;
  for (const CensusRecord& r : records)
    count += r.edge_transitive == Outcome::yes;
  return count;
}

CensusResult run_census(const CensusJob& job, std::ostream* log) {
  validate_job(job);
  std::vector<int> ns;
  std::vector<Slice> slices;
  for (int n = 3; 2 * n <= job.max_order; ++n) {
    if (job.twice_odd_only && n % 2 == 0) continue;
    if (job.valence - 2 > n) continue;
    ns.push_back(n);
    for (int b = 1; 2 * b + 1 <= n; ++b) slices.push_back({n, b});
  }

  std::vector<SliceOutput> outputs(slices.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= slices.size()) return;
      scan_slice(slices[i], job, outputs[i]);
      if (log) {
        std::lock_guard<std::mutex> lock(log_mutex);
        *log << "slice n=" << slices[i].n << " b=" << slices[i].b
             << " canonical=" << outputs[i].canonical
             << " survivors=" << outputs[i].prune_survivors
             << " edge-transitive=" << outputs[i].et_symbols << '\n';
      }
    }
  };
  int workers = std::min<std::size_t>(job.jobs, slices.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  CensusResult result;
  result.job = job;
  for (int n : ns) result.per_n.push_back(CensusPerN{n});
  auto per_n_of = [&](int n) -> CensusPerN& {
    auto it = std::lower_bound(ns.begin(), ns.end(), n);
    return result.per_n[static_cast<std::size_t>(it - ns.begin())];
  };

  std::vector<CensusRecord> rows;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    CensusPerN& pn = per_n_of(slices[i].n);
    pn.canonical += outputs[i].canonical;
    pn.connected += outputs[i].connected;
    pn.prune_survivors += outputs[i].prune_survivors;
    pn.et_symbols += outputs[i].et_symbols;
    result.scanned += outputs[i].canonical;
    for (CensusRecord& r : outputs[i].rows) rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [](const CensusRecord& a,
                                         const CensusRecord& b) {
    return std::tie(a.order, a.symbol) < std::tie(b.order, b.symbol);
  });

  // Isomorphism dedup among the decided edge-transitive rows: the least
  // symbol of each class is kept as its representative.
  struct ClassRep {
    int order;
    Graph graph;
  };
  std::vector<ClassRep> reps;
  for (CensusRecord& r : rows) {
    if (r.edge_transitive == Outcome::undecided) {
      per_n_of(r.order / 2).undecided += 1;
      result.records.push_back(std::move(r));
      continue;
    }
    Graph g = build_bicirculant(r.symbol).graph;
    bool duplicate = false;
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (reps[c].order == r.order && is_isomorphic(reps[c].graph, g)) {
        duplicate = true;
        break;
      }
    if (duplicate) continue;
    r.iso_class = static_cast<int>(reps.size());
    per_n_of(r.order / 2).et_classes += 1;
    reps.push_back(ClassRep{r.order, std::move(g)});
    result.records.push_back(std::move(r));
  }

  if (log) {
    for (const CensusPerN& pn : result.per_n)
      *log << "n=" << pn.n << " canonical=" << pn.canonical
           << " connected=" << pn.connected
           << " survivors=" << pn.prune_survivors
           << " edge-transitive=" << pn.et_symbols
           << " classes=" << pn.et_classes << " undecided=" << pn.undecided
           << '\n';
  }
  return result;
}

}  // namespace bicirc
