#include "spectra/census.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <thread>

#include "spectra/automorphisms.hpp"
#include "spectra/enumerate.hpp"
#include "spectra/error.hpp"
#include "spectra/graph6.hpp"

namespace spectra {
namespace {

struct GraphOutcome {
  int n = 0;
  bool connected = false;
  bool skipped = false;
  std::vector<CensusRecord> records;
};

using Chunk = std::vector<GraphOutcome>;

GraphOutcome analyze(const Graph& g, const CensusOptions& options) {
  GraphOutcome out;
  out.n = g.order();
  out.connected = is_connected(g);
  if (!out.connected) return out;
  if (g.order() < 2) {
    out.skipped = true;
    return out;
  }
  out.records = census_records(g, options.kinds, options.check);
  return out;
}

CharacterizationResult run_check(const Graph& g, MatrixKind kind, const CheckOptions& check) {
  switch (kind) {
    case MatrixKind::adjacency: return check_adjacency_distinct(g, check);
    case MatrixKind::laplacian: return check_laplacian_distinct(g, check);
    case MatrixKind::signless: return check_signless_laplacian_distinct(g, check);
    case MatrixKind::normalized: return check_normalized_laplacian_distinct(g, check);
    case MatrixKind::degree: break;
  }
  throw PreconditionError("census does not support the degree matrix");
}

CensusRecord checked_record(const Graph& g, MatrixKind kind, const CheckOptions& check) {
  const CharacterizationResult res = run_check(g, kind, check);
  CensusRecord r;
  r.kind = kind;
  r.k_exact = res.k_exact.value_or(res.k);
  r.k_float = res.k_float.value_or(res.k);
  r.max_residual_i = res.max_condition_i_residual();
  r.residual_ii = res.condition_ii_residual;
  r.identities_ok = res.passed;
  r.failure = res.failure;
  const auto& d = res.distinct_eigenvalues;
  for (std::size_t i = 1; i < d.size(); ++i) r.min_eigen_gap = std::min(r.min_eigen_gap, d[i - 1] - d[i]);
  return r;
}

void accumulate(CensusSummary& summary, const GraphOutcome& outcome, const RecordSink& sink) {
  auto& order = summary.orders[outcome.n];
  ++order.examined;
  if (outcome.connected) ++order.connected;
  if (outcome.skipped) ++order.skipped;
  for (const auto& rec : outcome.records) {
    auto& t = order.kinds[rec.kind];
    ++t.checked;
    if (rec.is_distinct) {
      ++t.distinct;
      t.min_gap_distinct = std::min(t.min_gap_distinct, rec.min_eigen_gap);
    }
    if (!rec.pipelines_agree()) ++t.disagreements;
    if (!rec.identities_ok) ++t.identity_failures;
    if (!rec.invariants_hold()) ++t.invariant_violations;
    if (sink) sink(rec);
  }
}

// Splits [0, count) into chunks processed by `jobs` workers; chunks are
// consumed strictly in index order on the calling thread. Workers stay at
// most a bounded window ahead of the consumer.
void run_sharded(std::uint64_t count, std::uint64_t chunk_size, int jobs,
                 const std::function<Chunk(std::uint64_t, std::uint64_t)>& work,
                 const std::function<void(Chunk&&)>& consume) {
  const std::uint64_t chunks = (count + chunk_size - 1) / chunk_size;
  auto bounds = [&](std::uint64_t c) {
    return std::make_pair(c * chunk_size, std::min(count, (c + 1) * chunk_size));
  };
  if (jobs <= 1 || chunks <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) {
      auto [b, e] = bounds(c);
      consume(work(b, e));
    }
    return;
  }

  const std::uint64_t window = 4 * static_cast<std::uint64_t>(jobs);
  std::mutex mu;
  std::condition_variable ready, space;
  std::deque<std::optional<Chunk>> pending;  // pending[i] holds chunk consumed + i
  std::uint64_t consumed = 0, next_chunk = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      std::uint64_t c;
      {
        std::unique_lock lock(mu);
        space.wait(lock, [&] { return failure || next_chunk >= chunks || next_chunk < consumed + window; });
        if (failure || next_chunk >= chunks) return;
        c = next_chunk++;
      }
      try {
        auto [b, e] = bounds(c);
        Chunk result = work(b, e);
        std::lock_guard lock(mu);
        const std::uint64_t slot = c - consumed;
        if (pending.size() <= slot) pending.resize(slot + 1);
        pending[slot] = std::move(result);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
      ready.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  try {
    while (consumed < chunks) {
      Chunk next;
      {
        std::unique_lock lock(mu);
        ready.wait(lock, [&] { return failure || (!pending.empty() && pending.front().has_value()); });
        if (failure) break;
        next = std::move(*pending.front());
        pending.pop_front();
        ++consumed;
      }
      space.notify_all();
      consume(std::move(next));
    }
  } catch (...) {
    std::lock_guard lock(mu);
    if (!failure) failure = std::current_exception();
  }
  space.notify_all();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

bool CensusRecord::invariants_hold() const {
  if (!is_distinct) return true;
  if (!diameter_bound_ok) return false;
  return !involution_ok.has_value() || *involution_ok;
}

std::uint64_t CensusSummary::total_examined() const {
  std::uint64_t total = 0;
  for (const auto& [n, o] : orders) total += o.examined;
  return total;
}

std::uint64_t CensusSummary::total_violations() const {
  std::uint64_t total = 0;
  for (const auto& [n, o] : orders)
    for (const auto& [kind, t] : o.kinds) total += t.disagreements + t.identity_failures + t.invariant_violations;
  return total;
}

std::vector<CensusRecord> census_records(const Graph& g, std::span<const MatrixKind> kinds,
                                         const CheckOptions& check) {
  CheckOptions descriptive = check;
  descriptive.strict = false;
  const std::string g6 = write_graph6(g);
  const int diam = diameter(g);
  std::vector<CensusRecord> out;
  for (MatrixKind kind : kinds) {
    CensusRecord r;
    try {
      r = checked_record(g, kind, descriptive);
    } catch (const NumericalError& e) {
      r = CensusRecord{};
      r.kind = kind;
      r.failure = std::string("numerical error: ") + e.what();
    }
    r.graph6 = g6;
    r.n = g.order();
    r.m = g.size();
    r.is_distinct = r.k_exact == r.n;
    r.diam = diam;
    r.diameter_bound_ok = diam <= r.k_exact - 1;
    if (kind == MatrixKind::adjacency && r.is_distinct && g.order() <= 10) {
      r.involution_ok = all_nonidentity_involutions(g);
    }
    out.push_back(std::move(r));
  }
  return out;
}

CensusSummary run_enumeration_census(int n, const CensusOptions& options, const RecordSink& sink,
                                     bool allow_large) {
  const auto start = std::chrono::steady_clock::now();
  // Validates n against the cap before any work starts.
  LabeledGraphEnumerator probe(n, false, allow_large);
  const std::uint64_t count = labeled_graph_count(n);
  CensusSummary summary;
  summary.orders[n];
  run_sharded(
      count, 1024, options.jobs,
      [&](std::uint64_t b, std::uint64_t e) {
        Chunk chunk;
        LabeledGraphEnumerator it(n, false, b, e, allow_large);
        while (auto item = it.next()) chunk.push_back(analyze(item->second, options));
        return chunk;
      },
      [&](Chunk&& chunk) {
        for (const auto& outcome : chunk) accumulate(summary, outcome, sink);
      });
  summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

CensusSummary run_corpus_census(std::span<const Graph> graphs, const CensusOptions& options, const RecordSink& sink) {
  const auto start = std::chrono::steady_clock::now();
  CensusSummary summary;
  run_sharded(
      graphs.size(), 64, options.jobs,
      [&](std::uint64_t b, std::uint64_t e) {
        Chunk chunk;
        for (auto i = b; i < e; ++i) chunk.push_back(analyze(graphs[i], options));
        return chunk;
      },
      [&](Chunk&& chunk) {
        for (const auto& outcome : chunk) accumulate(summary, outcome, sink);
      });
  summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::vector<Graph> read_graph6_corpus(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return graphs;
}

}  // namespace spectra
