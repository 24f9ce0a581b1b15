#include "hfl/homology.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "hfl/gf2.hpp"

namespace hfl {

namespace {

// Alexander key packed so that numeric order equals lexicographic order on
// the doubled vector (component 0 in the most significant byte).
using AlexKey = std::array<std::uint64_t, 2>;

AlexKey pack_key(std::span<const int> alexander2) {
  AlexKey key{0, 0};
  for (std::size_t c = 0; c < alexander2.size(); ++c) {
    const auto byte = std::uint64_t(std::uint8_t(alexander2[c] + 128));
    key[c / 8] |= byte << (8 * (7 - c % 8));
  }
  return key;
}

std::vector<int> unpack_key(const AlexKey& key, int components) {
  std::vector<int> v(components);
  for (int c = 0; c < components; ++c) {
    const auto byte = (key[c / 8] >> (8 * (7 - c % 8))) & 0xFF;
    v[c] = int(byte) - 128;
  }
  return v;
}

struct Entry {
  AlexKey key;
  std::int32_t maslov;
  std::uint64_t state;

  friend bool operator<(const Entry& a, const Entry& b) {
    if (a.key != b.key) return a.key < b.key;
    if (a.maslov != b.maslov) return a.maslov < b.maslov;
    return a.state < b.state;
  }
};

int resolve_workers(const ComputeOptions& options) {
  if (options.workers > 0) return options.workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

void check_budget(const GridDiagram& g, const ComputeOptions& options) {
  const std::uint64_t states = state_count(g);
  const std::uint64_t bytes = states * sizeof(Entry);
  const std::uint64_t budget = options.budget_mb * 1024 * 1024;
  if (bytes > budget)
    throw BudgetError(
        g.size, "enumerating " + std::to_string(states) + " states of the " +
                    std::to_string(g.size) + "x" + std::to_string(g.size) +
                    " grid needs ~" + std::to_string(bytes / (1024 * 1024)) +
                    " MB, over the " + std::to_string(options.budget_mb) +
                    " MB budget");
}

// Grades every state into a flat array, in enumeration order split across
// workers, then sorts by (alexander, maslov, state).
std::vector<Entry> graded_entries(const GridDiagram& g,
                                  const ComputeOptions& options) {
  check_budget(g, options);
  const std::uint64_t total = state_count(g);
  std::vector<Entry> entries(total);

  const int workers =
      int(std::min<std::uint64_t>(std::uint64_t(resolve_workers(options)),
                                  std::max<std::uint64_t>(total / 1024, 1)));
  const GradingContext context(g);

  auto fill = [&](std::uint64_t begin, std::uint64_t end) {
    Perm perm = nth_permutation(g.size, begin);
    std::vector<int> alex(g.components);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const GridState state = GridState::from_perm(perm);
      context.alexander2_into(state, alex);
      entries[idx] = Entry{pack_key(alex), context.maslov(state),
                           state.packed()};
      std::next_permutation(perm.begin(), perm.end());
    }
  };

  if (workers <= 1) {
    fill(0, total);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int t = 0; t < workers; ++t) {
      const std::uint64_t begin = total * std::uint64_t(t) / workers;
      const std::uint64_t end = total * std::uint64_t(t + 1) / workers;
      pool.emplace_back(fill, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  std::sort(entries.begin(), entries.end());
  return entries;
}

std::vector<Bucket> buckets_from_entries(const std::vector<Entry>& entries,
                                         int components) {
  std::vector<Bucket> buckets;
  std::size_t i = 0;
  while (i < entries.size()) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].key == entries[i].key) ++j;
    Bucket bucket;
    bucket.alexander2 = unpack_key(entries[i].key, components);
    std::size_t k = i;
    while (k < j) {
      std::size_t l = k;
      while (l < j && entries[l].maslov == entries[k].maslov) ++l;
      std::vector<GridState> states;
      states.reserve(l - k);
      for (std::size_t s = k; s < l; ++s)
        states.push_back(GridState::from_packed(entries[s].state));
      bucket.levels.emplace_back(entries[k].maslov, std::move(states));
      k = l;
    }
    buckets.push_back(std::move(bucket));
    i = j;
  }
  return buckets;
}

// dim - rank(d_in) - rank(d_out) per maslov level of one bucket.
std::vector<std::pair<int, std::int64_t>> bucket_homology(
    const GridDiagram& g, const RectTable& table, const Bucket& bucket) {
  const int levels = int(bucket.levels.size());
  // boundary_rank[li]: rank of d from level li down to maslov-1.
  std::vector<std::size_t> boundary_rank(levels, 0);
  for (int li = 0; li < levels; ++li) {
    const auto& [m, sources] = bucket.levels[li];
    if (li == 0) continue;  // nothing below the bottom level
    const auto& [m_below, targets] = bucket.levels[li - 1];
    if (m_below != m - 1) continue;  // maslov gap: zero map
    Gf2Matrix matrix(sources.size(), targets.size());
    for (std::size_t r = 0; r < sources.size(); ++r) {
      for_each_empty_rectangle(
          g, table, sources[r],
          [&](const GridState& y, const Rectangle&) {
            const auto it = std::lower_bound(targets.begin(), targets.end(),
                                             y);
            if (it == targets.end() || *it != y)
              throw std::logic_error(
                  "empty rectangle left its Alexander bucket or did not "
                  "drop Maslov by one");
            matrix.flip(r, std::size_t(it - targets.begin()));
          });
    }
    boundary_rank[li] = matrix.rank_destructive();
  }

  std::vector<std::pair<int, std::int64_t>> ranks;
  for (int li = 0; li < levels; ++li) {
    const auto dim = std::int64_t(bucket.levels[li].second.size());
    const auto incoming =
        li + 1 < levels ? std::int64_t(boundary_rank[li + 1]) : 0;
    const auto outgoing = std::int64_t(boundary_rank[li]);
    const std::int64_t h = dim - incoming - outgoing;
    assert(h >= 0);
    if (h != 0) ranks.emplace_back(bucket.levels[li].first, h);
  }
  return ranks;
}

}  // namespace

std::size_t Bucket::state_total() const {
  std::size_t total = 0;
  for (const auto& [m, states] : levels) total += states.size();
  return total;
}

std::vector<Bucket> build_buckets(const GridDiagram& g,
                                  const ComputeOptions& options) {
  return buckets_from_entries(graded_entries(g, options), g.components);
}

GradedDimTable tilde_homology(const GridDiagram& g,
                              const ComputeOptions& options) {
  const std::vector<Bucket> buckets = build_buckets(g, options);
  const RectTable table(g);

  std::vector<std::vector<std::pair<int, std::int64_t>>> results(
      buckets.size());
  const int workers =
      std::min<int>(resolve_workers(options), int(buckets.size()));

  if (workers <= 1) {
    for (std::size_t b = 0; b < buckets.size(); ++b)
      results[b] = bucket_homology(g, table, buckets[b]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      try {
        for (;;) {
          const std::size_t b = next.fetch_add(1);
          if (b >= buckets.size()) return;
          results[b] = bucket_homology(g, table, buckets[b]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  GradedDimTable out(TableKind::Tilde, g.components);
  for (std::size_t b = 0; b < buckets.size(); ++b)
    for (const auto& [m, rank] : results[b])
      out.add(MultiGrading{buckets[b].alexander2, m}, rank);
  return out;
}

bool differential_squares_to_zero(const GridDiagram& g) {
  const RectTable table(g);
  std::map<std::uint64_t, int> first, second;
  for (const GridState x : enumerate_states(g)) {
    first.clear();
    second.clear();
    for_each_empty_rectangle(g, table, x,
                             [&](const GridState& y, const Rectangle&) {
                               first[y.packed()] ^= 1;
                             });
    for (const auto& [packed, parity] : first) {
      if (!parity) continue;
      for_each_empty_rectangle(g, table, GridState::from_packed(packed),
                               [&](const GridState& z, const Rectangle&) {
                                 second[z.packed()] ^= 1;
                               });
    }
    for (const auto& [packed, parity] : second)
      if (parity) return false;
  }
  return true;
}

}  // namespace hfl
