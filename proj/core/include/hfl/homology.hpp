#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hfl/grid.hpp"
#include "hfl/table.hpp"

namespace hfl {

struct ComputeOptions {
  int workers = 0;              // 0 -> hardware concurrency
  std::uint64_t budget_mb = 512;  // full-enumeration memory budget
};

/// All states sharing one Alexander multigrading, grouped by Maslov degree.
/// The tilde differential preserves the Alexander vector exactly, so each
/// bucket is a chain complex of its own.
struct Bucket {
  std::vector<int> alexander2;
  /// (maslov, states) groups in ascending maslov order; states sorted by
  /// packed encoding.
  std::vector<std::pair<int, std::vector<GridState>>> levels;

  std::size_t state_total() const;
};

/// Streams the N! states once, grading each, and groups them by Alexander
/// vector. Buckets are returned in lexicographic order of alexander2.
/// Throws BudgetError if the enumeration would exceed options.budget_mb.
std::vector<Bucket> build_buckets(const GridDiagram& g,
                                  const ComputeOptions& options = {});

/// Homology of the fully blocked (tilde) grid complex over GF(2): boundary
/// matrices are built per bucket from empty rectangles and ranks extracted
/// by Gaussian elimination, with buckets distributed over a worker pool.
GradedDimTable tilde_homology(const GridDiagram& g,
                              const ComputeOptions& options = {});

/// Exhaustively checks d(d(x)) = 0 over GF(2) for every state of g.
bool differential_squares_to_zero(const GridDiagram& g);

}  // namespace hfl
