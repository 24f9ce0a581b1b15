#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hfl/errors.hpp"

namespace hfl {

/// A point of the Z^l x Z multigrading lattice.
///
/// Alexander coordinates are stored doubled (value 1 means Alexander
/// grading 1/2) so that half-integer gradings stay exact. `maslov` is the
/// integer homological degree.
struct MultiGrading {
  std::vector<int> alexander2;
  int maslov = 0;

  friend auto operator<=>(const MultiGrading&, const MultiGrading&) = default;
};

/// Sum of the (un-doubled) Alexander coordinates, used by the conjugation
/// symmetry. Throws if the doubled sum is odd.
int delta_of(const std::vector<int>& alexander2);

enum class TableKind { Tilde, Hat, Predicted };

std::string to_string(TableKind kind);

/// A finitely supported map MultiGrading -> rank. Zero ranks are never
/// stored; negative ranks are rejected.
struct GradedDimTable {
  TableKind kind = TableKind::Hat;
  int components = 0;  // length of every alexander2 key
  std::map<MultiGrading, std::int64_t> entries;

  GradedDimTable() = default;
  GradedDimTable(TableKind kind, int components)
      : kind(kind), components(components) {}

  /// Adds `rank` at `g`, erasing the entry if the total reaches zero.
  void add(const MultiGrading& g, std::int64_t rank);

  std::int64_t rank_at(const MultiGrading& g) const;
  std::int64_t total_rank() const;

  /// Signed sum over all entries of (-1)^maslov * rank.
  std::int64_t euler_sum() const;

  /// Largest Maslov degree present, or nullopt-like behavior via throw on
  /// an empty table.
  int max_maslov() const;

  friend bool operator==(const GradedDimTable& a, const GradedDimTable& b) {
    return a.components == b.components && a.entries == b.entries;
  }
};

/// Coefficient map of the Poincare series q^maslov * prod_i t_i^(a_i/2).
/// Monomials are identified with MultiGrading points, so this is a lossless
/// re-indexing of a table.
using PoincareSeries = std::map<MultiGrading, std::int64_t>;

/// Table -> series (drops kind/component metadata, keeps every entry).
PoincareSeries poincare(const GradedDimTable& table);

/// Series -> table; rejects nonpositive coefficients.
GradedDimTable table_from_poincare(const PoincareSeries& series,
                                   TableKind kind, int components);

}  // namespace hfl
