#pragma once

#include <random>
#include <utility>
#include <vector>

#include "hfl/grid.hpp"
#include "hfl/table.hpp"

namespace hfltest {

using Row = std::pair<std::pair<std::vector<int>, int>, std::int64_t>;

inline hfl::GradedDimTable make_table(hfl::TableKind kind, int components,
                                      const std::vector<Row>& rows) {
  hfl::GradedDimTable t(kind, components);
  for (const auto& [grading, rank] : rows)
    t.add({grading.first, grading.second}, rank);
  return t;
}

/// Hat table of the positive Hopf link, frozen from the closed-form
/// description: four corners (+-1, +-1) doubled, rank 1, degrees
/// 0 / -1 / -1 / -2.
inline hfl::GradedDimTable hopf_hat() {
  return make_table(hfl::TableKind::Hat, 2,
                    {{{{1, 1}, 0}, 1},
                     {{{1, -1}, -1}, 1},
                     {{{-1, 1}, -1}, 1},
                     {{{-1, -1}, -2}, 1}});
}

/// Test-side tensor expansion: every entry spawns a copy shifted by
/// (maslov - 1, alexander2[i] - 2) per factor of component i. Written
/// independently of the deconvolution module it cross-checks.
inline hfl::GradedDimTable expand_tensor(const hfl::GradedDimTable& hat,
                                         const std::vector<int>& exponents) {
  hfl::GradedDimTable current = hat;
  current.kind = hfl::TableKind::Tilde;
  for (int component = 0; component < int(exponents.size()); ++component) {
    for (int rep = 0; rep < exponents[std::size_t(component)]; ++rep) {
      hfl::GradedDimTable next(hfl::TableKind::Tilde, current.components);
      for (const auto& [g, r] : current.entries) {
        next.add(g, r);
        hfl::MultiGrading shifted = g;
        shifted.maslov -= 1;
        shifted.alexander2[std::size_t(component)] -= 2;
        next.add(shifted, r);
      }
      current = next;
    }
  }
  return current;
}

/// The 2x2 unknot grid: O on the diagonal, X on the antidiagonal.
inline hfl::GridDiagram unknot_grid() {
  return hfl::GridDiagram(2, {0, 1}, {1, 0});
}

/// Random valid grid: O on the diagonal, X a uniform permutation with no
/// cell shared with an O.
inline hfl::GridDiagram random_grid(std::mt19937& rng, int size) {
  hfl::Perm o(std::size_t(size), 0);
  hfl::Perm x(std::size_t(size), 0);
  for (int i = 0; i < size; ++i) o[std::size_t(i)] = std::uint8_t(i);
  for (;;) {
    x = o;
    std::shuffle(x.begin(), x.end(), rng);
    bool clash = false;
    for (int i = 0; i < size; ++i) clash = clash || x[std::size_t(i)] == o[std::size_t(i)];
    if (!clash) break;
  }
  return hfl::GridDiagram(size, o, x);
}

}  // namespace hfltest
