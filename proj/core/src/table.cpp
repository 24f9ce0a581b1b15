#include "hfl/table.hpp"

#include <numeric>

namespace hfl {

int delta_of(const std::vector<int>& alexander2) {
  const int sum = std::accumulate(alexander2.begin(), alexander2.end(), 0);
  if (sum % 2 != 0)
    throw InvalidArgument("doubled Alexander coordinates sum to an odd value");
  return sum / 2;
}

std::string to_string(TableKind kind) {
  switch (kind) {
    case TableKind::Tilde: return "tilde";
    case TableKind::Hat: return "hat";
    case TableKind::Predicted: return "predicted";
  }
  return "unknown";
}

void GradedDimTable::add(const MultiGrading& g, std::int64_t rank) {
  if (rank == 0) return;
  if (int(g.alexander2.size()) != components)
    throw InvalidArgument("multigrading has wrong component count");
  auto [it, inserted] = entries.emplace(g, rank);
  if (!inserted) it->second += rank;
  if (it->second == 0) {
    entries.erase(it);
    return;
  }
  if (it->second < 0) throw InvalidArgument("negative rank in table");
}

std::int64_t GradedDimTable::rank_at(const MultiGrading& g) const {
  auto it = entries.find(g);
  return it == entries.end() ? 0 : it->second;
}

std::int64_t GradedDimTable::total_rank() const {
  std::int64_t total = 0;
  for (const auto& [g, r] : entries) total += r;
  return total;
}

std::int64_t GradedDimTable::euler_sum() const {
  std::int64_t sum = 0;
  for (const auto& [g, r] : entries)
    sum += (g.maslov % 2 == 0) ? r : -r;
  return sum;
}

int GradedDimTable::max_maslov() const {
  if (entries.empty()) throw InvalidArgument("max_maslov of an empty table");
  int best = entries.begin()->first.maslov;
  for (const auto& [g, r] : entries) best = std::max(best, g.maslov);
  return best;
}

PoincareSeries poincare(const GradedDimTable& table) {
  return table.entries;
}

GradedDimTable table_from_poincare(const PoincareSeries& series,
                                   TableKind kind, int components) {
  GradedDimTable t(kind, components);
  for (const auto& [g, c] : series) {
    if (c < 0)
      throw InvalidArgument("negative coefficient cannot form a rank table");
    t.add(g, c);
  }
  return t;
}

}  // namespace hfl
