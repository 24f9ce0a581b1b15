#include "hfl/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hfl {

namespace {

// Per-point view: alexander2 -> (maslov -> rank).
std::map<std::vector<int>, std::map<int, std::int64_t>> by_point(
    const GradedDimTable& t) {
  std::map<std::vector<int>, std::map<int, std::int64_t>> out;
  for (const auto& [g, r] : t.entries) out[g.alexander2][g.maslov] = r;
  return out;
}

}  // namespace

std::string to_string(PointStatus status) {
  switch (status) {
    case PointStatus::Match: return "match";
    case PointStatus::Mismatch: return "mismatch";
    case PointStatus::ConjectureMatch: return "conjecture-match";
    case PointStatus::ConjectureMismatch: return "conjecture-mismatch";
    case PointStatus::UnpredictedSupport: return "unpredicted-support";
  }
  return "unknown";
}

bool VerificationReport::theorem_mismatch() const {
  for (const auto& p : points)
    if (p.status == PointStatus::Mismatch ||
        p.status == PointStatus::UnpredictedSupport)
      return true;
  for (const auto& c : checks)
    if (!c.passed) return true;
  return false;
}

bool VerificationReport::conjecture_mismatch() const {
  for (const auto& p : points)
    if (p.status == PointStatus::ConjectureMismatch) return true;
  return false;
}

bool VerificationReport::all_passed() const {
  return !theorem_mismatch() && !conjecture_mismatch();
}

VerificationReport compare(const GradedDimTable& computed,
                           const PredictionTable& predicted) {
  if (computed.components != predicted.table.components)
    throw InvalidArgument("compare: tables have different component counts");

  const auto computed_points = by_point(computed);
  const auto predicted_points = by_point(predicted.table);

  // A lattice point is conjectural when any of its entries is.
  auto is_conjectural = [&](const std::vector<int>& v) {
    for (const auto& [g, prov] : predicted.provenance)
      if (g.alexander2 == v && prov == Provenance::Conjecture) return true;
    return false;
  };

  VerificationReport report;
  for (const auto& [v, predicted_ranks] : predicted_points) {
    PointReport p;
    p.alexander2 = v;
    p.predicted = predicted_ranks;
    const auto it = computed_points.find(v);
    if (it != computed_points.end()) p.computed = it->second;
    const bool match = p.computed == p.predicted;
    const bool conjectural = is_conjectural(v);
    p.status = conjectural
                   ? (match ? PointStatus::ConjectureMatch
                            : PointStatus::ConjectureMismatch)
                   : (match ? PointStatus::Match : PointStatus::Mismatch);
    report.points.push_back(std::move(p));
  }
  for (const auto& [v, computed_ranks] : computed_points) {
    if (predicted_points.count(v)) continue;
    PointReport p;
    p.alexander2 = v;
    p.computed = computed_ranks;
    p.status = PointStatus::UnpredictedSupport;
    report.points.push_back(std::move(p));
  }
  return report;
}

std::vector<int> recenter(GradedDimTable& t) {
  if (t.entries.empty() || t.components == 0)
    return std::vector<int>(std::size_t(std::max(t.components, 0)), 0);

  // Top vertex: unique entry maximizing the coordinate sum.
  const std::vector<int>* top = nullptr;
  int best = 0;
  bool unique = true;
  for (const auto& [g, r] : t.entries) {
    const int sum =
        std::accumulate(g.alexander2.begin(), g.alexander2.end(), 0);
    if (top == nullptr || sum > best) {
      top = &g.alexander2;
      best = sum;
      unique = true;
    } else if (sum == best && g.alexander2 != *top) {
      unique = false;
    }
  }
  if (!unique)
    throw InvalidArgument("recenter: top support vertex is not unique");

  const int n = t.components;
  std::vector<int> offset(std::size_t(n), 0);
  for (int i = 0; i < n; ++i)
    offset[std::size_t(i)] = (n - 1) - (*top)[std::size_t(i)];
  if (std::all_of(offset.begin(), offset.end(),
                  [](int v) { return v == 0; }))
    return offset;

  GradedDimTable shifted(t.kind, n);
  for (const auto& [g, r] : t.entries) {
    MultiGrading moved = g;
    for (int i = 0; i < n; ++i)
      moved.alexander2[std::size_t(i)] += offset[std::size_t(i)];
    shifted.add(moved, r);
  }
  t = std::move(shifted);
  return offset;
}

std::vector<OrbitViolation> orbit_check(const GradedDimTable& t) {
  // Every entry is compared against its entire orbit, so points missing
  // where a sibling is present get reported too.
  std::vector<OrbitViolation> violations;
  for (const auto& [g, r] : t.entries) {
    MultiGrading image = g;
    std::sort(image.alexander2.begin(), image.alexander2.end());
    do {
      const std::int64_t image_rank = t.rank_at(image);
      if (image_rank != r) violations.push_back({g, image, r, image_rank});
    } while (std::next_permutation(image.alexander2.begin(),
                                   image.alexander2.end()));
  }
  return violations;
}

std::vector<OrbitViolation> conjugation_check(const GradedDimTable& t) {
  std::vector<OrbitViolation> violations;
  for (const auto& [g, r] : t.entries) {
    MultiGrading image;
    image.alexander2.reserve(g.alexander2.size());
    for (int v : g.alexander2) image.alexander2.push_back(-v);
    image.maslov = g.maslov - 2 * delta_of(g.alexander2);
    const std::int64_t image_rank = t.rank_at(image);
    if (image_rank != r) violations.push_back({g, image, r, image_rank});
  }
  return violations;
}

bool ForgetfulReport::passed() const {
  for (const auto& f : fibers)
    if (!f.euler_ok() || !f.rank_ok()) return false;
  return true;
}

ForgetfulReport forgetful_check(const GradedDimTable& t_n,
                                const GradedDimTable& t_prev, int component) {
  if (t_n.components != t_prev.components + 1)
    throw InvalidArgument(
        "forgetful_check: tables must differ by exactly one component");
  if (component < 0 || component >= t_n.components)
    throw InvalidArgument("forgetful_check: component index out of range");

  // Project, dropping `component` and re-aligning the top vertices: the
  // (n-1)-component lattice sits one doubled unit lower per coordinate.
  auto project = [&](const std::vector<int>& v) {
    std::vector<int> out;
    out.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (int(i) != component) out.push_back(v[i] - 1);
    return out;
  };

  struct FiberData {
    std::int64_t euler = 0;
    std::int64_t rank = 0;
  };
  std::map<std::vector<int>, FiberData> fibers;
  for (const auto& [g, r] : t_n.entries) {
    FiberData& f = fibers[project(g.alexander2)];
    f.euler += (g.maslov % 2 == 0) ? r : -r;
    f.rank += r;
  }

  // Target per projected point: t_prev tensored with F_0 + F_-1.
  std::map<std::vector<int>, FiberData> targets;
  for (const auto& [g, r] : t_prev.entries) {
    FiberData& f = targets[g.alexander2];
    const std::int64_t at_m = (g.maslov % 2 == 0) ? r : -r;
    f.euler += at_m;  // factor summand in degree 0
    f.euler -= at_m;  // factor summand one degree lower
    f.rank += 2 * r;
  }

  ForgetfulReport report;
  std::set<std::vector<int>> keys;
  for (const auto& [v, f] : fibers) keys.insert(v);
  for (const auto& [v, f] : targets) keys.insert(v);
  for (const auto& v : keys) {
    FiberReport fr;
    fr.projected = v;
    if (auto it = fibers.find(v); it != fibers.end()) {
      fr.fiber_euler = it->second.euler;
      fr.fiber_rank = it->second.rank;
    }
    if (auto it = targets.find(v); it != targets.end()) {
      fr.target_euler = it->second.euler;
      fr.target_rank = it->second.rank;
    }
    report.fibers.push_back(std::move(fr));
  }
  return report;
}

TotalsReport totals_check(const GradedDimTable& tilde,
                          const GradedDimTable& hat, int grid_size, int n) {
  TotalsReport report;
  report.tilde_total = tilde.total_rank();
  report.hat_total = hat.total_rank();
  report.expected_factor_log2 = grid_size - n;
  report.totals_ok =
      report.expected_factor_log2 >= 0 &&
      report.tilde_total ==
          report.hat_total * (std::int64_t(1) << report.expected_factor_log2);

  report.top_ok = false;
  if (!hat.entries.empty() && hat.max_maslov() == 0) {
    const std::vector<int> top(std::size_t(n), n - 1);
    bool only_at_top = true;
    for (const auto& [g, r] : hat.entries)
      if (g.maslov == 0 && g.alexander2 != top) only_at_top = false;
    report.top_ok = only_at_top && hat.rank_at({top, 0}) > 0;
  }
  return report;
}

}  // namespace hfl
