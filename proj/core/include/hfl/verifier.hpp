#pragma once

#include <map>
#include <string>
#include <vector>

#include "hfl/predictions.hpp"
#include "hfl/table.hpp"

namespace hfl {

enum class PointStatus {
  Match,
  Mismatch,
  ConjectureMatch,
  ConjectureMismatch,
  UnpredictedSupport,
};

std::string to_string(PointStatus status);

struct PointReport {
  std::vector<int> alexander2;
  PointStatus status = PointStatus::Match;
  std::map<int, std::int64_t> computed;   // maslov -> rank
  std::map<int, std::int64_t> predicted;  // maslov -> rank
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string details;
};

struct VerificationReport {
  std::vector<PointReport> points;
  std::vector<CheckResult> checks;
  std::vector<int> recenter_offset;  // doubled shift applied, empty if none

  bool theorem_mismatch() const;
  bool conjecture_mismatch() const;
  bool all_passed() const;
};

/// Pointwise graded-rank comparison of a computed hat table against the
/// predicted table. Theorem-backed disagreements and computed support
/// outside the prediction are hard failures; junction disagreements are
/// reported as conjecture mismatches.
VerificationReport compare(const GradedDimTable& computed,
                           const PredictionTable& predicted);

/// Shifts all Alexander vectors by a global offset so the support's top
/// vertex lands at (n-1, ..., n-1) doubled. Returns the offset applied
/// (all zero when the table was already aligned).
std::vector<int> recenter(GradedDimTable& t);

struct OrbitViolation {
  MultiGrading grading;
  MultiGrading permuted;
  std::int64_t rank = 0;
  std::int64_t permuted_rank = 0;
};

/// Ranks must be constant on S_n orbits of the Alexander vector.
std::vector<OrbitViolation> orbit_check(const GradedDimTable& t);

/// Ranks must satisfy rank(v, m) = rank(-v, m - 2 delta(v)).
std::vector<OrbitViolation> conjugation_check(const GradedDimTable& t);

struct FiberReport {
  std::vector<int> projected;  // aligned coordinates in the smaller lattice
  std::int64_t fiber_euler = 0;
  std::int64_t target_euler = 0;
  std::int64_t fiber_rank = 0;
  std::int64_t target_rank = 0;

  bool euler_ok() const { return fiber_euler == target_euler; }
  bool rank_ok() const { return fiber_rank >= target_rank; }
};

struct ForgetfulReport {
  std::vector<FiberReport> fibers;
  bool passed() const;
};

/// Collapses Alexander coordinate `component` of t_n and checks each fiber
/// against t_prev tensored with a two-dimensional factor: graded Euler
/// characteristics must agree exactly, and the fiber's total rank must
/// dominate the target's. Both tables must be in the paper's absolute
/// normalization (top vertex at ((n-1)/2, ...)); alignment subtracts one
/// doubled unit per remaining coordinate.
ForgetfulReport forgetful_check(const GradedDimTable& t_n,
                                const GradedDimTable& t_prev, int component);

struct TotalsReport {
  std::int64_t tilde_total = 0;
  std::int64_t hat_total = 0;
  int expected_factor_log2 = 0;
  bool totals_ok = false;
  bool top_ok = false;

  bool passed() const { return totals_ok && top_ok; }
};

/// Sum of tilde ranks must equal the hat total times 2^(N-n), the hat
/// table's top Maslov degree must be 0, and that degree must be attained
/// exactly at the unique top support vertex.
TotalsReport totals_check(const GradedDimTable& tilde,
                          const GradedDimTable& hat, int grid_size, int n);

}  // namespace hfl
