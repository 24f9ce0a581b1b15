#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hfl/table.hpp"

namespace hfl {

/// Largest n for which binomials are guaranteed exact in 64-bit arithmetic.
inline constexpr int kBinomialCap = 64;

/// C(m, k), exact; zero for k < 0 or k > m. Throws once intermediate
/// products could not be certified exact (m >= kBinomialCap).
std::int64_t binomial(int m, int k);

enum class PointClass {
  EndpointTop,
  EndpointBottom,
  Interior,
  Junction,
  OutsideSupport,
};

/// A lattice point of the Alexander grading lattice for T(n,n), classified
/// against the string-of-hypercubes support picture: slice s of cube c has
/// n-s+1 doubled coordinates equal to n-2c+1 and s-1 equal to n-2c-1;
/// junction C is the constant doubled vector (n-1-2C, ..., n-1-2C).
struct LatticePoint {
  std::vector<int> alexander2;
  PointClass cls = PointClass::OutsideSupport;
  int cube = 0;      // c, for Interior (1 <= c <= n-1)
  int slice = 0;     // s, for Interior (2 <= s <= n)
  int junction = 0;  // C, for Junction (1 <= C <= n-2)
};

enum class Provenance { Theorem, Conjecture };

/// Predicted hat table plus per-entry provenance. Conjectural entries occur
/// only at junction vertices.
struct PredictionTable {
  GradedDimTable table{TableKind::Predicted, 0};
  std::map<MultiGrading, Provenance> provenance;
};

/// Doubled Alexander vectors of all vertices of the n-1 unit hypercubes
/// centered at (-n/2+k, ..., -n/2+k), k = 1..n-1. Adjacent cubes share
/// exactly one vertex.
std::set<std::vector<int>> support(int n);

/// Classifies a doubled vector of length n. Throws on wrong length or
/// inconsistent coordinate parity; off-string points come back as
/// OutsideSupport.
LatticePoint classify(int n, const std::vector<int>& alexander2);

/// Interior slice: rank C(n-2, c-1) in the single degree -c^2 - s + 2.
std::pair<std::int64_t, int> interior_prediction(int n, int c, int s);

enum class Endpoint { Top, Bottom };

/// Extremal vertices of the hypercube string: rank 1 in degree 0 (top)
/// or degree n - n^2 (bottom).
std::pair<std::int64_t, int> endpoint_prediction(int n, Endpoint which);

/// Conjectural graded ranks at the junction of cubes C and C+1. Direct
/// binomial formula for C <= (n-1)/2; the reflected table shifted by
/// n^2 - n - 2Cn otherwise. Coinciding degrees merge additively.
std::map<int, std::int64_t> junction_prediction(int n, int C);

/// The full predicted hat table of T(n,n): every support point carries the
/// graded ranks of its orbit representative.
PredictionTable full_table(int n);

/// Conjugation symmetry: the entry at (v, m) moves to (-v, m - 2*delta(v)).
GradedDimTable reflect(const GradedDimTable& t);
PredictionTable reflect(const PredictionTable& t);

}  // namespace hfl
