#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "hfl/errors.hpp"

namespace hfl {

/// Intersection-point regions of the model Heegaard diagram: exterior,
/// grid, inner.
enum class Label : std::uint8_t { E, G, I };

struct LabeledPoint {
  Label label = Label::E;
  int primes = 0;  // decoration units; each adds 1 to that coordinate
};

/// A generator (x_2, ..., x_n) of the model diagram: one labeled point per
/// index, points[i - 2] holding index i.
struct SymbolicGenerator {
  std::vector<LabeledPoint> points;

  int width() const { return int(points.size()) + 1; }  // n
};

/// Working Alexander vector: E_i contributes nothing, G_i contributes 1 to
/// coordinates 1..i-1, I_i to all n coordinates, and each decoration unit
/// adds 1 to coordinate i. The absolute Alexander grading is
/// ((n-1)/2, ..., (n-1)/2) minus this vector.
std::vector<int> working_alexander(const SymbolicGenerator& gen, int n);

/// Homological grading of a generator sitting at an interior lattice point
/// v_{s,c,n}. With k the number of I points, g = 1 if x_n lies in the grid
/// region and u the total decoration count:
///   -(k+g)^2 - 2(k+g) - u + 2g.
/// The k I-points-and-no-decorations base case carries grading -k^2 - 2k;
/// each decoration drops the grading by one; a grid-region x_n raises it by
/// one via the bigon pairing G_n'' <-> I_n'. Throws if the generator is not
/// at an interior point.
int model_grading(const SymbolicGenerator& gen, int n);

/// (|E-class|, |I-class|, |G-class|) at v_{s,c,n}:
/// (C(n-2, c-1), C(n-2, c-2), C(n-2, c-2)).
std::tuple<std::int64_t, std::int64_t, std::int64_t> class_counts(int n,
                                                                  int c,
                                                                  int s);

/// Binary sequence over indices 2..n-1 (E -> 0, I -> 1) for generators in
/// the I or G class; ordered so that S > T when the first differing
/// position of S holds a 1 (plain lexicographic comparison).
std::vector<int> order_key(const SymbolicGenerator& gen);

/// All generators at the interior point v_{s,c,n}, split by class.
struct GeneratorClasses {
  std::vector<SymbolicGenerator> e_class;
  std::vector<SymbolicGenerator> i_class;
  std::vector<SymbolicGenerator> g_class;
};
GeneratorClasses generators_at(int n, int c, int s);

/// Interior rank and degree derived from the model by counting dimensions:
/// rank = |E| + |I| - |G|, degree read off the E/I generators' gradings.
/// Independent of the closed-form route in predictions.
std::pair<std::int64_t, int> interior_rank_model(int n, int c, int s);

}  // namespace hfl
