#include "hfl/paper_model.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hfl/predictions.hpp"

namespace hfl {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidArgument(what);
}

void validate(const SymbolicGenerator& gen, int n) {
  require(n >= 2, "model generators need width n >= 2");
  require(int(gen.points.size()) == n - 1,
          "generator must hold exactly n - 1 labeled points");
  for (const auto& p : gen.points)
    require(p.primes >= 0 && p.primes <= 2,
            "decoration count out of range [0, 2]");
}

// (c, s) of the interior point the generator sits at, or throw. The
// working vector must be (c-1, ..., c-1, c, ..., c) with n-s+1 low entries.
std::pair<int, int> interior_coordinates(const SymbolicGenerator& gen,
                                         int n) {
  const std::vector<int> w = working_alexander(gen, n);
  std::size_t low_count = 0;
  while (low_count < w.size() && w[low_count] == w[0]) ++low_count;
  bool well_formed = low_count < w.size();
  for (std::size_t i = low_count; i < w.size() && well_formed; ++i)
    well_formed = w[i] == w[0] + 1;
  const int c = w[0] + 1;
  const int s = n + 1 - int(low_count);
  if (!well_formed || c < 1 || c > n - 1 || s < 2 || s > n)
    throw InvalidArgument(
        "generator does not sit at an interior lattice point v_{s,c,n}");
  for (std::size_t i = 0; i + 1 < gen.points.size(); ++i)
    require(gen.points[i].label != Label::G,
            "interior generators admit a grid-region point only at index n");
  return {c, s};
}

}  // namespace

std::vector<int> working_alexander(const SymbolicGenerator& gen, int n) {
  validate(gen, n);
  std::vector<int> v(std::size_t(n), 0);
  for (int idx = 2; idx <= n; ++idx) {
    const LabeledPoint& p = gen.points[std::size_t(idx - 2)];
    switch (p.label) {
      case Label::E:
        break;
      case Label::G:
        for (int j = 0; j < idx - 1; ++j) v[std::size_t(j)] += 1;
        break;
      case Label::I:
        for (int j = 0; j < n; ++j) v[std::size_t(j)] += 1;
        break;
    }
    v[std::size_t(idx - 1)] += p.primes;
  }
  return v;
}

int model_grading(const SymbolicGenerator& gen, int n) {
  validate(gen, n);
  interior_coordinates(gen, n);  // throws off-interior
  int inner = 0, decorations = 0;
  for (const auto& p : gen.points) {
    if (p.label == Label::I) ++inner;
    decorations += p.primes;
  }
  const int grid_flag = gen.points.back().label == Label::G ? 1 : 0;
  const int k = inner + grid_flag;
  return -k * k - 2 * k - decorations + 2 * grid_flag;
}

std::tuple<std::int64_t, std::int64_t, std::int64_t> class_counts(int n,
                                                                  int c,
                                                                  int s) {
  require(n >= 2, "class_counts requires n >= 2");
  require(c >= 1 && c <= n - 1 && s >= 2 && s <= n,
          "class_counts: (c, s) out of range");
  const std::int64_t e = binomial(n - 2, c - 1);
  const std::int64_t ig = binomial(n - 2, c - 2);
  return {e, ig, ig};
}

std::vector<int> order_key(const SymbolicGenerator& gen) {
  require(!gen.points.empty(), "empty generator");
  const Label last = gen.points.back().label;
  require(last == Label::I || last == Label::G,
          "order_key is defined on the I and G classes only");
  std::vector<int> key;
  key.reserve(gen.points.size() - 1);
  for (std::size_t i = 0; i + 1 < gen.points.size(); ++i)
    key.push_back(gen.points[i].label == Label::I ? 1 : 0);
  return key;
}

GeneratorClasses generators_at(int n, int c, int s) {
  require(n >= 2 && n <= 30, "generators_at supports 2 <= n <= 30");
  require(c >= 1 && c <= n - 1 && s >= 2 && s <= n,
          "generators_at: (c, s) out of range");

  const int slots = n - 2;  // indices 2..n-1
  // Decorations are forced by the lattice point: one unit on every point
  // at indices n-s+2..n-1, one on an E/I x_n, two on a G x_n.
  auto build = [&](std::uint32_t inner_mask, Label last,
                   int last_primes) {
    SymbolicGenerator gen;
    gen.points.resize(std::size_t(n - 1));
    for (int slot = 0; slot < slots; ++slot) {
      const int idx = slot + 2;
      gen.points[std::size_t(slot)].label =
          (inner_mask >> slot & 1) ? Label::I : Label::E;
      gen.points[std::size_t(slot)].primes = idx >= n - s + 2 ? 1 : 0;
    }
    gen.points.back() = {last, last_primes};
    return gen;
  };

  GeneratorClasses out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << slots); ++mask) {
    const int ones = std::popcount(mask);
    if (ones == c - 1) out.e_class.push_back(build(mask, Label::E, 1));
    if (ones == c - 2) {
      out.i_class.push_back(build(mask, Label::I, 1));
      out.g_class.push_back(build(mask, Label::G, 2));
    }
  }
  return out;
}

std::pair<std::int64_t, int> interior_rank_model(int n, int c, int s) {
  const GeneratorClasses classes = generators_at(n, c, s);
  if (classes.e_class.empty())
    throw std::logic_error("interior point with empty E class");

  const int degree = model_grading(classes.e_class.front(), n);
  for (const auto& gen : classes.e_class)
    if (model_grading(gen, n) != degree)
      throw std::logic_error("E-class gradings disagree");
  for (const auto& gen : classes.i_class)
    if (model_grading(gen, n) != degree)
      throw std::logic_error("I-class grading off its E partner");
  for (const auto& gen : classes.g_class)
    if (model_grading(gen, n) != degree + 1)
      throw std::logic_error("G-class grading is not one above E/I");

  const auto rank = std::int64_t(classes.e_class.size()) +
                    std::int64_t(classes.i_class.size()) -
                    std::int64_t(classes.g_class.size());
  return {rank, degree};
}

}  // namespace hfl
