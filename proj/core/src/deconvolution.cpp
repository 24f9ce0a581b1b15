#include "hfl/deconvolution.hpp"

#include <map>
#include <numeric>

namespace hfl {

namespace {

// Descending (sum of alexander2, alexander2 lex, maslov). The divisor's
// trailing monomial strictly lowers the sum, so a single sweep in this
// order performs the exact division.
struct MonomialDesc {
  bool operator()(const MultiGrading& a, const MultiGrading& b) const {
    const int sa = std::accumulate(a.alexander2.begin(), a.alexander2.end(), 0);
    const int sb = std::accumulate(b.alexander2.begin(), b.alexander2.end(), 0);
    if (sa != sb) return sa > sb;
    if (a.alexander2 != b.alexander2) return a.alexander2 > b.alexander2;
    return a.maslov > b.maslov;
  }
};

GradedDimTable divide_once(const GradedDimTable& t, int component) {
  std::map<MultiGrading, std::int64_t, MonomialDesc> work(t.entries.begin(),
                                                          t.entries.end());
  GradedDimTable quotient(t.kind, t.components);
  for (auto it = work.begin(); it != work.end(); ++it) {
    const std::int64_t c = it->second;
    if (c == 0) continue;
    if (c < 0)
      throw NonDivisibleError(
          "table is not divisible by (1 + q^-1 t_" +
          std::to_string(component + 1) + "^-1): coefficient " +
          std::to_string(c) + " at maslov " +
          std::to_string(it->first.maslov));
    quotient.add(it->first, c);
    MultiGrading lower = it->first;
    lower.maslov -= 1;
    lower.alexander2[std::size_t(component)] -= 2;
    work[lower] -= c;  // lands strictly later in the sweep order
  }
  return quotient;
}

}  // namespace

FactorSpec FactorSpec::for_grid(const GridDiagram& g) {
  FactorSpec f;
  f.exponents.reserve(std::size_t(g.components));
  for (int i = 0; i < g.components; ++i)
    f.exponents.push_back(g.o_count[i] - 1);
  return f;
}

GradedDimTable strip_factors(const GradedDimTable& t, const FactorSpec& f) {
  if (int(f.exponents.size()) != t.components)
    throw InvalidArgument("factor spec does not match table components");
  for (int e : f.exponents)
    if (e < 0) throw InvalidArgument("factor exponent must be >= 0");

  GradedDimTable current = t;
  for (int component = 0; component < t.components; ++component)
    for (int rep = 0; rep < f.exponents[std::size_t(component)]; ++rep)
      current = divide_once(current, component);
  current.kind = t.kind == TableKind::Tilde ? TableKind::Hat : t.kind;
  return current;
}

GradedDimTable apply_factors(const GradedDimTable& t, const FactorSpec& f) {
  if (int(f.exponents.size()) != t.components)
    throw InvalidArgument("factor spec does not match table components");
  GradedDimTable current = t;
  for (int component = 0; component < t.components; ++component) {
    for (int rep = 0; rep < f.exponents[std::size_t(component)]; ++rep) {
      GradedDimTable next(current.kind, current.components);
      for (const auto& [g, r] : current.entries) {
        next.add(g, r);
        MultiGrading lower = g;
        lower.maslov -= 1;
        lower.alexander2[std::size_t(component)] -= 2;
        next.add(lower, r);
      }
      current = std::move(next);
    }
  }
  current.kind = TableKind::Tilde;
  return current;
}

}  // namespace hfl
