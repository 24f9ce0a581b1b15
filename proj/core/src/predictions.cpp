#include "hfl/predictions.hpp"

#include <algorithm>

namespace hfl {

std::int64_t binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  if (m >= kBinomialCap)
    throw InvalidArgument("binomial(" + std::to_string(m) +
                          ", k) exceeds the exact-arithmetic cap of " +
                          std::to_string(kBinomialCap));
  k = std::min(k, m - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= unsigned(m - k + i);
    r /= unsigned(i);  // exact at every step
  }
  return std::int64_t(r);
}

std::set<std::vector<int>> support(int n) {
  if (n < 2) throw InvalidArgument("support requires n >= 2");
  if (n > 16)
    throw InvalidArgument(
        "support enumeration is capped at n = 16 ((n-1) 2^n vertices)");
  std::set<std::vector<int>> points;
  for (int c = 1; c <= n - 1; ++c) {
    const int hi = n - 2 * c + 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
      std::vector<int> v(std::size_t(n), 0);
      for (int i = 0; i < n; ++i)
        v[std::size_t(i)] = (mask >> i & 1) ? hi : hi - 2;
      points.insert(std::move(v));
    }
  }
  return points;
}

LatticePoint classify(int n, const std::vector<int>& alexander2) {
  if (n < 2) throw InvalidArgument("classify requires n >= 2");
  if (int(alexander2.size()) != n)
    throw InvalidArgument("classify: vector length must equal n");
  const int parity = ((n - 1) % 2 + 2) % 2;
  for (int v : alexander2)
    if (((v % 2) + 2) % 2 != parity)
      throw InvalidArgument("classify: coordinate parity inconsistent with n");

  LatticePoint point;
  point.alexander2 = alexander2;

  std::vector<int> sorted = alexander2;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  const int hi = sorted.front(), lo = sorted.back();

  if (hi == lo) {
    // Constant vectors run down the main diagonal: top, junctions, bottom.
    if (hi == n - 1) {
      point.cls = PointClass::EndpointTop;
    } else if (hi == -(n - 1)) {
      point.cls = PointClass::EndpointBottom;
    } else if (hi < n - 1 && hi > -(n - 1)) {
      point.cls = PointClass::Junction;
      point.junction = (n - 1 - hi) / 2;
    }
    return point;
  }
  if (hi - lo != 2) return point;  // spans two cubes or more: outside

  const int c = (n + 1 - hi) / 2;
  if (c < 1 || c > n - 1 || n - 2 * c + 1 != hi) return point;
  const auto hi_count =
      int(std::count(sorted.begin(), sorted.end(), hi));
  const int s = n + 1 - hi_count;
  point.cls = PointClass::Interior;
  point.cube = c;
  point.slice = s;
  return point;
}

std::pair<std::int64_t, int> interior_prediction(int n, int c, int s) {
  if (n < 2) throw InvalidArgument("interior_prediction requires n >= 2");
  if (c < 1 || c > n - 1 || s < 2 || s > n)
    throw InvalidArgument("interior_prediction: (c, s) out of range");
  return {binomial(n - 2, c - 1), -c * c - s + 2};
}

std::pair<std::int64_t, int> endpoint_prediction(int n, Endpoint which) {
  if (n < 2) throw InvalidArgument("endpoint_prediction requires n >= 2");
  return which == Endpoint::Top ? std::pair<std::int64_t, int>{1, 0}
                                : std::pair<std::int64_t, int>{1, n - n * n};
}

std::map<int, std::int64_t> junction_prediction(int n, int C) {
  if (n < 3) throw InvalidArgument("junction_prediction requires n >= 3");
  if (C < 1 || C > n - 2)
    throw InvalidArgument("junction_prediction: C out of range");

  std::map<int, std::int64_t> ranks;
  if (2 * C <= n - 1) {
    for (int i = 0; i <= C; ++i)
      ranks[-C * C - C - i] += binomial(n - 1, i);
    for (int j = 0; j <= C - 1; ++j)
      ranks[-C * C - C - n + 2 + j] += binomial(n - 1, j);
  } else {
    const int reflected = n - 1 - C;
    const int shift = n * n - n - 2 * C * n;
    for (const auto& [m, r] : junction_prediction(n, reflected))
      ranks[m + shift] += r;
  }
  return ranks;
}

PredictionTable full_table(int n) {
  if (n < 2) throw InvalidArgument("full_table requires n >= 2");
  PredictionTable out;
  out.table = GradedDimTable(TableKind::Predicted, n);
  for (const auto& v : support(n)) {
    const LatticePoint point = classify(n, v);
    switch (point.cls) {
      case PointClass::EndpointTop:
      case PointClass::EndpointBottom: {
        const auto [rank, m] = endpoint_prediction(
            n, point.cls == PointClass::EndpointTop ? Endpoint::Top
                                                    : Endpoint::Bottom);
        out.table.add({v, m}, rank);
        out.provenance[{v, m}] = Provenance::Theorem;
        break;
      }
      case PointClass::Interior: {
        const auto [rank, m] = interior_prediction(n, point.cube,
                                                   point.slice);
        out.table.add({v, m}, rank);
        out.provenance[{v, m}] = Provenance::Theorem;
        break;
      }
      case PointClass::Junction: {
        for (const auto& [m, rank] : junction_prediction(n, point.junction)) {
          out.table.add({v, m}, rank);
          out.provenance[{v, m}] = Provenance::Conjecture;
        }
        break;
      }
      case PointClass::OutsideSupport:
        throw std::logic_error("support point failed to classify");
    }
  }
  return out;
}

GradedDimTable reflect(const GradedDimTable& t) {
  GradedDimTable out(t.kind, t.components);
  for (const auto& [g, r] : t.entries) {
    MultiGrading image;
    image.alexander2.reserve(g.alexander2.size());
    for (int v : g.alexander2) image.alexander2.push_back(-v);
    image.maslov = g.maslov - 2 * delta_of(g.alexander2);
    out.add(image, r);
  }
  return out;
}

PredictionTable reflect(const PredictionTable& t) {
  PredictionTable out;
  out.table = reflect(t.table);
  for (const auto& [g, prov] : t.provenance) {
    MultiGrading image;
    for (int v : g.alexander2) image.alexander2.push_back(-v);
    image.maslov = g.maslov - 2 * delta_of(g.alexander2);
    out.provenance[image] = prov;
  }
  return out;
}

}  // namespace hfl
