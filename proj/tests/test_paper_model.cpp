#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hfl/paper_model.hpp"
#include "hfl/predictions.hpp"

using namespace hfl;

namespace {

SymbolicGenerator gen(std::initializer_list<LabeledPoint> points) {
  SymbolicGenerator g;
  g.points = points;
  return g;
}

}  // namespace

TEST_CASE("working alexander grading") {
  // (G''_2, E'_3, I'_4) at n = 4.
  const SymbolicGenerator worked =
      gen({{Label::G, 2}, {Label::E, 1}, {Label::I, 1}});
  CHECK(working_alexander(worked, 4) == std::vector<int>{2, 3, 2, 2});

  const SymbolicGenerator all_e =
      gen({{Label::E, 0}, {Label::E, 0}, {Label::E, 0}});
  CHECK(working_alexander(all_e, 4) == std::vector<int>{0, 0, 0, 0});

  // I'_4 alone contributes (1,1,1,2).
  const SymbolicGenerator lone_i =
      gen({{Label::E, 0}, {Label::E, 0}, {Label::I, 1}});
  CHECK(working_alexander(lone_i, 4) == std::vector<int>{1, 1, 1, 2});

  CHECK_THROWS_AS(working_alexander(all_e, 5), InvalidArgument);
  CHECK_THROWS_AS(
      working_alexander(gen({{Label::E, 3}, {Label::E, 0}}), 3),
      InvalidArgument);
}

TEST_CASE("model grading at interior points") {
  // All-E with one prime: v_{2,1,4}, grading -1.
  CHECK(model_grading(gen({{Label::E, 0}, {Label::E, 0}, {Label::E, 1}}),
                      4) == -1);
  // One I point, x_4 = I'_4: v_{2,2,4}, grading -4.
  CHECK(model_grading(gen({{Label::E, 0}, {Label::E, 0}, {Label::I, 1}}),
                      4) == -4);
  // x_4 = G''_4 at (c=2, s=2): grading -3, one above its I partner.
  CHECK(model_grading(gen({{Label::E, 0}, {Label::E, 0}, {Label::G, 2}}),
                      4) == -3);
  // Same with an extra I lands at (c=3, s=2): grading -8.
  CHECK(model_grading(gen({{Label::E, 0}, {Label::I, 0}, {Label::G, 2}}),
                      4) == -8);

  // Not at an interior point: the all-E generator (top vertex).
  CHECK_THROWS_AS(
      model_grading(gen({{Label::E, 0}, {Label::E, 0}, {Label::E, 0}}), 4),
      InvalidArgument);
  // Grid-region points below index n are rejected at interior points.
  CHECK_THROWS_AS(
      model_grading(gen({{Label::G, 2}, {Label::E, 0}, {Label::E, 1}}), 4),
      InvalidArgument);
}

TEST_CASE("class counts") {
  CHECK(class_counts(4, 2, 2) ==
        std::tuple<std::int64_t, std::int64_t, std::int64_t>{2, 1, 1});
  CHECK(class_counts(5, 3, 2) ==
        std::tuple<std::int64_t, std::int64_t, std::int64_t>{3, 3, 3});
  for (int n = 2; n <= 8; ++n)
    for (int s = 2; s <= n; ++s)
      CHECK(class_counts(n, 1, s) ==
            std::tuple<std::int64_t, std::int64_t, std::int64_t>{1, 0, 0});
  CHECK_THROWS_AS(class_counts(4, 0, 2), InvalidArgument);
  CHECK_THROWS_AS(class_counts(4, 1, 1), InvalidArgument);
}

TEST_CASE("order keys follow the displayed ordering") {
  const std::vector<int> a{1, 1, 0, 1}, b{1, 0, 1, 1}, c{0, 1, 1, 1};
  CHECK(a > b);
  CHECK(b > c);
  const std::vector<int> zeros{0, 0, 0, 0};
  CHECK(zeros < c);
  CHECK(zeros < a);

  // E-class generators have no order key.
  SymbolicGenerator e_gen;
  e_gen.points = {{Label::I, 0}, {Label::E, 1}};
  REQUIRE(e_gen.points.back().label == Label::E);
  CHECK_THROWS_AS(order_key(e_gen), InvalidArgument);
}

TEST_CASE("order key ranking is a bijection onto the class size") {
  for (int n = 3; n <= 7; ++n)
    for (int c = 2; c <= n - 1; ++c) {
      const GeneratorClasses classes = generators_at(n, c, 2);
      std::set<std::vector<int>> i_keys, g_keys;
      for (const auto& g : classes.i_class) i_keys.insert(order_key(g));
      for (const auto& g : classes.g_class) g_keys.insert(order_key(g));
      const auto expected = std::size_t(binomial(n - 2, c - 2));
      CHECK(i_keys.size() == expected);       // all distinct
      CHECK(i_keys.size() == classes.i_class.size());
      CHECK(g_keys == i_keys);                // same underlying sequences
    }
}

TEST_CASE("generator enumeration matches the lattice point data") {
  for (int n = 3; n <= 6; ++n)
    for (int c = 1; c <= n - 1; ++c)
      for (int s = 2; s <= n; ++s) {
        const GeneratorClasses classes = generators_at(n, c, s);
        const auto [ne, ni, ng] = class_counts(n, c, s);
        CHECK(std::int64_t(classes.e_class.size()) == ne);
        CHECK(std::int64_t(classes.i_class.size()) == ni);
        CHECK(std::int64_t(classes.g_class.size()) == ng);

        // Working coordinates of v_{s,c,n}: n-s+1 copies of c-1 then
        // s-1 copies of c.
        std::vector<int> expected;
        for (int i = 0; i < n - s + 1; ++i) expected.push_back(c - 1);
        for (int i = 0; i < s - 1; ++i) expected.push_back(c);

        const int ei_degree = -c * c - s + 2;
        for (const auto& g : classes.e_class) {
          CHECK(working_alexander(g, n) == expected);
          CHECK(model_grading(g, n) == ei_degree);
        }
        for (const auto& g : classes.i_class) {
          CHECK(working_alexander(g, n) == expected);
          CHECK(model_grading(g, n) == ei_degree);
        }
        for (const auto& g : classes.g_class) {
          CHECK(working_alexander(g, n) == expected);
          CHECK(model_grading(g, n) == ei_degree + 1);
        }
      }
}

TEST_CASE("interior rank model") {
  CHECK(interior_rank_model(4, 2, 3) ==
        std::pair<std::int64_t, int>{2, -5});
  CHECK(interior_rank_model(3, 1, 2) ==
        std::pair<std::int64_t, int>{1, -1});
  CHECK(interior_rank_model(6, 3, 4) ==
        std::pair<std::int64_t, int>{6, -11});
}

TEST_CASE("model and closed form agree on every interior slice") {
  for (int n = 2; n <= 8; ++n)
    for (int c = 1; c <= n - 1; ++c)
      for (int s = 2; s <= n; ++s)
        CHECK(interior_rank_model(n, c, s) == interior_prediction(n, c, s));
}
