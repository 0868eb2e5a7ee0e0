#include <doctest.h>

#include <random>

#include "springerkit/errors.hpp"
#include "springerkit/g2.hpp"

using namespace springerkit;
using namespace springerkit::g2;

namespace {

// The matrix of [x, .] written out entry by entry: entry (r, c) is a sum of
// coefficient * x_i terms, stored as {coefficient, i}.
struct Term {
  int coeff;
  int var;
};
using SymbolicEntry = std::vector<Term>;

std::vector<std::vector<SymbolicEntry>> transcribed_cx() {
  std::vector<std::vector<SymbolicEntry>> m(14, std::vector<SymbolicEntry>(14));
  auto set = [&](int r, std::initializer_list<std::pair<int, Term>> row) {
    for (const auto& [c, t] : row) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].push_back(t);
  };
  set(1, {{0, {-1, 2}}});
  set(2, {{0, {-1, 3}}, {1, {-1, 1}}});
  set(3, {{0, {1, 4}}, {2, {2, 1}}});
  set(4, {{0, {1, 5}}, {3, {3, 1}}});
  set(5, {{1, {1, 4}}, {2, {-2, 3}}, {3, {-1, 2}}});
  set(6, {{1, {1, 5}}, {2, {1, 4}}, {3, {-1, 3}}, {4, {-1, 2}}, {5, {2, 1}}});
  set(7, {{0, {1, 6}}, {1, {-1, 5}}, {3, {3, 3}}, {4, {2, 2}}, {5, {-3, 1}}});
  set(8, {{2, {1, 5}}, {3, {-2, 4}}, {4, {-1, 3}}, {6, {-1, 1}}});
  set(9, {{1, {1, 6}}, {5, {3, 3}}, {7, {-1, 2}}});
  set(10, {{2, {1, 6}}, {5, {2, 4}}, {6, {-1, 3}}, {7, {-1, 3}}, {8, {1, 2}}, {9, {-1, 1}}});
  set(11, {{3, {-1, 6}}, {5, {-1, 5}}, {6, {-2, 4}}, {7, {-1, 4}}, {8, {2, 3}}, {10, {-2, 1}}});
  set(12, {{4, {-1, 6}}, {6, {-3, 5}}, {7, {-1, 5}}, {8, {-3, 4}}, {11, {3, 1}}});
  set(13, {{6, {-3, 6}}, {7, {-2, 6}}, {9, {-1, 5}}, {10, {-3, 4}}, {11, {3, 3}}, {12, {1, 2}}});
  return m;
}

QMatrix evaluate(const std::vector<std::vector<SymbolicEntry>>& m, const Point& x) {
  QMatrix out(Rationals{}, 14, 14);
  for (std::size_t r = 0; r < 14; ++r)
    for (std::size_t c = 0; c < 14; ++c)
      for (const auto& t : m[r][c]) out(r, c) += t.coeff * x[static_cast<std::size_t>(t.var - 1)];
  return out;
}

Point random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Point x;
  for (auto& v : x) {
    v = mpq_class(num(rng), den(rng));
    v.canonicalize();
  }
  return x;
}

}  // namespace

TEST_SUITE("g2") {
  TEST_CASE("structure constants") {
    CHECK_FALSE(jacobi_violation().has_value());
    for (int i = -6; i <= 6; ++i) {
      for (int j = -6; j <= 6; ++j) {
        if (i == 0 || j == 0 || i == -j) continue;
        CHECK(structure_constant(i, j) == -structure_constant(j, i));
        const auto a = root_coordinates(i);
        const auto b = root_coordinates(j);
        const bool sum_is_root = root_index(a[0] + b[0], a[1] + b[1]) != 0;
        CHECK((structure_constant(i, j) != 0) == sum_is_root);
      }
      if (i != 0) CHECK_FALSE(structure_constant_defined(i, -i));
    }
    CHECK(root_index(1, 0) == 1);
    CHECK(root_index(0, 1) == 2);
    CHECK(root_index(3, 2) == 6);
    CHECK(root_index(3, 3) == 0);
  }

  TEST_CASE("basis positions") {
    CHECK(basis_position(-6) == 0);
    CHECK(basis_position(-1) == 5);
    CHECK(basis_position(1) == 8);
    CHECK(basis_position(6) == 13);
  }

  TEST_CASE("C_x agrees with the written-out matrix") {
    const auto symbolic = transcribed_cx();
    for (int i = 0; i < 6; ++i) {
      Point e{};
      e[static_cast<std::size_t>(i)] = 1;
      CHECK(build_cx(e) == evaluate(symbolic, e));
    }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
      const Point x = random_point(rng);
      CHECK(build_cx(x) == evaluate(symbolic, x));
    }
  }

  TEST_CASE("orbit ranks at special points") {
    CHECK(orbit_rank(Point{}) == 0);
    CHECK(orbit_rank(Point{0, 0, 0, 0, 0, 1}) == 6);
    CHECK(orbit_rank(Point{1, 0, 0, 0, 0, 0}) == 8);
    CHECK(orbit_rank(Point{1, 1, 0, 0, 0, 0}) == 12);
    CHECK(orbit_label(6) == "A1");
    CHECK(orbit_label(8) == "~A1");
    CHECK(orbit_label(12) == "G2");
  }

  TEST_CASE("points of the minimal orbit from the parametrization") {
    // x_1 = 0, x_3 = x_2 u, x_4 = x_2 u^2, x_5 = -x_2 u^3, x_6 free.
    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; ++t) {
      const Point r = random_point(rng);
      const mpq_class a = r[0] == 0 ? mpq_class(1) : r[0];
      const mpq_class u = r[1];
      const Point x{0, a, a * u, a * u * u, -a * u * u * u, r[2]};
      CHECK(min_orbit_equations(x));
      CHECK(orbit_rank(x) == 6);
      CHECK(jacobian_rank(Variety::MinimalOrbit, x) == 3);
    }
  }

  TEST_CASE("rank 6 matches the equations at random points") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 300; ++t) {
      Point x = random_point(rng);
      if (t % 3 == 0) x[0] = 0;
      CHECK((orbit_rank(x) == 6) == min_orbit_equations(x));
    }
  }

  TEST_CASE("Jacobian ranks") {
    CHECK(expected_codimension(Variety::MinimalOrbit) == 3);
    CHECK(expected_codimension(Variety::TildeV) == 2);
    CHECK(jacobian_rank(Variety::MinimalOrbit, Point{0, 0, 0, 0, 0, 5}) == 1);
    CHECK(jacobian_rank(Variety::TildeV, Point{}) == 1);
    CHECK_THROWS_AS(jacobian_rank(Variety::TildeV, Point{0, 1, 0, 0, 0, 0}), DomainError);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
      const Point r = random_point(rng);
      const mpq_class x1 = r[0] == 0 ? mpq_class(2) : r[0];
      // Solve 3 x_4^2 + 4 x_3 x_5 - 4 x_1 x_6 = 0 for x_6.
      const mpq_class x6 = (3 * r[3] * r[3] + 4 * r[2] * r[4]) / (4 * x1);
      const Point x{x1, 0, r[2], r[3], r[4], x6};
      CHECK(tildeV_membership(x));
      CHECK(orbit_rank(x) == 8);
      CHECK(jacobian_rank(Variety::TildeV, x) == 2);
    }
    // x_1 = 0, x_3 != 0: then x_5 = -3 x_4^2 / (4 x_3).
    const Point y{0, 0, 2, 1, mpq_class(-3, 8), 7};
    CHECK(tildeV_membership(y));
    CHECK(orbit_rank(y) == 8);
    CHECK(jacobian_rank(Variety::TildeV, y) == 2);
  }

  TEST_CASE("ranks of random rational points") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3), zero(0, 3);
    for (int t = 0; t < 10000; ++t) {
      Point x;
      for (auto& v : x) {
        v = zero(rng) == 0 ? mpq_class(0) : mpq_class(num(rng), den(rng));
        v.canonicalize();
      }
      const int r = orbit_rank(x);
      CHECK(r % 2 == 0);
      CHECK((r == 6) == min_orbit_equations(x));
      if (tildeV_membership(x)) CHECK((r == 8) == (x[0] != 0 || x[2] != 0));
    }
  }

  TEST_CASE("grid scan") {
    const auto full = classify_grid(2);
    CHECK(full.points == 15625);
    CHECK(full.min_orbit_mismatches == 0);
    CHECK(full.tilde_mismatches == 0);
    const auto scan = classify_grid(1);
    CHECK(scan.points == 729);
    CHECK(scan.min_orbit_mismatches == 0);
    CHECK(scan.tilde_mismatches == 0);
    std::uint64_t total = 0;
    for (const auto& [rank, count] : scan.rank_histogram) total += count;
    CHECK(total == scan.points);
    CHECK(classify_grid(1, true).points == 243);
  }

  TEST_CASE("point parsing") {
    CHECK(parse_point("1,0,0,0,0,1/2")[5] == mpq_class(1, 2));
    CHECK_THROWS_AS(parse_point("1,2"), InvalidArgument);
    CHECK(parse_variety("min") == Variety::MinimalOrbit);
    CHECK(parse_variety("tilde") == Variety::TildeV);
    CHECK_THROWS_AS(parse_variety("other"), InvalidArgument);
  }
}
