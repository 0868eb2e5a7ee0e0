#include <doctest.h>

#include <random>

#include "springerkit/errors.hpp"
#include "springerkit/exact.hpp"

using namespace springerkit;

namespace {

QMatrix random_rational_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int rank_cap) {
  // Product of random (rows x r) and (r x cols) factors has rank <= r.
  std::uniform_int_distribution<int> dist(-4, 4);
  QMatrix a(Rationals{}, rows, static_cast<std::size_t>(rank_cap));
  QMatrix b(Rationals{}, static_cast<std::size_t>(rank_cap), cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = mpq_class(dist(rng), 1 + (dist(rng) + 4) % 3);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = dist(rng);
  return a * b;
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("prime fields") {
    CHECK(is_prime(2));
    CHECK(is_prime(1000003));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_THROWS_AS(PrimeField(4), InvalidArgument);
    const PrimeField f(5);
    CHECK((f.from_int(3) * f.from_int(2)).value() == 1);
    CHECK((f.one() / f.from_int(3)).value() == 2);
    CHECK(f.from_int(-1).value() == 4);
    CHECK(f.parse("7").value() == 2);
    for (std::uint32_t a = 1; a < 5; ++a) CHECK((f.from_int(a) * (f.one() / f.from_int(a))) == f.one());
  }

  TEST_CASE("rationals parse and format") {
    const Rationals q;
    CHECK(q.parse("-3/6") == mpq_class(-1, 2));
    CHECK(q.format(q.parse("4/2")) == "2");
    CHECK_THROWS_AS(q.parse("1/0"), InvalidArgument);
    CHECK_THROWS_AS(q.parse("abc"), InvalidArgument);
  }

  TEST_CASE("row echelon normalizes pivots over Q") {
    // Pivot normalization once read an entry it had already overwritten.
    const QMatrix m = QMatrix::from_integers(Rationals{}, {{2, 4, 6}, {1, 3, 5}});
    const auto e = reduced_row_echelon(m);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(e.reduced == QMatrix::from_integers(Rationals{}, {{1, 0, -1}, {0, 1, 2}}));
  }

  TEST_CASE("rank, kernel and inverse over Q") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
      const int r = 1 + t % 5;
      const QMatrix m = random_rational_matrix(rng, 6, 7, r);
      const std::size_t rk = rank(m);
      CHECK(rk == reduced_row_echelon(m).pivots.size());
      CHECK(rk <= static_cast<std::size_t>(r));
      const QMatrix k = kernel_basis(m);
      CHECK(k.rows() == 7 - rk);
      CHECK((m * k.transpose()).is_zero());
    }
    const QMatrix a = QMatrix::from_integers(Rationals{}, {{2, 1}, {7, 4}});
    CHECK(inverse(a) * a == QMatrix::identity(Rationals{}, 2));
    CHECK_THROWS_AS(inverse(QMatrix::from_integers(Rationals{}, {{1, 2}, {2, 4}})), InvalidArgument);
  }

  TEST_CASE("rank plus nullity over F_p") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dist(0, 4);
    const PrimeField f(5);
    for (int t = 0; t < 40; ++t) {
      FqMatrix m(f, 5, 7);
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 7; ++j) m(i, j) = f.from_int(t % 2 == 0 && i == 4 ? 0 : dist(rng));
      const FqMatrix k = kernel_basis(m);
      CHECK(rank(m) + k.rows() == 7);
      CHECK((m * k.transpose()).is_zero());
    }
  }

  TEST_CASE("rank over Q agrees with rank modulo a large prime") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> dist(-9, 9);
    const PrimeField big(1000003);
    for (int t = 0; t < 50; ++t) {
      const std::size_t r = 2 + static_cast<std::size_t>(t % 4);
      QMatrix a(Rationals{}, 6, r), b(Rationals{}, r, 6);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          a(i, j) = dist(rng);
          b(j, i) = dist(rng);
        }
      const QMatrix m = a * b;
      CHECK(rank(m) == rank(reduce_mod(m, big)));
    }
  }

  TEST_CASE("rank over F_p") {
    const PrimeField f(3);
    const FqMatrix m = reduce_mod(QMatrix::from_integers(Rationals{}, {{1, 1}, {1, 4}}), f);
    CHECK(rank(m) == 1);
    CHECK(rank(QMatrix::from_integers(Rationals{}, {{1, 1}, {1, 4}})) == 2);
    CHECK(rank(reduce_mod(QMatrix::from_integers(Rationals{}, {{1, 2}, {3, 4}}), PrimeField(1000003))) == 2);
  }

  TEST_CASE("jordan type") {
    const QMatrix x = QMatrix::from_integers(Rationals{}, {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
    CHECK(jordan_type(x) == Partition({2, 2}));
    CHECK(jordan_type(QMatrix(Rationals{}, 3, 3)) == Partition({1, 1, 1}));
    CHECK_THROWS_AS(jordan_type(QMatrix::identity(Rationals{}, 2)), NilpotencyError);
    CHECK(partition_from_kernel_dims({0, 2, 4, 6}) == Partition({3, 3}));
  }

  TEST_CASE("subspaces") {
    const PrimeField f(3);
    using S = Subspace<PrimeField>;
    const auto e = [&](int i) {
      std::vector<Residue> v(4, f.zero());
      v[static_cast<std::size_t>(i)] = f.one();
      return v;
    };
    const S a = S::span(f, 4, {e(0), e(1)});
    const S b = S::span(f, 4, {e(1), e(2)});
    CHECK(a.dim() == 2);
    CHECK((a + b).dim() == 3);
    CHECK(a.intersect(b) == S::span(f, 4, {e(1)}));
    CHECK(a.contains(e(0)));
    CHECK_FALSE(a.contains(e(2)));
    CHECK(a.annihilator().dim() == 2);
    const FqMatrix shift = reduce_mod(
        QMatrix::from_integers(Rationals{}, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}), f);
    CHECK(a.is_stable(shift));
    CHECK_FALSE(b.is_stable(shift));
    CHECK(S::kernel_of(shift) == S::span(f, 4, {e(0)}));
    CHECK(S::span(f, 4, {e(0)}).preimage(shift) == a);
    CHECK(a.image(shift) == S::span(f, 4, {e(0)}));
    const S mid = S::span(f, 4, {e(0), e(1), e(2)});
    CHECK(complement_basis(mid, a).size() == 1);
    CHECK(induced_jordan_type(shift, S::span(f, 4, {e(0)}), mid) == Partition({2}));
    CHECK_THROWS_AS(induced_jordan_type(shift, b, S::whole(f, 4)), SubspaceError);
  }

  TEST_CASE("projective points and flag counts") {
    const PrimeField f(3);
    int points = 0;
    for_each_projective_point(f, 3, [&](const std::vector<Residue>&) { ++points; });
    CHECK(points == 13);
    CHECK(full_flag_count(3, 2) == 4);
    CHECK(full_flag_count(3, 4) == 1ull * 4 * 13 * 40);
    CHECK(full_flag_count(5, 3) == 1ull * 6 * 31);
  }
}
