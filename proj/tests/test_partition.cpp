#include <doctest.h>

#include <algorithm>

#include "springerkit/errors.hpp"
#include "springerkit/partition.hpp"

using namespace springerkit;

namespace {

// Column j has one box for every row longer than j.
std::vector<int> dual_by_row_counting(const std::vector<int>& rows) {
  std::vector<int> out;
  for (int j = 0; !rows.empty() && j < rows.front(); ++j) {
    out.push_back(static_cast<int>(std::count_if(rows.begin(), rows.end(), [j](int r) { return r > j; })));
  }
  return out;
}

std::int64_t binom2(std::int64_t k) { return k * (k - 1) / 2; }

}  // namespace

TEST_SUITE("partition") {
  TEST_CASE("construction and parsing") {
    CHECK(Partition::parse("2,2,1,1").parts() == std::vector<int>{2, 2, 1, 1});
    CHECK(Partition::parse("").empty());
    CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
    CHECK_THROWS_AS(Partition({2, 0}), InvalidArgument);
    CHECK_THROWS_AS(Partition::parse("2,x"), InvalidArgument);
    CHECK(Partition::from_columns({4, 2}) == Partition({2, 2, 1, 1}));
    CHECK(Partition({3, 1}).to_string() == "3,1");
  }

  TEST_CASE("dual examples") {
    CHECK(dual(Partition({2, 2, 1, 1})) == Partition({4, 2}));
    CHECK(dual(Partition({5, 4, 4, 2, 2})) == Partition({5, 5, 3, 3, 1}));
    CHECK(dual(Partition()) == Partition());
  }

  TEST_CASE("partition counts match the partition numbers") {
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) CHECK(partitions_of(n).size() == p[static_cast<std::size_t>(n)]);
  }

  TEST_CASE("dual agrees with row counting and is an involution") {
    for (int n = 0; n <= 12; ++n) {
      for (const auto& part : partitions_of(n)) {
        CHECK(dual(part).parts() == dual_by_row_counting(part.parts()));
        CHECK(dual(dual(part)) == part);
        CHECK(part.columns() == dual(part).parts());
      }
    }
  }

  TEST_CASE("flag variety dimension against the row-counted dual") {
    CHECK(flag_variety_dimension(Partition({2, 2, 1, 1})) == 7);
    for (int n = 0; n <= 10; ++n) {
      for (const auto& part : partitions_of(n)) {
        std::int64_t expected = 0;
        for (int c : dual_by_row_counting(part.parts())) expected += binom2(c);
        CHECK(flag_variety_dimension(part) == expected);
      }
    }
  }

  TEST_CASE("gl orbit dimension") {
    CHECK(gl_orbit_dimension(Partition({2, 2, 1, 1})) == 16);
    CHECK(gl_orbit_dimension(Partition({1, 1, 1})) == 0);
    CHECK(gl_orbit_dimension(Partition({4})) == 12);
    // dim O = n^2 - n - 2 * dim of the flag variety.
    for (int n = 1; n <= 9; ++n) {
      for (const auto& part : partitions_of(n)) {
        CHECK(gl_orbit_dimension(part) == std::int64_t{n} * n - n - 2 * flag_variety_dimension(part));
      }
    }
  }

  TEST_CASE("admissibility") {
    CHECK(is_admissible(Partition({2, 2, 1, 1}), FormKind::Symplectic));
    CHECK(is_admissible(Partition({2, 2, 1, 1}), FormKind::Orthogonal));
    CHECK(is_admissible(Partition({3, 2, 2}), FormKind::Orthogonal));
    CHECK_FALSE(is_admissible(Partition({3, 2, 2}), FormKind::Symplectic));
    CHECK_FALSE(is_admissible(Partition({2, 1}), FormKind::Orthogonal));
    CHECK(is_admissible(Partition({2}), FormKind::Symplectic));
    CHECK(is_admissible(Partition(), FormKind::Orthogonal));
    for (int n = 0; n <= 10; ++n) {
      for (const auto& part : partitions_of(n)) {
        bool even_mult = true;
        for (int x : part.parts()) even_mult = even_mult && part.multiplicity(x) % 2 == 0;
        CHECK((is_admissible(part, FormKind::Orthogonal) && is_admissible(part, FormKind::Symplectic)) == even_mult);
        if (n % 2 == 1) CHECK_FALSE(is_admissible(part, FormKind::Symplectic));
      }
    }
  }

  TEST_CASE("juxtaposition") {
    CHECK(juxtapose(Partition({3, 3, 3, 3, 1}), Partition({2, 2, 1, 1})) == Partition({5, 5, 4, 4, 1}));
    CHECK(juxtapose(Partition({1, 1, 1, 1, 1}), Partition({2, 2, 2, 1, 1})) == Partition({3, 3, 3, 2, 2}));
    CHECK_THROWS_AS(juxtapose(Partition({1}), Partition({1, 1})), ConcatenationOrderError);
    CHECK(juxtapose(Partition(), Partition({2})) == Partition({2}));
    for (int n = 0; n <= 8; ++n) {
      for (const auto& part : partitions_of(n)) {
        for (int c = 0; c <= part.num_columns(); ++c) {
          const auto [left, right] = split_columns(part, c);
          CHECK(left.num_columns() == c);
          CHECK(juxtapose(left, right) == part);
        }
      }
    }
  }

  TEST_CASE("padded columns") {
    CHECK(Partition({2, 2, 1, 1}).padded_columns(FormKind::Symplectic) == std::vector<int>{4, 2});
    CHECK(Partition({2, 2, 1, 1}).padded_columns(FormKind::Orthogonal) == std::vector<int>{4, 2, 0});
    CHECK(Partition({3}).padded_columns(FormKind::Orthogonal) == std::vector<int>{1, 1, 1});
  }

  TEST_CASE("dominance") {
    CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
    CHECK_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
    CHECK(dominates(Partition({2, 2}), Partition({2, 2})));
    for (int n = 1; n <= 7; ++n) {
      for (const auto& a : partitions_of(n)) {
        CHECK(dominates(Partition({n}), a));
        for (const auto& b : partitions_of(n)) CHECK(dominates(a, b) == dominates(dual(b), dual(a)));
      }
    }
  }

  TEST_CASE("compositions") {
    CHECK(compositions_of(4).size() == 8);
    for (const auto& c : compositions_of(5)) {
      int total = 0;
      for (int x : c) total += x;
      CHECK(total == 5);
    }
  }
}
