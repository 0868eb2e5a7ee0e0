#include <doctest.h>

#include <algorithm>

#include "springerkit/errors.hpp"
#include "springerkit/nilpotent.hpp"

using namespace springerkit;

namespace {

std::int64_t sum_squares(const std::vector<int>& v) {
  std::int64_t s = 0;
  for (int x : v) s += std::int64_t{x} * x;
  return s;
}

std::int64_t odd_parts(const Partition& p) {
  return std::count_if(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 1; });
}

// Classical orbit dimension formulas for so_N and sp_N.
std::int64_t classical_orbit_dim(const Partition& p, FormKind kind) {
  const std::int64_t n = p.size();
  const std::int64_t half_sq = sum_squares(p.columns()) / 2;
  if (kind == FormKind::Symplectic) return n * (n + 1) / 2 - half_sq - odd_parts(p) / 2;
  return n * (n - 1) / 2 - half_sq + odd_parts(p) / 2;
}

bool nondegenerate(const QMatrix& g) { return rank(g) == g.rows(); }

}  // namespace

TEST_SUITE("nilpotent") {
  TEST_CASE("standard nilpotent") {
    const auto m = standard_nilpotent(Partition({3, 1}));
    CHECK(m.dim() == 4);
    CHECK(m.x(0, 1) == 1);
    CHECK(m.x(1, 2) == 1);
    CHECK(m.x(2, 3) == 0);
    CHECK(jordan_type(m.x) == Partition({3, 1}));
    CHECK(orbit_dim(m, Ambient::GeneralLinear) == gl_orbit_dimension(Partition({3, 1})));
    CHECK_THROWS_AS(orbit_dim(m, Ambient::FormPreserving), ModelError);
  }

  TEST_CASE("standard nilpotents round trip up to 12") {
    for (int n = 1; n <= 12; ++n)
      for (const auto& p : partitions_of(n)) CHECK(jordan_type(standard_nilpotent(p).x) == p);
  }

  TEST_CASE("skew-adjoint models of admissible partitions up to 10") {
    for (int n = 1; n <= 10; ++n) {
      for (const auto& p : partitions_of(n)) {
        for (FormKind k : {FormKind::Orthogonal, FormKind::Symplectic}) {
          if (!is_admissible(p, k)) {
            CHECK_THROWS_AS(skew_adjoint_model(p, k), AdmissibilityError);
            continue;
          }
          CAPTURE(p.to_string());
          const auto m = skew_adjoint_model(p, k);
          REQUIRE(m.gram);
          const QMatrix& g = *m.gram;
          CHECK(nondegenerate(g));
          CHECK(g.transpose() == (k == FormKind::Orthogonal ? g : Rationals{}.from_int(-1) * g));
          CHECK(is_skew_adjoint(m.x, g));
          CHECK(jordan_type(m.x) == p);
          const auto dim = orbit_dim(m, Ambient::FormPreserving);
          CHECK(dim % 2 == 0);
          CHECK(dim == classical_orbit_dim(p, k));
        }
      }
    }
  }

  TEST_CASE("form Lie algebra dimensions") {
    const auto sp = skew_adjoint_model(Partition({2, 2, 1, 1}), FormKind::Symplectic);
    CHECK(form_lie_algebra_basis(*sp.gram).size() == 21);
    const auto so = skew_adjoint_model(Partition({3, 2, 2}), FormKind::Orthogonal);
    CHECK(form_lie_algebra_basis(*so.gram).size() == 21);
    CHECK(orbit_dim(sp, Ambient::FormPreserving) == 10);
    CHECK(orbit_dim(sp, Ambient::GeneralLinear) == 16);
  }

  TEST_CASE("Levi data") {
    const auto levi = LeviData::trivial_orbits({2, 2});
    CHECK(levi.n() == 4);
    CHECK(levi.nilradical_dim() == 4);
    CHECK(levi.levi_orbit_dim() == 0);
    CHECK_THROWS_AS(LeviData({2}, {Partition({1})}), InvalidArgument);
    CHECK_THROWS_AS(LeviData({2, 1}, {Partition({2})}), InvalidArgument);
    CHECK_THROWS_AS(induced_orbit_sample(levi, 0, 1), InvalidArgument);
  }

  TEST_CASE("induced orbits from trivial Levi orbits are Richardson") {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& blocks : compositions_of(n)) {
        const auto levi = LeviData::trivial_orbits(blocks);
        const auto sample = induced_orbit_sample(levi, 32, 7);
        std::vector<int> sorted = blocks;
        std::sort(sorted.rbegin(), sorted.rend());
        CHECK(sample.orbit == dual(Partition(sorted)));
        CHECK(sample.orbit_dim == 2 * levi.nilradical_dim());
        CHECK(sample.dimension_matches());
      }
    }
  }

  TEST_CASE("induction from a nontrivial Levi orbit") {
    // Inducing the regular orbit of each gl_2 block gives the regular orbit.
    const LeviData levi({2, 2}, {Partition({2}), Partition({2})});
    const auto sample = induced_orbit_sample(levi, 16, 3);
    CHECK(sample.orbit == Partition({4}));
    CHECK(sample.expected_dim == 2 + 2 + 2 * 4);
    CHECK(sample.dimension_matches());
  }

  TEST_CASE("sampling is deterministic for a fixed seed") {
    const auto levi = LeviData({3, 2}, {Partition({2, 1}), Partition({1, 1})});
    const auto a = induced_orbit_sample(levi, 8, 42);
    const auto b = induced_orbit_sample(levi, 8, 42);
    CHECK(a.orbit == b.orbit);
    CHECK(a.orbit_dim == b.orbit_dim);
  }

  TEST_CASE("splitting by columns matches the diagram split") {
    const auto m = standard_nilpotent(Partition({2, 2, 1, 1}));
    const auto [q0, i0] = split_by_columns(m, 1, {});
    CHECK(q0 == Partition({1, 1, 1, 1}));
    CHECK(i0 == Partition({1, 1}));
    int cases = 0;
    for (int n = 1; n <= 10; ++n) {
      for (const auto& p : partitions_of(n)) {
        const auto model = standard_nilpotent(p);
        const auto row_space = [&](const QMatrix& a) {
          // Columns of a spanning Im a, as vectors.
          const auto echelon = reduced_row_echelon(a.transpose());
          std::vector<std::vector<mpq_class>> out;
          for (std::size_t r = 0; r < echelon.reduced.rows(); ++r) out.push_back(echelon.reduced.row(r));
          return out;
        };
        for (int l = 0; l <= p.num_columns(); ++l) {
          const auto expected = split_columns(p, l);
          std::vector<std::vector<std::vector<mpq_class>>> ms{{}};
          for (int j = l + 1; j <= p.num_columns(); ++j) ms.push_back(row_space(power(model.x, static_cast<unsigned>(j))));
          for (const auto& mb : ms) {
            const auto [quotient, image] = split_by_columns(model, l, mb);
            CHECK(quotient == expected.first);
            CHECK(image == expected.second);
            ++cases;
          }
        }
      }
    }
    CHECK(cases > 1000);
  }

  TEST_CASE("splitting by columns") {
    // x of type (3,1); M = Im x^1 is spanned by e_1, e_2 of the 3-block.
    const auto m = standard_nilpotent(Partition({3, 1}));
    const std::vector<std::vector<mpq_class>> im_x{{1, 0, 0, 0}, {0, 1, 0, 0}};
    const auto [quotient, image] = split_by_columns(m, 1, im_x);
    CHECK(image == Partition({2}));
    CHECK(quotient == Partition({1, 1}));
    const std::vector<std::vector<mpq_class>> top{{1, 0, 0, 0}};
    const auto [q2, i2] = split_by_columns(m, 1, top);
    CHECK(i2 == Partition({2}));
    CHECK(q2 == Partition({1, 1}));
    CHECK_THROWS_AS(split_by_columns(m, 1, {{0, 0, 1, 0}}), SubspaceError);
    CHECK_THROWS_AS(split_by_columns(m, 1, {{0, 0, 0, 1}}), SubspaceError);
  }
}
