#include <doctest.h>

#include "springerkit/errors.hpp"
#include "springerkit/json_io.hpp"
#include "springerkit/nilpotent.hpp"

using namespace springerkit;

TEST_SUITE("json") {
  TEST_CASE("partition and tableau round trips") {
    const Partition p({2, 2, 1, 1});
    CHECK(to_json(p).dump() == "[2,2,1,1]");
    CHECK(partition_from_json(to_json(p)) == p);
    const auto d = DominoTableau::parse("03377,1448,1558,26,26");
    CHECK(domino_from_json(to_json(d)) == d);
    CHECK(to_json(d)["shape"] == Json::parse("[5,4,4,2,2]"));
    const StandardYoungTableau t({{1, 3}, {2}});
    CHECK(syt_from_json(to_json(t)) == t);
    CHECK_THROWS_AS(domino_from_json(Json::parse(R"({"shape":[2],"rows":[[1],[1]]})")), InvalidArgument);
    CHECK_THROWS_AS(partition_from_json(Json::parse("3")), InvalidArgument);
  }

  TEST_CASE("matrix round trip") {
    const auto m = skew_adjoint_model(Partition({3, 2, 2}), FormKind::Orthogonal);
    const Json j = matrix_to_json(*m.gram);
    CHECK(j[0][0].is_string());
    CHECK(matrix_from_json(Rationals{}, j) == *m.gram);
    const PrimeField f(5);
    const auto r = reduce_mod(m.x, f);
    CHECK(matrix_from_json(f, matrix_to_json(r)) == r);
    CHECK_THROWS_AS(matrix_from_json(Rationals{}, Json::parse(R"([["1"],["1","2"]])")), InvalidArgument);
  }
}
