#pragma once

#include <json.hpp>

#include "springerkit/domino.hpp"
#include "springerkit/exact.hpp"
#include "springerkit/flags.hpp"
#include "springerkit/partition.hpp"
#include "springerkit/tableau.hpp"

namespace springerkit {

using Json = nlohmann::json;

Json to_json(const Partition& p);                 // [2,2,1,1]
Partition partition_from_json(const Json& j);

Json to_json(const StandardYoungTableau& t);      // {"shape": [...], "rows": [[...], ...]}
StandardYoungTableau syt_from_json(const Json& j);
Json to_json(const DominoTableau& d);
DominoTableau domino_from_json(const Json& j);

/// Arrays of arrays of strings: "p/q" rationals or residues.
template <class Field>
Json matrix_to_json(const Matrix<Field>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Field>
Matrix<Field> matrix_from_json(const Field& field, const Json& j) {
  if (!j.is_array()) throw InvalidArgument("matrix JSON must be an array of rows");
  const std::size_t cols = j.empty() ? 0 : j.front().size();
  Matrix<Field> m(field, j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InvalidArgument("ragged matrix JSON");
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& e = j[r][c];
      m(r, c) = e.is_string() ? field.parse(e.get<std::string>()) : field.from_int(e.get<long>());
    }
  }
  return m;
}

/// {"subspaces": [basis of V_1, ..., basis of V_{n-1}]} with echelon bases.
Json to_json(const Flag& f);

}  // namespace springerkit
