#include "springerkit/json_io.hpp"

#include "springerkit/errors.hpp"

namespace springerkit {

Json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("partition JSON must be an array of integers");
  return Partition(j.get<std::vector<int>>());
}

Json to_json(const StandardYoungTableau& t) { return {{"shape", t.shape().parts()}, {"rows", t.rows()}}; }

StandardYoungTableau syt_from_json(const Json& j) {
  StandardYoungTableau t(j.at("rows").get<TableauRows>());
  if (j.contains("shape") && !(partition_from_json(j.at("shape")) == t.shape())) {
    throw InvalidArgument("tableau rows do not match the stated shape");
  }
  return t;
}

Json to_json(const DominoTableau& d) { return {{"shape", d.shape().parts()}, {"rows", d.rows()}}; }

DominoTableau domino_from_json(const Json& j) {
  DominoTableau d(j.at("rows").get<TableauRows>());
  if (j.contains("shape") && !(partition_from_json(j.at("shape")) == d.shape())) {
    throw InvalidArgument("tableau rows do not match the stated shape");
  }
  return d;
}

Json to_json(const Flag& f) {
  Json subspaces = Json::array();
  for (int i = 1; i < f.n(); ++i) subspaces.push_back(matrix_to_json(f[i].basis()));
  return {{"n", f.n()}, {"field", f.field().name()}, {"subspaces", std::move(subspaces)}};
}

}  // namespace springerkit
