#include "rigidual/json_io.hpp"

#include <stdexcept>

namespace rigidual {

json label_to_json(const Label& x) {
  if (x.is_int()) return json(x.int_value());
  if (x.is_string()) return json(x.string_value());
  return json::array({label_to_json(x.first()), label_to_json(x.second())});
}

Label label_from_json(const json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Label::of(j.get<std::int64_t>());
  if (j.is_string()) return Label::of(j.get<std::string>());
  if (j.is_array() && j.size() == 2)
    return Label::pair(label_from_json(j[0]), label_from_json(j[1]));
  throw std::invalid_argument("bad label: " + j.dump());
}

json index_to_json(const IndexSet& ix) {
  if (ix.is_product())
    return json{{"product", json::array({index_to_json(ix.left()), index_to_json(ix.right())})}};
  json out = json::array();
  for (const Label& x : ix.labels()) out.push_back(label_to_json(x));
  return out;
}

IndexSet index_from_json(const json& j) {
  if (j.is_array()) {
    std::vector<Label> labels;
    labels.reserve(j.size());
    for (const json& e : j) labels.push_back(label_from_json(e));
    return IndexSet::of(std::move(labels));
  }
  if (j.is_object() && j.contains("product") && j["product"].is_array() && j["product"].size() == 2)
    return IndexSet::product(index_from_json(j["product"][0]), index_from_json(j["product"][1]));
  throw std::invalid_argument("bad index set: " + j.dump());
}

json scalar_to_json(const Scalar& c) {
  if (c.ring()->kind() == RingKind::product) {
    json out = json::array();
    for (const Scalar& p : c.parts()) out.push_back(scalar_to_json(p));
    return out;
  }
  return json(c.to_string());
}

Scalar scalar_from_json(const RingPtr& ring, const json& j) {
  if (j.is_array()) {
    if (ring->kind() != RingKind::product)
      throw std::invalid_argument("bad scalar for " + ring->spec() + ": " + j.dump());
    if (j.size() != ring->factors().size())
      throw std::invalid_argument("component count mismatch: " + j.dump());
    std::vector<Scalar> parts;
    parts.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
      parts.push_back(scalar_from_json(ring->factors()[i], j[i]));
    return ring->from_parts(std::move(parts));
  }
  if (j.is_string()) return ring->parse_scalar(j.get<std::string>());
  if (j.is_number_integer() || j.is_number_unsigned()) return ring->from_int(j.get<std::int64_t>());
  throw std::invalid_argument("bad scalar: " + j.dump());
}

json finvec_to_json(const FinVec& v) {
  json entries = json::array();
  for (const Label& x : v.index().labels()) {
    Scalar c = v.coefficient(x);
    if (!c.is_zero()) entries.push_back(json::array({label_to_json(x), scalar_to_json(c)}));
  }
  return json{{"index", index_to_json(v.index())}, {"entries", std::move(entries)}};
}

FinVec finvec_from_json(const RingPtr& ring, const json& j) {
  if (!j.is_object() || !j.contains("index") || !j.contains("entries"))
    throw std::invalid_argument("bad vector: " + j.dump());
  IndexSet index = index_from_json(j["index"]);
  std::vector<std::pair<Label, Scalar>> entries;
  for (const json& e : j["entries"]) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("bad vector entry: " + e.dump());
    entries.emplace_back(label_from_json(e[0]), scalar_from_json(ring, e[1]));
  }
  return FinVec::from_entries(ring, std::move(index), entries);
}

json provec_to_json(const ProVec& v) {
  json out = json::array();
  for (const Label& x : v.index().labels()) out.push_back(scalar_to_json(v.eval(x)));
  return out;
}

ProVec provec_from_json(const RingPtr& ring, const IndexSet& index, const json& j) {
  if (!j.is_array() || j.size() != index.size())
    throw std::invalid_argument("bad dense vector: " + j.dump());
  std::vector<std::pair<Label, Scalar>> entries;
  for (std::size_t i = 0; i < j.size(); ++i)
    entries.emplace_back(index.labels()[i], scalar_from_json(ring, j[i]));
  return ProVec::from_finvec(FinVec::from_entries(ring, index, entries));
}

json colmap_to_json(const ColMap& f) {
  json out = json::array();
  for (const Label& x : f.domain().labels()) {
    const FinVec col = f.column(x);
    for (const auto& [y, c] : col.entries())
      out.push_back(json::array({label_to_json(x), label_to_json(y), scalar_to_json(c)}));
  }
  return out;
}

ColMap colmap_from_json(const RingPtr& ring, const IndexSet& domain, const IndexSet& codomain,
                        const json& j) {
  if (!j.is_array()) throw std::invalid_argument("bad column map: " + j.dump());
  std::map<Label, std::vector<std::pair<Label, Scalar>>> cols;
  for (const json& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("bad triple: " + t.dump());
    cols[label_from_json(t[0])].emplace_back(label_from_json(t[1]), scalar_from_json(ring, t[2]));
  }
  std::map<Label, FinVec> columns;
  for (const auto& [x, entries] : cols)
    columns.emplace(x, FinVec::from_entries(ring, codomain, entries));
  return ColMap::from_columns(ring, domain, codomain, columns);
}

json rowmap_to_json(const RowMap& f) {
  json out = json::array();
  for (const Label& d : f.codomain().labels()) {
    const FinVec row = f.row(d);
    for (const auto& [b, c] : row.entries())
      out.push_back(json::array({label_to_json(d), label_to_json(b), scalar_to_json(c)}));
  }
  return out;
}

RowMap rowmap_from_json(const RingPtr& ring, const IndexSet& domain, const IndexSet& codomain,
                        const json& j) {
  if (!j.is_array()) throw std::invalid_argument("bad row map: " + j.dump());
  std::map<Label, std::vector<std::pair<Label, Scalar>>> grouped;
  for (const json& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("bad triple: " + t.dump());
    grouped[label_from_json(t[0])].emplace_back(label_from_json(t[1]), scalar_from_json(ring, t[2]));
  }
  std::map<Label, FinVec> rows;
  for (const auto& [d, entries] : grouped)
    rows.emplace(d, FinVec::from_entries(ring, domain, entries));
  return RowMap::from_rows(ring, domain, codomain, rows);
}

json monoid_to_json(const TopMonoid& m) {
  return json{{"kind", "top-monoid"},
              {"ring", m.ring->spec()},
              {"index", index_to_json(m.index)},
              {"mu", rowmap_to_json(m.mul)},
              {"eta", provec_to_json(m.unit)}};
}

TopMonoid monoid_from_json(const json& j) {
  if (!j.is_object() || j.value("kind", "") != std::string("top-monoid"))
    throw std::invalid_argument("not a top-monoid file");
  RingPtr ring = Ring::parse(j.at("ring").get<std::string>());
  IndexSet index = index_from_json(j.at("index"));
  IndexSet sq = IndexSet::product(index, index);
  RowMap mul = rowmap_from_json(ring, sq, index, j.at("mu"));
  ProVec unit = provec_from_json(ring, index, j.at("eta"));
  return TopMonoid(std::move(mul), std::move(unit));
}

json coalgebra_to_json(const Coalgebra& c) {
  return json{{"kind", "coalgebra"},
              {"ring", c.ring->spec()},
              {"index", index_to_json(c.index)},
              {"delta", colmap_to_json(c.comul)},
              {"epsilon", provec_to_json(c.counit)}};
}

Coalgebra coalgebra_from_json(const json& j) {
  if (!j.is_object() || j.value("kind", "") != std::string("coalgebra"))
    throw std::invalid_argument("not a coalgebra file");
  RingPtr ring = Ring::parse(j.at("ring").get<std::string>());
  IndexSet index = index_from_json(j.at("index"));
  IndexSet sq = IndexSet::product(index, index);
  ColMap comul = colmap_from_json(ring, index, sq, j.at("delta"));
  ProVec counit = provec_from_json(ring, index, j.at("epsilon"));
  return Coalgebra(std::move(comul), std::move(counit));
}

namespace {

json finvec_dense_to_json(const FinVec& v) {
  json out = json::array();
  for (const Label& x : v.index().labels()) out.push_back(scalar_to_json(v.coefficient(x)));
  return out;
}

FinVec finvec_dense_from_json(const RingPtr& ring, const IndexSet& index, const json& j) {
  if (!j.is_array() || j.size() != index.size())
    throw std::invalid_argument("bad dense vector: " + j.dump());
  std::vector<std::pair<Label, Scalar>> entries;
  for (std::size_t i = 0; i < j.size(); ++i)
    entries.emplace_back(index.labels()[i], scalar_from_json(ring, j[i]));
  return FinVec::from_entries(ring, index, entries);
}

}  // namespace

json algebra_to_json(const FiniteAlgebra& a) {
  return json{{"kind", "algebra"},
              {"ring", a.field->spec()},
              {"index", index_to_json(a.index)},
              {"mul", colmap_to_json(a.mul)},
              {"one", finvec_dense_to_json(a.one)}};
}

FiniteAlgebra algebra_from_json(const json& j) {
  if (!j.is_object() || j.value("kind", "") != std::string("algebra"))
    throw std::invalid_argument("not an algebra file");
  RingPtr ring = Ring::parse(j.at("ring").get<std::string>());
  IndexSet index = index_from_json(j.at("index"));
  IndexSet sq = IndexSet::product(index, index);
  ColMap mul = colmap_from_json(ring, sq, index, j.at("mul"));
  FinVec one = finvec_dense_from_json(ring, index, j.at("one"));
  return FiniteAlgebra(std::move(mul), std::move(one));
}

json report_to_json(const SuiteReport& r) {
  json cases = json::array();
  for (const CaseResult& c : r.cases) {
    json entry{{"id", c.id}, {"law", c.law}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.witness.empty()) entry["witness"] = c.witness;
    cases.push_back(std::move(entry));
  }
  return json{{"suite", r.suite}, {"ring", r.ring_spec}, {"seed", r.seed}, {"cases", std::move(cases)}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace rigidual
