#pragma once

#include <string>

#include <json.hpp>

#include "rigidual/findual.hpp"
#include "rigidual/freemod.hpp"
#include "rigidual/label.hpp"
#include "rigidual/moncat.hpp"
#include "rigidual/report.hpp"
#include "rigidual/rings.hpp"
#include "rigidual/topfree.hpp"

namespace rigidual {

using nlohmann::json;

// Labels: int atoms as numbers, string atoms as strings, pairs as [first, second].
json label_to_json(const Label& x);
Label label_from_json(const json& j);

// Index sets: finite as label arrays, products as {"product": [left, right]}.
// Lazy sets have no serialized form.
json index_to_json(const IndexSet& ix);
IndexSet index_from_json(const json& j);

// Scalars: decimal strings, rationals "p/q", product elements as arrays.
json scalar_to_json(const Scalar& c);
Scalar scalar_from_json(const RingPtr& ring, const json& j);

// FinVec: {"index": ..., "entries": [[label, scalar], ...]} in index order.
json finvec_to_json(const FinVec& v);
FinVec finvec_from_json(const RingPtr& ring, const json& j);

// Dense coefficient array in index order (finite index sets).
json provec_to_json(const ProVec& v);
ProVec provec_from_json(const RingPtr& ring, const IndexSet& index, const json& j);

// Sparse triples [column label, row label, scalar], column-major in index order.
json colmap_to_json(const ColMap& f);
ColMap colmap_from_json(const RingPtr& ring, const IndexSet& domain, const IndexSet& codomain,
                        const json& j);
// Sparse triples [row label, column label, scalar], grouped by row in index order.
json rowmap_to_json(const RowMap& f);
RowMap rowmap_from_json(const RingPtr& ring, const IndexSet& domain, const IndexSet& codomain,
                        const json& j);

// Structure files. kind tags: "top-monoid", "coalgebra", "algebra".
json monoid_to_json(const TopMonoid& m);
TopMonoid monoid_from_json(const json& j);
json coalgebra_to_json(const Coalgebra& c);
Coalgebra coalgebra_from_json(const json& j);
json algebra_to_json(const FiniteAlgebra& a);
FiniteAlgebra algebra_from_json(const json& j);

json report_to_json(const SuiteReport& r);

/// Canonical bytes: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);

}  // namespace rigidual
