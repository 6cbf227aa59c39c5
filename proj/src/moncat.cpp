#include "rigidual/moncat.hpp"

#include <stdexcept>

namespace rigidual {

namespace {

IndexSet expect_square_product(const IndexSet& ix, const char* what) {
  if (!ix.is_product()) throw std::invalid_argument(std::string(what) + ": expected a product index");
  if (!(ix.left() == ix.right()))
    throw std::invalid_argument(std::string(what) + ": product factors differ");
  return ix.left();
}

/// Swap relabeling on R^(X x X), continuous side: row at (a, b) is delta (b, a).
RowMap swap_rowmap(const RingPtr& ring, const IndexSet& x) {
  IndexSet sq = IndexSet::product(x, x);
  return RowMap::relabeling(ring, sq, sq,
                            [](const Label& ab) { return Label::pair(ab.second(), ab.first()); });
}

ColMap swap_colmap(const RingPtr& ring, const IndexSet& x) {
  IndexSet sq = IndexSet::product(x, x);
  return ColMap::relabeling(ring, sq, sq,
                            [](const Label& ab) { return Label::pair(ab.second(), ab.first()); });
}

/// Associator ((x,y),z) -> (x,(y,z)) as a continuous map.
RowMap assoc_rowmap(const RingPtr& ring, const IndexSet& x) {
  IndexSet sq = IndexSet::product(x, x);
  IndexSet from = IndexSet::product(sq, x);
  IndexSet to = IndexSet::product(x, sq);
  return RowMap::relabeling(ring, from, to, [](const Label& d) {
    // d = (x, (y, z)); preimage is ((x, y), z).
    return Label::pair(Label::pair(d.first(), d.second().first()), d.second().second());
  });
}

ColMap assoc_colmap(const RingPtr& ring, const IndexSet& x) {
  IndexSet sq = IndexSet::product(x, x);
  IndexSet from = IndexSet::product(sq, x);
  IndexSet to = IndexSet::product(x, sq);
  return ColMap::relabeling(ring, from, to, [](const Label& s) {
    return Label::pair(s.first().first(), Label::pair(s.first().second(), s.second()));
  });
}

}  // namespace

TopMonoid::TopMonoid(RowMap mul_, ProVec unit_)
    : ring(mul_.ring()), index(mul_.codomain()), mul(std::move(mul_)), unit(std::move(unit_)) {
  if (!same_ring(ring, unit.ring()))
    throw std::invalid_argument("ring mismatch: multiplication vs unit");
  expect_square_product(mul.domain(), "monoid multiplication domain");
  if (!(mul.domain().left() == index))
    throw std::invalid_argument("index mismatch: multiplication domain vs codomain");
  if (!(unit.index() == index)) throw std::invalid_argument("index mismatch: unit vs index");
}

Coalgebra::Coalgebra(ColMap comul_, ProVec counit_)
    : ring(comul_.ring()), index(comul_.domain()), comul(std::move(comul_)), counit(std::move(counit_)) {
  if (!same_ring(ring, counit.ring()))
    throw std::invalid_argument("ring mismatch: comultiplication vs counit");
  expect_square_product(comul.codomain(), "comultiplication codomain");
  if (!(comul.codomain().left() == index))
    throw std::invalid_argument("index mismatch: comultiplication codomain vs domain");
  if (!(counit.index() == index)) throw std::invalid_argument("index mismatch: counit vs index");
}

TopMonoid hadamard_monoid(RingPtr ring, IndexSet index) {
  IndexSet sq = IndexSet::product(index, index);
  RingPtr r = ring;
  RowMap mul = RowMap::from_oracle(ring, sq, index, [r, sq](const Label& x) {
    return FinVec::delta(r, sq, Label::pair(x, x));
  });
  return TopMonoid(std::move(mul), ProVec::ones(std::move(ring), std::move(index)));
}

Coalgebra grouplike_coalgebra(RingPtr ring, IndexSet index) {
  IndexSet sq = IndexSet::product(index, index);
  RingPtr r = ring;
  ColMap comul = ColMap::from_oracle(ring, index, sq, [r, sq](const Label& x) {
    return FinVec::delta(r, sq, Label::pair(x, x));
  });
  return Coalgebra(std::move(comul), ProVec::ones(std::move(ring), std::move(index)));
}

Coalgebra dual_coalgebra(const TopMonoid& m, bool verify) {
  if (verify) {
    CheckResult laws = check_monoid_laws(m);
    if (!laws.ok) throw std::runtime_error("law violation in monoid input: " + laws.witness);
  }
  return Coalgebra(top_dual(m.mul), m.unit);
}

TopMonoid dual_monoid(const Coalgebra& c, bool verify) {
  if (verify) {
    CheckResult laws = check_coalgebra_laws(c);
    if (!laws.ok) throw std::runtime_error("law violation in coalgebra input: " + laws.witness);
  }
  // Columns are finite by the ColMap invariant, which certifies row-finiteness
  // of the transpose even over lazy index sets.
  return TopMonoid(alg_dual(c.comul, /*assume_row_finite=*/true), c.counit);
}

ProVec multiply(const TopMonoid& m, const ProVec& u, const ProVec& v) {
  return m.mul.apply(ostar(u, v));
}

CheckResult check_monoid_laws(const TopMonoid& m) {
  const RingPtr& r = m.ring;
  const IndexSet& x = m.index;
  if (!x.is_finite())
    throw std::runtime_error("enumeration unavailable: monoid law check needs a finite index");
  RowMap id = RowMap::identity(r, x);

  RowMap lhs = compose(m.mul, ostar(m.mul, id));
  RowMap rhs = compose(compose(m.mul, ostar(id, m.mul)), assoc_rowmap(r, x));
  CheckResult result = entrywise_equal(lhs, rhs, "associativity");
  if (!result.ok) return result;

  // Unit legs: the unit element as a map from the one-point module, then
  // multiplication, must be the unit-relabeling isomorphism.
  IndexSet u = IndexSet::unit();
  const Label star = u.labels()[0];
  std::map<Label, FinVec> unit_rows;
  for (const Label& d : x.labels()) {
    Scalar c = m.unit.eval(d);
    unit_rows.emplace(d, FinVec::from_entries(r, u, {{star, c}}));
  }
  RowMap unit_map = RowMap::from_rows(r, u, x, unit_rows);

  RowMap left = compose(m.mul, ostar(unit_map, id));
  RowMap left_expect = RowMap::relabeling(r, IndexSet::product(u, x), x,
                                          [star](const Label& d) { return Label::pair(star, d); });
  result = entrywise_equal(left, left_expect, "left unit law");
  if (!result.ok) return result;

  RowMap right = compose(m.mul, ostar(id, unit_map));
  RowMap right_expect = RowMap::relabeling(r, IndexSet::product(x, u), x,
                                           [star](const Label& d) { return Label::pair(d, star); });
  return entrywise_equal(right, right_expect, "right unit law");
}

CheckResult check_coalgebra_laws(const Coalgebra& c) {
  const RingPtr& r = c.ring;
  const IndexSet& x = c.index;
  if (!x.is_finite())
    throw std::runtime_error("enumeration unavailable: coalgebra law check needs a finite index");
  ColMap id = ColMap::identity(r, x);

  ColMap lhs = compose(assoc_colmap(r, x), compose(kron(c.comul, id), c.comul));
  ColMap rhs = compose(kron(id, c.comul), c.comul);
  CheckResult result = entrywise_equal(lhs, rhs, "coassociativity");
  if (!result.ok) return result;

  IndexSet u = IndexSet::unit();
  const Label star = u.labels()[0];
  std::map<Label, FinVec> counit_cols;
  for (const Label& d : x.labels()) {
    Scalar v = c.counit.eval(d);
    counit_cols.emplace(d, FinVec::from_entries(r, u, {{star, v}}));
  }
  ColMap counit_map = ColMap::from_columns(r, x, u, counit_cols);

  ColMap left = compose(kron(counit_map, id), c.comul);
  ColMap left_expect = ColMap::relabeling(r, x, IndexSet::product(u, x),
                                          [star](const Label& d) { return Label::pair(star, d); });
  result = entrywise_equal(left, left_expect, "left counit law");
  if (!result.ok) return result;

  ColMap right = compose(kron(id, counit_map), c.comul);
  ColMap right_expect = ColMap::relabeling(r, x, IndexSet::product(x, u),
                                           [star](const Label& d) { return Label::pair(d, star); });
  return entrywise_equal(right, right_expect, "right counit law");
}

bool is_commutative(const TopMonoid& m) {
  return entrywise_equal(m.mul, compose(m.mul, swap_rowmap(m.ring, m.index)), "commutativity").ok;
}

bool is_cocommutative(const Coalgebra& c) {
  return entrywise_equal(c.comul, compose(swap_colmap(c.ring, c.index), c.comul), "cocommutativity").ok;
}

bool structurally_equal(const TopMonoid& a, const TopMonoid& b) {
  return same_ring(a.ring, b.ring) && a.index == b.index &&
         entrywise_equal(a.mul, b.mul, "").ok && a.unit.equal_exhaustive(b.unit);
}

bool structurally_equal(const Coalgebra& a, const Coalgebra& b) {
  return same_ring(a.ring, b.ring) && a.index == b.index &&
         entrywise_equal(a.comul, b.comul, "").ok && a.counit.equal_exhaustive(b.counit);
}

CheckResult check_monoidal_exchange(std::span<const ColMap> colmaps,
                                    std::span<const RowMap> rowmaps,
                                    std::span<const FinVec> samples) {
  CheckResult result = CheckResult::pass();

  for (std::size_t i = 0; i + 1 < colmaps.size(); i += 2) {
    const ColMap& f = colmaps[i];
    const ColMap& g = colmaps[i + 1];
    ColMap fg = kron(f, g);
    result.merge(entrywise_equal(alg_dual(fg), ostar(alg_dual(f), alg_dual(g)),
                                 "transpose of kron vs ostar of transposes"));
    result.merge(entrywise_equal(top_dual(alg_dual(fg)), fg, "double transpose on kron"));
    if (!result.ok) return result;
  }

  for (std::size_t i = 0; i + 1 < rowmaps.size(); i += 2) {
    const RowMap& f = rowmaps[i];
    const RowMap& g = rowmaps[i + 1];
    RowMap fg = ostar(f, g);
    result.merge(entrywise_equal(top_dual(fg), kron(top_dual(f), top_dual(g)),
                                 "transpose of ostar vs kron of transposes"));
    result.merge(entrywise_equal(alg_dual(top_dual(fg)), fg, "double transpose on ostar"));
    if (!result.ok) return result;
  }

  for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
    const FinVec& u = samples[i];
    const FinVec& v = samples[i + 1];
    ProVec lhs = ProVec::from_finvec(kron(u, v));
    ProVec rhs = ostar(ProVec::from_finvec(u), ProVec::from_finvec(v));
    if (!lhs.equal_exhaustive(rhs))
      return CheckResult::fail("ostar disagrees with kron on " + u.to_string() + " and " +
                               v.to_string());
  }

  // Unit legs: the one-point relabelings commute with transposition.
  if (!samples.empty()) {
    const FinVec& u = samples[0];
    const RingPtr& r = u.ring();
    IndexSet one = IndexSet::unit();
    const Label star = one.labels()[0];
    FinVec unit_one = FinVec::delta(r, one, star);
    FinVec padded = kron(u, unit_one);
    FinVec dropped = relabel(padded, [](const Label& xs) { return xs.first(); }, u.index());
    if (!(dropped == u))
      return CheckResult::fail("right unit relabeling failed on " + u.to_string());
    FinVec padded_left = kron(unit_one, u);
    FinVec dropped_left = relabel(padded_left, [](const Label& sx) { return sx.second(); }, u.index());
    if (!(dropped_left == u))
      return CheckResult::fail("left unit relabeling failed on " + u.to_string());
    ColMap unit_id = ColMap::identity(r, one);
    result.merge(entrywise_equal(top_dual(alg_dual(unit_id)), unit_id, "unit object round trip"));
  }

  return result;
}

}  // namespace rigidual
