#pragma once

#include <span>

#include "rigidual/duality.hpp"
#include "rigidual/freemod.hpp"
#include "rigidual/report.hpp"
#include "rigidual/topfree.hpp"

namespace rigidual {

/// Monoid object in the category of product modules: continuous multiplication
/// mul : R^(X x X) -> R^X and unit element in R^X. Laws are not enforced at
/// construction; run check_monoid_laws explicitly.
struct TopMonoid {
  RingPtr ring;
  IndexSet index;
  RowMap mul;
  ProVec unit;

  TopMonoid(RowMap mul_, ProVec unit_);
};

/// Coalgebra object in the category of free modules: comultiplication
/// comul : R^(X) -> R^(X x X) in column form and counit values on basis vectors.
struct Coalgebra {
  RingPtr ring;
  IndexSet index;
  ColMap comul;
  ProVec counit;

  Coalgebra(ColMap comul_, ProVec counit_);
};

/// Pointwise-multiplication monoid: mul row at x is the single entry (x, x) -> 1,
/// unit is the all-ones element.
TopMonoid hadamard_monoid(RingPtr ring, IndexSet index);

/// Coalgebra with every basis vector group-like: comul column at x is the basis
/// vector at (x, x), counit is 1 everywhere.
Coalgebra grouplike_coalgebra(RingPtr ring, IndexSet index);

/// Transposes a monoid into a coalgebra: comul = top_dual(mul), counit = unit
/// data reinterpreted as counit values. With verify set, monoid laws are checked
/// first and a violation raises.
Coalgebra dual_coalgebra(const TopMonoid& m, bool verify = false);

/// Transposes a coalgebra into a monoid: mul = alg_dual(comul), unit = counit
/// data reinterpreted as the unit element. Inverse of dual_coalgebra on the nose.
TopMonoid dual_monoid(const Coalgebra& c, bool verify = false);

/// Bilinear continuous product of two elements: coordinate d sums
/// mul.row(d)(a, b) u(a) v(b) over the finite row support.
ProVec multiply(const TopMonoid& m, const ProVec& u, const ProVec& v);

/// Associativity via map composition against the associator relabeling, unit
/// laws exhaustively on basis vectors. Finite index sets only.
CheckResult check_monoid_laws(const TopMonoid& m);
/// Coassociativity columnwise against the associator, counit laws columnwise.
CheckResult check_coalgebra_laws(const Coalgebra& c);

bool is_commutative(const TopMonoid& m);
bool is_cocommutative(const Coalgebra& c);

bool structurally_equal(const TopMonoid& a, const TopMonoid& b);
bool structurally_equal(const Coalgebra& a, const Coalgebra& b);

/// Exchange laws binding the tensor structures to dualization, checked on
/// explicit instances: transposition swaps kron with ostar (maps and elements),
/// double transposition fixes tensor products, and the one-point-unit
/// relabelings commute with everything. Consecutive list entries are paired.
CheckResult check_monoidal_exchange(std::span<const ColMap> colmaps,
                                    std::span<const RowMap> rowmaps,
                                    std::span<const FinVec> samples);

}  // namespace rigidual
