#pragma once

#include <cstdint>
#include <vector>

#include "rigidual/freemod.hpp"
#include "rigidual/moncat.hpp"
#include "rigidual/report.hpp"

namespace rigidual {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 20;

/// Subspace of a finite-dimensional vector space over a field, held as a reduced
/// row-echelon basis (canonical: deterministic pivoting, pivots normalized to 1,
/// zeros above and below). Two subspaces are equal iff their canonical bases are.
class SubspaceBasis {
 public:
  /// Reduces a spanning list; dependent input just drops rank.
  static SubspaceBasis span(RingPtr field, IndexSet ambient, const std::vector<FinVec>& vectors);

  const RingPtr& field() const { return field_; }
  const IndexSet& ambient() const { return ambient_; }
  const std::vector<FinVec>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  bool contains(const FinVec& v) const;
  bool operator==(const SubspaceBasis& other) const;

 private:
  SubspaceBasis(RingPtr field, IndexSet ambient) : field_(std::move(field)), ambient_(std::move(ambient)) {}
  RingPtr field_;
  IndexSet ambient_;
  std::vector<FinVec> basis_;
};

/// Orthogonal complement under the coordinate pairing: all vectors pairing to
/// zero against every basis vector of w. Exact Gaussian elimination; requires a
/// field ("requires a field") and a finite ambient index.
SubspaceBasis annihilator(const SubspaceBasis& w);

/// dim(annihilator(w)) + dim(w) = dim(ambient), and the double annihilator
/// returns w itself.
CheckResult check_codimension(const SubspaceBasis& w);

/// Finite-dimensional associative unital algebra by structure constants:
/// mul.column(x, y) expands the product of basis elements x and y, one is the
/// unit element. Laws are the caller's responsibility.
struct FiniteAlgebra {
  RingPtr field;
  IndexSet index;
  ColMap mul;
  FinVec one;

  FiniteAlgebra(ColMap mul_, FinVec one_);
};

/// The algebra of functions on X with pointwise operations: basis products
/// e_x e_y = [x = y] e_x, unit all-ones.
FiniteAlgebra function_algebra(RingPtr field, IndexSet index);

/// Dual coalgebra of a finite-dimensional algebra: comultiplication is the
/// structure-constant transpose of mul, counit is evaluation at the unit.
Coalgebra finite_dual(const FiniteAlgebra& a);

/// All multiplicative unit-preserving linear functionals, found by enumerating
/// every functional over the (finite) field; each result is its coefficient
/// vector. Candidate count above the budget raises "enumeration budget exceeded".
std::vector<FinVec> enumerate_algebra_homs(const FiniteAlgebra& a,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

/// Three-clause check on the function algebra k^X over a finite field:
/// (1) its algebra homs are exactly the coordinate projections,
/// (2) its finite dual is the group-like coalgebra on X,
/// (3) each codimension-one ideal (a hom kernel) is the annihilator of the
///     matching one-dimensional subcoalgebra.
CheckResult check_coreflexivity(RingPtr field, const IndexSet& index,
                                std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace rigidual
