#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>

#include "rigidual/freemod.hpp"
#include "rigidual/report.hpp"
#include "rigidual/topfree.hpp"

namespace rigidual {

/// Canonical pairing of a free-module element with a product-module element:
/// sum of p(x) f(x) over the (finite) support of p.
Scalar pairing(const FinVec& p, const ProVec& f);

/// Reconstructs the finitely supported coefficient vector of a linear functional
/// on the product module from its values on basis vectors. Requires a finite
/// index set; lazy sets raise "rigidity extraction requires finite enumeration".
/// Inverse of pairing in the sense that pairing(result, .) evaluates ell on
/// basis vectors.
FinVec finvec_of_functional(RingPtr ring, const IndexSet& index,
                            const std::function<Scalar(const Label&)>& ell);

/// Dual of a free-module map as a map of product modules: the transpose.
/// Columns of f become rows of the result, so row-finiteness is automatic and
/// the operation is total on enumerable codomains. For a lazy codomain pass
/// assume_row_finite to certify the interpretation; otherwise the call raises
/// "dual not representable (non-rigid direction)" rather than guessing.
RowMap alg_dual(const ColMap& f, bool assume_row_finite = false);

/// Dual of a product-module map as a map of free modules: rows of f become
/// columns of the result. Total, since rows are finite by invariant.
ColMap top_dual(const RowMap& f);

/// Universal lift: the unique continuous map out of the product module whose
/// composite with the coordinate inclusions realizes the given coefficient data.
/// coords maps each codomain label to its coefficient row over the domain.
RowMap sharp(RingPtr ring, IndexSet domain, IndexSet codomain,
             const std::map<Label, FinVec>& coords);

/// Entrywise comparison with a first-difference witness; finite index sets.
CheckResult entrywise_equal(const ColMap& a, const ColMap& b, const std::string& context);
CheckResult entrywise_equal(const RowMap& a, const RowMap& b, const std::string& context);

/// Checks top_dual(alg_dual(f)) == f entrywise and on sample vectors.
CheckResult check_lambda_naturality(const ColMap& f, std::span<const FinVec> samples);
/// Checks alg_dual(top_dual(f)) == f entrywise and on sample vectors.
CheckResult check_gamma_naturality(const RowMap& f, std::span<const FinVec> samples);

/// Support-growth witness for the non-rigid nested construction: over the ring
/// R = base^n, the diagonal functional on the n-fold product module has a
/// coefficient vector whose support is all n coordinates.
struct DiagonalDemoRow {
  int n = 0;
  std::size_t support_size = 0;
  bool all_coordinates_hit = false;
};
DiagonalDemoRow diagonal_support_demo(const RingPtr& base, int n);

}  // namespace rigidual
