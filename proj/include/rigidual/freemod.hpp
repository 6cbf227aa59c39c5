#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rigidual/label.hpp"
#include "rigidual/rings.hpp"

namespace rigidual {

/// Finitely supported coefficient vector: an element of the free module on its
/// index set. Normal form stores no explicit zeros, so structural equality is
/// semantic equality.
class FinVec {
 public:
  FinVec(RingPtr ring, IndexSet index);  // zero vector
  static FinVec delta(RingPtr ring, IndexSet index, const Label& x);
  static FinVec from_entries(RingPtr ring, IndexSet index,
                             const std::vector<std::pair<Label, Scalar>>& entries);

  const RingPtr& ring() const { return ring_; }
  const IndexSet& index() const { return index_; }
  const std::map<Label, Scalar>& entries() const { return entries_; }
  std::vector<Label> support() const;
  Scalar coefficient(const Label& x) const;  // zero off the support, error off the index
  bool is_zero() const { return entries_.empty(); }

  FinVec operator+(const FinVec& other) const;
  FinVec operator-(const FinVec& other) const;
  FinVec operator-() const;
  FinVec scaled(const Scalar& c) const;
  bool operator==(const FinVec& other) const;

  std::string to_string() const;

 private:
  void put(const Label& x, const Scalar& c);  // accumulating insert, drops zeros
  RingPtr ring_;
  IndexSet index_;
  std::map<Label, Scalar> entries_;
  friend FinVec kron(const FinVec&, const FinVec&);
  friend class ColMap;
};

/// kron(u, v)(x, y) = u(x) v(y) over the product index set.
FinVec kron(const FinVec& u, const FinVec& v);

/// Pushes a vector along a label bijection into the target index set.
FinVec relabel(const FinVec& v, const std::function<Label(const Label&)>& fn, IndexSet target);

/// Linear map of free modules in column form: column(x) is the image of the
/// basis vector at x, each column finitely supported over the codomain.
/// Column-finiteness is structural, so every such map is representable.
/// Finite domains materialize their columns; lazy domains keep a column oracle.
class ColMap {
 public:
  static ColMap zero(RingPtr ring, IndexSet domain, IndexSet codomain);
  static ColMap identity(RingPtr ring, IndexSet index);
  static ColMap from_columns(RingPtr ring, IndexSet domain, IndexSet codomain,
                             const std::map<Label, FinVec>& columns);
  static ColMap from_oracle(RingPtr ring, IndexSet domain, IndexSet codomain,
                            std::function<FinVec(const Label&)> oracle);
  /// Basis relabeling along fn: column(x) is the basis vector at fn(x).
  static ColMap relabeling(RingPtr ring, IndexSet domain, IndexSet codomain,
                           const std::function<Label(const Label&)>& fn);

  const RingPtr& ring() const { return ring_; }
  const IndexSet& domain() const { return domain_; }
  const IndexSet& codomain() const { return codomain_; }

  FinVec column(const Label& x) const;
  FinVec apply(const FinVec& v) const;
  /// Entrywise; both domains must be finite.
  bool operator==(const ColMap& other) const;

 private:
  ColMap(RingPtr ring, IndexSet domain, IndexSet codomain)
      : ring_(std::move(ring)), domain_(std::move(domain)), codomain_(std::move(codomain)) {}
  RingPtr ring_;
  IndexSet domain_, codomain_;
  std::map<Label, FinVec> columns_;  // nonzero columns only
  std::function<FinVec(const Label&)> oracle_;
  bool materialized_ = true;
};

/// compose(g, f) = g after f.
ColMap compose(const ColMap& g, const ColMap& f);
/// kron on maps: column(x, y) = kron(f.column(x), g.column(y)).
ColMap kron(const ColMap& f, const ColMap& g);
/// Structure-constant transpose for finite index sets:
/// result.column(y)(x) = f.column(x)(y). This direction genuinely needs finite
/// enumeration; it is the finite-dimensional dual used by the finite-dual module.
ColMap transpose(const ColMap& f);

}  // namespace rigidual
