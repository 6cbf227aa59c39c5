#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rigidual/freemod.hpp"
#include "rigidual/label.hpp"
#include "rigidual/rings.hpp"

namespace rigidual {

/// Element of the full product module: a total coefficient oracle over the index
/// set, optionally with a finite support hint. Unlike FinVec, support may be
/// infinite; equality is probe-based unless the index set is finite.
class ProVec {
 public:
  static ProVec from_oracle(RingPtr ring, IndexSet index,
                            std::function<Scalar(const Label&)> oracle,
                            std::optional<std::vector<Label>> support_hint = std::nullopt);
  static ProVec from_finvec(const FinVec& v);
  static ProVec zero(RingPtr ring, IndexSet index);
  static ProVec ones(RingPtr ring, IndexSet index);

  const RingPtr& ring() const { return ring_; }
  const IndexSet& index() const { return index_; }
  const std::optional<std::vector<Label>>& support_hint() const { return support_hint_; }

  Scalar eval(const Label& x) const;  // error off the index
  /// Materializes the coefficients; needs a finite index or a support hint.
  FinVec to_finvec() const;

  ProVec operator+(const ProVec& other) const;
  ProVec scaled(const Scalar& c) const;

  bool equal_on(const ProVec& other, std::span<const Label> probes) const;
  /// Exhaustive comparison; finite index only.
  bool equal_exhaustive(const ProVec& other) const;

 private:
  ProVec(RingPtr ring, IndexSet index) : ring_(std::move(ring)), index_(std::move(index)) {}
  RingPtr ring_;
  IndexSet index_;
  std::function<Scalar(const Label&)> oracle_;
  std::optional<std::vector<Label>> support_hint_;
};

/// ostar(u, v)(x, y) = u(x) v(y) over the product index set.
ProVec ostar(const ProVec& u, const ProVec& v);

/// Coordinatewise sum of a family with finitely many contributors per coordinate.
/// The enumerator must return every family member that is nonzero at the given
/// coordinate; returning more than per_coordinate_bound members raises
/// "not summable (discrete)".
ProVec discrete_sum(RingPtr ring, IndexSet index,
                    std::function<std::vector<ProVec>(const Label&)> contributors_at,
                    std::uint64_t per_coordinate_bound = (std::uint64_t{1} << 20));
/// Finite-family convenience: every member is consulted at every coordinate.
ProVec discrete_sum(RingPtr ring, IndexSet index, const std::vector<ProVec>& family);

/// Continuous linear map of product modules in row form: row(d) lists the
/// finitely many input coordinates the output coordinate d depends on.
/// Row-finiteness is the whole computational content of continuity here, and it
/// is structural: rows are FinVecs by construction and stay finite under
/// composition and ostar.
class RowMap {
 public:
  static RowMap zero(RingPtr ring, IndexSet domain, IndexSet codomain);
  static RowMap identity(RingPtr ring, IndexSet index);
  static RowMap from_rows(RingPtr ring, IndexSet domain, IndexSet codomain,
                          const std::map<Label, FinVec>& rows);  // keyed by codomain label
  static RowMap from_oracle(RingPtr ring, IndexSet domain, IndexSet codomain,
                            std::function<FinVec(const Label&)> oracle);
  /// Coordinate relabeling: row(d) is the basis vector at inv(d), where inv maps
  /// codomain labels back through the underlying bijection.
  static RowMap relabeling(RingPtr ring, IndexSet domain, IndexSet codomain,
                           const std::function<Label(const Label&)>& inv);

  const RingPtr& ring() const { return ring_; }
  const IndexSet& domain() const { return domain_; }
  const IndexSet& codomain() const { return codomain_; }

  FinVec row(const Label& d) const;
  ProVec apply(const ProVec& v) const;
  /// Entrywise; both codomains must be finite.
  bool operator==(const RowMap& other) const;

 private:
  RowMap(RingPtr ring, IndexSet domain, IndexSet codomain)
      : ring_(std::move(ring)), domain_(std::move(domain)), codomain_(std::move(codomain)) {}
  RingPtr ring_;
  IndexSet domain_, codomain_;
  std::map<Label, FinVec> rows_;  // nonzero rows only
  std::function<FinVec(const Label&)> oracle_;
  bool materialized_ = true;
};

/// compose(g, f) = g after f; rows stay finite.
RowMap compose(const RowMap& g, const RowMap& f);
/// ostar on maps: row(d, e) = kron(f.row(d), g.row(e)).
RowMap ostar(const RowMap& f, const RowMap& g);
/// Continuous isomorphism induced by a bijection of index sets, given as
/// (domain label, codomain label) pairs. Non-bijective input is rejected.
RowMap basis_change(RingPtr ring, IndexSet domain, IndexSet codomain,
                    const std::vector<std::pair<Label, Label>>& bijection);

}  // namespace rigidual
