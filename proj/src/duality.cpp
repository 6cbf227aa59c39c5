#include "rigidual/duality.hpp"

#include <stdexcept>

namespace rigidual {

Scalar pairing(const FinVec& p, const ProVec& f) {
  if (!same_ring(p.ring(), f.ring()))
    throw std::invalid_argument("ring mismatch: " + p.ring()->spec() + " vs " + f.ring()->spec());
  if (!(p.index() == f.index()))
    throw std::invalid_argument("index mismatch: pairing operands");
  Scalar sum = p.ring()->zero();
  for (const auto& [x, c] : p.entries()) sum = sum + c * f.eval(x);
  return sum;
}

FinVec finvec_of_functional(RingPtr ring, const IndexSet& index,
                            const std::function<Scalar(const Label&)>& ell) {
  if (!index.is_finite())
    throw std::runtime_error("rigidity extraction requires finite enumeration");
  std::vector<std::pair<Label, Scalar>> entries;
  for (const Label& x : index.labels()) entries.emplace_back(x, ell(x));
  return FinVec::from_entries(std::move(ring), index, entries);
}

RowMap alg_dual(const ColMap& f, bool assume_row_finite) {
  // Column at x becomes row at x, so the dual is row-finite by construction.
  // A lazy codomain leaves the row data unverifiable as a whole family; demand
  // an explicit caller certificate instead of reinterpreting silently.
  if (!f.codomain().is_finite() && !assume_row_finite)
    throw std::runtime_error(
        "dual not representable (non-rigid direction): codomain is not finitely "
        "enumerable and no row-finiteness certificate was given");
  ColMap g = f;
  return RowMap::from_oracle(f.ring(), f.codomain(), f.domain(),
                             [g](const Label& x) { return g.column(x); });
}

ColMap top_dual(const RowMap& f) {
  RowMap g = f;
  return ColMap::from_oracle(f.ring(), f.codomain(), f.domain(),
                             [g](const Label& d) { return g.row(d); });
}

RowMap sharp(RingPtr ring, IndexSet domain, IndexSet codomain,
             const std::map<Label, FinVec>& coords) {
  return RowMap::from_rows(std::move(ring), std::move(domain), std::move(codomain), coords);
}

CheckResult entrywise_equal(const ColMap& a, const ColMap& b, const std::string& context) {
  if (!(a.domain() == b.domain()) || !(a.codomain() == b.codomain()))
    return CheckResult::fail(context + ": shape mismatch");
  for (const Label& x : a.domain().labels()) {
    FinVec ca = a.column(x), cb = b.column(x);
    if (!(ca == cb))
      return CheckResult::fail(context + ": column " + x.to_string() + " expected " + ca.to_string() +
                               ", got " + cb.to_string());
  }
  return CheckResult::pass();
}

CheckResult entrywise_equal(const RowMap& a, const RowMap& b, const std::string& context) {
  if (!(a.domain() == b.domain()) || !(a.codomain() == b.codomain()))
    return CheckResult::fail(context + ": shape mismatch");
  for (const Label& d : a.codomain().labels()) {
    FinVec ra = a.row(d), rb = b.row(d);
    if (!(ra == rb))
      return CheckResult::fail(context + ": row " + d.to_string() + " expected " + ra.to_string() +
                               ", got " + rb.to_string());
  }
  return CheckResult::pass();
}

CheckResult check_lambda_naturality(const ColMap& f, std::span<const FinVec> samples) {
  ColMap round = top_dual(alg_dual(f));
  CheckResult result = entrywise_equal(f, round, "double transpose of column map");
  if (!result.ok) return result;
  for (const FinVec& v : samples) {
    if (!(f.apply(v) == round.apply(v)))
      return CheckResult::fail("naturality square broke on sample " + v.to_string());
  }
  return CheckResult::pass();
}

CheckResult check_gamma_naturality(const RowMap& f, std::span<const FinVec> samples) {
  RowMap round = alg_dual(top_dual(f));
  CheckResult result = entrywise_equal(f, round, "double transpose of row map");
  if (!result.ok) return result;
  for (const FinVec& v : samples) {
    ProVec pv = ProVec::from_finvec(v);
    ProVec a = f.apply(pv), b = round.apply(pv);
    if (!a.equal_exhaustive(b))
      return CheckResult::fail("naturality square broke on sample " + v.to_string());
  }
  return CheckResult::pass();
}

DiagonalDemoRow diagonal_support_demo(const RingPtr& base, int n) {
  if (n < 1) throw std::invalid_argument("demo size must be positive");
  // Scalars live in R = base^n; the module is the n-fold product over R. The
  // diagonal functional f |-> (x |-> f(x)(x)) is R-linear, and its coefficient
  // vector hits every coordinate: entry at x is the x-th primitive idempotent.
  std::vector<RingPtr> copies(static_cast<std::size_t>(n), base);
  RingPtr r = Ring::product(std::move(copies));
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(Label::of(static_cast<std::int64_t>(i)));
  IndexSet index = IndexSet::of(std::move(labels));

  auto diagonal = [&](const ProVec& f) {
    if (n == 1) return f.eval(Label::of(std::int64_t{0}));
    std::vector<Scalar> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const Scalar component = f.eval(Label::of(static_cast<std::int64_t>(i)));
      parts.push_back(component.parts()[static_cast<std::size_t>(i)]);
    }
    return r->from_parts(std::move(parts));
  };

  FinVec coeffs = finvec_of_functional(r, index, [&](const Label& x) {
    return diagonal(ProVec::from_finvec(FinVec::delta(r, index, x)));
  });

  DiagonalDemoRow row;
  row.n = n;
  row.support_size = coeffs.support().size();
  row.all_coordinates_hit = true;
  for (const Label& x : index.labels())
    if (coeffs.coefficient(x).is_zero()) row.all_coordinates_hit = false;
  return row;
}

}  // namespace rigidual
