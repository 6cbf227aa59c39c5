#include "rigidual/findual.hpp"

#include <algorithm>
#include <stdexcept>

namespace rigidual {

namespace {

using DenseRow = std::vector<Scalar>;

DenseRow dense_of(const FinVec& v, const IndexSet& ambient) {
  DenseRow out;
  out.reserve(ambient.size());
  for (const Label& x : ambient.labels()) out.push_back(v.coefficient(x));
  return out;
}

FinVec finvec_of(const RingPtr& ring, const IndexSet& ambient, const DenseRow& row) {
  std::vector<std::pair<Label, Scalar>> entries;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (!row[i].is_zero()) entries.emplace_back(ambient.labels()[i], row[i]);
  return FinVec::from_entries(ring, ambient, entries);
}

/// In-place reduced row echelon form with deterministic pivoting: scan columns
/// left to right, take the first remaining row with a nonzero entry. Returns
/// pivot column indices; zero rows are removed.
std::vector<std::size_t> rref(const RingPtr& field, std::vector<DenseRow>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t found = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r)
      if (!rows[r][col].is_zero()) {
        found = r;
        break;
      }
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    Scalar inv = field->inverse(rows[next][col]);
    for (Scalar& c : rows[next]) c = c * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col];
      for (std::size_t j = 0; j < ncols; ++j) rows[r][j] = rows[r][j] - factor * rows[next][j];
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next, DenseRow());
  return pivots;
}

}  // namespace

SubspaceBasis SubspaceBasis::span(RingPtr field, IndexSet ambient, const std::vector<FinVec>& vectors) {
  if (!field->is_field())
    throw std::invalid_argument("requires a field: subspace arithmetic over " + field->spec());
  if (!ambient.is_finite())
    throw std::runtime_error("enumeration unavailable: subspace ambient must be finite");
  std::vector<DenseRow> rows;
  rows.reserve(vectors.size());
  for (const FinVec& v : vectors) {
    if (!same_ring(v.ring(), field)) throw std::invalid_argument("ring mismatch: subspace vector");
    if (!(v.index() == ambient)) throw std::invalid_argument("index mismatch: subspace vector");
    rows.push_back(dense_of(v, ambient));
  }
  rref(field, rows, ambient.size());
  SubspaceBasis w(field, ambient);
  w.basis_.reserve(rows.size());
  for (const DenseRow& row : rows) w.basis_.push_back(finvec_of(field, ambient, row));
  return w;
}

bool SubspaceBasis::contains(const FinVec& v) const {
  if (!same_ring(v.ring(), field_) || !(v.index() == ambient_)) return false;
  DenseRow work = dense_of(v, ambient_);
  for (const FinVec& b : basis_) {
    DenseRow row = dense_of(b, ambient_);
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot].is_zero()) ++pivot;
    if (pivot == row.size()) continue;
    Scalar factor = work[pivot];
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < work.size(); ++j) work[j] = work[j] - factor * row[j];
  }
  for (const Scalar& c : work)
    if (!c.is_zero()) return false;
  return true;
}

bool SubspaceBasis::operator==(const SubspaceBasis& other) const {
  return same_ring(field_, other.field_) && ambient_ == other.ambient_ && basis_ == other.basis_;
}

SubspaceBasis annihilator(const SubspaceBasis& w) {
  const RingPtr& field = w.field();
  const IndexSet& ambient = w.ambient();
  std::size_t n = ambient.size();
  std::vector<DenseRow> rows;
  rows.reserve(w.dim());
  for (const FinVec& b : w.basis()) rows.push_back(dense_of(b, ambient));
  std::vector<std::size_t> pivots = rref(field, rows, n);

  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  // One null-space generator per free column: 1 there, back-substituted pivot
  // entries elsewhere.
  std::vector<FinVec> generators;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    DenseRow v(n, field->zero());
    v[fc] = field->one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][fc];
    generators.push_back(finvec_of(field, ambient, v));
  }
  return SubspaceBasis::span(field, ambient, generators);
}

CheckResult check_codimension(const SubspaceBasis& w) {
  std::size_t n = w.ambient().size();
  SubspaceBasis ann = annihilator(w);
  if (ann.dim() + w.dim() != n)
    return CheckResult::fail("codimension mismatch: dim " + std::to_string(w.dim()) +
                             " + orthogonal dim " + std::to_string(ann.dim()) + " != ambient " +
                             std::to_string(n));
  SubspaceBasis back = annihilator(ann);
  if (!(back == w)) return CheckResult::fail("double orthogonal differs from the original subspace");
  return CheckResult::pass();
}

FiniteAlgebra::FiniteAlgebra(ColMap mul_, FinVec one_)
    : field(mul_.ring()), index(mul_.codomain()), mul(std::move(mul_)), one(std::move(one_)) {
  if (!field->is_field())
    throw std::invalid_argument("requires a field: structure-constant algebra over " + field->spec());
  if (!index.is_finite())
    throw std::runtime_error("enumeration unavailable: structure-constant algebra needs a finite basis");
  if (!same_ring(field, one.ring())) throw std::invalid_argument("ring mismatch: unit element");
  if (!(one.index() == index)) throw std::invalid_argument("index mismatch: unit element");
  if (!mul.domain().is_product() || !(mul.domain().left() == index) ||
      !(mul.domain().right() == index))
    throw std::invalid_argument("index mismatch: multiplication domain must be the basis square");
}

FiniteAlgebra function_algebra(RingPtr field, IndexSet index) {
  IndexSet sq = IndexSet::product(index, index);
  RingPtr k = field;
  IndexSet ix = index;
  ColMap mul = ColMap::from_oracle(field, sq, index, [k, ix](const Label& xy) {
    if (xy.first() == xy.second()) return FinVec::delta(k, ix, xy.first());
    return FinVec(k, ix);
  });
  std::vector<std::pair<Label, Scalar>> ones;
  for (const Label& x : index.labels()) ones.emplace_back(x, field->one());
  FinVec one = FinVec::from_entries(field, index, ones);
  return FiniteAlgebra(std::move(mul), std::move(one));
}

Coalgebra finite_dual(const FiniteAlgebra& a) {
  return Coalgebra(transpose(a.mul), ProVec::from_finvec(a.one));
}

std::vector<FinVec> enumerate_algebra_homs(const FiniteAlgebra& a, std::uint64_t budget) {
  const RingPtr& k = a.field;
  if (!k->is_finite())
    throw std::runtime_error("enumeration unavailable: hom search needs a finite field");
  std::vector<Scalar> elems = k->elements();
  std::size_t n = a.index.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > budget / elems.size() + 1) {
      total = budget + 1;
      break;
    }
    total *= elems.size();
  }
  if (total > budget)
    throw std::runtime_error("enumeration budget exceeded: " + std::to_string(elems.size()) + "^" +
                             std::to_string(n) + " candidate functionals over budget " +
                             std::to_string(budget));

  const std::vector<Label>& basis = a.index.labels();
  std::vector<FinVec> homs;
  std::vector<std::size_t> odo(n, 0);
  while (true) {
    // Candidate functional: basis vector x gets value elems[odo[position(x)]].
    auto value = [&](const Label& x) { return elems[odo[*a.index.position(x)]]; };
    Scalar at_unit = k->zero();
    for (const auto& [x, c] : a.one.entries()) at_unit = at_unit + c * value(x);
    bool good = at_unit == k->one();
    if (good) {
      for (std::size_t i = 0; i < n && good; ++i)
        for (std::size_t j = 0; j < n && good; ++j) {
          Scalar lhs = k->zero();
          const FinVec col = a.mul.column(Label::pair(basis[i], basis[j]));
          for (const auto& [z, c] : col.entries()) lhs = lhs + c * value(z);
          good = lhs == value(basis[i]) * value(basis[j]);
        }
    }
    if (good) {
      std::vector<std::pair<Label, Scalar>> entries;
      for (std::size_t i = 0; i < n; ++i) entries.emplace_back(basis[i], elems[odo[i]]);
      homs.push_back(FinVec::from_entries(k, a.index, entries));
    }
    // Odometer: last position fastest, so results come out in lexicographic
    // order of coefficient tuples.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++odo[pos] < elems.size()) break;
      odo[pos] = 0;
      if (pos == 0) return homs;
    }
    if (n == 0) return homs;
  }
}

CheckResult check_coreflexivity(RingPtr field, const IndexSet& index, std::uint64_t budget) {
  FiniteAlgebra a = function_algebra(field, index);

  std::vector<FinVec> homs = enumerate_algebra_homs(a, budget);
  std::vector<FinVec> projections;
  projections.reserve(index.size());
  for (const Label& x : index.labels()) projections.push_back(FinVec::delta(field, index, x));
  if (homs.size() != projections.size())
    return CheckResult::fail("expected " + std::to_string(projections.size()) +
                             " algebra homs, found " + std::to_string(homs.size()));
  for (const FinVec& p : projections) {
    if (std::find(homs.begin(), homs.end(), p) == homs.end())
      return CheckResult::fail("projection missing from hom set: " + p.to_string());
  }

  Coalgebra dual = finite_dual(a);
  if (!structurally_equal(dual, grouplike_coalgebra(field, index)))
    return CheckResult::fail("finite dual of the function algebra is not the group-like coalgebra");

  // Codimension-one ideals are the hom kernels; each must be the annihilator of
  // the matching one-dimensional subcoalgebra (the span of one group-like).
  for (const FinVec& hom : homs) {
    SubspaceBasis kernel = annihilator(SubspaceBasis::span(field, index, {hom}));
    Label grouplike_at = hom.support()[0];
    SubspaceBasis line = SubspaceBasis::span(field, index, {FinVec::delta(field, index, grouplike_at)});
    if (!(annihilator(line) == kernel))
      return CheckResult::fail("hom kernel is not the annihilator of the group-like line at " +
                               grouplike_at.to_string());
  }
  return CheckResult::pass();
}

}  // namespace rigidual
