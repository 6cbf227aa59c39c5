#pragma once

// Independent dense-matrix and randomness helpers for tests. These deliberately
// avoid the sparse code paths under test: plain nested vectors, textbook loops.

#include <cstdint>
#include <random>
#include <vector>

#include "rigidual/freemod.hpp"
#include "rigidual/label.hpp"
#include "rigidual/rings.hpp"
#include "rigidual/topfree.hpp"

namespace testutil {

using namespace rigidual;

using Dense = std::vector<std::vector<Scalar>>;

inline std::vector<Scalar> dense_of_finvec(const FinVec& v) {
  std::vector<Scalar> out;
  out.reserve(v.index().size());
  for (const Label& x : v.index().labels()) out.push_back(v.coefficient(x));
  return out;
}

// Rows indexed by codomain positions, columns by domain positions.
inline Dense dense_of_colmap(const ColMap& f) {
  Dense m(f.codomain().size(), std::vector<Scalar>());
  for (auto& row : m) row.assign(f.domain().size(), f.ring()->zero());
  for (std::size_t j = 0; j < f.domain().size(); ++j) {
    FinVec col = f.column(f.domain().labels()[j]);
    for (std::size_t i = 0; i < f.codomain().size(); ++i)
      m[i][j] = col.coefficient(f.codomain().labels()[i]);
  }
  return m;
}

inline Dense dense_of_rowmap(const RowMap& f) {
  Dense m(f.codomain().size(), std::vector<Scalar>());
  for (auto& row : m) row.assign(f.domain().size(), f.ring()->zero());
  for (std::size_t i = 0; i < f.codomain().size(); ++i) {
    FinVec row = f.row(f.codomain().labels()[i]);
    for (std::size_t j = 0; j < f.domain().size(); ++j)
      m[i][j] = row.coefficient(f.domain().labels()[j]);
  }
  return m;
}

inline Dense dense_mul(const RingPtr& r, const Dense& a, const Dense& b) {
  std::size_t n = a.size(), k = b.size(), mcols = k ? b[0].size() : 0;
  Dense out(n, std::vector<Scalar>());
  for (std::size_t i = 0; i < n; ++i) {
    out[i].assign(mcols, r->zero());
    for (std::size_t j = 0; j < mcols; ++j)
      for (std::size_t t = 0; t < k; ++t) out[i][j] = out[i][j] + a[i][t] * b[t][j];
  }
  return out;
}

inline Dense dense_transpose(const RingPtr& r, const Dense& a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  Dense out(cols, std::vector<Scalar>());
  for (auto& row : out) row.assign(rows, r->zero());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = a[i][j];
  return out;
}

inline std::vector<Scalar> dense_apply(const RingPtr& r, const Dense& a,
                                       const std::vector<Scalar>& v) {
  std::vector<Scalar> out(a.size(), r->zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] = out[i] + a[i][j] * v[j];
  return out;
}

// Kronecker product in left-factor-major order, matching product enumeration.
inline Dense dense_kron(const RingPtr& r, const Dense& a, const Dense& b) {
  std::size_t ar = a.size(), ac = ar ? a[0].size() : 0;
  std::size_t br = b.size(), bc = br ? b[0].size() : 0;
  Dense out(ar * br, std::vector<Scalar>());
  for (auto& row : out) row.assign(ac * bc, r->zero());
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t p = 0; p < br; ++p)
        for (std::size_t q = 0; q < bc; ++q)
          out[i * br + p][j * bc + q] = a[i][j] * b[p][q];
  return out;
}

class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }

  Scalar scalar(const RingPtr& r) {
    if (r->is_finite()) {
      auto elems = r->elements();
      return elems[below(elems.size())];
    }
    if (r->kind() == RingKind::rationals) {
      std::int64_t num = static_cast<std::int64_t>(below(19)) - 9;
      std::int64_t den = static_cast<std::int64_t>(below(9)) + 1;
      return r->from_rational(num, den);
    }
    return r->from_int(static_cast<std::int64_t>(below(19)) - 9);
  }

  FinVec finvec(const RingPtr& r, const IndexSet& ix) {
    std::vector<std::pair<Label, Scalar>> entries;
    for (const Label& x : ix.labels())
      if (below(2) == 0) entries.emplace_back(x, scalar(r));
    return FinVec::from_entries(r, ix, entries);
  }

  ColMap colmap(const RingPtr& r, const IndexSet& dom, const IndexSet& cod) {
    std::map<Label, FinVec> cols;
    for (const Label& x : dom.labels()) cols.emplace(x, finvec(r, cod));
    return ColMap::from_columns(r, dom, cod, cols);
  }

  RowMap rowmap(const RingPtr& r, const IndexSet& dom, const IndexSet& cod) {
    std::map<Label, FinVec> rows;
    for (const Label& d : cod.labels()) rows.emplace(d, finvec(r, dom));
    return RowMap::from_rows(r, dom, cod, rows);
  }

 private:
  std::mt19937_64 eng_;
};

inline IndexSet letters(int n) {
  std::vector<Label> out;
  for (int i = 0; i < n; ++i) out.push_back(Label::of(std::string(1, static_cast<char>('a' + i))));
  return IndexSet::of(std::move(out));
}

}  // namespace testutil
