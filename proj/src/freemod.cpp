#include "rigidual/freemod.hpp"

#include <algorithm>
#include <stdexcept>

namespace rigidual {

namespace {

void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b))
    throw std::invalid_argument("ring mismatch: " + a->spec() + " vs " + b->spec());
}

void check_same_index(const IndexSet& a, const IndexSet& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string("index mismatch: ") + what);
}

}  // namespace

// ---------------------------------------------------------------------------
// FinVec

FinVec::FinVec(RingPtr ring, IndexSet index) : ring_(std::move(ring)), index_(std::move(index)) {}

FinVec FinVec::delta(RingPtr ring, IndexSet index, const Label& x) {
  if (!index.contains(x))
    throw std::out_of_range("label not in index set: " + x.to_string());
  FinVec v(std::move(ring), std::move(index));
  v.entries_.emplace(x, v.ring_->one());
  return v;
}

FinVec FinVec::from_entries(RingPtr ring, IndexSet index,
                            const std::vector<std::pair<Label, Scalar>>& entries) {
  FinVec v(std::move(ring), std::move(index));
  for (const auto& [x, c] : entries) {
    check_same_ring(v.ring_, c.ring());
    if (!v.index_.contains(x))
      throw std::out_of_range("label not in index set: " + x.to_string());
    v.put(x, c);
  }
  return v;
}

void FinVec::put(const Label& x, const Scalar& c) {
  auto it = entries_.find(x);
  if (it == entries_.end()) {
    if (!c.is_zero()) entries_.emplace(x, c);
    return;
  }
  Scalar sum = it->second + c;
  if (sum.is_zero())
    entries_.erase(it);
  else
    it->second = sum;
}

std::vector<Label> FinVec::support() const {
  std::vector<Label> out;
  out.reserve(entries_.size());
  for (const auto& [x, c] : entries_) out.push_back(x);
  return out;
}

Scalar FinVec::coefficient(const Label& x) const {
  auto it = entries_.find(x);
  if (it != entries_.end()) return it->second;
  if (!index_.contains(x))
    throw std::out_of_range("label not in index set: " + x.to_string());
  return ring_->zero();
}

FinVec FinVec::operator+(const FinVec& other) const {
  check_same_ring(ring_, other.ring_);
  check_same_index(index_, other.index_, "vector addition");
  FinVec out = *this;
  for (const auto& [x, c] : other.entries_) out.put(x, c);
  return out;
}

FinVec FinVec::operator-(const FinVec& other) const { return *this + (-other); }

FinVec FinVec::operator-() const {
  FinVec out(ring_, index_);
  for (const auto& [x, c] : entries_) out.entries_.emplace(x, -c);
  return out;
}

FinVec FinVec::scaled(const Scalar& c) const {
  check_same_ring(ring_, c.ring());
  FinVec out(ring_, index_);
  for (const auto& [x, v] : entries_) {
    Scalar s = v * c;
    if (!s.is_zero()) out.entries_.emplace(x, s);
  }
  return out;
}

bool FinVec::operator==(const FinVec& other) const {
  return same_ring(ring_, other.ring_) && index_ == other.index_ && entries_ == other.entries_;
}

std::string FinVec::to_string() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (const auto& [x, c] : entries_) {
    if (!out.empty()) out += " + ";
    out += c.to_string() + "*e[" + x.to_string() + "]";
  }
  return out;
}

FinVec kron(const FinVec& u, const FinVec& v) {
  check_same_ring(u.ring(), v.ring());
  FinVec out(u.ring(), IndexSet::product(u.index(), v.index()));
  for (const auto& [x, a] : u.entries())
    for (const auto& [y, b] : v.entries()) {
      Scalar c = a * b;
      if (!c.is_zero()) out.entries_.emplace(Label::pair(x, y), c);
    }
  return out;
}

FinVec relabel(const FinVec& v, const std::function<Label(const Label&)>& fn, IndexSet target) {
  std::vector<std::pair<Label, Scalar>> entries;
  entries.reserve(v.entries().size());
  for (const auto& [x, c] : v.entries()) entries.emplace_back(fn(x), c);
  return FinVec::from_entries(v.ring(), std::move(target), entries);
}

// ---------------------------------------------------------------------------
// ColMap

ColMap ColMap::zero(RingPtr ring, IndexSet domain, IndexSet codomain) {
  return ColMap(std::move(ring), std::move(domain), std::move(codomain));
}

ColMap ColMap::identity(RingPtr ring, IndexSet index) {
  return relabeling(std::move(ring), index, index, [](const Label& x) { return x; });
}

ColMap ColMap::from_columns(RingPtr ring, IndexSet domain, IndexSet codomain,
                            const std::map<Label, FinVec>& columns) {
  ColMap f(std::move(ring), std::move(domain), std::move(codomain));
  for (const auto& [x, col] : columns) {
    check_same_ring(f.ring_, col.ring());
    if (!f.domain_.contains(x))
      throw std::out_of_range("column label not in domain: " + x.to_string());
    check_same_index(col.index(), f.codomain_, "column index vs codomain");
    if (!col.is_zero()) f.columns_.emplace(x, col);
  }
  return f;
}

ColMap ColMap::from_oracle(RingPtr ring, IndexSet domain, IndexSet codomain,
                           std::function<FinVec(const Label&)> oracle) {
  if (domain.is_finite()) {
    std::map<Label, FinVec> columns;
    for (const Label& x : domain.labels()) columns.emplace(x, oracle(x));
    return from_columns(std::move(ring), std::move(domain), std::move(codomain), columns);
  }
  ColMap f(std::move(ring), std::move(domain), std::move(codomain));
  f.materialized_ = false;
  f.oracle_ = std::move(oracle);
  return f;
}

ColMap ColMap::relabeling(RingPtr ring, IndexSet domain, IndexSet codomain,
                          const std::function<Label(const Label&)>& fn) {
  RingPtr r = ring;
  IndexSet cod = codomain;
  return from_oracle(std::move(ring), std::move(domain), std::move(codomain),
                     [r, cod, fn](const Label& x) { return FinVec::delta(r, cod, fn(x)); });
}

FinVec ColMap::column(const Label& x) const {
  if (!domain_.contains(x))
    throw std::out_of_range("label not in domain: " + x.to_string());
  if (!materialized_) return oracle_(x);
  auto it = columns_.find(x);
  if (it != columns_.end()) return it->second;
  return FinVec(ring_, codomain_);
}

FinVec ColMap::apply(const FinVec& v) const {
  check_same_ring(ring_, v.ring());
  check_same_index(v.index(), domain_, "vector index vs map domain");
  FinVec out(ring_, codomain_);
  for (const auto& [x, c] : v.entries()) out = out + column(x).scaled(c);
  return out;
}

bool ColMap::operator==(const ColMap& other) const {
  if (!same_ring(ring_, other.ring_) || !(domain_ == other.domain_) || !(codomain_ == other.codomain_))
    return false;
  for (const Label& x : domain_.labels())
    if (!(column(x) == other.column(x))) return false;
  return true;
}

ColMap compose(const ColMap& g, const ColMap& f) {
  check_same_ring(g.ring(), f.ring());
  check_same_index(f.codomain(), g.domain(), "inner composition indices");
  return ColMap::from_oracle(f.ring(), f.domain(), g.codomain(),
                             [g, f](const Label& x) { return g.apply(f.column(x)); });
}

ColMap kron(const ColMap& f, const ColMap& g) {
  check_same_ring(f.ring(), g.ring());
  IndexSet domain = IndexSet::product(f.domain(), g.domain());
  IndexSet codomain = IndexSet::product(f.codomain(), g.codomain());
  return ColMap::from_oracle(f.ring(), std::move(domain), std::move(codomain),
                             [f, g](const Label& xy) {
                               return kron(f.column(xy.first()), g.column(xy.second()));
                             });
}

ColMap transpose(const ColMap& f) {
  const IndexSet& dom = f.domain();
  const IndexSet& cod = f.codomain();
  if (!dom.is_finite() || !cod.is_finite())
    throw std::runtime_error("enumeration unavailable: structure-constant transpose needs finite index sets");
  std::map<Label, FinVec> columns;
  for (const Label& y : cod.labels()) {
    std::vector<std::pair<Label, Scalar>> entries;
    for (const Label& x : dom.labels()) {
      Scalar c = f.column(x).coefficient(y);
      if (!c.is_zero()) entries.emplace_back(x, c);
    }
    columns.emplace(y, FinVec::from_entries(f.ring(), dom, entries));
  }
  return ColMap::from_columns(f.ring(), cod, dom, columns);
}

}  // namespace rigidual
