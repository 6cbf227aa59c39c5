#include "rigidual/topfree.hpp"

#include <algorithm>
#include <set>
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
// ProVec

ProVec ProVec::from_oracle(RingPtr ring, IndexSet index, std::function<Scalar(const Label&)> oracle,
                           std::optional<std::vector<Label>> support_hint) {
  ProVec v(std::move(ring), std::move(index));
  v.oracle_ = std::move(oracle);
  v.support_hint_ = std::move(support_hint);
  return v;
}

ProVec ProVec::from_finvec(const FinVec& f) {
  ProVec v(f.ring(), f.index());
  FinVec copy = f;
  v.oracle_ = [copy](const Label& x) { return copy.coefficient(x); };
  v.support_hint_ = copy.support();
  return v;
}

ProVec ProVec::zero(RingPtr ring, IndexSet index) {
  ProVec v(ring, std::move(index));
  Scalar z = ring->zero();
  v.oracle_ = [z](const Label&) { return z; };
  v.support_hint_ = std::vector<Label>{};
  return v;
}

ProVec ProVec::ones(RingPtr ring, IndexSet index) {
  ProVec v(ring, std::move(index));
  Scalar one = ring->one();
  v.oracle_ = [one](const Label&) { return one; };
  return v;
}

Scalar ProVec::eval(const Label& x) const {
  if (!index_.contains(x))
    throw std::out_of_range("label not in index set: " + x.to_string());
  Scalar c = oracle_(x);
  check_same_ring(ring_, c.ring());
  return c;
}

FinVec ProVec::to_finvec() const {
  std::vector<std::pair<Label, Scalar>> entries;
  if (support_hint_) {
    for (const Label& x : *support_hint_) entries.emplace_back(x, eval(x));
  } else if (index_.is_finite()) {
    for (const Label& x : index_.labels()) entries.emplace_back(x, eval(x));
  } else {
    throw std::runtime_error(
        "enumeration unavailable: support of an oracle vector over a lazy index set");
  }
  return FinVec::from_entries(ring_, index_, entries);
}

ProVec ProVec::operator+(const ProVec& other) const {
  check_same_ring(ring_, other.ring_);
  check_same_index(index_, other.index_, "vector addition");
  ProVec a = *this, b = other;
  std::optional<std::vector<Label>> hint;
  if (support_hint_ && other.support_hint_) {
    std::set<Label> merged(support_hint_->begin(), support_hint_->end());
    merged.insert(other.support_hint_->begin(), other.support_hint_->end());
    hint = std::vector<Label>(merged.begin(), merged.end());
  }
  return from_oracle(ring_, index_, [a, b](const Label& x) { return a.eval(x) + b.eval(x); },
                     std::move(hint));
}

ProVec ProVec::scaled(const Scalar& c) const {
  check_same_ring(ring_, c.ring());
  ProVec a = *this;
  return from_oracle(ring_, index_, [a, c](const Label& x) { return a.eval(x) * c; }, support_hint_);
}

bool ProVec::equal_on(const ProVec& other, std::span<const Label> probes) const {
  if (!same_ring(ring_, other.ring_) || !(index_ == other.index_)) return false;
  for (const Label& x : probes)
    if (!(eval(x) == other.eval(x))) return false;
  return true;
}

bool ProVec::equal_exhaustive(const ProVec& other) const {
  if (!same_ring(ring_, other.ring_) || !(index_ == other.index_)) return false;
  return equal_on(other, index_.labels());
}

ProVec ostar(const ProVec& u, const ProVec& v) {
  check_same_ring(u.ring(), v.ring());
  ProVec a = u, b = v;
  std::optional<std::vector<Label>> hint;
  if (u.support_hint() && v.support_hint()) {
    std::vector<Label> pairs;
    pairs.reserve(u.support_hint()->size() * v.support_hint()->size());
    for (const Label& x : *u.support_hint())
      for (const Label& y : *v.support_hint()) pairs.push_back(Label::pair(x, y));
    hint = std::move(pairs);
  }
  return ProVec::from_oracle(u.ring(), IndexSet::product(u.index(), v.index()),
                             [a, b](const Label& xy) { return a.eval(xy.first()) * b.eval(xy.second()); },
                             std::move(hint));
}

ProVec discrete_sum(RingPtr ring, IndexSet index,
                    std::function<std::vector<ProVec>(const Label&)> contributors_at,
                    std::uint64_t per_coordinate_bound) {
  RingPtr r = ring;
  return ProVec::from_oracle(
      std::move(ring), std::move(index),
      [r, contributors_at, per_coordinate_bound](const Label& x) {
        std::vector<ProVec> members = contributors_at(x);
        if (members.size() > per_coordinate_bound)
          throw std::runtime_error("not summable (discrete): " + std::to_string(members.size()) +
                                   " contributors at " + x.to_string());
        Scalar sum = r->zero();
        for (const ProVec& m : members) sum = sum + m.eval(x);
        return sum;
      });
}

ProVec discrete_sum(RingPtr ring, IndexSet index, const std::vector<ProVec>& family) {
  std::vector<ProVec> members = family;
  return discrete_sum(std::move(ring), std::move(index),
                      [members](const Label&) { return members; }, members.size() + 1);
}

// ---------------------------------------------------------------------------
// RowMap

RowMap RowMap::zero(RingPtr ring, IndexSet domain, IndexSet codomain) {
  return RowMap(std::move(ring), std::move(domain), std::move(codomain));
}

RowMap RowMap::identity(RingPtr ring, IndexSet index) {
  return relabeling(std::move(ring), index, index, [](const Label& d) { return d; });
}

RowMap RowMap::from_rows(RingPtr ring, IndexSet domain, IndexSet codomain,
                         const std::map<Label, FinVec>& rows) {
  RowMap f(std::move(ring), std::move(domain), std::move(codomain));
  for (const auto& [d, row] : rows) {
    check_same_ring(f.ring_, row.ring());
    if (!f.codomain_.contains(d))
      throw std::out_of_range("row label not in codomain: " + d.to_string());
    check_same_index(row.index(), f.domain_, "row index vs domain");
    if (!row.is_zero()) f.rows_.emplace(d, row);
  }
  return f;
}

RowMap RowMap::from_oracle(RingPtr ring, IndexSet domain, IndexSet codomain,
                           std::function<FinVec(const Label&)> oracle) {
  if (codomain.is_finite()) {
    std::map<Label, FinVec> rows;
    for (const Label& d : codomain.labels()) rows.emplace(d, oracle(d));
    return from_rows(std::move(ring), std::move(domain), std::move(codomain), rows);
  }
  RowMap f(std::move(ring), std::move(domain), std::move(codomain));
  f.materialized_ = false;
  f.oracle_ = std::move(oracle);
  return f;
}

RowMap RowMap::relabeling(RingPtr ring, IndexSet domain, IndexSet codomain,
                          const std::function<Label(const Label&)>& inv) {
  RingPtr r = ring;
  IndexSet dom = domain;
  return from_oracle(std::move(ring), std::move(domain), std::move(codomain),
                     [r, dom, inv](const Label& d) { return FinVec::delta(r, dom, inv(d)); });
}

FinVec RowMap::row(const Label& d) const {
  if (!codomain_.contains(d))
    throw std::out_of_range("label not in codomain: " + d.to_string());
  if (!materialized_) return oracle_(d);
  auto it = rows_.find(d);
  if (it != rows_.end()) return it->second;
  return FinVec(ring_, domain_);
}

ProVec RowMap::apply(const ProVec& v) const {
  check_same_ring(ring_, v.ring());
  check_same_index(v.index(), domain_, "vector index vs map domain");
  RowMap f = *this;
  ProVec arg = v;
  std::optional<std::vector<Label>> hint;
  if (materialized_ && v.support_hint()) {
    std::set<Label> support(v.support_hint()->begin(), v.support_hint()->end());
    std::vector<Label> out;
    for (const auto& [d, row] : rows_) {
      for (const auto& [b, c] : row.entries())
        if (support.count(b)) {
          out.push_back(d);
          break;
        }
    }
    hint = std::move(out);
  }
  return ProVec::from_oracle(ring_, codomain_,
                             [f, arg](const Label& d) {
                               Scalar sum = f.ring_->zero();
                               const FinVec row = f.row(d);
                               for (const auto& [b, c] : row.entries())
                                 sum = sum + c * arg.eval(b);
                               return sum;
                             },
                             std::move(hint));
}

bool RowMap::operator==(const RowMap& other) const {
  if (!same_ring(ring_, other.ring_) || !(domain_ == other.domain_) || !(codomain_ == other.codomain_))
    return false;
  for (const Label& d : codomain_.labels())
    if (!(row(d) == other.row(d))) return false;
  return true;
}

RowMap compose(const RowMap& g, const RowMap& f) {
  check_same_ring(g.ring(), f.ring());
  check_same_index(f.codomain(), g.domain(), "inner composition indices");
  return RowMap::from_oracle(f.ring(), f.domain(), g.codomain(), [g, f](const Label& d) {
    FinVec out(f.ring(), f.domain());
    const FinVec outer = g.row(d);
    for (const auto& [c, w] : outer.entries()) out = out + f.row(c).scaled(w);
    return out;
  });
}

RowMap ostar(const RowMap& f, const RowMap& g) {
  check_same_ring(f.ring(), g.ring());
  IndexSet domain = IndexSet::product(f.domain(), g.domain());
  IndexSet codomain = IndexSet::product(f.codomain(), g.codomain());
  return RowMap::from_oracle(f.ring(), std::move(domain), std::move(codomain),
                             [f, g](const Label& de) {
                               return kron(f.row(de.first()), g.row(de.second()));
                             });
}

RowMap basis_change(RingPtr ring, IndexSet domain, IndexSet codomain,
                    const std::vector<std::pair<Label, Label>>& bijection) {
  std::map<Label, Label> inverse;
  std::set<Label> seen_domain;
  for (const auto& [b, d] : bijection) {
    if (!domain.contains(b))
      throw std::out_of_range("bijection source not in domain: " + b.to_string());
    if (!codomain.contains(d))
      throw std::out_of_range("bijection target not in codomain: " + d.to_string());
    if (!seen_domain.insert(b).second)
      throw std::invalid_argument("not a bijection: repeated source " + b.to_string());
    if (!inverse.emplace(d, b).second)
      throw std::invalid_argument("not a bijection: repeated target " + d.to_string());
  }
  if (domain.is_finite() && bijection.size() != domain.size())
    throw std::invalid_argument("not a bijection: domain not covered");
  if (codomain.is_finite() && bijection.size() != codomain.size())
    throw std::invalid_argument("not a bijection: codomain not covered");
  RingPtr r = ring;
  IndexSet dom = domain;
  return RowMap::from_oracle(std::move(ring), std::move(domain), std::move(codomain),
                             [r, dom, inverse](const Label& d) {
                               auto it = inverse.find(d);
                               if (it == inverse.end())
                                 throw std::out_of_range("bijection misses codomain label " + d.to_string());
                               return FinVec::delta(r, dom, it->second);
                             });
}

}  // namespace rigidual
