#include "suites.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rigidual/duality.hpp"
#include "rigidual/json_io.hpp"
#include "rigidual/moncat.hpp"

namespace rigidual {
namespace {

// Deterministic across platforms: raw mt19937_64 output reduced by modulo.
// The standard distributions are implementation-defined and would break
// byte-stable reports.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }

  Scalar scalar(const RingPtr& r) {
    if (r->is_finite()) {
      auto elems = r->elements();
      return elems[below(elems.size())];
    }
    if (r->kind() == RingKind::rationals)
      return r->from_rational(static_cast<std::int64_t>(below(19)) - 9,
                              static_cast<std::int64_t>(below(9)) + 1);
    return r->from_int(static_cast<std::int64_t>(below(19)) - 9);
  }

  Scalar unit(const RingPtr& r) {
    if (r->is_finite()) {
      std::vector<Scalar> units;
      for (const Scalar& x : r->elements())
        if (r->is_unit(x)) units.push_back(x);
      return units[below(units.size())];
    }
    if (r->kind() == RingKind::rationals)
      return r->from_rational(static_cast<std::int64_t>(below(5)) + 1,
                              static_cast<std::int64_t>(below(5)) + 1);
    return below(2) ? r->from_int(-1) : r->one();
  }

  FinVec finvec(const RingPtr& r, const IndexSet& ix) {
    std::vector<std::pair<Label, Scalar>> entries;
    for (const Label& l : ix.labels())
      if (below(2)) entries.emplace_back(l, scalar(r));
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

IndexSet ints(int n) {
  std::vector<Label> labels;
  for (int i = 0; i < n; ++i) labels.push_back(Label::of(i));
  return IndexSet::of(labels);
}

int size_for_case(const SuiteConfig& cfg, Sampler& rng) {
  int cap = std::max(1, cfg.size);
  return 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap)));
}

// Adds one to the entry at the first (domain, codomain) coordinate pair.
ColMap corrupt(const ColMap& f) {
  RingPtr r = f.ring();
  IndexSet dom = f.domain(), cod = f.codomain();
  Label x0 = dom.labels().front(), y0 = cod.labels().front();
  std::map<Label, FinVec> cols;
  for (const Label& x : dom.labels()) {
    FinVec col = f.column(x);
    if (x == x0) col = col + FinVec::delta(r, cod, y0);
    cols.emplace(x, col);
  }
  return ColMap::from_columns(r, dom, cod, cols);
}

RowMap corrupt(const RowMap& f) {
  RingPtr r = f.ring();
  IndexSet dom = f.domain(), cod = f.codomain();
  Label b0 = dom.labels().front(), d0 = cod.labels().front();
  std::map<Label, FinVec> rows;
  for (const Label& d : cod.labels()) {
    FinVec row = f.row(d);
    if (d == d0) row = row + FinVec::delta(r, dom, b0);
    rows.emplace(d, row);
  }
  return RowMap::from_rows(r, dom, cod, rows);
}

TopMonoid corrupt(const TopMonoid& m) { return TopMonoid(corrupt(m.mul), m.unit); }
Coalgebra corrupt(const Coalgebra& c) { return Coalgebra(corrupt(c.comul), c.counit); }

CaseResult record(std::string id, std::string law, const CheckResult& res) {
  return CaseResult{std::move(id), std::move(law), res.ok, res.witness};
}

CaseResult record_control(std::string id, std::string law, bool detected,
                          const std::string& how) {
  return CaseResult{std::move(id), std::move(law), detected,
                    detected ? "" : "seeded corruption went undetected: " + how};
}

// ---------------------------------------------------------------------------
// Monoid generator families, rotated by case number.

TopMonoid scaled_diagonal_monoid(const RingPtr& r, const IndexSet& ix, Sampler& rng) {
  IndexSet sq = IndexSet::product(ix, ix);
  std::map<Label, FinVec> rows;
  std::vector<std::pair<Label, Scalar>> eta;
  for (const Label& x : ix.labels()) {
    Scalar c = rng.unit(r);
    rows.emplace(x, FinVec::delta(r, sq, Label::pair(x, x)).scaled(c));
    eta.emplace_back(x, r->inverse(c));
  }
  return TopMonoid(RowMap::from_rows(r, sq, ix, rows),
                   ProVec::from_finvec(FinVec::from_entries(r, ix, eta)));
}

TopMonoid cyclic_convolution_monoid(const RingPtr& r, int n) {
  IndexSet ix = ints(n);
  IndexSet sq = IndexSet::product(ix, ix);
  std::map<Label, FinVec> rows;
  for (int d = 0; d < n; ++d) {
    std::vector<std::pair<Label, Scalar>> entries;
    for (int a = 0; a < n; ++a)
      entries.emplace_back(Label::pair(Label::of(a), Label::of((d - a + n) % n)), r->one());
    rows.emplace(Label::of(d), FinVec::from_entries(r, sq, entries));
  }
  return TopMonoid(RowMap::from_rows(r, sq, ix, rows),
                   ProVec::from_finvec(FinVec::delta(r, ix, Label::of(0))));
}

// Left-zero semigroup on n - 1 points with an adjoined unit at 0: for nonunit
// x, y the product is x. Associative and noncommutative once n >= 3.
TopMonoid left_zero_monoid(const RingPtr& r, int n) {
  IndexSet ix = ints(n);
  IndexSet sq = IndexSet::product(ix, ix);
  auto times = [](std::int64_t x, std::int64_t y) { return x == 0 ? y : (y == 0 ? x : x); };
  std::map<Label, FinVec> rows;
  for (int d = 0; d < n; ++d) {
    std::vector<std::pair<Label, Scalar>> entries;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (times(x, y) == d) entries.emplace_back(Label::pair(Label::of(x), Label::of(y)), r->one());
    rows.emplace(Label::of(d), FinVec::from_entries(r, sq, entries));
  }
  return TopMonoid(RowMap::from_rows(r, sq, ix, rows),
                   ProVec::from_finvec(FinVec::delta(r, ix, Label::of(0))));
}

TopMonoid monoid_family(int which, const RingPtr& r, int n, Sampler& rng) {
  switch (which % 4) {
    case 0: return hadamard_monoid(r, ints(n));
    case 1: return scaled_diagonal_monoid(r, ints(n), rng);
    case 2: return cyclic_convolution_monoid(r, n);
    default: return n >= 3 ? left_zero_monoid(r, n) : cyclic_convolution_monoid(r, n);
  }
}

const char* monoid_family_name(int which, int n) {
  switch (which % 4) {
    case 0: return "pointwise";
    case 1: return "scaled diagonal";
    case 2: return "cyclic convolution";
    default: return n >= 3 ? "left-zero with unit" : "cyclic convolution";
  }
}

// ---------------------------------------------------------------------------
// Suites.

std::vector<CaseResult> duality_suite(const RingPtr& r, const SuiteConfig& cfg) {
  std::vector<CaseResult> out;
  for (int i = 0; i < cfg.cases; ++i) {
    Sampler rng(cfg.seed * 1000003 + static_cast<std::uint64_t>(i));
    IndexSet dom = ints(size_for_case(cfg, rng));
    IndexSet cod = ints(size_for_case(cfg, rng));
    ColMap f = rng.colmap(r, dom, cod);
    RowMap g = rng.rowmap(r, dom, cod);
    std::vector<FinVec> samples;
    for (int s = 0; s < 4; ++s) samples.push_back(rng.finvec(r, dom));

    CheckResult res = check_lambda_naturality(f, samples);
    res.merge(check_gamma_naturality(g, samples));
    // Adjunction equations on random elements.
    for (int s = 0; s < 4 && res.ok; ++s) {
      FinVec v = rng.finvec(r, dom);
      ProVec w = ProVec::from_finvec(rng.finvec(r, cod));
      if (!(pairing(f.apply(v), w) == pairing(v, alg_dual(f).apply(w))))
        res = CheckResult::fail("adjunction equation fails for the column map");
      FinVec u = rng.finvec(r, cod);
      ProVec wd = ProVec::from_finvec(rng.finvec(r, dom));
      if (res.ok && !(pairing(u, g.apply(wd)) == pairing(top_dual(g).apply(u), wd)))
        res = CheckResult::fail("adjunction equation fails for the row map");
    }
    // Contravariance against a second pair.
    IndexSet mid = ints(size_for_case(cfg, rng));
    ColMap f2 = rng.colmap(r, cod, mid);
    RowMap g2 = rng.rowmap(r, cod, mid);
    res.merge(entrywise_equal(alg_dual(compose(f2, f)),
                              compose(alg_dual(f), alg_dual(f2)), "contravariance (columns)"));
    res.merge(entrywise_equal(top_dual(compose(g2, g)),
                              compose(top_dual(g), top_dual(g2)), "contravariance (rows)"));
    out.push_back(record("case-" + std::to_string(i + 1),
                         "double dual round trip, adjunction, contravariance", res));
  }

  Sampler rng(cfg.seed + 777);
  IndexSet ix = ints(std::max(2, cfg.size));
  ColMap f = rng.colmap(r, ix, ix);
  bool detected = !entrywise_equal(top_dual(alg_dual(f)), corrupt(f), "control").ok;
  out.push_back(record_control("control-1", "seeded corruption is detected", detected,
                               "double dual compared against a bumped entry"));
  if (cfg.inject_corrupt)
    out.push_back(record("injected-corruption", "double dual equals a corrupted original",
                         entrywise_equal(top_dual(alg_dual(f)), corrupt(f), "injected")));
  return out;
}

std::vector<CaseResult> tensor_suite(const RingPtr& r, const SuiteConfig& cfg) {
  std::vector<CaseResult> out;
  for (int i = 0; i < cfg.cases; ++i) {
    Sampler rng(cfg.seed * 1000033 + static_cast<std::uint64_t>(i));
    IndexSet a = ints(size_for_case(cfg, rng));
    IndexSet b = ints(size_for_case(cfg, rng));
    std::vector<ColMap> colmaps{rng.colmap(r, a, b), rng.colmap(r, b, a)};
    std::vector<RowMap> rowmaps{rng.rowmap(r, a, b), rng.rowmap(r, b, a)};
    std::vector<FinVec> samples{rng.finvec(r, a), rng.finvec(r, b)};
    CheckResult res = check_monoidal_exchange(colmaps, rowmaps, samples);
    // Bifunctoriality on elements.
    if (res.ok) {
      FinVec u = rng.finvec(r, a), v = rng.finvec(r, b);
      ColMap f = rng.colmap(r, a, a), g = rng.colmap(r, b, b);
      if (!(kron(f, g).apply(kron(u, v)) == kron(f.apply(u), g.apply(v))))
        res = CheckResult::fail("kron of maps disagrees with kron of images");
      RowMap p = rng.rowmap(r, a, a), q = rng.rowmap(r, b, b);
      ProVec pu = ProVec::from_finvec(u), pv = ProVec::from_finvec(v);
      if (res.ok &&
          !ostar(p, q).apply(ostar(pu, pv)).equal_exhaustive(ostar(p.apply(pu), q.apply(pv))))
        res = CheckResult::fail("ostar of maps disagrees with ostar of images");
    }
    out.push_back(record("case-" + std::to_string(i + 1),
                         "transposition exchanges kron with ostar", res));
  }

  Sampler rng(cfg.seed + 781);
  IndexSet a = ints(std::max(2, cfg.size));
  ColMap f = rng.colmap(r, a, a);
  ColMap g = ColMap::identity(r, a);
  bool detected = !entrywise_equal(kron(f, g), kron(f, corrupt(g)), "control").ok;
  out.push_back(record_control("control-1", "seeded corruption is detected", detected,
                               "kron with a bumped factor compared equal"));
  if (cfg.inject_corrupt)
    out.push_back(record("injected-corruption", "kron equals kron with a corrupted factor",
                         entrywise_equal(kron(f, g), kron(f, corrupt(g)), "injected")));
  return out;
}

std::vector<CaseResult> monoid_suite(const RingPtr& r, const SuiteConfig& cfg) {
  std::vector<CaseResult> out;
  for (int i = 0; i < cfg.cases; ++i) {
    Sampler rng(cfg.seed * 1000211 + static_cast<std::uint64_t>(i));
    int n = size_for_case(cfg, rng);
    TopMonoid m = monoid_family(i, r, n, rng);
    CheckResult res = check_monoid_laws(m);
    // The unit acts as the identity on random elements too.
    for (int s = 0; s < 3 && res.ok; ++s) {
      ProVec v = ProVec::from_finvec(rng.finvec(r, m.index));
      if (!multiply(m, m.unit, v).equal_exhaustive(v) ||
          !multiply(m, v, m.unit).equal_exhaustive(v))
        res = CheckResult::fail("unit element fails to act as the identity");
    }
    out.push_back(record("case-" + std::to_string(i + 1),
                         std::string(monoid_family_name(i, n)) + " monoid laws", res));
  }

  Sampler rng(cfg.seed + 778);
  TopMonoid good = hadamard_monoid(r, ints(std::max(2, cfg.size)));
  bool detected = !check_monoid_laws(corrupt(good)).ok;
  out.push_back(record_control("control-1", "seeded corruption is detected", detected,
                               "bumped multiplication entry passes the law check"));
  if (cfg.inject_corrupt)
    out.push_back(record("injected-corruption", "corrupted multiplication satisfies monoid laws",
                         check_monoid_laws(corrupt(good))));
  return out;
}

std::vector<CaseResult> coalgebra_suite(const RingPtr& r, const SuiteConfig& cfg) {
  std::vector<CaseResult> out;
  for (int i = 0; i < cfg.cases; ++i) {
    Sampler rng(cfg.seed * 1000231 + static_cast<std::uint64_t>(i));
    int n = size_for_case(cfg, rng);
    CheckResult res;
    std::string law;
    if (i % 2 == 0) {
      law = "group-like coalgebra laws";
      res = check_coalgebra_laws(grouplike_coalgebra(r, ints(n)));
    } else {
      law = std::string("transpose of ") + monoid_family_name(i, n) + " monoid is a coalgebra";
      res = check_coalgebra_laws(dual_coalgebra(monoid_family(i, r, n, rng)));
    }
    out.push_back(record("case-" + std::to_string(i + 1), law, res));
  }

  Coalgebra good = grouplike_coalgebra(r, ints(std::max(2, cfg.size)));
  bool detected = !check_coalgebra_laws(corrupt(good)).ok;
  out.push_back(record_control("control-1", "seeded corruption is detected", detected,
                               "bumped comultiplication entry passes the law check"));
  if (cfg.inject_corrupt)
    out.push_back(record("injected-corruption", "corrupted comultiplication satisfies coalgebra laws",
                         check_coalgebra_laws(corrupt(good))));
  return out;
}

std::vector<CaseResult> dualization_suite(const RingPtr& r, const SuiteConfig& cfg) {
  std::vector<CaseResult> out;
  for (int i = 0; i < cfg.cases; ++i) {
    Sampler rng(cfg.seed * 1000249 + static_cast<std::uint64_t>(i));
    int n = size_for_case(cfg, rng);
    TopMonoid m = monoid_family(i, r, n, rng);
    CheckResult res;
    Coalgebra c = dual_coalgebra(m);
    if (!structurally_equal(dual_monoid(c), m))
      res = CheckResult::fail("monoid -> coalgebra -> monoid round trip drifts");
    if (res.ok && !structurally_equal(dual_coalgebra(dual_monoid(c)), c))
      res = CheckResult::fail("coalgebra -> monoid -> coalgebra round trip drifts");
    if (res.ok && is_commutative(m) != is_cocommutative(c))
      res = CheckResult::fail("commutativity does not transfer across the transpose");
    out.push_back(record("case-" + std::to_string(i + 1),
                         std::string(monoid_family_name(i, n)) + " transposition round trip", res));
  }

  IndexSet ix = ints(std::max(2, cfg.size));
  TopMonoid good = hadamard_monoid(r, ix);
  bool detected = !structurally_equal(dual_monoid(dual_coalgebra(corrupt(good))), good);
  out.push_back(record_control("control-1", "seeded corruption is detected", detected,
                               "corrupted round trip compared equal to the original"));
  // The pointwise/group-like correspondence is also pinned here.
  bool match = structurally_equal(dual_coalgebra(hadamard_monoid(r, ix)),
                                  grouplike_coalgebra(r, ix)) &&
               structurally_equal(dual_monoid(grouplike_coalgebra(r, ix)),
                                  hadamard_monoid(r, ix));
  out.push_back(CaseResult{"case-correspondence",
                           "pointwise monoid and group-like coalgebra are transposes", match,
                           match ? "" : "correspondence broken"});
  if (cfg.inject_corrupt) {
    bool equal = structurally_equal(dual_monoid(dual_coalgebra(corrupt(good))), good);
    out.push_back(CaseResult{"injected-corruption",
                             "corrupted round trip equals the original", equal,
                             equal ? "" : "round trip of a bumped multiplication differs"});
  }
  return out;
}

std::vector<CaseResult> coherence_suite(const RingPtr& r, const SuiteConfig& cfg) {
  std::vector<CaseResult> out;
  for (int i = 0; i < cfg.cases; ++i) {
    Sampler rng(cfg.seed * 1000253 + static_cast<std::uint64_t>(i));
    IndexSet a = ints(size_for_case(cfg, rng));
    IndexSet b = ints(size_for_case(cfg, rng));
    IndexSet c = ints(size_for_case(cfg, rng));
    FinVec u = rng.finvec(r, a), v = rng.finvec(r, b), w = rng.finvec(r, c);
    CheckResult res;

    // Associator on elements.
    IndexSet right = IndexSet::product(a, IndexSet::product(b, c));
    FinVec lhs = relabel(kron(kron(u, v), w),
                         [](const Label& l) {
                           return Label::pair(l.first().first(),
                                              Label::pair(l.first().second(), l.second()));
                         },
                         right);
    if (!(lhs == kron(u, kron(v, w))))
      res = CheckResult::fail("associator does not align the two triple products");

    // Unitors via the one-point index set.
    IndexSet unit_ix = IndexSet::unit();
    FinVec one = FinVec::delta(r, unit_ix, unit_ix.labels().front());
    if (res.ok) {
      FinVec lu = relabel(kron(one, v), [](const Label& l) { return l.second(); }, b);
      FinVec ru = relabel(kron(v, one), [](const Label& l) { return l.first(); }, b);
      if (!(lu == v && ru == v)) res = CheckResult::fail("unitors fail on an element");
    }

    // Swap on elements and its naturality through kron of maps.
    if (res.ok) {
      IndexSet ab = IndexSet::product(a, b), ba = IndexSet::product(b, a);
      FinVec swapped =
          relabel(kron(u, v), [](const Label& l) { return Label::pair(l.second(), l.first()); }, ba);
      if (!(swapped == kron(v, u))) res = CheckResult::fail("swap does not exchange the factors");
      if (res.ok) {
        ColMap f = rng.colmap(r, a, a), g = rng.colmap(r, b, b);
        ColMap sw_ab = ColMap::relabeling(r, ab, ba, [](const Label& l) {
          return Label::pair(l.second(), l.first());
        });
        ColMap sw_after = compose(sw_ab, kron(f, g));
        ColMap sw_before = compose(kron(g, f), sw_ab);
        res.merge(entrywise_equal(sw_after, sw_before, "swap naturality"));
      }
    }

    // Associator as a map commutes with triple tensor products.
    if (res.ok) {
      ColMap f = rng.colmap(r, a, a), g = rng.colmap(r, b, b), h = rng.colmap(r, c, c);
      IndexSet left = IndexSet::product(IndexSet::product(a, b), c);
      ColMap assoc = ColMap::relabeling(r, left, right, [](const Label& l) {
        return Label::pair(l.first().first(), Label::pair(l.first().second(), l.second()));
      });
      res.merge(entrywise_equal(compose(assoc, kron(kron(f, g), h)),
                                compose(kron(f, kron(g, h)), assoc), "associator naturality"));
    }

    out.push_back(record("case-" + std::to_string(i + 1),
                         "associator, unitors, and swap cohere with kron", res));
  }

  // Control: swapping the factors of delta_0 x delta_1 moves its only entry,
  // so comparing the swapped tensor against the unswapped one must fail.
  IndexSet two = ints(2);
  IndexSet sq = IndexSet::product(two, two);
  FinVec u = FinVec::delta(r, two, Label::of(0));
  FinVec v = FinVec::delta(r, two, Label::of(1));
  FinVec swapped =
      relabel(kron(u, v), [](const Label& l) { return Label::pair(l.second(), l.first()); }, sq);
  bool detected = !(swapped == kron(u, v));
  out.push_back(record_control("control-1", "seeded corruption is detected", detected,
                               "the swapped tensor compared equal to the unswapped one"));
  if (cfg.inject_corrupt)
    out.push_back(CaseResult{"injected-corruption", "swapped tensor equals the unswapped tensor",
                             swapped == kron(u, v),
                             "the swap moves the only nonzero entry from (0,1) to (1,0)"});
  return out;
}

std::vector<CaseResult> findual_suite(const RingPtr& r, const SuiteConfig& cfg) {
  if (!(r->kind() == RingKind::gf_p))
    throw std::invalid_argument("findual suite requires a prime field ring, got " + r->spec());
  std::vector<CaseResult> out;
  // Keep the functional enumeration within budget: |k|^n candidates.
  std::int64_t p = *r->order();
  int max_n = 1;
  std::uint64_t candidates = static_cast<std::uint64_t>(p);
  while (max_n < cfg.size && candidates <= cfg.budget / static_cast<std::uint64_t>(p)) {
    candidates *= static_cast<std::uint64_t>(p);
    ++max_n;
  }

  for (int i = 0; i < cfg.cases; ++i) {
    Sampler rng(cfg.seed * 1000289 + static_cast<std::uint64_t>(i));
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
    IndexSet ix = ints(n);
    CheckResult res = check_coreflexivity(r, ix, cfg.budget);
    if (res.ok) {
      // Random subspace annihilator accounting in the same ambient space.
      std::vector<FinVec> vs;
      std::uint64_t m = rng.below(static_cast<std::uint64_t>(n) + 1);
      for (std::uint64_t s = 0; s < m; ++s) vs.push_back(rng.finvec(r, ix));
      res.merge(check_codimension(SubspaceBasis::span(r, ix, vs)));
    }
    out.push_back(record("case-" + std::to_string(i + 1),
                         "coreflexivity and annihilator accounting at size " + std::to_string(n),
                         res));
  }

  // Control: the all-ones functional is not multiplicative once |X| > 1, so
  // the enumerator must reject it.
  IndexSet ix = ints(std::max(2, std::min(cfg.size, max_n)));
  std::vector<FinVec> homs = enumerate_algebra_homs(function_algebra(r, ix), cfg.budget);
  FinVec all_ones(r, ix);
  for (const Label& l : ix.labels()) all_ones = all_ones + FinVec::delta(r, ix, l);
  bool detected = std::find(homs.begin(), homs.end(), all_ones) == homs.end();
  out.push_back(record_control("control-1", "seeded corruption is detected", detected,
                               "a non-multiplicative functional was accepted as a hom"));
  if (cfg.inject_corrupt) {
    bool present = !detected;
    out.push_back(CaseResult{"injected-corruption",
                             "the all-ones functional is an algebra hom", present,
                             present ? "" : "it fails multiplicativity on distinct basis pairs"});
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"duality",   "tensor",      "monoid",
                                              "coalgebra", "dualization", "coherence",
                                              "findual"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  RingPtr r = Ring::parse(cfg.ring_spec);
  SuiteReport rep;
  rep.suite = name;
  rep.ring_spec = r->spec();
  rep.seed = cfg.seed;
  if (name == "duality")
    rep.cases = duality_suite(r, cfg);
  else if (name == "tensor")
    rep.cases = tensor_suite(r, cfg);
  else if (name == "monoid")
    rep.cases = monoid_suite(r, cfg);
  else if (name == "coalgebra")
    rep.cases = coalgebra_suite(r, cfg);
  else if (name == "dualization")
    rep.cases = dualization_suite(r, cfg);
  else if (name == "coherence")
    rep.cases = coherence_suite(r, cfg);
  else if (name == "findual")
    rep.cases = findual_suite(r, cfg);
  else
    throw std::invalid_argument("unknown suite: " + name);
  return rep;
}

}  // namespace rigidual
