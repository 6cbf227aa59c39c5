#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "rigidual/duality.hpp"

using namespace rigidual;
using testutil::TestRng;

namespace {

IndexSet naturals() {
  return IndexSet::lazy("naturals",
                        [](const Label& l) { return l.is_int() && l.int_value() >= 0; });
}

}  // namespace

TEST_SUITE("duality") {

TEST_CASE("pairing picks out coordinates and is bilinear") {
  TestRng rng(107);
  auto r = Ring::mod(6);
  auto ix = testutil::letters(4);
  for (int trial = 0; trial < 10; ++trial) {
    FinVec w = rng.finvec(r, ix);
    ProVec pw = ProVec::from_finvec(w);
    for (const Label& x : ix.labels())
      CHECK(pairing(FinVec::delta(r, ix, x), pw) == w.coefficient(x));
    FinVec u = rng.finvec(r, ix), v = rng.finvec(r, ix);
    Scalar c = rng.scalar(r);
    CHECK(pairing(u + v, pw) == r->add(pairing(u, pw), pairing(v, pw)));
    CHECK(pairing(u.scaled(c), pw) == r->mul(c, pairing(u, pw)));
  }
}

TEST_CASE("pairing against the all-ones vector sums the coefficients") {
  auto r = Ring::integers();
  auto ix = testutil::letters(3);
  FinVec v = FinVec::from_entries(
      r, ix, {{Label::of("a"), r->from_int(10)}, {Label::of("b"), r->from_int(21)}});
  CHECK(pairing(v, ProVec::ones(r, ix)) == r->from_int(31));
}

TEST_CASE("functionals on the product module are extraction round trips") {
  TestRng rng(109);
  for (const char* spec : {"Z", "Z/4", "Z/6", "GF(2)", "GF(5)", "Q", "GF(2)xGF(3)"}) {
    auto r = Ring::parse(spec);
    auto ix = testutil::letters(5);
    for (int trial = 0; trial < 10; ++trial) {
      FinVec w = rng.finvec(r, ix);
      // The functional is only consulted on basis spikes.
      auto ell = [&](const Label& x) { return w.coefficient(x); };
      CHECK(finvec_of_functional(r, ix, ell) == w);
    }
  }
}

TEST_CASE("extraction needs an enumerable index") {
  auto r = Ring::gf(2);
  CHECK_THROWS_WITH_AS(
      (void)finvec_of_functional(r, naturals(), [&](const Label&) { return r->one(); }),
      doctest::Contains("rigidity extraction requires finite enumeration"), std::runtime_error);
}

TEST_CASE("algebraic dual is the dense transpose") {
  TestRng rng(113);
  for (const char* spec : {"Z/6", "GF(7)", "Q"}) {
    auto r = Ring::parse(spec);
    auto dom = testutil::letters(4);
    auto cod = testutil::letters(3);
    for (int trial = 0; trial < 10; ++trial) {
      ColMap f = rng.colmap(r, dom, cod);
      RowMap d = alg_dual(f);
      CHECK(d.domain() == cod);
      CHECK(d.codomain() == dom);
      CHECK(testutil::dense_of_rowmap(d) ==
            testutil::dense_transpose(r, testutil::dense_of_colmap(f)));
    }
  }
}

TEST_CASE("algebraic dual satisfies the adjunction equation") {
  TestRng rng(127);
  auto r = Ring::mod(6);
  auto dom = testutil::letters(4);
  auto cod = testutil::letters(3);
  for (int trial = 0; trial < 15; ++trial) {
    ColMap f = rng.colmap(r, dom, cod);
    FinVec v = rng.finvec(r, dom);
    ProVec w = ProVec::from_finvec(rng.finvec(r, cod));
    CHECK(pairing(f.apply(v), w) == pairing(v, alg_dual(f).apply(w)));
  }
}

TEST_CASE("topological dual satisfies the adjunction equation") {
  TestRng rng(131);
  auto r = Ring::gf(5);
  auto dom = testutil::letters(4);
  auto cod = testutil::letters(3);
  for (int trial = 0; trial < 15; ++trial) {
    RowMap g = rng.rowmap(r, dom, cod);
    FinVec u = rng.finvec(r, cod);
    ProVec w = ProVec::from_finvec(rng.finvec(r, dom));
    CHECK(pairing(u, g.apply(w)) == pairing(top_dual(g).apply(u), w));
  }
}

TEST_CASE("double dual is the identity in both directions") {
  TestRng rng(137);
  auto r = Ring::mod(6);
  auto dom = testutil::letters(4);
  auto cod = testutil::letters(4);
  for (int trial = 0; trial < 10; ++trial) {
    ColMap f = rng.colmap(r, dom, cod);
    CHECK(top_dual(alg_dual(f)) == f);
    RowMap g = rng.rowmap(r, dom, cod);
    CHECK(alg_dual(top_dual(g)) == g);
  }
}

TEST_CASE("dualization is contravariant") {
  TestRng rng(139);
  auto r = Ring::gf(3);
  auto a = testutil::letters(3);
  auto b = testutil::letters(4);
  auto c = testutil::letters(2);
  for (int trial = 0; trial < 10; ++trial) {
    ColMap f = rng.colmap(r, a, b);
    ColMap g = rng.colmap(r, b, c);
    CHECK(alg_dual(compose(g, f)) == compose(alg_dual(f), alg_dual(g)));
    RowMap p = rng.rowmap(r, a, b);
    RowMap q = rng.rowmap(r, b, c);
    CHECK(top_dual(compose(q, p)) == compose(top_dual(p), top_dual(q)));
  }
}

TEST_CASE("dual of the identity is the identity") {
  auto r = Ring::mod(6);
  auto ix = testutil::letters(4);
  CHECK(alg_dual(ColMap::identity(r, ix)) == RowMap::identity(r, ix));
  CHECK(top_dual(RowMap::identity(r, ix)) == ColMap::identity(r, ix));
}

TEST_CASE("naturality checks accept honest maps") {
  TestRng rng(149);
  auto r = Ring::parse("GF(2)xGF(3)");
  auto ix = testutil::letters(4);
  std::vector<FinVec> samples;
  for (int i = 0; i < 5; ++i) samples.push_back(rng.finvec(r, ix));
  ColMap f = rng.colmap(r, ix, ix);
  CheckResult lam = check_lambda_naturality(f, samples);
  CHECK(lam.ok);
  RowMap g = rng.rowmap(r, ix, ix);
  CheckResult gam = check_gamma_naturality(g, samples);
  CHECK(gam.ok);
}

TEST_CASE("entrywise comparison reports a witness") {
  auto r = Ring::mod(6);
  auto ix = testutil::letters(2);
  ColMap id = ColMap::identity(r, ix);
  ColMap twice = ColMap::from_oracle(
      r, ix, ix, [r, ix](const Label& x) { return FinVec::delta(r, ix, x).scaled(r->from_int(2)); });
  CheckResult res = entrywise_equal(id, twice, "identity vs doubling");
  CHECK_FALSE(res.ok);
  CHECK(res.witness.find("identity vs doubling") != std::string::npos);
  CHECK(entrywise_equal(id, id, "same").ok);
}

TEST_CASE("lazy codomain needs a certificate for the algebraic dual") {
  auto r = Ring::mod(6);
  auto nat = naturals();
  ColMap shift = ColMap::from_oracle(r, nat, nat, [r, nat](const Label& x) {
    return FinVec::delta(r, nat, Label::of(x.int_value() + 1));
  });
  CHECK_THROWS_WITH_AS((void)alg_dual(shift),
                       doctest::Contains("dual not representable (non-rigid direction)"),
                       std::runtime_error);
  RowMap d = alg_dual(shift, /*assume_row_finite=*/true);
  // Row at x of the dual is the column at x: the spike at x+1.
  CHECK(d.row(Label::of(3)).coefficient(Label::of(4)) == r->one());
  CHECK(d.row(Label::of(3)).support().size() == 1);
}

TEST_CASE("universal lift realizes prescribed coefficient rows") {
  auto r = Ring::mod(6);
  auto dom = testutil::letters(3);
  auto cod = testutil::letters(2);
  std::map<Label, FinVec> coords;
  coords.emplace(Label::of("a"), FinVec::from_entries(r, dom, {{Label::of("a"), r->from_int(2)},
                                                               {Label::of("c"), r->from_int(5)}}));
  coords.emplace(Label::of("b"), FinVec::delta(r, dom, Label::of("b")));
  RowMap lift = sharp(r, dom, cod, coords);
  CHECK(lift.row(Label::of("a")) == coords.at(Label::of("a")));
  CHECK(lift.row(Label::of("b")) == coords.at(Label::of("b")));
  // Against a vector: coordinate d of the image is the pairing with row d.
  TestRng rng(151);
  FinVec v = rng.finvec(r, dom);
  ProVec img = lift.apply(ProVec::from_finvec(v));
  for (const Label& d : cod.labels())
    CHECK(img.eval(d) == pairing(coords.at(d), ProVec::from_finvec(v)));
}

TEST_CASE("diagonal functional support grows with the number of factors") {
  for (const RingPtr& base : {Ring::gf(2), Ring::mod(6)}) {
    for (int n : {1, 2, 3, 5, 8}) {
      DiagonalDemoRow row = diagonal_support_demo(base, n);
      CHECK(row.n == n);
      CHECK(row.support_size == static_cast<std::size_t>(n));
      CHECK(row.all_coordinates_hit);
    }
  }
}

}  // TEST_SUITE
