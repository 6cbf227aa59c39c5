#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "rigidual/topfree.hpp"

using namespace rigidual;
using testutil::TestRng;

namespace {

IndexSet naturals() {
  return IndexSet::lazy("naturals",
                        [](const Label& l) { return l.is_int() && l.int_value() >= 0; });
}

}  // namespace

TEST_SUITE("topfree") {

TEST_CASE("finvec round trip through the oracle form") {
  TestRng rng(71);
  auto r = Ring::mod(6);
  auto ix = testutil::letters(4);
  for (int trial = 0; trial < 10; ++trial) {
    FinVec v = rng.finvec(r, ix);
    ProVec p = ProVec::from_finvec(v);
    for (const Label& l : ix.labels()) CHECK(p.eval(l) == v.coefficient(l));
    CHECK(p.to_finvec() == v);
  }
}

TEST_CASE("all-ones vector lives over an infinite index") {
  auto r = Ring::gf(5);
  ProVec u = ProVec::ones(r, naturals());
  CHECK(u.eval(Label::of(0)) == r->one());
  CHECK(u.eval(Label::of(123456)) == r->one());
  CHECK_THROWS_WITH_AS((void)u.to_finvec(), doctest::Contains("enumeration unavailable"),
                       std::runtime_error);
  CHECK_THROWS_AS((void)u.eval(Label::of(-3)), std::out_of_range);
}

TEST_CASE("pointwise addition and scaling") {
  TestRng rng(73);
  auto r = Ring::parse("GF(2)xGF(3)");
  auto ix = testutil::letters(5);
  for (int trial = 0; trial < 10; ++trial) {
    FinVec a = rng.finvec(r, ix), b = rng.finvec(r, ix);
    Scalar c = rng.scalar(r);
    ProVec sum = ProVec::from_finvec(a) + ProVec::from_finvec(b);
    ProVec sc = ProVec::from_finvec(a).scaled(c);
    for (const Label& l : ix.labels()) {
      CHECK(sum.eval(l) == r->add(a.coefficient(l), b.coefficient(l)));
      CHECK(sc.eval(l) == r->mul(c, a.coefficient(l)));
    }
  }
}

TEST_CASE("ostar evaluates as a pointwise product of coordinates") {
  TestRng rng(79);
  auto r = Ring::mod(6);
  auto xs = testutil::letters(3);
  auto ys = testutil::letters(4);
  for (int trial = 0; trial < 10; ++trial) {
    FinVec u = rng.finvec(r, xs), v = rng.finvec(r, ys);
    ProVec w = ostar(ProVec::from_finvec(u), ProVec::from_finvec(v));
    CHECK(w.index() == IndexSet::product(xs, ys));
    for (const Label& x : xs.labels())
      for (const Label& y : ys.labels())
        CHECK(w.eval(Label::pair(x, y)) == r->mul(u.coefficient(x), v.coefficient(y)));
    // Agreement with the free-side Kronecker product on finitary input.
    CHECK(w.to_finvec() == kron(u, v));
  }
}

TEST_CASE("ostar over infinite factors stays evaluable") {
  auto r = Ring::gf(3);
  ProVec w = ostar(ProVec::ones(r, naturals()), ProVec::ones(r, naturals()));
  CHECK(w.eval(Label::pair(Label::of(5), Label::of(9))) == r->one());
}

TEST_CASE("every vector is the discrete sum of its coordinate spikes") {
  TestRng rng(83);
  for (const char* spec : {"Z", "Z/6", "GF(5)"}) {
    auto r = Ring::parse(spec);
    auto ix = testutil::letters(5);
    for (int trial = 0; trial < 8; ++trial) {
      FinVec v = rng.finvec(r, ix);
      std::vector<ProVec> spikes;
      for (const Label& l : ix.labels())
        spikes.push_back(ProVec::from_finvec(FinVec::delta(r, ix, l).scaled(v.coefficient(l))));
      ProVec sum = discrete_sum(r, ix, spikes);
      CHECK(sum.equal_exhaustive(ProVec::from_finvec(v)));
    }
  }
}

TEST_CASE("an infinite spike family is summable when coordinates stay finite") {
  auto r = Ring::gf(2);
  auto ix = naturals();
  // Family {delta_n}: each coordinate sees exactly one contributor.
  ProVec sum = discrete_sum(r, ix, [r, ix](const Label& x) {
    return std::vector<ProVec>{ProVec::from_finvec(FinVec::delta(r, ix, x))};
  });
  CHECK(sum.eval(Label::of(0)) == r->one());
  CHECK(sum.eval(Label::of(424242)) == r->one());
}

TEST_CASE("too many contributors at one coordinate is an error") {
  auto r = Ring::gf(2);
  auto ix = testutil::letters(2);
  ProVec one = ProVec::ones(r, ix);
  ProVec sum = discrete_sum(
      r, ix, [one](const Label&) { return std::vector<ProVec>(5, one); }, 3);
  CHECK_THROWS_WITH_AS((void)sum.eval(Label::of("a")),
                       doctest::Contains("not summable (discrete)"), std::runtime_error);
}

TEST_CASE("probe and exhaustive equality") {
  auto r = Ring::mod(6);
  auto ix = testutil::letters(3);
  FinVec a = FinVec::delta(r, ix, Label::of("a"));
  FinVec b = FinVec::delta(r, ix, Label::of("b"));
  ProVec pa = ProVec::from_finvec(a), pb = ProVec::from_finvec(b);
  std::vector<Label> probe_c{Label::of("c")};
  CHECK(pa.equal_on(pb, probe_c));  // both vanish at c
  std::vector<Label> probe_a{Label::of("a")};
  CHECK_FALSE(pa.equal_on(pb, probe_a));
  CHECK_FALSE(pa.equal_exhaustive(pb));
  CHECK(pa.equal_exhaustive(ProVec::from_finvec(a)));
}

TEST_CASE("row map identity and zero") {
  TestRng rng(89);
  auto r = Ring::mod(6);
  auto ix = testutil::letters(4);
  RowMap id = RowMap::identity(r, ix);
  RowMap zero = RowMap::zero(r, ix, ix);
  for (int i = 0; i < 8; ++i) {
    FinVec v = rng.finvec(r, ix);
    CHECK(id.apply(ProVec::from_finvec(v)).equal_exhaustive(ProVec::from_finvec(v)));
    CHECK(zero.apply(ProVec::from_finvec(v)).equal_exhaustive(ProVec::zero(r, ix)));
  }
}

TEST_CASE("row map application matches the dense oracle") {
  TestRng rng(97);
  for (const char* spec : {"Z/6", "GF(7)", "Q"}) {
    auto r = Ring::parse(spec);
    auto dom = testutil::letters(4);
    auto cod = testutil::letters(3);
    for (int trial = 0; trial < 12; ++trial) {
      RowMap f = rng.rowmap(r, dom, cod);
      FinVec v = rng.finvec(r, dom);
      auto m = testutil::dense_of_rowmap(f);
      auto want = testutil::dense_apply(r, m, testutil::dense_of_finvec(v));
      ProVec got = f.apply(ProVec::from_finvec(v));
      for (std::size_t i = 0; i < cod.size(); ++i)
        CHECK(got.eval(cod.labels()[i]) == want[i]);
    }
  }
}

TEST_CASE("row map composition matches dense multiplication") {
  TestRng rng(101);
  auto r = Ring::mod(6);
  auto a = testutil::letters(3);
  auto b = testutil::letters(4);
  auto c = testutil::letters(2);
  for (int trial = 0; trial < 12; ++trial) {
    RowMap f = rng.rowmap(r, a, b);
    RowMap g = rng.rowmap(r, b, c);
    RowMap gf = compose(g, f);
    auto want = testutil::dense_mul(r, testutil::dense_of_rowmap(g), testutil::dense_of_rowmap(f));
    CHECK(testutil::dense_of_rowmap(gf) == want);
  }
}

TEST_CASE("row maps act on the whole product module, not just finitary vectors") {
  auto r = Ring::mod(6);
  auto ix = testutil::letters(3);
  std::map<Label, FinVec> rows;
  rows.emplace(Label::of("a"), FinVec::from_entries(r, ix, {{Label::of("a"), r->from_int(2)},
                                                            {Label::of("b"), r->from_int(3)}}));
  RowMap f = RowMap::from_rows(r, ix, ix, rows);
  ProVec img = f.apply(ProVec::ones(r, ix));
  CHECK(img.eval(Label::of("a")) == r->from_int(5));
  CHECK(img.eval(Label::of("b")).is_zero());
}

TEST_CASE("an infinite-index row map applies lazily") {
  auto r = Ring::mod(6);
  auto ix = naturals();
  // row(n) = 2 delta_n + delta_{n+1}: row-finite at every output coordinate.
  RowMap f = RowMap::from_oracle(r, ix, ix, [r, ix](const Label& d) {
    return FinVec::from_entries(r, ix,
                                {{d, r->from_int(2)}, {Label::of(d.int_value() + 1), r->one()}});
  });
  ProVec img = f.apply(ProVec::ones(r, ix));
  CHECK(img.eval(Label::of(0)) == r->from_int(3));
  CHECK(img.eval(Label::of(1000)) == r->from_int(3));
}

TEST_CASE("ostar on row maps matches the dense Kronecker product") {
  TestRng rng(103);
  auto r = Ring::gf(3);
  auto a = testutil::letters(2);
  auto b = testutil::letters(3);
  for (int trial = 0; trial < 10; ++trial) {
    RowMap f = rng.rowmap(r, a, a);
    RowMap g = rng.rowmap(r, b, b);
    RowMap fg = ostar(f, g);
    auto want =
        testutil::dense_kron(r, testutil::dense_of_rowmap(f), testutil::dense_of_rowmap(g));
    CHECK(testutil::dense_of_rowmap(fg) == want);
    FinVec u = rng.finvec(r, a);
    FinVec v = rng.finvec(r, b);
    ProVec lhs = fg.apply(ostar(ProVec::from_finvec(u), ProVec::from_finvec(v)));
    ProVec rhs = ostar(f.apply(ProVec::from_finvec(u)), g.apply(ProVec::from_finvec(v)));
    CHECK(lhs.equal_exhaustive(rhs));
  }
}

TEST_CASE("basis change along a cyclic shift") {
  auto r = Ring::mod(6);
  auto ix = testutil::letters(4);  // a b c d
  std::vector<std::pair<Label, Label>> shift;
  for (int i = 0; i < 4; ++i)
    shift.emplace_back(ix.labels()[i], ix.labels()[(i + 1) % 4]);
  RowMap f = basis_change(r, ix, ix, shift);
  // The image of delta_a concentrates at b.
  ProVec img = f.apply(ProVec::from_finvec(FinVec::delta(r, ix, Label::of("a"))));
  CHECK(img.eval(Label::of("b")) == r->one());
  CHECK(img.eval(Label::of("a")).is_zero());
  // Dense comparison against the permutation matrix.
  testutil::Dense perm(4, std::vector<Scalar>(4, r->zero()));
  for (int i = 0; i < 4; ++i) perm[(i + 1) % 4][i] = r->one();
  CHECK(testutil::dense_of_rowmap(f) == perm);
}

TEST_CASE("basis change rejects non-bijections") {
  auto r = Ring::mod(6);
  auto ix = testutil::letters(2);
  Label a = Label::of("a"), b = Label::of("b");
  CHECK_THROWS_WITH_AS((void)basis_change(r, ix, ix, {{a, a}, {a, b}}),
                       doctest::Contains("not a bijection"), std::invalid_argument);
  CHECK_THROWS_WITH_AS((void)basis_change(r, ix, ix, {{a, b}, {b, b}}),
                       doctest::Contains("not a bijection"), std::invalid_argument);
  CHECK_THROWS_WITH_AS((void)basis_change(r, ix, ix, {{a, a}}),
                       doctest::Contains("not a bijection"), std::invalid_argument);
}

TEST_CASE("relabeling rows are coordinate spikes") {
  auto r = Ring::gf(5);
  auto ix = testutil::letters(3);
  auto rot = [&](const Label& l) {  // inverse of the shift a->b->c->a
    std::size_t i = *ix.position(l);
    return ix.labels()[(i + 2) % 3];
  };
  RowMap f = RowMap::relabeling(r, ix, ix, rot);
  for (const Label& d : ix.labels()) {
    FinVec row = f.row(d);
    CHECK(row.support().size() == 1);
    CHECK(row.coefficient(rot(d)) == r->one());
  }
}

TEST_CASE("row and ring mismatches are rejected") {
  auto r = Ring::mod(6);
  auto ix = testutil::letters(2);
  std::map<Label, FinVec> rows;
  rows.emplace(Label::of("z"), FinVec::delta(r, ix, Label::of("a")));
  CHECK_THROWS_AS((void)RowMap::from_rows(r, ix, ix, rows), std::out_of_range);
  ProVec u = ProVec::ones(Ring::gf(2), ix);
  ProVec v = ProVec::ones(Ring::gf(3), ix);
  CHECK_THROWS_WITH_AS((void)(u + v), doctest::Contains("ring mismatch"), std::invalid_argument);
}

}  // TEST_SUITE
