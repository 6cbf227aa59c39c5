#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "rigidual/rings.hpp"

using namespace rigidual;
using testutil::TestRng;

namespace {

bool scalar_set_equal(std::vector<Scalar> a, std::vector<Scalar> b) {
  if (a.size() != b.size()) return false;
  for (const Scalar& x : a) {
    auto it = std::find(b.begin(), b.end(), x);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

std::vector<RingPtr> ring_zoo() {
  return {Ring::integers(),  Ring::rationals(), Ring::mod(4),
          Ring::mod(6),      Ring::gf(2),       Ring::gf(3),
          Ring::gf(5),       Ring::gf(7),       Ring::parse("GF(2)xGF(3)")};
}

}  // namespace

TEST_SUITE("rings") {

TEST_CASE("modular and field arithmetic matches plain integer reduction") {
  auto z6 = Ring::mod(6);
  CHECK(z6->mul(z6->from_int(2), z6->from_int(5)) == z6->from_int(4));
  auto gf5 = Ring::gf(5);
  CHECK(gf5->mul(gf5->from_int(2), gf5->from_int(3)) == gf5->from_int(1));

  // Exhaustive against the integer oracle for small moduli.
  for (std::int64_t n : {2, 4, 6, 9}) {
    auto r = Ring::mod(n);
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b) {
        CHECK(r->add(r->from_int(a), r->from_int(b)) == r->from_int((a + b) % n));
        CHECK(r->mul(r->from_int(a), r->from_int(b)) == r->from_int((a * b) % n));
      }
  }
}

TEST_CASE("additive inverses across the zoo") {
  TestRng rng(11);
  for (const RingPtr& r : ring_zoo())
    for (int i = 0; i < 20; ++i) {
      Scalar x = rng.scalar(r);
      CHECK(r->add(x, r->neg(x)).is_zero());
      CHECK(r->sub(x, x).is_zero());
    }
}

TEST_CASE("rational canonical form") {
  auto q = Ring::rationals();
  CHECK(q->from_rational(2, 4) == q->from_rational(1, 2));
  CHECK(q->from_rational(1, -2).to_string() == "-1/2");
  CHECK(q->from_rational(-4, -2).to_string() == "2");
  CHECK(q->add(q->from_rational(1, 3), q->from_rational(1, 6)) == q->from_rational(1, 2));
  CHECK_THROWS_AS((void)q->from_rational(1, 0), std::invalid_argument);
}

TEST_CASE("overflow is loud, never silent") {
  auto z = Ring::integers();
  Scalar big = z->from_int(std::int64_t{1} << 62);
  CHECK_THROWS_AS((void)z->mul(big, big), std::overflow_error);
  CHECK_THROWS_AS((void)z->add(big, z->mul(big, z->from_int(3))), std::overflow_error);
}

TEST_CASE("mixed-ring operands are rejected") {
  auto a = Ring::gf(2)->one();
  auto b = Ring::gf(3)->one();
  CHECK_THROWS_WITH_AS((void)(a + b), doctest::Contains("ring mismatch"), std::invalid_argument);
  CHECK_THROWS_WITH_AS((void)(a * b), doctest::Contains("ring mismatch"), std::invalid_argument);
}

TEST_CASE("idempotent enumeration") {
  auto z6 = Ring::mod(6);
  std::vector<Scalar> expected{z6->from_int(0), z6->from_int(1), z6->from_int(3), z6->from_int(4)};
  CHECK(scalar_set_equal(z6->idempotents(), expected));

  auto gf5 = Ring::gf(5);
  CHECK(scalar_set_equal(gf5->idempotents(), {gf5->zero(), gf5->one()}));

  auto prod = Ring::parse("Z/2xZ/3");
  CHECK(prod->idempotents().size() == 4);

  CHECK_THROWS_WITH_AS((void)Ring::integers()->idempotents(),
                       doctest::Contains("enumeration unavailable"), std::runtime_error);
}

TEST_CASE("idempotents of a product are componentwise") {
  for (const char* spec : {"Z/6xZ/4", "GF(2)xGF(3)", "Z/4xZ/9"}) {
    auto r = Ring::parse(spec);
    REQUIRE(*r->order() <= 64);
    auto left = r->factors()[0]->idempotents();
    auto right = r->factors()[1]->idempotents();
    std::vector<Scalar> expected;
    for (const Scalar& a : left)
      for (const Scalar& b : right) expected.push_back(r->from_parts({a, b}));
    CHECK(scalar_set_equal(r->idempotents(), expected));
  }
}

TEST_CASE("fields have exactly two idempotents") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    auto k = Ring::gf(p);
    CHECK(scalar_set_equal(k->idempotents(), {k->zero(), k->one()}));
  }
}

TEST_CASE("weak inverse closed forms and searches") {
  for (const RingPtr& r : ring_zoo())
    CHECK(r->weak_inverse(r->zero()).is_zero());

  auto gf5 = Ring::gf(5);
  CHECK(gf5->weak_inverse(gf5->from_int(2)) == gf5->from_int(3));

  auto z6 = Ring::mod(6);
  CHECK(z6->weak_inverse(z6->from_int(2)) == z6->from_int(2));

  auto z4 = Ring::mod(4);
  CHECK_THROWS_WITH_AS((void)z4->weak_inverse(z4->from_int(2)),
                       doctest::Contains("not von Neumann regular at 2"), std::domain_error);

  auto z = Ring::integers();
  CHECK(z->weak_inverse(z->from_int(-1)) == z->from_int(-1));
  CHECK_THROWS_AS((void)z->weak_inverse(z->from_int(2)), std::domain_error);
}

TEST_CASE("weak inverse laws on regular finite rings") {
  for (const char* spec : {"Z/6", "GF(2)", "GF(3)", "GF(5)", "GF(7)", "GF(2)xGF(3)", "Z/6xZ/2"}) {
    auto r = Ring::parse(spec);
    REQUIRE(r->is_von_neumann_regular());
    for (const Scalar& x : r->elements()) {
      Scalar y = r->weak_inverse(x);
      CHECK(r->mul(r->mul(x, y), x) == x);
      CHECK(r->mul(r->mul(y, x), y) == y);
      CHECK(r->weak_inverse(y) == x);  // involution
      Scalar e = r->mul(x, y);
      CHECK(r->mul(e, e) == e);  // idempotent witness
      CHECK(x.is_zero() == e.is_zero());
    }
  }
}

TEST_CASE("regularity verdicts") {
  CHECK(Ring::mod(6)->is_von_neumann_regular());
  CHECK_FALSE(Ring::mod(4)->is_von_neumann_regular());
  CHECK_FALSE(Ring::mod(8)->is_von_neumann_regular());
  CHECK_FALSE(Ring::mod(9)->is_von_neumann_regular());
  CHECK(Ring::gf(7)->is_von_neumann_regular());
  CHECK(Ring::rationals()->is_von_neumann_regular());
  CHECK_FALSE(Ring::integers()->is_von_neumann_regular());
  CHECK(Ring::parse("GF(2)xGF(3)")->is_von_neumann_regular());
  CHECK_FALSE(Ring::parse("GF(2)xZ/4")->is_von_neumann_regular());
}

TEST_CASE("product ring arithmetic is componentwise") {
  TestRng rng(23);
  for (const char* spec : {"GF(2)xGF(3)", "Z/4xZ/6"}) {
    auto r = Ring::parse(spec);
    REQUIRE(*r->order() <= 64);
    for (const Scalar& a : r->elements())
      for (const Scalar& b : r->elements()) {
        Scalar sum = r->add(a, b);
        Scalar prod = r->mul(a, b);
        for (std::size_t i = 0; i < r->factors().size(); ++i) {
          CHECK(sum.parts()[i] == r->factors()[i]->add(a.parts()[i], b.parts()[i]));
          CHECK(prod.parts()[i] == r->factors()[i]->mul(a.parts()[i], b.parts()[i]));
        }
      }
  }
}

TEST_CASE("product of two prime fields is the matching modular ring") {
  // Chinese remainder bijection x -> (x mod 2, x mod 3), verified elementwise.
  auto z6 = Ring::mod(6);
  auto prod = Ring::parse("GF(2)xGF(3)");
  CHECK(*prod->order() == 6);
  auto iso = [&](const Scalar& x) {
    return prod->from_parts({Ring::gf(2)->from_int(x.num()), Ring::gf(3)->from_int(x.num())});
  };
  std::set<std::string> images;
  for (const Scalar& x : z6->elements()) images.insert(iso(x).to_string());
  CHECK(images.size() == 6);  // bijective
  for (const Scalar& x : z6->elements())
    for (const Scalar& y : z6->elements()) {
      CHECK(iso(z6->add(x, y)) == prod->add(iso(x), iso(y)));
      CHECK(iso(z6->mul(x, y)) == prod->mul(iso(x), iso(y)));
    }
  CHECK(iso(z6->one()) == prod->one());
}

TEST_CASE("unary and empty products") {
  auto r = Ring::product({Ring::gf(2)});
  CHECK(r->spec() == "GF(2)");  // collapses to the factor itself
  CHECK(*r->order() == 2);
  CHECK_THROWS_AS((void)Ring::product({}), std::invalid_argument);
}

TEST_CASE("weak inverse on products is componentwise") {
  auto r = Ring::parse("GF(2)xGF(3)");
  Scalar x = r->from_parts({Ring::gf(2)->one(), Ring::gf(3)->zero()});
  CHECK(r->weak_inverse(x) == x);
  Scalar y = r->from_parts({Ring::gf(2)->one(), Ring::gf(3)->from_int(2)});
  Scalar wi = r->weak_inverse(y);
  CHECK(wi.parts()[0] == Ring::gf(2)->one());
  CHECK(wi.parts()[1] == Ring::gf(3)->from_int(2));  // 2*2 = 4 = 1 mod 3
}

TEST_CASE("element enumeration order is deterministic and lexicographic") {
  auto prod = Ring::parse("GF(2)xGF(3)");
  auto elems = prod->elements();
  REQUIRE(elems.size() == 6);
  CHECK(elems[0].to_string() == "(0,0)");
  CHECK(elems[1].to_string() == "(0,1)");
  CHECK(elems[2].to_string() == "(0,2)");
  CHECK(elems[3].to_string() == "(1,0)");
  CHECK(elems[5].to_string() == "(1,2)");

  auto z6 = Ring::mod(6);
  auto es = z6->elements();
  std::set<std::string> distinct;
  for (const Scalar& e : es) distinct.insert(e.to_string());
  CHECK(distinct.size() == es.size());
}

TEST_CASE("ring spec strings round trip") {
  for (const char* spec : {"Z", "Q", "Z/6", "Z/4", "GF(5)", "GF(2)xGF(3)", "ZxQxGF(2)",
                           "(Z/2xZ/3)xGF(5)"}) {
    auto r = Ring::parse(spec);
    CHECK(r->spec() == spec);
    CHECK(Ring::parse(r->spec())->spec() == r->spec());
  }
  CHECK_THROWS_AS((void)Ring::parse("GF(4)"), std::invalid_argument);
  CHECK_THROWS_AS((void)Ring::parse("Z/1"), std::invalid_argument);
  CHECK_THROWS_AS((void)Ring::parse("F5"), std::invalid_argument);
  CHECK_THROWS_AS((void)Ring::parse("Z/6x"), std::invalid_argument);
}

TEST_CASE("scalar literals parse back") {
  auto q = Ring::rationals();
  CHECK(q->parse_scalar("3/4") == q->from_rational(3, 4));
  CHECK(q->parse_scalar("-2") == q->from_int(-2));
  auto z6 = Ring::mod(6);
  CHECK(z6->parse_scalar("11") == z6->from_int(5));
  auto prod = Ring::parse("GF(2)xGF(3)");
  CHECK(prod->parse_scalar("(1,2)") == prod->from_parts({Ring::gf(2)->one(), Ring::gf(3)->from_int(2)}));
  CHECK_THROWS_AS((void)z6->parse_scalar("x"), std::invalid_argument);
  CHECK_THROWS_AS((void)z6->parse_scalar("1/2"), std::invalid_argument);
}

TEST_CASE("finite enumeration guards") {
  CHECK_THROWS_WITH_AS((void)Ring::integers()->elements(),
                       doctest::Contains("enumeration unavailable"), std::runtime_error);
  CHECK_THROWS_WITH_AS((void)Ring::rationals()->elements(),
                       doctest::Contains("enumeration unavailable"), std::runtime_error);
}

TEST_CASE("unit recognition and inversion") {
  auto z6 = Ring::mod(6);
  CHECK(z6->is_unit(z6->from_int(5)));
  CHECK_FALSE(z6->is_unit(z6->from_int(2)));
  CHECK(z6->inverse(z6->from_int(5)) == z6->from_int(5));
  CHECK_THROWS_AS((void)z6->inverse(z6->from_int(2)), std::domain_error);
  auto q = Ring::rationals();
  CHECK(q->inverse(q->from_rational(3, 4)) == q->from_rational(4, 3));
}

}  // TEST_SUITE
