#include "rigidual/rings.hpp"

#include <numeric>
#include <stdexcept>

namespace rigidual {

namespace {

[[noreturn]] void overflow() { throw std::overflow_error("integer overflow in exact arithmetic"); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  std::int64_t r;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &r)) overflow();
  return r;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Extended gcd inverse of a mod n, for gcd(a, n) = 1.
std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t n) {
  std::int64_t t = 0, new_t = 1, r = n, new_r = mod_reduce(a, n);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) return std::nullopt;
  return mod_reduce(t, n);
}

}  // namespace

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a && b && a->same(*b);
}

// ---------------------------------------------------------------------------
// Scalar

bool Scalar::is_zero() const {
  if (ring_->kind() == RingKind::product) {
    for (const Scalar& p : parts_)
      if (!p.is_zero()) return false;
    return true;
  }
  return num_ == 0;
}

std::string Scalar::to_string() const {
  switch (ring_->kind()) {
    case RingKind::rationals:
      if (den_ != 1) return std::to_string(num_) + "/" + std::to_string(den_);
      return std::to_string(num_);
    case RingKind::product: {
      std::string out = "(";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += parts_[i].to_string();
      }
      return out + ")";
    }
    default:
      return std::to_string(num_);
  }
}

bool Scalar::operator==(const Scalar& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  if (ring_->kind() == RingKind::product) return parts_ == other.parts_;
  return num_ == other.num_ && den_ == other.den_;
}

Scalar Scalar::operator+(const Scalar& other) const { return ring_->add(*this, other); }
Scalar Scalar::operator-(const Scalar& other) const { return ring_->sub(*this, other); }
Scalar Scalar::operator*(const Scalar& other) const { return ring_->mul(*this, other); }
Scalar Scalar::operator-() const { return ring_->neg(*this); }

// ---------------------------------------------------------------------------
// Ring construction

Ring::Ring(RingKind kind, std::int64_t modulus, std::vector<RingPtr> factors)
    : kind_(kind), modulus_(modulus), factors_(std::move(factors)) {
  switch (kind_) {
    case RingKind::integers: spec_ = "Z"; break;
    case RingKind::rationals: spec_ = "Q"; break;
    case RingKind::mod_n: spec_ = "Z/" + std::to_string(modulus_); break;
    case RingKind::gf_p: spec_ = "GF(" + std::to_string(modulus_) + ")"; break;
    case RingKind::product: {
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) spec_ += "x";
        const std::string& f = factors_[i]->spec();
        if (factors_[i]->kind() == RingKind::product)
          spec_ += "(" + f + ")";
        else
          spec_ += f;
      }
      break;
    }
  }
}

RingPtr Ring::integers() {
  static RingPtr r(new Ring(RingKind::integers, 0, {}));
  return r;
}

RingPtr Ring::rationals() {
  static RingPtr r(new Ring(RingKind::rationals, 0, {}));
  return r;
}

RingPtr Ring::mod(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  return RingPtr(new Ring(RingKind::mod_n, n, {}));
}

RingPtr Ring::gf(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("GF size must be prime: " + std::to_string(p));
  return RingPtr(new Ring(RingKind::gf_p, p, {}));
}

RingPtr Ring::product(std::vector<RingPtr> factors) {
  if (factors.empty()) throw std::invalid_argument("product ring needs at least one factor");
  for (const RingPtr& f : factors)
    if (!f) throw std::invalid_argument("null factor in product ring");
  if (factors.size() == 1) return factors[0];
  return RingPtr(new Ring(RingKind::product, 0, std::move(factors)));
}

namespace {

struct SpecParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void bad() { throw std::invalid_argument("bad ring spec: " + std::string(text)); }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  std::int64_t number() {
    std::size_t start = pos;
    while (!eof() && peek() >= '0' && peek() <= '9') ++pos;
    if (start == pos) bad();
    return std::stoll(std::string(text.substr(start, pos - start)));
  }

  RingPtr factor() {
    if (eof()) bad();
    if (peek() == '(') {
      ++pos;
      RingPtr r = spec();
      if (eof() || peek() != ')') bad();
      ++pos;
      return r;
    }
    if (text.compare(pos, 3, "GF(") == 0) {
      pos += 3;
      std::int64_t p = number();
      if (eof() || peek() != ')') bad();
      ++pos;
      return Ring::gf(p);
    }
    if (text.compare(pos, 2, "Z/") == 0) {
      pos += 2;
      return Ring::mod(number());
    }
    if (peek() == 'Z') {
      ++pos;
      return Ring::integers();
    }
    if (peek() == 'Q') {
      ++pos;
      return Ring::rationals();
    }
    bad();
  }

  RingPtr spec() {
    std::vector<RingPtr> factors{factor()};
    while (!eof() && peek() == 'x') {
      ++pos;
      factors.push_back(factor());
    }
    return Ring::product(std::move(factors));
  }
};

}  // namespace

RingPtr Ring::parse(std::string_view spec) {
  SpecParser p{spec};
  RingPtr r = p.spec();
  if (!p.eof()) p.bad();
  return r;
}

// ---------------------------------------------------------------------------
// Ring predicates

bool Ring::is_field() const {
  switch (kind_) {
    case RingKind::rationals:
    case RingKind::gf_p: return true;
    case RingKind::mod_n: return is_prime(modulus_);
    default: return false;
  }
}

bool Ring::is_finite() const {
  switch (kind_) {
    case RingKind::mod_n:
    case RingKind::gf_p: return true;
    case RingKind::product:
      for (const RingPtr& f : factors_)
        if (!f->is_finite()) return false;
      return true;
    default: return false;
  }
}

std::optional<std::uint64_t> Ring::order() const {
  switch (kind_) {
    case RingKind::mod_n:
    case RingKind::gf_p: return static_cast<std::uint64_t>(modulus_);
    case RingKind::product: {
      std::uint64_t n = 1;
      for (const RingPtr& f : factors_) {
        auto fo = f->order();
        if (!fo) return std::nullopt;
        n *= *fo;
      }
      return n;
    }
    default: return std::nullopt;
  }
}

bool Ring::is_von_neumann_regular() const {
  switch (kind_) {
    case RingKind::integers: return false;  // 2 y 2 = 2 has no integer solution
    case RingKind::rationals:
    case RingKind::gf_p: return true;
    case RingKind::mod_n: {
      for (const Scalar& x : elements()) {
        bool found = false;
        for (const Scalar& y : elements())
          if (mul(mul(x, y), x) == x) {
            found = true;
            break;
          }
        if (!found) return false;
      }
      return true;
    }
    case RingKind::product:
      for (const RingPtr& f : factors_)
        if (!f->is_von_neumann_regular()) return false;
      return true;
  }
  return false;
}

std::vector<Scalar> Ring::elements() const {
  switch (kind_) {
    case RingKind::mod_n:
    case RingKind::gf_p: {
      std::vector<Scalar> out;
      out.reserve(static_cast<std::size_t>(modulus_));
      for (std::int64_t v = 0; v < modulus_; ++v) out.push_back(make(v));
      return out;
    }
    case RingKind::product: {
      std::vector<std::vector<Scalar>> parts{{}};
      for (const RingPtr& f : factors_) {
        std::vector<std::vector<Scalar>> next;
        for (const auto& prefix : parts)
          for (const Scalar& c : f->elements()) {
            auto tuple = prefix;
            tuple.push_back(c);
            next.push_back(std::move(tuple));
          }
        parts = std::move(next);
      }
      std::vector<Scalar> out;
      out.reserve(parts.size());
      for (auto& t : parts) out.push_back(Scalar(shared_from_this(), std::move(t)));
      return out;
    }
    default:
      throw std::runtime_error("enumeration unavailable: ring " + spec_ + " is infinite");
  }
}

// ---------------------------------------------------------------------------
// Element construction

Scalar Ring::make(std::int64_t num, std::int64_t den) const {
  return Scalar(shared_from_this(), num, den);
}

Scalar Ring::zero() const { return from_int(0); }
Scalar Ring::one() const { return from_int(1); }

Scalar Ring::from_int(std::int64_t v) const {
  switch (kind_) {
    case RingKind::integers:
    case RingKind::rationals: return make(v);
    case RingKind::mod_n:
    case RingKind::gf_p: return make(mod_reduce(v, modulus_));
    case RingKind::product: {
      std::vector<Scalar> parts;
      parts.reserve(factors_.size());
      for (const RingPtr& f : factors_) parts.push_back(f->from_int(v));
      return Scalar(shared_from_this(), std::move(parts));
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Ring::from_rational(std::int64_t num, std::int64_t den) const {
  if (kind_ != RingKind::rationals) throw std::invalid_argument("ring " + spec_ + " has no rational literals");
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return make(num, den);
}

Scalar Ring::from_parts(std::vector<Scalar> parts) const {
  if (kind_ != RingKind::product) throw std::invalid_argument("ring " + spec_ + " is not a product");
  if (parts.size() != factors_.size()) throw std::invalid_argument("component count mismatch");
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!same_ring(parts[i].ring(), factors_[i]))
      throw std::invalid_argument("ring mismatch: component " + std::to_string(i));
  return Scalar(shared_from_this(), std::move(parts));
}

Scalar Ring::parse_scalar(std::string_view text) const {
  if (kind_ == RingKind::product) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
      throw std::invalid_argument("bad product element: " + std::string(text));
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<Scalar> parts;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || (body[i] == ',' && depth == 0)) {
        if (parts.size() == factors_.size()) throw std::invalid_argument("too many components");
        parts.push_back(factors_[parts.size()]->parse_scalar(body.substr(start, i - start)));
        start = i + 1;
      } else if (body[i] == '(') {
        ++depth;
      } else if (body[i] == ')') {
        --depth;
      }
    }
    return from_parts(std::move(parts));
  }
  std::string s(text);
  auto parse_int = [&s](const std::string& t) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad scalar literal: " + s);
    }
    if (used != t.size()) throw std::invalid_argument("bad scalar literal: " + s);
    return v;
  };
  std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    if (kind_ != RingKind::rationals) throw std::invalid_argument("ring " + spec_ + " has no fractions");
    return from_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }
  return from_int(parse_int(s));
}

// ---------------------------------------------------------------------------
// Arithmetic

void Ring::check_mine(const Scalar& a) const {
  if (!a.ring() || !a.ring()->same(*this))
    throw std::invalid_argument("ring mismatch: expected " + spec_ + ", got " +
                                (a.ring() ? a.ring()->spec() : std::string("none")));
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
  check_mine(a);
  check_mine(b);
  switch (kind_) {
    case RingKind::integers: return make(checked_add(a.num(), b.num()));
    case RingKind::mod_n:
    case RingKind::gf_p: return make(mod_reduce(checked_add(a.num(), b.num()), modulus_));
    case RingKind::rationals: {
      std::int64_t num = checked_add(checked_mul(a.num(), b.den()), checked_mul(b.num(), a.den()));
      std::int64_t den = checked_mul(a.den(), b.den());
      return from_rational(num, den);
    }
    case RingKind::product: {
      std::vector<Scalar> parts;
      parts.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->add(a.parts()[i], b.parts()[i]));
      return Scalar(shared_from_this(), std::move(parts));
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
  check_mine(a);
  check_mine(b);
  switch (kind_) {
    case RingKind::integers: return make(checked_mul(a.num(), b.num()));
    case RingKind::mod_n:
    case RingKind::gf_p: return make(mod_reduce(checked_mul(a.num(), b.num()), modulus_));
    case RingKind::rationals:
      return from_rational(checked_mul(a.num(), b.num()), checked_mul(a.den(), b.den()));
    case RingKind::product: {
      std::vector<Scalar> parts;
      parts.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->mul(a.parts()[i], b.parts()[i]));
      return Scalar(shared_from_this(), std::move(parts));
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Ring::neg(const Scalar& a) const {
  check_mine(a);
  switch (kind_) {
    case RingKind::integers: return make(checked_neg(a.num()));
    case RingKind::mod_n:
    case RingKind::gf_p: return make(mod_reduce(checked_neg(a.num()), modulus_));
    case RingKind::rationals: return make(checked_neg(a.num()), a.den());
    case RingKind::product: {
      std::vector<Scalar> parts;
      parts.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i]->neg(a.parts()[i]));
      return Scalar(shared_from_this(), std::move(parts));
    }
  }
  throw std::logic_error("unreachable");
}

bool Ring::is_unit(const Scalar& a) const {
  check_mine(a);
  switch (kind_) {
    case RingKind::integers: return a.num() == 1 || a.num() == -1;
    case RingKind::rationals: return a.num() != 0;
    case RingKind::mod_n:
    case RingKind::gf_p: return mod_inverse(a.num(), modulus_).has_value();
    case RingKind::product:
      for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i]->is_unit(a.parts()[i])) return false;
      return true;
  }
  return false;
}

Scalar Ring::inverse(const Scalar& a) const {
  check_mine(a);
  switch (kind_) {
    case RingKind::integers:
      if (a.num() == 1 || a.num() == -1) return a;
      break;
    case RingKind::rationals:
      if (a.num() != 0) return from_rational(a.den(), a.num());
      break;
    case RingKind::mod_n:
    case RingKind::gf_p:
      if (auto inv = mod_inverse(a.num(), modulus_)) return make(*inv);
      break;
    case RingKind::product: {
      std::vector<Scalar> parts;
      parts.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->inverse(a.parts()[i]));
      return Scalar(shared_from_this(), std::move(parts));
    }
  }
  throw std::domain_error("not a unit in " + spec_ + ": " + a.to_string());
}

Scalar Ring::weak_inverse(const Scalar& x) const {
  check_mine(x);
  if (x.is_zero()) return zero();
  switch (kind_) {
    case RingKind::rationals:
    case RingKind::gf_p:
      return inverse(x);
    case RingKind::mod_n: {
      if (is_prime(modulus_)) return inverse(x);
      for (const Scalar& y : elements())
        if (mul(mul(x, y), x) == x && mul(mul(y, x), y) == y) return y;
      break;
    }
    case RingKind::product: {
      std::vector<Scalar> parts;
      parts.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->weak_inverse(x.parts()[i]));
      return Scalar(shared_from_this(), std::move(parts));
    }
    case RingKind::integers: {
      if (x.num() == 1 || x.num() == -1) return x;
      break;
    }
  }
  throw std::domain_error("not von Neumann regular at " + x.to_string() + " in " + spec_);
}

std::vector<Scalar> Ring::idempotents() const {
  std::vector<Scalar> out;
  for (const Scalar& e : elements())
    if (mul(e, e) == e) out.push_back(e);
  return out;
}

}  // namespace rigidual
