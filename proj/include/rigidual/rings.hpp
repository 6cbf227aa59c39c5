#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rigidual {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Element of a commutative ring, tagged with its ring so mixed-ring arithmetic
/// is rejected ("ring mismatch"). Values are kept canonical: residues in [0, n),
/// rationals reduced with positive denominator, product elements as tuples.
class Scalar {
 public:
  const RingPtr& ring() const { return ring_; }
  bool is_zero() const;
  std::string to_string() const;
  bool operator==(const Scalar& other) const;

  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator-() const;

  // Representation accessors, meaningful per ring kind.
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  const std::vector<Scalar>& parts() const { return parts_; }

 private:
  friend class Ring;
  Scalar(RingPtr ring, std::int64_t num, std::int64_t den) : ring_(std::move(ring)), num_(num), den_(den) {}
  Scalar(RingPtr ring, std::vector<Scalar> parts) : ring_(std::move(ring)), parts_(std::move(parts)) {}
  RingPtr ring_;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::vector<Scalar> parts_;
};

enum class RingKind { integers, rationals, mod_n, gf_p, product };

/// Commutative ring descriptor with exact element arithmetic. Discrete topology
/// throughout; no topology data is stored. Finite products are the only product
/// construction (componentwise operations); infinite products are out of scope.
/// All integer arithmetic is overflow-checked and throws rather than wrapping.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr integers();
  static RingPtr rationals();
  static RingPtr mod(std::int64_t n);      // Z/n, n >= 2
  static RingPtr gf(std::int64_t p);       // prime field, p prime
  static RingPtr product(std::vector<RingPtr> factors);  // unary product collapses to its factor
  /// Parses spec strings: "Z", "Q", "Z/6", "GF(5)", "GF(2)xGF(3)", parenthesized factors.
  static RingPtr parse(std::string_view spec);

  RingKind kind() const { return kind_; }
  std::int64_t modulus() const { return modulus_; }
  const std::vector<RingPtr>& factors() const { return factors_; }
  const std::string& spec() const { return spec_; }

  bool is_field() const;
  bool is_finite() const;
  bool is_von_neumann_regular() const;
  std::optional<std::uint64_t> order() const;
  /// Duplicate-free, deterministic order (residues ascending; products lexicographic).
  std::vector<Scalar> elements() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(std::int64_t num, std::int64_t den) const;
  Scalar from_parts(std::vector<Scalar> parts) const;
  /// Parses the string form emitted by Scalar::to_string for non-product rings;
  /// product elements use parenthesized comma-separated component lists.
  Scalar parse_scalar(std::string_view text) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  bool is_unit(const Scalar& a) const;
  Scalar inverse(const Scalar& a) const;  // units only

  /// Unique y with x y x = x and y x y = y. Fields use the closed form
  /// (0 -> 0, else the inverse); finite rings search; products go componentwise.
  /// Throws "not von Neumann regular at x" when no such y exists.
  Scalar weak_inverse(const Scalar& x) const;
  /// All e with e * e = e; finite rings only.
  std::vector<Scalar> idempotents() const;

  bool same(const Ring& other) const { return spec_ == other.spec_; }

 private:
  Ring(RingKind kind, std::int64_t modulus, std::vector<RingPtr> factors);
  void check_mine(const Scalar& a) const;
  Scalar make(std::int64_t num, std::int64_t den = 1) const;

  RingKind kind_;
  std::int64_t modulus_ = 0;
  std::vector<RingPtr> factors_;
  std::string spec_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace rigidual
