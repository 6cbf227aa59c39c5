#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rigidual {

/// Basis label: an integer atom, a string atom, or an ordered pair of labels.
/// Pairs are the labels of product index sets. Immutable, cheap to copy.
class Label {
 public:
  static Label of(std::int64_t value);
  static Label of(int value) { return of(static_cast<std::int64_t>(value)); }
  static Label of(std::string name);
  static Label of(const char* name) { return of(std::string(name)); }
  static Label pair(Label first, Label second);

  bool is_int() const;
  bool is_string() const;
  bool is_pair() const;
  std::int64_t int_value() const;
  const std::string& string_value() const;
  const Label& first() const;
  const Label& second() const;

  std::string to_string() const;
  /// Collision-free encoding used for index-set identity keys.
  std::string key() const;

  // Total order: int atoms, then string atoms, then pairs; contents lexicographic.
  std::strong_ordering operator<=>(const Label& other) const;
  bool operator==(const Label& other) const { return (*this <=> other) == 0; }

 private:
  struct Node;
  explicit Label(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Index set for module coordinates. Finite sets hold an ordered duplicate-free
/// label list; products enumerate lexicographically (left factor major) when both
/// factors are finite; lazy sets carry only a membership predicate and support no
/// enumeration. Enumeration requests on lazy sets throw "enumeration unavailable".
class IndexSet {
 public:
  static IndexSet of(std::vector<Label> labels);
  static IndexSet product(IndexSet left, IndexSet right);
  static IndexSet lazy(std::string name, std::function<bool(const Label&)> contains);
  /// One-point index set used as the tensor unit.
  static IndexSet unit();

  bool is_finite() const;
  std::size_t size() const;
  const std::vector<Label>& labels() const;
  bool contains(const Label& x) const;
  /// Position in enumeration order; finite sets only.
  std::optional<std::size_t> position(const Label& x) const;

  bool is_product() const;
  IndexSet left() const;
  IndexSet right() const;

  /// Structural identity key; equal keys mean interchangeable index sets.
  const std::string& key() const;
  bool operator==(const IndexSet& other) const { return key() == other.key(); }

 private:
  struct Node;
  explicit IndexSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace rigidual
