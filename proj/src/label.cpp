#include "rigidual/label.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace rigidual {

struct Label::Node {
  std::variant<std::int64_t, std::string, std::pair<Label, Label>> value;
};

Label Label::of(std::int64_t value) {
  return Label(std::make_shared<const Node>(Node{value}));
}

Label Label::of(std::string name) {
  return Label(std::make_shared<const Node>(Node{std::move(name)}));
}

Label Label::pair(Label first, Label second) {
  return Label(std::make_shared<const Node>(Node{std::make_pair(std::move(first), std::move(second))}));
}

bool Label::is_int() const { return node_->value.index() == 0; }
bool Label::is_string() const { return node_->value.index() == 1; }
bool Label::is_pair() const { return node_->value.index() == 2; }

std::int64_t Label::int_value() const {
  if (!is_int()) throw std::logic_error("label is not an integer atom");
  return std::get<0>(node_->value);
}

const std::string& Label::string_value() const {
  if (!is_string()) throw std::logic_error("label is not a string atom");
  return std::get<1>(node_->value);
}

const Label& Label::first() const {
  if (!is_pair()) throw std::logic_error("label is not a pair");
  return std::get<2>(node_->value).first;
}

const Label& Label::second() const {
  if (!is_pair()) throw std::logic_error("label is not a pair");
  return std::get<2>(node_->value).second;
}

std::string Label::to_string() const {
  switch (node_->value.index()) {
    case 0: return std::to_string(std::get<0>(node_->value));
    case 1: return std::get<1>(node_->value);
    default: return "(" + first().to_string() + "," + second().to_string() + ")";
  }
}

std::string Label::key() const {
  switch (node_->value.index()) {
    case 0: return "i" + std::to_string(std::get<0>(node_->value));
    case 1: {
      const std::string& s = std::get<1>(node_->value);
      std::string out = "s";
      for (char ch : s) {
        if (ch == '\\' || ch == '(' || ch == ')' || ch == ',') out += '\\';
        out += ch;
      }
      return out;
    }
    default: return "(" + first().key() + "," + second().key() + ")";
  }
}

std::strong_ordering Label::operator<=>(const Label& other) const {
  auto rank = node_->value.index();
  auto orank = other.node_->value.index();
  if (rank != orank) return rank <=> orank;
  switch (rank) {
    case 0: return std::get<0>(node_->value) <=> std::get<0>(other.node_->value);
    case 1: {
      int c = std::get<1>(node_->value).compare(std::get<1>(other.node_->value));
      return c <=> 0;
    }
    default: {
      auto c = first() <=> other.first();
      if (c != 0) return c;
      return second() <=> other.second();
    }
  }
}

namespace {
[[noreturn]] void enumeration_unavailable() {
  throw std::runtime_error("enumeration unavailable: index set is not finitely enumerable");
}
}  // namespace

struct IndexSet::Node {
  enum class Kind { finite, product, lazy } kind;
  // finite (and finite products, eagerly materialized)
  std::vector<Label> labels;
  std::map<Label, std::size_t> positions;
  bool enumerable = false;
  // product
  std::shared_ptr<const Node> left, right;
  // lazy
  std::string name;
  std::function<bool(const Label&)> member;
  std::string key;
};

IndexSet IndexSet::of(std::vector<Label> labels) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::finite;
  node->enumerable = true;
  node->labels = std::move(labels);
  std::string k = "[";
  for (std::size_t i = 0; i < node->labels.size(); ++i) {
    if (!node->positions.emplace(node->labels[i], i).second)
      throw std::invalid_argument("duplicate label in index set: " + node->labels[i].to_string());
    if (i) k += ",";
    k += node->labels[i].key();
  }
  node->key = k + "]";
  return IndexSet(std::move(node));
}

IndexSet IndexSet::product(IndexSet left, IndexSet right) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::product;
  node->left = left.node_;
  node->right = right.node_;
  node->key = "(" + left.key() + "x" + right.key() + ")";
  if (left.is_finite() && right.is_finite()) {
    node->enumerable = true;
    node->labels.reserve(left.size() * right.size());
    for (const Label& a : left.labels())
      for (const Label& b : right.labels()) {
        node->positions.emplace(Label::pair(a, b), node->labels.size());
        node->labels.push_back(Label::pair(a, b));
      }
  }
  return IndexSet(std::move(node));
}

IndexSet IndexSet::lazy(std::string name, std::function<bool(const Label&)> contains) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::lazy;
  node->name = name;
  node->member = std::move(contains);
  node->key = "lazy:" + name;
  return IndexSet(std::move(node));
}

IndexSet IndexSet::unit() { return IndexSet::of({Label::of("*")}); }

bool IndexSet::is_finite() const { return node_->enumerable; }

std::size_t IndexSet::size() const {
  if (!node_->enumerable) enumeration_unavailable();
  return node_->labels.size();
}

const std::vector<Label>& IndexSet::labels() const {
  if (!node_->enumerable) enumeration_unavailable();
  return node_->labels;
}

bool IndexSet::contains(const Label& x) const {
  switch (node_->kind) {
    case Node::Kind::finite: return node_->positions.count(x) > 0;
    case Node::Kind::product:
      return x.is_pair() && IndexSet(node_->left).contains(x.first()) &&
             IndexSet(node_->right).contains(x.second());
    default: return node_->member(x);
  }
}

std::optional<std::size_t> IndexSet::position(const Label& x) const {
  if (!node_->enumerable) enumeration_unavailable();
  auto it = node_->positions.find(x);
  if (it == node_->positions.end()) return std::nullopt;
  return it->second;
}

bool IndexSet::is_product() const { return node_->kind == Node::Kind::product; }

IndexSet IndexSet::left() const {
  if (!is_product()) throw std::logic_error("index set is not a product");
  return IndexSet(node_->left);
}

IndexSet IndexSet::right() const {
  if (!is_product()) throw std::logic_error("index set is not a product");
  return IndexSet(node_->right);
}

const std::string& IndexSet::key() const { return node_->key; }

}  // namespace rigidual
