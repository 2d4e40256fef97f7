#pragma once

#include <memory>
#include <string>

namespace catana {

// Syntax tree of an object: atoms 1 (unit), B (booleans), E (entities),
// closed under binary products X×Y and exponentials Y^X. Structural
// equality of the tree is the identity criterion for objects; the
// canonical rendering is injective and doubles as the object key.
class ObjectSyntax {
public:
  enum class Node { Unit, Bool, Entities, Product, Exponential };

  static ObjectSyntax unit();
  static ObjectSyntax booleans();
  static ObjectSyntax entities();
  static ObjectSyntax product(const ObjectSyntax& left, const ObjectSyntax& right);
  // base^exponent, i.e. the object of named functions exponent -> base
  static ObjectSyntax exponential(const ObjectSyntax& base, const ObjectSyntax& exponent);

  Node node() const { return node_; }
  bool is_atom() const { return node_ == Node::Unit || node_ == Node::Bool || node_ == Node::Entities; }
  bool is_product() const { return node_ == Node::Product; }
  bool is_exponential() const { return node_ == Node::Exponential; }

  // Product: left/right factor. Exponential: left = base, right = exponent.
  const ObjectSyntax& left() const;
  const ObjectSyntax& right() const;

  // Canonical injective rendering, e.g. "E×E", "B^(E×E)", "(B^E)×E".
  const std::string& key() const { return key_; }

  bool operator==(const ObjectSyntax& other) const { return key_ == other.key_; }
  bool operator!=(const ObjectSyntax& other) const { return key_ != other.key_; }

private:
  ObjectSyntax(Node node, std::shared_ptr<const ObjectSyntax> l, std::shared_ptr<const ObjectSyntax> r);

  Node node_;
  std::shared_ptr<const ObjectSyntax> left_, right_;
  std::string key_;
};

} // namespace catana
