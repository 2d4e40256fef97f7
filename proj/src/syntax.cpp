#include "catana/syntax.hpp"

#include "catana/errors.hpp"

namespace catana {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonComposable: return "NonComposable";
    case ErrorCode::UnknownMorphism: return "UnknownMorphism";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::UnknownEntity: return "UnknownEntity";
    case ErrorCode::UnknownRelation: return "UnknownRelation";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::MissingIdentity: return "MissingIdentity";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::MissingResultTable: return "MissingResultTable";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::ClosureExploded: return "ClosureExploded";
    case ErrorCode::NoStructuralImage: return "NoStructuralImage";
    case ErrorCode::MalformedFunctor: return "MalformedFunctor";
    case ErrorCode::InvalidAnalogy: return "InvalidAnalogy";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

std::string wrap(const ObjectSyntax& s) {
  if (s.is_atom()) return s.key();
  return "(" + s.key() + ")";
}

std::string render(ObjectSyntax::Node node, const ObjectSyntax* l, const ObjectSyntax* r) {
  switch (node) {
    case ObjectSyntax::Node::Unit: return "1";
    case ObjectSyntax::Node::Bool: return "B";
    case ObjectSyntax::Node::Entities: return "E";
    case ObjectSyntax::Node::Product: return wrap(*l) + "×" + wrap(*r);
    case ObjectSyntax::Node::Exponential: return wrap(*l) + "^" + wrap(*r);
  }
  return "?";
}

} // namespace

ObjectSyntax::ObjectSyntax(Node node, std::shared_ptr<const ObjectSyntax> l,
                           std::shared_ptr<const ObjectSyntax> r)
    : node_(node), left_(std::move(l)), right_(std::move(r)),
      key_(render(node, left_.get(), right_.get())) {}

ObjectSyntax ObjectSyntax::unit() { return ObjectSyntax(Node::Unit, nullptr, nullptr); }
ObjectSyntax ObjectSyntax::booleans() { return ObjectSyntax(Node::Bool, nullptr, nullptr); }
ObjectSyntax ObjectSyntax::entities() { return ObjectSyntax(Node::Entities, nullptr, nullptr); }

ObjectSyntax ObjectSyntax::product(const ObjectSyntax& left, const ObjectSyntax& right) {
  return ObjectSyntax(Node::Product, std::make_shared<ObjectSyntax>(left),
                      std::make_shared<ObjectSyntax>(right));
}

ObjectSyntax ObjectSyntax::exponential(const ObjectSyntax& base, const ObjectSyntax& exponent) {
  return ObjectSyntax(Node::Exponential, std::make_shared<ObjectSyntax>(base),
                      std::make_shared<ObjectSyntax>(exponent));
}

const ObjectSyntax& ObjectSyntax::left() const {
  if (!left_) fail(ErrorCode::Internal, "atom has no left child");
  return *left_;
}

const ObjectSyntax& ObjectSyntax::right() const {
  if (!right_) fail(ErrorCode::Internal, "atom has no right child");
  return *right_;
}

} // namespace catana
