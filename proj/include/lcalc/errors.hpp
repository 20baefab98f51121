#pragma once

#include <stdexcept>
#include <string>

namespace lcalc {

/// Root of every error the library throws on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix that does not define a homomorphism between the stated groups.
class WellDefinednessError : public Error {
 public:
  using Error::Error;
};

/// Maps that cannot be composed, or shapes that do not line up.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Input data violating a relation it is required to satisfy.
class RelationError : public Error {
 public:
  RelationError(std::string relation, int degree, const std::string& detail)
      : Error(detail), relation_(std::move(relation)), degree_(degree) {}
  const std::string& relation() const { return relation_; }
  int degree() const { return degree_; }

 private:
  std::string relation_;
  int degree_;
};

/// An operation needs optional data (unit class, complexification) that is absent.
class MissingDataError : public Error {
 public:
  using Error::Error;
};

/// Malformed document; the message starts with the JSON path of the offending node.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcalc
