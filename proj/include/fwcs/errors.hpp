#pragma once

#include <stdexcept>
#include <string>

namespace fwcs {

// Base of every error raised by the library. The CLI maps the category to an
// exit code, so each concrete error declares which family it belongs to.
class Error : public std::runtime_error {
 public:
  enum class Category { BadInput, Domain, Numeric };

  Error(Category category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  Category category() const noexcept { return category_; }

 private:
  Category category_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(Category::BadInput, what) {}
};

// Inverse of a zero divisor.
class SingularElement : public Error {
 public:
  explicit SingularElement(const std::string& what) : Error(Category::Numeric, what) {}
};

// Argument outside the mathematical domain of a primitive (x <= 0 for a real power, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(Category::Domain, what) {}
};

// Series point outside (or on the boundary of) its convergence region.
// component is 0 for complex series, 1 or 2 for the idempotent components.
class DomainViolation : public Error {
 public:
  DomainViolation(const std::string& what, int component = 0)
      : Error(Category::Domain, what), component_(component) {}
  int component() const noexcept { return component_; }

 private:
  int component_;
};

// Gamma evaluated at (or within tolerance of) a nonpositive integer.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, int component = 0)
      : Error(Category::Numeric, what), component_(component) {}
  int component() const noexcept { return component_; }

 private:
  int component_;
};

class MaxTermsExceeded : public Error {
 public:
  explicit MaxTermsExceeded(const std::string& what) : Error(Category::Numeric, what) {}
};

class TruncationError : public Error {
 public:
  explicit TruncationError(const std::string& what) : Error(Category::Numeric, what) {}
};

class QuadratureFailure : public Error {
 public:
  explicit QuadratureFailure(const std::string& what) : Error(Category::Numeric, what) {}
};

class ContourFailure : public Error {
 public:
  explicit ContourFailure(const std::string& what) : Error(Category::Numeric, what) {}
};

class Overflow : public Error {
 public:
  explicit Overflow(const std::string& what) : Error(Category::Numeric, what) {}
};

}  // namespace fwcs
