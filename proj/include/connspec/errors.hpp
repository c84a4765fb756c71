#pragma once

#include "connspec/bigint.hpp"

#include <stdexcept>
#include <string>

namespace connspec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// A simplex list that is not closed under taking faces.
class NotClosed : public Error {
 public:
  NotClosed(const std::string& missing_face, const std::string& simplex)
      : Error("complex is not closed: face " + missing_face + " of " + simplex + " is missing"),
        missing_face_(missing_face) {}
  const std::string& missing_face() const noexcept { return missing_face_; }

 private:
  std::string missing_face_;
};

class DuplicateSimplex : public Error {
 public:
  explicit DuplicateSimplex(const std::string& simplex)
      : Error("duplicate simplex " + simplex) {}
};

class UnknownSimplex : public Error {
 public:
  explicit UnknownSimplex(const std::string& simplex)
      : Error("simplex " + simplex + " is not in the complex") {}
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class EmptyComplex : public Error {
 public:
  EmptyComplex() : Error("operation requires a nonempty complex") {}
};

class NotSquare : public Error {
 public:
  NotSquare(std::size_t rows, std::size_t cols)
      : Error("matrix is " + std::to_string(rows) + "x" + std::to_string(cols) + ", not square") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  NotSymmetric() : Error("matrix is not symmetric") {}
};

/// Raised by the unimodular inverse; carries the exact determinant.
class NotUnimodular : public Error {
 public:
  explicit NotUnimodular(BigInt det)
      : Error("matrix is not unimodular (det = " + det.str() + ")"), det_(std::move(det)) {}
  const BigInt& determinant() const noexcept { return det_; }

 private:
  BigInt det_;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class ZeroEigenvalue : public Error {
 public:
  ZeroEigenvalue() : Error("spectrum contains an eigenvalue within tolerance of zero") {}
};

class BranchAmbiguity : public Error {
 public:
  using Error::Error;
};

}  // namespace connspec
