#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spiraldet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroCoordinate : public Error {
 public:
  using Error::Error;
};

/// A variable carries a half-integer exponent but the evaluation point does
/// not supply it as a square root.
class HalfExponentAtPlainCoordinate : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class SizeGuard : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class UnknownRelation : public Error {
 public:
  using Error::Error;
};

class Unclassifiable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised by wedge elimination when a cell that should vanish does not.
class WedgeNotZero : public Error {
 public:
  WedgeNotZero(std::size_t row, std::size_t col)
      : Error("wedge cell (" + std::to_string(row + 1) + "," +
              std::to_string(col + 1) + ") is not zero"),
        row_(row),
        col_(col) {}

  /// 0-based position of the offending cell.
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

}  // namespace spiraldet
