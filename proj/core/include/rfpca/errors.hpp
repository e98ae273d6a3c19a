#pragma once

#include <stdexcept>
#include <string>

namespace rfpca {

// Base class for recoverable library failures. Precondition violations on
// plain arguments throw std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two curves (or a curve and a sample) do not live on the same grid.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

// A basis handed to a projection routine failed the orthonormality check.
class NonOrthonormalBasisError : public Error {
 public:
  using Error::Error;
};

// Gram-Schmidt hit a numerically dependent input set.
class RankDeficientBasisError : public Error {
 public:
  using Error::Error;
};

// Every candidate direction was numerically zero.
class AllDegenerateError : public Error {
 public:
  using Error::Error;
};

// A scale statistic was asked for on a sample that is too small.
class TooFewPointsError : public Error {
 public:
  using Error::Error;
};

// Malformed CSV input. `row`/`column` are 1-based and 0 when not applicable
// (row 0 refers to the header line).
class CsvFormatError : public Error {
 public:
  enum class Kind { RaggedRow, NonNumericCell, NonEquispacedGrid, Empty };

  CsvFormatError(Kind kind, std::string message, int row = 0, int column = 0)
      : Error(std::move(message)), kind_(kind), row_(row), column_(column) {}

  Kind kind() const { return kind_; }
  int row() const { return row_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int row_;
  int column_;
};

}  // namespace rfpca
