#pragma once

#include "drt/bigint.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace drt {

// Dense matrix over arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix all_ones(std::size_t rows, std::size_t cols);
  static IntMatrix diagonal(const std::vector<BigInt>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator*(const BigInt& c) const;
  friend IntMatrix operator*(const BigInt& c, const IntMatrix& m) { return m * c; }
  IntMatrix transpose() const;
  bool operator==(const IntMatrix&) const = default;

  bool is_zero() const;
  // Rows and columns to keep, in the given order (used for minors).
  IntMatrix select(const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) const;

  // "rows cols" on the first line, then one line per row of
  // space-separated entries.
  std::string to_text() const;
  static IntMatrix from_text(const std::string& text);

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> e_;
};

} // namespace drt
