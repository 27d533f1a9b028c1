#include "drt/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace drt {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (auto& x : m.e_) x = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = e_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.e_[i * o.cols_ + j] += a * o.e_[k * o.cols_ + j];
    }
  return r;
}

IntMatrix IntMatrix::operator*(const BigInt& c) const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::select(const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) const {
  IntMatrix r(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= rows_ || cols[j] >= cols_)
        throw std::out_of_range("matrix select: index out of range");
      r.at(i, j) = at(rows[i], cols[j]);
    }
  return r;
}

std::string IntMatrix::to_text() const {
  std::ostringstream os;
  os << rows_ << ' ' << cols_ << '\n';
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

IntMatrix IntMatrix::from_text(const std::string& text) {
  std::istringstream is(text);
  long long rows = -1, cols = -1;
  if (!(is >> rows >> cols) || rows < 0 || cols < 0)
    throw std::invalid_argument("matrix text: expected \"rows cols\" header");
  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j)
      if (!(is >> m.at(i, j)))
        throw std::invalid_argument("matrix text: too few entries");
  std::string tail;
  if (is >> tail) throw std::invalid_argument("matrix text: trailing data: " + tail);
  return m;
}

} // namespace drt
