#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sst {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  bool is_zero() const;
  IntMatrix select_columns(const std::vector<std::size_t>& cols) const;
  // Principal submatrix keeping the listed indices.
  IntMatrix principal(const std::vector<std::size_t>& keep) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> a_;
};

}  // namespace sst
