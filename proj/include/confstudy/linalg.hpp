#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "confstudy/rational.hpp"

namespace confstudy {

// Dense row-major matrix over the rationals. Only what rank and
// inversion need.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  static RationalMatrix identity(std::size_t n);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

// Exact rank by Gaussian elimination over Q.
std::size_t rank(RationalMatrix m);

// Gauss-Jordan inverse; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

}  // namespace confstudy
