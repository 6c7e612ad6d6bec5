#pragma once

#include <optional>
#include <vector>

#include "weylder/poly.hpp"

namespace weylder {

using Vec = std::vector<Coeff>;

// dense matrix over a field, rows of equal length
class Matrix {
 public:
  Matrix(const Field& F, int rows, int cols);
  static Matrix from_columns(const Field& F, int rows, const std::vector<Vec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Coeff& at(int i, int j) { return a_[i * cols_ + j]; }
  const Coeff& at(int i, int j) const { return a_[i * cols_ + j]; }

  // reduced row echelon form in place, returns pivot columns
  std::vector<int> rref();
  int rank() const;
  std::vector<Vec> nullspace() const;
  // some x with A x = b, if any
  std::optional<Vec> solve(const Vec& b) const;

 private:
  Field F_;
  int rows_, cols_;
  std::vector<Coeff> a_;
};

// coefficient vector of f of fixed length n (requires deg f < n)
Vec to_vec(const Poly& f, int n);
Poly from_vec(const Field& F, const Vec& v);

}  // namespace weylder
