#include "weylder/linalg.hpp"

namespace weylder {

Matrix::Matrix(const Field& F, int rows, int cols)
    : F_(F), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Coeff::zero(F)) {}

Matrix Matrix::from_columns(const Field& F, int rows, const std::vector<Vec>& cols) {
  Matrix m(F, rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols_; ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  return m;
}

std::vector<int> Matrix::rref() {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int s = r;
    while (s < rows_ && at(s, c).is_zero()) ++s;
    if (s == rows_) continue;
    if (s != r)
      for (int j = 0; j < cols_; ++j) std::swap(at(s, j), at(r, j));
    Coeff inv = at(r, c).inverse();
    for (int j = c; j < cols_; ++j) at(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      Coeff f = at(i, c);
      for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(m.rref().size());
}

std::vector<Vec> Matrix::nullspace() const {
  Matrix m = *this;
  auto piv = m.rref();
  std::vector<bool> is_piv(cols_, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (int f = 0; f < cols_; ++f) {
    if (is_piv[f]) continue;
    Vec v(cols_, Coeff::zero(F_));
    v[f] = Coeff::one(F_);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m.at(static_cast<int>(i), f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  Matrix aug(F_, rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  auto piv = aug.rref();
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  Vec x(cols_, Coeff::zero(F_));
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(static_cast<int>(i), cols_);
  return x;
}

Vec to_vec(const Poly& f, int n) {
  if (f.length() > n) throw DomainError("linalg", "polynomial does not fit the coordinate window");
  Vec v(n, Coeff::zero(f.field()));
  for (int i = 0; i < f.length(); ++i) v[i] = f.coeffs()[i];
  return v;
}

Poly from_vec(const Field& F, const Vec& v) { return Poly(F, v); }

}  // namespace weylder
