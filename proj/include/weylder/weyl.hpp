#pragma once

#include <map>
#include <string>

#include "weylder/poly.hpp"

namespace weylder {

// sum_i r_i(x) y^i in A_1, all x-factors left of all y-factors
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(const Field& F) : F_(F) {}
  WeylElement(const Poly& r);  // NOLINT: polynomials embed as y-degree 0
  static WeylElement term(const Poly& r, int i);
  static WeylElement constant(const Field& F, long c) { return WeylElement(Poly::constant(F, c)); }
  static WeylElement x(const Field& F) { return WeylElement(Poly::x(F)); }
  static WeylElement y(const Field& F) { return term(Poly::constant(F, 1), 1); }
  static WeylElement y_pow(const Field& F, int n) { return term(Poly::constant(F, 1), n); }

  const Field& field() const { return F_; }
  const std::map<int, Poly>& terms() const { return t_; }
  Poly coeff(int i) const;
  bool is_zero() const { return t_.empty(); }
  Degree y_degree() const;
  Degree x_degree() const;  // max over coefficients
  bool is_polynomial() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
  Poly as_poly() const;  // requires is_polynomial()

  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  WeylElement operator*(const WeylElement& o) const;
  WeylElement operator*(const Coeff& c) const;
  WeylElement operator-() const;
  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement pow(int e) const;

  // r * a with r in F[x] on the left: no reordering needed
  WeylElement left_mul(const Poly& r) const;

  bool operator==(const WeylElement& o) const { return F_ == o.F_ && t_ == o.t_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  void add_term(int i, const Poly& r);

 private:
  Field F_;
  std::map<int, Poly> t_;
};

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement commutator(const WeylElement& a, const WeylElement& b);
WeylElement apply_phi(const WeylElement& a);
WeylElement varpi_element(const Field& F);
bool center_A1_test(const WeylElement& a);

// y^n f reordered term by term through y f = f y + f', used as a reference
WeylElement reorder_naive(const Poly& f, int n);

}  // namespace weylder
