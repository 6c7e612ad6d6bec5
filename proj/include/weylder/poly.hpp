#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylder/field.hpp"

namespace weylder {

// degree of a polynomial; the zero polynomial has degree minus infinity
class Degree {
 public:
  Degree() = default;
  explicit Degree(int d) : d_(d) {}
  static Degree minus_infinity() { return Degree(); }

  bool is_minus_infinity() const { return !d_; }
  int value() const;

  bool operator==(const Degree& o) const { return d_ == o.d_; }
  bool operator<(const Degree& o) const;
  bool operator<=(const Degree& o) const { return !(o < *this); }
  bool operator>(const Degree& o) const { return o < *this; }
  bool operator<(int v) const { return *this < Degree(v); }
  bool operator>=(int v) const { return !(*this < Degree(v)); }
  std::string str() const { return d_ ? std::to_string(*d_) : "-inf"; }

 private:
  std::optional<int> d_;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field& F) : F_(F) {}
  Poly(const Field& F, std::vector<Coeff> coeffs);

  static Poly constant(const Field& F, const Coeff& c);
  static Poly constant(const Field& F, long c) { return constant(F, Coeff(F, c)); }
  static Poly monomial(const Field& F, const Coeff& c, int deg);
  static Poly monomial(const Field& F, int deg) { return monomial(F, Coeff::one(F), deg); }
  static Poly x(const Field& F) { return monomial(F, 1); }

  const Field& field() const { return F_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  Degree degree() const { return c_.empty() ? Degree() : Degree(static_cast<int>(c_.size()) - 1); }
  // number of stored coefficients, i.e. deg + 1 and 0 for the zero polynomial
  int length() const { return static_cast<int>(c_.size()); }
  // degree of a nonzero polynomial
  int top() const;

  Coeff coeff(int i) const;
  Coeff leading() const;
  const std::vector<Coeff>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Coeff& c) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const { return F_ == o.F_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // f = q*g + r with deg r < deg g
  std::pair<Poly, Poly> divmod(const Poly& g) const;
  Poly rem(const Poly& g) const { return divmod(g).second; }
  Poly exact_div(const Poly& g) const;
  std::optional<Poly> try_div(const Poly& g) const;
  bool divides(const Poly& f) const;

  Poly derivative() const;
  Poly derivative(int k) const;
  Poly monic() const;
  Poly pow(int e) const;
  Poly shift(int k) const;  // multiply by x^k
  Coeff eval(const Coeff& a) const;
  Poly compose(const Poly& g) const;

 private:
  Field F_;
  std::vector<Coeff> c_;

  void trim();
  void check(const Poly& o) const {
    if (F_ != o.F_) throw FieldMismatch();
  }
};

Poly operator*(const Coeff& c, const Poly& f);

Poly gcd_monic(const Poly& f, const Poly& g);

struct Bezout {
  Poly gcd;  // monic
  Poly s, t;
};
// s*f + t*g = gcd
Bezout extended_gcd(const Poly& f, const Poly& g);

// Frobenius components f = sum_j f_j(x^p) x^j, each f_j returned in u = x^p
std::vector<Poly> frobenius_split(const Poly& f);
Poly frobenius_join(const std::vector<Poly>& parts);

bool in_frobenius_subring(const Poly& f);  // f in F[x^p]
Poly to_u(const Poly& f);                  // x^p -> u, requires f in F[x^p]
Poly from_u(const Poly& g);                // u -> x^p

Poly partial_p(const Poly& f);

struct Antiderivative {
  std::optional<Poly> value;  // g with g' = f when integrable
  Poly obstruction;           // c in F[x^p] with f - c*x^(p-1) integrable
  bool integrable() const { return value.has_value(); }
};
Antiderivative antiderivative(const Poly& f);

// p-th root of a polynomial in F_p[x^p]: sum a_k x^(kp) -> sum a_k x^k
Poly pth_root(const Poly& f);

}  // namespace weylder
