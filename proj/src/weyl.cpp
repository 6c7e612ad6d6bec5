#include "weylder/weyl.hpp"

#include <vector>

namespace weylder {

WeylElement::WeylElement(const Poly& r) : F_(r.field()) {
  if (!r.is_zero()) t_.emplace(0, r);
}

WeylElement WeylElement::term(const Poly& r, int i) {
  WeylElement a(r.field());
  if (!r.is_zero()) a.t_.emplace(i, r);
  return a;
}

Poly WeylElement::coeff(int i) const {
  auto it = t_.find(i);
  return it == t_.end() ? Poly(F_) : it->second;
}

Degree WeylElement::y_degree() const {
  if (t_.empty()) return Degree();
  return Degree(t_.rbegin()->first);
}

Degree WeylElement::x_degree() const {
  Degree d;
  for (const auto& [i, r] : t_)
    if (d < r.degree()) d = r.degree();
  return d;
}

Poly WeylElement::as_poly() const {
  if (!is_polynomial()) throw DomainError("weyl", "element is not a polynomial in x");
  return coeff(0);
}

void WeylElement::add_term(int i, const Poly& r) {
  if (r.field() != F_) throw FieldMismatch();
  if (r.is_zero()) return;
  auto it = t_.find(i);
  if (it == t_.end()) {
    t_.emplace(i, r);
    return;
  }
  it->second += r;
  if (it->second.is_zero()) t_.erase(it);
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (F_ != o.F_) throw FieldMismatch();
  for (const auto& [i, r] : o.t_) add_term(i, r);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  if (F_ != o.F_) throw FieldMismatch();
  for (const auto& [i, r] : o.t_) add_term(i, -r);
  return *this;
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  WeylElement r = *this;
  r += o;
  return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
  WeylElement r = *this;
  r -= o;
  return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const { return weyl_mul(*this, o); }

WeylElement WeylElement::operator*(const Coeff& c) const {
  WeylElement r(F_);
  for (const auto& [i, p] : t_) r.add_term(i, p * c);
  return r;
}

WeylElement WeylElement::operator-() const {
  WeylElement r(F_);
  for (const auto& [i, p] : t_) r.t_.emplace(i, -p);
  return r;
}

WeylElement WeylElement::pow(int e) const {
  WeylElement r = constant(F_, 1);
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

WeylElement WeylElement::left_mul(const Poly& r) const {
  WeylElement out(F_);
  for (const auto& [i, p] : t_) out.add_term(i, r * p);
  return out;
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  if (a.field() != b.field()) throw FieldMismatch();
  const Field& F = a.field();
  WeylElement out(F);
  if (a.is_zero() || b.is_zero()) return out;
  std::map<int, std::vector<Poly>> derivs;
  for (const auto& [j, s] : b.terms()) {
    auto& d = derivs[j];
    d.push_back(s);
    while (!d.back().is_zero()) d.push_back(d.back().derivative());
    d.pop_back();
  }
  std::map<int, Poly> acc;
  for (const auto& [i, r] : a.terms()) {
    for (const auto& [j, s] : b.terms()) {
      const auto& d = derivs[j];
      int kmax = std::min<int>(i, static_cast<int>(d.size()) - 1);
      for (int k = 0; k <= kmax; ++k) {
        Coeff c(F, binomial(i, k));
        if (c.is_zero()) continue;
        Poly t = (r * d[k]) * c;
        int deg = i - k + j;
        auto it = acc.find(deg);
        if (it == acc.end())
          acc.emplace(deg, std::move(t));
        else
          it->second += t;
      }
    }
  }
  for (auto& [deg, p] : acc) out.add_term(deg, p);
  return out;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) {
  return weyl_mul(a, b) - weyl_mul(b, a);
}

WeylElement apply_phi(const WeylElement& a) {
  const Field& F = a.field();
  WeylElement out(F);
  for (const auto& [i, r] : a.terms())
    for (int k = 0; k < r.length(); ++k)
      if (!r.coeffs()[k].is_zero()) out.add_term(k, Poly::monomial(F, r.coeffs()[k], i));
  return out;
}

WeylElement varpi_element(const Field& F) {
  std::int64_t p = F.characteristic();
  if (p == 0) throw DomainError("characteristic", "varpi requires characteristic p > 0");
  WeylElement out(F);
  for (long n = 1; n <= p - 1; ++n) {
    Coeff c = Coeff(F, factorial(p - 1 - n)) / Coeff(F, n);
    out.add_term(static_cast<int>(n), Poly::monomial(F, c, static_cast<int>(n)));
  }
  return out;
}

bool center_A1_test(const WeylElement& a) {
  std::int64_t p = a.field().characteristic();
  if (p == 0) return a.is_zero() || (a.is_polynomial() && a.coeff(0).is_constant());
  for (const auto& [i, r] : a.terms()) {
    if (i % p) return false;
    if (!in_frobenius_subring(r)) return false;
  }
  return true;
}

WeylElement reorder_naive(const Poly& f, int n) {
  // y * (sum r_i y^i) = sum (r_i y + r_i') y^i
  WeylElement cur(f);
  for (int step = 0; step < n; ++step) {
    WeylElement next(f.field());
    for (const auto& [i, r] : cur.terms()) {
      next.add_term(i + 1, r);
      next.add_term(i, r.derivative());
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace weylder
