#include "weylder/poly.hpp"

#include <algorithm>

namespace weylder {

int Degree::value() const {
  if (!d_) throw DomainError("degree", "degree of the zero polynomial has no integer value");
  return *d_;
}

bool Degree::operator<(const Degree& o) const {
  if (!d_) return static_cast<bool>(o.d_);
  if (!o.d_) return false;
  return *d_ < *o.d_;
}

Poly::Poly(const Field& F, std::vector<Coeff> coeffs) : F_(F), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.characteristic() != F.characteristic()) throw FieldMismatch();
  trim();
}

Poly Poly::constant(const Field& F, const Coeff& c) { return Poly(F, {c}); }

Poly Poly::monomial(const Field& F, const Coeff& c, int deg) {
  if (c.is_zero()) return Poly(F);
  std::vector<Coeff> v(deg + 1, Coeff::zero(F));
  v[deg] = c;
  return Poly(F, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly::top() const { return degree().value(); }

Coeff Poly::coeff(int i) const {
  if (i < 0 || i >= length()) return Coeff::zero(F_);
  return c_[i];
}

Coeff Poly::leading() const {
  if (c_.empty()) return Coeff::zero(F_);
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Coeff::zero(F_));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Coeff::zero(F_));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  check(o);
  if (is_zero() || o.is_zero()) return Poly(F_);
  std::int64_t p = F_.characteristic();
  size_t n = c_.size() + o.c_.size() - 1;
  if (p) {
    // accumulate residues in 128 bits, reduce once per slot
    std::vector<unsigned __int128> acc(n, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
      auto a = static_cast<unsigned __int128>(c_[i].residue());
      if (!a) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) {
        acc[i + j] += a * static_cast<std::uint64_t>(o.c_[j].residue());
        if (acc[i + j] >> 126) acc[i + j] %= static_cast<std::uint64_t>(p);
      }
    }
    std::vector<Coeff> v;
    v.reserve(n);
    for (auto a : acc) v.emplace_back(F_, static_cast<long>(a % static_cast<std::uint64_t>(p)));
    return Poly(F_, std::move(v));
  }
  std::vector<Coeff> v(n, Coeff::zero(F_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return Poly(F_, std::move(v));
}

Poly Poly::operator*(const Coeff& c) const {
  if (c.characteristic() != F_.characteristic()) throw FieldMismatch();
  if (c.is_zero()) return Poly(F_);
  Poly r = *this;
  for (auto& a : r.c_) a *= c;
  return r;
}

Poly operator*(const Coeff& c, const Poly& f) { return f * c; }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& g) const {
  check(g);
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly r = *this;
  if (r.length() < g.length()) return {Poly(F_), r};
  int dg = g.top();
  Coeff inv = g.leading().inverse();
  std::vector<Coeff> q(r.length() - dg, Coeff::zero(F_));
  for (int i = r.length() - 1; i >= dg; --i) {
    Coeff c = r.c_[i] * inv;
    if (c.is_zero()) continue;
    q[i - dg] = c;
    for (int j = 0; j <= dg; ++j) r.c_[i - dg + j] -= c * g.c_[j];
  }
  r.c_.resize(dg);
  r.trim();
  return {Poly(F_, std::move(q)), r};
}

std::optional<Poly> Poly::try_div(const Poly& g) const {
  auto [q, r] = divmod(g);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Poly Poly::exact_div(const Poly& g) const {
  auto [q, r] = divmod(g);
  if (!r.is_zero()) throw NonExactDivision();
  return q;
}

bool Poly::divides(const Poly& f) const {
  if (is_zero()) return f.is_zero();
  return f.rem(*this).is_zero();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(F_);
  std::vector<Coeff> v;
  v.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Coeff(F_, static_cast<long>(i)));
  return Poly(F_, std::move(v));
}

Poly Poly::derivative(int k) const {
  if (k <= 0) return *this;
  if (length() <= k) return Poly(F_);
  // coefficient of x^(i-k) is i!/(i-k)! a_i
  std::vector<Coeff> v;
  v.reserve(c_.size() - k);
  for (size_t i = k; i < c_.size(); ++i) {
    mpz_class f = 1;
    for (size_t j = i - k + 1; j <= i; ++j) f *= static_cast<unsigned long>(j);
    v.push_back(c_[i] * Coeff(F_, f));
  }
  return Poly(F_, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Poly Poly::pow(int e) const {
  Poly r = constant(F_, 1);
  Poly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly Poly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly r(F_);
  r.c_.assign(k, Coeff::zero(F_));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Coeff Poly::eval(const Coeff& a) const {
  Coeff r = Coeff::zero(F_);
  for (int i = length() - 1; i >= 0; --i) r = r * a + c_[i];
  return r;
}

Poly Poly::compose(const Poly& g) const {
  check(g);
  Poly r(F_);
  for (int i = length() - 1; i >= 0; --i) r = r * g + constant(F_, c_[i]);
  return r;
}

Poly gcd_monic(const Poly& f, const Poly& g) {
  if (f.field() != g.field()) throw FieldMismatch();
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd", "gcd(0, 0) is undefined");
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Bezout extended_gcd(const Poly& f, const Poly& g) {
  if (f.field() != g.field()) throw FieldMismatch();
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd", "gcd(0, 0) is undefined");
  const Field& F = f.field();
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::constant(F, 1), s1(F);
  Poly t0(F), t1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
    Poly t = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  Coeff inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

namespace {

std::int64_t require_charp(const Poly& f, const char* op) {
  std::int64_t p = f.field().characteristic();
  if (p == 0) throw DomainError("characteristic", std::string(op) + " requires characteristic p > 0");
  return p;
}

}  // namespace

std::vector<Poly> frobenius_split(const Poly& f) {
  std::int64_t p = require_charp(f, "frobenius_split");
  const Field& F = f.field();
  std::vector<std::vector<Coeff>> parts(p);
  for (int i = 0; i < f.length(); ++i) {
    auto& v = parts[i % p];
    size_t k = i / p;
    if (v.size() <= k) v.resize(k + 1, Coeff::zero(F));
    v[k] = f.coeffs()[i];
  }
  std::vector<Poly> out;
  out.reserve(p);
  for (auto& v : parts) out.emplace_back(F, std::move(v));
  return out;
}

Poly frobenius_join(const std::vector<Poly>& parts) {
  if (parts.empty()) throw DomainError("frobenius", "no components");
  const Field& F = parts[0].field();
  std::int64_t p = require_charp(parts[0], "frobenius_join");
  if (static_cast<std::int64_t>(parts.size()) != p)
    throw DomainError("frobenius", "expected p components");
  Poly r(F);
  for (std::int64_t j = 0; j < p; ++j) r += from_u(parts[j]).shift(static_cast<int>(j));
  return r;
}

bool in_frobenius_subring(const Poly& f) {
  std::int64_t p = require_charp(f, "in_frobenius_subring");
  for (int i = 0; i < f.length(); ++i)
    if (i % p && !f.coeffs()[i].is_zero()) return false;
  return true;
}

Poly to_u(const Poly& f) {
  std::int64_t p = require_charp(f, "to_u");
  if (!in_frobenius_subring(f)) throw DomainError("frobenius", "polynomial is not in F[x^p]");
  std::vector<Coeff> v;
  for (int i = 0; i < f.length(); i += static_cast<int>(p)) v.push_back(f.coeffs()[i]);
  return Poly(f.field(), std::move(v));
}

Poly from_u(const Poly& g) {
  std::int64_t p = require_charp(g, "from_u");
  if (g.is_zero()) return g;
  const Field& F = g.field();
  std::vector<Coeff> v((g.length() - 1) * p + 1, Coeff::zero(F));
  for (int k = 0; k < g.length(); ++k) v[k * p] = g.coeffs()[k];
  return Poly(F, std::move(v));
}

Poly partial_p(const Poly& f) {
  std::int64_t p = require_charp(f, "partial_p");
  const Field& F = f.field();
  std::vector<Coeff> v;
  for (int n = static_cast<int>(p); n < f.length(); ++n) {
    long j = n / p;
    int target = n - static_cast<int>(p);
    if (static_cast<int>(v.size()) <= target) v.resize(target + 1, Coeff::zero(F));
    v[target] = f.coeffs()[n] * Coeff(F, j);
  }
  return Poly(F, std::move(v));
}

Antiderivative antiderivative(const Poly& f) {
  const Field& F = f.field();
  std::int64_t p = F.characteristic();
  Antiderivative out{std::nullopt, Poly(F)};
  std::vector<Coeff> v(f.length() + 1, Coeff::zero(F));
  std::vector<Coeff> obs;
  for (int i = 0; i < f.length(); ++i) {
    const Coeff& a = f.coeffs()[i];
    if (a.is_zero()) continue;
    if (p && (i + 1) % p == 0) {
      size_t k = i / p;
      if (obs.size() <= k) obs.resize(k + 1, Coeff::zero(F));
      obs[k] = a;
      continue;
    }
    v[i + 1] = a / Coeff(F, static_cast<long>(i + 1));
  }
  if (!obs.empty()) {
    out.obstruction = from_u(Poly(F, std::move(obs)));
    return out;
  }
  out.value = Poly(F, std::move(v));
  return out;
}

Poly pth_root(const Poly& f) { return to_u(f); }

}  // namespace weylder
