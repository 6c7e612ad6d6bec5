#include "weylder/field.hpp"

namespace weylder {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::int64_t reduce(const mpz_class& v, std::int64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
  return static_cast<std::int64_t>(r.get_ui());
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  if (a == 0) throw DivisionByZero();
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return t < 0 ? t + p : t;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == static_cast<std::uint64_t>(n - 1)) continue;
    bool comp = true;
    for (int i = 1; i < s && comp; ++i) {
      x = mulmod(x, x, n);
      if (x == static_cast<std::uint64_t>(n - 1)) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

Field::Field(std::int64_t p) : p_(p) {
  if (p != 0 && !is_prime(p))
    throw DomainError("field", "characteristic " + std::to_string(p) + " is not 0 or a prime");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Coeff::Coeff(const Field& F, long v) : p_(F.characteristic()) {
  if (p_) {
    r_ = v % p_;
    if (r_ < 0) r_ += p_;
  } else {
    q_ = v;
  }
}

Coeff::Coeff(const Field& F, const mpz_class& v) : p_(F.characteristic()) {
  if (p_)
    r_ = reduce(v, p_);
  else
    q_ = v;
}

Coeff::Coeff(const Field& F, const mpq_class& v) : p_(F.characteristic()) {
  if (p_) {
    std::int64_t d = reduce(v.get_den(), p_);
    if (d == 0)
      throw DivisionByZero("denominator " + v.get_den().get_str() + " vanishes in " + F.name());
    r_ = mulmod(reduce(v.get_num(), p_), inv_mod(d, p_), p_);
  } else {
    q_ = v;
  }
}

Coeff Coeff::operator+(const Coeff& o) const {
  check(o);
  Coeff c;
  c.p_ = p_;
  if (p_) {
    c.r_ = r_ + o.r_;
    if (c.r_ >= p_) c.r_ -= p_;
  } else {
    c.q_ = q_ + o.q_;
  }
  return c;
}

Coeff Coeff::operator-(const Coeff& o) const {
  check(o);
  Coeff c;
  c.p_ = p_;
  if (p_) {
    c.r_ = r_ - o.r_;
    if (c.r_ < 0) c.r_ += p_;
  } else {
    c.q_ = q_ - o.q_;
  }
  return c;
}

Coeff Coeff::operator*(const Coeff& o) const {
  check(o);
  Coeff c;
  c.p_ = p_;
  if (p_)
    c.r_ = mulmod(r_, o.r_, p_);
  else
    c.q_ = q_ * o.q_;
  return c;
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Coeff c;
  c.p_ = p_;
  if (p_)
    c.r_ = inv_mod(r_, p_);
  else
    c.q_ = 1 / q_;
  return c;
}

Coeff Coeff::operator/(const Coeff& o) const {
  check(o);
  return *this * o.inverse();
}

Coeff Coeff::operator-() const {
  Coeff c;
  c.p_ = p_;
  if (p_)
    c.r_ = r_ ? p_ - r_ : 0;
  else
    c.q_ = -q_;
  return c;
}

bool Coeff::operator==(const Coeff& o) const {
  if (p_ != o.p_) return false;
  return p_ ? r_ == o.r_ : q_ == o.q_;
}

std::string Coeff::str() const { return p_ ? std::to_string(r_) : q_.get_str(); }

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace weylder
