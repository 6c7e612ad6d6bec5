#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weylder {

class DomainError : public std::runtime_error {
 public:
  DomainError(std::string category, const std::string& what)
      : std::runtime_error(what), category_(std::move(category)) {}
  const std::string& category() const { return category_; }

 private:
  std::string category_;
};

struct FieldMismatch : DomainError {
  FieldMismatch() : DomainError("field", "operands live over different fields") {}
};

struct DivisionByZero : DomainError {
  explicit DivisionByZero(const std::string& what = "division by zero")
      : DomainError("division-by-zero", what) {}
};

struct NonExactDivision : DomainError {
  explicit NonExactDivision(const std::string& what = "division is not exact")
      : DomainError("non-exact-division", what) {}
};

bool is_prime(std::int64_t n);

class Field {
 public:
  Field() = default;
  explicit Field(std::int64_t p);

  static Field rationals() { return Field(); }

  std::int64_t characteristic() const { return p_; }
  bool is_char0() const { return p_ == 0; }
  std::string name() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  std::int64_t p_ = 0;
};

class Coeff {
 public:
  Coeff() = default;
  Coeff(const Field& F, long v);
  Coeff(const Field& F, const mpz_class& v);
  Coeff(const Field& F, const mpq_class& v);

  static Coeff zero(const Field& F) { return Coeff(F, 0L); }
  static Coeff one(const Field& F) { return Coeff(F, 1L); }

  Field field() const { return p_ == 0 ? Field() : Field(p_); }
  std::int64_t characteristic() const { return p_; }
  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

  std::int64_t residue() const { return r_; }
  const mpq_class& rational() const { return q_; }

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff inverse() const;

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  // canonical text: residue in [0,p) or a reduced fraction a/b
  std::string str() const;

 private:
  std::int64_t p_ = 0;
  std::int64_t r_ = 0;
  mpq_class q_;

  void check(const Coeff& o) const {
    if (p_ != o.p_) throw FieldMismatch();
  }
};

mpz_class binomial(long n, long k);
mpz_class factorial(long n);

}  // namespace weylder
