#include "weylder/text.hpp"

#include <cctype>
#include <vector>

namespace weylder {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const Field& F, const std::optional<Poly>& h)
      : s_(s), F_(F), h_(h) {}

  WeylElement run() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty expression");
    WeylElement v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  const std::string& s_;
  Field F_;
  std::optional<Poly> h_;
  size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  WeylElement expr() {
    WeylElement v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  WeylElement term() {
    WeylElement v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        size_t at = pos_;
        WeylElement d = unary();
        if (d.is_zero()) throw ParseError(at, "division by zero");
        if (!d.is_polynomial() || !d.coeff(0).is_constant())
          throw ParseError(at, "division is only by nonzero constants");
        v = v * d.coeff(0).coeff(0).inverse();
      } else {
        return v;
      }
    }
  }

  WeylElement unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  WeylElement power() {
    WeylElement base = atom();
    if (eat('^')) {
      skip();
      size_t at = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError(at, "exponent must be a nonnegative integer");
      std::string digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
      if (digits.size() > 6) throw ParseError(at, "exponent too large");
      return base.pow(std::stoi(digits));
    }
    return base;
  }

  WeylElement atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = s_[pos_];
    size_t at = pos_;
    if (c == '(') {
      ++pos_;
      WeylElement v = expr();
      if (!eat(')')) throw ParseError(pos_, "expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
      return WeylElement(Poly::constant(F_, Coeff(F_, mpz_class(digits))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) id += s_[pos_++];
      if (id == "x") return WeylElement::x(F_);
      if (id == "y") return WeylElement::y(F_);
      if (id == "yhat") {
        if (!h_) throw ParseError(at, "yhat needs a context polynomial h");
        return weyl_mul(WeylElement::y(F_), WeylElement(*h_));
      }
      throw ParseError(at, "unknown symbol '" + id + "'");
    }
    throw ParseError(at, std::string("unexpected '") + c + "'");
  }
};

// body of a single monomial c*x^k without sign handling
std::string mono(const Coeff& c, int k, const std::string& var) {
  std::string v = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
  if (k == 0) return c.str();
  if (c.is_one()) return v;
  if (c == -Coeff::one(c.field()) && c.characteristic() == 0) return "-" + v;
  return c.str() + "*" + v;
}

}  // namespace

WeylElement parse_weyl(const std::string& text, const Field& F, const std::optional<Poly>& h) {
  return Parser(text, F, h).run();
}

Poly parse_poly(const std::string& text, const Field& F) {
  WeylElement a = parse_weyl(text, F);
  if (!a.is_polynomial()) throw ParseError(0, "expected a polynomial in x, got y terms");
  return a.coeff(0);
}

std::string to_string(const Poly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = 0; k < f.length(); ++k) {
    const Coeff& c = f.coeffs()[k];
    if (c.is_zero()) continue;
    std::string m = mono(c, k, var);
    if (out.empty())
      out = m;
    else if (m[0] == '-')
      out += " - " + m.substr(1);
    else
      out += " + " + m;
  }
  return out;
}

std::string to_string(const WeylElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [i, r] : a.terms()) {
    std::string ys = i == 0 ? "" : (i == 1 ? "y" : "y^" + std::to_string(i));
    std::string m;
    int nonzero = 0;
    for (const auto& c : r.coeffs())
      if (!c.is_zero()) ++nonzero;
    if (i == 0) {
      m = to_string(r);
    } else if (nonzero > 1) {
      m = "(" + to_string(r) + ")*" + ys;
    } else {
      std::string cr = to_string(r);
      if (cr == "1")
        m = ys;
      else if (cr == "-1")
        m = "-" + ys;
      else
        m = cr + "*" + ys;
    }
    if (out.empty())
      out = m;
    else if (m[0] == '-')
      out += " - " + m.substr(1);
    else
      out += " + " + m;
  }
  return out;
}

}  // namespace weylder
