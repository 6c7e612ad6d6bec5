#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylder/ah.hpp"

namespace weylder {

struct InvalidDerivation : DomainError {
  InvalidDerivation(const std::string& what, WeylElement d)
      : DomainError("invalid-derivation", what), defect(std::move(d)) {}
  WeylElement defect;
};

// derivation of A_h recorded by D(x) and D(yhat)
class Derivation {
 public:
  Derivation(Context ctx, WeylElement dx, WeylElement dyhat)
      : ctx_(std::move(ctx)), dx_(std::move(dx)), dy_(std::move(dyhat)) {}

  const Context& context() const { return ctx_; }
  const AhContext& ctx() const { return *ctx_; }
  const WeylElement& image_x() const { return dx_; }
  const WeylElement& image_yhat() const { return dy_; }
  bool is_zero() const { return dx_.is_zero() && dy_.is_zero(); }

  Derivation operator+(const Derivation& o) const { return {ctx_, dx_ + o.dx_, dy_ + o.dy_}; }
  Derivation operator-(const Derivation& o) const { return {ctx_, dx_ - o.dx_, dy_ - o.dy_}; }
  Derivation operator-() const { return {ctx_, -dx_, -dy_}; }
  Derivation operator*(const Coeff& c) const { return {ctx_, dx_ * c, dy_ * c}; }
  bool operator==(const Derivation& o) const { return dx_ == o.dx_ && dy_ == o.dy_; }
  bool operator!=(const Derivation& o) const { return !(*this == o); }

 private:
  Context ctx_;
  WeylElement dx_, dy_;
};

struct DerivationCheck {
  bool membership_ok = true;
  bool criterion_ok = true;
  WeylElement defect;
  std::string message;
  bool valid() const { return membership_ok && criterion_ok; }
};

// [v,x] + [yhat,u] - d(h) together with membership of u, v
DerivationCheck check_derivation(const AhContext& ctx, const WeylElement& u, const WeylElement& v);
Derivation make_derivation(const Context& ctx, const WeylElement& u, const WeylElement& v);

WeylElement apply(const Derivation& D, const WeylElement& a);
// D applied to a polynomial f(x) through D(x^k) = D(x^(k-1)) x + x^(k-1) D(x)
WeylElement apply_on_poly(const WeylElement& dx, const Poly& f);
Derivation bracket(const Derivation& D, const Derivation& E);
// z D for z in Z(A_h)
Derivation scale(const WeylElement& z, const Derivation& D);

Derivation ad(const WeylElement& a, const Context& ctx);
Derivation D_g(const Poly& g, const Context& ctx);
Derivation D_e(const WeylElement& e, const Context& ctx);

// derivations of A_1 by images of x and y
struct A1Derivation {
  WeylElement dx, dy;
  bool operator==(const A1Derivation& o) const { return dx == o.dx && dy == o.dy; }
};
bool is_A1_derivation(const A1Derivation& D);
WeylElement apply_A1(const A1Derivation& D, const WeylElement& a);
A1Derivation bracket_A1(const A1Derivation& D, const A1Derivation& E);
A1Derivation ad_A1(const WeylElement& a);
A1Derivation E_x(const Field& F);
A1Derivation E_y(const Field& F);
A1Derivation scale_A1(const WeylElement& z, const A1Derivation& D);
// restriction of an A_1 derivation that preserves A_h
Derivation restrict_to_Ah(const A1Derivation& D, const Context& ctx);

WeylElement E_x_apply(const WeylElement& a);
WeylElement E_y_apply(const WeylElement& a);
// closed forms
WeylElement E_x_on_xn(int n, const Field& F);
WeylElement E_x_on_poly(const Poly& g);
Poly E_x_on_pth_power(const Poly& g);  // E_x(g^p) = -(g')^p
WeylElement E_y_on_poly_in_y(const Poly& g);  // g read as g(y)
WeylElement E_y_on_yhat(const AhContext& ctx);
WeylElement E_x_on_yhat(const AhContext& ctx);

Derivation bhat_x(const Context& ctx);
Derivation bhat_f(const Context& ctx);
Derivation bhat_f_composite(const Context& ctx);  // zeta D_{h'/varrho} - bhat_x
Derivation D_qbreve(const Context& ctx);

// A d/dt1 + B d/dt2 on Z(A_h) = F[t1, t2]
struct CenterDerivation {
  CenterPoly coeff_t1, coeff_t2;
  bool operator==(const CenterDerivation& o) const {
    return coeff_t1 == o.coeff_t1 && coeff_t2 == o.coeff_t2;
  }
  CenterPoly apply(const CenterPoly& z) const;
  std::string str() const;
};
CenterDerivation restrict_to_center(const Derivation& D);
CenterDerivation bracket_center(const CenterDerivation& a, const CenterDerivation& b);

struct Extension {
  bool extendable = false;
  A1Derivation ext;
  std::string failure;
};
Extension extend_to_A1(const Derivation& D);

struct DecompA1Char0 {
  WeylElement u;
  Poly w;
};
DecompA1Char0 decompose_A1_char0(const WeylElement& dx, const WeylElement& dy);

struct DecompA1CharP {
  WeylElement w, z;  // central in A_1
  WeylElement b, c;
};
DecompA1CharP decompose_A1_charp(const WeylElement& dx, const WeylElement& dy);

struct NormalizerTerm {
  int n;
  Poly r;
  bool operator==(const NormalizerTerm& o) const { return n == o.n && r == o.r; }
};

struct DecompCharZero {
  Poly g;
  std::vector<NormalizerTerm> normalizer_terms;
  WeylElement inner_witness;
};
DecompCharZero decompose_Ah_char0(const Derivation& D);
Derivation reassemble(const DecompCharZero& d, const Context& ctx);

struct DecompCharP {
  CenterPoly u, v;
  Poly s;
  WeylElement normalizer_part;
  WeylElement inner_witness;
};
DecompCharP decompose_Ah_charp(const Derivation& D);
Derivation reassemble(const DecompCharP& d, const Context& ctx);

struct InnerVerdict {
  bool inner = false;
  WeylElement witness;
  std::string certificate;
};
InnerVerdict is_inner(const Derivation& D);

// c in F[x^p] with r - c in D h^i, so that (r - c) y^i is in A_h; nullopt if r y^i is not in A_h + Z(A_1)
std::optional<Poly> central_correction(int i, const Poly& r, const AhContext& ctx);

struct AlgebraMap {
  WeylElement image_x, image_yhat;
};
AlgebraMap aut_exp(const Poly& g, const AhContext& ctx);
WeylElement apply_aut(const Poly& g, const WeylElement& a, const AhContext& ctx);
// sum_n D_g^n(a)/n!, char 0, stops when the iterate vanishes
WeylElement exp_series(const Poly& g, const WeylElement& a, const Context& ctx, int max_terms = 64);

}  // namespace weylder
