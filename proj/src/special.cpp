#include "weylder/derivation.hpp"

namespace weylder {

namespace {

int require_p(const Field& F, const char* what) {
  if (F.is_char0()) throw DomainError("characteristic", std::string(what) + " requires characteristic p > 0");
  return static_cast<int>(F.characteristic());
}

// (-1)^(k-1) / k
Coeff alt_inv(const Field& F, int k) {
  Coeff c = Coeff::one(F) / Coeff(F, static_cast<long>(k));
  return (k % 2) ? c : -c;
}

}  // namespace

A1Derivation E_x(const Field& F) {
  int p = require_p(F, "E_x");
  return {WeylElement::y_pow(F, p - 1), WeylElement(F)};
}

A1Derivation E_y(const Field& F) {
  int p = require_p(F, "E_y");
  return {WeylElement(F), WeylElement(Poly::monomial(F, p - 1))};
}

WeylElement E_x_apply(const WeylElement& a) { return apply_A1(E_x(a.field()), a); }
WeylElement E_y_apply(const WeylElement& a) { return apply_A1(E_y(a.field()), a); }

WeylElement E_x_on_xn(int n, const Field& F) {
  int p = require_p(F, "E_x");
  // sum_{k=1}^{p} C(n,k) x^(n-k) (d/dy)^(k-1) y^(p-1)
  WeylElement out(F);
  for (int k = 1; k <= p && k <= n; ++k) {
    mpz_class c = binomial(n, k) * factorial(p - 1) / factorial(p - k);
    out.add_term(p - k, Poly::monomial(F, Coeff(F, c), n - k));
  }
  return out;
}

WeylElement E_x_on_poly(const Poly& g) {
  const Field& F = g.field();
  int p = require_p(F, "E_x");
  WeylElement out(F);
  for (int k = 1; k <= p - 1; ++k) out.add_term(p - k, g.derivative(k) * alt_inv(F, k));
  out.add_term(0, -partial_p(g));
  return out;
}

Poly E_x_on_pth_power(const Poly& g) {
  int p = require_p(g.field(), "E_x");
  return -g.derivative().pow(p);
}

WeylElement E_y_on_poly_in_y(const Poly& g) {
  const Field& F = g.field();
  int p = require_p(F, "E_y");
  WeylElement out(F);
  // x^(p-k) g^(k)(y)
  for (int k = 1; k <= p - 1; ++k) {
    Poly gk = g.derivative(k) * alt_inv(F, k);
    for (int j = 0; j < gk.length(); ++j)
      out.add_term(j, Poly::monomial(F, gk.coeffs()[j], p - k));
  }
  Poly d = partial_p(g);
  for (int j = 0; j < d.length(); ++j) out.add_term(j, -Poly::constant(F, d.coeffs()[j]));
  return out;
}

WeylElement E_y_on_yhat(const AhContext& ctx) {
  int p = require_p(ctx.field(), "E_y");
  return WeylElement(Poly::monomial(ctx.field(), p - 1) * ctx.h());
}

WeylElement E_x_on_yhat(const AhContext& ctx) {
  const Field& F = ctx.field();
  int p = require_p(F, "E_x");
  const Poly& h = ctx.h();
  WeylElement out(F);
  out.add_term(p, ctx.hprime());
  for (int k = 1; k <= p - 2; ++k)
    out.add_term(p - k, h.derivative(k + 1) * (alt_inv(F, k) / Coeff(F, static_cast<long>(k + 1))));
  out.add_term(1, -partial_p(h));
  out.add_term(0, -partial_p(ctx.hprime()));
  return out;
}

Derivation bhat_x(const Context& ctx) {
  const Field& F = ctx->field();
  int p = require_p(F, "bhat_x");
  const Poly& w = ctx->hp_over_varrho();
  WeylElement dx = WeylElement::term(w, p - 1);
  WeylElement dy = E_x_on_yhat(*ctx).left_mul(w);
  return Derivation(ctx, dx, dy);
}

Derivation bhat_f(const Context& ctx) {
  const Field& F = ctx->field();
  int p = require_p(F, "bhat_f");
  const Poly& w = ctx->hp_over_varrho();
  const Poly& h = ctx->h();
  WeylElement dx = WeylElement::term(-w, p - 1);
  WeylElement dy(F);
  for (int k = 1; k <= p - 2; ++k)
    dy.add_term(p - k, w * h.derivative(k + 1) * (-alt_inv(F, k) / Coeff(F, static_cast<long>(k + 1))));
  dy.add_term(1, w * partial_p(h));
  dy.add_term(0, w * partial_p(ctx->hprime()));
  return Derivation(ctx, dx, dy);
}

Derivation bhat_f_composite(const Context& ctx) {
  WeylElement z = zeta_element(*ctx);
  Poly g = ctx->hprime().exact_div(ctx->varrho());
  return scale(z, D_g(g, ctx)) - bhat_x(ctx);
}

Derivation D_qbreve(const Context& ctx) {
  require_p(ctx->field(), "qbreve");
  return D_g(ctx->qbreve(), ctx);
}

}  // namespace weylder
