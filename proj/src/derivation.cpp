#include "weylder/derivation.hpp"

#include "weylder/text.hpp"

namespace weylder {

namespace {

WeylElement mul_right_x(const WeylElement& a) {
  WeylElement out(a.field());
  Poly x = Poly::x(a.field());
  for (const auto& [i, r] : a.terms()) {
    out.add_term(i, r * x);
    if (i > 0) out.add_term(i - 1, r * Coeff(a.field(), static_cast<long>(i)));
  }
  return out;
}

// D(x^k) for k = 0..n
std::vector<WeylElement> powers_image(const WeylElement& dx, int n) {
  const Field& F = dx.field();
  std::vector<WeylElement> out{WeylElement(F)};
  for (int k = 1; k <= n; ++k)
    out.push_back(mul_right_x(out.back()) + dx.left_mul(Poly::monomial(F, k - 1)));
  return out;
}

WeylElement combine(const std::vector<WeylElement>& dxk, const Poly& f) {
  WeylElement out(f.field());
  for (int k = 1; k < f.length(); ++k)
    if (!f.coeffs()[k].is_zero()) out += dxk[k] * f.coeffs()[k];
  return out;
}

}  // namespace

WeylElement apply_on_poly(const WeylElement& dx, const Poly& f) {
  if (f.length() <= 1) return WeylElement(f.field());
  return combine(powers_image(dx, f.top()), f);
}

DerivationCheck check_derivation(const AhContext& ctx, const WeylElement& u, const WeylElement& v) {
  DerivationCheck c;
  c.defect = WeylElement(ctx.field());
  if (!ah_membership(u, ctx)) {
    c.membership_ok = false;
    c.message = "D(x) = " + to_string(u) + " is not in A_h";
    return c;
  }
  if (!ah_membership(v, ctx)) {
    c.membership_ok = false;
    c.message = "D(yhat) = " + to_string(v) + " is not in A_h";
    return c;
  }
  WeylElement x = WeylElement::x(ctx.field());
  c.defect = commutator(v, x) + commutator(ctx.yhat(), u) - apply_on_poly(u, ctx.h());
  if (!c.defect.is_zero()) {
    c.criterion_ok = false;
    c.message = "[D(yhat), x] + [yhat, D(x)] - D(h) = " + to_string(c.defect);
  }
  return c;
}

Derivation make_derivation(const Context& ctx, const WeylElement& u, const WeylElement& v) {
  auto c = check_derivation(*ctx, u, v);
  if (!c.valid()) {
    if (!c.membership_ok) throw NotInAh(c.message);
    throw InvalidDerivation(c.message, c.defect);
  }
  return Derivation(ctx, u, v);
}

WeylElement apply(const Derivation& D, const WeylElement& a) {
  const AhContext& ctx = D.ctx();
  const Field& F = ctx.field();
  if (a.is_zero()) return WeylElement(F);
  auto f = yhat_collect(a, ctx);
  int maxdeg = 0;
  for (const auto& fj : f)
    if (!fj.is_zero()) maxdeg = std::max(maxdeg, fj.top());
  auto dxk = powers_image(D.image_x(), maxdeg);
  WeylElement out(F);
  WeylElement dyj(F);  // D(yhat^j)
  for (size_t j = 0; j < f.size(); ++j) {
    if (j > 0) dyj = dyj * ctx.yhat() + ctx.yhat_power(static_cast<int>(j) - 1) * D.image_yhat();
    if (f[j].is_zero()) continue;
    out += combine(dxk, f[j]) * ctx.yhat_power(static_cast<int>(j));
    out += dyj.left_mul(f[j]);
  }
  return out;
}

Derivation bracket(const Derivation& D, const Derivation& E) {
  WeylElement bx = apply(D, E.image_x()) - apply(E, D.image_x());
  WeylElement by = apply(D, E.image_yhat()) - apply(E, D.image_yhat());
  return Derivation(D.context(), bx, by);
}

Derivation scale(const WeylElement& z, const Derivation& D) {
  return Derivation(D.context(), z * D.image_x(), z * D.image_yhat());
}

Derivation ad(const WeylElement& a, const Context& ctx) {
  auto v = normalizer_test(a, *ctx);
  if (!v.in_normalizer) throw DomainError("normalizer", to_string(a) + " is not in N(A_h): " + v.reason);
  WeylElement x = WeylElement::x(ctx->field());
  return Derivation(ctx, commutator(a, x), commutator(a, ctx->yhat()));
}

Derivation D_g(const Poly& g, const Context& ctx) {
  return Derivation(ctx, WeylElement(ctx->field()), WeylElement(g));
}

Derivation D_e(const WeylElement& e, const Context& ctx) {
  if (!centralizer_x_coords(e, *ctx)) throw DomainError("centralizer", to_string(e) + " does not commute with x");
  return Derivation(ctx, WeylElement(ctx->field()), e);
}

bool is_A1_derivation(const A1Derivation& D) {
  const Field& F = D.dx.field();
  return (commutator(D.dy, WeylElement::x(F)) + commutator(WeylElement::y(F), D.dx)).is_zero();
}

WeylElement apply_A1(const A1Derivation& D, const WeylElement& a) {
  const Field& F = a.field();
  if (a.is_zero()) return WeylElement(F);
  int maxdeg = a.x_degree().value();
  auto dxk = powers_image(D.dx, maxdeg);
  WeylElement out(F);
  WeylElement dyi(F);
  WeylElement y = WeylElement::y(F);
  int cur = 0;
  for (const auto& [i, r] : a.terms()) {
    for (; cur < i; ++cur) dyi = dyi * y + WeylElement::y_pow(F, cur) * D.dy;
    out += combine(dxk, r) * WeylElement::y_pow(F, i);
    out += dyi.left_mul(r);
  }
  return out;
}

A1Derivation bracket_A1(const A1Derivation& D, const A1Derivation& E) {
  return {apply_A1(D, E.dx) - apply_A1(E, D.dx), apply_A1(D, E.dy) - apply_A1(E, D.dy)};
}

A1Derivation ad_A1(const WeylElement& a) {
  const Field& F = a.field();
  return {commutator(a, WeylElement::x(F)), commutator(a, WeylElement::y(F))};
}

A1Derivation scale_A1(const WeylElement& z, const A1Derivation& D) { return {z * D.dx, z * D.dy}; }

Derivation restrict_to_Ah(const A1Derivation& D, const Context& ctx) {
  WeylElement u = D.dx;
  WeylElement v = apply_A1(D, ctx->yhat());
  if (!ah_membership(u, *ctx) || !ah_membership(v, *ctx))
    throw NotInAh("the derivation of A_1 does not preserve A_h");
  return Derivation(ctx, u, v);
}

CenterPoly CenterDerivation::apply(const CenterPoly& z) const {
  return coeff_t1 * z.d_dt1() + coeff_t2 * z.d_dt2();
}

std::string CenterDerivation::str() const {
  std::string a = coeff_t1.str(), b = coeff_t2.str();
  return "(" + a + ") d/dt1 + (" + b + ") d/dt2";
}

CenterDerivation restrict_to_center(const Derivation& D) {
  const AhContext& ctx = D.ctx();
  if (ctx.char0()) throw DomainError("characteristic", "Res requires characteristic p > 0");
  int p = static_cast<int>(ctx.p());
  WeylElement xp = WeylElement(Poly::monomial(ctx.field(), p));
  auto A = center_coords(apply(D, xp), ctx);
  auto B = center_coords(apply(D, zeta_element(ctx)), ctx);
  if (!A || !B) throw DomainError("not-central", "D does not map the center into the center");
  return {*A, *B};
}

CenterDerivation bracket_center(const CenterDerivation& a, const CenterDerivation& b) {
  // [A d1 + B d2, C d1 + E d2]
  return {a.apply(b.coeff_t1) - b.apply(a.coeff_t1), a.apply(b.coeff_t2) - b.apply(a.coeff_t2)};
}

namespace {

// a with a * h = v, if it exists
std::optional<WeylElement> right_divide(const WeylElement& v, const Poly& h) {
  const Field& F = h.field();
  WeylElement rest = v, a(F);
  WeylElement hh(h);
  while (!rest.is_zero()) {
    int n = rest.y_degree().value();
    auto c = rest.coeff(n).try_div(h);
    if (!c) return std::nullopt;
    WeylElement t = WeylElement::term(*c, n);
    a += t;
    rest -= t * hh;
  }
  return a;
}

}  // namespace

Extension extend_to_A1(const Derivation& D) {
  const AhContext& ctx = D.ctx();
  Extension e;
  auto a = right_divide(D.image_yhat(), ctx.h());
  if (!a) {
    e.failure = "D(yhat) is not in A_1 h";
    return e;
  }
  auto b = right_divide(apply_on_poly(D.image_x(), ctx.h()), ctx.h());
  if (!b) {
    e.failure = "D(h) is not in A_1 h";
    return e;
  }
  e.extendable = true;
  e.ext = {D.image_x(), *a - WeylElement::y(ctx.field()) * *b};
  return e;
}

AlgebraMap aut_exp(const Poly& g, const AhContext& ctx) {
  return {WeylElement::x(ctx.field()), ctx.yhat() + WeylElement(g)};
}

WeylElement apply_aut(const Poly& g, const WeylElement& a, const AhContext& ctx) {
  auto f = yhat_collect(a, ctx);
  WeylElement img = ctx.yhat() + WeylElement(g);
  WeylElement pw = WeylElement::constant(ctx.field(), 1), out(ctx.field());
  for (size_t j = 0; j < f.size(); ++j) {
    if (j) pw = pw * img;
    out += pw.left_mul(f[j]);
  }
  return out;
}

WeylElement exp_series(const Poly& g, const WeylElement& a, const Context& ctx, int max_terms) {
  if (!ctx->char0()) throw DomainError("characteristic", "exp series needs characteristic 0");
  const Field& F = ctx->field();
  Derivation D = D_g(g, ctx);
  WeylElement term = a, out = a;
  for (int n = 1; n <= max_terms; ++n) {
    term = apply(D, term) * Coeff(F, mpq_class(1, n));
    if (term.is_zero()) return out;
    out += term;
  }
  throw DomainError("exp", "exponential series did not terminate");
}

}  // namespace weylder
