#include "weylder/derivation.hpp"
#include "weylder/text.hpp"

namespace weylder {

namespace {

void require_valid_A1(const WeylElement& dx, const WeylElement& dy) {
  if (!is_A1_derivation({dx, dy})) {
    const Field& F = dx.field();
    WeylElement defect = commutator(dy, WeylElement::x(F)) + commutator(WeylElement::y(F), dx);
    throw InvalidDerivation("not a derivation of A_1: [D(y), x] + [y, D(x)] = " + to_string(defect), defect);
  }
}

void internal(bool ok, const char* what) {
  if (!ok) throw DomainError("internal", what);
}

}  // namespace

DecompA1Char0 decompose_A1_char0(const WeylElement& dx, const WeylElement& dy) {
  const Field& F = dx.field();
  if (!F.is_char0()) throw DomainError("characteristic", "decompose_A1_char0 needs characteristic 0");
  require_valid_A1(dx, dy);
  WeylElement u(F);
  for (const auto& [i, d] : dx.terms()) u.add_term(i + 1, d * Coeff(F, mpq_class(1, i + 1)));
  WeylElement ey = dy - commutator(u, WeylElement::y(F));
  internal(ey.is_polynomial(), "(D - ad_u)(y) is not in F[x]");
  Poly w = -*antiderivative(ey.coeff(0)).value;
  return {u, w};
}

DecompA1CharP decompose_A1_charp(const WeylElement& dx, const WeylElement& dy) {
  const Field& F = dx.field();
  if (F.is_char0()) throw DomainError("characteristic", "decompose_A1_charp needs characteristic p");
  require_valid_A1(dx, dy);
  int p = static_cast<int>(F.characteristic());
  DecompA1CharP out{WeylElement(F), WeylElement(F), WeylElement(F), WeylElement(F)};
  for (const auto& [i, d] : dx.terms()) {
    if ((i + 1) % p)
      out.b.add_term(i + 1, d * (Coeff::one(F) / Coeff(F, static_cast<long>(i + 1))));
    else
      out.w.add_term(i - (p - 1), d);
  }
  internal(center_A1_test(out.w), "w is not central");
  // F = D - ad_b - w E_x kills x
  WeylElement fy = dy - commutator(out.b, WeylElement::y(F));
  for (const auto& [j, e] : fy.terms()) {
    internal(j % p == 0, "(D - ad_b)(y) has a y-degree prime to p");
    auto a = antiderivative(e);
    Poly c = a.obstruction;
    Poly rest = e - c * Poly::monomial(F, p - 1);
    Poly r = -*antiderivative(rest).value;
    out.z.add_term(j, c);
    out.c.add_term(j, r);
  }
  return out;
}

DecompCharZero decompose_Ah_char0(const Derivation& D) {
  const AhContext& ctx = D.ctx();
  const Field& F = ctx.field();
  if (!ctx.char0()) throw DomainError("characteristic", "decompose_Ah_char0 needs characteristic 0");
  auto chk = check_derivation(ctx, D.image_x(), D.image_yhat());
  if (!chk.valid()) throw InvalidDerivation(chk.message, chk.defect);

  DecompCharZero out{Poly(F), {}, WeylElement(F)};
  auto f = yhat_collect(D.image_yhat(), ctx);
  Poly r0 = f.empty() ? Poly(F) : f[0];
  auto [q, g] = r0.divmod(ctx.h());
  out.g = g;
  out.inner_witness += WeylElement(-*antiderivative(q).value);

  Derivation E(D.context(), D.image_x(), D.image_yhat() - WeylElement(r0));
  Extension ext = extend_to_A1(E);
  internal(ext.extendable, "remainder does not extend to A_1");
  auto [u, w] = decompose_A1_char0(ext.ext.dx, ext.ext.dy);
  WeylElement B = u + WeylElement(w);

  for (const auto& [i, b] : B.terms()) {
    if (i == 0) {
      out.inner_witness += WeylElement(b);
      continue;
    }
    auto rho = b.try_div(ctx.pi() * ctx.h().pow(i - 1));
    internal(rho.has_value(), "normalizer element fails pi_h h^(i-1) | r_i");
    auto [qi, ri] = rho->divmod(ctx.h_over_pi());
    out.inner_witness.add_term(i, qi * ctx.h().pow(i));
    if (!ri.is_zero()) out.normalizer_terms.push_back({i, ri});
  }
  internal(reassemble(out, D.context()) == D, "char 0 decomposition does not reassemble");
  return out;
}

Derivation reassemble(const DecompCharZero& d, const Context& ctx) {
  Derivation R = D_g(d.g, ctx) + ad(d.inner_witness, ctx);
  for (const auto& t : d.normalizer_terms)
    R = R + ad(a_n_element(t.n, *ctx).left_mul(t.r), ctx);
  return R;
}

std::optional<Poly> central_correction(int i, const Poly& r, const AhContext& ctx) {
  const Field& F = ctx.field();
  Poly hi = ctx.h().pow(i);
  if (i == 0 || hi.divides(r)) return Poly(F);
  if (ctx.char0() || i % ctx.p()) return std::nullopt;
  return frobenius_part_mod(r, hi);
}

DecompCharP decompose_Ah_charp(const Derivation& D) {
  const Context& cp = D.context();
  const AhContext& ctx = *cp;
  const Field& F = ctx.field();
  if (ctx.char0()) throw DomainError("characteristic", "decompose_Ah_charp needs characteristic p");
  auto chk = check_derivation(ctx, D.image_x(), D.image_yhat());
  if (!chk.valid()) throw InvalidDerivation(chk.message, chk.defect);
  int p = static_cast<int>(ctx.p());

  DecompCharP out{CenterPoly(F), CenterPoly(F), Poly(F), WeylElement(F), WeylElement(F)};
  CenterDerivation res = restrict_to_center(D);
  auto v = res.coeff_t1.div_t1(to_u(ctx.hp_over_varrho()));
  auto u = res.coeff_t2.div_t1(ctx.hbar());
  if (!u || !v) throw InvalidDerivation("Res(D) is outside the image of Res", WeylElement(F));
  out.u = *u;
  out.v = *v;

  Derivation E = D - scale(center_to_weyl(out.u, ctx), D_qbreve(cp)) - scale(center_to_weyl(out.v, ctx), bhat_f(cp));

  WeylElement b(F);
  for (const auto& [i, d] : E.image_x().terms()) {
    internal((i + 1) % p != 0, "kernel part has D(x) terms in degrees -1 mod p");
    b.add_term(i + 1, d * (Coeff::one(F) / Coeff(F, static_cast<long>(i + 1))));
  }
  WeylElement normal = b;
  WeylElement fy = E.image_yhat() - commutator(b, ctx.yhat());
  auto coords = centralizer_x_coords(fy, ctx);
  internal(coords.has_value(), "(E - ad_b)(yhat) is not in the centralizer of x");
  for (const auto& [k, fk] : *coords) {
    if (k == 0) {
      ThetaSplit sp = split_theta(fk, ctx);
      out.s = sp.s;
      out.inner_witness -= WeylElement(sp.g);
      continue;
    }
    // zeta^k D_{f_k} = ad_c with c = -(int f_k h^(kp-1)) y^(kp)
    auto a = antiderivative(fk * ctx.h().pow(k * p - 1));
    internal(a.integrable(), "zeta-part outside Theta");
    normal.add_term(k * p, -*a.value);
  }
  // move the A_h part of the normalizer element into the witness
  WeylElement reduced(F);
  for (const auto& [i, r] : normal.terms()) {
    auto [q, rem] = r.divmod(ctx.h().pow(i));
    out.inner_witness.add_term(i, q * ctx.h().pow(i));
    reduced.add_term(i, rem);
  }
  out.normalizer_part = reduced;
  internal(reassemble(out, cp) == D, "char p decomposition does not reassemble");
  return out;
}

Derivation reassemble(const DecompCharP& d, const Context& ctx) {
  Derivation R = scale(center_to_weyl(d.u, *ctx), D_qbreve(ctx)) + scale(center_to_weyl(d.v, *ctx), bhat_f(ctx)) +
                 D_g(d.s, ctx) + ad(d.normalizer_part, ctx) + ad(d.inner_witness, ctx);
  return R;
}

InnerVerdict is_inner(const Derivation& D) {
  const AhContext& ctx = D.ctx();
  const Field& F = ctx.field();
  InnerVerdict out{false, WeylElement(F), ""};
  if (ctx.char0()) {
    auto d = decompose_Ah_char0(D);
    if (!d.g.is_zero()) out.certificate = "D-part g = " + to_string(d.g) + " is nonzero";
    for (const auto& t : d.normalizer_terms) {
      if (!out.certificate.empty()) out.certificate += "; ";
      out.certificate += "normalizer term r_" + std::to_string(t.n) + " = " + to_string(t.r) + " is nonzero";
    }
    if (out.certificate.empty()) {
      out.inner = true;
      out.witness = d.inner_witness;
    }
    return out;
  }
  auto d = decompose_Ah_charp(D);
  std::vector<std::string> why;
  if (!d.u.is_zero()) why.push_back("coefficient of D_qbreve is " + d.u.str());
  if (!d.v.is_zero()) why.push_back("coefficient of bhat_f is " + d.v.str());
  if (!d.s.is_zero()) why.push_back("Theta/im delta part s = " + to_string(d.s) + " is nonzero");
  WeylElement witness = d.inner_witness;
  for (const auto& [i, r] : d.normalizer_part.terms()) {
    auto c = central_correction(i, r, ctx);
    if (!c) {
      why.push_back("normalizer term of y-degree " + std::to_string(i) + " is not in A_h + Z(A_1)");
      continue;
    }
    witness.add_term(i, r - *c);
  }
  if (why.empty()) {
    out.inner = true;
    out.witness = witness;
    internal(ad(witness, D.context()) == D, "inner witness does not reproduce D");
  } else {
    for (size_t i = 0; i < why.size(); ++i) out.certificate += (i ? "; " : "") + why[i];
  }
  return out;
}

}  // namespace weylder
