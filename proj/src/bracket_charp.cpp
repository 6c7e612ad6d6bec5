#include <random>

#include "weylder/hochschild.hpp"
#include "weylder/linalg.hpp"
#include "weylder/text.hpp"

namespace weylder {

namespace {

int require_p(const AhContext& ctx, const char* what) {
  if (ctx.char0()) throw DomainError("characteristic", std::string(what) + " requires characteristic p > 0");
  return static_cast<int>(ctx.p());
}

SymDerivation single(const Field& F, Generator g) {
  return SymDerivation{{SymTerm{WeylElement::constant(F, 1), std::move(g)}}};
}

bool is_scalar(const WeylElement& a) { return a.is_zero() || (a.is_polynomial() && a.as_poly().is_constant()); }

std::string gen_str(const Generator& g) {
  switch (g.kind) {
    case GenKind::D:
      return "D_{" + to_string(g.poly) + "}";
    case GenKind::AdA:
      return "ad_{(" + to_string(g.poly) + ") a_" + std::to_string(g.n) + "}";
    case GenKind::Ad:
      return "ad_{" + to_string(g.elem) + "}";
    case GenKind::BhatX:
      return "bhat_x";
    case GenKind::Ex:
      return "E_x";
    case GenKind::Ey:
      return "E_y";
    case GenKind::Raw:
      return "[x -> " + to_string(g.raw_x) + ", yhat -> " + to_string(g.raw_yhat) + "]";
  }
  return "?";
}

// AdA(r, 0) is D_{-delta0(r)}
Generator normalize(const Generator& g, const AhContext& ctx) {
  if (g.kind == GenKind::AdA && g.n == 0) {
    Generator d;
    d.kind = GenKind::D;
    d.poly = -delta0(g.poly, ctx);
    return d;
  }
  return g;
}

}  // namespace

std::string SymDerivation::str() const {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    bool unit = t.coeff.is_polynomial() && t.coeff.as_poly().is_one();
    if (!unit) out += "(" + to_string(t.coeff) + ")*";
    out += gen_str(t.gen);
  }
  return out.empty() ? "0" : out;
}

SymDerivation sym_D(const Poly& g) {
  Generator G;
  G.kind = GenKind::D;
  G.poly = g;
  return single(g.field(), G);
}

SymDerivation sym_ad_a(const Poly& r, int n) {
  if (n < 0) throw DomainError("domain", "a_n needs n >= 0");
  Generator G;
  G.kind = GenKind::AdA;
  G.poly = r;
  G.n = n;
  return single(r.field(), G);
}

SymDerivation sym_ad(const WeylElement& a) {
  Generator G;
  G.kind = GenKind::Ad;
  G.elem = a;
  return single(a.field(), G);
}

SymDerivation sym_bhat_x(const Field& F) {
  Generator G;
  G.kind = GenKind::BhatX;
  return single(F, G);
}

SymDerivation sym_bhat_f(const AhContext& ctx) {
  require_p(ctx, "bhat_f");
  SymDerivation d = sym_scale(zeta_element(ctx), sym_D(ctx.hprime().exact_div(ctx.varrho())));
  return sym_add(d, sym_neg(sym_bhat_x(ctx.field())));
}

SymDerivation sym_E_x(const Field& F) {
  Generator G;
  G.kind = GenKind::Ex;
  return single(F, G);
}

SymDerivation sym_E_y(const Field& F) {
  Generator G;
  G.kind = GenKind::Ey;
  return single(F, G);
}

SymDerivation sym_scale(const WeylElement& z, const SymDerivation& s) {
  SymDerivation out;
  for (const auto& t : s.terms) {
    WeylElement c = z * t.coeff;
    if (!c.is_zero()) out.terms.push_back({c, t.gen});
  }
  return out;
}

SymDerivation sym_add(const SymDerivation& a, const SymDerivation& b) {
  SymDerivation out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

SymDerivation sym_neg(const SymDerivation& a) {
  SymDerivation out = a;
  for (auto& t : out.terms) t.coeff = -t.coeff;
  return out;
}

Derivation materialize(const Generator& g, const Context& ctx) {
  const Field& F = ctx->field();
  switch (g.kind) {
    case GenKind::D:
      return D_g(g.poly, ctx);
    case GenKind::AdA:
      if (g.n == 0) return D_g(-delta0(g.poly, *ctx), ctx);
      return ad(a_n_element(g.n, *ctx).left_mul(g.poly), ctx);
    case GenKind::Ad:
      return ad(g.elem, ctx);
    case GenKind::BhatX:
      return bhat_x(ctx);
    case GenKind::Ex:
      return restrict_to_Ah(E_x(F), ctx);
    case GenKind::Ey:
      return restrict_to_Ah(E_y(F), ctx);
    case GenKind::Raw:
      return Derivation(ctx, g.raw_x, g.raw_yhat);
  }
  throw DomainError("internal", "unknown generator");
}

Derivation materialize(const SymDerivation& s, const Context& ctx) {
  const Field& F = ctx->field();
  Derivation out(ctx, WeylElement(F), WeylElement(F));
  for (const auto& t : s.terms) out = out + scale(t.coeff, materialize(t.gen, ctx));
  return out;
}

Poly zeta_n(const Poly& r, int n, const AhContext& ctx) {
  const Field& F = ctx.field();
  Poly hp = ctx.hprime().exact_div(ctx.varrho());
  return ctx.h_over_pi_varrho() * delta0(r, ctx) + r * hp * Coeff(F, static_cast<long>(n));
}

Poly e_term(const Poly& g, const AhContext& ctx) {
  const Field& F = ctx.field();
  int p = require_p(ctx, "e_term");
  const Poly& h = ctx.h();
  Poly ghp = g * h.pow(p - 1);
  Poly s(F);
  for (int k = 1; k <= p - 1; ++k) {
    Coeff c = Coeff::one(F) / Coeff(F, static_cast<long>(k));
    if (k % 2 == 0) c = -c;
    s += ghp.derivative(k) * h.derivative(p - k) * c;
  }
  s += h.pow(p - 1) * (h * partial_p(g) - g * partial_p(h));
  return s.exact_div(ctx.varrho());
}

WeylElement e_term_b(const Poly& g, const AhContext& ctx) {
  const Field& F = ctx.field();
  int p = require_p(ctx, "e_term");
  const Poly& h = ctx.h();
  WeylElement b(F);
  Poly N = g;
  for (int k = 1; k <= p - 1; ++k) {
    // N = N_(k-1)
    Coeff c = Coeff::one(F) / Coeff(F, static_cast<long>(p - k));
    if (k % 2) c = -c;
    b.add_term(p - k, (N * h.pow(p - k)).exact_div(ctx.varrho()) * c);
    N = N.derivative() * h - N * ctx.hprime() * Coeff(F, static_cast<long>(k));
  }
  return b;
}

WeylElement project_P(const WeylElement& a, int p) {
  WeylElement out(a.field());
  for (const auto& [k, r] : a.terms())
    if (k % p == 0) out.add_term(k, r);
  return out;
}

namespace {

struct GenBracket {
  SymDerivation value;
  bool exact = true;
  bool fallback = false;
};

GenBracket negate(GenBracket b) {
  b.value = sym_neg(b.value);
  return b;
}

GenBracket gen_bracket(const Generator& G0, const Generator& H0, const Context& cp) {
  const AhContext& ctx = *cp;
  const Field& F = ctx.field();
  int p = static_cast<int>(ctx.p());
  Generator G = normalize(G0, ctx), H = normalize(H0, ctx);
  auto K = [](const Generator& g) { return g.kind; };
  GenBracket out;

  if (K(G) == GenKind::D && K(H) == GenKind::D) return out;
  // (b): [D_g, ad_{r a_n}] = n ad_{g r a_(n-1)} in HH^1
  if (K(G) == GenKind::D && K(H) == GenKind::AdA) {
    out.exact = false;
    Poly r = G.poly * H.poly * Coeff(F, static_cast<long>(H.n));
    if (!r.is_zero()) out.value = sym_ad_a(r, H.n - 1);
    return out;
  }
  if (K(G) == GenKind::AdA && K(H) == GenKind::D) return negate(gen_bracket(H, G, cp));
  // (c)
  if (K(G) == GenKind::AdA && K(H) == GenKind::AdA) {
    out.exact = false;
    Poly q = G.poly * delta0(H.poly, ctx) * Coeff(F, static_cast<long>(G.n)) -
             H.poly * delta0(G.poly, ctx) * Coeff(F, static_cast<long>(H.n));
    if (!q.is_zero()) out.value = sym_ad_a(q, G.n + H.n - 1);
    return out;
  }
  // (e): [D_g, bhat_x] = D_e + ad_b
  if (K(G) == GenKind::D && K(H) == GenKind::BhatX) {
    Poly e = e_term(G.poly, ctx);
    WeylElement b = e_term_b(G.poly, ctx);
    if (!e.is_zero()) out.value = sym_D(e);
    if (!b.is_zero()) out.value = sym_add(out.value, sym_ad(b));
    return out;
  }
  if (K(G) == GenKind::BhatX && K(H) == GenKind::D) return negate(gen_bracket(H, G, cp));
  // (d)
  if (K(G) == GenKind::BhatX && K(H) == GenKind::AdA) {
    int k = H.n / p, n = H.n % p;
    WeylElement z = zeta_element(ctx);
    out.exact = false;
    if (n >= 1) {
      Poly c = zeta_n(H.poly, n, ctx);
      if (!c.is_zero()) out.value = sym_scale(z.pow(k + 1), sym_ad_a(c, n - 1));
      return out;
    }
    Generator d;
    d.kind = GenKind::D;
    d.poly = delta0(H.poly, ctx);
    GenBracket inner = gen_bracket(d, G, cp);
    out.value = sym_scale(z.pow(k), inner.value);
    return out;
  }
  if (K(G) == GenKind::AdA && K(H) == GenKind::BhatX) return negate(gen_bracket(H, G, cp));
  if (K(G) == GenKind::Ex && K(H) == GenKind::Ey) {
    out.value = sym_ad(varpi_element(F));
    return out;
  }
  if (K(G) == GenKind::Ey && K(H) == GenKind::Ex) return negate(gen_bracket(H, G, cp));
  auto as_elem = [&](const Generator& g) -> std::optional<WeylElement> {
    if (g.kind == GenKind::Ad) return g.elem;
    if (g.kind == GenKind::AdA) return a_n_element(g.n, ctx).left_mul(g.poly);
    return std::nullopt;
  };
  if ((K(G) == GenKind::Ad || K(H) == GenKind::Ad) && as_elem(G) && as_elem(H)) {
    WeylElement c = commutator(*as_elem(G), *as_elem(H));
    if (!c.is_zero()) out.value = sym_ad(c);
    return out;
  }
  out.fallback = true;
  Derivation B = bracket(materialize(G, cp), materialize(H, cp));
  if (!B.is_zero()) {
    Generator raw;
    raw.kind = GenKind::Raw;
    raw.raw_x = B.image_x();
    raw.raw_yhat = B.image_yhat();
    out.value = single(F, raw);
  }
  return out;
}

}  // namespace

BracketResult bracket_charp(const SymDerivation& a, const SymDerivation& b, const Context& cp) {
  require_p(*cp, "bracket_charp");
  BracketResult out;
  // [u G, v H] = u G(v) H - v H(u) G + u v [G, H]
  for (const auto& s : a.terms)
    for (const auto& t : b.terms) {
      if (!is_scalar(t.coeff)) {
        WeylElement gv = apply(materialize(s.gen, cp), t.coeff);
        if (!gv.is_zero()) out.value.terms.push_back({s.coeff * gv, t.gen});
      }
      if (!is_scalar(s.coeff)) {
        WeylElement hu = apply(materialize(t.gen, cp), s.coeff);
        if (!hu.is_zero()) out.value.terms.push_back({-(t.coeff * hu), s.gen});
      }
      GenBracket gb = gen_bracket(s.gen, t.gen, cp);
      out.exact = out.exact && gb.exact;
      out.fallback = out.fallback || gb.fallback;
      out.value = sym_add(out.value, sym_scale(s.coeff * t.coeff, gb.value));
    }
  return out;
}

std::vector<QuotientDegree> normalizer_quotient(const AhContext& ctx, int max_y_degree) {
  const Field& F = ctx.field();
  int p = require_p(ctx, "normalizer_quotient");
  std::vector<QuotientDegree> out;
  const Poly& h = ctx.h();
  int dh = ctx.deg_h();
  int dq = ctx.h_over_pi().top();
  for (int i = 1; i <= max_y_degree; ++i) {
    QuotientDegree q{i, {}};
    if (i % p) {
      for (int j = 0; j < dq; ++j) q.generators.push_back(Poly::monomial(F, j) * ctx.pi() * h.pow(i - 1));
      out.push_back(q);
      continue;
    }
    int N = i * dh;
    if (N == 0) {
      out.push_back(q);
      continue;
    }
    Poly hi = h.pow(i), him1 = h.pow(i - 1);
    int M = std::max(1, (i - 1) * dh);
    // V = kernel of rho -> rho' mod h^(i-1)
    std::vector<Vec> cols;
    for (int j = 0; j < N; ++j) cols.push_back(to_vec(Poly::monomial(F, j).derivative().rem(him1), M));
    auto V = Matrix::from_columns(F, M, cols).nullspace();
    std::vector<Vec> W;
    for (int k = 0; k <= N; ++k) W.push_back(to_vec(Poly::monomial(F, k * p).rem(hi), N));
    int base = Matrix::from_columns(F, N, W).rank();
    std::vector<Vec> acc = W;
    for (const auto& v : V) {
      acc.push_back(v);
      int r = Matrix::from_columns(F, N, acc).rank();
      if (r > base) {
        base = r;
        q.generators.push_back(from_vec(F, v));
      } else {
        acc.pop_back();
      }
    }
    out.push_back(q);
  }
  return out;
}

HH1CharPReport freeness_and_module_report_charp(const Context& cp, int degree_bound, unsigned long seed,
                                                int certify_samples) {
  const AhContext& ctx = *cp;
  const Field& F = ctx.field();
  int p = require_p(ctx, "freeness_and_module_report_charp");
  HH1CharPReport r{false,
                   ctx.qbreve(),
                   D_qbreve(cp),
                   bhat_f(cp),
                   0,
                   ctx.theta_S(),
                   restrict_to_center(D_qbreve(cp)),
                   restrict_to_center(bhat_f(cp)),
                   {},
                   0,
                   false,
                   ""};
  r.free_over_center = ctx.h_over_pi().top() == 0;
  r.theta_quotient_dim = static_cast<int>(r.theta_S.size());
  r.normalizer_quotient = normalizer_quotient(ctx, degree_bound);

  std::mt19937_64 rng(seed);
  auto rnd = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto rpoly = [&](int deg) {
    std::vector<Coeff> c;
    for (int i = 0; i <= deg; ++i) c.push_back(Coeff(F, static_cast<long>(rnd(-3, 3))));
    return Poly(F, c);
  };
  if (r.free_over_center) {
    for (int s = 0; s < certify_samples; ++s) {
      WeylElement u(F);
      for (int t = 0; t < 2; ++t) u += a_n_element(rnd(1, 2 * p), ctx).left_mul(rpoly(2));
      u += WeylElement::term(Poly::monomial(F, Coeff(F, static_cast<long>(rnd(1, 3))), p * rnd(0, 2)), p * rnd(0, 2));
      InnerVerdict v = is_inner(ad(u, cp));
      if (v.inner && ad(v.witness, cp) == ad(u, cp)) ++r.inner_certified;
    }
  } else {
    WeylElement a1 = a_n_element(1, ctx);
    InnerVerdict outer = is_inner(ad(a1, cp));
    WeylElement hp = WeylElement(ctx.h().pow(p));
    InnerVerdict tors = is_inner(scale(hp, ad(a1, cp)));
    r.torsion_witness = !outer.inner && tors.inner;
    r.torsion_note = "ad_{a_1} is outer, h^p ad_{a_1} is inner";
  }
  return r;
}

}  // namespace weylder
