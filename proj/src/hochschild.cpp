#include "weylder/hochschild.hpp"

#include <regex>

#include "weylder/linalg.hpp"
#include "weylder/text.hpp"

namespace weylder {

namespace {

void need_char0(const AhContext& ctx, const char* what) {
  if (!ctx.char0()) throw DomainError("characteristic", std::string(what) + " needs characteristic 0");
}

void internal(bool ok, const char* what) {
  if (!ok) throw DomainError("internal", what);
}

}  // namespace

std::string HH1ClassChar0::str() const {
  std::string out;
  if (!g.is_zero()) out = "D_{" + to_string(g) + "}";
  for (const auto& [n, r] : terms) {
    if (!out.empty()) out += " + ";
    out += "ad_{(" + to_string(r) + ") a_" + std::to_string(n) + "}";
  }
  return out.empty() ? "0" : out;
}

HH1ClassChar0 make_class_char0(const Poly& g, const std::map<int, Poly>& terms, const AhContext& ctx) {
  need_char0(ctx, "HH^1 classes");
  Poly G = g;
  HH1ClassChar0 out{Poly(ctx.field()), {}};
  for (const auto& [n, r] : terms) {
    if (n < 0) throw DomainError("domain", "a_n needs n >= 0");
    if (n == 0) {
      G -= delta0(r, ctx);
      continue;
    }
    Poly rem = r.rem(ctx.h_over_pi());
    if (!rem.is_zero()) out.terms[n] = rem;
  }
  out.g = G.rem(ctx.h());
  return out;
}

HH1ClassChar0 class_D(const Poly& g, const AhContext& ctx) { return make_class_char0(g, {}, ctx); }

HH1ClassChar0 class_ad_a(const Poly& r, int n, const AhContext& ctx) {
  return make_class_char0(Poly(ctx.field()), {{n, r}}, ctx);
}

HH1ClassChar0 add(const HH1ClassChar0& a, const HH1ClassChar0& b, const AhContext& ctx) {
  std::map<int, Poly> t = a.terms;
  for (const auto& [n, r] : b.terms) {
    auto it = t.find(n);
    if (it == t.end())
      t[n] = r;
    else
      it->second += r;
  }
  return make_class_char0(a.g + b.g, t, ctx);
}

HH1ClassChar0 scale(const Coeff& c, const HH1ClassChar0& a) {
  HH1ClassChar0 out{a.g * c, {}};
  if (c.is_zero()) return out;
  for (const auto& [n, r] : a.terms) out.terms[n] = r * c;
  return out;
}

Derivation representative(const HH1ClassChar0& c, const Context& ctx) {
  Derivation D = D_g(c.g, ctx);
  for (const auto& [n, r] : c.terms) D = D + ad(a_n_element(n, *ctx).left_mul(r), ctx);
  return D;
}

HH1ClassChar0 canonical_class_char0(const Derivation& D) {
  const AhContext& ctx = D.ctx();
  need_char0(ctx, "canonical_class_char0");
  auto d = decompose_Ah_char0(D);
  std::map<int, Poly> t;
  for (const auto& term : d.normalizer_terms) t[term.n] += term.r;
  return make_class_char0(d.g, t, ctx);
}

HH1ClassChar0 bracket_char0(const HH1ClassChar0& a, const HH1ClassChar0& b, const AhContext& ctx) {
  need_char0(ctx, "bracket_char0");
  const Field& F = ctx.field();
  Poly g(F);
  std::map<int, Poly> t;
  auto put = [&](int n, const Poly& r) {
    if (n == 0)
      g -= delta0(r, ctx);
    else
      t[n] += r;
  };
  // [D_g, ad_{r a_n}] = n ad_{g r a_(n-1)}
  auto d_ad = [&](const Poly& gg, int n, const Poly& r, const Coeff& sign) {
    put(n - 1, gg * r * Coeff(F, static_cast<long>(n)) * sign);
  };
  Coeff one = Coeff::one(F);
  for (const auto& [n, r] : b.terms) d_ad(a.g, n, r, one);
  for (const auto& [n, r] : a.terms) d_ad(b.g, n, r, -one);
  // [ad_{r a_m}, ad_{s a_n}] = ad_{q a_(m+n-1)}, q = m r delta0(s) - n s delta0(r)
  for (const auto& [m, r] : a.terms)
    for (const auto& [n, s] : b.terms) {
      Poly q = r * delta0(s, ctx) * Coeff(F, static_cast<long>(m)) - s * delta0(r, ctx) * Coeff(F, static_cast<long>(n));
      put(m + n - 1, q);
    }
  return make_class_char0(g, t, ctx);
}

std::vector<HH1ClassChar0> center_HH1_char0(const AhContext& ctx) {
  need_char0(ctx, "center_HH1_char0");
  const Field& F = ctx.field();
  std::vector<HH1ClassChar0> out;
  int dp = ctx.pi().top();
  std::vector<HH1ClassChar0> gens;
  for (int i = 0; i < ctx.deg_h(); ++i) gens.push_back(class_D(Poly::monomial(F, i), ctx));
  int dq = ctx.h_over_pi().top();
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i < dq; ++i) gens.push_back(class_ad_a(Poly::monomial(F, i), n, ctx));
  for (int j = 0; j < dp; ++j) {
    HH1ClassChar0 c = class_D(Poly::monomial(F, j) * ctx.h_over_pi(), ctx);
    for (const auto& g : gens) internal(bracket_char0(c, g, ctx).is_zero(), "center element fails to commute");
    out.push_back(c);
  }
  return out;
}

GSplit split_g_char0(const Poly& g, const AhContext& ctx) {
  need_char0(ctx, "split_g_char0");
  const Field& F = ctx.field();
  int n = ctx.deg_h();
  int dp = ctx.pi().top();
  int dq = n - dp;
  std::vector<Vec> cols;
  for (int j = 0; j < dp; ++j) cols.push_back(to_vec(Poly::monomial(F, j) * ctx.h_over_pi(), n));
  for (int i = 0; i < dq; ++i) cols.push_back(to_vec(-delta0(Poly::monomial(F, i), ctx), n));
  GSplit out{Poly(F), Poly(F)};
  if (n == 0) return out;
  auto sol = Matrix::from_columns(F, n, cols).solve(to_vec(g.rem(ctx.h()), n));
  internal(sol.has_value(), "g-slot does not split");
  out.c = from_vec(F, Vec(sol->begin(), sol->begin() + dp));
  out.r0 = from_vec(F, Vec(sol->begin() + dp, sol->end()));
  return out;
}

std::pair<HH1ClassChar0, HH1ClassChar0> center_commutator_split(const HH1ClassChar0& c, const AhContext& ctx) {
  GSplit s = split_g_char0(c.g, ctx);
  HH1ClassChar0 central = class_D(s.c * ctx.h_over_pi(), ctx);
  HH1ClassChar0 comm = c;
  comm.g = (-delta0(s.r0, ctx)).rem(ctx.h());
  return {central, comm};
}

bool nilpotent_ideal_membership(const HH1ClassChar0& c, const AhContext& ctx) {
  need_char0(ctx, "nilpotent_ideal_membership");
  const Poly& pi2 = ctx.pi2();
  GSplit s = split_g_char0(c.g, ctx);
  if (!s.c.is_zero() || !pi2.divides(s.r0)) return false;
  for (const auto& [n, r] : c.terms)
    if (!pi2.divides(r)) return false;
  return true;
}

int nilpotency_index_bound(const AhContext& ctx) {
  const Poly& q = ctx.h_over_pi();
  if (q.is_constant()) return 0;
  Poly pw = Poly::constant(ctx.field(), 1);
  for (int n = 1;; ++n) {
    pw = pw * ctx.pi2();
    if (q.divides(pw)) return n;
  }
}

namespace {

Poly upsilon(const AhContext& ctx) {
  Bezout b = extended_gcd(vartheta0(ctx), ctx.pi2());
  internal(b.gcd.is_one(), "vartheta0 is not a unit modulo pi2");
  return b.s.rem(ctx.pi2());
}

}  // namespace

std::vector<WittClassElement> witt_quotient_map(const HH1ClassChar0& c, const AhContext& ctx) {
  need_char0(ctx, "witt_quotient_map");
  std::vector<WittClassElement> out;
  const Poly& pi2 = ctx.pi2();
  if (pi2.is_constant()) return out;
  Poly th = vartheta0(ctx);
  auto emit = [&](const Poly& r, int n) {
    // ad_{r a_n} = -e_{r, n-1}
    Poly res = (-(r * th)).rem(pi2);
    if (!res.is_zero()) out.push_back({res, n - 1});
  };
  GSplit s = split_g_char0(c.g, ctx);
  emit(s.r0, 0);
  for (const auto& [n, r] : c.terms) emit(r, n);
  return out;
}

HH1ClassChar0 witt_e(const Poly& g, int m, const AhContext& ctx) {
  if (m < -1) throw DomainError("domain", "Witt index must be >= -1");
  return class_ad_a(-g, m + 1, ctx);
}

HH1ClassChar0 witt_inverse(const WittClassElement& w, const AhContext& ctx) {
  need_char0(ctx, "witt_inverse");
  if (ctx.pi2().is_constant()) return HH1ClassChar0{Poly(ctx.field()), {}};
  return witt_e((w.residue * upsilon(ctx)).rem(ctx.pi2()), w.level, ctx);
}

std::vector<WittClassElement> witt_bracket(const std::vector<WittClassElement>& a,
                                           const std::vector<WittClassElement>& b, const AhContext& ctx) {
  const Field& F = ctx.field();
  std::map<int, Poly> acc;
  for (const auto& u : a)
    for (const auto& v : b) {
      long c = v.level - u.level;
      if (c == 0) continue;
      acc[u.level + v.level] += u.residue * v.residue * Coeff(F, c);
    }
  std::vector<WittClassElement> out;
  for (auto& [m, r] : acc) {
    Poly red = r.rem(ctx.pi2());
    if (!red.is_zero()) out.push_back({red, m});
  }
  return out;
}

std::vector<Factor> parse_and_verify_factors(const std::string& text, const Poly& h) {
  const Field& F = h.field();
  std::vector<Factor> out;
  static const std::regex with_exp(R"(^\s*(.*?)\s*\^\s*(\d+)\s*$)");
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::smatch m;
    std::string base = item;
    int alpha = 1;
    if (std::regex_match(item, m, with_exp)) {
      std::string b = m[1];
      bool paren = b.size() >= 2 && b.front() == '(' && b.back() == ')';
      bool atom = b.find_first_of("+-*") == std::string::npos;
      if (paren || atom) {
        base = paren ? b.substr(1, b.size() - 2) : b;
        alpha = std::stoi(m[2]);
      }
    }
    out.push_back({parse_poly(base, F), alpha});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  verify_factors(out, h);
  return out;
}

void verify_factors(const std::vector<Factor>& f, const Poly& h) {
  const Field& F = h.field();
  auto fail = [](const std::string& why) { throw DomainError("factors", "factor list rejected: " + why); };
  Poly prod = Poly::constant(F, 1);
  for (size_t i = 0; i < f.size(); ++i) {
    const Poly& u = f[i].u;
    if (f[i].alpha < 1) fail("exponents must be positive");
    if (u.is_constant()) fail(to_string(u) + " is constant");
    if (!gcd_monic(u, u.derivative()).is_one()) fail(to_string(u) + " is not squarefree");
    for (size_t j = 0; j < i; ++j)
      if (!gcd_monic(u, f[j].u).is_one()) fail(to_string(u) + " and " + to_string(f[j].u) + " are not coprime");
    prod = prod * u.pow(f[i].alpha);
  }
  if (h.is_zero() || prod.monic() != h.monic()) fail("product is not a scalar multiple of h = " + to_string(h));
  int p = static_cast<int>(F.characteristic());
  Poly rad = Poly::constant(F, 1), pi2 = Poly::constant(F, 1);
  for (const auto& x : f) {
    if (p == 0 || x.alpha % p) rad = rad * x.u;
    if (x.alpha > 1) pi2 = pi2 * x.u;
  }
  if (rad.monic() != pi_h(h)) fail("the factors do not reproduce pi_h");
  if (p == 0 && pi2.monic() != pi_h(h.exact_div(pi_h(h)))) fail("the factors do not reproduce pi2");
}

HH1ReportChar0 structure_report_char0(const AhContext& ctx, const std::optional<std::vector<Factor>>& factors) {
  need_char0(ctx, "structure_report_char0");
  HH1ReportChar0 r;
  r.dim_center = ctx.pi().top();
  for (int j = 0; j < r.dim_center; ++j) r.center_basis.push_back(Poly::monomial(ctx.field(), j) * ctx.h_over_pi());
  if (factors) {
    verify_factors(*factors, ctx.h());
    r.factors_given = true;
    for (const auto& f : *factors)
      if (f.alpha > 1) r.multiplicity_gt1_primes.push_back(f);
    r.witt_summand_count = static_cast<int>(r.multiplicity_gt1_primes.size());
  }
  int dq = ctx.h_over_pi().top();
  r.nilpotent_N_trivial = ctx.pi2().top() == dq;
  r.nilpotency_index_bound = nilpotency_index_bound(ctx);
  r.abelian = dq == 0;
  r.nilpotent_lie_algebra = dq == 0;
  r.hh1_dim_finite_part = dq == 0 ? ctx.deg_h() : 0;
  return r;
}

}  // namespace weylder
