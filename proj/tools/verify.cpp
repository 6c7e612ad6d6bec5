#include <functional>

#include "commands.hpp"
#include "weylder/random.hpp"
#include "weylder/text.hpp"

namespace cli {

using namespace weylder;

namespace {

// nullopt on success, otherwise the failing inputs in the text grammar
using Check = std::function<std::optional<std::string>(Rng&, int size)>;

struct Property {
  std::string name;
  int trials;
  Check check;
};

std::string show(const WeylElement& a) { return "\"" + to_string(a) + "\""; }
std::string show(const Poly& f) { return "\"" + to_string(f) + "\""; }

std::optional<std::string> guarded(const Check& c, Rng& rng, int size) {
  try {
    return c(rng, size);
  } catch (const DomainError& e) {
    return "exception [" + e.category() + "]: " + e.what();
  }
}

Derivation random_derivation(Rng& rng, const Context& ctx, int size) {
  const AhContext& c = *ctx;
  const Field& F = c.field();
  WeylElement u = rng.ah_element(c, size / 2, size);
  for (int n = 1; n <= size / 2 + 1; ++n) u += a_n_element(n, c).left_mul(rng.poly(F, size / 2, 3));
  Derivation D = D_g(rng.poly(F, c.deg_h() + size), ctx) + ad(u, ctx);
  if (!c.char0()) {
    WeylElement z = WeylElement(from_u(rng.poly(F, 1, 2))) + zeta_element(c).left_mul(from_u(rng.poly(F, 1, 2)));
    D = D + scale(z, D_qbreve(ctx)) + scale(WeylElement(from_u(rng.poly(F, 1, 2))), bhat_f(ctx));
  }
  return D;
}

std::string show(const Derivation& D) { return "{\"Dx\": " + show(D.image_x()) + ", \"Dyhat\": " + show(D.image_yhat()) + "}"; }

SymDerivation random_generator(Rng& rng, const AhContext& ctx, int size) {
  const Field& F = ctx.field();
  int p = static_cast<int>(ctx.p());
  switch (rng.uniform(0, 3)) {
    case 0:
      return sym_D(rng.poly(F, size));
    case 1:
      return sym_ad_a(rng.poly(F, size / 2), rng.uniform(0, 2 * p + 1));
    case 2:
      return sym_bhat_x(F);
    default:
      return sym_ad(rng.ah_element(ctx, 1, size / 2));
  }
}

std::vector<Property> properties(const Context& ctx) {
  const AhContext& c = *ctx;
  const Field& F = c.field();
  int p = static_cast<int>(c.p());
  std::vector<Property> out;
  out.push_back({"print-parse round trip", 20, [F](Rng& rng, int size) -> std::optional<std::string> {
                   WeylElement a = rng.weyl(F, size, size);
                   Poly f = rng.poly(F, 2 * size);
                   if (parse_weyl(to_string(a), F) != a) return "a = " + show(a);
                   if (parse_poly(to_string(f), F) != f) return "f = " + show(f);
                   return std::nullopt;
                 }});
  out.push_back({"A_1 associativity", 20, [F](Rng& rng, int size) -> std::optional<std::string> {
                   WeylElement a = rng.weyl(F, size, size), b = rng.weyl(F, size, size), d = rng.weyl(F, size, size);
                   if ((a * b) * d != a * (b * d)) return "a = " + show(a) + ", b = " + show(b) + ", c = " + show(d);
                   return std::nullopt;
                 }});
  out.push_back({"A_h closed under products", 20, [&c](Rng& rng, int size) -> std::optional<std::string> {
                   WeylElement a = rng.ah_element(c, size / 2, size), b = rng.ah_element(c, size / 2, size);
                   if (!ah_membership(a * b, c)) return "a = " + show(a) + ", b = " + show(b);
                   return std::nullopt;
                 }});
  out.push_back({"derivation criterion", 20, [ctx](Rng& rng, int size) -> std::optional<std::string> {
                   Derivation D = random_derivation(rng, ctx, size);
                   if (!check_derivation(*ctx, D.image_x(), D.image_yhat()).valid()) return "D = " + show(D);
                   return std::nullopt;
                 }});
  out.push_back({"Leibniz rule", 15, [ctx](Rng& rng, int size) -> std::optional<std::string> {
                   Derivation D = random_derivation(rng, ctx, size);
                   WeylElement a = rng.ah_element(*ctx, 1, size), b = rng.ah_element(*ctx, 1, size);
                   if (apply(D, a * b) != apply(D, a) * b + a * apply(D, b))
                     return "D = " + show(D) + ", a = " + show(a) + ", b = " + show(b);
                   return std::nullopt;
                 }});
  out.push_back({"decomposition reassembly", 15, [ctx](Rng& rng, int size) -> std::optional<std::string> {
                   Derivation D = random_derivation(rng, ctx, size);
                   bool ok = ctx->char0() ? reassemble(decompose_Ah_char0(D), ctx) == D
                                          : reassemble(decompose_Ah_charp(D), ctx) == D;
                   if (!ok) return "D = " + show(D);
                   return std::nullopt;
                 }});
  out.push_back({"inner derivations certified", 15, [ctx](Rng& rng, int size) -> std::optional<std::string> {
                   WeylElement a = rng.ah_element(*ctx, size / 2, size);
                   Derivation D = ad(a, ctx);
                   InnerVerdict v = is_inner(D);
                   if (!v.inner || ad(v.witness, ctx) != D) return "a = " + show(a);
                   return std::nullopt;
                 }});
  if (c.char0()) {
    out.push_back({"closed-form bracket vs operator bracket", 20,
                   [ctx](Rng& rng, int size) -> std::optional<std::string> {
                     const Field& F = ctx->field();
                     std::map<int, Poly> ta, tb;
                     for (int n = 0; n <= size / 2 + 1; ++n) {
                       ta[n] = rng.poly(F, 2, 3);
                       tb[n] = rng.poly(F, 2, 3);
                     }
                     HH1ClassChar0 a = make_class_char0(rng.poly(F, size), ta, *ctx);
                     HH1ClassChar0 b = make_class_char0(rng.poly(F, size), tb, *ctx);
                     Derivation op = bracket(representative(a, ctx), representative(b, ctx));
                     if (bracket_char0(a, b, *ctx) != canonical_class_char0(op))
                       return "[" + a.str() + ", " + b.str() + "]";
                     return std::nullopt;
                   }});
    out.push_back({"center/commutator split", 20, [ctx](Rng& rng, int size) -> std::optional<std::string> {
                     const Field& F = ctx->field();
                     HH1ClassChar0 a = make_class_char0(rng.poly(F, size), {{1, rng.poly(F, 2, 3)}}, *ctx);
                     auto [z, w] = center_commutator_split(a, *ctx);
                     if (add(z, w, *ctx) != a) return a.str();
                     HH1ClassChar0 probe = make_class_char0(rng.poly(F, size), {{2, rng.poly(F, 2, 3)}}, *ctx);
                     if (!bracket_char0(z, probe, *ctx).is_zero()) return a.str() + " against " + probe.str();
                     return std::nullopt;
                   }});
  } else {
    out.push_back({"zeta central", 1, [&c](Rng&, int) -> std::optional<std::string> {
                     WeylElement z = zeta_element(c);
                     if (!commutator(z, WeylElement::x(c.field())).is_zero() || !commutator(z, c.yhat()).is_zero())
                       return "zeta = " + show(z);
                     return std::nullopt;
                   }});
    out.push_back({"(f' f^(p-1))^(p-1) = -(f')^p", 30, [F, p](Rng& rng, int size) -> std::optional<std::string> {
                     Poly f = rng.poly(F, 2 * size);
                     if ((f.derivative() * f.pow(p - 1)).derivative(p - 1) != -f.derivative().pow(p)) return "f = " + show(f);
                     return std::nullopt;
                   }});
    out.push_back({"Theta is the kernel of restriction", 20, [ctx](Rng& rng, int size) -> std::optional<std::string> {
                     Poly r = rng.poly(ctx->field(), 2 * size);
                     CenterDerivation res = restrict_to_center(D_g(r, ctx));
                     bool zero = res.coeff_t1.is_zero() && res.coeff_t2.is_zero();
                     if (in_theta(r, *ctx) != zero) return "r = " + show(r);
                     return std::nullopt;
                   }});
    out.push_back({"closed-form bracket vs operator bracket", 20,
                   [ctx](Rng& rng, int size) -> std::optional<std::string> {
                     SymDerivation a = random_generator(rng, *ctx, size), b = random_generator(rng, *ctx, size);
                     BracketResult br = bracket_charp(a, b, ctx);
                     Derivation op = bracket(materialize(a, ctx), materialize(b, ctx));
                     Derivation closed = materialize(br.value, ctx);
                     bool ok = br.exact ? closed == op : is_inner(op - closed).inner;
                     if (!ok) return "[" + a.str() + ", " + b.str() + "]";
                     return std::nullopt;
                   }});
  }
  return out;
}

}  // namespace

Outcome cmd_verify(const Config& cfg, const Context& ctx) {
  json r;
  r["command"] = cfg.command;
  r["field"] = ctx->field().name();
  r["characteristic"] = ctx->p();
  r["h"] = to_string(ctx->h());
  r["deg_h"] = ctx->deg_h();
  r["seed"] = cfg.seed;
  const int size = std::min(4, std::max(1, cfg.degree_bound));
  json rows = json::array();
  json failures = json::array();
  bool all = true;
  unsigned long stream = 0;
  for (const auto& prop : properties(ctx)) {
    Rng rng(cfg.seed * 1000003UL + ++stream);
    int passed = 0;
    std::optional<std::string> bad;
    for (int t = 0; t < prop.trials; ++t) {
      auto res = guarded(prop.check, rng, size);
      if (!res) {
        ++passed;
        continue;
      }
      bad = res;
      // shrink: smallest size that still fails within a few draws
      for (int s = 0; s < size; ++s) {
        Rng small(cfg.seed + 7919UL * (s + 1) + stream);
        std::optional<std::string> hit;
        for (int k = 0; k < 20 && !hit; ++k) hit = guarded(prop.check, small, s);
        if (hit) {
          bad = hit;
          break;
        }
      }
      break;
    }
    bool ok = !bad;
    all = all && ok;
    rows.push_back(std::string(ok ? "PASS " : "FAIL ") + prop.name + " (" + std::to_string(passed) + "/" +
                   std::to_string(prop.trials) + ")");
    if (bad) failures.push_back(prop.name + ": " + *bad);
  }
  r["properties"] = rows;
  r["counterexamples"] = failures;
  r["all_passed"] = all;
  return {r, all ? 0 : 1};
}

}  // namespace cli
