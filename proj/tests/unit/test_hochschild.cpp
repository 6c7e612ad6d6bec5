#include "doctest.h"
#include "support/derivations.hpp"
#include "weylder/hochschild.hpp"

using namespace weylder;
using testing::P;
using testing::Rng;
using testing::W;

namespace {

HH1ClassChar0 random_class(Rng& rng, const AhContext& ctx) {
  std::map<int, Poly> t;
  for (int n = 0; n <= 3; ++n) t[n] = rng.poly(ctx.field(), 3, 3);
  return make_class_char0(rng.poly(ctx.field(), 4, 3), t, ctx);
}

// operator bracket of representatives, then canonicalized
HH1ClassChar0 oracle_bracket(const HH1ClassChar0& a, const HH1ClassChar0& b, const Context& ctx) {
  return canonical_class_char0(bracket(representative(a, ctx), representative(b, ctx)));
}

const char* kChar0H[] = {"x", "x^2", "x^3", "x^2*(x-1)", "x^3+x", "(x-1)*(x+1)"};

}  // namespace

TEST_CASE("canonical classes in char 0") {
  Field Q;
  Context c2 = make_context(P("x^2"));
  CHECK(canonical_class_char0(D_g(P("1"), c2)) == class_D(P("1"), *c2));
  CHECK(canonical_class_char0(D_g(P("1"), c2)).g == P("1"));
  Rng rng(1);
  for (const char* hs : kChar0H) {
    Context ctx = make_context(P(hs));
    CHECK(canonical_class_char0(ad(rng.ah_element(*ctx, 2, 2), ctx)).is_zero());
    for (int n = 1; n <= 3; ++n) {
      CHECK(canonical_class_char0(ad(a_n_element(n, *ctx).left_mul(ctx->h_over_pi()), ctx)).is_zero());
      CHECK(class_ad_a(ctx->h_over_pi() * rng.poly(Q, 2), n, *ctx).is_zero());
    }
    for (int it = 0; it < 10; ++it) {
      Derivation D = testing::random_derivation(rng, ctx);
      HH1ClassChar0 c = canonical_class_char0(D);
      CHECK(c.g.degree() < Degree(ctx->deg_h()));
      for (const auto& [n, r] : c.terms) {
        CHECK(n >= 1);
        CHECK(r.degree() < ctx->h_over_pi().degree());
      }
      CHECK(is_inner(D - representative(c, ctx)).inner);
    }
  }
}

TEST_CASE("bracket_char0 examples") {
  Field Q;
  for (int m = 1; m <= 4; ++m) {
    Context ctx = make_context(Poly::x(Q).pow(m));
    HH1ClassChar0 d1 = class_D(P("1"), *ctx);
    HH1ClassChar0 a1 = class_ad_a(P("1"), 1, *ctx);
    CHECK(bracket_char0(d1, a1, *ctx) == scale(Coeff(Q, static_cast<long>(m - 1)), d1));
  }
  Context c3 = make_context(P("x^3"));
  Rng rng(2);
  HH1ClassChar0 c = random_class(rng, *c3);
  CHECK(bracket_char0(c, c, *c3).is_zero());
  HH1ClassChar0 r = class_ad_a(P("1"), 1, *c3), s = class_ad_a(P("x"), 1, *c3);
  HH1ClassChar0 expect = oracle_bracket(r, s, c3);
  CHECK(bracket_char0(r, s, *c3) == expect);
  CHECK(bracket_char0(r, s, *c3) == class_ad_a(delta0(P("x"), *c3) - P("x") * delta0(P("1"), *c3), 1, *c3));
}

TEST_CASE("property: bracket_char0 matches the operator bracket") {
  Rng rng(3);
  int count = 0;
  for (const char* hs : kChar0H) {
    Context ctx = make_context(P(hs));
    for (int it = 0; it < 20; ++it) {
      HH1ClassChar0 a = random_class(rng, *ctx), b = random_class(rng, *ctx);
      CHECK(bracket_char0(a, b, *ctx) == oracle_bracket(a, b, ctx));
      ++count;
    }
  }
  CHECK(count >= 100);
}

TEST_CASE("property: Jacobi identity for bracket_char0") {
  Rng rng(4);
  for (const char* hs : kChar0H) {
    AhContext ctx(P(hs));
    for (int it = 0; it < 10; ++it) {
      HH1ClassChar0 a = random_class(rng, ctx), b = random_class(rng, ctx), c = random_class(rng, ctx);
      HH1ClassChar0 j = add(add(bracket_char0(a, bracket_char0(b, c, ctx), ctx), bracket_char0(b, bracket_char0(c, a, ctx), ctx), ctx),
                            bracket_char0(c, bracket_char0(a, b, ctx), ctx), ctx);
      CHECK(j.is_zero());
    }
  }
}

TEST_CASE("center of HH^1 in char 0") {
  Field Q;
  AhContext c2(P("x^2"));
  auto z2 = center_HH1_char0(c2);
  REQUIRE(z2.size() == 1);
  CHECK(z2[0] == class_D(P("x"), c2));
  AhContext c3(P("x^3"));
  auto z3 = center_HH1_char0(c3);
  REQUIRE(z3.size() == 1);
  CHECK(z3[0] == class_D(P("x^2"), c3));
  AhContext sq(P("x^3 - x"));
  auto zs = center_HH1_char0(sq);
  CHECK(zs.size() == 3);
  Rng rng(5);
  for (int it = 0; it < 10; ++it)
    CHECK(bracket_char0(random_class(rng, sq), random_class(rng, sq), sq).is_zero());
  for (const char* hs : kChar0H) {
    AhContext ctx(P(hs));
    auto z = center_HH1_char0(ctx);
    CHECK(static_cast<int>(z.size()) == ctx.pi().top());
    for (const auto& c : z)
      for (int n = 1; n <= 3; ++n)
        for (int i = 0; i < 4; ++i) {
          CHECK(bracket_char0(c, class_ad_a(Poly::monomial(Q, i), n, ctx), ctx).is_zero());
          CHECK(bracket_char0(c, class_D(Poly::monomial(Q, i), ctx), ctx).is_zero());
        }
  }
}

TEST_CASE("property: HH^1 = Z(HH^1) + [HH^1, HH^1] splits uniquely") {
  Rng rng(6);
  for (const char* hs : kChar0H) {
    AhContext ctx(P(hs));
    for (int it = 0; it < 15; ++it) {
      HH1ClassChar0 c = random_class(rng, ctx);
      auto [z, k] = center_commutator_split(c, ctx);
      CHECK(add(z, k, ctx) == c);
      for (int i = 0; i < 3; ++i) CHECK(bracket_char0(z, random_class(rng, ctx), ctx).is_zero());
      // the commutator part is a combination of ad_{r a_n}, n >= 0
      GSplit s = split_g_char0(k.g, ctx);
      CHECK(s.c.is_zero());
      // a bracket lies in the commutator part
      HH1ClassChar0 b = bracket_char0(random_class(rng, ctx), random_class(rng, ctx), ctx);
      CHECK(center_commutator_split(b, ctx).first.is_zero());
    }
  }
}

TEST_CASE("nilpotent ideal N") {
  Field Q;
  AhContext c3(P("x^3"));
  for (int n = 0; n <= 3; ++n) CHECK(nilpotent_ideal_membership(class_ad_a(P("x"), n, c3), c3));
  CHECK_FALSE(nilpotent_ideal_membership(class_ad_a(P("1"), 1, c3), c3));
  CHECK(nilpotent_ideal_membership(HH1ClassChar0{Poly(Q), {}}, c3));
  CHECK(nilpotency_index_bound(c3) == 2);
  AhContext c2(P("x^2"));
  Rng rng(7);
  // for h = x^2 every class in N is zero
  for (int it = 0; it < 20; ++it) {
    HH1ClassChar0 c = random_class(rng, c2);
    if (nilpotent_ideal_membership(c, c2)) CHECK(c.is_zero());
  }
  for (const char* hs : kChar0H) {
    AhContext ctx(P(hs));
    for (int it = 0; it < 10; ++it) {
      HH1ClassChar0 nmem = class_ad_a(ctx.pi2() * rng.poly(Q, 2, 3), rng.uniform(0, 3), ctx);
      REQUIRE(nilpotent_ideal_membership(nmem, ctx));
      CHECK(nilpotent_ideal_membership(bracket_char0(nmem, random_class(rng, ctx), ctx), ctx));
    }
    // the chain N_j: brackets of length nilpotency_index_bound + 1 vanish
    int bound = nilpotency_index_bound(ctx);
    for (int it = 0; it < 5; ++it) {
      HH1ClassChar0 c = class_ad_a(ctx.pi2() * rng.poly(Q, 2, 3), rng.uniform(0, 3), ctx);
      for (int j = 0; j < bound; ++j)
        c = bracket_char0(c, class_ad_a(ctx.pi2() * rng.poly(Q, 2, 3), rng.uniform(0, 3), ctx), ctx);
      CHECK(c.is_zero());
    }
  }
}

TEST_CASE("Witt quotient") {
  Field Q;
  AhContext sq(P("x^2 - 1"));
  CHECK(witt_quotient_map(class_ad_a(P("1"), 2, sq), sq).empty());
  for (int m = 2; m <= 4; ++m) {
    AhContext ctx(Poly::x(Q).pow(m));
    CHECK(ctx.pi2() == P("x"));
    for (int lvl = -1; lvl <= 5; ++lvl) {
      WittClassElement w{P("1"), lvl};
      auto img = witt_quotient_map(witt_inverse(w, ctx), ctx);
      REQUIRE(img.size() == 1);
      CHECK(img[0] == w);
    }
  }
  Rng rng(8);
  for (const char* hs : {"x^2", "x^3", "x^2*(x-1)", "x^3*(x^2+1)^2"}) {
    AhContext ctx(P(hs));
    for (int it = 0; it < 10; ++it) {
      Poly g = rng.poly(Q, 3), f = rng.poly(Q, 3);
      int m = rng.uniform(-1, 4), n = rng.uniform(-1, 4);
      auto lhs = witt_quotient_map(bracket_char0(witt_e(g, m, ctx), witt_e(f, n, ctx), ctx), ctx);
      auto rhs = witt_bracket(witt_quotient_map(witt_e(g, m, ctx), ctx), witt_quotient_map(witt_e(f, n, ctx), ctx), ctx);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("factor lists and structure report") {
  Field Q;
  Poly h = P("x^3*(x-1)");
  auto f = parse_and_verify_factors("x^3,x-1", h);
  REQUIRE(f.size() == 2);
  CHECK(f[0].alpha == 3);
  CHECK(parse_and_verify_factors("(x^2+1)^2", P("x^4+2*x^2+1"))[0].u == P("x^2+1"));
  CHECK_THROWS_AS(parse_and_verify_factors("x^2", h), DomainError);
  CHECK_THROWS_AS(parse_and_verify_factors("x^2,x^1,x-1", P("x^3*(x-1)")), DomainError);
  CHECK_THROWS_AS(parse_and_verify_factors("(x^2)^1,x-1", P("x^2*(x-1)")), DomainError);

  AhContext cx(P("x"));
  auto r1 = structure_report_char0(cx, parse_and_verify_factors("x", cx.h()));
  CHECK(r1.dim_center == 1);
  CHECK(r1.witt_summand_count == 0);
  CHECK(r1.abelian);
  CHECK(r1.hh1_dim_finite_part == 1);
  AhContext c2(P("x^2"));
  auto r2 = structure_report_char0(c2, parse_and_verify_factors("x^2", c2.h()));
  CHECK(r2.dim_center == 1);
  CHECK(r2.witt_summand_count == 1);
  CHECK(r2.nilpotent_N_trivial);
  AhContext c3(P("x^3"));
  auto r3 = structure_report_char0(c3, std::nullopt);
  CHECK_FALSE(r3.nilpotent_N_trivial);
  CHECK(r3.nilpotency_index_bound == 2);
  CHECK_FALSE(r3.witt_summand_count.has_value());
  CHECK_FALSE(r3.nilpotent_lie_algebra);
}

// ---- characteristic p ----

namespace {

const char* kCharPH[] = {"x", "x^2", "x^3", "x^2*(x-1)", "x^3+x"};

SymDerivation random_sym(Rng& rng, const AhContext& ctx) {
  const Field& F = ctx.field();
  int p = static_cast<int>(ctx.p());
  switch (rng.uniform(0, 3)) {
    case 0:
      return sym_D(rng.poly(F, 4));
    case 1:
      return sym_ad_a(rng.poly(F, 2), rng.uniform(0, 2 * p + 1));
    case 2:
      return sym_bhat_x(F);
    default:
      return sym_ad(testing::random_normalizer(rng, ctx, 2));
  }
}

}  // namespace

TEST_CASE("e-term closed form against the projection oracle") {
  for (long p : {2L, 3L, 5L}) {
    Field F(p);
    int ip = static_cast<int>(p);
    for (const char* hs : kCharPH) {
      Context ctx = make_context(P(hs, F));
      Rng rng(9);
      for (int it = 0; it < 6; ++it) {
        Poly g = it < 2 ? Poly::monomial(F, it) : rng.poly(F, 4);
        Derivation B = bracket(D_g(g, ctx), bhat_x(ctx));
        WeylElement b = e_term_b(g, *ctx);
        // projection of the y-hat image after removing ad_b
        WeylElement rest = B.image_yhat() - commutator(b, ctx->yhat());
        CHECK(project_P(rest, ip) == WeylElement(e_term(g, *ctx)));
        CHECK(B == D_g(e_term(g, *ctx), ctx) + ad(b, ctx));
        CHECK(b.coeff(ip - 1) == (g * ctx->h().pow(ip - 1)).exact_div(ctx->varrho()));
      }
    }
  }
}

TEST_CASE("bracket_charp examples") {
  Field F3(3);
  Context one = make_context(P("1", F3));
  auto ex = bracket_charp(sym_E_x(F3), sym_E_y(F3), one);
  CHECK(ex.exact);
  CHECK(materialize(ex.value, one) == ad(varpi_element(F3), one));
  Context ctx = make_context(P("x^2", F3));
  auto dd = bracket_charp(sym_D(P("x", F3)), sym_D(P("1+x^2", F3)), ctx);
  CHECK(dd.value.terms.empty());
  CHECK(dd.exact);
}

TEST_CASE("property: bracket_charp against the operator bracket") {
  for (long p : {2L, 3L, 5L}) {
    Field F(p);
    Rng rng(10 + p);
    int count = 0;
    for (const char* hs : kCharPH) {
      Context ctx = make_context(P(hs, F));
      for (int it = 0; it < 24; ++it) {
        SymDerivation a = random_sym(rng, *ctx), b = random_sym(rng, *ctx);
        if (rng.uniform(0, 2) == 0) a = sym_scale(testing::random_central(rng, *ctx, 1), a);
        auto br = bracket_charp(a, b, ctx);
        Derivation op = bracket(materialize(a, ctx), materialize(b, ctx));
        Derivation closed = materialize(br.value, ctx);
        if (br.exact) {
          CHECK(closed == op);
        } else {
          auto v = is_inner(op - closed);
          CHECK(v.inner);
          if (!v.inner) MESSAGE("p=" << p << " h=" << hs << " [" << a.str() << ", " << b.str() << "] -> " << br.value.str() << ": " << v.certificate);
        }
        ++count;
      }
    }
    CHECK(count >= 100);
  }
}

TEST_CASE("normalizer quotient and freeness report") {
  for (long p : {2L, 3L, 5L}) {
    Field F(p);
    int ip = static_cast<int>(p);
    for (const char* hs : {"1", "x", "x^2+1", "x^3+x"}) {
      Context ctx = make_context(P(hs, F));
      bool free = ctx->h_over_pi().top() == 0;
      auto r = freeness_and_module_report_charp(ctx, 3 * ip, 1);
      CHECK(r.free_over_center == free);
      if (free) {
        CHECK(r.inner_certified == 10);
        for (const auto& q : r.normalizer_quotient) CHECK(q.generators.empty());
      }
    }
    Context c2 = make_context(P("x^2", F));
    auto r = freeness_and_module_report_charp(c2, 3 * ip, 1);
    {
      CHECK_FALSE(r.free_over_center);
      CHECK(r.torsion_witness);
      // every listed generator is a normalizer element outside A_h + Z(A_1)
      for (const auto& q : r.normalizer_quotient)
        for (const auto& g : q.generators) {
          WeylElement u = WeylElement::term(g, q.y_degree);
          CHECK(normalizer_test(u, *c2).in_normalizer);
          CHECK_FALSE(central_correction(q.y_degree, g, *c2).has_value());
        }
    }
  }
}
