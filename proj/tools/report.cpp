#include <algorithm>
#include <functional>
#include <sstream>

#include "commands.hpp"
#include "weylder/text.hpp"

namespace cli {

using namespace weylder;

namespace {

std::string factor_str(const Factor& f) {
  std::string u = to_string(f.u);
  bool bare = u.find_first_of("+-*") == std::string::npos;
  std::string base = bare ? u : "(" + u + ")";
  return f.alpha == 1 ? base : base + "^" + std::to_string(f.alpha);
}

json poly_list(const std::vector<Poly>& v, const std::string& var = "x") {
  json out = json::array();
  for (const auto& f : v) out.push_back(to_string(f, var));
  return out;
}

json basics(const Config& cfg, const AhContext& ctx) {
  json r;
  r["command"] = cfg.command;
  r["field"] = ctx.field().name();
  r["characteristic"] = ctx.p();
  r["h"] = to_string(ctx.h());
  r["deg_h"] = ctx.deg_h();
  return r;
}

std::optional<std::vector<Factor>> factors_of(const Config& cfg, const AhContext& ctx) {
  if (!cfg.factors_text) return std::nullopt;
  return parse_and_verify_factors(*cfg.factors_text, ctx.h());
}

std::string zeta_yhat_str(const AhContext& ctx) {
  std::string s = "yhat^" + std::to_string(ctx.p());
  const Poly& c = ctx.zeta_hat_coeff();
  if (!c.is_zero()) s += " - (" + to_string(c) + ")*yhat";
  return s;
}

std::string a_n_str(int n) { return "a_" + std::to_string(n); }

// input derivations: explicit images or symbolic generators
SymDerivation parse_sym(const json& j, const Context& ctx);

Poly field_poly(const json& j, const char* key, const AhContext& ctx) {
  if (!j.contains(key) || !j[key].is_string()) throw UsageError(std::string("missing string field \"") + key + "\"");
  return parse_poly(j[key].get<std::string>(), ctx.field());
}

WeylElement field_weyl(const json& j, const char* key, const AhContext& ctx) {
  if (!j.contains(key) || !j[key].is_string()) throw UsageError(std::string("missing string field \"") + key + "\"");
  return parse_weyl(j[key].get<std::string>(), ctx.field(), ctx.h());
}

SymDerivation parse_sym(const json& j, const Context& ctx) {
  const AhContext& c = *ctx;
  const Field& F = c.field();
  if (!j.is_object()) throw UsageError("derivation must be a JSON object");
  SymDerivation s;
  if (j.contains("sum")) {
    if (!j["sum"].is_array()) throw UsageError("\"sum\" must be an array");
    for (const auto& t : j["sum"]) s = sym_add(s, parse_sym(t, ctx));
  } else if (j.contains("Dx") || j.contains("Dyhat")) {
    Generator g;
    g.kind = GenKind::Raw;
    g.raw_x = field_weyl(j, "Dx", c);
    g.raw_yhat = field_weyl(j, "Dyhat", c);
    s.terms.push_back({WeylElement::constant(F, 1), g});
  } else if (j.contains("kind") && j["kind"].is_string()) {
    std::string k = j["kind"];
    if (k == "D") {
      s = sym_D(field_poly(j, "g", c));
    } else if (k == "ad_a") {
      if (!j.contains("n") || !j["n"].is_number_integer()) throw UsageError("ad_a needs an integer \"n\"");
      s = sym_ad_a(field_poly(j, "r", c), j["n"].get<int>());
    } else if (k == "ad") {
      s = sym_ad(field_weyl(j, "a", c));
    } else if (k == "bhat_x") {
      s = sym_bhat_x(F);
    } else if (k == "bhat_f") {
      s = sym_bhat_f(c);
    } else if (k == "E_x") {
      s = sym_E_x(F);
    } else if (k == "E_y") {
      s = sym_E_y(F);
    } else {
      throw UsageError("unknown derivation kind \"" + k + "\"");
    }
  } else {
    throw UsageError("derivation needs \"Dx\"/\"Dyhat\", \"kind\" or \"sum\"");
  }
  if (j.contains("coeff")) {
    WeylElement z = field_weyl(j, "coeff", c);
    if (!c.char0() && !center_coords(z, c)) throw DomainError("not-central", "coefficient is not in Z(A_h)");
    if (c.char0() && !(z.is_polynomial() && z.as_poly().degree() <= Degree(0)))
      throw DomainError("not-central", "coefficient must be a constant in characteristic 0");
    s = sym_scale(z, s);
  }
  return s;
}

// validated operator form of a symbolic input; nullopt (with the defect recorded) when invalid
std::optional<Derivation> checked(const SymDerivation& s, const Context& ctx, json& out) {
  Derivation D = materialize(s, ctx);
  DerivationCheck chk = check_derivation(*ctx, D.image_x(), D.image_yhat());
  out["valid"] = chk.valid();
  if (chk.valid()) return D;
  out["defect"] = to_string(chk.defect);
  out["message"] = chk.message;
  return std::nullopt;
}

HH1ClassChar0 class_of(const SymDerivation& s, const Context& ctx) {
  const AhContext& c = *ctx;
  HH1ClassChar0 out{Poly(c.field()), {}};
  for (const auto& t : s.terms) {
    Coeff k = t.coeff.is_zero() ? Coeff::zero(c.field()) : t.coeff.as_poly().coeff(0);
    HH1ClassChar0 term{Poly(c.field()), {}};
    switch (t.gen.kind) {
      case GenKind::D:
        term = class_D(t.gen.poly, c);
        break;
      case GenKind::AdA:
        term = class_ad_a(t.gen.poly, t.gen.n, c);
        break;
      case GenKind::Ad:
        break;
      default:
        term = canonical_class_char0(materialize(t.gen, ctx));
    }
    out = add(out, scale(k, term), c);
  }
  return out;
}

}  // namespace

std::string render_text(const json& report) {
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  auto scalar = [](const json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
  };
  std::function<void(const std::string&, const json&)> walk = [&](const std::string& prefix, const json& v) {
    if (v.is_object()) {
      for (const auto& [k, sub] : v.items()) walk(prefix.empty() ? k : prefix + "." + k, sub);
    } else if (v.is_array()) {
      std::vector<std::string> items;
      for (const auto& e : v) items.push_back(scalar(e));
      if (items.empty()) items.push_back("(none)");
      rows.emplace_back(prefix, items);
    } else {
      rows.emplace_back(prefix, std::vector<std::string>{scalar(v)});
    }
  };
  walk("", report);
  size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  std::ostringstream os;
  for (const auto& [k, items] : rows)
    for (size_t i = 0; i < items.size(); ++i)
      os << (i ? std::string(w, ' ') : k + std::string(w - k.size(), ' ')) << "  " << items[i] << "\n";
  return os.str();
}

Outcome cmd_analyze(const Config& cfg, const Context& cp) {
  const AhContext& ctx = *cp;
  json r = basics(cfg, ctx);
  auto factors = factors_of(cfg, ctx);
  r["pi_h"] = to_string(ctx.pi());
  r["varrho_h"] = to_string(ctx.varrho());
  r["h_over_pi_h"] = to_string(ctx.h_over_pi());
  if (factors) {
    json fl = json::array();
    for (const auto& f : *factors) fl.push_back(factor_str(f));
    r["factors"] = fl;
  }
  json hh;
  if (ctx.char0()) {
    r["pi_of_h_over_pi_h"] = to_string(ctx.pi2());
    HH1ReportChar0 rep = structure_report_char0(ctx, factors);
    hh["zero"] = ctx.deg_h() == 0;
    hh["dim_center"] = rep.dim_center;
    json basis = json::array();
    for (const auto& g : rep.center_basis) basis.push_back("D_{" + to_string(g) + "}");
    hh["center_basis"] = basis;
    hh["abelian"] = rep.abelian;
    hh["nilpotent"] = rep.nilpotent_lie_algebra;
    hh["N_trivial"] = rep.nilpotent_N_trivial;
    hh["nilpotency_index_bound"] = rep.nilpotency_index_bound;
    if (rep.witt_summand_count) {
      hh["witt_summands"] = *rep.witt_summand_count;
      json primes = json::array();
      for (const auto& f : rep.multiplicity_gt1_primes) primes.push_back(factor_str(f));
      hh["witt_primes"] = primes;
    } else {
      hh["witt_summands"] = nullptr;
    }
    if (rep.abelian) hh["dim"] = rep.hh1_dim_finite_part;
  } else {
    r["zeta"] = to_string(zeta_element(ctx));
    r["zeta_in_yhat"] = zeta_yhat_str(ctx);
    r["hbar"] = to_string(ctx.hbar(), "t1");
    r["qbreve"] = to_string(ctx.qbreve());
    r["theta_S"] = poly_list(ctx.theta_S());
    HH1CharPReport rep = freeness_and_module_report_charp(cp, cfg.degree_bound, cfg.seed);
    hh["free_over_center"] = rep.free_over_center;
    hh["rank"] = rep.free_over_center ? json(2) : json(nullptr);
    hh["generators"] = json::array({"D_qbreve", "bhat_f"});
    hh["res_D_qbreve"] = rep.res_qbreve.str();
    hh["res_bhat_f"] = rep.res_bhat_f.str();
    hh["theta_quotient_dim"] = rep.theta_quotient_dim;
    if (rep.free_over_center)
      hh["inner_certified"] = rep.inner_certified;
    else
      hh["torsion"] = rep.torsion_note;
    json nq = json::array();
    for (const auto& q : rep.normalizer_quotient)
      nq.push_back("y^" + std::to_string(q.y_degree) + ": " + std::to_string(q.generators.size()));
    hh["normalizer_quotient_rank"] = nq;
  }
  r["hh1"] = hh;
  return {r, 0};
}

Outcome cmd_center(const Config& cfg, const Context& cp) {
  const AhContext& ctx = *cp;
  json r = basics(cfg, ctx);
  if (ctx.char0()) {
    auto z = center_HH1_char0(ctx);
    r["dim_center_hh1"] = static_cast<int>(z.size());
    json b = json::array();
    for (const auto& c : z) b.push_back(c.str());
    r["center_hh1_basis"] = b;
  } else {
    r["t1"] = "x^" + std::to_string(ctx.p());
    r["t2"] = to_string(zeta_element(ctx));
    r["t2_in_yhat"] = zeta_yhat_str(ctx);
    r["res_D_qbreve"] = restrict_to_center(D_qbreve(cp)).str();
    r["res_bhat_f"] = restrict_to_center(bhat_f(cp)).str();
  }
  return {r, 0};
}

Outcome cmd_normalizer(const Config& cfg, const Context& cp) {
  const AhContext& ctx = *cp;
  json r = basics(cfg, ctx);
  r["degree_bound"] = cfg.degree_bound;
  json rows = json::array();
  if (ctx.char0()) {
    // N(A_h) = A_h + sum_n F[x] a_n
    for (int n = 1; n <= cfg.degree_bound; ++n) rows.push_back(a_n_str(n) + " = " + to_string(a_n_element(n, ctx)));
    r["generators"] = rows;
  } else {
    for (const auto& q : normalizer_quotient(ctx, cfg.degree_bound)) {
      std::string line = "y^" + std::to_string(q.y_degree) + ":";
      if (q.generators.empty()) line += " 0";
      for (size_t i = 0; i < q.generators.size(); ++i)
        line += (i ? ", " : " ") + std::string("(") + to_string(q.generators[i]) + ")*y^" + std::to_string(q.y_degree);
      rows.push_back(line);
    }
    r["quotient_generators"] = rows;
  }
  return {r, 0};
}

Outcome cmd_exp_aut(const Config& cfg, const Context& cp) {
  const AhContext& ctx = *cp;
  if (!cfg.g_text) throw UsageError("exp-aut needs --g");
  Poly g = parse_poly(*cfg.g_text, ctx.field());
  json r = basics(cfg, ctx);
  r["g"] = to_string(g);
  AlgebraMap m = aut_exp(g, ctx);
  r["image_x"] = to_string(m.image_x);
  r["image_yhat"] = to_string(m.image_yhat);
  bool ok = commutator(m.image_yhat, m.image_x) == WeylElement(ctx.h());
  r["relation_preserved"] = ok;
  if (ctx.char0())
    r["agrees_with_exp_series"] = exp_series(g, WeylElement::x(ctx.field()), cp) == m.image_x &&
                                  exp_series(g, ctx.yhat(), cp) == m.image_yhat;
  if (cfg.element_text) {
    WeylElement a = parse_weyl(*cfg.element_text, ctx.field(), ctx.h());
    require_membership(a, ctx, "element");
    r["element"] = to_string(a);
    r["image"] = to_string(apply_aut(g, a, ctx));
  }
  return {r, 0};
}

Outcome cmd_classify(const Config& cfg, const Context& cp, const json& input) {
  const AhContext& ctx = *cp;
  json r = basics(cfg, ctx);
  SymDerivation s = parse_sym(input, cp);
  r["input"] = s.str();
  auto D = checked(s, cp, r);
  if (!D) return {r, 1};
  r["Dx"] = to_string(D->image_x());
  r["Dyhat"] = to_string(D->image_yhat());
  InnerVerdict v = is_inner(*D);
  r["inner"] = v.inner;
  if (v.inner)
    r["witness"] = to_string(v.witness);
  else
    r["certificate"] = v.certificate;
  json dec;
  if (ctx.char0()) {
    DecompCharZero d = decompose_Ah_char0(*D);
    dec["g"] = to_string(d.g);
    json terms = json::array();
    for (const auto& t : d.normalizer_terms) terms.push_back("(" + to_string(t.r) + ") " + a_n_str(t.n));
    dec["normalizer_terms"] = terms;
    dec["inner_witness"] = to_string(d.inner_witness);
    r["decomposition"] = dec;
    r["class"] = canonical_class_char0(*D).str();
  } else {
    DecompCharP d = decompose_Ah_charp(*D);
    dec["u"] = d.u.str();
    dec["v"] = d.v.str();
    dec["s"] = to_string(d.s);
    dec["normalizer_part"] = to_string(d.normalizer_part);
    dec["inner_witness"] = to_string(d.inner_witness);
    r["decomposition"] = dec;
  }
  Extension ext = extend_to_A1(*D);
  json e;
  e["extendable"] = ext.extendable;
  if (ext.extendable) {
    if (ctx.char0()) {
      DecompA1Char0 a = decompose_A1_char0(ext.ext.dx, ext.ext.dy);
      e["u"] = to_string(a.u);
      e["w"] = to_string(a.w);
    } else {
      DecompA1CharP a = decompose_A1_charp(ext.ext.dx, ext.ext.dy);
      e["w"] = to_string(a.w);
      e["z"] = to_string(a.z);
      e["b"] = to_string(a.b);
      e["c"] = to_string(a.c);
    }
  } else {
    e["reason"] = ext.failure;
  }
  r["A1_extension"] = e;
  return {r, 0};
}

Outcome cmd_bracket(const Config& cfg, const Context& cp, const json& input) {
  const AhContext& ctx = *cp;
  json r = basics(cfg, ctx);
  if (!input.is_object() || !input.contains("left") || !input.contains("right"))
    throw UsageError("bracket input needs \"left\" and \"right\"");
  SymDerivation a = parse_sym(input["left"], cp), b = parse_sym(input["right"], cp);
  r["left"] = a.str();
  r["right"] = b.str();
  json la, lb;
  auto Da = checked(a, cp, la), Db = checked(b, cp, lb);
  if (!Da || !Db) {
    r["left_check"] = la;
    r["right_check"] = lb;
    return {r, 1};
  }
  Derivation op = bracket(*Da, *Db);
  r["Dx"] = to_string(op.image_x());
  r["Dyhat"] = to_string(op.image_yhat());
  if (ctx.char0()) {
    HH1ClassChar0 ca = class_of(a, cp), cb = class_of(b, cp);
    HH1ClassChar0 closed = bracket_char0(ca, cb, ctx);
    r["left_class"] = ca.str();
    r["right_class"] = cb.str();
    r["closed_form"] = closed.str();
    r["consistent"] = closed == canonical_class_char0(op);
  } else {
    BracketResult br = bracket_charp(a, b, cp);
    r["closed_form"] = br.value.str();
    r["exact"] = br.exact;
    r["fallback"] = br.fallback;
    Derivation closed = materialize(br.value, cp);
    r["consistent"] = br.exact ? closed == op : is_inner(op - closed).inner;
  }
  return {r, r["consistent"].get<bool>() ? 0 : 1};
}

}  // namespace cli
