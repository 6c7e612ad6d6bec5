#include "weylder/ah.hpp"

#include "weylder/text.hpp"

namespace weylder {

Poly CenterPoly::coeff(int k) const {
  auto it = t_.find(k);
  return it == t_.end() ? Poly(F_) : it->second;
}

void CenterPoly::add(int k, const Poly& c) {
  if (c.field() != F_) throw FieldMismatch();
  if (c.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

CenterPoly CenterPoly::operator+(const CenterPoly& o) const {
  CenterPoly r = *this;
  for (const auto& [k, c] : o.t_) r.add(k, c);
  return r;
}

CenterPoly CenterPoly::operator-(const CenterPoly& o) const {
  CenterPoly r = *this;
  for (const auto& [k, c] : o.t_) r.add(k, -c);
  return r;
}

CenterPoly CenterPoly::operator*(const CenterPoly& o) const {
  CenterPoly r(F_);
  for (const auto& [k, c] : t_)
    for (const auto& [l, d] : o.t_) r.add(k + l, c * d);
  return r;
}

CenterPoly CenterPoly::operator-() const {
  CenterPoly r(F_);
  for (const auto& [k, c] : t_) r.add(k, -c);
  return r;
}

std::optional<CenterPoly> CenterPoly::div_t1(const Poly& c) const {
  CenterPoly r(F_);
  for (const auto& [k, a] : t_) {
    auto q = a.try_div(c);
    if (!q) return std::nullopt;
    r.add(k, *q);
  }
  return r;
}

CenterPoly CenterPoly::d_dt1() const {
  CenterPoly r(F_);
  for (const auto& [k, a] : t_) r.add(k, a.derivative());
  return r;
}

CenterPoly CenterPoly::d_dt2() const {
  CenterPoly r(F_);
  for (const auto& [k, a] : t_)
    if (k > 0) r.add(k - 1, a * Coeff(F_, static_cast<long>(k)));
  return r;
}

std::string CenterPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : t_) {
    std::string ts = k == 0 ? "" : (k == 1 ? "t2" : "t2^" + std::to_string(k));
    std::string cs = to_string(c, "t1");
    int nonzero = 0;
    for (const auto& a : c.coeffs())
      if (!a.is_zero()) ++nonzero;
    std::string m;
    if (k == 0)
      m = cs;
    else if (nonzero > 1)
      m = "(" + cs + ")*" + ts;
    else if (cs == "1")
      m = ts;
    else
      m = cs + "*" + ts;
    if (out.empty())
      out = m;
    else if (m[0] == '-')
      out += " - " + m.substr(1);
    else
      out += " + " + m;
  }
  return out;
}

namespace {

void merge_part(std::map<int, Poly>& out, int m, const Poly& f) {
  if (f.is_constant()) return;
  auto it = out.find(m);
  if (it == out.end())
    out.emplace(m, f);
  else
    it->second = it->second * f;
}

std::map<int, Poly> sff(const Poly& f) {
  std::map<int, Poly> out;
  if (f.is_constant()) return out;
  std::int64_t p = f.field().characteristic();
  Poly d = f.derivative();
  if (d.is_zero()) {
    for (const auto& [m, g] : sff(pth_root(f))) merge_part(out, static_cast<int>(m * p), g);
    return out;
  }
  Poly c = gcd_monic(f, d);
  Poly w = f.exact_div(c);
  for (int i = 1; !w.is_constant(); ++i) {
    Poly y = gcd_monic(w, c);
    merge_part(out, i, w.exact_div(y));
    w = y;
    c = c.exact_div(y);
  }
  if (!c.is_constant()) {
    for (const auto& [m, g] : sff(pth_root(c))) merge_part(out, static_cast<int>(m * p), g);
  }
  return out;
}

}  // namespace

std::vector<SquarefreePart> squarefree_decomposition(const Poly& h) {
  if (h.is_zero()) throw DomainError("h", "h must be nonzero");
  Poly f = h.monic();
  std::vector<SquarefreePart> out;
  Poly check = Poly::constant(h.field(), 1);
  for (const auto& [m, g] : sff(f)) {
    out.push_back({g.monic(), m});
    check = check * g.monic().pow(m);
  }
  if (check != f) throw DomainError("internal", "squarefree decomposition does not reassemble");
  return out;
}

Poly pi_h(const Poly& h) {
  if (h.is_zero()) throw DomainError("h", "h must be nonzero");
  Poly d = h.derivative();
  if (d.is_zero()) return Poly::constant(h.field(), 1);
  return h.exact_div(gcd_monic(h, d)).monic();
}

Poly varrho_h(const Poly& h) {
  if (h.is_zero()) throw DomainError("h", "h must be nonzero");
  const Field& F = h.field();
  std::int64_t p = F.characteristic();
  Poly r = Poly::constant(F, 1);
  if (p == 0) return r;
  for (const auto& part : squarefree_decomposition(h)) {
    int e = static_cast<int>(part.multiplicity / p * p);
    if (e) r = r * part.factor.pow(e);
  }
  return r;
}

std::vector<Poly> compute_theta_S(const AhContext& ctx, std::string& diag);

AhContext::AhContext(const Poly& h) : F_(h.field()), h_(h) {
  if (h.is_zero()) throw DomainError("h", "h must be nonzero");
  hp_ = h.derivative();
  pi_ = pi_h(h);
  rho_ = varrho_h(h);
  h_over_pi_ = h.exact_div(pi_);
  auto q = (pi_ * hp_).try_div(h);
  if (!q) throw DomainError("internal", "pi_h h' is not divisible by h");
  pi_hp_over_h_ = *q;
  h_over_pi_rho_ = h.exact_div(pi_ * rho_);
  pi2_ = pi_h(h_over_pi_);
  yhat_pows_.push_back(WeylElement::constant(F_, 1));
  if (!F_.is_char0()) init_charp();
}

void AhContext::init_charp() {
  int p = static_cast<int>(F_.characteristic());
  hbar_i_ = frobenius_split(h_.pow(p - 1));
  int first = -1;
  for (int i = 0; i < p; ++i)
    if (!hbar_i_[i].is_zero()) {
      first = i;
      break;
    }
  qbreve_i_.assign(p, Poly(F_));
  hbar_ = hbar_i_[first].monic();
  qbreve_i_[first] = Poly::constant(F_, hbar_i_[first].leading().inverse());
  for (int i = first + 1; i < p; ++i) {
    if (hbar_i_[i].is_zero()) continue;
    Bezout b = extended_gcd(hbar_, hbar_i_[i]);
    for (auto& q : qbreve_i_) q = q * b.s;
    qbreve_i_[i] = b.t;
    hbar_ = b.gcd;
  }
  Poly check(F_);
  for (int i = 0; i < p; ++i) check += qbreve_i_[i] * hbar_i_[i];
  if (check != hbar_) throw DomainError("internal", "Bezout witness for hbar failed");
  qbreve_ = Poly(F_);
  for (int i = 0; i < p; ++i) qbreve_ -= from_u(qbreve_i_[i]).shift(p - 1 - i);
  zeta_hat_ = from_u(hbar_i_[p - 1]);
  hp_over_rho_ = h_.pow(p).exact_div(rho_);
  if (theta_p_map(qbreve_, *this) != hbar_)
    throw DomainError("internal", "theta(qbreve) differs from hbar");
  S_ = compute_theta_S(*this, theta_diag_);
}

const std::vector<Poly>& AhContext::theta_S() const {
  if (F_.is_char0()) throw DomainError("characteristic", "S is defined in characteristic p only");
  if (!theta_diag_.empty()) throw DomainError("theta-bound", theta_diag_);
  return S_;
}

const WeylElement& AhContext::yhat_power(int n) const {
  std::lock_guard<std::mutex> lock(yhat_mu_);
  if (yhat_pows_.size() == 1) yhat_pows_.push_back(weyl_mul(WeylElement::y(F_), WeylElement(h_)));
  while (static_cast<int>(yhat_pows_.size()) <= n)
    yhat_pows_.push_back(weyl_mul(yhat_pows_.back(), yhat_pows_[1]));
  return yhat_pows_[n];
}

Context make_context(const Poly& h) { return std::make_shared<const AhContext>(h); }

bool ah_membership(const WeylElement& a, const AhContext& ctx) {
  if (a.field() != ctx.field()) throw FieldMismatch();
  Poly hi = Poly::constant(ctx.field(), 1);
  int cur = 0;
  for (const auto& [i, r] : a.terms()) {
    for (; cur < i; ++cur) hi = hi * ctx.h();
    if (!hi.divides(r)) return false;
  }
  return true;
}

void require_membership(const WeylElement& a, const AhContext& ctx, const std::string& what) {
  if (!ah_membership(a, ctx)) throw NotInAh(what + " = " + to_string(a) + " is not in A_h");
}

WeylElement yhat_expand(const std::vector<Poly>& f, const AhContext& ctx) {
  WeylElement out(ctx.field());
  for (size_t j = 0; j < f.size(); ++j)
    if (!f[j].is_zero()) out += ctx.yhat_power(static_cast<int>(j)).left_mul(f[j]);
  return out;
}

std::vector<Poly> yhat_collect(const WeylElement& a, const AhContext& ctx) {
  if (a.is_zero()) return {};
  WeylElement rest = a;
  int n = a.y_degree().value();
  std::vector<Poly> f(n + 1, Poly(ctx.field()));
  std::vector<Poly> hpow{Poly::constant(ctx.field(), 1)};
  for (int i = 1; i <= n; ++i) hpow.push_back(hpow.back() * ctx.h());
  while (!rest.is_zero()) {
    int top = rest.y_degree().value();
    auto q = rest.coeff(top).try_div(hpow[top]);
    if (!q) throw NotInAh("element " + to_string(a) + " is not in A_h (y-degree " + std::to_string(top) + ")");
    f[top] = *q;
    rest -= ctx.yhat_power(top).left_mul(*q);
  }
  return f;
}

Poly delta(const Poly& f, const AhContext& ctx) { return f.derivative() * ctx.h(); }

Poly delta_p_of_x(const AhContext& ctx) {
  if (ctx.char0()) throw DomainError("characteristic", "delta^p(x) requires characteristic p > 0");
  return ctx.zeta_hat_coeff() * ctx.h();
}

Poly delta0(const Poly& r, const AhContext& ctx) {
  return (r * ctx.pi()).derivative() - r * ctx.pi_hprime_over_h();
}

Poly vartheta0(const AhContext& ctx) { return delta0(Poly::constant(ctx.field(), 1), ctx); }

WeylElement zeta_element(const AhContext& ctx) {
  if (ctx.char0()) throw DomainError("characteristic", "zeta requires characteristic p > 0");
  int p = static_cast<int>(ctx.p());
  return WeylElement::term(ctx.h().pow(p), p);
}

std::vector<Poly> zeta_yhat_form(const AhContext& ctx) {
  if (ctx.char0()) throw DomainError("characteristic", "zeta requires characteristic p > 0");
  int p = static_cast<int>(ctx.p());
  std::vector<Poly> f(p + 1, Poly(ctx.field()));
  f[p] = Poly::constant(ctx.field(), 1);
  f[1] = -ctx.zeta_hat_coeff();
  return f;
}

std::optional<CenterPoly> center_coords(const WeylElement& a, const AhContext& ctx) {
  if (ctx.char0()) throw DomainError("characteristic", "center coordinates require characteristic p > 0");
  int p = static_cast<int>(ctx.p());
  CenterPoly z(ctx.field());
  for (const auto& [i, r] : a.terms()) {
    if (i % p) return std::nullopt;
    auto c = r.try_div(ctx.h().pow(i));
    if (!c || !in_frobenius_subring(*c)) return std::nullopt;
    z.add(i / p, to_u(*c));
  }
  return z;
}

WeylElement center_to_weyl(const CenterPoly& z, const AhContext& ctx) {
  int p = static_cast<int>(ctx.p());
  WeylElement out(ctx.field());
  for (const auto& [k, c] : z.terms()) out.add_term(k * p, from_u(c) * ctx.h().pow(k * p));
  return out;
}

std::optional<std::map<int, Poly>> centralizer_x_coords(const WeylElement& f, const AhContext& ctx) {
  std::map<int, Poly> out;
  if (ctx.char0()) {
    if (!f.is_polynomial()) return std::nullopt;
    if (!f.is_zero()) out.emplace(0, f.coeff(0));
    return out;
  }
  int p = static_cast<int>(ctx.p());
  for (const auto& [i, r] : f.terms()) {
    if (i % p) return std::nullopt;
    auto c = r.try_div(ctx.h().pow(i));
    if (!c) return std::nullopt;
    out.emplace(i / p, *c);
  }
  return out;
}

NormalizerVerdict normalizer_test(const WeylElement& a, const AhContext& ctx) {
  NormalizerVerdict v;
  std::int64_t p = ctx.p();
  for (const auto& [i, r] : a.terms()) {
    if (i == 0) continue;
    Poly hi = ctx.h().pow(i - 1);
    if (p == 0 || i % p) {
      if (!(ctx.pi() * hi).divides(r)) {
        v.in_normalizer = false;
        v.failing_degree = i;
        v.reason = "pi_h h^" + std::to_string(i - 1) + " does not divide the coefficient of y^" + std::to_string(i);
        return v;
      }
    } else if (!hi.divides(r.derivative())) {
      v.in_normalizer = false;
      v.failing_degree = i;
      v.reason = "h^" + std::to_string(i - 1) + " does not divide the derivative of the coefficient of y^" +
                 std::to_string(i);
      return v;
    }
  }
  return v;
}

WeylElement a_n_element(int n, const AhContext& ctx) {
  if (n < 1) throw DomainError("a_n", "a_n is only materialized for n >= 1");
  return WeylElement::term(ctx.pi() * ctx.h().pow(n - 1), n);
}

namespace {

bool member_of(const WeylElement& a, const Poly& h) {
  Poly hi = Poly::constant(h.field(), 1);
  int cur = 0;
  for (const auto& [i, r] : a.terms()) {
    for (; cur < i; ++cur) hi = hi * h;
    if (!hi.divides(r)) return false;
  }
  return true;
}

std::vector<Poly> collect_by(const WeylElement& a, const Poly& h) {
  if (a.is_zero()) return {};
  const Field& F = h.field();
  WeylElement yh = weyl_mul(WeylElement::y(F), WeylElement(h));
  int n = a.y_degree().value();
  std::vector<WeylElement> pw{WeylElement::constant(F, 1)};
  for (int i = 1; i <= n; ++i) pw.push_back(pw.back() * yh);
  std::vector<Poly> f(n + 1, Poly(F));
  WeylElement rest = a;
  while (!rest.is_zero()) {
    int top = rest.y_degree().value();
    auto q = rest.coeff(top).try_div(h.pow(top));
    if (!q) throw NotInAh("element " + to_string(a) + " is not in A_h");
    f[top] = *q;
    rest -= pw[top].left_mul(*q);
  }
  return f;
}

}  // namespace

WeylElement embed_Ag_into_Af(const Poly& g, const Poly& f, const WeylElement& a) {
  if (f.is_zero() || !f.divides(g)) throw DomainError("embedding", "f must divide g");
  if (!member_of(a, g)) throw NotInAh("element is not in A_g");
  return a;
}

std::vector<Poly> embed_Ag_into_Af_coords(const Poly& g, const Poly& f, const std::vector<Poly>& c) {
  if (f.is_zero() || !f.divides(g)) throw DomainError("embedding", "f must divide g");
  const Field& F = g.field();
  WeylElement yg = weyl_mul(WeylElement::y(F), WeylElement(g));
  WeylElement img(F), pw = WeylElement::constant(F, 1);
  for (size_t j = 0; j < c.size(); ++j) {
    if (j) pw = pw * yg;
    img += pw.left_mul(c[j]);
  }
  return collect_by(img, f);
}

}  // namespace weylder
