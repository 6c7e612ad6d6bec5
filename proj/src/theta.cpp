#include <algorithm>

#include "weylder/ah.hpp"
#include "weylder/linalg.hpp"
#include "weylder/text.hpp"

namespace weylder {

Poly theta_p_map(const Poly& r, const AhContext& ctx) {
  if (ctx.char0()) throw DomainError("characteristic", "theta requires characteristic p > 0");
  int p = static_cast<int>(ctx.p());
  return to_u((r * ctx.h().pow(p - 1)).derivative(p - 1));
}

bool in_theta(const Poly& r, const AhContext& ctx) { return theta_p_map(r, ctx).is_zero(); }

namespace {

// degrees e >= deg h whose monomial is the leading term of x^(e - deg h) h in im delta
bool is_pivot_degree(int e, int d, int p) { return e >= d && (e - d) % p != p - 1; }

// reduce r by the im delta pivots from the top down to degree deg h; g collects a preimage
Poly reduce_by_image(Poly r, const AhContext& ctx, Poly* g) {
  const Field& F = ctx.field();
  int d = ctx.deg_h();
  int p = static_cast<int>(ctx.p());
  Coeff lc_inv = ctx.h().leading().inverse();
  for (int e = r.length() - 1; e >= d; --e) {
    Coeff c = r.coeff(e);
    if (c.is_zero() || !is_pivot_degree(e, d, p)) continue;
    int m = e - d;
    Coeff a = c * lc_inv;
    r -= ctx.h().shift(m) * a;
    if (g) *g += Poly::monomial(F, a / Coeff(F, static_cast<long>(m + 1)), m + 1);
  }
  return r;
}

std::vector<Poly> theta_block(const AhContext& ctx, int N) {
  const Field& F = ctx.field();
  std::vector<Poly> images;
  int len = 0;
  for (int j = 0; j < N; ++j) {
    images.push_back(theta_p_map(Poly::monomial(F, j), ctx));
    len = std::max(len, images.back().length());
  }
  std::vector<Vec> cols;
  for (const auto& im : images) cols.push_back(to_vec(im, std::max(len, 1)));
  Matrix m = Matrix::from_columns(F, std::max(len, 1), cols);
  std::vector<Poly> rem;
  for (const auto& v : m.nullspace()) {
    Poly r = reduce_by_image(from_vec(F, v), ctx, nullptr);
    if (!r.is_zero()) rem.push_back(r);
  }
  if (rem.empty()) return {};
  // echelon on leading degree: columns in descending degree
  Matrix e(F, static_cast<int>(rem.size()), N);
  for (size_t i = 0; i < rem.size(); ++i)
    for (int k = 0; k < N; ++k) e.at(static_cast<int>(i), k) = rem[i].coeff(N - 1 - k);
  auto piv = e.rref();
  std::vector<Poly> out;
  for (size_t i = 0; i < piv.size(); ++i) {
    Vec v(N, Coeff::zero(F));
    for (int k = 0; k < N; ++k) v[N - 1 - k] = e.at(static_cast<int>(i), k);
    out.push_back(from_vec(F, v));
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.length() < b.length(); });
  return out;
}

}  // namespace

std::vector<Poly> compute_theta_S(const AhContext& ctx, std::string& diag) {
  int d = ctx.deg_h();
  int p = static_cast<int>(ctx.p());
  auto s1 = theta_block(ctx, d + p);
  auto s2 = theta_block(ctx, d + 2 * p);
  if (s1.size() != s2.size()) {
    diag = "dim Theta/im delta did not stabilize: " + std::to_string(s1.size()) + " below degree " +
           std::to_string(d + p) + ", " + std::to_string(s2.size()) + " below degree " + std::to_string(d + 2 * p);
    return {};
  }
  for (const auto& s : s2)
    if (s.length() > d) {
      diag = "complement element " + to_string(s) + " has degree >= deg h";
      return {};
    }
  return s2;
}

ThetaSplit split_theta(const Poly& r, const AhContext& ctx) {
  const Field& F = ctx.field();
  if (!in_theta(r, ctx)) throw DomainError("theta", to_string(r) + " is not in Theta");
  const auto& S = ctx.theta_S();
  ThetaSplit out{Poly(F), Poly(F), {}};
  Poly rho = reduce_by_image(r, ctx, &out.g);
  int d = ctx.deg_h();
  if (rho.length() > d) throw DomainError("internal", "Theta element left a non-pivot term above deg h");
  out.s = rho;
  out.s_coords.assign(S.size(), Coeff::zero(F));
  if (rho.is_zero()) return out;
  std::vector<Vec> cols;
  for (const auto& s : S) cols.push_back(to_vec(s, d));
  if (cols.empty()) throw DomainError("theta-bound", "remainder " + to_string(rho) + " outside span S");
  auto sol = Matrix::from_columns(F, d, cols).solve(to_vec(rho, d));
  if (!sol) throw DomainError("theta-bound", "remainder " + to_string(rho) + " outside span S");
  out.s_coords = *sol;
  return out;
}

std::optional<Poly> frobenius_part_mod(const Poly& r, const Poly& m) {
  const Field& F = r.field();
  if (m.is_constant()) return Poly(F);
  int n = m.top();
  int p = static_cast<int>(F.characteristic());
  std::vector<Vec> cols;
  for (int k = 0; k <= n; ++k) cols.push_back(to_vec(Poly::monomial(F, k * p).rem(m), n));
  auto sol = Matrix::from_columns(F, n, cols).solve(to_vec(r.rem(m), n));
  if (!sol) return std::nullopt;
  Poly c(F);
  for (int k = 0; k <= n; ++k) c += Poly::monomial(F, (*sol)[k], k * p);
  return c;
}

}  // namespace weylder
