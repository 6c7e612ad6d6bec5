#pragma once

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "weylder/weyl.hpp"

namespace weylder {

struct NotInAh : DomainError {
  explicit NotInAh(const std::string& what) : DomainError("membership", what) {}
};

// element of Z(A_h) = F[t1, t2] with t1 = x^p, t2 = zeta, stored as t2-power -> poly in t1
class CenterPoly {
 public:
  CenterPoly() = default;
  explicit CenterPoly(const Field& F) : F_(F) {}
  static CenterPoly t1_poly(const Poly& c) {
    CenterPoly z(c.field());
    z.add(0, c);
    return z;
  }

  const Field& field() const { return F_; }
  const std::map<int, Poly>& terms() const { return t_; }
  Poly coeff(int k) const;
  bool is_zero() const { return t_.empty(); }
  void add(int k, const Poly& c);

  CenterPoly operator+(const CenterPoly& o) const;
  CenterPoly operator-(const CenterPoly& o) const;
  CenterPoly operator*(const CenterPoly& o) const;
  CenterPoly operator-() const;
  bool operator==(const CenterPoly& o) const { return F_ == o.F_ && t_ == o.t_; }
  bool operator!=(const CenterPoly& o) const { return !(*this == o); }

  // exact division by a polynomial in t1 alone
  std::optional<CenterPoly> div_t1(const Poly& c) const;
  CenterPoly d_dt1() const;
  CenterPoly d_dt2() const;

  std::string str() const;

 private:
  Field F_;
  std::map<int, Poly> t_;
};

struct NormalizerVerdict {
  bool in_normalizer = true;
  std::optional<int> failing_degree;
  std::string reason;
};

struct SquarefreePart {
  Poly factor;  // monic squarefree
  int multiplicity;
};

// monic generator of {r : h | h' r}
Poly pi_h(const Poly& h);
// maximal monic divisor of h in F[x^p]; 1 in characteristic 0
Poly varrho_h(const Poly& h);
// h = lc * prod factor^multiplicity with pairwise coprime squarefree factors
std::vector<SquarefreePart> squarefree_decomposition(const Poly& h);

class AhContext {
 public:
  explicit AhContext(const Poly& h);

  const Field& field() const { return F_; }
  std::int64_t p() const { return F_.characteristic(); }
  bool char0() const { return F_.is_char0(); }

  const Poly& h() const { return h_; }
  const Poly& hprime() const { return hp_; }
  const Poly& pi() const { return pi_; }
  const Poly& varrho() const { return rho_; }
  const Poly& h_over_pi() const { return h_over_pi_; }
  const Poly& pi_hprime_over_h() const { return pi_hp_over_h_; }
  const Poly& h_over_pi_varrho() const { return h_over_pi_rho_; }
  // pi applied to h / pi_h, the product of primes of h of multiplicity >= 2 (char 0)
  const Poly& pi2() const { return pi2_; }
  int deg_h() const { return h_.top(); }

  // characteristic p data
  const std::vector<Poly>& hbar_components() const { return hbar_i_; }
  const Poly& hbar() const { return hbar_; }
  const std::vector<Poly>& qbreve_components() const { return qbreve_i_; }
  const Poly& qbreve() const { return qbreve_; }
  const Poly& zeta_hat_coeff() const { return zeta_hat_; }  // delta^p(x)/h in F[x^p], as poly in x
  const Poly& hp_over_varrho() const { return hp_over_rho_; }  // h^p / varrho_h, as poly in x
  const std::vector<Poly>& theta_S() const;
  const std::string& theta_diagnostic() const { return theta_diag_; }

  // y-hat powers in normal form, grown on demand
  const WeylElement& yhat_power(int n) const;
  WeylElement yhat() const { return yhat_power(1); }

 private:
  Field F_;
  Poly h_, hp_, pi_, rho_, h_over_pi_, pi_hp_over_h_, h_over_pi_rho_, pi2_;
  std::vector<Poly> hbar_i_, qbreve_i_;
  Poly hbar_, qbreve_, zeta_hat_, hp_over_rho_;
  std::vector<Poly> S_;
  std::string theta_diag_;
  mutable std::deque<WeylElement> yhat_pows_;
  mutable std::mutex yhat_mu_;

  void init_charp();
};

using Context = std::shared_ptr<const AhContext>;
Context make_context(const Poly& h);

bool ah_membership(const WeylElement& a, const AhContext& ctx);
void require_membership(const WeylElement& a, const AhContext& ctx, const std::string& what);

WeylElement yhat_expand(const std::vector<Poly>& f, const AhContext& ctx);
std::vector<Poly> yhat_collect(const WeylElement& a, const AhContext& ctx);

Poly delta(const Poly& f, const AhContext& ctx);
Poly delta_p_of_x(const AhContext& ctx);
Poly delta0(const Poly& r, const AhContext& ctx);
Poly vartheta0(const AhContext& ctx);

WeylElement zeta_element(const AhContext& ctx);
// coefficients of zeta in the y-hat basis: yhat^p - (delta^p(x)/h) yhat
std::vector<Poly> zeta_yhat_form(const AhContext& ctx);

std::optional<CenterPoly> center_coords(const WeylElement& a, const AhContext& ctx);
WeylElement center_to_weyl(const CenterPoly& z, const AhContext& ctx);

// f in C_{A_h}(x) written as sum_k f_k zeta^k with f_k in F[x]; nullopt when f does not commute with x
std::optional<std::map<int, Poly>> centralizer_x_coords(const WeylElement& f, const AhContext& ctx);

NormalizerVerdict normalizer_test(const WeylElement& a, const AhContext& ctx);
WeylElement a_n_element(int n, const AhContext& ctx);

// image of a in A_f under the embedding A_g -> A_f (f | g); elements are given in A_1 coordinates
WeylElement embed_Ag_into_Af(const Poly& g, const Poly& f, const WeylElement& a);
// the same map on y-tilde coordinates: sum c_j ytilde^j with ytilde = y g, returned in y-hat coordinates of A_f
std::vector<Poly> embed_Ag_into_Af_coords(const Poly& g, const Poly& f, const std::vector<Poly>& c);

// (r h^(p-1))^(p-1), reported as a polynomial in u = x^p
Poly theta_p_map(const Poly& r, const AhContext& ctx);
bool in_theta(const Poly& r, const AhContext& ctx);

struct ThetaSplit {
  Poly s;                // in span S
  Poly g;                // r = s + delta(g)
  std::vector<Coeff> s_coords;  // coordinates of s against theta_S()
};
ThetaSplit split_theta(const Poly& r, const AhContext& ctx);

// some c in F[x^p] with m | r - c
std::optional<Poly> frobenius_part_mod(const Poly& r, const Poly& m);

}  // namespace weylder
