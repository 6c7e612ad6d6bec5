#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylder/derivation.hpp"

namespace weylder {

// class of D_g + sum_n ad_{r_n a_n} in HH^1(A_h), char 0, stored reduced:
// deg g < deg h, deg r_n < deg(h/pi_h), n >= 1
struct HH1ClassChar0 {
  Poly g;
  std::map<int, Poly> terms;

  bool is_zero() const { return g.is_zero() && terms.empty(); }
  bool operator==(const HH1ClassChar0& o) const { return g == o.g && terms == o.terms; }
  bool operator!=(const HH1ClassChar0& o) const { return !(*this == o); }
  std::string str() const;
};

// reduce arbitrary data (any n >= 0, any degrees) to the canonical representative
HH1ClassChar0 make_class_char0(const Poly& g, const std::map<int, Poly>& terms, const AhContext& ctx);
HH1ClassChar0 class_D(const Poly& g, const AhContext& ctx);
HH1ClassChar0 class_ad_a(const Poly& r, int n, const AhContext& ctx);
HH1ClassChar0 add(const HH1ClassChar0& a, const HH1ClassChar0& b, const AhContext& ctx);
HH1ClassChar0 scale(const Coeff& c, const HH1ClassChar0& a);
Derivation representative(const HH1ClassChar0& c, const Context& ctx);

HH1ClassChar0 canonical_class_char0(const Derivation& D);
HH1ClassChar0 bracket_char0(const HH1ClassChar0& a, const HH1ClassChar0& b, const AhContext& ctx);

std::vector<HH1ClassChar0> center_HH1_char0(const AhContext& ctx);

// g = c h/pi_h - delta0(r0) with deg c < deg pi_h, deg r0 < deg(h/pi_h)
struct GSplit {
  Poly c, r0;
};
GSplit split_g_char0(const Poly& g, const AhContext& ctx);

// central part and commutator-ideal part of a class
std::pair<HH1ClassChar0, HH1ClassChar0> center_commutator_split(const HH1ClassChar0& c, const AhContext& ctx);

bool nilpotent_ideal_membership(const HH1ClassChar0& c, const AhContext& ctx);
// least n >= 0 with h/pi_h | pi2^n
int nilpotency_index_bound(const AhContext& ctx);

struct WittClassElement {
  Poly residue;
  int level;
  bool operator==(const WittClassElement& o) const { return level == o.level && residue == o.residue; }
};
// image in (D / D pi2) (x) W of the commutator part of c; central part is projected away
std::vector<WittClassElement> witt_quotient_map(const HH1ClassChar0& c, const AhContext& ctx);
// e_{r upsilon, m} for the basis element r (x) w_m
HH1ClassChar0 witt_inverse(const WittClassElement& w, const AhContext& ctx);
// e_{g,m} = -ad_{g a_(m+1)}
HH1ClassChar0 witt_e(const Poly& g, int m, const AhContext& ctx);
// bracket in (D / D pi2) (x) W
std::vector<WittClassElement> witt_bracket(const std::vector<WittClassElement>& a,
                                           const std::vector<WittClassElement>& b, const AhContext& ctx);

struct Factor {
  Poly u;
  int alpha;
};
// parses "u1^a1,u2^a2" and checks it against h; throws on mismatch
std::vector<Factor> parse_and_verify_factors(const std::string& text, const Poly& h);
void verify_factors(const std::vector<Factor>& f, const Poly& h);

struct HH1ReportChar0 {
  int dim_center = 0;
  std::vector<Poly> center_basis;  // D_{r h/pi_h}
  bool factors_given = false;
  std::vector<Factor> multiplicity_gt1_primes;
  bool nilpotent_N_trivial = true;
  int nilpotency_index_bound = 0;
  std::optional<int> witt_summand_count;
  bool abelian = false;
  bool nilpotent_lie_algebra = false;
  int hh1_dim_finite_part = 0;  // deg h when h = pi_h
};
HH1ReportChar0 structure_report_char0(const AhContext& ctx, const std::optional<std::vector<Factor>>& factors);

// ---- characteristic p ----

enum class GenKind { D, AdA, Ad, BhatX, Ex, Ey, Raw };

struct Generator {
  GenKind kind = GenKind::D;
  Poly poly;         // g for D, r for AdA
  int n = 0;         // index for AdA
  WeylElement elem;  // a for Ad
  WeylElement raw_x, raw_yhat;
};

struct SymTerm {
  WeylElement coeff;  // central in A_h
  Generator gen;
};

struct SymDerivation {
  std::vector<SymTerm> terms;
  std::string str() const;
};

SymDerivation sym_D(const Poly& g);
SymDerivation sym_ad_a(const Poly& r, int n);
SymDerivation sym_ad(const WeylElement& a);
SymDerivation sym_bhat_x(const Field& F);
SymDerivation sym_bhat_f(const AhContext& ctx);
SymDerivation sym_E_x(const Field& F);
SymDerivation sym_E_y(const Field& F);
SymDerivation sym_scale(const WeylElement& z, const SymDerivation& s);
SymDerivation sym_add(const SymDerivation& a, const SymDerivation& b);
SymDerivation sym_neg(const SymDerivation& a);

Derivation materialize(const SymDerivation& s, const Context& ctx);
Derivation materialize(const Generator& g, const Context& ctx);

struct BracketResult {
  SymDerivation value;
  bool exact = true;  // false when the identity only holds modulo inner derivations
  bool fallback = false;
};
BracketResult bracket_charp(const SymDerivation& a, const SymDerivation& b, const Context& ctx);

// e and b of [D_g, bhat_x] = D_e + ad_b
Poly e_term(const Poly& g, const AhContext& ctx);
WeylElement e_term_b(const Poly& g, const AhContext& ctx);
Poly zeta_n(const Poly& r, int n, const AhContext& ctx);
// keeps the r y^k with p | k
WeylElement project_P(const WeylElement& a, int p);

struct QuotientDegree {
  int y_degree;
  std::vector<Poly> generators;  // coefficients r with r y^i spanning N_i / (A_h + Z(A_1))_i
};

struct HH1CharPReport {
  bool free_over_center = false;
  Poly qbreve;
  Derivation basis_qbreve;
  Derivation basis_bhat_f;
  int theta_quotient_dim = 0;
  std::vector<Poly> theta_S;
  CenterDerivation res_qbreve, res_bhat_f;
  std::vector<QuotientDegree> normalizer_quotient;
  // certification
  int inner_certified = 0;
  bool torsion_witness = false;
  std::string torsion_note;
};
HH1CharPReport freeness_and_module_report_charp(const Context& ctx, int degree_bound, unsigned long seed,
                                                int certify_samples = 10);
std::vector<QuotientDegree> normalizer_quotient(const AhContext& ctx, int max_y_degree);

}  // namespace weylder
