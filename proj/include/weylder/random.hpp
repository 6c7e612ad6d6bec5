#pragma once

#include <random>

#include "weylder/ah.hpp"

namespace weylder {

// seeded generator for randomized suites; same seed, same stream
class Rng {
 public:
  explicit Rng(unsigned long seed) : g_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  Coeff coeff(const Field& F, int bound = 5) { return Coeff(F, static_cast<long>(uniform(-bound, bound))); }
  Poly poly(const Field& F, int max_deg, int bound = 5) {
    std::vector<Coeff> c;
    int d = uniform(-1, max_deg);
    for (int i = 0; i <= d; ++i) c.push_back(coeff(F, bound));
    return Poly(F, c);
  }
  Poly nonzero_poly(const Field& F, int max_deg) {
    for (;;) {
      Poly f = poly(F, max_deg);
      if (!f.is_zero()) return f;
    }
  }
  WeylElement weyl(const Field& F, int max_y, int max_x) {
    WeylElement a(F);
    for (int i = 0; i <= max_y; ++i) a.add_term(i, poly(F, max_x));
    return a;
  }
  // random element of A_h in y-hat coordinates
  WeylElement ah_element(const AhContext& ctx, int max_j, int max_x) {
    std::vector<Poly> f;
    for (int j = 0; j <= max_j; ++j) f.push_back(poly(ctx.field(), max_x));
    return yhat_expand(f, ctx);
  }
  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

}  // namespace weylder
