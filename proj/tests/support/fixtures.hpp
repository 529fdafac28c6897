#pragma once

#include "dedekind/frobenius_algebra.hpp"
#include "dedekind/ideal.hpp"

#include <random>

namespace fx {

using namespace dedekind;

inline const RingContext& zm5() {
  static const RingContext ctx(-5);
  return ctx;
}

inline RingElement r(long x, long y = 0) { return RingElement(zm5(), x, y); }

// mu = (2, 1 + sqrt -5), the non-principal ideal with mu^2 = (2).
inline const Ideal& mu() {
  static const Ideal m = ideal_from_generators(zm5(), {r(2), r(1, 1)});
  return m;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20260214);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline RingElement random_element(const RingContext& ctx, long bound) {
  return RingElement(ctx, uniform(-bound, bound), uniform(-bound, bound));
}

inline RingElement random_in(const Ideal& ideal, long bound) {
  auto [h1, h2] = two_generators(ideal);
  return Integer(uniform(-bound, bound)) * h1 + Integer(uniform(-bound, bound)) * h2;
}

inline AlgebraElement random_algebra_element(const FrobeniusAlgebra& alg, long bound) {
  return alg.element(random_element(alg.context(), bound), random_in(alg.data().mu, bound));
}

inline RingElement unit_sign() { return r(uniform(0, 1) ? 1 : -1); }

}  // namespace fx

namespace fx {

struct Routes {
  bool duals = false;
  bool ideal = false;
  bool matrix = false;
  bool agree() const { return duals == ideal && ideal == matrix; }
};

inline Routes routes_of(const dedekind::ValidationReport& rep) {
  Routes r;
  r.duals = rep.passed("dual_c_in_O") && rep.passed("dual_d_in_mu") && rep.passed("dual_c_prime_in_z_inv_mu") &&
            rep.passed("dual_d_prime_in_O");
  r.ideal = rep.passed("eps_x2_in_delta_O") && rep.passed("eps_x_in_delta_mu") && rep.passed("eps_one_in_delta_z_O");
  r.matrix = rep.passed("epsilon_tilde_unimodular");
  return r;
}

}  // namespace fx
