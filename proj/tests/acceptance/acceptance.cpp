// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include "fixtures.hpp"
#include "oracles.hpp"

#include "dedekind/coalgebra.hpp"
#include "dedekind/corpus.hpp"
#include "dedekind/link_homology.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace dedekind;
using fx::r;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

// Accepted algebras and every parameter set seen, shared across criteria.
std::vector<FrobeniusAlgebra> g_algebras;
std::vector<FrobeniusAlgebra> g_trace_free;
std::vector<FrobeniusData> g_sampled;

Outcome c1_worked_example() {
  Check c;
  const RingElement w = RingElement::sqrt_d(fx::zm5());
  for (int s : {1, -1})
    for (int e : {1, -1}) {
      const std::string tag = "(s=" + std::to_string(s) + ",eps1=" + std::to_string(e) + ") ";
      try {
        FrobeniusAlgebra alg = example_zsqrtm5(s, e);
        const ValidationReport& rep = alg.report();
        c.require(alg.data().b_bar == r(e) * ((w - r(s) - r(2)) * r(e) - r(3)), tag + "b_bar formula");
        for (const char* cell : {"dual_unit_pairing", "dual_unit_orthogonality", "dual_x_orthogonality",
                                 "dual_x_pairing", "dual_d_is_z_c_prime"})
          c.require(rep.passed(cell), tag + cell);
        c.require(abs(rep.epsilon_tilde.determinant) == 1, tag + "det eps~");
        g_algebras.push_back(alg);
        g_sampled.push_back(alg.data());
      } catch (const std::exception& ex) {
        c.require(false, tag + ex.what());
      }
    }
  return {c.ok, c.ok ? "4 algebras, identities exact, det eps~ = +-1" : c.why.str()};
}

Outcome c2_trace_free() {
  Check c;
  const Ideal& mu = fx::mu();
  int taken = 0, outside = 0;
  while (taken < 20) {
    const RingElement a_bar = r(fx::uniform(-5, 5), fx::uniform(-5, 5));
    const RingElement b_bar = fx::unit_sign(), e1 = fx::unit_sign();
    const FrobeniusData data{mu, r(2), a_bar, b_bar, e1, r(0)};
    if (!mu.contains(a_bar)) {
      ValidationReport rep = validate(data);
      c.require(!rep.accepted && rep.rejection == ErrorKind::IntegralityViolation,
                "a_bar = " + to_string(a_bar) + " outside mu not rejected as IntegralityViolation");
      ++outside;
      continue;
    }
    ++taken;
    try {
      FrobeniusAlgebra alg = family_eps_x_zero(mu, r(2), a_bar, b_bar, e1);
      c.require(alg.duals().c == unit_inverse(e1), "c != eps(1)^-1");
      c.require(alg.duals().d_prime == unit_inverse(b_bar) * unit_inverse(e1), "d' != b_bar^-1 eps(1)^-1");
      TensorPowers spaces(alg);
      c.require(comultiply_one_from_partition(spaces).lattice == comultiply_one(spaces).lattice,
                "Delta(1) via the partition differs from the closed form");
      g_algebras.push_back(alg);
      g_trace_free.push_back(alg);
      g_sampled.push_back(data);
    } catch (const std::exception& ex) {
      c.require(false, "a_bar = " + to_string(a_bar) + ": " + ex.what());
    }
  }
  return {c.ok, c.ok ? "20 samples with a_bar in mu accepted; " + std::to_string(outside) +
                           " draws with a_bar outside mu rejected (IntegralityViolation)"
                     : c.why.str()};
}

Outcome c3_unit_trace() {
  Check c;
  for (int i = 0; i < 20; ++i) {
    const RingElement a_bar = fx::random_in(fx::mu(), 5), e1 = fx::unit_sign(), du = fx::unit_sign();
    try {
      FrobeniusAlgebra alg = family_eps_x_one(fx::mu(), r(2), a_bar, e1, du);
      const RingElement t_bar = *alg.report().t_bar.to_ring();
      c.require((r(2) - t_bar * e1) * du == r(1), "(z - t_bar eps(1)) d != 1 at a_bar = " + to_string(a_bar));
      g_algebras.push_back(alg);
      g_sampled.push_back(alg.data());
    } catch (const std::exception& ex) {
      c.require(false, "a_bar = " + to_string(a_bar) + ": " + ex.what());
    }
  }
  return {c.ok, c.ok ? "20 samples valid, (z - t_bar eps(1)) d = 1" : c.why.str()};
}

Outcome c4_nonvanishing() {
  Check c;
  int rejected = 0;
  for (int i = 0; i < 50; ++i) {
    FrobeniusData data{fx::mu(), r(2), fx::random_in(fx::mu(), 4), fx::random_element(fx::zm5(), 5), r(0),
                       fx::random_in(fx::mu(), 4)};
    c.require(!validate(data).accepted, "eps(1) = 0 accepted");
    ++rejected;
  }
  for (const FrobeniusAlgebra& alg : g_algebras) {
    const ValidationReport& rep = alg.report();
    c.require(!rep.t_bar.is_zero() && !rep.c.is_zero() && !rep.d_prime.is_zero(), "vanishing t_bar, c or d'");
  }
  return {c.ok, c.ok ? std::to_string(rejected) + " eps(1) = 0 inputs rejected; t_bar, c, d' nonzero on " +
                           std::to_string(g_algebras.size()) + " accepted algebras"
                     : c.why.str()};
}

Outcome c5_order_two() {
  Check c;
  const Ideal& mu = fx::mu();
  try {
    ClassOrderTwoCertificate cert = certify_order_two(mu);
    c.require(!oracle::principal_generator(mu).has_value(), "oracle finds a generator of mu");
    c.require(oracle::square_is_principal(mu, cert.z), "oracle: mu^2 != (z)");
  } catch (const std::exception& ex) {
    c.require(false, std::string("mu: ") + ex.what());
  }
  for (const Ideal& bad : {Ideal::unit(fx::zm5()), ideal_from_generators(fx::zm5(), {r(2)})}) {
    bool refused = false;
    try {
      certify_order_two(bad);
    } catch (const Error& e) {
      refused = e.kind() == ErrorKind::NotOrderTwo;
    }
    c.require(refused, to_string(bad) + " certified");
    c.require(oracle::principal_generator(bad).has_value(), "oracle finds no generator of " + to_string(bad));
  }
  return {c.ok, c.ok ? "(2,1+w) certified; (1), (2) refused; enumeration oracle agrees" : c.why.str()};
}

Outcome c6_kernel_split() {
  Check c;
  for (const FrobeniusAlgebra& alg : g_algebras) {
    try {
      KernelReport k = kernel_m_analysis(TensorPowers(alg));
      c.require(k.direct_sum_verified && k.action_identities_verified, "kernel report incomplete");
    } catch (const std::exception& ex) {
      c.require(false, ex.what());
    }
  }
  return {c.ok, c.ok ? std::to_string(g_algebras.size()) + " algebras: lattice equality and action identities"
                     : c.why.str()};
}

Outcome c7_kernel_iso() {
  Check c;
  for (const FrobeniusAlgebra& alg : g_trace_free) {
    KernelReport k = kernel_m_analysis(TensorPowers(alg));
    c.require(k.generator && k.generator->u.is_zero(), "generator not at u = 0");
    c.require(k.generator && k.generator->value == -alg.data().b_bar && is_unit(k.generator->value),
              "value != -b_bar");
    c.require(k.iso_to_A && k.generator && k.generator->lattice_verified, "A Xhat != ker(m)");
  }
  return {c.ok, c.ok ? std::to_string(g_trace_free.size()) + " trace-free algebras: u = 0, A Xhat = ker(m)"
                     : c.why.str()};
}

Outcome c8_curl() {
  Check c;
  TensorPowers spaces(build_algebra(standard_algebra("eps0")));
  HomologyReport a = homology_integral(build_complex(diagram("unknot0"), spaces));
  HomologyReport b = homology_integral(build_complex(diagram("unknot_r1plus"), spaces));
  ComparisonReport cmp = compare_homology(a, b);
  c.require(cmp.z_equal, "integral homology differs");
  std::string shape;
  for (const auto& d : b.degrees) shape += " H^" + std::to_string(d.degree) + "=" + to_string(d.group);
  return {c.ok, c.ok ? "agree degree-wise;" + shape : c.why.str()};
}

Outcome c9_lee() {
  Check c;
  std::vector<FrobeniusAlgebra> algs = {build_algebra(standard_algebra("eps0"))};
  for (int s : {1, -1})
    for (int e : {1, -1}) algs.push_back(example_zsqrtm5(s, e));
  const std::map<std::string, std::size_t> expected = {{"unknot0", 2},       {"unknot_r1plus", 2}, {"unknot_r1minus", 2},
                                                       {"unknot_r2pair", 2}, {"trefoil", 2},       {"hopf", 4}};
  for (const FrobeniusAlgebra& alg : algs) {
    c.require(!alg.data().discriminant().is_zero(), "discriminant vanishes");
    TensorPowers spaces(alg);
    for (const auto& [name, dim] : expected) {
      PDCode pd = diagram(name);
      Complex cx = build_complex(pd, spaces);
      HomologyReport h = homology_integral(cx);
      std::size_t oracle_total = 0;
      for (auto v : oracle::k_homology(pd, alg.data())) oracle_total += v;
      c.require(h.total_k_dim == dim, name + ": K-dimension " + std::to_string(h.total_k_dim));
      c.require(oracle_total == dim, name + ": oracle K-dimension " + std::to_string(oracle_total));
      c.require(h.k_dims_match_z_ranks, name + ": Z-rank/2 differs from the rational rank");
    }
    for (const auto& [a, b] : reidemeister_pairs())
      c.require(reidemeister_compare(diagram(a), diagram(b), spaces).k_equal, a + " vs " + b + " K-dims differ");
  }
  return {c.ok, c.ok ? std::to_string(algs.size()) + " algebras: unknots 2, trefoil 2, Hopf 4; pairs agree" : c.why.str()};
}

Outcome c10_axioms() {
  Check c;
  std::vector<FrobeniusAlgebra> algs;
  for (int s : {1, -1})
    for (int e : {1, -1}) algs.push_back(example_zsqrtm5(s, e));
  algs.push_back(build_algebra(standard_algebra("eps0")));
  algs.push_back(build_algebra(standard_algebra("sanity")));
  algs.push_back(g_algebras.back());
  for (const FrobeniusAlgebra& alg : algs) {
    const RingContext& ctx = alg.context();
    TensorPowers spaces(alg);
    const KMatrix m = multiplication_map(alg), delta = comultiplication_map(alg), eps = counit_map(alg);
    const KMatrix id = KMatrix::identity(ctx, 2);
    auto k_of = [&](const AlgebraElement& x) {
      return std::vector<FieldElement>{FieldElement(x.u0), FieldElement(x.u1)};
    };
    auto kron_vec = [](const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
      std::vector<FieldElement> out;
      for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
      return out;
    };
    try {
      spaces.lattice_map(m, 2, 1);
      spaces.lattice_map(delta, 1, 2);
    } catch (const std::exception& ex) {
      c.require(false, ex.what());
    }
    for (int i = 0; i < 100; ++i) {
      const AlgebraElement x = fx::random_algebra_element(alg, 6), y = fx::random_algebra_element(alg, 6),
                           z = fx::random_algebra_element(alg, 6);
      c.require(multiply(alg, multiply(alg, x, y), z) == multiply(alg, x, multiply(alg, y, z)), "associativity");
      c.require(trace(alg, multiply(alg, x, y)) == trace(alg, multiply(alg, y, x)), "trace symmetry");
      const auto kx = k_of(x), xy = kron_vec(kx, k_of(y)), dx = delta.apply(kx);
      c.require(kron(eps, id).apply(dx) == kx && kron(id, eps).apply(dx) == kx, "counit");
      const auto lhs = delta.apply(m.apply(xy));
      c.require(lhs == kron(m, id).apply(kron(id, delta).apply(xy)) &&
                    lhs == kron(id, m).apply(kron(delta, id).apply(xy)),
                "Frobenius compatibility");
    }
  }
  return {c.ok, c.ok ? std::to_string(algs.size()) + " algebras x 100 random triples" : c.why.str()};
}

Outcome c11_routes() {
  Check c;
  for (const FrobeniusData& data : g_sampled) {
    ValidationReport rep = validate(data);
    c.require(rep.accepted && fx::routes_of(rep).agree() && fx::routes_of(rep).duals, "sampled set: routes differ");
  }
  int invalid = 0, draws = 0;
  while (invalid < 20 && draws < 1000) {
    ++draws;
    FrobeniusData data = g_sampled[static_cast<std::size_t>(fx::uniform(0, static_cast<long>(g_sampled.size()) - 1))];
    RingElement bump = fx::random_element(fx::zm5(), 3);
    if (bump.is_zero()) continue;
    if (fx::uniform(0, 1)) {
      data.b_bar += bump;
    } else {
      data.eps_one += bump;
    }
    ValidationReport rep = validate(data);
    if (rep.accepted || rep.rejection == ErrorKind::DegenerateTrace) continue;
    ++invalid;
    c.require(fx::routes_of(rep).agree(), "perturbation: routes differ");
    c.require(rep.rejection != ErrorKind::InconsistentRoutes, "perturbation: InconsistentRoutes");
  }
  c.require(invalid == 20, "could not draw 20 invalid perturbations");
  return {c.ok, c.ok ? std::to_string(g_sampled.size()) + " sampled sets and 20 invalid perturbations agree"
                     : c.why.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"worked example over Z[sqrt -5]", c1_worked_example},
      {"trace-free family", c2_trace_free},
      {"unit-trace family", c3_unit_trace},
      {"eps(1) = 0 rejected, nonvanishing on accepted", c4_nonvanishing},
      {"order-two certificate", c5_order_two},
      {"ker(m) = X_mu + O Xhat", c6_kernel_split},
      {"ker(m) = A certification", c7_kernel_iso},
      {"positive curl vs 0-crossing unknot over Z", c8_curl},
      {"Lee-type K-dimensions", c9_lee},
      {"Frobenius axioms", c10_axioms},
      {"two-route validation consistency", c11_routes},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " -- "
              << o.detail << "\n";
  }
  std::cout << (failures ? "FAILED " : "all ") << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass\n";
  return failures ? 1 : 0;
}
