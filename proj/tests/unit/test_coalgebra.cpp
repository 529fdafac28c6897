#include "doctest.h"
#include "fixtures.hpp"

#include "dedekind/coalgebra.hpp"
#include "dedekind/corpus.hpp"

using namespace dedekind;
using fx::r;

namespace {

std::vector<FieldElement> k_of(const FrobeniusAlgebra&, const AlgebraElement& x) {
  return {FieldElement(x.u0), FieldElement(x.u1)};
}

std::vector<FieldElement> kron_vec(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  std::vector<FieldElement> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

std::vector<FrobeniusAlgebra> algebras() {
  std::vector<FrobeniusAlgebra> out;
  for (const auto& name : algebra_names()) out.push_back(build_algebra(standard_algebra(name)));
  for (int s : {1, -1})
    for (int e : {1, -1}) out.push_back(example_zsqrtm5(s, e));
  out.push_back(family_eps_x_one(fx::mu(), r(2), r(3, 1), r(1), r(-1)));
  return out;
}

}  // namespace

TEST_CASE("Delta(1) closed form agrees with the dual route and lies in A (x) A") {
  for (const FrobeniusAlgebra& alg : algebras()) {
    TensorPowers spaces(alg);
    TensorElement d = comultiply_one(spaces);
    CHECK(d.k_coords == comultiplication_one_dual(alg));
    CHECK(spaces.k_coordinates(d.lattice, 2) == d.k_coords);
  }
}

TEST_CASE("trace-free Delta(1) from the partition of z") {
  for (long b : {1L, -1L})
    for (long e : {1L, -1L}) {
      FrobeniusAlgebra alg = family_eps_x_zero(fx::mu(), r(2), r(1, 1), r(b), r(e));
      TensorPowers spaces(alg);
      TensorElement via_partition = comultiply_one_from_partition(spaces);
      TensorElement closed = comultiply_one(spaces);
      CHECK(via_partition.lattice == closed.lattice);
      // eps(1)^{-1} (1 (x) 1 + b^{-1} X (x) X) in K-coordinates.
      const FieldElement ei = FieldElement(unit_inverse(r(e)));
      CHECK(closed.k_coords[0] == ei);
      CHECK(closed.k_coords[1].is_zero());
      CHECK(closed.k_coords[2].is_zero());
      CHECK(closed.k_coords[3] == ei * FieldElement(r(2)) / FieldElement(r(b)));
    }
  CHECK_THROWS_AS(comultiply_one_from_partition(TensorPowers(example_zsqrtm5(1, 1))), Error);
}

TEST_CASE("property: Frobenius algebra axioms on random elements") {
  for (const FrobeniusAlgebra& alg : algebras()) {
    const RingContext& ctx = alg.context();
    TensorPowers spaces(alg);
    const KMatrix m = multiplication_map(alg), delta = comultiplication_map(alg), eps = counit_map(alg);
    const KMatrix id = KMatrix::identity(ctx, 2);
    // Structure maps preserve the lattices.
    CHECK_NOTHROW(spaces.lattice_map(m, 2, 1));
    CHECK_NOTHROW(spaces.lattice_map(delta, 1, 2));
    CHECK_NOTHROW(spaces.lattice_map(kron(m, id), 3, 2));
    CHECK_NOTHROW(spaces.lattice_map(kron(id, delta), 2, 3));
    for (int trial = 0; trial < 100; ++trial) {
      const AlgebraElement x = fx::random_algebra_element(alg, 6), y = fx::random_algebra_element(alg, 6),
                           z = fx::random_algebra_element(alg, 6);
      // Associativity, commutativity, trace symmetry.
      CHECK(multiply(alg, multiply(alg, x, y), z) == multiply(alg, x, multiply(alg, y, z)));
      CHECK(multiply(alg, x, y) == multiply(alg, y, x));
      CHECK(trace(alg, multiply(alg, x, y)) == trace(alg, multiply(alg, y, x)));
      const auto kx = k_of(alg, x), ky = k_of(alg, y);
      CHECK(m.apply(kron_vec(kx, ky)) == k_of(alg, multiply(alg, x, y)));
      // Counit: (eps (x) id) Delta = id = (id (x) eps) Delta.
      const auto dx = delta.apply(kx);
      CHECK(kron(eps, id).apply(dx) == kx);
      CHECK(kron(id, eps).apply(dx) == kx);
      // Frobenius: Delta m = (m (x) id)(id (x) Delta) = (id (x) m)(Delta (x) id).
      const auto xy = kron_vec(kx, ky);
      const auto lhs = delta.apply(m.apply(xy));
      CHECK(lhs == kron(m, id).apply(kron(id, delta).apply(xy)));
      CHECK(lhs == kron(id, m).apply(kron(delta, id).apply(xy)));
      // Coassociativity.
      CHECK(kron(delta, id).apply(dx) == kron(id, delta).apply(dx));
      // Delta(x) lies in A (x) A.
      CHECK_NOTHROW(comultiply(spaces, x));
    }
  }
}

TEST_CASE("closed surfaces") {
  FrobeniusAlgebra sanity = build_algebra(standard_algebra("sanity"));
  CHECK(closed_surface_invariant(sanity, 0) == r(0));
  CHECK(closed_surface_invariant(sanity, 1) == r(2));
  for (const FrobeniusAlgebra& alg : algebras()) {
    CHECK(closed_surface_invariant(alg, 0) == alg.data().eps_one);
    // Genus 1 is the rank of A over K.
    CHECK(closed_surface_invariant(alg, 1) == r(2));
    CHECK_NOTHROW(closed_surface_invariant(alg, 3));
  }
}
