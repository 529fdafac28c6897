#pragma once

#include "dedekind/omodule.hpp"

#include <vector>

namespace dedekind {

// Element of A^(x)n, both as K-coordinates in the word basis of {1, X} and as
// coordinates in the lattice of TensorPowers::power(n).
struct TensorElement {
  std::size_t factors = 0;
  std::vector<FieldElement> k_coords;
  std::vector<Integer> lattice;
};

// Delta(1), with the closed formula checked against the dual-map route.
// Throws InconsistentRoutes if they differ and NonIntegralComultiplication if
// Delta(1) is not in A (x) A.
TensorElement comultiply_one(const TensorPowers& spaces);

// Trace-free algebras only: eps(1)^{-1}(1 (x) 1 + b_bar^{-1} sum_j u_j X (x) u'_j X)
// assembled from lattice coordinates of pure tensors over the stored partition
// of z. Throws PreconditionViolation when eps_x_bar != 0 or b_bar, eps(1) are
// not units.
TensorElement comultiply_one_from_partition(const TensorPowers& spaces);

// (l_x (x) id) Delta(1).
TensorElement comultiply(const TensorPowers& spaces, const AlgebraElement& x);

// eps(h^g(1)) for the handle operator h = m o Delta.
RingElement closed_surface_invariant(const FrobeniusAlgebra& alg, unsigned genus);

std::string to_string(const TensorElement& t);

}  // namespace dedekind
