#include "dedekind/coalgebra.hpp"

namespace dedekind {

namespace {

TensorElement in_square(const TensorPowers& spaces, std::vector<FieldElement> k) {
  auto lattice = spaces.lattice_coordinates(k, 2);
  if (!lattice) throw Error(ErrorKind::NonIntegralComultiplication, "Delta leaves A (x) A");
  return {2, std::move(k), std::move(*lattice)};
}

}  // namespace

TensorElement comultiply_one(const TensorPowers& spaces) {
  const FrobeniusAlgebra& alg = spaces.algebra();
  std::vector<FieldElement> closed = comultiplication_one_closed(alg);
  if (closed != comultiplication_one_dual(alg))
    throw Error(ErrorKind::InconsistentRoutes, "closed-form Delta(1) differs from the dual-map route");
  return in_square(spaces, std::move(closed));
}

TensorElement comultiply_one_from_partition(const TensorPowers& spaces) {
  const FrobeniusAlgebra& alg = spaces.algebra();
  const FrobeniusData& p = alg.data();
  const RingContext& ctx = alg.context();
  if (!p.eps_x_bar.is_zero() || !is_unit(p.b_bar) || !is_unit(p.eps_one))
    throw Error(ErrorKind::PreconditionViolation, "partition route needs eps(X) = 0 and unit b_bar, eps(1)");
  const RingElement e_inv = unit_inverse(p.eps_one);
  const RingElement zero(ctx, 0);

  std::vector<Integer> acc = spaces.pair(1, spaces.element_coordinates({RingElement(ctx, 1), zero}),
                                         spaces.element_coordinates({RingElement(ctx, 1), zero}));
  const RingElement scale = unit_inverse(p.b_bar);
  const PartitionOfZ& part = alg.partition();
  for (std::size_t j = 0; j < part.u.size(); ++j) {
    std::vector<Integer> term = spaces.pair(1, spaces.element_coordinates({zero, scale * part.u[j]}),
                                            spaces.element_coordinates({zero, part.u_prime[j]}));
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
  }
  // Multiply by the unit eps(1)^{-1} through the O-action.
  const IntMatrix& act = spaces.power(2).action;
  std::vector<Integer> w_acc = act.apply(acc);
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = e_inv.x() * acc[i] + e_inv.y() * w_acc[i];
  return {2, spaces.k_coordinates(acc, 2), acc};
}

TensorElement comultiply(const TensorPowers& spaces, const AlgebraElement& x) {
  const FrobeniusAlgebra& alg = spaces.algebra();
  const TensorElement one = comultiply_one(spaces);
  const KMatrix l = kron(left_multiplication(alg, x.u0, x.u1), KMatrix::identity(alg.context(), 2));
  return in_square(spaces, l.apply(one.k_coords));
}

RingElement closed_surface_invariant(const FrobeniusAlgebra& alg, unsigned genus) {
  const RingContext& ctx = alg.context();
  const std::vector<FieldElement> h1 = multiplication_map(alg).apply(comultiplication_one_closed(alg));
  // h(x) = x h(1) since Delta is a map of A-bimodules.
  const KMatrix h = left_multiplication(alg, h1[0], h1[1]);
  std::vector<FieldElement> v = {FieldElement(ctx, 1), FieldElement(ctx, 0)};
  for (unsigned g = 0; g < genus; ++g) v = h.apply(v);
  auto value = counit_map(alg).apply(v)[0].to_ring();
  if (!value) throw Error(ErrorKind::InvariantBreach, "closed surface value is not in O");
  return *value;
}

std::string to_string(const TensorElement& t) {
  static const char* names[4] = {"1x1", "1xX", "Xx1", "XxX"};
  std::string s;
  for (std::size_t i = 0; i < t.k_coords.size(); ++i) {
    if (t.k_coords[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(t.k_coords[i]) + ")" + (t.factors == 2 ? names[i] : ("e" + std::to_string(i)).c_str());
  }
  return s.empty() ? "0" : s;
}

}  // namespace dedekind
