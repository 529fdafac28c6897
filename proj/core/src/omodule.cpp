#include "dedekind/omodule.hpp"

namespace dedekind {

namespace {

std::vector<Integer> kron_vec(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

std::optional<std::vector<Integer>> integral(const std::vector<Rational>& v) {
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (!is_integer(q)) return std::nullopt;
    out.push_back(q.get_num());
  }
  return out;
}

IntMatrix columns(const std::vector<std::vector<Integer>>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

}  // namespace

void check_module(const OModule& m) {
  if (m.action.rows() != m.rank_z || m.action.cols() != m.rank_z)
    throw Error(ErrorKind::InvariantBreach, "action of " + m.label + " has the wrong shape");
  IntMatrix sq = m.action * m.action;
  for (std::size_t i = 0; i < m.rank_z; ++i)
    for (std::size_t j = 0; j < m.rank_z; ++j)
      if (sq(i, j) != (i == j ? Integer(m.d) : Integer(0)))
        throw Error(ErrorKind::InvariantBreach, "action^2 != d on " + m.label);
}

OModule free_module(const RingContext& ctx, std::size_t o_rank, std::string label) {
  IntMatrix act(2 * o_rank, 2 * o_rank);
  RatMatrix frame = RatMatrix::identity(2 * o_rank);
  for (std::size_t i = 0; i < o_rank; ++i) {
    act(2 * i, 2 * i + 1) = ctx.d();
    act(2 * i + 1, 2 * i) = 1;
  }
  return {ctx.d(), 2 * o_rank, std::move(act), std::move(label), std::move(frame)};
}

bool is_equivariant(const OMorphism& f, const OModule& source, const OModule& target) {
  return f.matrix * source.action == target.action * f.matrix;
}

std::vector<Integer> TensorProduct::pair(const std::vector<Integer>& m, const std::vector<Integer>& n) const {
  return projection.apply(kron_vec(m, n));
}

TensorProduct tensor_over_O(const OModule& m, const OModule& n) {
  if (m.d != n.d) throw Error(ErrorKind::ContextMismatch, "tensor of modules over different rings");
  const std::size_t mn = m.rank_z * n.rank_z;
  const IntMatrix act_m = kronecker(m.action, IntMatrix::identity(n.rank_z));
  const IntMatrix rel = act_m - kronecker(IntMatrix::identity(m.rank_z), n.action);
  const SmithForm s = smith(rel, true);
  for (const auto& inv : s.invariants)
    if (inv != 1)
      throw Error(ErrorKind::TorsionInTensor, m.label + " (x) " + n.label + " has torsion Z/" + to_string(inv));
  const std::size_t r = s.rank();
  if (2 * (mn - r) != mn)
    throw Error(ErrorKind::InvariantBreach, m.label + " (x) " + n.label + " has unexpected rank");

  TensorProduct t;
  t.right_rank = n.rank_z;
  t.projection = s.u.submatrix(r, mn, 0, mn);
  t.lift = s.u_inv.submatrix(0, mn, r, mn);
  t.module.d = m.d;
  t.module.rank_z = mn - r;
  t.module.action = t.projection * act_m * t.lift;
  t.module.label = m.label + " (x) " + n.label;
  if (m.has_frame() && n.has_frame()) {
    const std::size_t km = m.k_dim(), kn = n.k_dim();
    RatMatrix zframe(2 * km * kn, mn);
    for (std::size_t i = 0; i < m.rank_z; ++i) {
      std::vector<FieldElement> a = unrealize(m.context(), m.frame.col(i));
      for (std::size_t j = 0; j < n.rank_z; ++j) {
        std::vector<FieldElement> b = unrealize(m.context(), n.frame.col(j));
        std::vector<FieldElement> ab;
        ab.reserve(km * kn);
        for (const auto& x : a)
          for (const auto& y : b) ab.push_back(x * y);
        zframe.set_col(i * n.rank_z + j, realize(ab));
      }
    }
    t.module.frame = zframe * to_rational(t.lift);
  }
  check_module(t.module);
  return t;
}

Submodule kernel(const OMorphism& f, const OModule& source) {
  const IntMatrix k = integer_kernel(f.matrix);
  const std::size_t r = k.cols();
  const RatMatrix kq = to_rational(k);
  const IntMatrix image = source.action * k;
  IntMatrix act(r, r);
  for (std::size_t c = 0; c < r; ++c) {
    std::vector<Rational> rhs;
    for (const auto& v : image.col(c)) rhs.emplace_back(v);
    auto x = solve_exact(kq, rhs);
    if (!x) throw Error(ErrorKind::InvariantBreach, "kernel is not stable under the O-action");
    auto xi = integral(*x);
    if (!xi) throw Error(ErrorKind::InvariantBreach, "kernel is not saturated");
    act.set_col(c, *xi);
  }
  Submodule out;
  out.inclusion = k;
  out.module = {source.d, r, std::move(act), "ker", {}};
  if (source.has_frame()) out.module.frame = source.frame * kq;
  check_module(out.module);
  return out;
}

SmithForm snf(const IntMatrix& a) { return smith(a, true); }

AbelianGroup abelian_group_of(const OModule& m) { return {m.rank_z, {}}; }

AbelianGroup cokernel_group(const IntMatrix& a) {
  SmithForm s = smith(a);
  AbelianGroup g;
  g.free_rank = a.rows() - s.rank();
  for (const auto& inv : s.invariants)
    if (inv != 1) g.torsion.push_back(inv);
  return g;
}

bool iso_as_abelian_groups(const AbelianGroup& a, const AbelianGroup& b) { return a == b; }

std::string to_string(const AbelianGroup& g) {
  std::string s = "Z^" + std::to_string(g.free_rank);
  for (const auto& t : g.torsion) s += " + Z/" + to_string(t);
  return s;
}

OModule module_of_algebra(const FrobeniusAlgebra& alg) {
  const RingContext& ctx = alg.context();
  const Ideal& mu = alg.data().mu;
  const RingElement w = RingElement::sqrt_d(ctx);
  auto [h1, h2] = two_generators(mu);

  OModule a;
  a.d = ctx.d();
  a.rank_z = 4;
  a.label = "A";
  a.action = IntMatrix(4, 4);
  a.action(1, 0) = 1;
  a.action(0, 1) = ctx.d();
  const RingElement gens[2] = {h1, h2};
  for (std::size_t k = 0; k < 2; ++k) {
    auto c = mu.coordinates(w * gens[k]);
    if (!c) throw Error(ErrorKind::InvariantBreach, "mu is not closed under w");
    a.action(2, 2 + k) = c->first;
    a.action(3, 2 + k) = c->second;
  }
  a.frame = RatMatrix(4, 4);
  a.frame(0, 0) = 1;
  a.frame(1, 1) = 1;
  for (std::size_t k = 0; k < 2; ++k) {
    a.frame(2, 2 + k) = gens[k].x();
    a.frame(3, 2 + k) = gens[k].y();
  }
  check_module(a);
  return a;
}

TensorPowers::TensorPowers(FrobeniusAlgebra alg) : alg_(std::move(alg)) {}

const TensorPowers::Entry& TensorPowers::entry(std::size_t n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  while (cache_.size() <= n) {
    const std::size_t k = cache_.size();
    Entry e;
    if (k == 0) {
      e.module = free_module(context(), 1, "O");
    } else if (k == 1) {
      e.module = module_of_algebra(alg_);
    } else {
      TensorProduct t = tensor_over_O(cache_[k - 1].module, cache_[1].module);
      e.module = std::move(t.module);
      e.module.label = "A^" + std::to_string(k);
      e.projection = std::move(t.projection);
    }
    auto inv = inverse(e.module.frame);
    if (!inv) throw Error(ErrorKind::InvariantBreach, "frame of " + e.module.label + " is singular");
    e.frame_inverse = std::move(*inv);
    cache_.push_back(std::move(e));
  }
  return cache_[n];
}

const OModule& TensorPowers::power(std::size_t n) const { return entry(n).module; }

std::vector<Integer> TensorPowers::pair(std::size_t n, const std::vector<Integer>& x,
                                        const std::vector<Integer>& y) const {
  if (n == 0) {
    // O (x) A = A: scale y by x0 + x1 w.
    const IntMatrix& act = power(1).action;
    std::vector<Integer> wy = act.apply(y);
    for (std::size_t i = 0; i < wy.size(); ++i) wy[i] = x[0] * y[i] + x[1] * wy[i];
    return wy;
  }
  return entry(n + 1).projection.apply(kron_vec(x, y));
}

IntMatrix TensorPowers::lattice_map(const KMatrix& f, std::size_t src, std::size_t dst, ErrorKind kind) const {
  const Entry& s = entry(src);
  const Entry& d = entry(dst);
  if (f.cols() != s.module.k_dim() || f.rows() != d.module.k_dim())
    throw std::invalid_argument("K-map shape does not match tensor powers");
  RatMatrix q = d.frame_inverse * f.realize() * s.module.frame;
  IntMatrix out(q.rows(), q.cols());
  for (std::size_t r = 0; r < q.rows(); ++r)
    for (std::size_t c = 0; c < q.cols(); ++c) {
      if (!is_integer(q(r, c)))
        throw Error(kind, "map A^" + std::to_string(src) + " -> A^" + std::to_string(dst) + " leaves the lattice");
      out(r, c) = q(r, c).get_num();
    }
  return out;
}

std::optional<std::vector<Integer>> TensorPowers::lattice_coordinates(const std::vector<FieldElement>& v,
                                                                      std::size_t n) const {
  const Entry& e = entry(n);
  return integral(e.frame_inverse.apply(realize(v)));
}

std::vector<FieldElement> TensorPowers::k_coordinates(const std::vector<Integer>& v, std::size_t n) const {
  const Entry& e = entry(n);
  std::vector<Rational> q;
  for (const auto& x : v) q.emplace_back(x);
  return unrealize(context(), e.module.frame.apply(q));
}

std::vector<Integer> TensorPowers::element_coordinates(const AlgebraElement& x) const {
  auto c = alg_.data().mu.coordinates(x.u1);
  if (!c) throw Error(ErrorKind::PreconditionViolation, "X-coefficient " + to_string(x.u1) + " is not in mu");
  return {x.u0.x(), x.u0.y(), c->first, c->second};
}

KernelReport kernel_m_analysis(const TensorPowers& spaces, long bound) {
  const FrobeniusAlgebra& alg = spaces.algebra();
  const FrobeniusData& p = alg.data();
  const RingContext& ctx = alg.context();
  const FieldElement zero(ctx, 0);
  auto [h1, h2] = two_generators(p.mu);

  KernelReport rep;
  rep.search_bound = bound;
  const IntMatrix m = spaces.lattice_map(multiplication_map(alg), 2, 1);
  rep.kernel = kernel(OMorphism{m}, spaces.power(2));
  const IntMatrix ker_lattice = column_lattice(rep.kernel.inclusion);

  auto coords = [&](const std::vector<FieldElement>& v, const char* what) {
    auto c = spaces.lattice_coordinates(v, 2);
    if (!c) throw Error(ErrorKind::InvariantBreach, std::string(what) + " is not in A (x) A");
    return *c;
  };
  auto x_u = [&](const RingElement& u) -> std::vector<FieldElement> { return {zero, -FieldElement(u), u, zero}; };
  const std::vector<FieldElement> xhat = {-FieldElement(p.b_bar), zero, -FieldElement(p.a_bar), p.z};
  auto left_x = [&](const RingElement& u) {
    return kron(left_multiplication(alg, zero, u), KMatrix::identity(ctx, 2));
  };
  auto scale = [](const FieldElement& k, std::vector<FieldElement> v) {
    for (auto& e : v) e = k * e;
    return v;
  };
  auto sum = [](std::vector<FieldElement> a, const std::vector<FieldElement>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };

  // Direct sum: span{X_h1, X_h2, Xhat, w Xhat} = ker(m).
  const std::vector<Integer> c1 = coords(x_u(h1), "X_h1"), c2 = coords(x_u(h2), "X_h2");
  rep.xhat = coords(xhat, "Xhat");
  const std::vector<Integer> wxhat = coords(scale(RingElement::sqrt_d(ctx), xhat), "w Xhat");
  rep.xu_basis = columns({c1, c2}, c1.size());
  const IntMatrix span = column_lattice(columns({c1, c2, rep.xhat, wxhat}, c1.size()));
  rep.direct_sum_verified = span.cols() == 4 && span == ker_lattice;
  if (!rep.direct_sum_verified)
    throw Error(ErrorKind::DirectSumFailure, "ker(m) differs from span{X_h1, X_h2} + O Xhat");

  // l_{uX}(Xhat) = -X_{b_bar u} + (u a_bar / z) Xhat and l_{uX}(X_v) = -(u v / z) Xhat.
  bool ok = true;
  for (const RingElement& u : {h1, h2}) {
    const KMatrix l = left_x(u);
    const FieldElement coeff = FieldElement(u * p.a_bar) / FieldElement(p.z);
    const std::vector<FieldElement> lhs = l.apply(xhat);
    const std::vector<FieldElement> rhs = sum(scale(FieldElement(ctx, -1), x_u(p.b_bar * u)), scale(coeff, xhat));
    ok = ok && lhs == rhs && coords(lhs, "l(Xhat)") == coords(rhs, "Xhat identity");
    for (const RingElement& v : {h1, h2}) {
      const std::vector<FieldElement> lv = l.apply(x_u(v));
      const std::vector<FieldElement> rv = scale(-(FieldElement(u * v) / FieldElement(p.z)), xhat);
      ok = ok && lv == rv && coords(lv, "l(X_v)") == coords(rv, "X_v identity");
    }
  }
  rep.action_identities_verified = ok;
  if (!ok) throw Error(ErrorKind::InvariantBreach, "action identities on ker(m) fail");

  // Generator search: -b_bar + u(a_bar + u)/z a unit makes Xhat - X_u generate ker(m) over A.
  const RingElement w = RingElement::sqrt_d(ctx);
  for (long s = 0; s <= bound && !rep.iso_to_A; ++s)
    for (long i = -s; i <= s && !rep.iso_to_A; ++i)
      for (long j = -s; j <= s && !rep.iso_to_A; ++j) {
        if (std::max(std::labs(i), std::labs(j)) != s) continue;
        const RingElement u = Integer(i) * h1 + Integer(j) * h2;
        auto q = try_divide(u * (p.a_bar + u), p.z);
        if (!q) throw Error(ErrorKind::InvariantBreach, "u(a_bar + u) is not in (z)");
        const RingElement value = *q - p.b_bar;
        if (!is_unit(value)) continue;
        std::vector<FieldElement> gen = xhat;
        const std::vector<FieldElement> xu = x_u(u);
        for (std::size_t k = 0; k < 4; ++k) gen[k] -= xu[k];
        std::vector<std::vector<Integer>> images;
        const std::pair<FieldElement, FieldElement> basis[4] = {
            {FieldElement(ctx, 1), zero}, {FieldElement(w), zero}, {zero, FieldElement(h1)}, {zero, FieldElement(h2)}};
        for (const auto& [e0, e1] : basis)
          images.push_back(coords(kron(left_multiplication(alg, e0, e1), KMatrix::identity(ctx, 2)).apply(gen),
                                  "A-multiple of the generator"));
        KernelGenerator g{u, value, column_lattice(columns(images, c1.size())) == ker_lattice};
        if (!rep.generator) rep.generator = g;
        if (g.lattice_verified) {
          rep.generator = g;
          rep.iso_to_A = true;
        }
      }
  return rep;
}

}  // namespace dedekind
