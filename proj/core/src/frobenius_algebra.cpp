#include "dedekind/frobenius_algebra.hpp"

#include "dedekind/normal_form.hpp"

#include <algorithm>

namespace dedekind {

namespace {

FieldElement over(const RingElement& num, const RingElement& den) { return FieldElement(num) / FieldElement(den); }

std::vector<RingElement> units_of(const RingContext& ctx) {
  std::vector<RingElement> u{RingElement(ctx, 1), RingElement(ctx, -1)};
  if (ctx.d() == -1) {
    u.push_back(RingElement(ctx, 0, 1));
    u.push_back(RingElement(ctx, 0, -1));
  }
  return u;
}

// x in delta * I, with delta = n/m for n in O and a positive integer m.
bool in_scaled_ideal(const FieldElement& x, const FieldElement& delta, const Ideal& ideal) {
  if (delta.is_zero()) return x.is_zero();
  const Integer m = delta.denominator();
  const RingElement n = *(Rational(m) * delta).to_ring();
  const Ideal scaled = ideal_product(ideal_from_generators(ideal.context(), {n}), ideal);
  auto mx = (Rational(m) * x).to_ring();
  return mx && scaled.contains(*mx);
}

// Rational coordinates of v in the Z-basis (row(0), row(1)) of mu.
std::pair<Rational, Rational> lattice_coords(const Ideal& mu, const FieldElement& v) {
  Rational j = v.q() / Rational(mu.c());
  Rational i = (v.p() - j * Rational(mu.b())) / Rational(mu.a());
  return {i, j};
}

void add(ValidationReport& r, std::string name, bool pass, std::string detail = {}) {
  r.cells.push_back({std::move(name), pass, std::move(detail)});
}

void reject(ValidationReport& r, ErrorKind kind, std::string detail) {
  if (r.rejection) return;
  r.rejection = kind;
  r.rejection_detail = std::move(detail);
}

}  // namespace

FieldElement FrobeniusData::a() const { return over(a_bar, z); }
FieldElement FrobeniusData::b() const { return over(b_bar, z); }
FieldElement FrobeniusData::eps_x() const { return over(eps_x_bar, z); }
FieldElement FrobeniusData::t_bar() const {
  return FieldElement(a_bar) * FieldElement(eps_x_bar) / FieldElement(z) + FieldElement(b_bar * eps_one);
}
FieldElement FrobeniusData::t() const { return t_bar() / FieldElement(z); }
FieldElement FrobeniusData::delta() const { return FieldElement(eps_one) * t() - eps_x() * eps_x(); }
RingElement FrobeniusData::discriminant() const { return a_bar * a_bar + Integer(4) * (z * b_bar); }

const ValidationCell* ValidationReport::find(std::string_view name) const {
  for (const auto& c : cells)
    if (c.name == name) return &c;
  return nullptr;
}

bool ValidationReport::passed(std::string_view name) const {
  const ValidationCell* c = find(name);
  return c && c->pass;
}

EpsilonTilde epsilon_tilde_matrix(const FrobeniusData& data) {
  const RingContext& ctx = data.context();
  const FieldElement w = RingElement::sqrt_d(ctx);
  const FieldElement eps1 = data.eps_one, epsx = data.eps_x(), t = data.t(), z = data.z;
  auto [h1, h2] = two_generators(data.mu);

  // (eps(e), eps(e X)) for each basis vector e.
  const std::pair<FieldElement, FieldElement> images[4] = {
      {eps1, epsx},
      {w * eps1, w * epsx},
      {FieldElement(h1) * epsx, FieldElement(h1) * t},
      {FieldElement(h2) * epsx, FieldElement(h2) * t},
  };
  EpsilonTilde out;
  out.matrix = RatMatrix(4, 4);
  out.integral = true;
  for (std::size_t col = 0; col < 4; ++col) {
    const auto& [alpha, beta] = images[col];
    auto [i, j] = lattice_coords(data.mu, z * beta);
    const Rational entries[4] = {alpha.p(), alpha.q(), i, j};
    for (std::size_t row = 0; row < 4; ++row) {
      out.matrix(row, col) = entries[row];
      if (!is_integer(entries[row])) out.integral = false;
    }
  }
  out.determinant = determinant(out.matrix);
  return out;
}

ValidationReport validate(const FrobeniusData& data) {
  ValidationReport r;
  const RingContext& ctx = data.context();
  const Ideal& mu = data.mu;
  const FieldElement one(RingElement(ctx, 1));
  const FieldElement z = data.z;

  for (const RingElement* e : {&data.z, &data.a_bar, &data.b_bar, &data.eps_one, &data.eps_x_bar})
    if (!e->is_zero() && e->d() != ctx.d())
      throw Error(ErrorKind::ContextMismatch, "parameter " + to_string(*e) + " is not in the ring of mu");

  // Preconditions on (mu, z).
  const bool z_ok = !data.z.is_zero() && ideal_product(mu, mu) == ideal_from_generators(ctx, {data.z});
  add(r, "mu_squared_is_z", z_ok, "mu^2 = (" + to_string(data.z) + ")");
  if (!z_ok) reject(r, ErrorKind::PreconditionViolation, "mu^2 != (z)");
  if (!z_ok) return r;

  std::optional<bool> mu_principal;
  if (ctx.imaginary()) mu_principal = is_principal(mu).has_value();

  // Integrality of the rescaled parameters.
  r.t_bar = data.t_bar();
  add(r, "a_bar_in_mu", mu.contains(data.a_bar), to_string(data.a_bar));
  add(r, "eps_x_bar_in_mu", mu.contains(data.eps_x_bar), to_string(data.eps_x_bar));
  add(r, "t_bar_in_O", r.t_bar.is_integral(), to_string(r.t_bar));
  for (const char* cell : {"a_bar_in_mu", "eps_x_bar_in_mu", "t_bar_in_O"})
    if (!r.passed(cell)) reject(r, ErrorKind::IntegralityViolation, std::string("cell ") + cell + " failed");
  const bool basic_ok = !r.rejection;

  r.delta = data.delta();
  add(r, "delta_nonzero", !r.delta.is_zero(), to_string(r.delta));
  r.epsilon_tilde = epsilon_tilde_matrix(data);
  if (r.delta.is_zero()) {
    reject(r, ErrorKind::DegenerateTrace, "eps(1) eps(X^2) - eps(X)^2 = 0");
    return r;
  }

  if (mu_principal == false)
    add(r, "eps_one_nonzero", !data.eps_one.is_zero(), "required when mu is not principal");

  // Route 1: closed-form duals with memberships.
  const FieldElement eps1 = data.eps_one, epsx = data.eps_x(), t = data.t(), epsxb = data.eps_x_bar;
  r.c = t / r.delta;
  r.d = -epsx / r.delta;
  r.d_prime = eps1 / (z * r.delta);
  r.c_prime = r.d / z;
  add(r, "dual_c_in_O", r.c.is_integral(), to_string(r.c));
  add(r, "dual_d_in_mu", r.d.to_ring() && mu.contains(*r.d.to_ring()), to_string(r.d));
  add(r, "dual_c_prime_in_z_inv_mu", contains(mu, r.c_prime, data.z), to_string(r.c_prime));
  add(r, "dual_d_prime_in_O", r.d_prime.is_integral(), to_string(r.d_prime));

  // The rescaled linear system, checked exactly on the closed forms.
  add(r, "dual_unit_pairing", r.c * eps1 + r.d * epsxb / z == one);
  add(r, "dual_unit_orthogonality", r.c * epsxb == -(r.d * r.t_bar));
  add(r, "dual_x_orthogonality", r.d_prime * epsxb == -(r.d * eps1));
  add(r, "dual_x_pairing", r.d * epsxb / z + r.d_prime * r.t_bar == one);
  add(r, "dual_d_is_z_c_prime", r.d == z * r.c_prime);
  for (const char* cell : {"dual_unit_pairing", "dual_unit_orthogonality", "dual_x_orthogonality", "dual_x_pairing",
                           "dual_d_is_z_c_prime"})
    if (!r.passed(cell)) reject(r, ErrorKind::InvariantBreach, std::string("closed-form duals violate ") + cell);

  const bool duals_ok = r.passed("dual_c_in_O") && r.passed("dual_d_in_mu") &&
                        r.passed("dual_c_prime_in_z_inv_mu") && r.passed("dual_d_prime_in_O");

  // Route 1': the same memberships phrased as ideal conditions on delta.
  add(r, "eps_x2_in_delta_O", in_scaled_ideal(t, r.delta, Ideal::unit(ctx)));
  add(r, "eps_x_in_delta_mu", in_scaled_ideal(epsx, r.delta, mu));
  add(r, "eps_one_in_delta_z_O", in_scaled_ideal(eps1, r.delta, ideal_from_generators(ctx, {data.z})));
  const bool ideal_ok =
      r.passed("eps_x2_in_delta_O") && r.passed("eps_x_in_delta_mu") && r.passed("eps_one_in_delta_z_O");

  // Route 2: unimodularity of the pairing matrix.
  const bool matrix_ok = r.epsilon_tilde.unimodular();
  add(r, "epsilon_tilde_integral", r.epsilon_tilde.integral);
  add(r, "epsilon_tilde_unimodular", matrix_ok, "det = " + to_string(r.epsilon_tilde.determinant));

  if (!basic_ok) return r;
  if (duals_ok != ideal_ok || duals_ok != matrix_ok) {
    reject(r, ErrorKind::InconsistentRoutes,
           std::string("duals ") + (duals_ok ? "pass" : "fail") + ", ideal conditions " + (ideal_ok ? "pass" : "fail") +
               ", pairing matrix " + (matrix_ok ? "pass" : "fail"));
    return r;
  }
  if (!duals_ok) {
    std::string failed;
    for (const char* cell : {"dual_c_in_O", "dual_d_in_mu", "dual_c_prime_in_z_inv_mu", "dual_d_prime_in_O"})
      if (!r.passed(cell)) failed += (failed.empty() ? "" : ", ") + std::string(cell);
    reject(r, ErrorKind::NotAnIsomorphism, "pairing is not perfect; failed " + failed);
    return r;
  }

  if (mu_principal == false) {
    const bool nonvanishing =
        !data.eps_one.is_zero() && !r.t_bar.is_zero() && !r.c.is_zero() && !r.d_prime.is_zero();
    add(r, "nonvanishing", nonvanishing, "eps(1), t_bar, c, d' nonzero");
    if (!nonvanishing) reject(r, ErrorKind::InvariantBreach, "accepted algebra with a vanishing parameter");
  }
  if (!r.rejection) r.accepted = true;
  return r;
}

AlgebraElement FrobeniusAlgebra::one() const { return {RingElement(context(), 1), RingElement(context(), 0)}; }

AlgebraElement FrobeniusAlgebra::element(const RingElement& u0, const RingElement& u1) const {
  if (!data_.mu.contains(u1))
    throw Error(ErrorKind::PreconditionViolation, "X-coefficient " + to_string(u1) + " is not in mu");
  return {u0, u1};
}

FrobeniusAlgebra build_algebra(const FrobeniusData& data, long partition_bound) {
  ValidationReport report = validate(data);
  if (!report.accepted) {
    ErrorKind kind = report.rejection.value_or(ErrorKind::InvariantBreach);
    std::string detail = report.rejection_detail;
    throw ValidationError(kind, detail, std::move(report));
  }
  DualSolution duals{*report.c.to_ring(), *report.d.to_ring(), report.c_prime, *report.d_prime.to_ring()};
  PartitionOfZ partition = solve_partition_of_z(data.mu, data.z, partition_bound);
  return FrobeniusAlgebra(data, std::move(duals), std::move(partition), std::move(report));
}

AlgebraElement multiply(const FrobeniusAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y) {
  const FrobeniusData& p = alg.data();
  auto k = try_divide(x.u1 * y.u1, p.z);
  if (!k) throw Error(ErrorKind::InvariantBreach, "product of X-coefficients is not in (z)");
  return {x.u0 * y.u0 + *k * p.b_bar, x.u0 * y.u1 + x.u1 * y.u0 + *k * p.a_bar};
}

RingElement trace(const FrobeniusAlgebra& alg, const AlgebraElement& x) {
  const FrobeniusData& p = alg.data();
  auto k = try_divide(x.u1 * p.eps_x_bar, p.z);
  if (!k) throw Error(ErrorKind::InvariantBreach, "trace of " + to_string(x) + " is not in O");
  return x.u0 * p.eps_one + *k;
}

FrobeniusAlgebra family_eps_x_zero(const Ideal& mu, const RingElement& z, const RingElement& a_bar,
                                   const RingElement& b_bar, const RingElement& eps_one) {
  const RingContext& ctx = mu.context();
  if (!is_unit(b_bar)) throw Error(ErrorKind::NotAUnit, "b_bar = " + to_string(b_bar));
  if (!is_unit(eps_one)) throw Error(ErrorKind::NotAUnit, "eps(1) = " + to_string(eps_one));
  if (!mu.contains(a_bar))
    throw Error(ErrorKind::IntegralityViolation, "cell a_bar_in_mu failed: " + to_string(a_bar) + " is not in mu");
  FrobeniusAlgebra alg = build_algebra({mu, z, a_bar, b_bar, eps_one, RingElement(ctx, 0)});
  const DualSolution& s = alg.duals();
  const RingElement e_inv = unit_inverse(eps_one);
  if (!(s.c == e_inv) || !s.d.is_zero() || !s.c_prime.is_zero() || !(s.d_prime == unit_inverse(b_bar) * e_inv))
    throw Error(ErrorKind::InvariantBreach, "trace-free duals differ from c = eps(1)^-1, d' = (b_bar eps(1))^-1");
  return alg;
}

FrobeniusAlgebra family_eps_x_one(const Ideal& mu, const RingElement& z, const RingElement& a_bar,
                                  const RingElement& eps_one, const RingElement& d_under) {
  if (!mu.contains(a_bar))
    throw Error(ErrorKind::PreconditionViolation, "a_bar = " + to_string(a_bar) + " is not in mu");
  if (!is_unit(eps_one)) throw Error(ErrorKind::NotAUnit, "eps(1) = " + to_string(eps_one));
  if (!is_unit(d_under)) throw Error(ErrorKind::NotAUnit, "d_under = " + to_string(d_under));
  const RingElement e_inv = unit_inverse(eps_one);
  const RingElement b_bar = e_inv * e_inv * (z - a_bar * eps_one - unit_inverse(d_under));
  FrobeniusAlgebra alg = build_algebra({mu, z, a_bar, b_bar, eps_one, z});

  const RingElement t_bar = *alg.report().t_bar.to_ring();
  if (!(b_bar * eps_one * eps_one + a_bar * eps_one - z == -unit_inverse(d_under)))
    throw Error(ErrorKind::InvariantBreach, "b_bar eps(1)^2 + a_bar eps(1) - z != -d_under^-1");
  if (!((z - t_bar * eps_one) * d_under == RingElement(mu.context(), 1)))
    throw Error(ErrorKind::InvariantBreach, "(z - t_bar eps(1)) d_under != 1");
  const DualSolution& s = alg.duals();
  if (!(s.c == -(d_under * t_bar)) || !(s.d == z * d_under) || !(s.d_prime == -(d_under * eps_one)))
    throw Error(ErrorKind::InvariantBreach, "unit-trace duals differ from c = -d t_bar, d = z d, d' = -d eps(1)");
  return alg;
}

FrobeniusAlgebra example_zsqrtm5(int s, int eps_one) {
  if ((s != 1 && s != -1) || (eps_one != 1 && eps_one != -1))
    throw Error(ErrorKind::PreconditionViolation, "s and eps(1) must be +1 or -1");
  const RingContext ctx(-5);
  const RingElement w = RingElement::sqrt_d(ctx), one(ctx, 1), e(ctx, eps_one), sv(ctx, s);
  const Ideal mu = ideal_from_generators(ctx, {RingElement(ctx, 2), one + w});
  const RingElement b_bar = e * ((w - sv - RingElement(ctx, 2)) * e - RingElement(ctx, 3));
  FrobeniusAlgebra alg = build_algebra({mu, RingElement(ctx, 2), one - w, b_bar, e, one + w});
  if (!(alg.duals().d == sv * (one + w)))
    throw Error(ErrorKind::InvariantBreach, "dual d differs from s(1+w)");
  return alg;
}

FrobeniusData twist_data(const FrobeniusData& p, const TwistSpec& spec) {
  FrobeniusData q = p;
  if (const auto* t = std::get_if<TwistScale>(&spec)) {
    if (!is_unit(t->lambda0)) throw Error(ErrorKind::NotAUnit, "lambda0 = " + to_string(t->lambda0));
    q.a_bar = t->lambda0 * p.a_bar;
    q.b_bar = t->lambda0 * t->lambda0 * p.b_bar;
    q.eps_x_bar = t->lambda0 * p.eps_x_bar;
  } else if (const auto* t = std::get_if<TwistShift>(&spec)) {
    const RingElement& l = t->lambda1_bar;
    if (!p.mu.contains(l))
      throw Error(ErrorKind::PreconditionViolation, "lambda1_bar = " + to_string(l) + " is not in mu");
    // X' = X + l/z: a' = a + 2l/z, b' = b - a l/z - (l/z)^2, eps(X') = eps(X) + (l/z) eps(1).
    auto al = try_divide(p.a_bar * l, p.z);
    auto ll = try_divide(l * l, p.z);
    if (!al || !ll) throw Error(ErrorKind::IntegralityViolation, "shifted b_bar leaves O");
    q.a_bar = p.a_bar + Integer(2) * l;
    q.b_bar = p.b_bar - *al - *ll;
    q.eps_x_bar = p.eps_x_bar + l * p.eps_one;
  } else {
    const RingElement& lambda = std::get<TwistTrace>(spec).lambda;
    if (!is_unit(lambda)) throw Error(ErrorKind::NotAUnit, "lambda = " + to_string(lambda));
    q.eps_one = lambda * p.eps_one;
    q.eps_x_bar = lambda * p.eps_x_bar;
  }
  return q;
}

FrobeniusAlgebra twist(const FrobeniusAlgebra& alg, const TwistSpec& spec) {
  FrobeniusAlgebra out = build_algebra(twist_data(alg.data(), spec));
  if (std::holds_alternative<TwistShift>(spec))
    out.report_.notes.push_back(
        "shift twist applies b' = b - a*l - l^2 and eps(X') = eps(X) + l*eps(1) with l = lambda1_bar/z");
  return out;
}

std::vector<FrobeniusData> search_general_family(const Ideal& mu, const RingElement& z,
                                                 const GeneralSearchConfig& config) {
  const RingContext& ctx = mu.context();
  auto [h1, h2] = two_generators(mu);
  const long B = config.coefficient_bound;
  std::vector<RingElement> in_mu, in_o;
  for (long i = -B; i <= B; ++i)
    for (long j = -B; j <= B; ++j) {
      in_mu.push_back(Integer(i) * h1 + Integer(j) * h2);
      if (i != 0 || j != 0) in_o.push_back(RingElement(ctx, i, j));
    }
  std::vector<FrobeniusData> hits;
  for (const RingElement& s : units_of(ctx))
    for (const RingElement& e1 : in_o)
      for (const RingElement& ab : in_mu)
        for (const RingElement& exb : in_mu) {
          // s (eps_x_bar^2/z - t_bar eps(1)) = 1, solved for b_bar.
          auto sq = try_divide(exb * exb, z);
          auto ae = try_divide(ab * exb, z);
          if (!sq || !ae) continue;
          auto bb = try_divide(s * *sq - RingElement(ctx, 1) - s * *ae * e1, s * e1 * e1);
          if (!bb) continue;
          FrobeniusData cand{mu, z, ab, *bb, e1, exb};
          if (!validate(cand).accepted) continue;
          hits.push_back(cand);
          if (hits.size() >= config.limit) return hits;
        }
  return hits;
}

std::string to_string(const AlgebraElement& x) { return "(" + to_string(x.u0) + ")+(" + to_string(x.u1) + ")X"; }

}  // namespace dedekind
