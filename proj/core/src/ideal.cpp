#include "dedekind/ideal.hpp"

#include "dedekind/normal_form.hpp"

namespace dedekind {

Ideal::Ideal(const RingContext& ctx, Integer a, Integer b, Integer c)
    : ctx_(ctx), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ <= 0 || c_ <= 0 || b_ < 0 || b_ >= a_)
    throw Error(ErrorKind::InvariantBreach, "basis is not in Hermite form");
}

RingElement Ideal::row(std::size_t i) const {
  if (i == 0) return {ctx_, a_, 0};
  return {ctx_, b_, c_};
}

std::optional<std::pair<Integer, Integer>> Ideal::coordinates(const RingElement& x) const {
  if (!divides(c_, x.y())) return std::nullopt;
  Integer j = x.y() / c_;
  Integer rest = x.x() - j * b_;
  if (!divides(a_, rest)) return std::nullopt;
  return std::make_pair(Integer(rest / a_), j);
}

bool Ideal::contains(const RingElement& x) const { return coordinates(x).has_value(); }

Ideal ideal_from_generators(const RingContext& ctx, const std::vector<RingElement>& gens) {
  // Columns ordered (y, x) so that the upper-triangular row form reads as
  // the lower-triangular basis in (x, y).
  IntMatrix rows(2 * gens.size(), 2);
  const RingElement w = RingElement::sqrt_d(ctx);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    RingElement g = gens[i];
    RingElement gw = g * w;
    rows(2 * i, 0) = g.y();
    rows(2 * i, 1) = g.x();
    rows(2 * i + 1, 0) = gw.y();
    rows(2 * i + 1, 1) = gw.x();
  }
  HermiteForm h = hermite_rows(rows);
  if (h.rank == 0) throw Error(ErrorKind::ZeroIdeal, "all generators are zero");
  if (h.rank != 2) throw Error(ErrorKind::InvariantBreach, "ideal lattice is not of full rank");
  return Ideal(ctx, h.basis(1, 1), h.basis(0, 1), h.basis(0, 0));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!(a.context() == b.context())) throw Error(ErrorKind::ContextMismatch, "ideals over different rings");
  std::vector<RingElement> gens;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) gens.push_back(a.row(i) * b.row(j));
  return ideal_from_generators(a.context(), gens);
}

Integer ideal_norm(const Ideal& a) { return a.a() * a.c(); }

bool contains(const Ideal& a, const FieldElement& x, const RingElement& denominator) {
  if (denominator.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  auto scaled = (FieldElement(denominator) * x).to_ring();
  return scaled && a.contains(*scaled);
}

std::optional<RingElement> is_principal(const Ideal& a) {
  const RingContext& ctx = a.context();
  if (!ctx.imaginary()) throw Error(ErrorKind::UnsupportedRing, "principality search needs d < 0");
  const Integer n = ideal_norm(a);
  const Integer md = -Integer(ctx.d());
  const Integer ymax = isqrt(n / md);
  for (Integer y = 0; y <= ymax; ++y) {
    Integer rest = n - md * y * y;
    if (!is_perfect_square(rest)) continue;
    Integer x = isqrt(rest);
    for (const RingElement& cand : {RingElement(ctx, x, y), RingElement(ctx, x, -y)}) {
      if (!a.contains(cand)) continue;
      if (ideal_from_generators(ctx, {cand}) == a) return cand;
    }
  }
  return std::nullopt;
}

ClassOrderTwoCertificate certify_order_two(const Ideal& mu) {
  const RingContext& ctx = mu.context();
  if (!ctx.imaginary()) throw Error(ErrorKind::UnsupportedRing, "class-order certificate needs d < 0");
  if (auto g = is_principal(mu))
    throw Error(ErrorKind::NotOrderTwo, to_string(mu) + " is principal, generated by " + to_string(*g));
  Ideal sq = ideal_product(mu, mu);
  auto z = is_principal(sq);
  if (!z) throw Error(ErrorKind::NotOrderTwo, "square of " + to_string(mu) + " is not principal");
  return {mu, *z, isqrt(ideal_norm(mu) / Integer(-ctx.d()))};
}

std::pair<RingElement, RingElement> two_generators(const Ideal& a) { return {a.row(0), a.row(1)}; }

PartitionOfZ solve_partition_of_z(const Ideal& mu, const RingElement& z, long bound) {
  const RingContext& ctx = mu.context();
  if (z.is_zero() || !(ideal_product(mu, mu) == ideal_from_generators(ctx, {z})))
    throw Error(ErrorKind::PreconditionViolation, "mu^2 is not (" + to_string(z) + ")");
  auto [u1, u2] = two_generators(mu);
  // Shells of increasing max(|i|, |j|) over u1' = i*u1 + j*u2.
  for (long s = 0; s <= bound; ++s) {
    for (long i = -s; i <= s; ++i) {
      for (long j = -s; j <= s; ++j) {
        if (std::max(std::labs(i), std::labs(j)) != s) continue;
        RingElement v1 = Integer(i) * u1 + Integer(j) * u2;
        auto v2 = try_divide(z - u1 * v1, u2);
        if (v2 && mu.contains(*v2)) return {{u1, u2}, {v1, *v2}};
      }
    }
  }
  throw Error(ErrorKind::SearchExhausted, "no partition of " + to_string(z) + " within bound " + std::to_string(bound));
}

std::string to_string(const Ideal& a) {
  return "[[" + to_string(a.a()) + ",0],[" + to_string(a.b()) + "," + to_string(a.c()) + "]]";
}

}  // namespace dedekind
