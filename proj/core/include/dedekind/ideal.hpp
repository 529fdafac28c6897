#pragma once

#include "dedekind/matrix.hpp"
#include "dedekind/quadratic_ring.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace dedekind {

// Nonzero ideal of O as the Z-lattice with lower-triangular Hermite basis
// rows (a, 0), (b, c) in coordinates w.r.t. {1, sqrt d}; a, c > 0 and
// 0 <= b < a. The basis is canonical, so equality is entrywise.
class Ideal {
 public:
  Ideal(const RingContext& ctx, Integer a, Integer b, Integer c);

  static Ideal unit(const RingContext& ctx) { return {ctx, 1, 0, 1}; }

  const RingContext& context() const noexcept { return ctx_; }
  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& c() const noexcept { return c_; }

  IntMatrix basis() const { return {{a_, 0}, {b_, c_}}; }
  RingElement row(std::size_t i) const;

  bool contains(const RingElement& x) const;
  // Coordinates (i, j) with x = i*row(0) + j*row(1), if x is in the lattice.
  std::optional<std::pair<Integer, Integer>> coordinates(const RingElement& x) const;

  friend bool operator==(const Ideal& l, const Ideal& r) {
    return l.ctx_ == r.ctx_ && l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }

 private:
  RingContext ctx_;
  Integer a_, b_, c_;
};

struct ClassOrderTwoCertificate {
  Ideal mu;
  RingElement z;
  // Largest sqrt-d coefficient inspected while ruling out a generator of mu.
  Integer enumeration_bound;
};

// Throws ZeroIdeal when every generator vanishes.
Ideal ideal_from_generators(const RingContext& ctx, const std::vector<RingElement>& gens);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Integer ideal_norm(const Ideal& a);

// Membership of x in denominator^{-1} * a, i.e. denominator * x in a.
bool contains(const Ideal& a, const FieldElement& x, const RingElement& denominator);

// Throws UnsupportedRing for d > 0.
std::optional<RingElement> is_principal(const Ideal& a);

// Throws NotOrderTwo when mu is principal or mu^2 is not.
ClassOrderTwoCertificate certify_order_two(const Ideal& mu);

std::pair<RingElement, RingElement> two_generators(const Ideal& a);

struct PartitionOfZ {
  std::vector<RingElement> u;
  std::vector<RingElement> u_prime;
};

inline constexpr long kDefaultPartitionBound = 64;

// u_j, u'_j in mu with sum u_j u'_j = z, with u = two_generators(mu).
// Throws PreconditionViolation unless mu^2 = (z), SearchExhausted past `bound`.
PartitionOfZ solve_partition_of_z(const Ideal& mu, const RingElement& z, long bound = kDefaultPartitionBound);

std::string to_string(const Ideal& a);

}  // namespace dedekind
