#pragma once

#include "dedekind/error.hpp"
#include "dedekind/integer.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace dedekind {

// Fixes O = Z[sqrt d] with d squarefree, d != 0, 1 and d = 2, 3 (mod 4), so
// that {1, sqrt d} is an integral basis.
class RingContext {
 public:
  explicit RingContext(long d);

  long d() const noexcept { return d_; }
  bool imaginary() const noexcept { return d_ < 0; }

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  long d_;
};

// x + y sqrt d in O.
class RingElement {
 public:
  RingElement() = default;
  RingElement(const RingContext& ctx, Integer x, Integer y = 0) : x_(std::move(x)), y_(std::move(y)), d_(ctx.d()) {}

  static RingElement sqrt_d(const RingContext& ctx) { return {ctx, 0, 1}; }

  const Integer& x() const noexcept { return x_; }
  const Integer& y() const noexcept { return y_; }
  long d() const noexcept { return d_; }
  RingContext context() const { return RingContext(d_); }

  bool is_zero() const { return x_ == 0 && y_ == 0; }
  RingElement conj() const { return {x_, -y_, d_}; }
  Integer norm() const { return x_ * x_ - Integer(d_) * y_ * y_; }

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const Integer& k, const RingElement& a) { return {k * a.x_, k * a.y_, a.d_}; }
  RingElement operator-() const { return {-x_, -y_, d_}; }
  RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
  RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && (a.d_ == b.d_ || (a.is_zero() && b.is_zero()));
  }

 private:
  RingElement(Integer x, Integer y, long d) : x_(std::move(x)), y_(std::move(y)), d_(d) {}

  Integer x_ = 0;
  Integer y_ = 0;
  long d_ = 0;
};

// p + q sqrt d in K = Q(sqrt d).
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const RingContext& ctx, Rational p, Rational q = 0);
  FieldElement(const RingElement& r);  // NOLINT(google-explicit-constructor): O embeds in K

  const Rational& p() const noexcept { return p_; }
  const Rational& q() const noexcept { return q_; }
  long d() const noexcept { return d_; }
  RingContext context() const { return RingContext(d_); }

  bool is_zero() const { return p_ == 0 && q_ == 0; }
  bool is_integral() const { return is_integer(p_) && is_integer(q_); }
  std::optional<RingElement> to_ring() const;
  // Least positive integer m with m * this in O.
  Integer denominator() const;

  FieldElement conj() const { return {p_, -q_, d_}; }
  Rational norm() const { return p_ * p_ - Rational(d_) * q_ * q_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const Rational& k, const FieldElement& a) { return {k * a.p_, k * a.q_, a.d_}; }
  FieldElement operator-() const { return {-p_, -q_, d_}; }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && (a.d_ == b.d_ || (a.is_zero() && b.is_zero()));
  }

 private:
  FieldElement(Rational p, Rational q, long d);

  Rational p_ = 0;
  Rational q_ = 0;
  long d_ = 0;
};

Integer norm(const RingElement& x);

// Requires d < 0; throws UnsupportedRing otherwise.
bool is_unit(const RingElement& x);

// Inverse of a unit of O. Throws NotAUnit.
RingElement unit_inverse(const RingElement& u);

// Throws DivisionByZero or NotDivisible.
RingElement divide_exact(const RingElement& x, const RingElement& y);
std::optional<RingElement> try_divide(const RingElement& x, const RingElement& y);

// Throws DivisionByZero.
FieldElement field_inverse(const FieldElement& k);

// "a+bw" notation with w = sqrt d: "3", "-w", "1+w", "2-3w", "4w".
std::string to_string(const RingElement& x);
std::string to_string(const FieldElement& k);
RingElement parse_ring_element(const RingContext& ctx, std::string_view text);

}  // namespace dedekind
