#include "dedekind/quadratic_ring.hpp"

#include <cctype>

namespace dedekind {

namespace {

bool squarefree(long v) {
  unsigned long n = v < 0 ? static_cast<unsigned long>(-(v + 1)) + 1 : static_cast<unsigned long>(v);
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

long same_d(long a, long b, bool a_zero, bool b_zero) {
  if (a == b) return a;
  if (a_zero && b != 0) return b;
  if (b_zero && a != 0) return a;
  throw Error(ErrorKind::ContextMismatch, "elements of Z[sqrt " + std::to_string(a) + "] and Z[sqrt " +
                                              std::to_string(b) + "] combined");
}

}  // namespace

RingContext::RingContext(long d) : d_(d) {
  if (d == 0 || d == 1) throw Error(ErrorKind::InvalidRing, "d must not be 0 or 1");
  long r = ((d % 4) + 4) % 4;
  if (r != 2 && r != 3) throw Error(ErrorKind::InvalidRing, "d must be 2 or 3 mod 4, got " + std::to_string(d));
  if (!squarefree(d)) throw Error(ErrorKind::InvalidRing, "d must be squarefree, got " + std::to_string(d));
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  return {a.x_ + b.x_, a.y_ + b.y_, same_d(a.d_, b.d_, a.is_zero(), b.is_zero())};
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  return {a.x_ - b.x_, a.y_ - b.y_, same_d(a.d_, b.d_, a.is_zero(), b.is_zero())};
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  long d = same_d(a.d_, b.d_, a.is_zero(), b.is_zero());
  return {a.x_ * b.x_ + Integer(d) * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_, d};
}

FieldElement::FieldElement(const RingContext& ctx, Rational p, Rational q)
    : p_(std::move(p)), q_(std::move(q)), d_(ctx.d()) {
  p_.canonicalize();
  q_.canonicalize();
}

FieldElement::FieldElement(Rational p, Rational q, long d) : p_(std::move(p)), q_(std::move(q)), d_(d) {
  p_.canonicalize();
  q_.canonicalize();
}

FieldElement::FieldElement(const RingElement& r) : p_(r.x()), q_(r.y()), d_(r.d()) {}

std::optional<RingElement> FieldElement::to_ring() const {
  if (!is_integral()) return std::nullopt;
  return RingElement(RingContext(d_), p_.get_num(), q_.get_num());
}

Integer FieldElement::denominator() const {
  Integer l;
  mpz_lcm(l.get_mpz_t(), p_.get_den_mpz_t(), q_.get_den_mpz_t());
  return l;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return {a.p_ + b.p_, a.q_ + b.q_, same_d(a.d_, b.d_, a.is_zero(), b.is_zero())};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return {a.p_ - b.p_, a.q_ - b.q_, same_d(a.d_, b.d_, a.is_zero(), b.is_zero())};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  long d = same_d(a.d_, b.d_, a.is_zero(), b.is_zero());
  return {a.p_ * b.p_ + Rational(d) * a.q_ * b.q_, a.p_ * b.q_ + a.q_ * b.p_, d};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * field_inverse(b); }

Integer norm(const RingElement& x) { return x.norm(); }

bool is_unit(const RingElement& x) {
  if (x.d() > 0) throw Error(ErrorKind::UnsupportedRing, "unit test needs an imaginary quadratic ring");
  return abs(x.norm()) == 1;
}

RingElement unit_inverse(const RingElement& u) {
  Integer n = u.norm();
  if (n == 1) return u.conj();
  if (n == -1) return -u.conj();
  throw Error(ErrorKind::NotAUnit, to_string(u) + " has norm " + to_string(n));
}

std::optional<RingElement> try_divide(const RingElement& x, const RingElement& y) {
  if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, "divide by zero");
  Integer n = y.norm();
  RingElement num = x * y.conj();
  if (!divides(n, num.x()) || !divides(n, num.y())) return std::nullopt;
  Integer qx, qy;
  mpz_divexact(qx.get_mpz_t(), num.x().get_mpz_t(), n.get_mpz_t());
  mpz_divexact(qy.get_mpz_t(), num.y().get_mpz_t(), n.get_mpz_t());
  return RingElement(RingContext(y.d()), qx, qy);
}

RingElement divide_exact(const RingElement& x, const RingElement& y) {
  auto q = try_divide(x, y);
  if (!q) throw Error(ErrorKind::NotDivisible, to_string(x) + " is not divisible by " + to_string(y));
  return *q;
}

FieldElement field_inverse(const FieldElement& k) {
  if (k.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Rational n = k.norm();
  return (1 / n) * k.conj();
}

namespace {

template <class T>
std::string render(const T& x, const T& y) {
  std::string xs = to_string(x), ys = to_string(y);
  if (y == 0) return xs;
  std::string w = (y == 1) ? "w" : (y == -1) ? "-w" : ys + "w";
  if (x == 0) return w;
  if (w[0] == '-') return xs + w;
  return xs + "+" + w;
}

}  // namespace

std::string to_string(const RingElement& v) { return render(v.x(), v.y()); }
std::string to_string(const FieldElement& v) { return render(v.p(), v.q()); }

RingElement parse_ring_element(const RingContext& ctx, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(ErrorKind::MalformedInput, "empty ring element");

  Integer x = 0, y = 0;
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      throw Error(ErrorKind::MalformedInput, "expected '+' or '-' in \"" + s + "\"");
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string digits = s.substr(start, pos - start);
    bool is_w = pos < s.size() && s[pos] == 'w';
    if (pos < s.size() && s[pos] == '*' && pos + 1 < s.size() && s[pos + 1] == 'w') {
      ++pos;
      is_w = true;
    }
    if (digits.empty() && !is_w) throw Error(ErrorKind::MalformedInput, "cannot parse ring element \"" + s + "\"");
    Integer coeff = digits.empty() ? Integer(1) : Integer(digits, 10);
    if (sign < 0) coeff = -coeff;
    if (is_w) {
      y += coeff;
      ++pos;
    } else {
      x += coeff;
    }
    any = true;
  }
  return RingElement(ctx, x, y);
}

}  // namespace dedekind
