#include "dedekind/normal_form.hpp"

#include "dedekind/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace dedekind {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

IntMatrix to_integer(const RatMatrix& m, const char* what) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!is_integer(m(r, c)))
        throw Error(ErrorKind::InvariantBreach, std::string(what) + ": non-integral entry " + to_string(m(r, c)));
      out(r, c) = m(r, c).get_num();
    }
  return out;
}

namespace {

// Quotient leaving the remainder of least absolute value.
Integer nearest_quotient(const Integer& a, const Integer& p) {
  Integer q = floor_div(a, p);
  Integer r = a - q * p;
  if (2 * abs(r) > abs(p)) q += 1;
  return q;
}

// Fraction-free elimination; returns the rank and the last pivot, which is
// a nonzero maximal minor (up to sign).
std::pair<std::size_t, Integer> bareiss(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows(), n = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Integer v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return {r, abs(prev)};
}

// Invariant factors only. Works modulo M = 2|D| for a nonzero maximal minor
// D: every invariant divides D, so each is recovered as gcd(diagonal, M) and
// entries stay below M.
SmithForm smith_modular(const IntMatrix& input) {
  SmithForm out;
  const auto [rank, minor] = bareiss(input);
  if (rank == 0) return out;
  const Integer mod = 2 * minor;
  auto reduce = [&](Integer& x) {
    x -= nearest_quotient(x, mod) * mod;
  };
  IntMatrix a = input;
  const std::size_t m = a.rows(), n = a.cols();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) reduce(a(i, j));
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < m && t < n) {
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a(i, j) != 0 && (pr == m || mpz_cmpabs(a(i, j).get_mpz_t(), a(pr, pc).get_mpz_t()) < 0)) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    a.swap_rows(t, pr);
    a.swap_cols(t, pc);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = nearest_quotient(a(i, t), a(t, t));
        for (std::size_t j = t; j < n; ++j) {
          if (a(t, j) == 0) continue;
          a(i, j) -= q * a(t, j);
          reduce(a(i, j));
        }
        if (a(i, t) != 0) {
          a.swap_rows(t, i);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = nearest_quotient(a(t, j), a(t, t));
        for (std::size_t i = t; i < m; ++i) {
          if (a(i, t) == 0) continue;
          a(i, j) -= q * a(i, t);
          reduce(a(i, j));
        }
        if (a(t, j) != 0) {
          a.swap_cols(t, j);
          changed = true;
        }
      }
    }
    diag.push_back(gcd(a(t, t), mod));
    ++t;
  }
  // Diagonal to divisibility chain over Z/M: (x, y) -> (gcd, lcm), then drop
  // the entries equal to M.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const Integer g = gcd(diag[i], diag[j]);
      diag[j] = diag[i] / g * diag[j];
      diag[i] = g;
    }
  std::vector<Integer> inv;
  for (const Integer& g : diag)
    if (g != mod) inv.push_back(g);
  if (inv.size() != rank) throw Error(ErrorKind::InvariantBreach, "modular Smith form lost rank");
  out.invariants = std::move(inv);
  return out;
}

}  // namespace

HermiteForm hermite_rows(const IntMatrix& input, bool with_transform) {
  IntMatrix a = input;
  const std::size_t n = a.rows(), m = a.cols();
  IntMatrix u = with_transform ? IntMatrix::identity(n) : IntMatrix{};
  auto swap = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (with_transform) u.swap_rows(i, j);
  };
  auto addmul = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    if (with_transform) u.add_row_multiple(dst, src, f);
  };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    while (true) {
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i)
        if (a(i, c) != 0 && (best == n || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best == n) break;
      swap(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (a(i, c) == 0) continue;
        addmul(i, r, -nearest_quotient(a(i, c), a(r, c)));
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < n && a(r, c) != 0) {
      if (a(r, c) < 0) {
        a.negate_row(r);
        if (with_transform) u.negate_row(r);
      }
      for (std::size_t i = 0; i < r; ++i) {
        Integer q = floor_div(a(i, c), a(r, c));
        if (q != 0) addmul(i, r, -q);
      }
      pivots.push_back(c);
      ++r;
    }
  }
  HermiteForm out;
  out.rank = r;
  out.basis = a.submatrix(0, r, 0, m);
  out.pivots = std::move(pivots);
  out.transform = std::move(u);
  return out;
}

SmithForm smith(const IntMatrix& input, bool with_transforms) {
  if (!with_transforms) return smith_modular(input);
  const std::size_t m = input.rows(), n = input.cols();
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(m), v = IntMatrix::identity(n);

  // Alternate reduced row and column Hermite forms until every row and
  // column holds at most one nonzero entry.
  auto scattered = [&] {
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t nz = 0;
      for (std::size_t j = 0; j < n; ++j) nz += a(i, j) != 0;
      if (nz > 1) return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t nz = 0;
      for (std::size_t i = 0; i < m; ++i) nz += a(i, j) != 0;
      if (nz > 1) return false;
    }
    return true;
  };
  while (!scattered()) {
    const HermiteForm rows = hermite_rows(a, true);
    a = rows.transform * a;
    u = rows.transform * u;
    if (scattered()) break;
    const IntMatrix t = hermite_rows(a.transpose(), true).transform.transpose();
    a = a * t;
    v = v * t;
  }

  // Move the nonzero entries onto the diagonal.
  std::vector<std::size_t> row_order, col_order;
  std::vector<bool> row_used(m, false), col_used(n, false);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != 0) {
        row_order.push_back(i);
        col_order.push_back(j);
        row_used[i] = true;
        col_used[j] = true;
      }
  const std::size_t rank = row_order.size();
  for (std::size_t i = 0; i < m; ++i)
    if (!row_used[i]) row_order.push_back(i);
  for (std::size_t j = 0; j < n; ++j)
    if (!col_used[j]) col_order.push_back(j);
  std::vector<Integer> diag(rank);
  IntMatrix pu(m, m), pv(n, n);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t c = 0; c < m; ++c) pu(k, c) = u(row_order[k], c);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r) pv(r, k) = v(r, col_order[k]);
  u = std::move(pu);
  v = std::move(pv);
  for (std::size_t k = 0; k < rank; ++k) {
    diag[k] = a(row_order[k], col_order[k]);
    if (diag[k] < 0) {
      diag[k] = -diag[k];
      u.negate_row(k);
    }
  }

  // Divisibility chain: diag(x, y) -> diag(g, xy/g) by Bezout moves.
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) {
      const Integer x = diag[i], y = diag[j];
      if (divides(x, y)) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      u.add_row_multiple(i, j, Integer(1));
      for (std::size_t r = 0; r < n; ++r) {
        const Integer ci = v(r, i), cj = v(r, j);
        v(r, i) = s * ci + t * cj;
        v(r, j) = -(y / g) * ci + (x / g) * cj;
      }
      u.add_row_multiple(j, i, -(t * y / g));
      diag[i] = g;
      diag[j] = x / g * y;
    }

  SmithForm out;
  out.invariants = std::move(diag);
  out.u_inv = to_integer(*inverse(to_rational(u)), "smith: U^-1");
  out.v_inv = to_integer(*inverse(to_rational(v)), "smith: V^-1");
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  // transform * a^T = [H; 0]; the trailing rows of transform span ker(a).
  HermiteForm h = hermite_rows(a.transpose(), true);
  const std::size_t n = a.cols();
  IntMatrix k(n, n - h.rank);
  for (std::size_t j = h.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j - h.rank) = h.transform(j, i);
  return column_lattice(k);
}

IntMatrix column_lattice(const IntMatrix& columns) {
  HermiteForm h = hermite_rows(columns.transpose());
  return h.basis.transpose();
}

std::size_t rational_rank(const IntMatrix& input) { return bareiss(input).first; }

namespace {

// Gauss-Jordan on [a | b]; returns the pivot count of a.
std::size_t reduce(RatMatrix& a, RatMatrix& b) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) continue;
    a.swap_rows(r, p);
    b.swap_rows(r, p);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < n; ++j) a(r, j) *= inv;
    for (std::size_t j = 0; j < b.cols(); ++j) b(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = -a(i, c);
      a.add_row_multiple(i, r, f);
      b.add_row_multiple(i, r, f);
    }
    ++r;
  }
  return r;
}

}  // namespace

Rational determinant(const RatMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix a = input;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      a.add_row_multiple(i, c, -a(i, c) / a(c, c));
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& input) {
  if (input.rows() != input.cols()) return std::nullopt;
  RatMatrix a = input;
  RatMatrix b = RatMatrix::identity(a.rows());
  if (reduce(a, b) != a.rows()) return std::nullopt;
  return b;
}

std::optional<std::vector<Rational>> solve_exact(const RatMatrix& input, const std::vector<Rational>& rhs) {
  RatMatrix a = input;
  RatMatrix b(rhs.size(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
  const std::size_t r = reduce(a, b);
  if (r != a.cols()) throw std::invalid_argument("solve_exact requires full column rank");
  for (std::size_t i = r; i < a.rows(); ++i)
    if (b(i, 0) != 0) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < r; ++i) x[i] = b(i, 0);
  return x;
}

}  // namespace dedekind
