#include "oracles.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

using namespace dedekind;

bool in_hnf_lattice(const Integer& a, const Integer& b, const Integer& c, const Integer& x, const Integer& y) {
  if (y % c != 0) return false;
  Integer j = y / c;
  Integer rest = x - j * b;
  return rest % a == 0;
}

std::optional<std::pair<Integer, Integer>> principal_generator(const Ideal& ideal) {
  const long d = ideal.context().d();
  if (d > 0) throw std::invalid_argument("oracle handles imaginary rings only");
  const Integer n = ideal.a() * ideal.c();
  for (Integer y = 0; Integer(-d) * y * y <= n; ++y) {
    Integer x2 = n + Integer(d) * y * y;
    if (mpz_perfect_square_p(x2.get_mpz_t()) == 0) continue;
    Integer x = sqrt(x2);
    for (const Integer& sx : {x, Integer(-x)})
      for (const Integer& sy : {y, Integer(-y)})
        if (in_hnf_lattice(ideal.a(), ideal.b(), ideal.c(), sx, sy)) return std::make_pair(sx, sy);
  }
  return std::nullopt;
}

bool square_is_principal(const Ideal& mu, const RingElement& z) {
  const RingContext ctx = mu.context();
  const RingElement r[2] = {RingElement(ctx, mu.a()), RingElement(ctx, mu.b(), mu.c())};
  const Integer nz = z.norm();
  if (nz == 0) return false;
  for (const auto& p : r)
    for (const auto& q : r) {
      RingElement m = p * q * z.conj();
      if (m.x() % nz != 0 || m.y() % nz != 0) return false;
    }
  Integer nmu = mu.a() * mu.c();
  return nmu * nmu == abs(nz);
}

RatMatrix tensor_power_lattice(const FrobeniusData& data, std::size_t n) {
  const RingContext ctx = data.context();
  const std::size_t words = std::size_t{1} << n;
  RatMatrix out(2 * words, 2 * words);
  for (std::size_t s = 0; s < words; ++s) {
    const int k = std::popcount(s);
    RingElement scale(ctx, 1);
    for (int i = 0; i < k / 2; ++i) scale = scale * data.z;
    RingElement g0 = scale, g1 = scale * RingElement::sqrt_d(ctx);
    if (k % 2) {
      g0 = scale * RingElement(ctx, data.mu.a());
      g1 = scale * RingElement(ctx, data.mu.b(), data.mu.c());
    }
    out(2 * s, 2 * s) = g0.x();
    out(2 * s + 1, 2 * s) = g0.y();
    out(2 * s, 2 * s + 1) = g1.x();
    out(2 * s + 1, 2 * s + 1) = g1.y();
  }
  return out;
}

bool same_lattice(const RatMatrix& a, const RatMatrix& b) {
  // Solve a X = b by Gauss-Jordan, then check X integral with det +-1.
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != n) return false;
  RatMatrix l = a, r = b;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && l(p, c) == 0) ++p;
    if (p == n) return false;
    l.swap_rows(c, p);
    r.swap_rows(c, p);
    Rational inv = 1 / l(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      l(c, j) *= inv;
      r(c, j) *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || l(i, c) == 0) continue;
      Rational f = l(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        l(i, j) -= f * l(c, j);
        r(i, j) -= f * r(c, j);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r(i, j).get_den() != 1) return false;
  // Determinant of the integral change of basis.
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && r(p, c) == 0) ++p;
    if (p == n) return false;
    if (p != c) {
      r.swap_rows(c, p);
      det = -det;
    }
    det *= r(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = r(i, c) / r(c, c);
      for (std::size_t j = c; j < n; ++j) r(i, j) -= f * r(c, j);
    }
  }
  return det == 1 || det == -1;
}

std::size_t face_count(const std::vector<std::array<long, 4>>& crossings) {
  const std::size_t k = crossings.size();
  if (k == 0) return 2;
  std::map<long, std::vector<std::size_t>> ends;  // dart = 4 * crossing + position
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t p = 0; p < 4; ++p) ends[crossings[c][p]].push_back(4 * c + p);
  std::vector<std::size_t> other(4 * k);
  for (const auto& [label, e] : ends) {
    if (e.size() != 2) throw std::invalid_argument("label does not occur twice");
    other[e[0]] = e[1];
    other[e[1]] = e[0];
  }
  std::vector<bool> seen(4 * k, false);
  std::size_t faces = 0;
  for (std::size_t s = 0; s < 4 * k; ++s) {
    if (seen[s]) continue;
    ++faces;
    for (std::size_t x = s; !seen[x];) {
      seen[x] = true;
      std::size_t y = other[x];
      x = 4 * (y / 4) + (y % 4 + 1) % 4;
    }
  }
  return faces;
}

std::size_t k_rank(std::vector<std::vector<FieldElement>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const FieldElement inv = field_inverse(m[r][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const FieldElement f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

struct Smoothing {
  std::size_t circles = 0;
  std::map<long, std::size_t> circle_of;
};

Smoothing smooth(const std::vector<std::array<long, 4>>& x, std::size_t v) {
  std::map<long, long> parent;
  for (const auto& c : x)
    for (long a : c) parent[a] = a;
  auto find = [&](long a) {
    while (parent[a] != a) a = parent[a];
    return a;
  };
  auto join = [&](long a, long b) { parent[find(a)] = find(b); };
  for (std::size_t c = 0; c < x.size(); ++c) {
    if ((v >> c) & 1) {
      join(x[c][0], x[c][3]);
      join(x[c][1], x[c][2]);
    } else {
      join(x[c][0], x[c][1]);
      join(x[c][2], x[c][3]);
    }
  }
  Smoothing s;
  std::map<long, std::size_t> id_of_root;
  // Circles numbered in order of first appearance while walking the crossings.
  for (const auto& c : x)
    for (long a : c) {
      auto [it, fresh] = id_of_root.emplace(find(a), s.circles);
      if (fresh) ++s.circles;
      s.circle_of[a] = it->second;
    }
  if (x.empty()) s.circles = 1;
  return s;
}

}  // namespace

std::vector<std::size_t> k_homology(const PDCode& pd, const FrobeniusData& data) {
  const RingContext ctx = data.context();
  const FieldElement zero(ctx, 0), one(ctx, 1);
  const FieldElement a = data.a(), b = data.b();
  const FieldElement e1 = data.eps_one, ex = data.eps_x();
  const FieldElement ex2 = a * ex + b * e1;

  // Delta(e_i) = sum_j e_i e_j (x) e_j^dual with the dual basis from the Gram matrix.
  const FieldElement det = e1 * ex2 - ex * ex;
  const FieldElement g[2][2] = {{ex2 / det, -ex / det}, {-ex / det, e1 / det}};
  // Products e_i e_j as (coefficient of 1, coefficient of X).
  auto prod = [&](int i, int j) -> std::array<FieldElement, 2> {
    if (i == 0 && j == 0) return {one, zero};
    if (i + j == 1) return {zero, one};
    return {b, a};
  };
  FieldElement delta[2][2][2];  // delta[input][p][q]
  for (int in = 0; in < 2; ++in)
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) delta[in][p][q] = zero;
  for (int in = 0; in < 2; ++in)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        // 1 -> sum g_ij e_i (x) e_j; multiply the left factor by e_in.
        auto left = prod(in, i);
        for (int p = 0; p < 2; ++p) delta[in][p][j] += left[p] * g[i][j];
      }

  const std::size_t k = pd.size();
  const std::size_t nv = std::size_t{1} << k;
  std::vector<Smoothing> sm(nv);
  for (std::size_t v = 0; v < nv; ++v) sm[v] = smooth(pd.crossings, v);

  std::vector<std::size_t> dim(k + 1, 0), offset(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t h = std::popcount(v);
    offset[v] = dim[h];
    dim[h] += std::size_t{1} << sm[v].circles;
  }
  std::vector<std::vector<std::vector<FieldElement>>> d(k + 1);
  for (std::size_t h = 0; h < k; ++h)
    d[h].assign(dim[h + 1], std::vector<FieldElement>(dim[h], zero));

  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t c = 0; c < k; ++c) {
      if ((v >> c) & 1) continue;
      const std::size_t w = v | (std::size_t{1} << c);
      const Smoothing& s = sm[v];
      const Smoothing& t = sm[w];
      const FieldElement sign = (std::popcount(v & ((std::size_t{1} << c) - 1)) % 2) ? -one : one;
      std::vector<std::size_t> s_to_t(s.circles), t_to_s(t.circles);
      for (const auto& [arc, sc] : s.circle_of) {
        s_to_t[sc] = t.circle_of.at(arc);
        t_to_s[t.circle_of.at(arc)] = sc;
      }
      auto& block = d[std::popcount(v)];
      for (std::size_t word = 0; word < (std::size_t{1} << s.circles); ++word) {
        const std::size_t col = offset[v] + word;
        if (t.circles + 1 == s.circles) {
          // Merge: the two source circles sharing a target circle multiply.
          std::size_t base = 0, target = 0;
          int bits[2], nb = 0;
          for (std::size_t sc = 0; sc < s.circles; ++sc) {
            std::size_t mates = 0;
            for (std::size_t o = 0; o < s.circles; ++o) mates += s_to_t[o] == s_to_t[sc];
            if (mates == 2) {
              bits[nb++] = (word >> sc) & 1;
              target = s_to_t[sc];
            } else if ((word >> sc) & 1) {
              base |= std::size_t{1} << s_to_t[sc];
            }
          }
          auto p = prod(bits[0], bits[1]);
          for (int o = 0; o < 2; ++o)
            if (!p[o].is_zero())
              block[offset[w] + (base | (o ? std::size_t{1} << target : 0))][col] += sign * p[o];
        } else {
          std::size_t t1 = t.circles, t2 = t.circles;
          for (std::size_t tc = 0; tc < t.circles; ++tc)
            for (std::size_t o = tc + 1; o < t.circles; ++o)
              if (t_to_s[tc] == t_to_s[o]) {
                t1 = tc;
                t2 = o;
              }
          std::size_t base = 0;
          for (std::size_t tc = 0; tc < t.circles; ++tc)
            if (tc != t1 && tc != t2 && ((word >> t_to_s[tc]) & 1)) base |= std::size_t{1} << tc;
          const int in = (word >> t_to_s[t1]) & 1;
          for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q)
              if (!delta[in][p][q].is_zero())
                block[offset[w] + (base | (p ? std::size_t{1} << t1 : 0) | (q ? std::size_t{1} << t2 : 0))][col] +=
                    sign * delta[in][p][q];
        }
      }
    }

  // d o d = 0 as a sanity check on the oracle itself.
  for (std::size_t h = 0; h + 1 < k; ++h)
    for (std::size_t i = 0; i < dim[h + 2]; ++i)
      for (std::size_t j = 0; j < dim[h]; ++j) {
        FieldElement acc = zero;
        for (std::size_t m = 0; m < dim[h + 1]; ++m) acc += d[h + 1][i][m] * d[h][m][j];
        if (!acc.is_zero()) throw std::logic_error("oracle complex has d o d != 0");
      }

  std::vector<std::size_t> rk(k + 1, 0), out(k + 1);
  for (std::size_t h = 0; h < k; ++h) rk[h] = k_rank(d[h]);
  for (std::size_t h = 0; h <= k; ++h) out[h] = dim[h] - rk[h] - (h ? rk[h - 1] : 0);
  return out;
}

}  // namespace oracle
