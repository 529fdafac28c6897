#include "dedekind/link_homology.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace dedekind {

namespace {

// Bit of circle f in a word over n circles (first circle most significant).
std::size_t bit(std::size_t f, std::size_t n) { return std::size_t{1} << (n - 1 - f); }
std::size_t get(std::size_t word, std::size_t f, std::size_t n) { return (word >> (n - 1 - f)) & 1; }

KMatrix edge_map(const FrobeniusAlgebra& alg, const ResolutionCube& cube, const ResolutionEdge& e) {
  const RingContext& ctx = alg.context();
  const std::size_t ns = cube.vertices[e.source].circles.size();
  const std::size_t nt = cube.vertices[e.target].circles.size();
  KMatrix f(ctx, std::size_t{1} << nt, std::size_t{1} << ns);

  if (e.merge) {
    const KMatrix m = multiplication_map(alg);
    std::size_t s1 = ns, s2 = ns, t = 0;
    for (std::size_t a = 0; a < ns && s2 == ns; ++a)
      for (std::size_t b = a + 1; b < ns; ++b)
        if (e.circle_map[a] == e.circle_map[b]) {
          s1 = a;
          s2 = b;
          t = e.circle_map[a];
          break;
        }
    if (s2 == ns) throw Error(ErrorKind::InvariantBreach, "merge edge without merging circles");
    for (std::size_t word = 0; word < (std::size_t{1} << ns); ++word) {
      std::size_t base = 0;
      for (std::size_t a = 0; a < ns; ++a)
        if (a != s1 && a != s2 && get(word, a, ns)) base |= bit(e.circle_map[a], nt);
      const std::size_t pair = 2 * get(word, s1, ns) + get(word, s2, ns);
      for (std::size_t out = 0; out < 2; ++out)
        if (!m(out, pair).is_zero()) f(base | (out ? bit(t, nt) : 0), word) += m(out, pair);
    }
  } else {
    const KMatrix delta = comultiplication_map(alg);
    std::size_t t1 = nt, t2 = nt, s = 0;
    for (std::size_t a = 0; a < nt && t2 == nt; ++a)
      for (std::size_t b = a + 1; b < nt; ++b)
        if (e.circle_map[a] == e.circle_map[b]) {
          t1 = a;
          t2 = b;
          s = e.circle_map[a];
          break;
        }
    if (t2 == nt) throw Error(ErrorKind::InvariantBreach, "split edge without splitting circles");
    for (std::size_t word = 0; word < (std::size_t{1} << ns); ++word) {
      std::size_t base = 0;
      for (std::size_t b = 0; b < nt; ++b)
        if (b != t1 && b != t2 && get(word, e.circle_map[b], ns)) base |= bit(b, nt);
      const std::size_t in = get(word, s, ns);
      for (std::size_t pq = 0; pq < 4; ++pq) {
        if (delta(pq, in).is_zero()) continue;
        std::size_t out = base | ((pq >> 1) ? bit(t1, nt) : 0) | ((pq & 1) ? bit(t2, nt) : 0);
        f(out, word) += delta(pq, in);
      }
    }
  }
  return f;
}

std::size_t q_rank(const IntMatrix& m) { return m.empty() ? 0 : rational_rank(m); }

}  // namespace

std::size_t Complex::total_rank() const {
  std::size_t t = 0;
  for (auto r : ranks) t += r;
  return t;
}

Complex build_complex(const PDCode& pd, const TensorPowers& spaces) {
  const ResolutionCube cube = resolve(pd);
  const std::size_t k = cube.crossings;
  const int n_minus = static_cast<int>(pd.n_minus);

  Complex c;
  c.min_degree = -n_minus;
  std::vector<std::vector<std::size_t>> by_height(k + 1);
  std::vector<std::size_t> offset(cube.vertices.size());
  c.ranks.assign(k + 1, 0);
  for (std::size_t v = 0; v < cube.vertices.size(); ++v) {
    const std::size_t h = static_cast<std::size_t>(std::popcount(v));
    offset[v] = c.ranks[h];
    c.ranks[h] += spaces.power(cube.vertices[v].circles.size()).rank_z;
    by_height[h].push_back(v);
  }
  for (std::size_t h = 0; h <= k; ++h) {
    IntMatrix act(c.ranks[h], c.ranks[h]);
    for (std::size_t v : by_height[h]) {
      const IntMatrix& a = spaces.power(cube.vertices[v].circles.size()).action;
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) act(offset[v] + i, offset[v] + j) = a(i, j);
    }
    c.actions.push_back(std::move(act));
    c.differentials.emplace_back(h < k ? c.ranks[h + 1] : 0, c.ranks[h]);
  }
  for (const ResolutionEdge& e : cube.edges) {
    const std::size_t h = static_cast<std::size_t>(std::popcount(e.source));
    const IntMatrix block = spaces.lattice_map(edge_map(spaces.algebra(), cube, e),
                                               cube.vertices[e.source].circles.size(),
                                               cube.vertices[e.target].circles.size());
    IntMatrix& d = c.differentials[h];
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j)
        if (block(i, j) != 0) d(offset[e.target] + i, offset[e.source] + j) += e.sign * block(i, j);
  }
  check_d_squared(c);
  return c;
}

void check_d_squared(const Complex& c) {
  for (std::size_t j = 0; j + 1 < c.differentials.size(); ++j)
    if (!(c.differentials[j + 1] * c.differentials[j]).is_zero())
      throw Error(ErrorKind::DifferentialSquareNonzero,
                  "d o d != 0 at degree " + std::to_string(c.min_degree + static_cast<int>(j)));
}

const DegreeHomology* HomologyReport::at(int degree) const {
  for (const auto& d : degrees)
    if (d.degree == degree) return &d;
  return nullptr;
}

std::vector<std::size_t> homology_over_K(const Complex& c) {
  const std::size_t n = c.ranks.size();
  std::vector<std::size_t> rk(n);
  for (std::size_t j = 0; j < n; ++j) rk[j] = q_rank(c.differentials[j]);
  // Simplified complexes need not have even chain ranks, but homology over Q
  // is a K-vector space.
  std::vector<std::size_t> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t q_dim = c.ranks[j] - rk[j] - (j ? rk[j - 1] : 0);
    if (q_dim % 2) throw Error(ErrorKind::InvariantBreach, "homology has odd dimension over Q");
    out[j] = q_dim / 2;
  }
  return out;
}

HomologyReport homology_integral(const Complex& c) {
  const std::size_t n = c.ranks.size();
  std::vector<SmithForm> forms;
  for (const auto& d : c.differentials) forms.push_back(smith(d));
  const std::vector<std::size_t> kd = homology_over_K(c);
  HomologyReport rep;
  for (std::size_t j = 0; j < n; ++j) {
    DegreeHomology h;
    h.degree = c.min_degree + static_cast<int>(j);
    const std::size_t in = j ? forms[j - 1].rank() : 0;
    h.group.free_rank = c.ranks[j] - forms[j].rank() - in;
    if (j)
      for (const auto& inv : forms[j - 1].invariants)
        if (inv != 1) h.group.torsion.push_back(inv);
    h.k_dim = kd[j];
    if (h.group.free_rank != 2 * h.k_dim) rep.k_dims_match_z_ranks = false;
    rep.total_k_dim += h.k_dim;
    rep.degrees.push_back(std::move(h));
  }
  return rep;
}

Complex simplify(const Complex& input) {
  Complex c = input;
  c.actions.clear();
  const std::size_t n = c.ranks.size();
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t j = 0; j < n && !progress; ++j) {
      IntMatrix& d = c.differentials[j];
      for (std::size_t r = 0; r < d.rows() && !progress; ++r)
        for (std::size_t col = 0; col < d.cols() && !progress; ++col) {
          if (abs(d(r, col)) != 1) continue;
          const Integer e = d(r, col);  // e^{-1} = e
          IntMatrix nd(d.rows() - 1, d.cols() - 1);
          for (std::size_t a = 0, na = 0; a < d.rows(); ++a) {
            if (a == r) continue;
            for (std::size_t b = 0, nb = 0; b < d.cols(); ++b) {
              if (b == col) continue;
              nd(na, nb) = d(a, b) - d(a, col) * e * d(r, b);
              ++nb;
            }
            ++na;
          }
          d = std::move(nd);
          // Drop the cancelled generator of C^j from the incoming map and of C^{j+1} from the outgoing one.
          if (j > 0) {
            IntMatrix& prev = c.differentials[j - 1];
            IntMatrix np(prev.rows() - 1, prev.cols());
            for (std::size_t a = 0, na = 0; a < prev.rows(); ++a) {
              if (a == col) continue;
              for (std::size_t b = 0; b < prev.cols(); ++b) np(na, b) = prev(a, b);
              ++na;
            }
            prev = std::move(np);
          }
          IntMatrix& next = c.differentials[j + 1 < n ? j + 1 : j];
          if (j + 1 < n) {
            IntMatrix nn(next.rows(), next.cols() - 1);
            for (std::size_t a = 0; a < next.rows(); ++a)
              for (std::size_t b = 0, nb = 0; b < next.cols(); ++b) {
                if (b == r) continue;
                nn(a, nb++) = next(a, b);
              }
            next = std::move(nn);
          }
          --c.ranks[j];
          --c.ranks[j + 1];
          progress = true;
        }
    }
  }
  check_d_squared(c);
  return c;
}

ComparisonReport compare_homology(const HomologyReport& a, const HomologyReport& b) {
  std::map<int, std::pair<const DegreeHomology*, const DegreeHomology*>> all;
  for (const auto& d : a.degrees) all[d.degree].first = &d;
  for (const auto& d : b.degrees) all[d.degree].second = &d;
  ComparisonReport rep;
  for (const auto& [deg, p] : all) {
    DegreeComparison cmp;
    cmp.degree = deg;
    if (p.first) {
      cmp.first = p.first->group;
      cmp.first_k = p.first->k_dim;
    }
    if (p.second) {
      cmp.second = p.second->group;
      cmp.second_k = p.second->k_dim;
    }
    cmp.z_equal = iso_as_abelian_groups(cmp.first, cmp.second);
    cmp.k_equal = cmp.first_k == cmp.second_k;
    rep.z_equal = rep.z_equal && cmp.z_equal;
    rep.k_equal = rep.k_equal && cmp.k_equal;
    rep.degrees.push_back(std::move(cmp));
  }
  return rep;
}

ComparisonReport reidemeister_compare(const PDCode& pd1, const PDCode& pd2, const TensorPowers& spaces) {
  return compare_homology(homology_integral(build_complex(pd1, spaces)),
                          homology_integral(build_complex(pd2, spaces)));
}

LeeCheck lee_dimension_check(const PDCode& pd, const TensorPowers& spaces) {
  LeeCheck out;
  out.discriminant_nonzero = !spaces.algebra().data().discriminant().is_zero();
  out.expected = std::size_t{1} << pd.components;
  std::size_t total = 0;
  for (auto v : homology_over_K(build_complex(pd, spaces))) total += v;
  out.total_k_dim = total;
  return out;
}

}  // namespace dedekind
