#include "dedekind/pd_code.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

namespace dedekind {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Occurrence {
  std::size_t crossing;
  int pos;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

[[noreturn]] void malformed(const std::string& name, const std::string& msg) {
  throw Error(ErrorKind::MalformedPD, (name.empty() ? std::string() : name + ": ") + msg);
}

}  // namespace

PDCode make_pd(std::vector<std::array<long, 4>> crossings, std::optional<std::vector<int>> signs, std::string name) {
  PDCode pd;
  pd.name = std::move(name);
  pd.crossings = std::move(crossings);
  const std::size_t k = pd.crossings.size();
  if (signs && signs->size() != k) malformed(pd.name, "sign list length differs from crossing count");
  if (signs)
    for (int s : *signs)
      if (s != 1 && s != -1) malformed(pd.name, "signs must be +1 or -1");

  std::map<long, std::vector<Occurrence>> occ;
  for (std::size_t c = 0; c < k; ++c)
    for (int s = 0; s < 4; ++s) occ[pd.crossings[c][s]].push_back({c, s});
  for (const auto& [label, list] : occ)
    if (list.size() != 2) malformed(pd.name, "arc " + std::to_string(label) + " occurs " + std::to_string(list.size()) +
                                                 " times");

  // Orient strands starting from the outgoing under-arcs.
  std::vector<int> over_in(k, -1);
  std::map<long, Occurrence> tail_of;
  std::deque<std::pair<long, Occurrence>> queue;
  for (std::size_t c = 0; c < k; ++c) queue.push_back({pd.crossings[c][2], {c, 2}});
  while (!queue.empty()) {
    auto [arc, tail] = queue.front();
    queue.pop_front();
    if (auto it = tail_of.find(arc); it != tail_of.end()) {
      if (!(it->second == tail)) malformed(pd.name, "arc " + std::to_string(arc) + " is outgoing at both ends");
      continue;
    }
    tail_of.emplace(arc, tail);
    const auto& list = occ[arc];
    const Occurrence head = list[0] == tail ? list[1] : list[0];
    if (head.pos == 0) continue;
    if (head.pos == 2) malformed(pd.name, "arc " + std::to_string(arc) + " is outgoing at both ends");
    if (over_in[head.crossing] >= 0 && over_in[head.crossing] != head.pos)
      malformed(pd.name, "inconsistent over-strand orientation at crossing " + std::to_string(head.crossing));
    over_in[head.crossing] = head.pos;
    const int out = (head.pos + 2) % 4;
    queue.push_back({pd.crossings[head.crossing][out], {head.crossing, out}});
  }

  pd.signs.assign(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    int derived = over_in[c] == 3 ? 1 : over_in[c] == 1 ? -1 : 0;
    if (derived != 0 && signs && (*signs)[c] != derived)
      malformed(pd.name, "sign of crossing " + std::to_string(c) + " contradicts the strand orientation");
    if (derived == 0 && !signs) malformed(pd.name, "sign of crossing " + std::to_string(c) + " is not determined");
    pd.signs[c] = derived != 0 ? derived : (*signs)[c];
    (pd.signs[c] > 0 ? pd.n_plus : pd.n_minus)++;
  }

  // Components: strands continue i -> k and j <-> l through each crossing.
  std::map<long, std::size_t> index;
  for (const auto& [label, list] : occ) index.emplace(label, index.size());
  UnionFind uf(index.size());
  for (const auto& x : pd.crossings) {
    uf.unite(index[x[0]], index[x[2]]);
    uf.unite(index[x[1]], index[x[3]]);
  }
  std::size_t comps = 0;
  for (std::size_t i = 0; i < index.size(); ++i)
    if (uf.find(i) == i) ++comps;
  pd.components = k == 0 ? 1 : comps;
  return pd;
}

ResolutionCube resolve(const PDCode& pd) {
  const std::size_t k = pd.size();
  if (k > 20) throw Error(ErrorKind::MalformedPD, "too many crossings for a full cube");
  ResolutionCube cube;
  cube.crossings = k;

  std::vector<long> labels;
  for (const auto& x : pd.crossings) labels.insert(labels.end(), x.begin(), x.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto idx = [&](long a) { return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), a) - labels.begin()); };

  const std::size_t nv = std::size_t{1} << k;
  cube.vertices.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    ResolutionVertex& vert = cube.vertices[v];
    if (k == 0) {
      vert.circles.push_back({});
      continue;
    }
    UnionFind uf(labels.size());
    for (std::size_t c = 0; c < k; ++c) {
      const auto& x = pd.crossings[c];
      if ((v >> c) & 1) {
        uf.unite(idx(x[0]), idx(x[3]));
        uf.unite(idx(x[1]), idx(x[2]));
      } else {
        uf.unite(idx(x[0]), idx(x[1]));
        uf.unite(idx(x[2]), idx(x[3]));
      }
    }
    // Roots are smallest members, so scanning labels in order lists circles by smallest arc.
    std::map<std::size_t, std::size_t> circle_of_root;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      std::size_t r = uf.find(i);
      auto [it, fresh] = circle_of_root.emplace(r, vert.circles.size());
      if (fresh) vert.circles.emplace_back();
      vert.circles[it->second].push_back(labels[i]);
      vert.circle_of_arc[labels[i]] = it->second;
    }
  }

  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t c = 0; c < k; ++c) {
      if ((v >> c) & 1) continue;
      ResolutionEdge e;
      e.source = v;
      e.target = v | (std::size_t{1} << c);
      e.coordinate = c;
      e.sign = (std::popcount(v & ((std::size_t{1} << c) - 1)) % 2) ? -1 : 1;
      const ResolutionVertex& s = cube.vertices[e.source];
      const ResolutionVertex& t = cube.vertices[e.target];
      if (t.circles.size() + 1 == s.circles.size()) {
        e.merge = true;
        for (const auto& circ : s.circles) e.circle_map.push_back(t.circle_of_arc.at(circ.front()));
      } else if (t.circles.size() == s.circles.size() + 1) {
        e.merge = false;
        for (const auto& circ : t.circles) e.circle_map.push_back(s.circle_of_arc.at(circ.front()));
      } else {
        throw Error(ErrorKind::MalformedPD, "edge changes the circle count by other than one; diagram not planar");
      }
      cube.edges.push_back(std::move(e));
    }
  return cube;
}

}  // namespace dedekind
