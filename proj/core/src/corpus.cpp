#include "dedekind/corpus.hpp"

#include <map>

namespace dedekind {

namespace {

struct Entry {
  std::vector<std::array<long, 4>> crossings;
  std::vector<int> signs;
};

const std::map<std::string, Entry, std::less<>>& table() {
  static const std::map<std::string, Entry, std::less<>> t = {
      {"unknot0", {{}, {}}},
      {"unknot_r1plus", {{{1, 1, 2, 2}}, {1}}},
      {"unknot_r1minus", {{{1, 2, 2, 1}}, {-1}}},
      {"unknot_r2pair", {{{3, 4, 4, 1}, {2, 2, 3, 1}}, {-1, 1}}},
      {"hopf", {{{4, 1, 3, 2}, {2, 3, 1, 4}}, {-1, -1}}},
      {"trefoil", {{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}, {-1, -1, -1}}},
      {"figure8", {{{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}, {1, 1, -1, -1}}},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& diagram_names() {
  static const std::vector<std::string> names = {"unknot0", "unknot_r1plus", "unknot_r1minus", "unknot_r2pair",
                                                 "hopf",    "trefoil",       "figure8"};
  return names;
}

PDCode diagram(std::string_view name) {
  auto it = table().find(name);
  if (it == table().end()) throw Error(ErrorKind::MalformedInput, "unknown diagram '" + std::string(name) + "'");
  return make_pd(it->second.crossings, it->second.signs, it->first);
}

std::vector<std::pair<std::string, std::string>> reidemeister_pairs() {
  return {{"unknot0", "unknot_r1plus"}, {"unknot0", "unknot_r1minus"}, {"unknot0", "unknot_r2pair"},
          {"unknot_r1plus", "unknot_r1minus"}};
}

const std::vector<std::string>& algebra_names() {
  static const std::vector<std::string> names = {"eps0", "example", "sanity"};
  return names;
}

FrobeniusData standard_algebra(std::string_view name) {
  const RingContext ctx(-5);
  auto r = [&](long x, long y = 0) { return RingElement(ctx, x, y); };
  if (name == "eps0") {
    Ideal mu = ideal_from_generators(ctx, {r(2), r(1, 1)});
    return {mu, r(2), r(0), r(1), r(1), r(0)};
  }
  if (name == "example") return example_zsqrtm5(1, 1).data();
  if (name == "sanity") return {Ideal::unit(ctx), r(1), r(0), r(1), r(0), r(1)};
  throw Error(ErrorKind::MalformedInput, "unknown algebra '" + std::string(name) + "'");
}

}  // namespace dedekind
