#include "dedekind_cli/json_io.hpp"

#include <fstream>

namespace dedekind::cli {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json to_json(const Integer& v) { return v.get_str(); }
json to_json(const Rational& v) { return to_string(v); }

json to_json(const RingElement& x) { return {{"x", to_json(x.x())}, {"y", to_json(x.y())}}; }

json to_json(const FieldElement& k) {
  return {{"x", to_json(Integer(k.p().get_num()))},
          {"x_den", to_json(Integer(k.p().get_den()))},
          {"y", to_json(Integer(k.q().get_num()))},
          {"y_den", to_json(Integer(k.q().get_den()))}};
}

json to_json(const Ideal& a) {
  return {{"hnf", json::array({json::array({to_json(a.a()), "0"}), json::array({to_json(a.b()), to_json(a.c())})})}};
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const AbelianGroup& g) { return {{"z_rank", g.free_rank}, {"torsion", to_json(g.torsion)}}; }

json to_json(const FrobeniusData& data) {
  auto [g1, g2] = two_generators(data.mu);
  return {{"d", data.context().d()},
          {"mu_gens", json::array({to_json(g1), to_json(g2)})},
          {"z", to_json(data.z)},
          {"a_bar", to_json(data.a_bar)},
          {"b_bar", to_json(data.b_bar)},
          {"eps_one", to_json(data.eps_one)},
          {"eps_x_bar", to_json(data.eps_x_bar)}};
}

json to_json(const ValidationReport& rep) {
  json cells = json::array();
  for (const auto& c : rep.cells) cells.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  json out = {{"accepted", rep.accepted}};
  out["rejection"] = rep.rejection ? json(std::string(error_kind_name(*rep.rejection))) : json(nullptr);
  out["rejection_detail"] = rep.rejection_detail;
  out["cells"] = std::move(cells);
  out["notes"] = rep.notes;
  out["t_bar"] = to_json(rep.t_bar);
  out["delta"] = to_json(rep.delta);
  out["c"] = to_json(rep.c);
  out["d"] = to_json(rep.d);
  out["c_prime"] = to_json(rep.c_prime);
  out["d_prime"] = to_json(rep.d_prime);
  out["epsilon_tilde"] = {{"matrix", to_json(rep.epsilon_tilde.matrix)},
                          {"determinant", to_json(rep.epsilon_tilde.determinant)},
                          {"integral", rep.epsilon_tilde.integral},
                          {"unimodular", rep.epsilon_tilde.unimodular()}};
  return out;
}

json to_json(const TensorElement& t) {
  json k = json::array();
  for (const auto& x : t.k_coords) k.push_back(to_json(x));
  return {{"factors", t.factors}, {"lattice", to_json(t.lattice)}, {"k_coords", std::move(k)}};
}

json to_json(const KernelReport& rep) {
  json out = {{"kernel", {{"rank_z", rep.kernel.module.rank_z},
                          {"action", to_json(rep.kernel.module.action)},
                          {"inclusion", to_json(rep.kernel.inclusion)}}},
              {"xu_basis", to_json(rep.xu_basis)},
              {"xhat", to_json(rep.xhat)},
              {"direct_sum_verified", rep.direct_sum_verified},
              {"action_identities_verified", rep.action_identities_verified}};
  if (rep.generator) {
    out["generator"] = {{"u", to_json(rep.generator->u)},
                        {"value", to_json(rep.generator->value)},
                        {"lattice_verified", rep.generator->lattice_verified}};
  } else {
    out["generator"] = nullptr;
  }
  out["search_bound"] = rep.search_bound;
  out["iso_to_A"] = rep.iso_to_A;
  return out;
}

json to_json(const PDCode& pd) {
  json crossings = json::array();
  for (const auto& c : pd.crossings) crossings.push_back(c);
  return {{"crossings", std::move(crossings)}, {"signs", pd.signs}};
}

json to_json(const HomologyReport& rep) {
  json degrees = json::array();
  for (const auto& d : rep.degrees)
    degrees.push_back(
        {{"degree", d.degree}, {"z_rank", d.group.free_rank}, {"torsion", to_json(d.group.torsion)}, {"k_dim", d.k_dim}});
  return {{"degrees", std::move(degrees)},
          {"total_k_dim", rep.total_k_dim},
          {"k_dims_match_z_ranks", rep.k_dims_match_z_ranks}};
}

json to_json(const ComparisonReport& rep) {
  json degrees = json::array();
  for (const auto& d : rep.degrees) {
    json first = to_json(d.first), second = to_json(d.second);
    first["k_dim"] = d.first_k;
    second["k_dim"] = d.second_k;
    degrees.push_back({{"degree", d.degree},
                       {"first", std::move(first)},
                       {"second", std::move(second)},
                       {"z_equal", d.z_equal},
                       {"k_equal", d.k_equal}});
  }
  return {{"z_equal", rep.z_equal}, {"k_equal", rep.k_equal}, {"degrees", std::move(degrees)}};
}

json to_json(const LeeCheck& lee) {
  return {{"discriminant_nonzero", lee.discriminant_nonzero},
          {"expected", lee.expected},
          {"total_k_dim", lee.total_k_dim},
          {"holds", lee.holds()}};
}

Integer integer_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    malformed(e.what());
  }
  malformed("expected an integer, got " + j.dump());
}

RingElement ring_from_json(const RingContext& ctx, const json& j) {
  if (j.is_string()) return parse_ring_element(ctx, j.get<std::string>());
  if (j.is_number_integer()) return {ctx, Integer(j.get<long>())};
  return {ctx, integer_from_json(field(j, "x")), integer_from_json(field(j, "y"))};
}

FieldElement field_from_json(const RingContext& ctx, const json& j) {
  if (j.is_string() || j.is_number_integer()) return FieldElement(ring_from_json(ctx, j));
  auto part = [&](const char* num, const char* den) {
    const Integer n = integer_from_json(field(j, num));
    const Integer d = j.contains(den) ? integer_from_json(j.at(den)) : Integer(1);
    if (d == 0) malformed(std::string("zero denominator in \"") + den + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
  };
  return {ctx, part("x", "x_den"), part("y", "y_den")};
}

FrobeniusData data_from_json(const json& j, long fallback_d) {
  const long d = j.contains("d") ? j.at("d").get<long>() : fallback_d;
  const RingContext ctx(d);
  std::vector<RingElement> gens;
  const json& mu = field(j, "mu_gens");
  if (!mu.is_array() || mu.empty()) malformed("\"mu_gens\" must be a nonempty array");
  for (const auto& g : mu) gens.push_back(ring_from_json(ctx, g));
  return {ideal_from_generators(ctx, gens),
          ring_from_json(ctx, field(j, "z")),
          ring_from_json(ctx, field(j, "a_bar")),
          ring_from_json(ctx, field(j, "b_bar")),
          ring_from_json(ctx, field(j, "eps_one")),
          ring_from_json(ctx, field(j, "eps_x_bar"))};
}

PDCode pd_from_json(const json& j, std::string name) {
  const json& cs = field(j, "crossings");
  if (!cs.is_array()) malformed("\"crossings\" must be an array");
  std::vector<std::array<long, 4>> crossings;
  for (const auto& c : cs) {
    if (!c.is_array() || c.size() != 4) malformed("each crossing needs four arc labels");
    std::array<long, 4> labels{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (!c[i].is_number_integer()) malformed("arc labels must be integers");
      labels[i] = c[i].get<long>();
    }
    crossings.push_back(labels);
  }
  std::optional<std::vector<int>> signs;
  if (j.contains("signs")) {
    signs.emplace();
    for (const auto& s : j.at("signs")) {
      if (!s.is_number_integer()) malformed("signs must be +1 or -1");
      signs->push_back(s.get<int>());
    }
  }
  return make_pd(std::move(crossings), std::move(signs), std::move(name));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    malformed(path + ": " + e.what());
  }
}

}  // namespace dedekind::cli
