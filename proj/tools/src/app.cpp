#include "dedekind_cli/app.hpp"

#include "dedekind/coalgebra.hpp"
#include "dedekind/corpus.hpp"
#include "dedekind/link_homology.hpp"
#include "dedekind_cli/json_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace dedekind::cli {

namespace fs = std::filesystem;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PreconditionViolation:
    case ErrorKind::IntegralityViolation:
    case ErrorKind::DegenerateTrace:
    case ErrorKind::NotAnIsomorphism:
    case ErrorKind::InconsistentRoutes:
    case ErrorKind::NotOrderTwo:
    case ErrorKind::NotAUnit:
      return kExitRejected;
    case ErrorKind::InvalidRing:
    case ErrorKind::ContextMismatch:
    case ErrorKind::ZeroIdeal:
    case ErrorKind::MalformedPD:
    case ErrorKind::MalformedInput:
      return kExitMalformed;
    case ErrorKind::SearchExhausted:
      return kExitSearchExhausted;
    default:
      return kExitFailure;
  }
}

namespace {

struct RunConfig {
  long d = -5;
  std::string format = "json";
  std::string out_path;
  std::string corpus;
  long bound = -1;  // command-specific; negative selects the library default
  long partition_bound = kDefaultPartitionBound;
};

// Result of one command: a JSON report, its text rendering and an exit code.
struct Outcome {
  json report;
  std::string text;
  int code = kExitOk;
};

// Thrown to carry a rejection report out of a command.
struct Rejected {
  Outcome outcome;
};

RingContext ring(const RunConfig& cfg) { return RingContext(cfg.d); }

RingElement element(const RunConfig& cfg, const std::string& text) { return parse_ring_element(ring(cfg), text); }

std::string strip_json(std::string name) {
  if (name.size() > 5 && name.ends_with(".json")) name.resize(name.size() - 5);
  return name;
}

// File path, then <corpus>/<sub>/<name>.json, then the built-in table.
std::optional<json> locate(const RunConfig& cfg, const std::string& spec, const char* sub) {
  if (fs::is_regular_file(spec)) return read_json_file(spec);
  if (!cfg.corpus.empty()) {
    const fs::path p = fs::path(cfg.corpus) / sub / (strip_json(fs::path(spec).filename().string()) + ".json");
    if (fs::is_regular_file(p)) return read_json_file(p.string());
  }
  return std::nullopt;
}

FrobeniusData load_algebra(const RunConfig& cfg, const std::string& spec) {
  if (auto j = locate(cfg, spec, "algebras")) return data_from_json(*j, cfg.d);
  return standard_algebra(strip_json(fs::path(spec).filename().string()));
}

PDCode load_pd(const RunConfig& cfg, const std::string& spec) {
  const std::string name = strip_json(fs::path(spec).filename().string());
  if (auto j = locate(cfg, spec, "diagrams")) return pd_from_json(*j, name);
  return diagram(name);
}

Ideal default_mu(const RunConfig& cfg, const std::vector<std::string>& gens) {
  std::vector<RingElement> g;
  if (gens.empty()) {
    if (cfg.d != -5) throw Error(ErrorKind::MalformedInput, "--gens is required unless d = -5");
    g = {element(cfg, "2"), element(cfg, "1+w")};
  } else {
    for (const auto& s : gens) g.push_back(element(cfg, s));
  }
  return ideal_from_generators(ring(cfg), g);
}

RingElement default_z(const RunConfig& cfg, const std::string& z) {
  if (z.empty()) {
    if (cfg.d != -5) throw Error(ErrorKind::MalformedInput, "--z is required unless d = -5");
    return element(cfg, "2");
  }
  return element(cfg, z);
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// ---- ideal ----

Outcome cmd_classinfo(const RunConfig& cfg, const std::vector<std::string>& gens) {
  if (gens.empty()) throw Error(ErrorKind::MalformedInput, "--gens is required");
  const Ideal mu = default_mu(cfg, gens);
  Outcome o;
  std::ostringstream t;
  o.report = {{"d", cfg.d}, {"ideal", to_json(mu)}, {"norm", to_json(ideal_norm(mu))}};
  t << "ideal " << to_string(mu) << " in Z[sqrt " << cfg.d << "]\n";
  t << "norm: " << ideal_norm(mu) << "\n";
  const std::optional<RingElement> gen = is_principal(mu);
  o.report["principal"] = gen.has_value();
  o.report["generator"] = gen ? to_json(*gen) : json(nullptr);
  t << "principal: " << yes(gen.has_value());
  if (gen) t << " (generator " << to_string(*gen) << ")";
  t << "\n";
  const Ideal sq = ideal_product(mu, mu);
  o.report["square"] = to_json(sq);
  t << "square: " << to_string(sq) << "\n";
  try {
    const ClassOrderTwoCertificate cert = certify_order_two(mu);
    o.report["order_two"] = {{"certified", true},
                             {"z", to_json(cert.z)},
                             {"enumeration_bound", to_json(cert.enumeration_bound)}};
    t << "class of order two: yes, mu^2 = (" << to_string(cert.z) << ")\n";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotOrderTwo) throw;
    o.report["order_two"] = {{"certified", false}, {"reason", e.what()}};
    t << "class of order two: no (" << e.what() << ")\n";
  }
  o.text = t.str();
  return o;
}

// ---- algebra ----

std::string validation_text(const ValidationReport& rep) {
  std::ostringstream t;
  t << (rep.accepted ? "accepted" : "rejected");
  if (rep.rejection) t << ": " << error_kind_name(*rep.rejection) << " (" << rep.rejection_detail << ")";
  t << "\n";
  for (const auto& c : rep.cells) {
    t << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) t << "  " << c.detail;
    t << "\n";
  }
  t << "t_bar = " << to_string(rep.t_bar) << ", delta = " << to_string(rep.delta) << "\n";
  t << "c = " << to_string(rep.c) << ", d = " << to_string(rep.d) << ", c' = " << to_string(rep.c_prime)
    << ", d' = " << to_string(rep.d_prime) << "\n";
  t << "det eps~ = " << to_string(rep.epsilon_tilde.determinant) << "\n";
  for (const auto& n : rep.notes) t << "note: " << n << "\n";
  return t.str();
}

Outcome algebra_outcome(const FrobeniusAlgebra& alg) {
  Outcome o;
  const TensorElement delta_one = comultiply_one(TensorPowers(alg));
  o.report = {{"data", to_json(alg.data())},
              {"report", to_json(alg.report())},
              {"comultiply_one", to_json(delta_one)}};
  o.text = "a_bar = " + to_string(alg.data().a_bar) + ", b_bar = " + to_string(alg.data().b_bar) +
           ", z = " + to_string(alg.data().z) + ", eps(1) = " + to_string(alg.data().eps_one) +
           ", eps_x_bar = " + to_string(alg.data().eps_x_bar) + "\n" + validation_text(alg.report()) +
           "Delta(1) = " + to_string(delta_one) + "\n";
  return o;
}

// Builds an algebra, turning a rejection into a report with exit code 2.
Outcome built(const std::function<FrobeniusAlgebra()>& make) {
  try {
    return algebra_outcome(make());
  } catch (const ValidationError& e) {
    Outcome o;
    o.report = {{"report", to_json(e.report())}};
    o.text = validation_text(e.report());
    o.code = exit_code(e.kind());
    throw Rejected{std::move(o)};
  }
}

Outcome cmd_validate(const RunConfig& cfg, const std::string& alg) {
  const FrobeniusData data = load_algebra(cfg, alg);
  const ValidationReport rep = validate(data);
  if (!rep.accepted) {
    Outcome o;
    o.report = {{"data", to_json(data)}, {"report", to_json(rep)}};
    o.text = validation_text(rep);
    o.code = exit_code(rep.rejection.value_or(ErrorKind::NotAnIsomorphism));
    throw Rejected{std::move(o)};
  }
  return built([&] { return build_algebra(data, cfg.partition_bound); });
}

Outcome cmd_search(const RunConfig& cfg, const std::vector<std::string>& gens, const std::string& z, long limit) {
  GeneralSearchConfig sc;
  if (cfg.bound >= 0) sc.coefficient_bound = cfg.bound;
  if (limit > 0) sc.limit = static_cast<std::size_t>(limit);
  const std::vector<FrobeniusData> hits = search_general_family(default_mu(cfg, gens), default_z(cfg, z), sc);
  if (hits.empty())
    throw Error(ErrorKind::SearchExhausted,
                "no parameter set with delta = -1/(s z) in the box of radius " + std::to_string(sc.coefficient_bound));
  Outcome o;
  json arr = json::array();
  std::ostringstream t;
  t << hits.size() << " parameter sets\n";
  for (const auto& h : hits) {
    arr.push_back({{"data", to_json(h)}, {"delta", to_json(h.delta())}});
    t << "  a_bar = " << to_string(h.a_bar) << ", b_bar = " << to_string(h.b_bar) << ", eps(1) = " << to_string(h.eps_one)
      << ", eps_x_bar = " << to_string(h.eps_x_bar) << ", delta = " << to_string(h.delta()) << "\n";
  }
  o.report = {{"coefficient_bound", sc.coefficient_bound}, {"hits", std::move(arr)}};
  o.text = t.str();
  return o;
}

// ---- kernel ----

Outcome cmd_kernel(const RunConfig& cfg, const std::string& alg) {
  const FrobeniusAlgebra a = build_algebra(load_algebra(cfg, alg), cfg.partition_bound);
  const KernelReport rep = kernel_m_analysis(TensorPowers(a), cfg.bound >= 0 ? cfg.bound : kDefaultGeneratorBound);
  Outcome o;
  o.report = to_json(rep);
  std::ostringstream t;
  t << "ker(m): Z-rank " << rep.kernel.module.rank_z << "\n";
  t << "ker(m) = X_mu + O Xhat: " << yes(rep.direct_sum_verified) << "\n";
  t << "action identities: " << yes(rep.action_identities_verified) << "\n";
  if (rep.generator) {
    t << "generator Xhat - X_u at u = " << to_string(rep.generator->u) << ", value " << to_string(rep.generator->value)
      << "\n";
  } else {
    t << "no u in mu within bound " << rep.search_bound << " gives a unit value\n";
  }
  t << "ker(m) = A certified: " << yes(rep.iso_to_A) << "\n";
  o.text = t.str();
  return o;
}

// ---- link ----

std::string homology_text(const HomologyReport& h) {
  std::ostringstream t;
  for (const auto& d : h.degrees) t << "  H^" << d.degree << " = " << to_string(d.group) << ", K-dim " << d.k_dim << "\n";
  t << "total K-dim: " << h.total_k_dim << "\n";
  return t.str();
}

Outcome cmd_homology(const RunConfig& cfg, const std::string& pd_spec, const std::string& alg) {
  const PDCode pd = load_pd(cfg, pd_spec);
  const TensorPowers spaces(build_algebra(load_algebra(cfg, alg), cfg.partition_bound));
  const Complex c = build_complex(pd, spaces);
  const Complex s = simplify(c);
  const HomologyReport h = homology_integral(s);
  Outcome o;
  o.report = {{"diagram", pd.name},
              {"crossings", pd.size()},
              {"n_plus", pd.n_plus},
              {"n_minus", pd.n_minus},
              {"components", pd.components},
              {"min_degree", c.min_degree},
              {"chain_ranks", c.ranks},
              {"simplified_ranks", s.ranks}};
  o.report.update(to_json(h));
  std::ostringstream t;
  t << pd.name << ": " << pd.size() << " crossings (" << pd.n_plus << "+, " << pd.n_minus << "-), " << pd.components
    << " component(s)\n"
    << homology_text(h);
  o.text = t.str();
  return o;
}

Outcome cmd_compare(const RunConfig& cfg, const std::string& pd1, const std::string& pd2, const std::string& alg) {
  const TensorPowers spaces(build_algebra(load_algebra(cfg, alg), cfg.partition_bound));
  const ComparisonReport rep = reidemeister_compare(load_pd(cfg, pd1), load_pd(cfg, pd2), spaces);
  Outcome o;
  o.report = to_json(rep);
  std::ostringstream t;
  for (const auto& d : rep.degrees)
    t << "  H^" << d.degree << ": " << to_string(d.first) << " vs " << to_string(d.second)
      << (d.z_equal ? "" : "  (differ over Z)") << (d.k_equal ? "" : "  (differ over K)") << "\n";
  t << (rep.z_equal ? "agree over Z" : "differ over Z") << "; " << (rep.k_equal ? "agree over K" : "differ over K")
    << "\n";
  o.text = t.str();
  return o;
}

Outcome cmd_lee(const RunConfig& cfg, const std::string& pd_spec, const std::string& alg) {
  const PDCode pd = load_pd(cfg, pd_spec);
  const LeeCheck lee = lee_dimension_check(pd, TensorPowers(build_algebra(load_algebra(cfg, alg), cfg.partition_bound)));
  Outcome o;
  o.report = to_json(lee);
  o.text = "discriminant nonzero: " + yes(lee.discriminant_nonzero) + "\ntotal K-dim " +
           std::to_string(lee.total_k_dim) + ", expected 2^components = " + std::to_string(lee.expected) + "\n" +
           (lee.holds() ? "holds\n" : "does not hold\n");
  return o;
}

// ---- tqft ----

Outcome cmd_tqft(const RunConfig& cfg, const std::string& alg, unsigned genus) {
  const FrobeniusAlgebra a = build_algebra(load_algebra(cfg, alg), cfg.partition_bound);
  const RingElement v = closed_surface_invariant(a, genus);
  Outcome o;
  o.report = {{"genus", genus}, {"value", to_json(v)}};
  o.text = "genus " + std::to_string(genus) + ": " + to_string(v) + "\n";
  return o;
}

void emit(const RunConfig& cfg, const Outcome& o, std::ostream& out) {
  const std::string body = cfg.format == "text" ? o.text : o.report.dump(2) + "\n";
  if (cfg.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw Error(ErrorKind::MalformedInput, "cannot write " + cfg.out_path);
  f << body;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius extensions over quadratic rings and link homology"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  RunConfig cfg;
  app.add_option("-d", cfg.d, "Squarefree d for O = Z[sqrt d]")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--out", cfg.out_path, "Write the report to a file");
  app.add_option("--corpus", cfg.corpus, "Corpus directory with diagrams/ and algebras/");
  app.add_option("--bound", cfg.bound, "Search bound for the command")->check(CLI::NonNegativeNumber);
  app.add_option("--partition-bound", cfg.partition_bound, "Search bound for the partition of z")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::function<Outcome()> action;
  std::vector<std::string> gens;
  std::string alg = "eps0", pd, pd1, pd2, z, abar, bbar = "1", eps1 = "1", dunder = "1", scale, shift, trace_scale;
  int s = 1, eps1_int = 1;
  long limit = 0;
  unsigned genus = 0;

  auto* ideal = app.add_subcommand("ideal", "Ideal class data")->require_subcommand(1);
  auto* classinfo = ideal->add_subcommand("classinfo", "HNF, norm, principality and order-two certificate");
  classinfo->add_option("--gens", gens, "Generators, comma separated (e.g. 2,1+w)")->delimiter(',')->required();
  classinfo->callback([&] { action = [&] { return cmd_classinfo(cfg, gens); }; });

  auto* algebra = app.add_subcommand("algebra", "Frobenius extensions")->require_subcommand(1);
  auto* validate_cmd = algebra->add_subcommand("validate", "Validate a parameter set");
  validate_cmd->add_option("--alg", alg, "Parameter JSON file or corpus name")->required();
  validate_cmd->callback([&] { action = [&] { return cmd_validate(cfg, alg); }; });

  auto* eps0 = algebra->add_subcommand("family-eps0", "Trace-free family eps(X) = 0");
  eps0->add_option("--gens", gens, "Generators of mu")->delimiter(',');
  eps0->add_option("--z", z, "Generator of mu^2");
  eps0->add_option("--abar", abar, "a_bar, in mu")->required();
  eps0->add_option("--bbar", bbar, "b_bar, a unit")->capture_default_str();
  eps0->add_option("--eps1", eps1, "eps(1), a unit")->capture_default_str();
  eps0->callback([&] {
    action = [&] {
      return built([&] {
        return family_eps_x_zero(default_mu(cfg, gens), default_z(cfg, z), element(cfg, abar), element(cfg, bbar),
                                 element(cfg, eps1));
      });
    };
  });

  auto* eps1_cmd = algebra->add_subcommand("family-eps1", "Unit-trace family eps(X) = 1");
  eps1_cmd->add_option("--gens", gens, "Generators of mu")->delimiter(',');
  eps1_cmd->add_option("--z", z, "Generator of mu^2");
  eps1_cmd->add_option("--abar", abar, "a_bar, in mu")->required();
  eps1_cmd->add_option("--eps1", eps1, "eps(1), a unit")->capture_default_str();
  eps1_cmd->add_option("--dunder", dunder, "Unit d with (z - t_bar eps(1)) d = 1")->capture_default_str();
  eps1_cmd->callback([&] {
    action = [&] {
      return built([&] {
        return family_eps_x_one(default_mu(cfg, gens), default_z(cfg, z), element(cfg, abar), element(cfg, eps1),
                                element(cfg, dunder));
      });
    };
  });

  auto* example = algebra->add_subcommand("example-zsqrtm5", "The four algebras over Z[sqrt -5]");
  example->add_option("--s", s, "Unit s")->check(CLI::IsMember({-1, 1}))->capture_default_str();
  example->add_option("--eps1", eps1_int, "eps(1)")->check(CLI::IsMember({-1, 1}))->capture_default_str();
  example->callback([&] { action = [&] { return built([&] { return example_zsqrtm5(s, eps1_int); }); }; });

  auto* twist_cmd = algebra->add_subcommand("twist", "Apply a change of variables");
  twist_cmd->add_option("--alg", alg, "Parameter JSON file or corpus name")->required();
  auto* g_twist = twist_cmd->add_option_group("twist", "Exactly one twist");
  g_twist->add_option("--scale", scale, "X -> lambda0 X, lambda0 a unit");
  g_twist->add_option("--shift", shift, "X -> X + lambda1_bar / z, lambda1_bar in mu");
  g_twist->add_option("--trace", trace_scale, "eps -> lambda eps, lambda a unit");
  g_twist->require_option(1);
  twist_cmd->callback([&] {
    action = [&] {
      return built([&] {
        const FrobeniusAlgebra a = build_algebra(load_algebra(cfg, alg), cfg.partition_bound);
        const RingContext ctx = a.context();
        TwistSpec spec;
        if (!scale.empty()) spec = TwistScale{parse_ring_element(ctx, scale)};
        if (!shift.empty()) spec = TwistShift{parse_ring_element(ctx, shift)};
        if (!trace_scale.empty()) spec = TwistTrace{parse_ring_element(ctx, trace_scale)};
        return twist(a, spec);
      });
    };
  });

  auto* search = algebra->add_subcommand("search", "Search parameter sets with delta = -1/(s z)");
  search->add_option("--gens", gens, "Generators of mu")->delimiter(',');
  search->add_option("--z", z, "Generator of mu^2");
  search->add_option("--limit", limit, "Stop after this many hits")->check(CLI::PositiveNumber);
  search->callback([&] { action = [&] { return cmd_search(cfg, gens, z, limit); }; });

  auto* kernel_cmd = app.add_subcommand("kernel", "Structure of ker(m : A (x) A -> A)");
  kernel_cmd->add_option("--alg", alg, "Parameter JSON file or corpus name")->capture_default_str();
  kernel_cmd->callback([&] { action = [&] { return cmd_kernel(cfg, alg); }; });

  auto* link = app.add_subcommand("link", "Link homology")->require_subcommand(1);
  auto* homology = link->add_subcommand("homology", "Integral and K homology of a diagram");
  homology->add_option("--pd", pd, "PD JSON file or corpus name")->required();
  homology->add_option("--alg", alg, "Parameter JSON file or corpus name")->capture_default_str();
  homology->callback([&] { action = [&] { return cmd_homology(cfg, pd, alg); }; });
  auto* compare = link->add_subcommand("compare", "Compare the homology of two diagrams");
  compare->add_option("--pd1", pd1, "First diagram")->required();
  compare->add_option("--pd2", pd2, "Second diagram")->required();
  compare->add_option("--alg", alg, "Parameter JSON file or corpus name")->capture_default_str();
  compare->callback([&] { action = [&] { return cmd_compare(cfg, pd1, pd2, alg); }; });
  auto* lee = link->add_subcommand("lee-check", "Total K-dimension against 2^components");
  lee->add_option("--pd", pd, "PD JSON file or corpus name")->required();
  lee->add_option("--alg", alg, "Parameter JSON file or corpus name")->capture_default_str();
  lee->callback([&] { action = [&] { return cmd_lee(cfg, pd, alg); }; });

  auto* tqft = app.add_subcommand("tqft", "Closed surface invariant eps(h^g(1))");
  tqft->add_option("--alg", alg, "Parameter JSON file or corpus name")->capture_default_str();
  tqft->add_option("--genus", genus, "Genus")->required();
  tqft->callback([&] { action = [&] { return cmd_tqft(cfg, alg, genus); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }

  try {
    const Outcome o = action();
    emit(cfg, o, out);
    return o.code;
  } catch (const Rejected& r) {
    emit(cfg, r.outcome, out);
    return r.outcome.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace dedekind::cli
