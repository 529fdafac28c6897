#include "doctest.h"

#include "dedekind/corpus.hpp"
#include "dedekind_cli/app.hpp"
#include "dedekind_cli/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dedekind;
using namespace dedekind::cli;

namespace {

const std::string kCorpus = DEDEKIND_CORPUS_DIR;

struct Run {
  int code;
  std::string out, err;
  json parsed() const { return json::parse(out); }
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool same_data(const FrobeniusData& a, const FrobeniusData& b) {
  return a.mu == b.mu && a.z == b.z && a.a_bar == b.a_bar && a.b_bar == b.b_bar && a.eps_one == b.eps_one &&
         a.eps_x_bar == b.eps_x_bar;
}

}  // namespace

TEST_CASE("ring and field elements round-trip through JSON") {
  const RingContext ctx(-5);
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y) {
      const RingElement e(ctx, x, y);
      CHECK(ring_from_json(ctx, to_json(e)) == e);
      CHECK(ring_from_json(ctx, to_string(e)) == e);
      const FieldElement k = FieldElement(e) / FieldElement(RingElement(ctx, 2, 1));
      CHECK(field_from_json(ctx, to_json(k)) == k);
    }
  CHECK(to_json(RingElement(ctx, 2, -1)) == json{{"x", "2"}, {"y", "-1"}});
  CHECK_THROWS_AS(ring_from_json(ctx, json{{"x", "1"}}), Error);
  CHECK_THROWS_AS(ring_from_json(ctx, "1+"), Error);
}

TEST_CASE("ideal JSON is the Hermite basis") {
  const RingContext ctx(-5);
  const Ideal mu = ideal_from_generators(ctx, {RingElement(ctx, 2), RingElement(ctx, 1, 1)});
  CHECK(to_json(mu) == json::parse(R"({"hnf": [["2", "0"], ["1", "1"]]})"));
}

TEST_CASE("parameter files round-trip") {
  for (const auto& name : algebra_names()) {
    const FrobeniusData data = standard_algebra(name);
    CHECK(same_data(data_from_json(to_json(data)), data));
  }
  const FrobeniusData ex = example_zsqrtm5(-1, -1).data();
  CHECK(same_data(data_from_json(json::parse(to_json(ex).dump())), ex));
  json missing = to_json(ex);
  missing.erase("z");
  CHECK_THROWS_AS(data_from_json(missing), Error);
}

TEST_CASE("corpus files mirror the built-in tables") {
  for (const auto& name : diagram_names()) {
    CAPTURE(name);
    const PDCode file = pd_from_json(read_json_file(kCorpus + "/diagrams/" + name + ".json"), name);
    const PDCode builtin = diagram(name);
    CHECK(file.crossings == builtin.crossings);
    CHECK(file.signs == builtin.signs);
    CHECK(pd_from_json(to_json(builtin)).crossings == builtin.crossings);
  }
  for (const auto& name : algebra_names()) {
    CAPTURE(name);
    CHECK(same_data(data_from_json(read_json_file(kCorpus + "/algebras/" + name + ".json")), standard_algebra(name)));
  }
}

TEST_CASE("exit codes") {
  CHECK(exit_code(ErrorKind::NotAnIsomorphism) == kExitRejected);
  CHECK(exit_code(ErrorKind::IntegralityViolation) == kExitRejected);
  CHECK(exit_code(ErrorKind::MalformedPD) == kExitMalformed);
  CHECK(exit_code(ErrorKind::MalformedInput) == kExitMalformed);
  CHECK(exit_code(ErrorKind::SearchExhausted) == kExitSearchExhausted);
  CHECK(exit_code(ErrorKind::InvariantBreach) == kExitFailure);
  CHECK(invoke({"link", "homology"}).code == kExitMalformed);
  CHECK(invoke({"algebra", "search", "--bound", "0"}).code == kExitSearchExhausted);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("homology report schema") {
  const Run r = invoke({"link", "homology", "--pd", "trefoil", "--alg", "eps0"});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["total_k_dim"] == 2);
  CHECK(j["chain_ranks"] == json{16, 24, 12, 8});
  bool torsion_seen = false;
  for (const auto& d : j["degrees"]) {
    CHECK(d.contains("z_rank"));
    CHECK(d.contains("k_dim"));
    if (d["degree"] == -2) {
      CHECK(d["torsion"] == json{"2", "2", "2", "2"});
      torsion_seen = true;
    }
  }
  CHECK(torsion_seen);
}

TEST_CASE("validation report lists every cell") {
  const Run ok = invoke({"algebra", "example-zsqrtm5", "--s", "-1", "--eps1", "1"});
  REQUIRE(ok.code == 0);
  const json j = ok.parsed();
  CHECK(j["report"]["accepted"] == true);
  CHECK(j["data"]["b_bar"] == json{{"x", "-4"}, {"y", "1"}});
  CHECK(j["report"]["epsilon_tilde"]["unimodular"] == true);
  for (const auto& c : j["report"]["cells"]) CHECK(c["pass"] == true);
  CHECK(j["comultiply_one"]["factors"] == 2);

  const Run bad = invoke({"algebra", "validate", "--alg", std::string(DEDEKIND_CLI_DATA) + "/eps_one_zero.json"});
  CHECK(bad.code == kExitRejected);
  const json b = bad.parsed();
  CHECK(b["report"]["accepted"] == false);
  bool flagged = false;
  for (const auto& c : b["report"]["cells"])
    if (c["name"] == "eps_one_nonzero") flagged = c["pass"] == false;
  CHECK(flagged);
}

TEST_CASE("tqft values agree with the library") {
  for (unsigned g = 0; g < 4; ++g) {
    const Run r = invoke({"tqft", "--alg", "example", "--genus", std::to_string(g)});
    REQUIRE(r.code == 0);
    const RingElement expected = closed_surface_invariant(build_algebra(standard_algebra("example")), g);
    CHECK(ring_from_json(RingContext(-5), r.parsed()["value"]) == expected);
  }
}

TEST_CASE("output is deterministic and --out writes the report") {
  const std::vector<std::string> args = {"algebra", "search", "--limit", "3"};
  CHECK(invoke(args).out == invoke(args).out);
  const std::string path = (std::filesystem::temp_directory_path() / "dedekind_cli_out.json").string();
  std::vector<std::string> with_out = {"--out", path, "kernel", "--alg", "sanity"};
  const Run r = invoke(with_out);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_json_file(path)["iso_to_A"] == true);
  std::remove(path.c_str());
}
