#pragma once

#include "dedekind/coalgebra.hpp"
#include "dedekind/frobenius_algebra.hpp"
#include "dedekind/link_homology.hpp"
#include "dedekind/omodule.hpp"

#include <nlohmann/json.hpp>

namespace dedekind::cli {

using json = nlohmann::ordered_json;

// Integers travel as decimal strings.
json to_json(const Integer& v);
json to_json(const Rational& v);
json to_json(const RingElement& x);            // {"x", "y"}
json to_json(const FieldElement& k);           // {"x", "x_den", "y", "y_den"}
json to_json(const Ideal& a);                  // {"hnf": [[a, 0], [b, c]]}
json to_json(const IntMatrix& m);
json to_json(const RatMatrix& m);
json to_json(const std::vector<Integer>& v);
json to_json(const AbelianGroup& g);           // {"z_rank", "torsion"}
json to_json(const FrobeniusData& data);       // parameter file schema
json to_json(const ValidationReport& rep);
json to_json(const TensorElement& t);
json to_json(const KernelReport& rep);
json to_json(const PDCode& pd);                // {"crossings", "signs"}
json to_json(const HomologyReport& rep);
json to_json(const ComparisonReport& rep);
json to_json(const LeeCheck& lee);

Integer integer_from_json(const json& j);
// Accepts {"x", "y"} objects, "a+bw" strings and plain integers.
RingElement ring_from_json(const RingContext& ctx, const json& j);
FieldElement field_from_json(const RingContext& ctx, const json& j);
// Uses the file's "d" when present, `fallback_d` otherwise.
FrobeniusData data_from_json(const json& j, long fallback_d = -5);
PDCode pd_from_json(const json& j, std::string name = {});

// Throws MalformedInput on unreadable or unparsable files.
json read_json_file(const std::string& path);

}  // namespace dedekind::cli
