#pragma once

#include "dedekind/frobenius_algebra.hpp"
#include "dedekind/pd_code.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dedekind {

// Built-in diagrams: unknot0, unknot_r1plus, unknot_r1minus, unknot_r2pair,
// hopf, trefoil, figure8.
const std::vector<std::string>& diagram_names();
// Throws MalformedInput for unknown names.
PDCode diagram(std::string_view name);

// Pairs of corpus diagrams presenting the same link.
std::vector<std::pair<std::string, std::string>> reidemeister_pairs();

// eps0: mu = (2, 1+w) over Z[sqrt -5], z = 2, a_bar = 0, b_bar = 1, eps(1) = 1, eps(X) = 0.
// example: example_zsqrtm5(1, 1).
// sanity: mu = O, z = 1, X^2 = 1, eps(1) = 0, eps(X) = 1.
const std::vector<std::string>& algebra_names();
FrobeniusData standard_algebra(std::string_view name);

}  // namespace dedekind
