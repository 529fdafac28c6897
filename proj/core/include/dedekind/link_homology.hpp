#pragma once

#include "dedekind/omodule.hpp"
#include "dedekind/pd_code.hpp"

#include <string>
#include <vector>

namespace dedekind {

// Cochain complex C^min .. C^max of free abelian groups; differentials[j]
// maps degree min+j to min+j+1 (the last one has zero rows). `actions` holds
// the O-action per degree and is empty once the complex is simplified.
struct Complex {
  int min_degree = 0;
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> differentials;
  std::vector<IntMatrix> actions;

  int max_degree() const { return min_degree + static_cast<int>(ranks.size()) - 1; }
  std::size_t total_rank() const;
};

// Cube of resolutions in degrees |v| - n_minus; merges use m, splits use
// Delta, edge signs are (-1)^{#{j < c : v_j = 1}}. Throws
// DifferentialSquareNonzero if d o d != 0.
Complex build_complex(const PDCode& pd, const TensorPowers& spaces);

// Throws DifferentialSquareNonzero.
void check_d_squared(const Complex& c);

struct DegreeHomology {
  int degree = 0;
  AbelianGroup group;        // over Z
  std::size_t k_dim = 0;     // via rational ranks of the differentials
};

struct HomologyReport {
  std::vector<DegreeHomology> degrees;
  std::size_t total_k_dim = 0;
  // z_rank = 2 k_dim in every degree.
  bool k_dims_match_z_ranks = true;

  const DegreeHomology* at(int degree) const;
};

HomologyReport homology_integral(const Complex& c);
// K-dimension per degree from min_degree upward.
std::vector<std::size_t> homology_over_K(const Complex& c);

// Cancels differential entries equal to +1 or -1 until none remain.
Complex simplify(const Complex& c);

struct DegreeComparison {
  int degree = 0;
  AbelianGroup first, second;
  std::size_t first_k = 0, second_k = 0;
  bool z_equal = false;
  bool k_equal = false;
};

struct ComparisonReport {
  std::vector<DegreeComparison> degrees;
  bool z_equal = true;
  bool k_equal = true;
};

ComparisonReport compare_homology(const HomologyReport& a, const HomologyReport& b);
ComparisonReport reidemeister_compare(const PDCode& pd1, const PDCode& pd2, const TensorPowers& spaces);

struct LeeCheck {
  bool discriminant_nonzero = false;
  std::size_t expected = 0;  // 2^components
  std::size_t total_k_dim = 0;
  bool holds() const { return discriminant_nonzero && expected == total_k_dim; }
};

LeeCheck lee_dimension_check(const PDCode& pd, const TensorPowers& spaces);

}  // namespace dedekind
