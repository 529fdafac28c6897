#pragma once

#include "dedekind/matrix.hpp"

#include <optional>
#include <vector>

namespace dedekind {

// Row-style Hermite normal form: the nonzero rows of `basis` span the row
// lattice of the input, are upper triangular with positive pivots, and every
// entry above a pivot is reduced into [0, pivot).
struct HermiteForm {
  IntMatrix basis;                   // rank x cols
  std::vector<std::size_t> pivots;   // pivot column of each basis row
  IntMatrix transform;               // rows x rows unimodular, transform * input = [basis; 0]
  std::size_t rank = 0;
};

HermiteForm hermite_rows(const IntMatrix& rows, bool with_transform = false);

// Smith normal form U * A * V = D with D diagonal, d_1 | d_2 | ... and the
// nonzero invariants listed first.
struct SmithForm {
  std::vector<Integer> invariants;   // nonzero diagonal entries, positive, divisibility chain
  IntMatrix u, u_inv;                // rows x rows
  IntMatrix v, v_inv;                // cols x cols
  std::size_t rank() const { return invariants.size(); }
};

SmithForm smith(const IntMatrix& a, bool with_transforms = false);

// Basis (as columns) of the saturated kernel {x : a x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

// Hermite-normalized column basis of the lattice spanned by the columns.
IntMatrix column_lattice(const IntMatrix& columns);

// Rank over Q by fraction-free elimination. Independent of the Smith code.
std::size_t rational_rank(const IntMatrix& a);

Rational determinant(const RatMatrix& a);
std::optional<RatMatrix> inverse(const RatMatrix& a);

// Unique solution of a x = b for a full-column-rank system, if consistent.
std::optional<std::vector<Rational>> solve_exact(const RatMatrix& a, const std::vector<Rational>& b);

}  // namespace dedekind
