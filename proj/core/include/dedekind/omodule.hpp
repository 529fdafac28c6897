#pragma once

#include "dedekind/algebra_maps.hpp"
#include "dedekind/frobenius_algebra.hpp"
#include "dedekind/matrix.hpp"
#include "dedekind/normal_form.hpp"

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace dedekind {

// Finitely generated torsion-free O-module as a Z-lattice Z^rank_z with the
// action of sqrt d (column convention, action^2 = d). `frame` optionally
// embeds the lattice into K^k on interleaved (re, im) coordinates; it has
// 2k rows and rank_z columns.
struct OModule {
  long d = 0;
  std::size_t rank_z = 0;
  IntMatrix action;
  std::string label;
  RatMatrix frame;

  RingContext context() const { return RingContext(d); }
  bool has_frame() const { return !frame.empty(); }
  std::size_t k_dim() const { return frame.rows() / 2; }
};

// Throws InvariantBreach unless action^2 = d.
void check_module(const OModule& m);
OModule free_module(const RingContext& ctx, std::size_t o_rank, std::string label = "O");

struct OMorphism {
  IntMatrix matrix;  // target rank_z x source rank_z
};

bool is_equivariant(const OMorphism& f, const OModule& source, const OModule& target);

struct TensorProduct {
  OModule module;
  IntMatrix projection;  // quotient coordinates from Z-tensor coordinates
  IntMatrix lift;        // Z-tensor coordinates of the quotient basis
  std::size_t right_rank = 0;

  // Quotient coordinates of m (x) n.
  std::vector<Integer> pair(const std::vector<Integer>& m, const std::vector<Integer>& n) const;
};

// M (x)_O N as the quotient of M (x)_Z N by the image of
// action_M (x) 1 - 1 (x) action_N. Throws TorsionInTensor if the quotient has
// torsion.
TensorProduct tensor_over_O(const OModule& m, const OModule& n);

struct Submodule {
  OModule module;
  IntMatrix inclusion;  // ambient rank_z x sub rank_z
};

// Saturated kernel with the inherited action.
Submodule kernel(const OMorphism& f, const OModule& source);

SmithForm snf(const IntMatrix& a);

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup abelian_group_of(const OModule& m);
// Z^n / image(a) for an n-row matrix a.
AbelianGroup cokernel_group(const IntMatrix& a);
bool iso_as_abelian_groups(const AbelianGroup& a, const AbelianGroup& b);
std::string to_string(const AbelianGroup& g);

// Z-basis {1, w, h1 X, h2 X} with (h1, h2) = two_generators(mu).
OModule module_of_algebra(const FrobeniusAlgebra& alg);

// Lattices of the tensor powers A^(x)n, built on demand and cached.
class TensorPowers {
 public:
  explicit TensorPowers(FrobeniusAlgebra alg);

  const FrobeniusAlgebra& algebra() const noexcept { return alg_; }
  const RingContext& context() const { return alg_.context(); }

  const OModule& power(std::size_t n) const;
  // Quotient coordinates of x (x) y with x in A^(x)n and y in A.
  std::vector<Integer> pair(std::size_t n, const std::vector<Integer>& x, const std::vector<Integer>& y) const;

  // Integer matrix of a K-linear map A^(x)src -> A^(x)dst. Throws an Error of
  // `kind` if the map does not preserve the lattices.
  IntMatrix lattice_map(const KMatrix& f, std::size_t src, std::size_t dst,
                        ErrorKind kind = ErrorKind::InvariantBreach) const;

  // Lattice coordinates of a K-vector in A^(x)n, if it lies in the lattice.
  std::optional<std::vector<Integer>> lattice_coordinates(const std::vector<FieldElement>& v, std::size_t n) const;
  std::vector<FieldElement> k_coordinates(const std::vector<Integer>& v, std::size_t n) const;

  // Lattice coordinates of u0 + u1 X.
  std::vector<Integer> element_coordinates(const AlgebraElement& x) const;

 private:
  struct Entry {
    OModule module;
    RatMatrix frame_inverse;
    IntMatrix projection;  // empty for n <= 1
  };
  const Entry& entry(std::size_t n) const;

  FrobeniusAlgebra alg_;
  mutable std::mutex mutex_;
  mutable std::deque<Entry> cache_;
};

struct KernelGenerator {
  RingElement u;      // element of mu
  RingElement value;  // -b_bar + u(a_bar + u)/z, a unit
  bool lattice_verified = false;  // A * (Xhat - X_u) = ker(m)
};

struct KernelReport {
  Submodule kernel;
  IntMatrix xu_basis;            // lattice coordinates of X_h1, X_h2 as columns
  std::vector<Integer> xhat;     // lattice coordinates of Xhat
  bool direct_sum_verified = false;
  bool action_identities_verified = false;
  std::optional<KernelGenerator> generator;
  long search_bound = 0;
  bool iso_to_A = false;
};

inline constexpr long kDefaultGeneratorBound = 8;

// Structure of ker(m : A (x) A -> A): X_u = uX(x)1 - 1(x)uX for u in mu and
// Xhat = z X(x)X - a_bar X(x)1 - b_bar 1(x)1. Throws DirectSumFailure if
// ker(m) differs from span{X_h1, X_h2} + O Xhat.
KernelReport kernel_m_analysis(const TensorPowers& spaces, long bound = kDefaultGeneratorBound);

}  // namespace dedekind
